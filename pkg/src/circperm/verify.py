"""Cross-check suites: every formula and bijection against the brute-force oracle."""
from dataclasses import dataclass
from itertools import product

from . import bijections as bj
from . import formulas
from .enumerator import (
    circular_perm_array,
    avoidance_mask,
    count_avoiders,
    count_avoiders_by_position,
    list_avoiders,
    list_linear_avoiders,
)
from .model import CircularPermutation, pattern_classes, reversal

FAMILY_NAMES = ("1234", "1324", "1342")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: list

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.checks} checks)"
        if self.failures:
            text += ": " + "; ".join(self.failures[:3])
        return text


class _Suite:
    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.failures = []

    def expect(self, ok, what):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def result(self):
        return SuiteResult(self.name, not self.failures, self.checks, self.failures)


def formula_vs_oracle(n_max, workers=None):
    s = _Suite("formula-vs-oracle")
    for name in FAMILY_NAMES + ("123", "132"):
        for n in range(1, n_max + 1):
            want = count_avoiders(n, [name], workers=workers).count
            got = formulas.closed_form(name, n)
            s.expect(got == want, f"{name} n={n}: formula {got} != brute {want}")
    return s.result()


def recurrence_vs_closed(n_max=64):
    s = _Suite("recurrence-vs-closed")
    for name in FAMILY_NAMES:
        for n in range(1, n_max + 1):
            a, b = formulas.closed_form(name, n), formulas.recurrence(name, n)
            s.expect(a == b, f"{name} n={n}: closed {a} != recurrence {b}")
    return s.result()


def stratified_vs_oracle(n_max):
    s = _Suite("stratified-vs-oracle")
    for name in FAMILY_NAMES:
        for n in range(4, n_max + 1):
            strata = count_avoiders_by_position(n, [name])
            for k, want in strata.items():
                got = formulas.stratified(name, n, k)
                s.expect(got == want, f"{name} n={n} k={k}: {got} != {want}")
            total = sum(formulas.stratified(name, n, k) for k in range(1, n))
            s.expect(total == formulas.closed_form(name, n), f"{name} n={n}: strata sum {total}")
    return s.result()


def prop1_bijection(n_max):
    s = _Suite("prop1-bijection")
    for n in range(1, n_max + 1):
        bits = list(product((0, 1), repeat=n - 1))
        image = [bj.prop1_bits_to_perm(b) for b in bits]
        s.expect(len(set(image)) == len(image), f"n={n}: not injective")
        s.expect(sorted(image) == list_linear_avoiders(n, ["213", "231"]), f"n={n}: image differs")
        s.expect(all(bj.prop1_perm_to_bits(w) == b for w, b in zip(image, bits)), f"n={n}: round trip")
    return s.result()


def thm2_bijection(n_max):
    s = _Suite("thm2-bijection")
    for n in range(2, n_max + 1):
        words = bj.a_words(n - 1)
        image = [bj.thm2_word_to_perm(u) for u in words]
        s.expect(sorted(image) == list_avoiders(n, ["1342"]), f"n={n}: image differs")
        s.expect(all(bj.thm2_perm_to_word(c) == u for c, u in zip(image, words)), f"n={n}: round trip")
    return s.result()


def thm1_bijection(n_max):
    s = _Suite("thm1-decomposition")
    for n in range(2, n_max + 1):
        words = bj.g_words(n)
        image = [bj.fib_word_to_1324(w, n) for w in words]
        s.expect(sorted(image) == list_avoiders(n, ["1324"]), f"n={n}: image differs")
        s.expect(all(bj.avoider_1324_to_fib_word(c) == w for c, w in zip(image, words)),
                 f"n={n}: round trip")
        if n >= 3:
            by_k = {}
            for c in image:
                d = bj.thm1_decompose(c)
                by_k[d.k] = by_k.get(d.k, 0) + 1
            for k in range(1, n):
                s.expect(by_k.get(k, 0) == formulas.stratified_1324(n, k), f"n={n} k={k}: leaves")
    return s.result()


def structure_vs_oracle(n_max):
    s = _Suite("structure-vs-oracle")
    checks = (("1342", bj.validate_structure_1342), ("1234", bj.validate_structure_1234))
    for n in range(4, n_max + 1):
        rows = circular_perm_array(n)
        k_ok = rows[:, : n - 1].argmax(axis=1) >= 1  # n-1 is the max of the first n-1 slots
        for name, validate in checks:
            avoid = avoidance_mask(rows, [name])
            bad = 0
            for r, a, use in zip(rows.tolist(), avoid.tolist(), k_ok.tolist()):
                if use and (validate(CircularPermutation(r)) is not None) != a:
                    bad += 1
            s.expect(bad == 0, f"{name} n={n}: {bad} disagreements")
    return s.result()


def class_invariance(n_max):
    s = _Suite("class-invariance")
    for cls in pattern_classes(4):
        rep = cls.representative
        for n in range(1, n_max + 1):
            want = formulas.count_for_pattern(n, rep).count
            for q in sorted(cls.rotation_orbit) + [reversal(rep)]:
                got = count_avoiders(n, [q]).count
                s.expect(got == want, f"{q} n={n}: {got} != {want}")
    return s.result()


def run_all(n_max, workers=None):
    return [
        formula_vs_oracle(n_max, workers),
        recurrence_vs_closed(),
        stratified_vs_oracle(n_max),
        prop1_bijection(n_max),
        thm1_bijection(n_max),
        thm2_bijection(n_max),
        structure_vs_oracle(n_max),
        class_invariance(n_max),
    ]
