"""Batch self-verification sweeps.

Each runner exhaustively checks one family of identities over a stated range
and returns a SuiteResult carrying the number of checks and any violations,
each violation with a full witness.  Runners never stop at the first failure;
they exist to certify ranges, not to shortcut them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

from .characters import (
    centralizer_order,
    character_value,
    degree,
    factored_character_value,
    induced_character_value,
    merged_cycle_type,
    multi_character_value,
)
from .padic import SINGULARITY_METHODS, is_p_singular, p_adic_context
from .partitions import conjugate, enumerate_partitions, r_decompose
from .vanishing import (
    audit_vanishing_structure,
    is_p_vanishing_structural,
    vanishing_flags,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "violations": self.violations,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs) -> SuiteResult:
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.elapsed = time.perf_counter() - start
        return result

    return wrapper


@_timed
def equivalence_suite(primes: list[int], max_n: int) -> SuiteResult:
    """The four singularity tests agree on every label."""
    res = SuiteResult("equivalence")
    for p in primes:
        for n in range(max_n + 1):
            ctx = p_adic_context(n, p)
            for alpha in enumerate_partitions(n):
                answers = {m: is_p_singular(alpha, ctx, m) for m in SINGULARITY_METHODS}
                res.checks += 1
                if len(set(answers.values())) != 1:
                    res.violations.append(
                        {"p": p, "n": n, "alpha": list(alpha), "answers": answers}
                    )
    return res


@_timed
def orthogonality_suite(max_n: int) -> SuiteResult:
    """Row and column orthogonality of the full character table, exactly."""
    res = SuiteResult("orthogonality")
    for n in range(max_n + 1):
        labels = list(enumerate_partitions(n))
        table = {
            (a, b): character_value(a, b) for a in labels for b in labels
        }
        sizes = {b: factorial(n) // centralizer_order(b) for b in labels}
        for a1 in labels:
            for a2 in labels:
                total = sum(sizes[b] * table[(a1, b)] * table[(a2, b)] for b in labels)
                expected = factorial(n) if a1 == a2 else 0
                res.checks += 1
                if total != expected:
                    res.violations.append(
                        {"kind": "row", "n": n, "a1": list(a1), "a2": list(a2), "got": total}
                    )
        for b1 in labels:
            for b2 in labels:
                total = sum(table[(a, b1)] * table[(a, b2)] for a in labels)
                expected = centralizer_order(b1) if b1 == b2 else 0
                res.checks += 1
                if total != expected:
                    res.violations.append(
                        {"kind": "column", "n": n, "b1": list(b1), "b2": list(b2), "got": total}
                    )
    return res


@_timed
def degree_column_suite(max_n: int) -> SuiteResult:
    """Hook-length degree equals the character value on the identity class."""
    res = SuiteResult("degree-column")
    for n in range(max_n + 1):
        identity = (1,) * n
        for alpha in enumerate_partitions(n):
            res.checks += 1
            if degree(alpha) != character_value(alpha, identity):
                res.violations.append({"n": n, "alpha": list(alpha)})
    return res


@_timed
def conjugation_twist_suite(max_n: int) -> SuiteResult:
    """Transposing the label multiplies values by the sign of the class."""
    res = SuiteResult("conjugation-twist")
    for n in range(max_n + 1):
        for alpha in enumerate_partitions(n):
            alpha_t = conjugate(alpha)
            for beta in enumerate_partitions(n):
                sign = (-1) ** (n - len(beta))
                res.checks += 1
                if character_value(alpha_t, beta) != sign * character_value(alpha, beta):
                    res.violations.append(
                        {"n": n, "alpha": list(alpha), "beta": list(beta)}
                    )
    return res


@_timed
def split_classifier_suite(primes: list[int], max_n: int, *, workers: int = 1) -> SuiteResult:
    """Structural classifier agrees with brute force on every cycle type."""
    res = SuiteResult("split-classifier")
    for p in primes:
        if p not in (2, 3):
            continue
        for n in range(max_n + 1):
            ctx = p_adic_context(n, p)
            for beta, ok in vanishing_flags(n, p, workers=workers).items():
                res.checks += 1
                if ok != is_p_vanishing_structural(beta, ctx):
                    res.violations.append(
                        {"p": p, "n": n, "beta": list(beta), "bruteforce": ok}
                    )
    return res


@_timed
def structure_suite(primes: list[int], max_n: int) -> SuiteResult:
    """Necessary-condition audits over every vanishing cycle type."""
    res = SuiteResult("structure")
    for p in primes:
        for n in range(max_n + 1):
            audit = audit_vanishing_structure(p_adic_context(n, p))
            res.checks += sum(audit.checked.values())
            res.violations.extend(
                {**v, "p": p, "n": n} for v in audit.violations
            )
    return res


@_timed
def factorization_suite(max_n: int, moduli: tuple[int, ...] = (2, 3, 4, 5)) -> SuiteResult:
    """Character on a class with cycles divisible by r factors through core and quotient."""
    res = SuiteResult("factorization")
    for n in range(max_n + 1):
        for alpha in enumerate_partitions(n):
            for r in moduli:
                dec = r_decompose(alpha, r)
                rest = n - r * dec.weight
                for gamma in enumerate_partitions(dec.weight):
                    for lam in enumerate_partitions(rest):
                        merged = merged_cycle_type(r, gamma, lam)
                        direct = character_value(alpha, merged)
                        split = factored_character_value(alpha, r, gamma, lam)
                        res.checks += 1
                        if direct != split:
                            res.violations.append(
                                {
                                    "n": n,
                                    "alpha": list(alpha),
                                    "r": r,
                                    "gamma": list(gamma),
                                    "lam": list(lam),
                                    "direct": direct,
                                    "split": split,
                                }
                            )
    return res


def _label_tuples(total: int, components: int):
    """All tuples of the given number of partitions (empty allowed) summing to total."""
    if components == 1:
        for a in enumerate_partitions(total):
            yield (a,)
        return
    for head in range(total + 1):
        for a in enumerate_partitions(head):
            for rest in _label_tuples(total - head, components - 1):
                yield (a,) + rest


@_timed
def multichar_suite(max_total: int, max_components: int = 3) -> SuiteResult:
    """Multi-label values: removal-order independence and the induction formula."""
    res = SuiteResult("multichar")
    for total in range(max_total + 1):
        classes = list(enumerate_partitions(total))
        for s in range(1, max_components + 1):
            for labels in _label_tuples(total, s):
                for lam in classes:
                    lead = multi_character_value(labels, lam)
                    res.checks += 1
                    bad = {}
                    trail = multi_character_value(labels, lam, largest_first=False)
                    if trail != lead:
                        bad["smallest_first"] = trail
                    induced = induced_character_value(labels, lam)
                    if induced != lead:
                        bad["induced"] = induced
                    if bad:
                        res.violations.append(
                            {
                                "labels": [list(l) for l in labels],
                                "lam": list(lam),
                                "value": lead,
                                **bad,
                            }
                        )
    return res


@_timed
def conjecture_suite(primes: list[int], max_n: int, *, workers: int = 1) -> SuiteResult:
    """Counterexample hunt for p >= 5; a found counterexample is a violation."""
    from .vanishing import conjecture_sweep

    res = SuiteResult("conjectures")
    for p in primes:
        if p < 5:
            continue
        sweep = conjecture_sweep(p, range(max_n + 1), limit=max_n, workers=workers)
        res.checks += sum(len(list(enumerate_partitions(s.n))) for s in sweep.scans)
        res.violations.extend({**c, "p": p} for c in sweep.counterexamples)
        if not sweep.equivalence_consistent:
            res.violations.append({"kind": "conjecture_equivalence_broken", "p": p})
    return res
