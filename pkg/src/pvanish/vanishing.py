"""Classification of p-vanishing cycle types.

A cycle type beta of S_n is p-vanishing when every irreducible character of
degree divisible by p vanishes on it.  The brute-force oracle checks exactly
that, with early exit on the first witness.  For p = 2 and p = 3 there is
also a structural classifier: split beta into a head of parts >= p^r that
must form a p-adic-type partition of div(r) * p^r and a tail that must be a
p-vanishing cycle type of the remainder rem(r) < p^r, where r = 3 for p = 2
and r = 2 for p = 3.  The tail lands below p^r, so a fixed table of small
cases closes the recursion.  The two classifiers are kept independent and
compared over full sweeps.

For p >= 5 the classification is conjectural; scan functions hunt for
counterexamples and only ever report "none found".
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from functools import cache

from .characters import character_value
from .padic import (
    PAdicContext,
    is_p_adic_type,
    p_adic_context,
    is_p_singular,
)
from .partitions import Partition, enumerate_partitions

DEFAULT_SWEEP_LIMIT = 16

# Known classification below the structural threshold (n < 8 for p=2,
# n < 9 for p=3).  base_vanishing_table() recomputes these by brute force on
# first use and refuses to serve them if anything disagrees.
_BASE_TABLE: dict[int, dict[int, frozenset[Partition]]] = {
    2: {
        0: frozenset({()}),
        1: frozenset({(1,)}),
        2: frozenset({(2,), (1, 1)}),
        3: frozenset({(2, 1)}),
        4: frozenset({(4,), (2, 1, 1)}),
        5: frozenset({(4, 1)}),
        6: frozenset({(4, 2), (4, 1, 1)}),
        7: frozenset({(4, 2, 1)}),
    },
    3: {
        0: frozenset({()}),
        1: frozenset({(1,)}),
        2: frozenset({(2,), (1, 1)}),
        3: frozenset({(3,), (2, 1), (1, 1, 1)}),
        4: frozenset({(3, 1)}),
        5: frozenset({(3, 2), (3, 1, 1), (4, 1), (2, 1, 1, 1)}),
        6: frozenset({(6,), (3, 3), (3, 2, 1), (3, 1, 1, 1)}),
        7: frozenset({(6, 1), (3, 3, 1)}),
        8: frozenset(
            {(6, 2), (6, 1, 1), (3, 3, 2), (3, 3, 1, 1), (4, 3, 1), (3, 2, 1, 1, 1)}
        ),
    },
}

STRUCTURAL_LEVEL = {2: 3, 3: 2}


@cache
def singular_partitions(n: int, p: int) -> tuple[Partition, ...]:
    """All labels of S_n whose character degree is divisible by p."""
    ctx = p_adic_context(n, p)
    return tuple(a for a in enumerate_partitions(n) if is_p_singular(a, ctx))


@cache
def nonvanishing_witness(beta: Partition, p: int) -> tuple[Partition, int] | None:
    """A p-singular label with nonzero value on beta, or None if beta p-vanishes."""
    for alpha in singular_partitions(sum(beta), p):
        value = character_value(alpha, beta)
        if value:
            return (alpha, value)
    return None


def is_p_vanishing_bruteforce(beta: Partition, ctx: PAdicContext) -> bool:
    if sum(beta) != ctx.n:
        raise ValueError(f"{beta} is not a partition of {ctx.n}")
    return nonvanishing_witness(beta, ctx.p) is None


def _flag_one(args: tuple[Partition, int]) -> bool:
    beta, p = args
    return nonvanishing_witness(beta, p) is None


def vanishing_flags(n: int, p: int, *, workers: int = 1) -> dict[Partition, bool]:
    """Brute-force vanishing flag for every cycle type of S_n.

    With workers > 1 the betas are farmed out to a process pool; each worker
    keeps its own memo tables, and the merged output is identical to the
    sequential run (one flag per beta, enumeration order).
    """
    betas = list(enumerate_partitions(n))
    if workers <= 1:
        return {b: nonvanishing_witness(b, p) is None for b in betas}
    singular_partitions(n, p)  # prime the parent cache before forking
    with multiprocessing.Pool(workers) as pool:
        flags = pool.map(_flag_one, [(b, p) for b in betas], chunksize=8)
    return dict(zip(betas, flags))


@cache
def _vanishing_set(n: int, p: int) -> tuple[Partition, ...]:
    return tuple(b for b, ok in vanishing_flags(n, p).items() if ok)


@cache
def base_vanishing_table(p: int) -> dict[int, frozenset[Partition]]:
    """Vanishing sets below p^r, recomputed and checked against the fixed table."""
    if p not in _BASE_TABLE:
        raise ValueError(f"no structural classifier for p={p}")
    table = _BASE_TABLE[p]
    for n, expected in table.items():
        got = frozenset(_vanishing_set(n, p))
        if got != expected:
            raise RuntimeError(
                f"base table mismatch at p={p}, n={n}: "
                f"computed {sorted(got)} vs stored {sorted(expected)}"
            )
    return table


def structural_split(beta: Partition, ctx: PAdicContext) -> int | None:
    """Index i splitting beta into p-adic head and small vanishing tail, or None.

    beta[:i] must be a p-adic-type partition of div(r) * p^r and beta[i:]
    a vanishing cycle type of rem(r) per the base table.  Prefix sums are
    strictly increasing, so at most one index can match the head size.
    """
    if sum(beta) != ctx.n:
        raise ValueError(f"{beta} is not a partition of {ctx.n}")
    if ctx.p not in STRUCTURAL_LEVEL:
        raise ValueError(f"no structural classifier for p={ctx.p}")
    r = STRUCTURAL_LEVEL[ctx.p]
    table = base_vanishing_table(ctx.p)
    head_size = ctx.div(r) * ctx.p**r
    tail_size = ctx.rem(r)
    running = 0
    for i in range(len(beta) + 1):
        if running == head_size:
            head, tail = beta[:i], beta[i:]
            head_ctx = p_adic_context(head_size, ctx.p)
            if is_p_adic_type(head, head_ctx) and tail in table[tail_size]:
                return i
            return None
        if running > head_size:
            return None
        if i < len(beta):
            running += beta[i]
    return None


def is_p_vanishing_structural(beta: Partition, ctx: PAdicContext) -> bool:
    return structural_split(beta, ctx) is not None


# ---------------------------------------------------------------------------
# structure audits: necessary conditions a vanishing cycle type must satisfy
# ---------------------------------------------------------------------------


def _large_part_sum(beta: Partition, bound: int) -> int:
    return sum(c for c in beta if c >= bound)


def _lower_bound_covered(p: int, n: int, t: int) -> bool:
    # congruence cases under which the >= d_t p^t bound is asserted
    if p == 2:
        if n % 2 == 1 or n % 8 == 0:
            return True
        if n % 4 == 2:
            return t != 1
        if n % 8 == 4:
            return t not in (1, 2)
        return False
    if p == 3:
        if n % 9 in (0, 1, 2, 4, 7):
            return True
        return t != 1
    return False


def _upper_bound_covered(p: int, n: int, t: int) -> bool:
    # asserted everywhere except p=3, t=1, n = 2 mod 3
    return not (p == 3 and t == 1 and n % 3 == 2)


def _check_min_part(beta: Partition, p: int, t: int) -> bool:
    P = p**t
    tail = beta[-1]
    if P not in (2, 3, 4):
        return tail >= P
    if P in (2, 3):
        return tail >= P or tail == 1
    if tail >= 4:
        return True
    if beta == (2, 1, 1):
        return True
    return len(beta) >= 4 and beta[-3:] == (2, 1, 1) and beta[-4] >= 4


def suffix_reduction_check(beta: Partition, ctx: PAdicContext, m: int) -> bool | None:
    """Compare vanishing status of beta and of its parts below p^m.

    Applicable when, for every t with m <= t <= k, the parts divisible by
    p^t sum to div(t) * p^t; returns None otherwise.  When applicable the
    two statuses must agree (checked by brute force on both sides).
    """
    if sum(beta) != ctx.n:
        raise ValueError(f"{beta} is not a partition of {ctx.n}")
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    p = ctx.p
    for t in range(m, ctx.k + 1):
        if ctx.div(t) * p**t != sum(c for c in beta if c % p**t == 0):
            return None
    cut = sum(1 for c in beta if c >= p**m)
    tail = beta[cut:]
    whole = is_p_vanishing_bruteforce(beta, ctx)
    part = is_p_vanishing_bruteforce(tail, p_adic_context(sum(tail), p))
    return whole == part


@dataclass
class StructureAudit:
    """Outcome of auditing the necessary conditions over one (n, p) sweep."""

    n: int
    p: int
    vanishing_count: int
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    informational: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "vanishing_count": self.vanishing_count,
            "checked": dict(self.checked),
            "violations": list(self.violations),
            "informational": list(self.informational),
            "passed": self.passed,
        }


def audit_vanishing_structure(ctx: PAdicContext) -> StructureAudit:
    """Audit every vanishing cycle type of S_n against the structure facts.

    Predicates (each per level t, gated by its hypotheses):
      large_part_sum_upper   sum of parts >= p^t is at most div(t) * p^t
      large_part_sum_lower   same sum is at least div(t) * p^t (congruence cases)
      large_parts_multiples  if that sum equals div(t) * p^t, those parts are
                             all divisible by p^t
      small_part_excess      if the sum falls short, parts below rem(t) sum
                             to more than rem(t)
      min_part               when p^t divides n, the smallest part is at
                             least p^t (small p^t have listed exceptions)
      suffix_reduction       dropping the parts >= p^m preserves the
                             vanishing status when digit sums match above m
                             (checked for every cycle type, not just
                             vanishing ones)
    Failures under a hypothesis the facts do not cover are recorded as
    informational, not as violations.
    """
    n, p, k = ctx.n, ctx.p, ctx.k
    audit = StructureAudit(n=n, p=p, vanishing_count=0)

    def tally(name: str) -> None:
        audit.checked[name] = audit.checked.get(name, 0) + 1

    def flag(where: list[dict], name: str, beta: Partition, **details) -> None:
        where.append({"predicate": name, "beta": list(beta), **details})

    vanishing = _vanishing_set(n, p)
    audit.vanishing_count = len(vanishing)
    for beta in vanishing:
        if not beta:
            continue
        for t in range(0, k + 2):
            P = p**t
            big = _large_part_sum(beta, P)
            target = ctx.div(t) * P

            tally("large_part_sum_upper")
            if big > target:
                dest = (
                    audit.violations
                    if _upper_bound_covered(p, n, t)
                    else audit.informational
                )
                flag(dest, "large_part_sum_upper", beta, t=t, sum=big, bound=target)

            tally("large_part_sum_lower")
            if big < target:
                dest = (
                    audit.violations
                    if _lower_bound_covered(p, n, t)
                    else audit.informational
                )
                flag(dest, "large_part_sum_lower", beta, t=t, sum=big, bound=target)

            tally("large_parts_multiples")
            if big == target and any(c % P for c in beta if c >= P):
                flag(audit.violations, "large_parts_multiples", beta, t=t)

            # the small-part lemma needs rem(t) >= 1 (its hook-family
            # ingredient has d_t, e_t != 0 as a hypothesis, and at e_t = 0
            # the conclusion is an empty sum); outcomes at rem(t) = 0 are
            # recorded informationally only
            tally("small_part_excess")
            if big < target:
                small = sum(c for c in beta if c < ctx.rem(t))
                if small <= ctx.rem(t):
                    dest = audit.violations if ctx.rem(t) >= 1 else audit.informational
                    flag(
                        dest,
                        "small_part_excess",
                        beta,
                        t=t,
                        sum=small,
                        bound=ctx.rem(t),
                    )

            if t >= 1 and n % P == 0 and n > 0:
                tally("min_part")
                if not _check_min_part(beta, p, t):
                    flag(audit.violations, "min_part", beta, t=t)

    for beta in enumerate_partitions(n):
        for m in range(0, k + 2):
            outcome = suffix_reduction_check(beta, ctx, m)
            if outcome is None:
                continue
            tally("suffix_reduction")
            if not outcome:
                flag(audit.violations, "suffix_reduction", beta, m=m)

    return audit


# ---------------------------------------------------------------------------
# reports and conjecture scans
# ---------------------------------------------------------------------------


@dataclass
class VanishEntry:
    parts: Partition
    p_adic_type: bool
    split_i: int | None


@dataclass
class VanishReport:
    n: int
    p: int
    vanishing: list[VanishEntry]
    audits: dict
    counterexamples: list[dict]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "p": self.p,
            "vanishing": [
                {
                    "parts": list(e.parts),
                    "p_adic_type": e.p_adic_type,
                    "split_i": e.split_i,
                }
                for e in self.vanishing
            ],
            "audits": self.audits,
            "counterexamples": self.counterexamples,
        }


def list_p_vanishing(
    ctx: PAdicContext,
    *,
    limit: int | None = None,
    workers: int = 1,
    audit: bool = False,
) -> VanishReport:
    """All p-vanishing cycle types of S_n, annotated, in enumeration order.

    For p in {2, 3} every flag is cross-checked against the structural
    classifier and a disagreement lands in counterexamples.  Sweeps above
    the configured limit must opt in explicitly.
    """
    bound = DEFAULT_SWEEP_LIMIT if limit is None else limit
    if ctx.n > bound:
        raise ValueError(
            f"sweep at n={ctx.n} exceeds the limit ({bound}); pass limit= to opt in"
        )
    flags = vanishing_flags(ctx.n, ctx.p, workers=workers)
    structural = ctx.p in STRUCTURAL_LEVEL
    entries: list[VanishEntry] = []
    counterexamples: list[dict] = []
    agreement = True
    for beta, ok in flags.items():
        split = structural_split(beta, ctx) if structural else None
        if structural and ok != (split is not None):
            agreement = False
            witness = nonvanishing_witness(beta, ctx.p)
            counterexamples.append(
                {
                    "kind": "classifier_disagreement",
                    "beta": list(beta),
                    "bruteforce": ok,
                    "structural": split is not None,
                    "witness": [list(witness[0]), witness[1]] if witness else None,
                }
            )
        if ok:
            entries.append(
                VanishEntry(
                    parts=beta,
                    p_adic_type=is_p_adic_type(beta, ctx),
                    split_i=split,
                )
            )
    audits: dict = {}
    if structural:
        audits["structural_agreement"] = agreement
    if audit:
        result = audit_vanishing_structure(ctx)
        audits["structure"] = result.to_json_dict()
        counterexamples.extend(result.violations)
    return VanishReport(
        n=ctx.n, p=ctx.p, vanishing=entries, audits=audits, counterexamples=counterexamples
    )


@dataclass
class ConjectureScan:
    """Counterexample hunt at a single n for p >= 5.

    type_mismatches: vanishing cycle types that do not have p-adic type
    (would refute the classification conjecture).  missed_types: p-adic-type
    cycle types that fail to vanish (would refute a proven fact, so finding
    one means a bug).  sum_bound_violations: vanishing cycle types whose
    parts below the last digit a_0 sum to more than a_0.
    """

    n: int
    p: int
    vanishing: list[Partition]
    type_mismatches: list[Partition]
    missed_types: list[dict]
    sum_bound_violations: list[dict]

    @property
    def counterexamples(self) -> list[dict]:
        out: list[dict] = []
        for beta in self.type_mismatches:
            out.append({"kind": "vanishing_without_p_adic_type", "beta": list(beta)})
        out.extend(self.missed_types)
        out.extend(self.sum_bound_violations)
        return out

    def summary(self) -> str:
        if not self.counterexamples:
            return f"p={self.p} n={self.n}: no counterexample found"
        return f"p={self.p} n={self.n}: {len(self.counterexamples)} counterexample(s)"


def check_conjectures(
    ctx: PAdicContext, *, limit: int | None = None, workers: int = 1
) -> ConjectureScan:
    """Scan one symmetric group for conjecture counterexamples (p >= 5)."""
    if ctx.p < 5:
        raise ValueError(f"conjecture scans apply to p >= 5, got p={ctx.p}")
    bound = DEFAULT_SWEEP_LIMIT if limit is None else limit
    if ctx.n > bound:
        raise ValueError(
            f"sweep at n={ctx.n} exceeds the limit ({bound}); pass limit= to opt in"
        )
    flags = vanishing_flags(ctx.n, ctx.p, workers=workers)
    vanishing = [b for b, ok in flags.items() if ok]
    type_mismatches = [b for b in vanishing if not is_p_adic_type(b, ctx)]
    missed_types = []
    for beta, ok in flags.items():
        if not ok and is_p_adic_type(beta, ctx):
            witness = nonvanishing_witness(beta, ctx.p)
            missed_types.append(
                {
                    "kind": "p_adic_type_not_vanishing",
                    "beta": list(beta),
                    "witness": [list(witness[0]), witness[1]],
                }
            )
    a0 = ctx.digit(0)
    sum_bound_violations = []
    for beta in vanishing:
        small = sum(c for c in beta if c < a0)
        if small > a0:
            sum_bound_violations.append(
                {
                    "kind": "small_part_sum_exceeds_last_digit",
                    "beta": list(beta),
                    "sum": small,
                    "bound": a0,
                }
            )
    return ConjectureScan(
        n=ctx.n,
        p=ctx.p,
        vanishing=vanishing,
        type_mismatches=type_mismatches,
        missed_types=missed_types,
        sum_bound_violations=sum_bound_violations,
    )


@dataclass
class ConjectureSweep:
    p: int
    scans: list[ConjectureScan]

    @property
    def counterexamples(self) -> list[dict]:
        return [c for s in self.scans for c in s.counterexamples]

    @property
    def equivalence_consistent(self) -> bool:
        """The two conjectures stand or fall together across the sweep.

        If the small-part sum bound held everywhere scanned, the type
        classification must have held as well.
        """
        no_sum_violation = all(not s.sum_bound_violations for s in self.scans)
        no_type_mismatch = all(not s.type_mismatches for s in self.scans)
        return no_type_mismatch or not no_sum_violation

    def summary(self) -> str:
        total = len(self.counterexamples)
        ns = f"n<={max((s.n for s in self.scans), default=0)}"
        if total == 0:
            return f"p={self.p} {ns}: no counterexample found"
        return f"p={self.p} {ns}: {total} counterexample(s)"


def conjecture_sweep(
    p: int, ns: range | list[int], *, limit: int | None = None, workers: int = 1
) -> ConjectureSweep:
    scans = [
        check_conjectures(p_adic_context(n, p), limit=limit, workers=workers) for n in ns
    ]
    return ConjectureSweep(p=p, scans=scans)


def clear_caches() -> None:
    """Drop the sweep-level memo tables."""
    singular_partitions.cache_clear()
    nonvanishing_witness.cache_clear()
    _vanishing_set.cache_clear()
    base_vanishing_table.cache_clear()
