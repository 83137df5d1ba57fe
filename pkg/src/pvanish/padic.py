"""Base-p digit data for n and the hook-theoretic singularity tests.

Throughout, n = sum a_i p^i with 0 <= a_i < p.  Splitting the digit string
at position t gives n = div(t) * p^t + rem(t).  The canonical partition of
p-adic type is the one with a_i parts equal to p^i for every i; a general
partition has p-adic type when, for every i, its parts of exact p-valuation
i sum to a_i p^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import characters
from .partitions import (
    Partition,
    can_remove_sequence,
    hook_lengths,
    r_decompose,
)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PAdicContext:
    """n together with its base-p digits (a_0, ..., a_k)."""

    p: int
    n: int
    digits: tuple[int, ...]

    @property
    def k(self) -> int:
        """Index of the leading digit."""
        return len(self.digits) - 1

    def digit(self, i: int) -> int:
        return self.digits[i] if 0 <= i <= self.k else 0

    def div(self, t: int) -> int:
        """The digits from position t up, i.e. n // p^t."""
        return self.n // self.p**t

    def rem(self, t: int) -> int:
        """The digits below position t, i.e. n % p^t."""
        return self.n % self.p**t


@cache
def p_adic_context(n: int, p: int) -> PAdicContext:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    digits = [0]
    if n:
        digits = []
        m = n
        while m:
            digits.append(m % p)
            m //= p
    return PAdicContext(p=p, n=n, digits=tuple(digits))


def digit_hook_lengths(ctx: PAdicContext, min_level: int = 0) -> tuple[int, ...]:
    """Hook lengths (p^k repeated a_k times, ..., p^min_level repeated a_min_level times)."""
    out: list[int] = []
    for i in range(ctx.k, min_level - 1, -1):
        out.extend([ctx.p**i] * ctx.digit(i))
    return tuple(out)


def p_power_partition(ctx: PAdicContext) -> Partition:
    """The canonical partition of p-adic type: a_i parts equal to p^i."""
    return digit_hook_lengths(ctx, 0)


def valuation(x: int, p: int) -> int:
    """Exponent of p in x; x must be positive."""
    if x <= 0:
        raise ValueError(f"valuation needs a positive argument, got {x}")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True, eq=False)
class PAdicTypeWitness:
    """Parts grouped by exact p-valuation, each group divided by its p-power.

    groups[i] collects c / p^i over the parts c with valuation exactly i.
    The partition has p-adic type iff group i sums to digit a_i for all i.
    """

    groups: dict[int, tuple[int, ...]]
    group_sums: dict[int, int]
    failures: tuple[int, ...]


def p_adic_type_witness(alpha: Partition, ctx: PAdicContext) -> PAdicTypeWitness:
    if sum(alpha) != ctx.n:
        raise ValueError(f"{alpha} is not a partition of {ctx.n}")
    groups: dict[int, list[int]] = {}
    for c in alpha:
        groups.setdefault(valuation(c, ctx.p), []).append(c)
    levels = set(groups) | set(range(ctx.k + 1))
    sums = {i: sum(groups.get(i, ())) // ctx.p**i for i in levels}
    failures = tuple(sorted(i for i in levels if sums[i] != ctx.digit(i)))
    return PAdicTypeWitness(
        groups={i: tuple(sorted(g, reverse=True)) for i, g in groups.items()},
        group_sums=sums,
        failures=failures,
    )


def is_p_adic_type(alpha: Partition, ctx: PAdicContext) -> bool:
    """Whether the parts of exact p-valuation i sum to a_i p^i for every i."""
    return not p_adic_type_witness(alpha, ctx).failures


def weight_digit(alpha: Partition, p: int, i: int) -> int:
    """p^i-weight minus p times the p^(i+1)-weight.

    Non-negative for every partition; equal to digit a_i for every i
    exactly when the character indexed by alpha has degree prime to p.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if i < 0:
        raise ValueError(f"digit position must be >= 0, got {i}")
    return r_decompose(alpha, p**i).weight - p * r_decompose(alpha, p**(i + 1)).weight


def is_blocked_at_level(alpha: Partition, ctx: PAdicContext, m: int) -> bool:
    """Whether the digit hooks from the top down to level m cannot all be removed.

    Blocked at level 0 is the same as p-singular; blocked above the leading
    digit is impossible (the sequence is empty).
    """
    if sum(alpha) != ctx.n:
        raise ValueError(f"{alpha} is not a partition of {ctx.n}")
    return not can_remove_sequence(alpha, digit_hook_lengths(ctx, m))


def degree_valuation(alpha: Partition, p: int) -> int:
    """p-adic valuation of the character degree, without forming the degree."""
    n = sum(alpha)
    v_fact = 0
    q = p
    while q <= n:
        v_fact += n // q
        q *= p
    return v_fact - sum(valuation(h, p) for row in hook_lengths(alpha) for h in row)


SINGULARITY_METHODS = ("b_invariants", "hooks", "character", "degree")


def is_p_singular(alpha: Partition, ctx: PAdicContext, method: str = "b_invariants") -> bool:
    """Whether p divides the degree of the character indexed by alpha.

    Four equivalent tests are available:
      b_invariants  some weight digit differs from the matching digit of n
      hooks         the digit hook sequence cannot be removed
      character     the character vanishes on the canonical p-adic class
      degree        p divides the degree (via valuations, no big integers)
    """
    if sum(alpha) != ctx.n:
        raise ValueError(f"{alpha} is not a partition of {ctx.n}")
    if method == "b_invariants":
        return any(weight_digit(alpha, ctx.p, i) != ctx.digit(i) for i in range(ctx.k + 1))
    if method == "hooks":
        return is_blocked_at_level(alpha, ctx, 0)
    if method == "character":
        return characters.character_value(alpha, p_power_partition(ctx)) == 0
    if method == "degree":
        return degree_valuation(alpha, ctx.p) > 0
    raise ValueError(f"unknown method {method!r}, expected one of {SINGULARITY_METHODS}")
