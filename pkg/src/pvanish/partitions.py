"""Integer partitions, Young-diagram hooks, and abacus (beta-set) combinatorics.

A partition is stored canonically as a tuple of weakly decreasing positive
integers; the empty tuple is the unique partition of 0 and displays as "(0)".
Everything here treats partitions as immutable values, so results can be
memoized and shared freely across queries and worker processes.

Rim-hook removal is done on beta-sets: removing a hook of length L from the
partition with beta-set B means replacing some x in B by x - L when x - L is
non-negative and not already in B.  The leg length of the removed hook equals
the number of elements of B strictly between x - L and x.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]
BetaSet = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize an iterable of parts, rejecting anything non-positive.

    Parts may arrive in any order (cycle types are unordered); they are
    sorted into weakly decreasing form.
    """
    seq = tuple(sorted(parts, reverse=True))
    if seq and seq[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {seq}")
    return seq


def parse_partition(text: str) -> Partition:
    """Parse "4,2,1", "(4,2,1)" or the compressed form "(4,2,1^3)".

    "0", "(0)" and the empty string all denote the empty partition.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if body in ("", "0"):
        return ()
    parts: list[int] = []
    for token in body.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty component in partition {text!r}")
        if "^" in token:
            base_s, _, exp_s = token.partition("^")
            base, exp = int(base_s), int(exp_s)
            if exp < 0:
                raise ValueError(f"negative multiplicity in {text!r}")
            parts.extend([base] * exp)
        else:
            parts.append(int(token))
    return as_partition(parts)


def format_partition(alpha: Partition) -> str:
    """Inverse of parse_partition; the empty partition prints as "(0)"."""
    if not alpha:
        return "(0)"
    return "(" + ",".join(str(c) for c in alpha) + ")"


def conjugate(alpha: Partition) -> Partition:
    """Transpose the Young diagram (columns become rows)."""
    if not alpha:
        return ()
    cols = []
    for j in range(1, alpha[0] + 1):
        cols.append(sum(1 for c in alpha if c >= j))
    return tuple(cols)


def hook_length(alpha: Partition, i: int, j: int) -> int:
    """Hook length at the 1-indexed node (i, j): arm + leg + 1.

    Raises ValueError when (i, j) lies outside the diagram.
    """
    if i < 1 or i > len(alpha) or j < 1 or j > alpha[i - 1]:
        raise ValueError(f"node ({i},{j}) outside diagram of {alpha}")
    col = sum(1 for c in alpha if c >= j)
    return (alpha[i - 1] - j) + (col - i) + 1


def hook_lengths(alpha: Partition) -> list[list[int]]:
    """All hook lengths, one list per row."""
    conj = conjugate(alpha)
    return [
        [(alpha[i] - j - 1) + (conj[j] - i - 1) + 1 for j in range(alpha[i])]
        for i in range(len(alpha))
    ]


def beta_set(alpha: Partition, size: int) -> BetaSet:
    """First-column hook lengths displayed at the given size.

    The beta-set of display size m is {alpha_i + m - i : 1 <= i <= m}
    with missing parts read as 0; it is strictly decreasing.
    """
    if size < len(alpha):
        raise ValueError(f"display size {size} below part count of {alpha}")
    padded = alpha + (0,) * (size - len(alpha))
    return tuple(padded[i] + size - 1 - i for i in range(size))


def from_beta_set(beta: Iterable[int]) -> Partition:
    """Recover the partition from a set of distinct non-negative integers."""
    elems = sorted(beta, reverse=True)
    if any(x < 0 for x in elems):
        raise ValueError(f"beta-set elements must be non-negative: {elems}")
    if len(set(elems)) != len(elems):
        raise ValueError(f"beta-set elements must be distinct: {elems}")
    m = len(elems)
    parts = tuple(x - (m - 1 - i) for i, x in enumerate(elems))
    return tuple(c for c in parts if c > 0)


@dataclass(frozen=True)
class HookRemoval:
    """One way of removing a rim hook of a given length.

    row/col locate the hook's corner node (1-indexed), leg is the leg
    length of the removed rim hook, result the remaining partition.
    """

    row: int
    col: int
    length: int
    leg: int
    result: Partition


def _hook_moves(alpha: Partition, length: int) -> list[tuple[int, int, Partition]]:
    """(bead index, leg, result) for each removable hook of the given length."""
    m = len(alpha)
    if m == 0 or length < 1 or length > sum(alpha):
        return []
    beads = [alpha[i] + m - 1 - i for i in range(m)]
    occupied = set(beads)
    moves = []
    for i, x in enumerate(beads):
        y = x - length
        if y >= 0 and y not in occupied:
            leg = sum(1 for z in beads if y < z < x)
            new_beads = beads[:i] + [y] + beads[i + 1 :]
            moves.append((i, leg, from_beta_set(new_beads)))
    return moves


def removable_hooks(alpha: Partition, length: int) -> list[HookRemoval]:
    """All removals of a rim hook of the given length, by origin row ascending.

    A row holds at most one hook of each length, so the origin column is
    determined; it is recovered from the bead positions.
    """
    m = len(alpha)
    if m == 0:
        return []
    beads = [alpha[i] + m - 1 - i for i in range(m)]
    occupied = set(beads)
    out = []
    for i, leg, result in _hook_moves(alpha, length):
        y = beads[i] - length
        col = y - sum(1 for b in occupied if b < y) + 1
        out.append(HookRemoval(row=i + 1, col=col, length=length, leg=leg, result=result))
    return out


@cache
def _strippable(alpha: Partition, lengths: tuple[int, ...]) -> bool:
    if not lengths:
        return True
    return any(
        _strippable(result, lengths[1:])
        for _, _, result in _hook_moves(alpha, lengths[0])
    )


def can_remove_sequence(alpha: Partition, lengths: Iterable[int]) -> bool:
    """Whether hooks of the given lengths can be removed in the given order.

    The search memoizes on (partition, remaining suffix); suffixes recur
    across queries, so the cache is shared process-wide.
    """
    seq = tuple(lengths)
    if any(l < 1 for l in seq):
        raise ValueError(f"hook lengths must be positive: {seq}")
    if sum(seq) > sum(alpha):
        return False
    return _strippable(alpha, seq)


@dataclass(frozen=True)
class RDecomposition:
    """r-core, r-quotient, r-weight and r-sign of a partition.

    quotient has exactly r components; component j is read off runner j of
    an abacus with a bead count divisible by r.  sign is (-1) raised to the
    total leg length of any maximal sequence of r-hook removals (the parity
    does not depend on the order).
    """

    r: int
    core: Partition
    quotient: tuple[Partition, ...]
    weight: int
    sign: int


def _runner_levels(beta: BetaSet, r: int) -> list[list[int]]:
    """Bead levels per runner: bead at position x sits on runner x % r, level x // r."""
    runners: list[list[int]] = [[] for _ in range(r)]
    for x in beta:
        runners[x % r].append(x // r)
    for lev in runners:
        lev.sort()
    return runners


def _removal_sign(beta: BetaSet, r: int, *, lowest_first: bool = False) -> int:
    """Simulate a maximal sequence of single-runner bead moves, tracking leg parity."""
    beads = sorted(beta, reverse=True)
    occupied = set(beads)
    legs = 0
    while True:
        movable = [x for x in beads if x >= r and (x - r) not in occupied]
        if not movable:
            return -1 if legs % 2 else 1
        x = min(movable) if lowest_first else max(movable)
        y = x - r
        legs += sum(1 for z in beads if y < z < x)
        occupied.remove(x)
        occupied.add(y)
        beads.remove(x)
        beads.append(y)
        beads.sort(reverse=True)


@cache
def r_decompose(alpha: Partition, r: int) -> RDecomposition:
    """Decompose a partition into its r-core, r-quotient, r-weight and r-sign.

    The beta-set is displayed at the least size that is a multiple of r, and
    quotient component j is read off runner j (bead positions congruent to
    j mod r, with levels giving the component's beta-set).
    """
    if r < 1:
        raise ValueError(f"modulus must be >= 1, got {r}")
    m = r * ((len(alpha) + r - 1) // r)
    beta = beta_set(alpha, m)
    runners = _runner_levels(beta, r)
    weight = sum(lev - v for levels in runners for v, lev in enumerate(levels))
    core_beads = [j + r * v for j, levels in enumerate(runners) for v in range(len(levels))]
    quotient = tuple(from_beta_set(levels) for levels in runners)
    return RDecomposition(
        r=r,
        core=from_beta_set(core_beads),
        quotient=quotient,
        weight=weight,
        sign=_removal_sign(beta, r),
    )


def from_core_and_quotient(core: Partition, quotient: Iterable[Partition], r: int) -> Partition:
    """Inverse of r_decompose: rebuild the partition from core and quotient.

    Raises ValueError when core is not actually an r-core or the quotient
    does not have exactly r components.
    """
    quot = tuple(tuple(q) for q in quotient)
    if r < 1:
        raise ValueError(f"modulus must be >= 1, got {r}")
    if len(quot) != r:
        raise ValueError(f"quotient needs exactly {r} components, got {len(quot)}")
    if r_decompose(core, r).weight != 0:
        raise ValueError(f"{core} is not an {r}-core")
    s = (len(core) + r - 1) // r
    runners = _runner_levels(beta_set(core, r * s), r)
    # each +r to the display size adds one bead at the bottom of every runner
    grow = max((len(q) - len(runners[j]) for j, q in enumerate(quot)), default=0)
    if grow > 0:
        s += grow
        runners = _runner_levels(beta_set(core, r * s), r)
    beads = []
    for j, q in enumerate(quot):
        beads.extend(j + r * lev for lev in beta_set(q, len(runners[j])))
    return from_beta_set(beads)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if n == 0:
        yield ()
        return
    part = [n]
    while True:
        yield tuple(part)
        i = len(part) - 1
        while i >= 0 and part[i] == 1:
            i -= 1
        if i < 0:
            return
        part[i] -= 1
        rem = len(part) - i
        del part[i + 1 :]
        cap = part[i]
        while rem > 0:
            take = min(cap, rem)
            part.append(take)
            rem -= take


def clear_caches() -> None:
    """Drop the process-wide memo tables (hook stripping, decompositions)."""
    _strippable.cache_clear()
    r_decompose.cache_clear()
