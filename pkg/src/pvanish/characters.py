"""Exact character values for symmetric groups via rim-hook recursion.

The value of the irreducible character labelled alpha on the class of cycle
type beta is computed by peeling one cycle length at a time: peel a part k,
sum (-1)^leg over all rim hooks of length k, recurse on what is left.  The
memo key is (remaining label, remaining cycle parts), so the cache is shared
across queries whenever class suffixes coincide; vanishing sweeps hit the
same suffixes over and over.

multi_character_value extends the recursion to tuples of labels, where each
cycle part may be peeled from any component.  That quantity equals the
character induced from an outer tensor product over a Young subgroup, which
induced_character_value computes by a different route (distributing cycle
parts over the components with multinomial weights) for cross-checking.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import comb, factorial, prod

from .partitions import (
    Partition,
    _hook_moves,
    enumerate_partitions,
    format_partition,
    hook_lengths,
    r_decompose,
)

TABLE_GUARD = 14


@cache
def _char(alpha: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    return sum((-1) ** leg * _char(result, rest) for _, leg, result in _hook_moves(alpha, k))


def character_value(alpha: Partition, beta: Partition, *, largest_first: bool = True) -> int:
    """Character labelled alpha evaluated on the class of cycle type beta.

    Cycle parts are peeled largest first by default; the result does not
    depend on the order (exposed only to let tests exercise that fact).
    """
    if sum(alpha) != sum(beta):
        raise ValueError(f"label {alpha} and class {beta} have different sizes")
    if any(c < 1 for c in beta):
        raise ValueError(f"cycle type parts must be positive: {beta}")
    return _char(alpha, tuple(sorted(beta, reverse=largest_first)))


def degree(alpha: Partition) -> int:
    """Degree of the character labelled alpha (hook length formula)."""
    n = sum(alpha)
    return factorial(n) // prod(h for row in hook_lengths(alpha) for h in row)


def centralizer_order(beta: Partition) -> int:
    """Order of the centralizer of an element of cycle type beta."""
    mult = Counter(beta)
    return prod(k**m * factorial(m) for k, m in mult.items())


@cache
def _multi(labels: tuple[Partition, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    k, rest = cycles[0], cycles[1:]
    total = 0
    for i, lab in enumerate(labels):
        for _, leg, result in _hook_moves(lab, k):
            total += (-1) ** leg * _multi(labels[:i] + (result,) + labels[i + 1 :], rest)
    return total


def multi_character_value(
    labels: tuple[Partition, ...], beta: Partition, *, largest_first: bool = True
) -> int:
    """Character of a label tuple: peel each cycle part from any component.

    Equals the character of S_m induced from the outer tensor product of the
    component characters over the matching Young subgroup.
    """
    if sum(sum(l) for l in labels) != sum(beta):
        raise ValueError(f"label tuple {labels} and class {beta} have different sizes")
    return _multi(tuple(labels), tuple(sorted(beta, reverse=largest_first)))


def _compositions(total: int, bins: int):
    if bins == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, bins - 1):
            yield (first,) + rest


def induced_character_value(labels: tuple[Partition, ...], beta: Partition) -> int:
    """Same quantity as multi_character_value, by the induction formula.

    Sum over all ways of distributing the multiset of cycle parts among the
    components so sizes match, weighting each cycle length by the multinomial
    coefficient of its multiplicity split.
    """
    sizes = [sum(l) for l in labels]
    if sum(sizes) != sum(beta):
        raise ValueError(f"label tuple {labels} and class {beta} have different sizes")
    mult = sorted(Counter(beta).items())
    s = len(labels)

    total = 0

    def distribute(idx: int, remaining: list[int], assigned: list[list[int]], weight: int):
        nonlocal total
        if idx == len(mult):
            value = weight
            for lab, parts in zip(labels, assigned):
                value *= character_value(lab, tuple(sorted(parts, reverse=True)))
                if value == 0:
                    return
            total += value
            return
        k, count = mult[idx]
        for split in _compositions(count, s):
            if any(split[i] * k > remaining[i] for i in range(s)):
                continue
            w = weight
            left = count
            for c in split:
                w *= comb(left, c)
                left -= c
            distribute(
                idx + 1,
                [remaining[i] - split[i] * k for i in range(s)],
                [assigned[i] + [k] * split[i] for i in range(s)],
                w,
            )

    distribute(0, sizes, [[] for _ in range(s)], 1)
    return total


def factored_character_value(
    alpha: Partition, r: int, gamma: Partition, lam: Partition
) -> int:
    """r-sign times core value on lam times quotient value on gamma.

    Equals character_value(alpha, merged) where merged is the cycle type
    made of the parts of lam together with r times each part of gamma;
    gamma must be a partition of the r-weight of alpha.
    """
    dec = r_decompose(alpha, r)
    if sum(gamma) != dec.weight:
        raise ValueError(f"{gamma} is not a partition of the {r}-weight {dec.weight}")
    if sum(lam) != sum(alpha) - r * dec.weight:
        raise ValueError(f"{lam} does not have size {sum(alpha) - r * dec.weight}")
    return (
        dec.sign
        * character_value(dec.core, lam)
        * multi_character_value(dec.quotient, gamma)
    )


def merged_cycle_type(r: int, gamma: Partition, lam: Partition) -> Partition:
    """Cycle type with one r*g cycle per part g of gamma plus the parts of lam."""
    return tuple(sorted([r * g for g in gamma] + list(lam), reverse=True))


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n, rows and columns in enumeration order."""

    n: int
    labels: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "n": self.n,
                "labels": [list(l) for l in self.labels],
                "values": [list(row) for row in self.values],
            }
        )

    def to_text(self) -> str:
        headers = [format_partition(b) for b in self.labels]
        rows = [format_partition(a) for a in self.labels]
        cells = [[str(v) for v in row] for row in self.values]
        widths = [
            max(len(headers[j]), max(len(cells[i][j]) for i in range(len(rows))))
            for j in range(len(headers))
        ]
        label_w = max(len(r) for r in rows)
        lines = [" " * label_w + "  " + "  ".join(h.rjust(widths[j]) for j, h in enumerate(headers))]
        for i, r in enumerate(rows):
            lines.append(r.ljust(label_w) + "  " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(len(headers))))
        return "\n".join(lines)


def character_table(n: int, *, limit: int = TABLE_GUARD) -> CharacterTable:
    """Character table of S_n; guarded because the size grows like p(n)^2."""
    if n > limit:
        raise ValueError(f"table for n={n} exceeds the guard ({limit}); raise limit= to override")
    labels = tuple(enumerate_partitions(n))
    values = tuple(
        tuple(character_value(a, b) for b in labels) for a in labels
    )
    return CharacterTable(n=n, labels=labels, values=values)


def clear_caches() -> None:
    """Drop the process-wide character memo tables."""
    _char.cache_clear()
    _multi.cache_clear()
