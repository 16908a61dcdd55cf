"""Integer partitions, coarsenings and lift counts for stratum covers.

Partitions are plain tuples of positive integers in weakly descending order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x < 1 for x in p):
        raise ValueError(f"parts must be positive, got {p}")
    return p


def _descending(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_descending(n, n))


def coarsenings(lam: Partition) -> list[Partition]:
    """Every partition obtained by summing disjoint groups of rows of ``lam``.

    ``lam`` itself is excluded. Rows are added one at a time to either a new
    block or an existing one; states are multisets of block sums so the
    search stays small even for many equal rows.
    """
    lam = as_partition(lam)
    states: set[Partition] = {()}
    for part in lam:
        nxt: set[Partition] = set()
        for st in states:
            nxt.add(as_partition(st + (part,)))
            for i, v in enumerate(st):
                if i and st[i - 1] == v:
                    continue
                nxt.add(as_partition(st[:i] + (v + part,) + st[i + 1:]))
        states = nxt
    states.discard(lam)
    return sorted(states, reverse=True)


@dataclass(frozen=True)
class LiftScheme:
    """Cover shape for a stratum: which rows of the partition are unordered.

    Rows listed in ``symmetrized_rows`` are interchangeable (they sit in a
    symmetric product); all other rows are ordered points.
    """

    partition: Partition
    symmetrized_rows: frozenset[int] = frozenset()

    def __post_init__(self):
        p = as_partition(self.partition)
        object.__setattr__(self, "partition", p)
        rows = frozenset(self.symmetrized_rows)
        if any(not 0 <= i < len(p) for i in rows):
            raise ValueError("symmetrized row index out of range")
        if len({p[i] for i in rows}) > 1:
            raise ValueError("symmetrized rows must share one part value")
        object.__setattr__(self, "symmetrized_rows", rows)

    @classmethod
    def standard(cls, lam: Partition) -> "LiftScheme":
        """Rows of length 1 symmetrized, longer rows ordered."""
        lam = as_partition(lam)
        return cls(lam, frozenset(i for i, v in enumerate(lam) if v == 1))

    @classmethod
    def ordered(cls, lam: Partition) -> "LiftScheme":
        return cls(as_partition(lam))

    @classmethod
    def symmetric(cls, lam: Partition) -> "LiftScheme":
        """Every row symmetrized; needs all parts equal."""
        lam = as_partition(lam)
        return cls(lam, frozenset(range(len(lam))))


def lift_count(scheme: LiftScheme, mu: Partition) -> int:
    """Number of ways a point of ``S_mu`` lifts to the cover of ``scheme``.

    Counts maps from the rows of the scheme's partition onto the rows of
    ``mu`` whose fibre sums reproduce ``mu``, identifying maps that differ by
    a permutation of symmetrized rows. Rows of ``mu`` are distinct points and
    therefore distinguishable.
    """
    lam = scheme.partition
    mu = as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    ordered_parts = tuple(v for i, v in enumerate(lam) if i not in scheme.symmetrized_rows)
    sym_value = lam[min(scheme.symmetrized_rows)] if scheme.symmetrized_rows else None
    return _count(ordered_parts, mu, sym_value)


@lru_cache(maxsize=None)
def _count(parts: tuple[int, ...], capacity: tuple[int, ...], sym_value: int | None) -> int:
    if not parts:
        if sym_value is None:
            return int(all(c == 0 for c in capacity))
        return int(all(c % sym_value == 0 for c in capacity))
    head, rest = parts[0], parts[1:]
    total = 0
    for j, cap in enumerate(capacity):
        if cap >= head:
            total += _count(rest, capacity[:j] + (cap - head,) + capacity[j + 1:], sym_value)
    return total


def aut_factor(lam: Partition, threshold: int = 0) -> int:
    """Product of ``mult(v)!`` over part values ``v > threshold``.

    ``threshold=0`` is the full automorphism count of the partition;
    ``threshold=1`` is the degree of a cover that orders every row except
    the rows of length one.
    """
    counts = Counter(as_partition(lam))
    return prod(factorial(m) for v, m in counts.items() if v > threshold)


def lift_count_bruteforce(lam: Partition, mu: Partition) -> int:
    """Reference count of ordered lifts via set partitions of the rows of ``lam``.

    Each set partition whose block sums equal ``mu`` contributes the number
    of bijections between blocks and rows of ``mu`` with matching sums.
    """
    return lift_table_bruteforce(lam).get(as_partition(mu), 0)


def lift_table_bruteforce(lam: Partition) -> dict[Partition, int]:
    lam = as_partition(lam)
    table: Counter[Partition] = Counter()
    for blocks in _set_partitions(list(range(len(lam)))):
        sums = as_partition(sum(lam[i] for i in b) for b in blocks)
        table[sums] += prod(factorial(m) for m in Counter(sums).values())
    return dict(table)


def lift_count_orbits_bruteforce(scheme: LiftScheme, mu: Partition) -> int:
    """Reference count for a scheme with symmetrized rows.

    Enumerates ordered lifts as labelled maps rows -> rows of ``mu`` and
    counts them up to permutations of the symmetrized rows.
    """
    lam = scheme.partition
    mu = as_partition(mu)
    sym = sorted(scheme.symmetrized_rows)
    seen = set()
    for blocks in _set_partitions(list(range(len(lam)))):
        sums = [sum(lam[i] for i in b) for b in blocks]
        if as_partition(sums) != mu:
            continue
        for targets in permutations(range(len(mu))):
            if any(sums[k] != mu[t] for k, t in enumerate(targets)):
                continue
            label = [0] * len(lam)
            for b, t in zip(blocks, targets):
                for i in b:
                    label[i] = t
            ordered = tuple(label[i] for i in range(len(lam)) if i not in scheme.symmetrized_rows)
            seen.add((ordered, tuple(sorted(label[i] for i in sym))))
    return len(seen)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller
