"""Cyclic-subgroup census: the counts n_d, delta, and the signature sigma.

For a finite group G, delta(G) is |G| minus the number of cyclic subgroups.
The signature sigma(G) records the orders (> 2) of the cyclic subgroups as a
sorted multiset; orders 1 and 2 are omitted because a cyclic group of order
d has phi(d) generators and phi(d) = 1 exactly for d in {1, 2}, so those
subgroups never contribute to delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .groups import GroupTable, SubgroupSet


def euler_phi(d: int) -> int:
    """Euler totient: the number of generators of a cyclic group of order d."""
    if d < 1:
        raise ValueError(f"totient argument must be positive, got {d}")
    result = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def phi_inverse(m: int) -> list[int]:
    """All d with phi(d) = m.

    phi(d) >= sqrt(d/2), so scanning d <= 2*m^2 is exhaustive.  Empty for
    odd m > 1 since the totient is even past d = 2.
    """
    if m < 1:
        raise ValueError(f"totient value must be positive, got {m}")
    return [d for d in range(1, 2 * m * m + 1) if euler_phi(d) == m]


@dataclass(frozen=True, order=True)
class Signature:
    """Sorted multiset of cyclic-subgroup orders greater than 2."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e <= 2 for e in self.entries):
            raise ValueError(f"signature entries must exceed 2: {self.entries}")
        if list(self.entries) != sorted(self.entries):
            raise ValueError(f"signature entries must be sorted: {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "Signature":
        return cls(tuple(sorted(entries)))

    @classmethod
    def from_iterable(cls, entries: Iterable[int]) -> "Signature":
        return cls(tuple(sorted(entries)))

    def multiplicity(self, d: int) -> int:
        return self.entries.count(d)

    @property
    def delta(self) -> int:
        """The delta forced by the totient identity: sum of phi(d) - 1."""
        return sum(euler_phi(d) - 1 for d in self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, d: int) -> bool:
        return d in self.entries

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class CensusReport:
    """Per-order cyclic subgroup counts and the derived invariants."""

    group_order: int
    n_d: tuple[tuple[int, int], ...]  # (order d, count) pairs, d ascending
    total_cyclic: int
    delta: int
    signature: Signature

    def count(self, d: int) -> int:
        return dict(self.n_d).get(d, 0)

    def to_json_dict(self) -> dict:
        return {
            "order": self.group_order,
            "n_d": {str(d): count for d, count in self.n_d},
            "cyclic_count": self.total_cyclic,
            "delta": self.delta,
            "sigma": list(self.signature.entries),
        }


def cyclic_subgroups(g: GroupTable) -> set[SubgroupSet]:
    """The set {<x> : x in G}, deduplicated by member set."""
    found: set[tuple[int, ...]] = set()
    for x in range(g.order):
        members = [0]
        acc = x
        while acc != 0:
            members.append(acc)
            acc = g.product[acc][x]
        found.add(tuple(sorted(members)))
    return {SubgroupSet(g, members) for members in found}


def census(g: GroupTable) -> CensusReport:
    """Full cyclic-subgroup census of a group table."""
    counts: dict[int, int] = {}
    for sub in cyclic_subgroups(g):
        counts[sub.order] = counts.get(sub.order, 0) + 1
    n_d = tuple(sorted(counts.items()))
    total = sum(counts.values())
    delta = g.order - total
    sigma = Signature.from_iterable(
        d for d, count in n_d for _ in range(count) if d > 2)
    report = CensusReport(g.order, n_d, total, delta, sigma)
    # the two totient identities are structural; recheck them on every census
    assert sum(count * euler_phi(d) for d, count in n_d) == g.order
    assert sum(count * (euler_phi(d) - 1) for d, count in n_d) == delta
    assert sigma.delta == delta
    return report


def count_solutions(g: GroupTable, n: int) -> int:
    """Number of x in G with x^n = identity.

    By Frobenius' theorem this is a multiple of n whenever n divides |G|,
    which makes it a sharp cross-check on constructed tables.
    """
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    return sum(1 for x in range(g.order) if g.power(x, n) == 0)
