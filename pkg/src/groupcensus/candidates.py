"""Enumeration of all a-priori possible signatures for a given delta.

Each cyclic-subgroup order d > 2 contributes n_d * (phi(d) - 1) to delta,
phi(d) - 1 is odd for d > 2, and distinct orders contribute independently.
So the possible signatures for a given delta come from the integer
partitions of delta: each part p splits as p = n * m with m odd, realized
by n cyclic subgroups of any order d with phi(d) = m + 1, the chosen orders
pairwise distinct across parts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import Signature, euler_phi, phi_inverse

MAX_DELTA = 64
ENUMERATION_DELTA_BOUND = 16


def integer_partitions(delta: int) -> list[tuple[int, ...]]:
    """All partitions of delta, parts non-increasing, reverse-lexicographic."""
    if not 1 <= delta <= MAX_DELTA:
        raise ValueError(f"delta must be in 1..{MAX_DELTA}, got {delta}")

    def rec(n: int, max_part: int) -> list[tuple[int, ...]]:
        if n == 0:
            return [()]
        out = []
        for k in range(min(n, max_part), 0, -1):
            out.extend((k,) + rest for rest in rec(n - k, k))
        return out

    return rec(delta, delta)


def expand_part(p: int) -> list[tuple[int, int]]:
    """All (count, order) readings of one part p of the partition.

    For every odd divisor m of p and every order d with phi(d) = m + 1 the
    part can stand for p/m cyclic subgroups of order d.
    """
    if p < 1:
        raise ValueError(f"part must be positive, got {p}")
    options = []
    for m in range(1, p + 1, 2):
        if p % m:
            continue
        for d in phi_inverse(m + 1):
            options.append((p // m, d))
    return options


@dataclass(frozen=True)
class CandidateRow:
    """One way a partition realizes a signature: a (count, order) per part."""

    partition: tuple[int, ...]
    choices: tuple[tuple[int, int], ...]  # (count, order) aligned with partition

    @property
    def factorization(self) -> tuple[tuple[int, int], ...]:
        """Per part the pair (count, phi(order) - 1)."""
        return tuple((count, euler_phi(d) - 1) for count, d in self.choices)

    @property
    def signature(self) -> Signature:
        return Signature.from_iterable(
            d for count, d in self.choices for _ in range(count))


@dataclass(frozen=True)
class Candidate:
    """A possible signature together with every partition row producing it."""

    signature: Signature
    rows: tuple[CandidateRow, ...]


def enumerate_candidates(delta: int) -> list[Candidate]:
    """Every signature consistent with the totient identity for this delta.

    Output is sorted by signature and deterministic; rows from different
    partitions that coincide as multisets are merged.
    """
    if not 1 <= delta <= ENUMERATION_DELTA_BOUND:
        raise ValueError(
            f"delta must be in 1..{ENUMERATION_DELTA_BOUND}, got {delta}")
    by_signature: dict[Signature, list[CandidateRow]] = {}
    for partition in integer_partitions(delta):
        options = [expand_part(p) for p in partition]

        def assign(i: int, chosen: list[tuple[int, int]], used: set[int]) -> None:
            if i == len(partition):
                row = CandidateRow(partition, tuple(chosen))
                by_signature.setdefault(row.signature, []).append(row)
                return
            for count, d in options[i]:
                if d in used:
                    continue
                # equal parts share an option list; force ascending order on
                # their chosen d so each assignment is produced exactly once
                if i > 0 and partition[i] == partition[i - 1] and d < chosen[-1][1]:
                    continue
                chosen.append((count, d))
                used.add(d)
                assign(i + 1, chosen, used)
                chosen.pop()
                used.remove(d)

        assign(0, [], set())
    return [Candidate(sig, tuple(rows))
            for sig, rows in sorted(by_signature.items())]
