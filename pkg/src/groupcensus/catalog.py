"""Bundled catalog of every isomorphism type of group of order at most 24.

Entries are stored as permutation generator lists in a plain-text data file
and validated at load: each entry must close to its stated order, entries of
equal order must be pairwise non-isomorphic, and the per-order counts must
match the known enumeration of small groups.  Together those checks make
the catalog provably complete through order 24.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .census import CensusReport, Signature, census
from .groups import GroupTable, Permutation, from_permutations
from .isomorphism import is_isomorphic
from .report import CheckResult, VerificationReport

MAX_CATALOG_ORDER = 24

# Known number of isomorphism types for each order 1..24.
EXPECTED_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1,
    12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5,
    21: 2, 22: 2, 23: 1, 24: 15,
}

DATA_FILE = "groups_le24.txt"


class CatalogError(ValueError):
    """The catalog data file is malformed or fails validation."""


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog group: its order, stable index, label and generators."""

    order: int
    index: int
    label: str
    generators: tuple[Permutation, ...]

    def build(self) -> GroupTable:
        """Close the generators and return the validated group table."""
        table = from_permutations(self.generators, name=self.label)
        if table.order != self.order:
            raise CatalogError(
                f"catalog entry {self.label}: generators close to order"
                f" {table.order}, stated {self.order}")
        return table


def _parse_line(line: str, lineno: int) -> CatalogEntry:
    parts = line.split(maxsplit=3)
    if len(parts) != 4 or not parts[3].startswith("gens="):
        raise CatalogError(f"line {lineno}: expected"
                           f" 'order index label gens=...', got {line!r}")
    try:
        order = int(parts[0])
        index = int(parts[1])
    except ValueError as err:
        raise CatalogError(f"line {lineno}: bad order/index: {err}") from None
    gens_text = parts[3][len("gens="):].strip()
    chunks = [c.strip() for c in gens_text.split(";") if c.strip()]
    if not chunks:
        raise CatalogError(f"line {lineno}: no generators given")
    perms = [Permutation.from_cycles(c) for c in chunks]
    degree = max(p.degree for p in perms)
    return CatalogEntry(order, index, parts[2],
                        tuple(p.extended(degree) for p in perms))


@lru_cache(maxsize=1)
def load_catalog() -> tuple[CatalogEntry, ...]:
    """Parse the bundled data file; ordered by (order, index)."""
    text = resources.files("groupcensus.data").joinpath(DATA_FILE).read_text()
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_parse_line(line, lineno))
    ordered = sorted(entries, key=lambda e: (e.order, e.index))
    if [(e.order, e.index) for e in ordered] != [(e.order, e.index) for e in entries]:
        raise CatalogError("catalog entries out of (order, index) order")
    return tuple(entries)


@lru_cache(maxsize=1)
def _built_catalog() -> tuple[tuple[CatalogEntry, GroupTable, CensusReport], ...]:
    out = []
    for entry in load_catalog():
        table = entry.build()
        out.append((entry, table, census(table)))
    return tuple(out)


def catalog_tables() -> list[tuple[CatalogEntry, GroupTable, CensusReport]]:
    """Every catalog entry with its built table and census, cached."""
    return list(_built_catalog())


def catalog_search(max_order: int, delta: int | None = None,
                   sigma: Signature | None = None,
                   ) -> list[tuple[CatalogEntry, CensusReport]]:
    """Catalog entries up to max_order matching the optional filters."""
    if max_order > MAX_CATALOG_ORDER:
        raise ValueError(
            f"catalog covers orders up to {MAX_CATALOG_ORDER}, got {max_order}")
    hits = []
    for entry, _table, report in catalog_tables():
        if entry.order > max_order:
            continue
        if delta is not None and report.delta != delta:
            continue
        if sigma is not None and report.signature != sigma:
            continue
        hits.append((entry, report))
    return hits


def catalog_validate() -> VerificationReport:
    """Check closure orders, per-order counts and pairwise non-isomorphism.

    With the counts pinned to the known enumeration of groups of order
    <= 24, pairwise non-isomorphism within each order proves the catalog
    hits every isomorphism type exactly once.
    """
    checks: list[CheckResult] = []
    try:
        built = catalog_tables()
    except (CatalogError, ValueError) as err:
        checks.append(CheckResult("catalog_load", False, str(err)))
        return VerificationReport(sweep=checks)

    checks.append(CheckResult(
        "catalog_load", True, f"{len(built)} entries built and censused"))

    by_order: dict[int, list[tuple[CatalogEntry, GroupTable]]] = {}
    for entry, table, _report in built:
        by_order.setdefault(entry.order, []).append((entry, table))

    counts_ok = True
    for order, expected in EXPECTED_GROUP_COUNTS.items():
        actual = len(by_order.get(order, []))
        if actual != expected:
            counts_ok = False
            checks.append(CheckResult(
                f"count_order_{order}", False,
                f"expected {expected} groups of order {order}, found {actual}"))
    checks.append(CheckResult(
        "per_order_counts", counts_ok,
        "counts match the known enumeration for orders 1..24" if counts_ok
        else "per-order count mismatch"))

    distinct_ok = True
    for order, members in sorted(by_order.items()):
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if is_isomorphic(members[i][1], members[j][1]):
                    distinct_ok = False
                    checks.append(CheckResult(
                        f"duplicate_order_{order}", False,
                        f"{members[i][0].label} and {members[j][0].label}"
                        f" are isomorphic"))
    checks.append(CheckResult(
        "pairwise_distinct", distinct_ok,
        "entries of equal order are pairwise non-isomorphic" if distinct_ok
        else "duplicate isomorphism type found"))

    return VerificationReport(sweep=checks)
