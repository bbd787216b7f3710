"""Published Cayley tables of the six systems, transcribed cell by cell.

The transcription is kept verbatim, including the WW row whose signs at
``(e3,e3)``, ``(e3,e4)``, ``(e4,e3)`` and ``(e4,e4)`` disagree with the
published multiplication rule for the same system.  :func:`verify_printed_table`
reports such disagreements rather than hiding them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import CayleyTable, Kind, SignedBasis, builtin_system

PRINTED_CAYLEY_TABLES: dict[Kind, tuple[tuple[str, ...], ...]] = {
    Kind.H: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "-e1", "e4", "-e3"),
        ("e3", "-e4", "-e1", "e2"),
        ("e4", "e3", "-e2", "-e1"),
    ),
    Kind.AH: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "-e1", "e4", "-e3"),
        ("e3", "-e4", "e1", "-e2"),
        ("e4", "e3", "e2", "e1"),
    ),
    Kind.CD: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "-e1", "e4", "-e3"),
        ("e3", "-e4", "0", "0"),
        ("e4", "e3", "0", "0"),
    ),
    Kind.WW: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "e1", "e4", "e3"),
        ("e3", "-e4", "-e1", "e2"),
        ("e4", "-e3", "-e2", "e1"),
    ),
    Kind.DD: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "0", "e4", "0"),
        ("e3", "-e4", "0", "0"),
        ("e4", "0", "0", "0"),
    ),
    Kind.WD: (
        ("e1", "e2", "e3", "e4"),
        ("e2", "e1", "e4", "e3"),
        ("e3", "-e4", "0", "0"),
        ("e4", "-e3", "0", "0"),
    ),
}


@dataclass(frozen=True)
class Discrepancy:
    row: int
    col: int
    printed: SignedBasis
    generated: SignedBasis

    def __str__(self) -> str:
        return f"(e{self.row},e{self.col}): printed {self.printed}, generated {self.generated}"


@dataclass(frozen=True)
class TableReport:
    kind: Kind
    exact_match: bool
    sign_flip_match: bool
    discrepancies: list[Discrepancy] = field(default_factory=list)
    #: The basis sign flip (s2, s3, s4) that reconciles the tables, if any.
    flip: tuple[int, int, int] | None = None


def printed_table(kind: Kind | str) -> CayleyTable:
    return CayleyTable.from_text(PRINTED_CAYLEY_TABLES[Kind(kind)])


def _flipped(table: CayleyTable, signs: tuple[int, int, int]) -> CayleyTable:
    # Substitute e_i -> s_i e_i: entry (i, j) = s_i s_j s_k * (e_i e_j), where e_k is the product.
    s = (1,) + signs
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            p = table.entries[i][j]
            row.append(p * (s[i] * s[j] * s[p.index - 1]) if p.sign else p)
        rows.append(tuple(row))
    return CayleyTable(tuple(rows))


def verify_printed_table(kind: Kind | str) -> TableReport:
    """Compare the generated table of a named system with its published table."""
    kind = builtin_system(kind).kind
    generated = builtin_system(kind).table
    printed = printed_table(kind)
    diffs = [
        Discrepancy(i + 1, j + 1, printed.entries[i][j], generated.entries[i][j])
        for i, j in product(range(4), range(4))
        if printed.entries[i][j] != generated.entries[i][j]
    ]
    flip = None
    for signs in product((1, -1), repeat=3):
        if _flipped(generated, signs) == printed:
            flip = signs
            break
    return TableReport(kind, not diffs, flip is not None, diffs, flip)
