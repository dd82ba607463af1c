"""Published S(b1, b2) tables and classical closed forms.

Exceptional tables are stored in their compact set notation:
``"a, b..c"`` means ``{a, b, b+1, ..., c}`` and a ``^`` marks an omitted
element, so ``"1..^2..^14..15"`` is ``{1, 3, 4, ..., 13, 15}``.  For E6, E7
and E8 only pairs ``b1 <= b2`` are listed; the other half follows by
symmetry.

These are transcriptions used for validation.  They are not guaranteed to
agree with the computed sets: see ``tests/test_acceptance.py`` for the
entries that currently differ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .lie_data import Family, LieType

__all__ = ["expand_set_notation", "published_table", "reference_set",
           "classical_closed_form", "EXCEPTIONAL_TABLES"]


def expand_set_notation(text: str) -> tuple[Fraction, ...]:
    """Expand ``"3/2, 7/2..13/2, 17/2"`` style notation to sorted values.

    >>> [str(x) for x in expand_set_notation("2..^4..8")]
    ['2', '3', '5', '6', '7', '8']
    """
    out: set[Fraction] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        tokens = [t.strip() for t in part.split("..")]
        hats = {Fraction(t[1:]) for t in tokens if t.startswith("^")}
        values = [Fraction(t.lstrip("^")) for t in tokens]
        if len(values) == 1:
            if not hats:
                out.add(values[0])
            continue
        lo, hi = values[0], values[-1]
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError(f"range {part!r} is not increasing")
        if any((v - lo).denominator != 1 for v in values):
            raise ValueError(f"range {part!r} does not step by 1")
        x = lo
        while x <= hi:
            if x not in hats:
                out.add(x)
            x += 1
    return tuple(sorted(out))


EXCEPTIONAL_TABLES: dict[Family, dict[tuple[int, int], str]] = {
    Family.E6: {
        (1, 1): "1, 4", (1, 2): "5/2, 9/2", (1, 3): "3/2, 7/2, 9/2",
        (1, 4): "2, 3, 4, 5", (1, 5): "5/2, 7/2, 11/2", (1, 6): "3, 6",
        (2, 2): "1, 3, 4, 6", (2, 3): "2, 3, 4, 5",
        (2, 4): "3/2, 5/2, 7/2, 9/2, 11/2", (2, 5): "2, 3, 4, 5",
        (2, 6): "5/2, 9/2", (3, 3): "1, 2, 3, 4, 5",
        (3, 4): "3/2, 5/2, 7/2, 9/2, 11/2", (3, 5): "2, 3, 4, 5, 6",
        (3, 6): "5/2, 7/2, 11/2", (4, 4): "1, 2, 3, 4, 5, 6",
        (4, 5): "3/2, 5/2, 7/2, 9/2, 11/2", (4, 6): "2, 3, 4, 5",
        (5, 5): "1, 2, 3, 4, 5", (5, 6): "3/2, 7/2, 9/2", (6, 6): "1, 4",
    },
    Family.E7: {
        (1, 1): "1, 4, 6, 9", (1, 2): "5/2, 9/2, 11/2, 15/2",
        (1, 3): "3/2, 7/2..13/2, 17/2", (1, 4): "2..8", (1, 5): "5/2..15/2",
        (1, 6): "3, 4, 6, 7", (1, 7): "7/2, 13/2",
        (2, 2): "1, 3..7, 9", (2, 3): "2..8", (2, 4): "3/2..17/2",
        (2, 5): "2..8", (2, 6): "5/2..15/2", (2, 7): "3, 5, 7",
        (3, 3): "1..9", (3, 4): "3/2..17/2", (3, 5): "2..8",
        (3, 6): "5/2..15/2", (3, 7): "3, 4, 6, 7",
        (4, 4): "1..9", (4, 5): "3/2..17/2", (4, 6): "2..8", (4, 7): "5/2..15/2",
        (5, 5): "1..9", (5, 6): "3/2..17/2", (5, 7): "2, 4, 5, 6, 8",
        (6, 6): "1, 2, 4, 5, 6, 8, 9", (6, 7): "3/2, 9/2, 11/2, 17/2",
        (7, 7): "1, 5, 9",
    },
    Family.E8: {
        (1, 1): "1, 4, 6, 7, 9, 10, 12, 15",
        (1, 2): "5/2..^7/2..^25/2..27/2",
        (1, 3): "3/2..^27/2..29/2",
        (1, 4): "2..14", (1, 5): "5/2..27/2", (1, 6): "3..13",
        (1, 7): "7/2..^11/2..^21/2..25/2", (1, 8): "4, 7, 9, 12",
        (2, 2): "1..^2..^14..15", (2, 3): "2..14", (2, 4): "3/2..29/2",
        (2, 5): "2..14", (2, 6): "5/2..27/2", (2, 7): "3..13",
        (2, 8): "7/2, 11/2, 15/2, 17/2, 21/2, 25/2",
        (3, 3): "1..15", (3, 4): "3/2..29/2", (3, 5): "2..14",
        (3, 6): "5/2..27/2", (3, 7): "3..13",
        (3, 8): "7/2..^11/2..^21/2..25/2",
        (4, 4): "1..15", (4, 5): "3/2..29/2", (4, 6): "2..14",
        (4, 7): "5/2..27/2", (4, 8): "3..13",
        (5, 5): "1..15", (5, 6): "3/2..29/2", (5, 7): "2..14",
        (5, 8): "5/2..^7/2..^25/2..27/2",
        (6, 6): "1..15",
        # printed with a comma before the first hat; read as one range
        (6, 7): "3/2..^7/2..^15/2..^25/2..29/2",
        (6, 8): "2, 5..^8..11, 14",
        (7, 7): "1, 2, 5..^8..11, 14, 15",
        (7, 8): "3/2, 11/2, 13/2, 19/2, 21/2, 29/2",
        (8, 8): "1, 6, 10, 15",
    },
    Family.F4: {
        (1, 1): "1, 4, 5, 8", (1, 2): "2..7", (1, 3): "2..7",
        (1, 4): "5/2, 7/2, 11/2, 13/2",
        (2, 1): "2..7", (2, 2): "1..8", (2, 3): "1..8", (2, 4): "3/2..15/2",
        (3, 1): "3, 4, 6, 7", (3, 2): "2..^4..8", (3, 3): "1..9",
        (3, 4): "3/2..^5/2..^15/2..17/2",
        (4, 1): "7/2, 13/2", (4, 2): "5/2, 9/2, 11/2, 15/2",
        (4, 3): "3/2..^5/2..^15/2..17/2", (4, 4): "1, 4, 6, 9",
    },
    Family.G2: {
        (1, 1): "3, 4, 5, 6", (1, 2): "1/2, 3/2, 5/2, 7/2, 9/2",
        (2, 1): "9/2, 13/2", (2, 2): "1, 3, 4, 6",
    },
}

_SYMMETRIC = (Family.E6, Family.E7, Family.E8)


def published_table(family: Family) -> dict[tuple[int, int], tuple[Fraction, ...]]:
    """Full expanded table, with the symmetric half filled in for type E."""
    raw = EXCEPTIONAL_TABLES[Family(family)]
    table = {k: expand_set_notation(v) for k, v in raw.items()}
    if family in _SYMMETRIC:
        for (b1, b2), v in list(table.items()):
            table.setdefault((b2, b1), v)
    return table


def _half(x) -> Fraction:
    return Fraction(x, 2)


def classical_closed_form(t: LieType, b1: int, b2: int) -> tuple[Fraction, ...]:
    """Closed-form S(b1, b2) for types A-D, transcribed literally."""
    l, fam = t.rank, t.family
    s: set[Fraction] = set()
    if fam is Family.A:
        for k in range(1, min(b1, l - b2 + 1) + 1):
            s.add(_half(abs(b2 - b1)) + k)
    elif fam is Family.B:
        if b1 < l and b2 < l:
            for r in range(min(b1, b2)):
                s |= {Fraction(abs(b1 - b2) + 2 + 2 * r), Fraction(2 * l - (b1 + b2) + 1 + 2 * r)}
        elif b1 == l and b2 < l:
            s = {Fraction(l - b2 + 2 + 2 * r) for r in range(b2)}
        elif b1 < l and b2 == l:
            for r in range(b1):
                s |= {Fraction(l - b1 + 1 + r), Fraction(l - b1 + r)}
        else:
            s = {Fraction(x) for x in range(1, 2 * l, 2)}
    elif fam is Family.C:
        if b1 < l and b2 < l:
            for r in range(min(b1, b2)):
                s |= {_half(abs(b1 - b2)) + 1 + r, l + 2 + r - _half(b1 + b2)}
        elif b1 == l and b2 < l:
            for r in range(b2):
                s |= {_half(l - b2 + 1) + 1 + r, _half(l - b2 - 1) + 1 + r}
        elif b1 < l and b2 == l:
            s = {_half(l - b1 + 1) + 2 + r for r in range(b1)}
        else:
            s = {Fraction(x) for x in range(2, l + 2)}
    elif fam is Family.D:
        odd = l % 2
        if b1 <= l - 2 and b2 <= l - 2:
            for r in range(min(b1, b2)):
                s |= {_half(abs(b1 - b2)) + 1 + r, l + r - _half(b1 + b2)}
        elif b1 >= l - 1 and b2 >= l - 1:
            if b1 != b2:
                s = {Fraction(x) for x in range(2, l - 2 + odd + 1, 2)}
            else:
                s = {Fraction(x) for x in range(1, l - 1 - odd + 1, 2)}
        else:
            b = min(b1, b2)
            s = {_half(l - 1 - b) + 1 + r for r in range(b)}
    else:
        raise ValueError(f"{t} is not classical")
    return tuple(sorted(s))


def reference_set(t: LieType, b1: int, b2: int) -> Optional[tuple[Fraction, ...]]:
    """Reference S(b1, b2) for any supported type, or ``None`` if unlisted."""
    if t.family in EXCEPTIONAL_TABLES:
        return published_table(t.family).get((b1, b2))
    return classical_closed_form(t, b1, b2)
