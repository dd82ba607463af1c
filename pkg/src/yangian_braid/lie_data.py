"""Cartan data for the simple Lie algebras A-G.

Cartan matrices follow the convention ``a_ij = <alpha_i^vee, alpha_j>``, so
that ``d_i * a_ij`` is symmetric when ``d_i`` is half the squared length of
``alpha_i`` (short roots have ``d_i = 1``).  Node numbering is Bourbaki's;
:func:`validate_numbering` checks that choice against the reference words and
tables shipped in :mod:`yangian_braid.reference`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Optional

__all__ = [
    "Family", "LieType", "LieDatum", "LieDataError", "NumberingReport",
    "parse_lie_type", "make_lie_datum", "relabel", "numbering_candidates",
    "validate_numbering", "select_numbering", "braid_length",
    "num_positive_roots", "ALL_FAMILIES",
]


class LieDataError(ValueError):
    """Invalid Lie type or numbering configuration."""


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    G2 = "G2"


_FIXED_RANK = {Family.E6: 6, Family.E7: 7, Family.E8: 8, Family.F4: 4, Family.G2: 2}
_MIN_RANK = {Family.A: 1, Family.B: 2, Family.C: 2, Family.D: 4}

ALL_FAMILIES = tuple(Family)


@dataclass(frozen=True)
class LieType:
    family: Family
    rank: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        fam = self.family
        if fam in _FIXED_RANK:
            if self.rank != _FIXED_RANK[fam]:
                raise LieDataError(
                    f"{fam.value} has fixed rank {_FIXED_RANK[fam]}, got {self.rank}")
        elif self.rank < _MIN_RANK[fam]:
            raise LieDataError(
                f"type {fam.value} requires rank >= {_MIN_RANK[fam]}, got {self.rank}")

    @property
    def name(self) -> str:
        if self.family in _FIXED_RANK:
            return self.family.value
        return f"{self.family.value}{self.rank}"

    def __str__(self):
        return self.name


def parse_lie_type(family: str, rank: Optional[int] = None) -> LieType:
    """Parse ``"G2"``, ``"A4"`` or ``("A", 4)`` into a :class:`LieType`."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", family)
    if not m:
        raise LieDataError(f"unrecognised Lie family {family!r}")
    letter, digits = m.group(1).upper(), m.group(2)
    if letter in "EFG":
        if not digits:
            example = {"E": "E6", "F": "F4", "G": "G2"}[letter]
            raise LieDataError(f"exceptional family {letter} needs its rank, e.g. {example}")
        name = letter + digits
        if name not in Family.__members__:
            raise LieDataError(f"unrecognised exceptional family {name!r}")
        if rank is not None and rank != int(digits):
            raise LieDataError(f"rank {rank} conflicts with {name}")
        return LieType(Family(name), int(digits))
    if digits and rank is not None and int(digits) != rank:
        raise LieDataError(f"rank {rank} conflicts with {family!r}")
    if digits:
        rank = int(digits)
    if rank is None:
        raise LieDataError(f"classical family {letter} needs a rank")
    return LieType(Family(letter), rank)


@dataclass(frozen=True)
class LieDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    numbering_tag: str = "bourbaki"

    def __post_init__(self):
        l = self.rank
        A, d = self.cartan, self.symmetrizers
        if len(A) != l or any(len(row) != l for row in A) or len(d) != l:
            raise LieDataError("Cartan matrix and symmetrizers must match the rank")
        for i in range(l):
            if A[i][i] != 2:
                raise LieDataError(f"a_{i + 1}{i + 1} must be 2")
            for j in range(l):
                if i == j:
                    continue
                if A[i][j] not in (0, -1, -2, -3):
                    raise LieDataError(f"a_{i + 1}{j + 1} = {A[i][j]} not in {{0,-1,-2,-3}}")
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise LieDataError(f"a_{i + 1}{j + 1} and a_{j + 1}{i + 1} must vanish together")
                if A[i][j] * A[j][i] not in (0, 1, 2, 3):
                    raise LieDataError(f"a_{i + 1}{j + 1} a_{j + 1}{i + 1} not in {{0,1,2,3}}")
                if d[i] * A[i][j] != d[j] * A[j][i]:
                    raise LieDataError("DA is not symmetric")
        if any(x <= 0 for x in d):
            raise LieDataError("symmetrizers must be positive")
        g = 0
        for x in d:
            g = gcd(g, x)
        if g != 1:
            raise LieDataError("symmetrizers must be coprime")

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def name(self) -> str:
        return self.lie_type.name

    @property
    def nodes(self) -> range:
        """1-based node labels."""
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        """Cartan entry with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def d(self, i: int) -> int:
        """Symmetrizer with a 1-based index."""
        return self.symmetrizers[i - 1]

    def check_node(self, i: int) -> int:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise LieDataError(f"node {i!r} out of range 1..{self.rank} for {self.name}")
        return i

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        """Ordered pairs ``(i, j)``, ``i != j``, with ``a_ij != 0``."""
        return [(i, j) for i in self.nodes for j in self.nodes
                if i != j and self.a(i, j) != 0]

    def to_json(self) -> dict:
        return {
            "family": self.name,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "d": list(self.symmetrizers),
            "numbering": self.numbering_tag,
        }


def _bourbaki_graph(t: LieType) -> tuple[list[tuple[int, int]], list[int]]:
    """Dynkin edges and symmetrizers, Bourbaki labels (1-based)."""
    l, fam = t.rank, t.family
    chain = [(i, i + 1) for i in range(1, l)]
    if fam is Family.A:
        return chain, [1] * l
    if fam is Family.B:
        return chain, [2] * (l - 1) + [1]
    if fam is Family.C:
        return chain, [1] * (l - 1) + [2]
    if fam is Family.D:
        return [(i, i + 1) for i in range(1, l - 1)] + [(l - 2, l)], [1] * l
    if fam in (Family.E6, Family.E7, Family.E8):
        edges = [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, l)]
        return edges, [1] * l
    if fam is Family.F4:
        return chain, [2, 2, 1, 1]
    if fam is Family.G2:
        return chain, [3, 1]
    raise LieDataError(f"unsupported family {fam}")


def _cartan_from_graph(l: int, edges, d) -> tuple[tuple[int, ...], ...]:
    A = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
    for i, j in edges:
        i, j = i - 1, j - 1
        # the shorter root carries the larger |a_ij|
        A[i][j] = -max(1, d[j] // d[i])
        A[j][i] = -max(1, d[i] // d[j])
    return tuple(tuple(row) for row in A)


def relabel(datum: LieDatum, perm: tuple[int, ...], tag: str) -> LieDatum:
    """Datum whose node ``k`` is node ``perm[k-1]`` of ``datum``."""
    l = datum.rank
    if sorted(perm) != list(range(1, l + 1)):
        raise LieDataError(f"{perm} is not a permutation of 1..{l}")
    A = tuple(tuple(datum.a(perm[i], perm[j]) for j in range(l)) for i in range(l))
    d = tuple(datum.d(perm[i]) for i in range(l))
    return LieDatum(datum.lie_type, A, d, tag)


def numbering_candidates(t: LieType) -> dict[str, tuple[int, ...]]:
    """Standard labelings, as permutations of the Bourbaki labels."""
    l = t.rank
    cands = {"bourbaki": tuple(range(1, l + 1))}
    if t.family in (Family.E6, Family.E7, Family.E8):
        # long chain labelled first, branch node last
        cands["chain_first"] = (1,) + tuple(range(3, l + 1)) + (2,)
    elif l > 1:
        cands["reversed"] = tuple(range(l, 0, -1))
    return cands


@lru_cache(maxsize=None)
def _make(t: LieType, tag: str) -> LieDatum:
    edges, d = _bourbaki_graph(t)
    base = LieDatum(t, _cartan_from_graph(t.rank, edges, d), tuple(d), "bourbaki")
    if tag == "bourbaki":
        return base
    cands = numbering_candidates(t)
    if tag not in cands:
        raise LieDataError(f"unknown numbering {tag!r} for {t}; options: {sorted(cands)}")
    return relabel(base, cands[tag], tag)


def make_lie_datum(lie_type, rank: Optional[int] = None, numbering: str = "bourbaki") -> LieDatum:
    """Cartan matrix and symmetrizers for ``lie_type``.

    ``lie_type`` may be a :class:`LieType` or a string such as ``"E6"`` or
    ``"C"`` (with ``rank``).

    >>> make_lie_datum("G2").cartan
    ((2, -1), (-3, 2))
    >>> make_lie_datum("C", 2).symmetrizers
    (1, 2)
    """
    if not isinstance(lie_type, LieType):
        lie_type = parse_lie_type(str(lie_type), rank)
    return _make(lie_type, numbering)


def braid_length(datum: LieDatum, i: int, j: int) -> int:
    """Number of letters on each side of the braid relation between i and j."""
    if i == j:
        raise LieDataError("braid relation needs distinct nodes")
    return {0: 2, 1: 3, 2: 4, 3: 6}[datum.a(i, j) * datum.a(j, i)]


def num_positive_roots(t: LieType) -> int:
    l, fam = t.rank, t.family
    return {
        Family.A: l * (l + 1) // 2,
        Family.B: l * l,
        Family.C: l * l,
        Family.D: l * (l - 1),
        Family.E6: 36, Family.E7: 63, Family.E8: 120, Family.F4: 24, Family.G2: 6,
    }[fam]


@dataclass(frozen=True)
class NumberingReport:
    tag: str
    word_reduced: bool
    word_length: int
    expected_length: int
    mismatches: tuple  # (b1, b2, computed, expected) per disagreeing entry
    checked: int

    @property
    def valid(self) -> bool:
        return (self.word_reduced and self.word_length == self.expected_length
                and not self.mismatches)

    @property
    def first_mismatch(self):
        return self.mismatches[0] if self.mismatches else None


def validate_numbering(datum: LieDatum, w0_word) -> NumberingReport:
    """Check a labeling against the reference word and S-tables.

    The word must be reduced of length ``|Phi+|``; every reference
    ``S(b1, b2)`` must then be regenerated exactly.
    """
    from .cyclicity import fundamental_set
    from .reference import reference_set
    from .weyl import WeylWord, is_reduced

    if not isinstance(w0_word, WeylWord):
        w0_word = WeylWord(tuple(w0_word), datum)
    expected = num_positive_roots(datum.lie_type)
    reduced = is_reduced(datum, w0_word)
    mismatches = []
    checked = 0
    if reduced and len(w0_word) == expected:
        for b1 in datum.nodes:
            for b2 in datum.nodes:
                ref = reference_set(datum.lie_type, b1, b2)
                if ref is None:
                    continue
                checked += 1
                got = fundamental_set(datum, w0_word, b1, b2).values
                if tuple(got) != tuple(ref):
                    mismatches.append((b1, b2, tuple(got), tuple(ref)))
    return NumberingReport(datum.numbering_tag, reduced, len(w0_word), expected,
                           tuple(mismatches), checked)


def select_numbering(lie_type, rank: Optional[int] = None, strict: bool = False):
    """Pick the candidate labeling that best reproduces the reference data.

    Returns ``(datum, report, all_reports)``.  A candidate whose reference
    word is not a reduced expression of ``w0`` is never selected; among the
    rest, the fewest table mismatches wins, ties going to the earlier
    candidate.  With ``strict``, a selection that still has mismatches raises.
    """
    from .weyl import catalog_word

    if not isinstance(lie_type, LieType):
        lie_type = parse_lie_type(str(lie_type), rank)
    reports = {}
    best = None
    for tag in numbering_candidates(lie_type):
        datum = make_lie_datum(lie_type, numbering=tag)
        rep = validate_numbering(datum, catalog_word(datum))
        reports[tag] = rep
        if rep.word_reduced and rep.word_length == rep.expected_length:
            if best is None or len(rep.mismatches) < len(reports[best].mismatches):
                best = tag
    if best is None or (strict and not reports[best].valid):
        raise LieDataError(
            f"no numbering of {lie_type} validates; tried "
            + ", ".join(f"{t} (reduced={r.word_reduced}, mismatches={len(r.mismatches)})"
                        for t, r in reports.items()))
    return make_lie_datum(lie_type, numbering=best), reports[best], reports
