"""Braid group action on tuples of rational functions.

For ``i != j``, ``(T_j P)_i`` is ``P_i`` times shifted copies of ``P_j``:

    a_ij = -1:  P_j(u - d_i/2)
    a_ij = -2:  P_j(u - 1) P_j(u)
    a_ij = -3:  P_j(u - 3/2) P_j(u - 1/2) P_j(u + 1/2)

and ``(T_j P)_j = 1 / P_j(u - d_j)``.  The -2 and -3 shifts are fixed
constants, not multiples of ``d_i``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .lie_data import LieDatum, braid_length
from .ratfun import RationalTuple, fundamental_tuple
from .weyl import WeylWord, suffix

__all__ = [
    "neighbor_shifts", "apply_generator", "apply_word", "braid_relation_words",
    "check_braid_relation", "check_automorphism", "suffix_images",
    "suffix_image", "single_factor_tuples",
]

_FIXED_SHIFTS = {
    -2: (Fraction(1), Fraction(0)),
    -3: (Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2)),
}


def neighbor_shifts(datum: LieDatum, i: int, j: int) -> tuple[Fraction, ...]:
    """Root shifts by which ``P_j`` enters ``(T_j P)_i``; empty when ``a_ij = 0``."""
    a = datum.a(i, j)
    if a == 0 or i == j:
        return ()
    if a == -1:
        return (Fraction(datum.d(i), 2),)
    return _FIXED_SHIFTS[a]


@lru_cache(maxsize=None)
def _generator_plan(datum: LieDatum, j: int):
    plan = tuple((i - 1, neighbor_shifts(datum, i, j)) for i in datum.nodes
                 if i != j and datum.a(i, j) != 0)
    return plan, Fraction(datum.d(j))


def apply_generator(datum: LieDatum, j: int, p: RationalTuple) -> RationalTuple:
    """``T_j(P)``.

    >>> from yangian_braid.lie_data import make_lie_datum
    >>> from yangian_braid.ratfun import fundamental_tuple
    >>> print(apply_generator(make_lie_datum("A1"), 1, fundamental_tuple(make_lie_datum("A1"), 1, 0)))
    ((u-(1))^-1)
    """
    datum.check_node(j)
    plan, dj = _generator_plan(datum, j)
    comps = list(p.components)
    pj = comps[j - 1]
    if pj.is_one:
        return p
    for i0, shifts in plan:
        acc = comps[i0]
        for c in shifts:
            acc = acc * pj.shift(c)
        comps[i0] = acc
    comps[j - 1] = pj.shift(dj).inverse()
    return RationalTuple(datum, tuple(comps))


def apply_word(datum: LieDatum, word, p: RationalTuple) -> RationalTuple:
    """``T_{r_1}(T_{r_2}(... T_{r_p}(P)))`` -- the rightmost letter acts first."""
    letters = word.letters if isinstance(word, WeylWord) else tuple(word)
    for r in reversed(letters):
        p = apply_generator(datum, r, p)
    return p


def suffix_images(datum: LieDatum, word, p: RationalTuple) -> Iterator[tuple[int, int, RationalTuple]]:
    """Yield ``(j, r_j, T_{sigma_j}(P))`` for ``j = p, p-1, ..., 1``.

    One pass from the right; ``sigma_p`` is the empty word.
    """
    letters = word.letters if isinstance(word, WeylWord) else tuple(word)
    cur = p
    for j in range(len(letters), 0, -1):
        r = letters[j - 1]
        yield j, r, cur
        cur = apply_generator(datum, r, cur)


def suffix_image(datum: LieDatum, word: WeylWord, j: int, p: RationalTuple) -> RationalTuple:
    """``T_{sigma_j}(P)`` computed directly from the suffix word."""
    return apply_word(datum, suffix(word, j), p)


def braid_relation_words(datum: LieDatum, i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two sides ``i j i ...`` and ``j i j ...`` of the braid relation."""
    m = braid_length(datum, i, j)
    left = tuple(i if k % 2 == 0 else j for k in range(m))
    right = tuple(j if k % 2 == 0 else i for k in range(m))
    return left, right


def check_braid_relation(datum: LieDatum, i: int, j: int, p: RationalTuple) -> bool:
    left, right = braid_relation_words(datum, i, j)
    return apply_word(datum, left, p) == apply_word(datum, right, p)


def check_automorphism(datum: LieDatum, j: int, p: RationalTuple, q: RationalTuple) -> bool:
    """``T_j(PQ) == T_j(P) T_j(Q)``."""
    return apply_generator(datum, j, p * q) == apply_generator(datum, j, p) * apply_generator(datum, j, q)


def single_factor_tuples(datum: LieDatum, values) -> list[RationalTuple]:
    """``pi_{i,q}`` for every node and every value in ``values``."""
    return [fundamental_tuple(datum, i, q) for i in datum.nodes for q in values]
