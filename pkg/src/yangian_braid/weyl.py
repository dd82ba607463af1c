"""Weyl group words acting on weight coordinates.

Weights are integer vectors in the fundamental-weight basis.  The simple
root ``alpha_i`` has coordinates given by column ``i`` of the Cartan matrix,
so ``s_i(w) = w - w_i * A[:, i]``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .lie_data import Family, LieDatum, LieDataError, braid_length, num_positive_roots

__all__ = [
    "WeylWord", "simple_reflection", "apply_reflections", "word_matrix",
    "element_length", "is_reduced", "longest_word", "catalog_word",
    "greedy_longest_word", "suffix", "braid_equivalent_words", "parse_word",
    "random_reduced_word", "CATALOG",
]


@dataclass(frozen=True)
class WeylWord:
    """Letters ``r_1 ... r_p`` of ``s_{r_1} ... s_{r_p}`` (1-based nodes)."""
    letters: tuple[int, ...]
    datum: Optional[LieDatum] = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.datum is not None:
            for r in self.letters:
                if not 1 <= r <= self.datum.rank:
                    raise LieDataError(
                        f"letter {r} out of range 1..{self.datum.rank} for {self.datum.name}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __str__(self):
        return " ".join(f"s{r}" for r in self.letters) or "e"


def _letters(word) -> tuple[int, ...]:
    return word.letters if isinstance(word, WeylWord) else tuple(word)


def simple_reflection(datum: LieDatum, i: int, w: Sequence[int]) -> tuple[int, ...]:
    """``s_i`` applied to a weight in fundamental-weight coordinates.

    >>> from yangian_braid.lie_data import make_lie_datum
    >>> simple_reflection(make_lie_datum("G2"), 2, (0, 1))
    (1, -1)
    """
    datum.check_node(i)
    c = w[i - 1]
    if c == 0:
        return tuple(w)
    col = i - 1
    return tuple(w[k] - c * datum.cartan[k][col] for k in range(datum.rank))


def apply_reflections(datum: LieDatum, word, w: Sequence[int]) -> tuple[int, ...]:
    """Apply ``s_{r_1} ... s_{r_p}`` to ``w`` (rightmost letter first)."""
    v = tuple(w)
    for r in reversed(_letters(word)):
        v = simple_reflection(datum, r, v)
    return v


def word_matrix(datum: LieDatum, word) -> np.ndarray:
    """Integer matrix of the product acting on weight coordinates."""
    l = datum.rank
    A = np.array(datum.cartan, dtype=np.int64)
    M = np.eye(l, dtype=np.int64)
    for r in _letters(word):
        S = np.eye(l, dtype=np.int64)
        S[:, r - 1] -= A[:, r - 1]
        M = M @ S
    return M


def _rho(datum: LieDatum) -> tuple[int, ...]:
    return (1,) * datum.rank


def element_length(datum: LieDatum, word) -> int:
    """Length of the element represented by ``word``.

    Counts the simple reflections needed to bring ``w(rho)`` back to the
    dominant chamber; each step removes one inversion.
    """
    v = apply_reflections(datum, word, _rho(datum))
    n = 0
    while True:
        neg = [k for k, x in enumerate(v) if x < 0]
        if not neg:
            return n
        v = simple_reflection(datum, neg[0] + 1, v)
        n += 1


def is_reduced(datum: LieDatum, word) -> bool:
    """Descent test: reading right to left, each letter must raise the length.

    ``s_r sigma`` is longer than ``sigma`` iff ``sigma^{-1}(alpha_r) > 0``,
    i.e. iff coordinate ``r`` of ``sigma(rho)`` is positive.
    """
    v = _rho(datum)
    for r in reversed(_letters(word)):
        datum.check_node(r)
        if v[r - 1] <= 0:
            return False
        v = simple_reflection(datum, r, v)
    return True


def greedy_longest_word(datum: LieDatum) -> WeylWord:
    """Reduced word for ``w0``, peeling the smallest left descent each time."""
    v = _rho(datum)
    # w0(rho) is antidominant; reach it by ascending steps
    while True:
        pos = [k for k, x in enumerate(v) if x > 0]
        if not pos:
            break
        v = simple_reflection(datum, pos[0] + 1, v)
    letters = []
    while True:
        neg = [k for k, x in enumerate(v) if x < 0]
        if not neg:
            break
        letters.append(neg[0] + 1)
        v = simple_reflection(datum, neg[0] + 1, v)
    return WeylWord(tuple(letters), datum)


def _parse_catalog(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split())


_E6 = ("1 2 3 1 4 2 3 1 4 3 5 4 2 3 1 4 3 5 4 2 6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 1")
_E7_TAIL = "7 6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 4 5 6 7"
_E8_TAIL = ("8 7 6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 4 5 6 7 8 7 6 5 4 2 3 1 "
            "4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 4 5 6 7 8")

CATALOG: dict[Family, tuple[int, ...]] = {
    Family.E6: _parse_catalog(_E6),
    Family.E7: _parse_catalog(_E6 + " " + _E7_TAIL),
    Family.E8: _parse_catalog(_E6 + " " + _E7_TAIL + " " + _E8_TAIL),
    Family.F4: _parse_catalog("1 2 1 3 2 1 3 2 3 4 3 2 1 3 2 3 4 3 2 1 3 2 3 4"),
    Family.G2: (2, 1, 2, 1, 2, 1),
}


def catalog_word(datum: LieDatum) -> WeylWord:
    """Default ``w0`` word: the fixed catalog word for exceptional types,
    the greedy word otherwise.  Exceptional letters are taken verbatim, so
    under a non-default numbering the result may fail to be reduced."""
    fam = datum.lie_type.family
    if fam in CATALOG:
        return WeylWord(CATALOG[fam], datum)
    return greedy_longest_word(datum)


def longest_word(datum: LieDatum) -> WeylWord:
    """A reduced word for the longest element ``w0``."""
    w = catalog_word(datum)
    if len(w) == num_positive_roots(datum.lie_type) and is_reduced(datum, w):
        return w
    return greedy_longest_word(datum)


def suffix(word: WeylWord, j: int) -> WeylWord:
    """``sigma_j = s_{r_{j+1}} ... s_{r_p}``."""
    p = len(word)
    if not 0 <= j <= p:
        raise IndexError(f"suffix index {j} outside 0..{p}")
    return WeylWord(_letters(word)[j:], word.datum if isinstance(word, WeylWord) else None)


def _braid_moves(datum: LieDatum, letters: tuple[int, ...]):
    p = len(letters)
    for k in range(p - 1):
        i, j = letters[k], letters[k + 1]
        if i == j:
            continue
        m = braid_length(datum, i, j)
        if k + m > p:
            continue
        side = tuple(i if t % 2 == 0 else j for t in range(m))
        if letters[k:k + m] == side:
            other = tuple(j if t % 2 == 0 else i for t in range(m))
            yield letters[:k] + other + letters[k + m:]


def braid_equivalent_words(datum: LieDatum, word, budget: int = 64) -> list[WeylWord]:
    """Up to ``budget`` distinct words reachable from ``word`` by braid moves.

    Breadth-first, so the input word comes first and the output is
    deterministic.
    """
    start = _letters(word)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue and len(order) < budget:
        cur = queue.popleft()
        for nxt in _braid_moves(datum, cur):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
                if len(order) >= budget:
                    break
    return [WeylWord(w, datum) for w in order]


def random_reduced_word(datum: LieDatum, rng, max_length: int) -> WeylWord:
    """Random reduced word of length at most ``max_length``.

    Letters are prepended while the length keeps growing; the target length
    is drawn uniformly from ``1..max_length``.
    """
    target = rng.randint(1, max_length)
    letters: list[int] = []
    v = _rho(datum)  # sigma(rho) for the current word sigma
    while len(letters) < target:
        ups = [k + 1 for k, x in enumerate(v) if x > 0]
        if not ups:
            break
        r = rng.choice(ups)
        letters.insert(0, r)
        v = simple_reflection(datum, r, v)
    return WeylWord(tuple(letters), datum)


def parse_word(text: str, datum: Optional[LieDatum] = None) -> WeylWord:
    """Parse a word from whitespace/comma separated 1-based node indices.

    A JSON array (``[2, 1, 2]``) and ``s2s1s2`` notation are accepted too.
    """
    body = text.strip()
    if re.search(r"s_?\{?\d", body):
        letters = [int(x) for x in re.findall(r"s_?\{?(\d+)\}?", body)]
    else:
        body = body.strip("[]")
        letters = [int(x) for x in re.split(r"[\s,]+", body) if x]
    return WeylWord(tuple(letters), datum)

