"""Cyclicity conditions for tensor products of KR modules.

For a reduced word ``r_1 ... r_p`` of ``w0`` the ordered product
``V(pi') (x) V(pi'')`` is certified cyclic when, for every ``j``, the
``d_{r_j}``-normalized component ``T_{sigma_j}(pi')_{r_j}`` is in general
position with respect to the normalized ``pi''_{r_j}``.  With the first
factor's roots written ``a1 + c`` and the second's ``a2 + c'``, a clash
``t - s = 1`` happens exactly when ``a2 - a1 = d (1 + (c - c')/d)``, which is
how every forbidden difference here is produced.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .braid_action import suffix_images
from .lie_data import LieDatum
from .ratfun import (
    FactoredRational, Gaussian, RationalTuple, SymbolicPoint, as_gaussian,
    fundamental_tuple, kr_tuple, param_point, point, tilde_normalize,
)
from .weyl import WeylWord

__all__ = [
    "CyclicityError", "CyclicitySet", "KrFactor", "PairReport", "Verdict",
    "CyclicityCertificate", "general_position", "forbidden_differences",
    "fundamental_set", "kr_set", "pair_condition_set", "kr_set_direct",
    "check_tensor", "weyl_module_order", "local_weyl_factors",
    "check_drinfeld_tuple", "compute_tables",
]

FIRST, SECOND = "a1", "a2"


class CyclicityError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicitySet:
    """Forbidden values of ``a2 - a1``, sorted by real then imaginary part.

    ``provenance`` maps each value to the ``(j, root)`` witnesses that
    produced it: ``j`` is the prefix index and ``root`` the normalized root
    of ``T_{sigma_j}(pi)_{r_j}``.
    """
    values: tuple[Gaussian, ...]
    provenance: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def from_witnesses(cls, witnesses: dict) -> "CyclicitySet":
        vals = tuple(sorted(witnesses))
        return cls(vals, {v: tuple(witnesses[v]) for v in vals})

    def __contains__(self, x) -> bool:
        return as_gaussian(x) in set(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def shifted(self, r) -> "CyclicitySet":
        """``S + r``."""
        r = as_gaussian(r)
        return CyclicitySet.from_witnesses({v + r: self.provenance.get(v, ()) for v in self.values})

    def union(self, *others: "CyclicitySet") -> "CyclicitySet":
        acc: dict = {}
        for s in (self,) + others:
            for v in s.values:
                acc.setdefault(v, [])
                acc[v].extend(w for w in s.provenance.get(v, ()) if w not in acc[v])
        return CyclicitySet.from_witnesses(acc)

    def as_strings(self) -> list[str]:
        return [str(v) for v in self.values]

    def to_json(self) -> dict:
        return {
            "values": self.as_strings(),
            "provenance": {str(v): [{"j": j, "root": str(s)} for j, s in self.provenance.get(v, ())]
                           for v in self.values},
        }

    def __str__(self):
        return "{" + ", ".join(self.as_strings()) + "}"


def _require_numeric(f: FactoredRational, what: str):
    if not f.is_numeric:
        raise CyclicityError(
            f"{what} has symbolic roots; use forbidden_differences for parametrized roots")


def general_position(p: FactoredRational, q: FactoredRational) -> bool:
    """True iff no root ``t`` of ``q`` and root ``s`` of ``p`` have ``t - s = 1``."""
    _require_numeric(p, "p")
    _require_numeric(q, "q")
    if not (p.is_polynomial and q.is_polynomial):
        raise CyclicityError("general position is defined for polynomials")
    shifted = {(s.re + 1, s.im) for s, _ in p.items()}
    return not any((t.re, t.im) in shifted for t, _ in q.items())


def _offset(root: SymbolicPoint, param: str, d: int, origin: Optional[Gaussian]) -> Gaussian:
    """Constant ``c`` in ``root = param/d + c`` (numeric roots: ``param = origin``)."""
    if root.param is None:
        if origin is None:
            raise CyclicityError(f"numeric root {root} needs an origin for {param}")
        return root.constant - origin / d
    if root.param != param or root.coeff != Fraction(1, d):
        raise CyclicityError(f"root {root} is not of the form {param}/{d} + const")
    return root.constant


def _forbidden(p: FactoredRational, q: FactoredRational, d: int,
               origin: Optional[Gaussian] = None) -> dict:
    out: dict = {}
    for s, ms in p.items():
        if ms <= 0:
            raise CyclicityError(f"p is not a polynomial: root {s} has multiplicity {ms}")
        cs = _offset(s, FIRST, d, origin)
        for t, mt in q.items():
            if mt <= 0:
                raise CyclicityError(f"q is not a polynomial: root {t} has multiplicity {mt}")
            ct = _offset(t, SECOND, d, None)
            # a2/d + ct - (a1/d + cs) = 1
            out.setdefault((1 + cs - ct) * d, []).append(s)
    return out


def forbidden_differences(p: FactoredRational, q: FactoredRational, d: int,
                          origin=None) -> set[Gaussian]:
    """Values of ``a2 - a1`` at which ``p`` fails general position w.r.t. ``q``.

    Roots of ``p`` must be ``a1/d + const`` and roots of ``q`` ``a2/d + const``.
    If ``origin`` is given, numeric roots of ``p`` are read with ``a1 = origin``.

    >>> p = FactoredRational.from_roots([point("3/2", "a1", Fraction(1, 2))])
    >>> q = FactoredRational.from_roots([point(0, "a2", Fraction(1, 2))])
    >>> sorted(str(v) for v in forbidden_differences(p, q, 2))
    ['5']
    """
    if d <= 0:
        raise CyclicityError("d must be positive")
    return set(_forbidden(p, q, d, None if origin is None else as_gaussian(origin)))


def _scan(datum: LieDatum, word, first: RationalTuple, second: RationalTuple,
          only_node: Optional[int], normalize: bool, origin: Optional[Gaussian]) -> CyclicitySet:
    witnesses: dict = {}
    for j, r, image in suffix_images(datum, word, first):
        if only_node is not None and r != only_node:
            continue
        q = second[r]
        if q.is_one:
            continue
        comp = image[r]
        if not comp.is_polynomial:
            raise CyclicityError(
                f"component {r} of T_sigma_{j}(pi) is not a polynomial: {comp}")
        d = datum.d(r) if normalize else 1
        found = _forbidden(tilde_normalize(comp, d), tilde_normalize(q, d), d, origin)
        for v, roots in found.items():
            acc = witnesses.setdefault(v, [])
            for s in roots:
                if (j, s) not in acc:
                    acc.append((j, s))
    return CyclicitySet.from_witnesses(witnesses)


def _check_denominators(s: CyclicitySet, where: str):
    for v in s.values:
        if 2 % v.denominator:
            raise CyclicityError(f"{where}: value {v} has denominator not dividing 2")


def _letters(word) -> tuple[int, ...]:
    return word.letters if isinstance(word, WeylWord) else tuple(word)


@lru_cache(maxsize=4096)
def _fundamental_cached(datum, letters, b1, b2, normalize, base):
    if base is None:
        first = fundamental_tuple(datum, b1, param_point(FIRST))
    else:
        first = fundamental_tuple(datum, b1, point(base))
    second = fundamental_tuple(datum, b2, param_point(SECOND))
    s = _scan(datum, letters, first, second, b2, normalize, base)
    _check_denominators(s, f"S({b1},{b2}) for {datum.name}")
    return s


def fundamental_set(datum: LieDatum, w0_word, b1: int, b2: int, *,
                    normalize: bool = True, base=None) -> CyclicitySet:
    """``S(b1, b2)``: differences ``a2 - a1`` where
    ``V_{a1}(omega_{b1}) (x) V_{a2}(omega_{b2})`` is not certified cyclic.

    Only prefixes with ``r_j = b2`` can contribute.  ``base`` evaluates the
    first factor at a numeric ``a1`` instead of a formal one; the returned
    differences do not depend on it.  ``normalize=False`` skips the division
    of roots by ``d_{b2}`` and is provided for comparison only.
    """
    datum.check_node(b1)
    datum.check_node(b2)
    g = None if base is None else as_gaussian(base)
    return _fundamental_cached(datum, _letters(w0_word), b1, b2, normalize, g)


def kr_set(datum: LieDatum, w0_word, b1: int, m1: int, b2: int, m2: int, *,
           normalize: bool = True) -> CyclicitySet:
    """Union of ``S(b1, b2) - s + r`` over ``0 <= r < m1``, ``0 <= s < m2``."""
    if m1 < 1 or m2 < 1:
        raise CyclicityError("KR lengths must be positive")
    base = fundamental_set(datum, w0_word, b1, b2, normalize=normalize)
    parts = [base.shifted(r - s) for s in range(m2) for r in range(m1)]
    return parts[0].union(*parts[1:])


def pair_condition_set(datum: LieDatum, w0_word, first: RationalTuple,
                       second: RationalTuple, *, normalize: bool = True) -> CyclicitySet:
    """Forbidden ``a2 - a1`` for ``V(first) (x) V(second)``, scanning every prefix.

    ``first`` must have roots ``a1 + const`` and ``second`` roots ``a2 + const``.
    """
    return _scan(datum, _letters(w0_word), first, second, None, normalize, None)


def kr_set_direct(datum: LieDatum, w0_word, b1: int, m1: int, b2: int, m2: int, *,
                  normalize: bool = True) -> CyclicitySet:
    """KR set computed on the KR tuples themselves (no shifting of S)."""
    first = kr_tuple(datum, b1, param_point(FIRST), m1)
    second = kr_tuple(datum, b2, param_point(SECOND), m2)
    return pair_condition_set(datum, w0_word, first, second, normalize=normalize)


@dataclass(frozen=True)
class KrFactor:
    node: int
    base: Gaussian
    length: int = 1

    def __post_init__(self):
        object.__setattr__(self, "base", as_gaussian(self.base))
        if self.length < 1:
            raise CyclicityError("KR length must be at least 1")

    def __str__(self):
        return f"{self.node}:{self.base}:{self.length}"


class Verdict(str, enum.Enum):
    CYCLIC = "Cyclic"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PairReport:
    m: int
    n: int
    difference: Gaussian
    tested: CyclicitySet
    member: bool

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "difference": str(self.difference),
                "set": self.tested.as_strings(), "member": self.member}


@dataclass(frozen=True)
class CyclicityCertificate:
    verdict: Verdict
    factors: tuple[KrFactor, ...]
    pair_reports: tuple[PairReport, ...]

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value,
                "factors": [str(f) for f in self.factors],
                "pairs": [p.to_json() for p in self.pair_reports]}


def check_tensor(datum: LieDatum, w0_word, factors: Sequence[KrFactor]) -> CyclicityCertificate:
    """Pairwise KR test of an ordered tensor product.

    ``Unknown`` means some pair difference is in its KR set; the condition is
    only sufficient, so this is not a proof of non-cyclicity.
    """
    factors = tuple(factors)
    if not factors:
        raise CyclicityError("need at least one tensor factor")
    reports = []
    for m in range(len(factors)):
        for n in range(m + 1, len(factors)):
            fm, fn = factors[m], factors[n]
            tested = kr_set(datum, w0_word, fm.node, fm.length, fn.node, fn.length)
            diff = fn.base - fm.base
            reports.append(PairReport(m + 1, n + 1, diff, tested, diff in tested))
    verdict = Verdict.UNKNOWN if any(r.member for r in reports) else Verdict.CYCLIC
    return CyclicityCertificate(verdict, factors, tuple(reports))


def weyl_module_order(datum: LieDatum, pi: RationalTuple) -> list[tuple[int, Gaussian]]:
    """All ``(node, root)`` pairs of ``pi`` with multiplicity, largest real part first.

    Ties: larger imaginary part first, then smaller node.
    """
    if not pi.is_polynomial:
        raise CyclicityError("expected a tuple of polynomials")
    pairs = []
    for node in datum.nodes:
        comp = pi[node]
        _require_numeric(comp, f"component {node}")
        for root, m in comp.items():
            pairs.extend([(node, root.constant)] * m)
    pairs.sort(key=lambda nr: (-nr[1].re, -nr[1].im, nr[0]))
    return pairs


def local_weyl_factors(datum: LieDatum, pi: RationalTuple) -> list[KrFactor]:
    return [KrFactor(node, root, 1) for node, root in weyl_module_order(datum, pi)]


def check_drinfeld_tuple(datum: LieDatum, w0_word, pi: RationalTuple) -> CyclicityCertificate:
    """Certificate for the fundamental factors of ``pi`` in max-real-part order."""
    return check_tensor(datum, w0_word, local_weyl_factors(datum, pi))


def _table_row(args):
    datum, letters, b1, normalize = args
    return b1, [fundamental_set(datum, letters, b1, b2, normalize=normalize)
                for b2 in datum.nodes]


def compute_tables(datum: LieDatum, w0_word, jobs: int = 1,
                   normalize: bool = True) -> dict[tuple[int, int], CyclicitySet]:
    """``S(b1, b2)`` for every ordered pair of nodes."""
    letters = _letters(w0_word)
    tasks = [(datum, letters, b1, normalize) for b1 in datum.nodes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_table_row, tasks))
    else:
        rows = [_table_row(t) for t in tasks]
    return {(b1, b2): s for b1, row in sorted(rows) for b2, s in zip(datum.nodes, row)}


def parse_factors(text: str) -> list[KrFactor]:
    """Parse ``"b:a:m,b:a:m"``; ``m`` may be omitted (defaults to 1)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(":")
        if len(parts) not in (2, 3):
            raise CyclicityError(f"factor {chunk!r} is not node:base[:length]")
        try:
            node = int(parts[0])
            length = int(parts[2]) if len(parts) == 3 else 1
        except ValueError as exc:
            raise CyclicityError(f"factor {chunk!r}: {exc}") from exc
        out.append(KrFactor(node, as_gaussian(parts[1]), length))
    return out
