"""Tuples of factored rational functions in ``u``.

A rational function is stored by its roots: a map from root to a nonzero
integer multiplicity, so ``{a: 1, b: -1}`` is ``(u - a) / (u - b)``.  Roots
are exact: ``coeff * param + (re + im*i)`` with rational parts and at most
one formal parameter.  The empty map is the constant function 1; there is
no zero function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

from .lie_data import LieDatum, make_lie_datum

__all__ = [
    "Gaussian", "SymbolicPoint", "FactoredRational", "RationalTuple",
    "RatfunError", "point", "param_point", "parse_gaussian", "as_gaussian",
    "identity_tuple", "tuple_from_roots", "fundamental_tuple", "kr_tuple",
    "multiply", "invert", "shift_argument", "tilde_normalize",
    "tuple_to_json", "tuple_from_json", "random_tuple",
]

Rational = Union[int, Fraction]
_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatfunError(ValueError):
    pass


class Gaussian:
    """Exact complex number ``re + im*i`` with rational parts.

    Ordering is by real part, then imaginary part.
    """
    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def _key(self):
        return (self.re, self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __lt__(self, other):
        return self._key() < as_gaussian(other)._key()

    def __le__(self, other):
        return self._key() <= as_gaussian(other)._key()

    def __gt__(self, other):
        return self._key() > as_gaussian(other)._key()

    def __ge__(self, other):
        return self._key() >= as_gaussian(other)._key()

    def __add__(self, other):
        o = as_gaussian(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_gaussian(other)
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return as_gaussian(other) - self

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gaussian(self.re * other, self.im * other)
        o = as_gaussian(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gaussian(self.re / other, self.im / other)
        o = as_gaussian(other)
        n = o.re * o.re + o.im * o.im
        return Gaussian((self.re * o.re + self.im * o.im) / n,
                        (self.im * o.re - self.re * o.im) / n)

    @property
    def denominator(self) -> int:
        a, b = self.re.denominator, self.im.denominator
        return a * b // _gcd(a, b)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def __repr__(self):
        return f"Gaussian({self})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_Q = r"\d+(?:/\d+)?"
_REAL_ONLY = re.compile(rf"([+-]?{_Q})")
_IMAG_ONLY = re.compile(rf"([+-]?)({_Q})?i")
_BOTH = re.compile(rf"([+-]?{_Q})([+-])({_Q})?i")


def _imag(sign: str, mag: Optional[str]) -> Fraction:
    v = Fraction(mag) if mag else _ONE
    return -v if sign == "-" else v


def parse_gaussian(text: str) -> Gaussian:
    """Parse ``"3/2"``, ``"-1/2+1/3i"``, ``"2i"`` or ``"i"``.

    >>> str(parse_gaussian("1/2-3/4i"))
    '1/2-3/4i'
    """
    s = str(text).replace(" ", "")
    try:
        if m := _REAL_ONLY.fullmatch(s):
            return Gaussian(Fraction(m.group(1)))
        if m := _IMAG_ONLY.fullmatch(s):
            return Gaussian(0, _imag(m.group(1), m.group(2)))
        if m := _BOTH.fullmatch(s):
            return Gaussian(Fraction(m.group(1)), _imag(m.group(2), m.group(3)))
    except ZeroDivisionError:
        pass
    raise RatfunError(f"cannot parse {text!r} as a Gaussian rational")


def as_gaussian(x) -> Gaussian:
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, (int, Fraction)):
        return Gaussian(x, 0)
    if isinstance(x, str):
        return parse_gaussian(x)
    raise TypeError(f"cannot convert {x!r} to Gaussian")


class SymbolicPoint(NamedTuple):
    """``coeff * param + re + im*i``; ``param`` is ``None`` for a number."""
    param: Optional[str]
    coeff: Fraction
    re: Fraction
    im: Fraction

    @property
    def is_numeric(self) -> bool:
        return self.param is None

    @property
    def constant(self) -> Gaussian:
        return Gaussian(self.re, self.im)

    def shift(self, c) -> "SymbolicPoint":
        if isinstance(c, Gaussian):
            return SymbolicPoint(self.param, self.coeff, self.re + c.re, self.im + c.im)
        return SymbolicPoint(self.param, self.coeff, self.re + c, self.im)

    def scale(self, q: Fraction) -> "SymbolicPoint":
        return SymbolicPoint(self.param, self.coeff * q, self.re * q, self.im * q)

    def sort_key(self):
        return (self.param or "", self.coeff, self.re, self.im)

    def __str__(self):
        const = str(Gaussian(self.re, self.im))
        if self.param is None:
            return const
        c = self.coeff
        if c == 1:
            lead = self.param
        elif c == -1:
            lead = "-" + self.param
        elif c.numerator == 1:
            lead = f"{self.param}/{c.denominator}"
        else:
            lead = f"{c}*{self.param}"
        if self.re == 0 and self.im == 0:
            return lead
        if self.im == 0 and self.re < 0:
            return f"{lead}-{-self.re}"
        return f"{lead}+{const}"


def point(value=0, param: Optional[str] = None, coeff: Rational = 1) -> SymbolicPoint:
    """Build a root ``coeff*param + value``; ``value`` may be a string."""
    g = as_gaussian(value)
    if param is None:
        return SymbolicPoint(None, _ZERO, g.re, g.im)
    coeff = Fraction(coeff)
    if coeff == 0:
        return SymbolicPoint(None, _ZERO, g.re, g.im)
    if not isinstance(param, str) or not param:
        raise RatfunError("formal parameter must be a nonempty name")
    return SymbolicPoint(param, coeff, g.re, g.im)


def param_point(name: str, offset=0) -> SymbolicPoint:
    return point(offset, param=name, coeff=1)


class FactoredRational:
    """Immutable map root -> nonzero multiplicity."""
    __slots__ = ("_f", "_hash")

    def __init__(self, factors: Optional[Mapping[SymbolicPoint, int]] = None):
        f = {}
        if factors:
            for p, m in factors.items():
                if not isinstance(p, SymbolicPoint):
                    raise RatfunError(f"root {p!r} is not a SymbolicPoint")
                if int(m) != m:
                    raise RatfunError("multiplicities must be integers")
                if m:
                    f[p] = int(m)
        self._f = f
        self._hash = None

    @classmethod
    def _trusted(cls, f: dict) -> "FactoredRational":
        obj = cls.__new__(cls)
        obj._f = f
        obj._hash = None
        return obj

    @classmethod
    def from_roots(cls, roots: Iterable[SymbolicPoint], mult: int = 1) -> "FactoredRational":
        f: dict = {}
        for p in roots:
            f[p] = f.get(p, 0) + mult
        return cls(f)

    def items(self):
        return self._f.items()

    def roots(self) -> list[SymbolicPoint]:
        return sorted(self._f, key=SymbolicPoint.sort_key)

    def mult(self, p: SymbolicPoint) -> int:
        return self._f.get(p, 0)

    def __len__(self):
        return len(self._f)

    def __bool__(self):
        return True

    @property
    def is_one(self) -> bool:
        return not self._f

    @property
    def is_polynomial(self) -> bool:
        return all(m > 0 for m in self._f.values())

    @property
    def degree(self) -> int:
        return sum(self._f.values())

    @property
    def is_numeric(self) -> bool:
        return all(p.param is None for p in self._f)

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self._f == other._f

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._f.items()))
        return self._hash

    def __mul__(self, other: "FactoredRational") -> "FactoredRational":
        f = dict(self._f)
        for p, m in other._f.items():
            n = f.get(p, 0) + m
            if n:
                f[p] = n
            else:
                del f[p]
        return FactoredRational._trusted(f)

    def inverse(self) -> "FactoredRational":
        return FactoredRational._trusted({p: -m for p, m in self._f.items()})

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n: int):
        if n == 0:
            return FactoredRational()
        return FactoredRational._trusted({p: m * n for p, m in self._f.items()})

    def shift(self, c) -> "FactoredRational":
        """Roots move by ``+c`` (``f(u)`` becomes ``f(u - c)``)."""
        if c == 0:
            return self
        return FactoredRational._trusted({p.shift(c): m for p, m in self._f.items()})

    def scale_roots(self, q: Fraction) -> "FactoredRational":
        return FactoredRational._trusted({p.scale(q): m for p, m in self._f.items()})

    def __str__(self):
        if not self._f:
            return "1"
        parts = []
        for p in self.roots():
            m = self._f[p]
            base = f"(u-({p}))"
            parts.append(base if m == 1 else f"{base}^{m}")
        return "".join(parts)

    def __repr__(self):
        return f"FactoredRational({self})"


ONE = FactoredRational()


def shift_argument(f: FactoredRational, c) -> FactoredRational:
    """``f(u - c)``: every root ``a`` becomes ``a + c``."""
    return f.shift(Fraction(c) if not isinstance(c, Gaussian) else c)


def tilde_normalize(f: FactoredRational, d: int) -> FactoredRational:
    """Divide every root by ``d``.

    >>> str(tilde_normalize(FactoredRational.from_roots([param_point("a", 1)]), 2))
    '(u-(a/2+1/2))'
    """
    if d <= 0:
        raise RatfunError("normalizing factor must be positive")
    if d == 1:
        return f
    return f.scale_roots(Fraction(1, d))


@dataclass(frozen=True)
class RationalTuple:
    """An element of the group of l-tuples of rational functions."""
    datum: LieDatum
    components: tuple[FactoredRational, ...]

    def __post_init__(self):
        if len(self.components) != self.datum.rank:
            raise RatfunError(
                f"{self.datum.name} needs {self.datum.rank} components, got {len(self.components)}")

    def __getitem__(self, i: int) -> FactoredRational:
        """Component at 1-based node ``i``."""
        return self.components[self.datum.check_node(i) - 1]

    def __mul__(self, other: "RationalTuple") -> "RationalTuple":
        return multiply(self, other)

    def inverse(self) -> "RationalTuple":
        return invert(self)

    @property
    def is_polynomial(self) -> bool:
        return all(c.is_polynomial for c in self.components)

    @property
    def is_identity(self) -> bool:
        return all(c.is_one for c in self.components)

    @property
    def is_numeric(self) -> bool:
        return all(c.is_numeric for c in self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def identity_tuple(datum: LieDatum) -> RationalTuple:
    return RationalTuple(datum, (ONE,) * datum.rank)


def tuple_from_roots(datum: LieDatum, roots: Mapping[int, Mapping[SymbolicPoint, int]]) -> RationalTuple:
    comps = [ONE] * datum.rank
    for node, factors in roots.items():
        comps[datum.check_node(node) - 1] = FactoredRational(factors)
    return RationalTuple(datum, tuple(comps))


def _as_point(a) -> SymbolicPoint:
    return a if isinstance(a, SymbolicPoint) else point(a)


def fundamental_tuple(datum: LieDatum, i: int, a) -> RationalTuple:
    """``pi_{i,a}``: ``u - a`` at node ``i``, 1 elsewhere."""
    return tuple_from_roots(datum, {i: {_as_point(a): 1}})


def kr_tuple(datum: LieDatum, i: int, a, m: int) -> RationalTuple:
    """Roots ``a, a+1, ..., a+m-1`` at node ``i``."""
    if m < 1:
        raise RatfunError("KR length must be at least 1")
    a = _as_point(a)
    return tuple_from_roots(datum, {i: {a.shift(Fraction(k)): 1 for k in range(m)}})


def multiply(p: RationalTuple, q: RationalTuple) -> RationalTuple:
    if p.datum != q.datum:
        raise RatfunError(f"cannot multiply tuples of {p.datum.name} and {q.datum.name}")
    return RationalTuple(p.datum, tuple(a * b for a, b in zip(p.components, q.components)))


def invert(p: RationalTuple) -> RationalTuple:
    return RationalTuple(p.datum, tuple(c.inverse() for c in p.components))


# JSON -------------------------------------------------------------------------

def _q(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def point_to_json(p: SymbolicPoint, mult: int) -> dict:
    return {"param": p.param, "param_coeff": _q(p.coeff), "re": _q(p.re),
            "im": _q(p.im), "mult": mult}


def point_from_json(obj: Mapping) -> tuple[SymbolicPoint, int]:
    try:
        coeff = Fraction(obj.get("param_coeff", "0"))
        p = point(Gaussian(Fraction(obj.get("re", "0")), Fraction(obj.get("im", "0"))),
                  param=obj.get("param"), coeff=coeff if obj.get("param") else 0)
        if obj.get("param") and coeff == 0:
            raise RatfunError("param_coeff must be nonzero when param is present")
        mult = int(obj.get("mult", 1))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise RatfunError(f"bad factor {obj!r}: {exc}") from exc
    return p, mult


def tuple_to_json(p: RationalTuple) -> dict:
    comps = []
    for node in p.datum.nodes:
        c = p[node]
        comps.append({"node": node,
                      "factors": [point_to_json(r, c.mult(r)) for r in c.roots()]})
    return {"family": p.datum.name, "rank": p.datum.rank, "components": comps}


def tuple_from_json(obj: Mapping, datum: Optional[LieDatum] = None) -> RationalTuple:
    if datum is None:
        datum = make_lie_datum(obj["family"], obj.get("rank"))
    roots: dict[int, dict] = {}
    for comp in obj.get("components", []):
        node = int(comp["node"])
        acc = roots.setdefault(node, {})
        for fac in comp.get("factors", []):
            p, m = point_from_json(fac)
            acc[p] = acc.get(p, 0) + m
    return tuple_from_roots(datum, roots)


# sampling ---------------------------------------------------------------------

def random_gaussian(rng, max_den: int = 6, span: int = 4, complex_prob: float = 0.25) -> Gaussian:
    def q():
        den = rng.randint(1, max_den)
        return Fraction(rng.randint(-span * den, span * den), den)
    return Gaussian(q(), q() if rng.random() < complex_prob else 0)


def random_tuple(datum: LieDatum, rng, max_factors: int = 2, max_mult: int = 3,
                 max_den: int = 6) -> RationalTuple:
    """Random element: Gaussian-rational roots, multiplicities in
    ``-max_mult..max_mult``, at most ``max_factors`` roots per node."""
    roots = {}
    for node in datum.nodes:
        f = {}
        for _ in range(rng.randint(0, max_factors)):
            g = random_gaussian(rng, max_den)
            m = rng.choice([k for k in range(-max_mult, max_mult + 1) if k])
            p = SymbolicPoint(None, _ZERO, g.re, g.im)
            f[p] = f.get(p, 0) + m
        roots[node] = f
    return tuple_from_roots(datum, roots)
