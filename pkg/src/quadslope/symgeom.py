"""Exact plane geometry over a formal ordered basis.

Coordinates are :class:`SymScalar` values: finite rational combinations of
basis symbols ``s0, s1, s2, ...`` where ``s0`` is the unit constant.  The
symbols are linearly independent over the rationals by construction, and
they are totally ordered lexicographically with *higher* ids infinitely
dominant over lower ones.  Every predicate needed for drawing with rational
slopes (slope membership, North/Northwest, betweenness on a line of rational
slope) is linear, so it can be decided exactly in this model.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Rational = Union[int, Fraction]

UNIT = 0


class GeometryError(ValueError):
    """Raised on invalid geometric input (coincident points, singular maps)."""


class NumericCollisionError(GeometryError):
    """Two symbolically distinct points became numerically indistinguishable."""


def as_fraction(value: Union[str, Rational]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@total_ordering
class SymScalar:
    """An element of the ordered Q-vector space spanned by the basis symbols."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, Rational]] = None):
        terms = []
        if coeffs:
            for sym, c in coeffs.items():
                if sym < 0:
                    raise ValueError(f"symbol ids are non-negative, got {sym}")
                c = as_fraction(c)
                if c:
                    terms.append((int(sym), c))
        terms.sort()
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(terms)
        self._hash: Optional[int] = None

    @classmethod
    def _from_sorted(cls, terms: Tuple[Tuple[int, Fraction], ...]) -> "SymScalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def symbol(cls, sym: int, coeff: Rational = 1) -> "SymScalar":
        return cls({sym: coeff})

    @classmethod
    def const(cls, value: Rational) -> "SymScalar":
        return cls({UNIT: value})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._terms

    def symbols(self) -> List[int]:
        return [s for s, _ in self._terms]

    def coeff(self, sym: int) -> Fraction:
        for s, c in self._terms:
            if s == sym:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(s == UNIT for s, _ in self._terms)

    def leading(self) -> Optional[Tuple[int, Fraction]]:
        """The dominant (highest-id) term, or None for zero."""
        return self._terms[-1] if self._terms else None

    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[-1][1] > 0 else -1

    # arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "SymScalar":
        if isinstance(other, SymScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SymScalar.const(other)
        raise TypeError(f"cannot combine SymScalar with {type(other).__name__}")

    def _combine(self, other: "SymScalar", k: Fraction) -> "SymScalar":
        out = dict(self._terms)
        for s, c in other._terms:
            v = out.get(s, 0) + k * c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return SymScalar._from_sorted(tuple(sorted(out.items())))

    def __add__(self, other) -> "SymScalar":
        try:
            return self._combine(self._coerce(other), Fraction(1))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "SymScalar":
        try:
            return self._combine(self._coerce(other), Fraction(-1))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> "SymScalar":
        return (-self) + other

    def __neg__(self) -> "SymScalar":
        return SymScalar._from_sorted(tuple((s, -c) for s, c in self._terms))

    def scale(self, q: Rational) -> "SymScalar":
        q = as_fraction(q)
        if not q:
            return ZERO
        return SymScalar._from_sorted(tuple((s, q * c) for s, c in self._terms))

    def __mul__(self, q) -> "SymScalar":
        if isinstance(q, (int, Fraction)) and not isinstance(q, bool):
            return self.scale(q)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, q) -> "SymScalar":
        if isinstance(q, (int, Fraction)) and not isinstance(q, bool):
            return self.scale(Fraction(1) / as_fraction(q))
        return NotImplemented

    # order --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, SymScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == SymScalar.const(other)._terms
        return NotImplemented

    def __lt__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"SymScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, c in reversed(self._terms):
            body = str(c) if s == UNIT else (f"s{s}" if c == 1 else f"-s{s}" if c == -1 else f"{c}*s{s}")
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = SymScalar()
ONE = SymScalar.const(1)

Coord = Union[SymScalar, Rational]


def sym(value: Coord) -> SymScalar:
    return value if isinstance(value, SymScalar) else SymScalar.const(value)


@dataclass(frozen=True)
class Point:
    x: SymScalar
    y: SymScalar

    def __init__(self, x: Coord, y: Coord):
        object.__setattr__(self, "x", sym(x))
        object.__setattr__(self, "y", sym(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A direction of the projective line as a reduced pair ``(dy : dx)``.

    ``dx >= 0``; when ``dx == 0`` the slope is vertical and stored as ``(1 : 0)``.
    """

    dy: int
    dx: int

    def __post_init__(self):
        dy, dx = self.dy, self.dx
        if dx == 0 and dy == 0:
            raise GeometryError("(0:0) is not a slope")
        if (dy, dx) != Slope._normalize(dy, dx):
            raise GeometryError(f"slope ({dy}:{dx}) is not in canonical form; use Slope.of")

    @staticmethod
    def _normalize(dy: int, dx: int) -> Tuple[int, int]:
        g = math.gcd(dy, dx)
        dy, dx = dy // g, dx // g
        if dx < 0 or (dx == 0 and dy < 0):
            dy, dx = -dy, -dx
        return dy, dx

    @classmethod
    def of(cls, dy: Rational, dx: Rational) -> "Slope":
        """Canonical slope of the direction with rise ``dy`` over run ``dx``."""
        fy, fx = as_fraction(dy), as_fraction(dx)
        if fy == 0 and fx == 0:
            raise GeometryError("(0:0) is not a slope")
        den = fy.denominator * fx.denominator // math.gcd(fy.denominator, fx.denominator)
        return cls(*cls._normalize(int(fy * den), int(fx * den)))

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"inf"`` (vertical) or a rational such as ``"-2/3"``."""
        t = text.strip().lower()
        if t in ("inf", "+inf", "-inf", "infinity", "vertical"):
            return VERTICAL
        try:
            return cls.of(Fraction(t), 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"not a slope: {text!r}") from exc

    @property
    def is_vertical(self) -> bool:
        return self.dx == 0

    def value(self) -> Optional[Fraction]:
        return None if self.dx == 0 else Fraction(self.dy, self.dx)

    def direction(self) -> Tuple[int, int]:
        """Integer direction vector ``(dx, dy)``."""
        return (self.dx, self.dy)

    def __lt__(self, other: "Slope") -> bool:
        # finite slopes ascending, vertical last
        def key(s):
            return (1, 0) if s.dx == 0 else (0, Fraction(s.dy, s.dx))
        return key(self) < key(other)

    def __str__(self) -> str:
        if self.dx == 0:
            return "inf"
        return str(Fraction(self.dy, self.dx))


HORIZONTAL = Slope(0, 1)
DIAGONAL = Slope(1, 1)
VERTICAL = Slope(1, 0)
ANTIDIAGONAL = Slope(-1, 1)
# 0, pi/4, pi/2, 3pi/4
BASIC_SLOPES: Tuple[Slope, ...] = (HORIZONTAL, DIAGONAL, VERTICAL, ANTIDIAGONAL)


class SlopeSet:
    """A finite set of pairwise distinct rational slopes."""

    __slots__ = ("_slopes",)

    def __init__(self, slopes: Iterable[Slope]):
        ordered: List[Slope] = []
        for s in slopes:
            if not isinstance(s, Slope):
                raise TypeError(f"expected Slope, got {type(s).__name__}")
            if s in ordered:
                raise GeometryError(f"repeated slope {s}")
            ordered.append(s)
        if not ordered:
            raise GeometryError("empty slope set")
        self._slopes = tuple(ordered)

    @classmethod
    def parse(cls, text: str) -> "SlopeSet":
        if text.strip().lower() == "basic":
            return BASIC
        return cls(Slope.parse(t) for t in text.split(",") if t.strip())

    @property
    def slopes(self) -> Tuple[Slope, ...]:
        return self._slopes

    def __contains__(self, s) -> bool:
        return s in self._slopes

    def __iter__(self) -> Iterator[Slope]:
        return iter(self._slopes)

    def __len__(self) -> int:
        return len(self._slopes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SlopeSet):
            return NotImplemented
        return set(self._slopes) == set(other._slopes)

    def __hash__(self) -> int:
        return hash(frozenset(self._slopes))

    def __repr__(self) -> str:
        return "SlopeSet(" + ",".join(str(s) for s in self._slopes) + ")"


BASIC = SlopeSet(BASIC_SLOPES)


# predicates ----------------------------------------------------------------

def _ratio(a: SymScalar, b: SymScalar) -> Optional[Fraction]:
    """Rational ``q`` with ``a == q * b`` (``b`` nonzero), or None."""
    lead = b.leading()
    ca = a.coeff(lead[0])
    q = ca / lead[1]
    return q if a == b.scale(q) else None


def slope_between(p: Point, q: Point) -> Optional[Slope]:
    """Slope of segment ``pq``, or None when the direction is not rational.

    Raises GeometryError for ``p == q``.
    """
    dx, dy = q.x - p.x, q.y - p.y
    if dx.is_zero() and dy.is_zero():
        raise GeometryError(f"coincident points {p}")
    if dx.is_zero():
        return VERTICAL
    if dy.is_zero():
        return HORIZONTAL
    r = _ratio(dy, dx)
    return None if r is None else Slope.of(r, 1)


def cross(direction: Tuple[int, int], v: Point) -> SymScalar:
    """``direction x v`` for a rational direction: zero iff ``v`` is parallel."""
    ux, uy = direction
    return v.y.scale(ux) - v.x.scale(uy)


def dot(direction: Tuple[int, int], v: Point) -> SymScalar:
    ux, uy = direction
    return v.x.scale(ux) + v.y.scale(uy)


def strictly_inside(w: Point, p: Point, q: Point, direction: Tuple[int, int]) -> bool:
    """Whether ``w`` lies in the open segment ``pq`` whose direction is given."""
    if not cross(direction, w - p).is_zero():
        return False
    a = dot(direction, w - p).sign()
    b = dot(direction, q - w).sign()
    return a != 0 and a == b


def is_north(p: Point, q: Point) -> bool:
    """``q`` is to the North of ``p``: same x, larger y."""
    return q.x == p.x and q.y > p.y


def is_northwest(p: Point, q: Point) -> bool:
    """``q`` is to the Northwest of ``p``: same x + y, larger y."""
    return q.x + q.y == p.x + p.y and q.y > p.y


def directional_relation(p: Point, q: Point, which: str) -> bool:
    which = which.lower()
    if which == "north":
        return is_north(p, q)
    if which == "northwest":
        return is_northwest(p, q)
    raise ValueError(f"unknown relation {which!r}")


# transforms ------------------------------------------------------------------

def rotate_pi(points: Sequence[Point]) -> List[Point]:
    return [-p for p in points]


def translate(points: Sequence[Point], dx: Coord, dy: Coord) -> List[Point]:
    shift = Point(dx, dy)
    return [p + shift for p in points]


@dataclass(frozen=True)
class AffineMap:
    """``p -> M p + offset`` with ``M = [[a, b], [c, d]]`` acting on column ``(x, y)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    ox: SymScalar = ZERO
    oy: SymScalar = ZERO

    def __init__(self, matrix: Sequence[Sequence[Rational]], offset: Tuple[Coord, Coord] = (0, 0)):
        (a, b), (c, d) = matrix
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, as_fraction(v))
        if self.det == 0:
            raise GeometryError("singular affine map")
        object.__setattr__(self, "ox", sym(offset[0]))
        object.__setattr__(self, "oy", sym(offset[1]))

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))

    def __call__(self, p: Point) -> Point:
        return Point(p.x.scale(self.a) + p.y.scale(self.b) + self.ox,
                     p.x.scale(self.c) + p.y.scale(self.d) + self.oy)

    def slope_image(self, s: Slope) -> Slope:
        dx, dy = s.direction()
        return Slope.of(self.c * dx + self.d * dy, self.a * dx + self.b * dy)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self after inner``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = inner.matrix
        off = self(Point(inner.ox, inner.oy))
        return AffineMap(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), (off.x, off.y))


def apply_affine(m: AffineMap, p: Point) -> Point:
    return m(p)


# numeric output ------------------------------------------------------------

def _primes() -> Iterator[int]:
    for k in itertools.count(2):
        if all(k % p for p in range(2, math.isqrt(k) + 1)):
            yield k


def default_assignment(symbols: Iterable[int]) -> Dict[int, float]:
    """Symbol ``i >= 1`` maps to the square root of the ``i``-th prime; unit maps to 1."""
    wanted = sorted(set(symbols))
    out: Dict[int, float] = {UNIT: 1.0}
    top = max(wanted, default=0)
    for i, p in zip(range(1, top + 1), _primes()):
        out[i] = math.sqrt(p)
    return out


def realize(value: SymScalar, assignment: Mapping[int, float]) -> float:
    return float(sum(float(c) * assignment[s] for s, c in value.terms))


def numeric_realize(points: Sequence[Point], assignment: Optional[Mapping[int, float]] = None,
                    tol: float = 1e-9) -> List[Tuple[float, float]]:
    """Substitute reals for symbols.

    Raises NumericCollisionError if two symbolically distinct points end up
    closer than ``tol`` (Chebyshev distance).
    """
    used = {s for p in points for s in p.x.symbols() + p.y.symbols()}
    if assignment is None:
        assignment = default_assignment(used)
    missing = used - set(assignment)
    if missing:
        raise GeometryError(f"no value for symbols {sorted(missing)}")
    vals = [assignment[s] for s in used if s != UNIT]
    if len(set(vals)) != len(vals):
        raise GeometryError("assignment is not injective on the used symbols")
    out = [(realize(p.x, assignment), realize(p.y, assignment)) for p in points]
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if points[i] != points[j] and max(abs(out[i][0] - out[j][0]), abs(out[i][1] - out[j][1])) < tol:
                raise NumericCollisionError(f"points {i} and {j} collide numerically")
    return out


class SymbolPool:
    """Hands out fresh basis symbols, each dominating all previously issued ones."""

    def __init__(self, start_after: int = 0):
        self._next = start_after + 1

    @classmethod
    def above(cls, values: Iterable[SymScalar]) -> "SymbolPool":
        top = 0
        for v in values:
            for s in v.symbols():
                top = max(top, s)
        return cls(top)

    def fresh(self) -> int:
        s = self._next
        self._next += 1
        return s

    def reserve_above(self, values: Iterable[SymScalar]) -> None:
        for v in values:
            for s in v.symbols():
                if s >= self._next:
                    self._next = s + 1

    @property
    def peek(self) -> int:
        return self._next
