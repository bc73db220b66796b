"""Deciding whether a set of four rational slopes is good.

Two independent deciders: a harmonic-range test on the projective line with
an explicit linear witness, and a direct search for a straight-line drawing
of K4 (necessarily a parallelogram with its two diagonals).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Optional, Sequence, Tuple

from .drawing import Drawing, verify_drawing
from .fixtures import k4
from .symgeom import AffineMap, Point, Slope, SlopeSet

__all__ = [
    "DeciderDisagreement",
    "Verdict",
    "can_draw_k4",
    "cross_ratio",
    "is_affine_image_of_basic",
    "is_good",
    "k4_parallelogram",
]

# BASIC directions in harmonic order: (horizontal, vertical; diagonal, antidiagonal)
_H, _V, _D, _A = (1, 0), (0, 1), (1, 1), (1, -1)


class DeciderDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self) -> Iterator[Any]:
        return iter((self.ok, self.witness))


def _require_four(s: SlopeSet) -> None:
    if len(s) != 4:
        raise ValueError(f"need four slopes, got {len(s)}")


def _det(p: Tuple[int, int], q: Tuple[int, int]) -> int:
    return p[0] * q[1] - p[1] * q[0]


def cross_ratio(p: Slope, q: Slope, r: Slope, t: Slope) -> Optional[Fraction]:
    """``(p, q; r, t)`` on homogeneous direction pairs; ``None`` when undefined."""
    dp, dq, dr, dt = (s.direction() for s in (p, q, r, t))
    num = _det(dp, dr) * _det(dq, dt)
    den = _det(dp, dt) * _det(dq, dr)
    if den == 0:
        return None
    return Fraction(num, den)


def _linear_witness(p: Slope, q: Slope, r: Slope) -> AffineMap:
    """Linear map sending horizontal, vertical and diagonal to ``p``, ``q``, ``r``."""
    up, uq, ur = p.direction(), q.direction(), r.direction()
    det = _det(up, uq)
    # ur = alpha * up + beta * uq
    alpha = Fraction(_det(ur, uq), det)
    beta = Fraction(_det(up, ur), det)
    return AffineMap(((alpha * up[0], beta * uq[0]), (alpha * up[1], beta * uq[1])))


def _witness_key(m: AffineMap):
    entries = [e for row in m.matrix for e in row]
    ident = [1, 0, 0, 1]
    return (
        sum(e != i for e, i in zip(entries, ident)),
        sum(abs(e.numerator) + e.denominator for e in entries),
        m.det < 0,
        entries,
    )


def is_affine_image_of_basic(s: SlopeSet) -> Verdict:
    """Harmonic-range test; on success the witness maps the basic slopes onto ``s``."""
    _require_four(s)
    found = []
    for p, q, r, t in itertools.permutations(s.slopes):
        if cross_ratio(p, q, r, t) != -1:
            continue
        m = _linear_witness(p, q, r)
        images = [m.slope_image(Slope.of(d[1], d[0])) for d in (_H, _V, _D, _A)]
        if images != [p, q, r, t]:
            raise DeciderDisagreement(f"harmonic ordering {p},{q},{r},{t} without a matching linear map")
        found.append(m)
    if not found:
        return Verdict(False)
    return Verdict(True, min(found, key=_witness_key))


def _parallelogram(a: Slope, b: Slope, c: Slope, d: Slope) -> Optional[Tuple[Point, ...]]:
    """Sides of slopes ``a`` and ``b``, diagonals ``c`` (through the origin) and ``d``."""
    u, v, dc = a.direction(), b.direction(), c.direction()
    den = _det(dc, v)
    num = -_det(dc, u)
    if den == 0 or num == 0:
        return None
    tpar = Fraction(num, den)
    other = (tpar * v[0] - u[0], tpar * v[1] - u[1])
    if other == (0, 0) or Slope.of(other[1], other[0]) != d:
        return None
    return (
        Point(0, 0),
        Point(u[0], u[1]),
        Point(u[0] + tpar * v[0], u[1] + tpar * v[1]),
        Point(tpar * v[0], tpar * v[1]),
    )


def k4_parallelogram(slopes: Sequence[Slope]) -> Verdict:
    """Search every side/diagonal assignment drawn from ``slopes`` (any size, repeats allowed for diagonals)."""
    pool = SlopeSet(slopes)
    g = k4()
    for a, b in itertools.permutations(pool.slopes, 2):
        for c, d in itertools.product(pool.slopes, repeat=2):
            pts = _parallelogram(a, b, c, d)
            if pts is None:
                continue
            drawing = Drawing(g, pts, pool)
            if verify_drawing(g, drawing, pool).ok:
                return Verdict(True, drawing)
    return Verdict(False)


def can_draw_k4(s: SlopeSet) -> Verdict:
    """Whether K4 has a straight-line drawing with slopes in ``s``; witness is a verified drawing."""
    _require_four(s)
    return k4_parallelogram(s.slopes)


def is_good(s: SlopeSet) -> bool:
    affine = is_affine_image_of_basic(s)
    drawable = can_draw_k4(s)
    if affine.ok != drawable.ok:
        raise DeciderDisagreement(
            f"slope set {s}: affine test says {affine.ok}, K4 search says {drawable.ok}"
        )
    return affine.ok
