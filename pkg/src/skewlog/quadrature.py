"""Adaptive quadrature for the double-integral representations.

1D: Gauss-Kronrod 7/15 under worst-interval bisection.  2D: embedded
8x8 / 16x16 tensor Gauss-Legendre panels under adaptive quadrant
subdivision.  All nodes are interior, so integrable endpoint or corner
singularities never get sampled; adaptivity grades panels toward them.
Panel contributions are totalled with fsum in a fixed geometric order, so
results are deterministic regardless of refinement order.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .result import EvalResult, Status


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    singular_corner_substitution: bool = True

    def __post_init__(self) -> None:
        if not (isinstance(self.abs_tol, float) and self.abs_tol >= 1e-15):
            raise ValueError("abs_tol must be a float >= 1e-15")
        if not (isinstance(self.rel_tol, float) and self.rel_tol >= 1e-15):
            raise ValueError("rel_tol must be a float >= 1e-15")
        if not (
            isinstance(self.max_subdivisions, int)
            and 1 <= self.max_subdivisions <= 1_000_000
        ):
            raise ValueError("max_subdivisions must be an int in [1, 1e6]")
        if not isinstance(self.singular_corner_substitution, bool):
            raise ValueError("singular_corner_substitution must be a bool")


_DEFAULT_CFG = QuadratureConfig()

# Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule
# is symmetric).  Gauss weights apply to the odd-indexed Kronrod nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    """15-point Kronrod value and |K15 - G7| error estimate on [a, b]."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fc = f(c)
    k = _WGK[7] * fc
    g = _WG[3] * fc
    for i in range(7):
        x = h * _XGK[i]
        s = f(c - x) + f(c + x)
        k += _WGK[i] * s
        if i % 2 == 1:
            g += _WG[i // 2] * s
    return h * k, abs(h * (k - g))


def integrate_1d(f, a: float, b: float, cfg: QuadratureConfig | None = None) -> EvalResult:
    """Oriented adaptive integral of f from a to b."""
    cfg = cfg or _DEFAULT_CFG
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if a == b:
        return EvalResult(0.0, 0.0, 0, Status.CONVERGED)
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0

    scale = max(abs(a), abs(b), 1.0)
    val, err = _gk15(f, a, b)
    heap = [(-err, 0, a, b, val, err)]
    frozen: list[tuple[float, float, float, float]] = []  # unsplittable
    evals = 15
    seq = 1
    splits = 0
    while splits < cfg.max_subdivisions:
        total_val = math.fsum(x[4] for x in heap) + math.fsum(x[2] for x in frozen)
        total_err = math.fsum(x[5] for x in heap) + math.fsum(x[3] for x in frozen)
        target = max(cfg.abs_tol, cfg.rel_tol * abs(total_val))
        if 2.0 * total_err <= 0.5 * target or not heap:
            break
        _, _, pa, pb, pv, pe = heapq.heappop(heap)
        if pb - pa < 1e-14 * scale:
            frozen.append((pa, pb, pv, pe))
            continue
        mid = 0.5 * (pa + pb)
        v1, e1 = _gk15(f, pa, mid)
        v2, e2 = _gk15(f, mid, pb)
        evals += 30
        heapq.heappush(heap, (-e1, seq, pa, mid, v1, e1))
        heapq.heappush(heap, (-e2, seq + 1, mid, pb, v2, e2))
        seq += 2
        splits += 1

    panels = sorted(
        [(x[2], x[3], x[4], x[5]) for x in heap] + frozen,
        key=lambda p: (p[0], p[1]),
    )
    value = math.fsum(p[2] for p in panels)
    err_sum = math.fsum(p[3] for p in panels)
    bound = 2.0 * err_sum + 1e-16 * (1.0 + abs(value))
    target = max(cfg.abs_tol, cfg.rel_tol * abs(value))
    status = Status.CONVERGED if bound <= target else Status.MAX_TERMS
    return EvalResult(sign * value, bound, evals, status)


@lru_cache(maxsize=None)
def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _panel_2d(f2, x0, x1, y0, y1) -> tuple[float, float]:
    """16x16 tensor value and |I16 - I8| estimate on a rectangle."""
    hx, hy = 0.5 * (x1 - x0), 0.5 * (y1 - y0)
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    vals = []
    for n in (16, 8):
        xn, wn = _gl_nodes(n)
        gx = cx + hx * xn
        gy = cy + hy * xn
        fv = f2(gx[:, None], gy[None, :])
        vals.append(hx * hy * float(wn @ fv @ wn))
    return vals[0], abs(vals[0] - vals[1])


def _adapt_2d(f2, cfg: QuadratureConfig, tol_abs: float | None = None) -> EvalResult:
    """Adaptive quadtree integration of f2 over [0,1]^2."""
    abs_tol = cfg.abs_tol if tol_abs is None else tol_abs
    v, e = _panel_2d(f2, 0.0, 1.0, 0.0, 1.0)
    heap = [(-e, 0, 0.0, 1.0, 0.0, 1.0, v, e)]
    frozen: list[tuple] = []
    evals = 256 + 64
    seq = 1
    splits = 0
    while splits < cfg.max_subdivisions:
        total_val = math.fsum(x[6] for x in heap) + math.fsum(x[4] for x in frozen)
        total_err = math.fsum(x[7] for x in heap) + math.fsum(x[5] for x in frozen)
        target = max(abs_tol, cfg.rel_tol * abs(total_val))
        if 1.5 * total_err <= 0.5 * target or not heap:
            break
        _, _, x0, x1, y0, y1, pv, pe = heapq.heappop(heap)
        if x1 - x0 < 1e-13:
            frozen.append((x0, x1, y0, y1, pv, pe))
            continue
        xm, ym = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
        for qx0, qx1 in ((x0, xm), (xm, x1)):
            for qy0, qy1 in ((y0, ym), (ym, y1)):
                qv, qe = _panel_2d(f2, qx0, qx1, qy0, qy1)
                evals += 256 + 64
                heapq.heappush(heap, (-qe, seq, qx0, qx1, qy0, qy1, qv, qe))
                seq += 1
        splits += 1

    panels = sorted(
        [(x[2], x[4], x[3], x[5], x[6], x[7]) for x in heap]
        + [(x[0], x[2], x[1], x[3], x[4], x[5]) for x in frozen]
    )
    value = math.fsum(p[4] for p in panels)
    err_sum = math.fsum(p[5] for p in panels)
    bound = 1.5 * err_sum + 2e-16 * (1.0 + abs(value))
    target = max(abs_tol, cfg.rel_tol * abs(value))
    status = Status.CONVERGED if bound <= target else Status.MAX_TERMS
    return EvalResult(value, bound, evals, status)


def _check_z(z: float) -> float:
    if not (isinstance(z, (int, float)) and -1.0 <= z <= 1.0):
        raise DomainError("z must lie in [-1, 1]")
    return float(z)


def double_integral_g(z: float, cfg: QuadratureConfig | None = None) -> EvalResult:
    """g(z) = integral over [0,1]^2 of 1 / ((1 - xyz)(1+x)(1+y)).

    At z = 1 the integrand blows up like 1/(u+v) at the (1,1) corner
    (integrable).  With cfg.singular_corner_substitution the change of
    variables u = 1-x, v = 1-y moves the singularity to the origin and the
    quadtree grades dyadic panels into it; accuracy target there is 1e-6
    rather than the interior 1e-8.
    """
    z = _check_z(z)
    cfg = cfg or _DEFAULT_CFG

    if z == 1.0 and cfg.singular_corner_substitution:
        def f2(u, v):
            return 1.0 / ((u + v - u * v) * (2.0 - u) * (2.0 - v))

        return _adapt_2d(f2, cfg, tol_abs=max(cfg.abs_tol, 1e-8))

    def f2(x, y):
        return 1.0 / ((1.0 - x * y * z) * (1.0 + x) * (1.0 + y))

    return _adapt_2d(f2, cfg)


def double_integral_bigG(z: float, cfg: QuadratureConfig | None = None) -> EvalResult:
    """G(z) = -integral over [0,1]^2 of log(1 - xyz) / (xy (1+x)(1+y)).

    The xy -> 0 limit of -log(1-xyz)/(xy) is z (removable); for
    xy |z| < 1e-4 the factor is replaced by its power series through w^5
    (w = xyz, truncation below 1e-24) to avoid cancellation.
    """
    z = _check_z(z)
    cfg = cfg or _DEFAULT_CFG

    def f2(x, y):
        xy = x * y
        w = xy * z
        guard = np.abs(w) < 1e-4
        xy_safe = np.where(guard, 1.0, xy)
        direct = -np.log1p(-w) / xy_safe
        series = z * (
            1.0 + w * (1.0 / 2.0 + w * (1.0 / 3.0 + w * (
                1.0 / 4.0 + w * (1.0 / 5.0 + w / 6.0))))
        )
        return np.where(guard, series, direct) / ((1.0 + x) * (1.0 + y))

    tol_abs = max(cfg.abs_tol, 1e-8) if abs(z) == 1.0 else None
    return _adapt_2d(f2, cfg, tol_abs=tol_abs)


def double_integral_eq31(cfg: QuadratureConfig | None = None) -> EvalResult:
    """Integral over [0,1]^2 of x^2 y^2 / ((1 + x^2 y^2)(1+x)(1+y))."""
    cfg = cfg or _DEFAULT_CFG

    def f2(x, y):
        s = (x * y) ** 2
        return s / ((1.0 + s) * (1.0 + x) * (1.0 + y))

    return _adapt_2d(f2, cfg)


def double_integral_eq32(cfg: QuadratureConfig | None = None) -> EvalResult:
    """Integral over [0,1]^2 of log(1 + xy) / ((1+x)(1+y))."""
    cfg = cfg or _DEFAULT_CFG

    def f2(x, y):
        return np.log1p(x * y) / ((1.0 + x) * (1.0 + y))

    return _adapt_2d(f2, cfg)
