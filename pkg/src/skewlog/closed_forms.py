"""Closed-form companion expressions for the tagged series.

Each ClosedFormId names the dilogarithm/trilogarithm expression that a
series in the catalog converges to.  Arguments produced by the mu-family
transformations can leave [-1, 1]; those go through private real-axis
extensions of li2/li3 built on the standard inversion formulas, keeping the
public polylog API restricted to [-1, 1].

Three catalog entries are shipped in corrected form; the verification
report carries numeric evidence for each correction:

* the version-B antiderivative of Li2(t)/(1-t) needs the constant pi^2/6
  (not pi/6) in its log(1-x) coefficient;
* the MU_LEWIN companion series carries weight (-1)^(n-1) mu H_n^-(mu)
  (writing the inner sum as sum_k (-1)^(k-1) mu^k / k = +mu H_n^-(mu)
  under an outer (-1)^n weight flips the series sign);
* the MU_TRILOG companion needs an extra factor mu in front of the series.
"""

from __future__ import annotations

import enum
import math

from .core_numerics import CONSTANTS, LOG2
from .errors import DomainError, PoleError
from .polylog import li2, li3
from .series_engine import SeriesId, sum_series

_PI_SQ_OVER_6 = CONSTANTS["PI_SQ_OVER_6"]
_PI_SQ_OVER_12 = CONSTANTS["PI_SQ_OVER_12"]
_LI2_HALF = CONSTANTS["LI2_HALF"]
_LI3_HALF = CONSTANTS["LI3_HALF"]
_ZETA3 = CONSTANTS["ZETA3"]

#: Half-width of the window around a removable point where the limit value
#: is substituted (or a pole is refused).
NEAR_POLE_WINDOW = 1e-8


class ClosedFormId(enum.Enum):
    EQ2 = "EQ2"
    EQ3 = "EQ3"
    EQ5 = "EQ5"
    EQ8 = "EQ8"
    EQ11 = "EQ11"
    EQ12 = "EQ12"
    EQ13 = "EQ13"
    EQ17 = "EQ17"
    EQ20 = "EQ20"
    EQ22 = "EQ22"
    EQ24 = "EQ24"
    EQ25_ABEL = "EQ25_ABEL"
    EQ26 = "EQ26"
    EQ27_RAMANUJAN = "EQ27_RAMANUJAN"
    EQ28 = "EQ28"
    EQ29_G = "EQ29_G"
    EQ30_BIGG = "EQ30_BIGG"
    LANDEN = "LANDEN"


def _li2_ext(w: float) -> float:
    """li2 extended to w <= 1 by the real inversion formula."""
    if w > 1.0:
        raise DomainError("li2 extension requires w <= 1")
    if w >= -1.0:
        return li2(w)
    lw = math.log(-w)
    return -li2(1.0 / w) - _PI_SQ_OVER_6 - 0.5 * lw * lw


def _li3_ext(w: float) -> float:
    """li3 extended to w <= 1 by the real inversion formula."""
    if w > 1.0:
        raise DomainError("li3 extension requires w <= 1")
    if w >= -1.0:
        return li3(w)
    lw = math.log(-w)
    return li3(1.0 / w) - lw**3 / 6.0 - _PI_SQ_OVER_6 * lw


def _check_mu(mu: float) -> float:
    if not -1.0 < mu <= 1.0:
        raise DomainError("mu must satisfy -1 < mu <= 1")
    return float(mu)


def _eq3(t: float) -> float:
    if not (-1.0 < t <= 1.0):
        raise DomainError("EQ3 requires -1 < t <= 1")
    if abs(1.0 - t) < NEAR_POLE_WINDOW:
        return -0.5  # removable: log((1+t)/2)/(1-t) -> -1/2
    return (math.log1p(t) - LOG2) / (1.0 - t)


def _eq5(t: float) -> float:
    if not (-1.0 <= t <= 1.0):
        raise DomainError("EQ5 requires -1 <= t <= 1")
    if abs(1.0 - t) < NEAR_POLE_WINDOW:
        raise PoleError("EQ5 diverges at t = 1 (log(1-t) term)")
    return li2(0.5 * (1.0 - t)) - _LI2_HALF - li2(-t) - LOG2 * math.log1p(-t)


def _eq8(t: float) -> float:
    if not (-1.0 <= t <= 1.0):
        raise DomainError("EQ8 requires -1 <= t <= 1")
    return li2(0.5 * (1.0 - t)) - _LI2_HALF - li2(-t)


def _eq11(t: float) -> float:
    if not (-1.0 <= t <= 1.0):
        raise DomainError("EQ11 requires -1 <= t <= 1")
    return li2(0.5 * (1.0 - t)) - _LI2_HALF


def _eq12(t: float) -> float:
    if not (-1.0 < t < 1.0):
        raise DomainError("EQ12 requires |t| < 1")
    if abs(1.0 - t) < NEAR_POLE_WINDOW:
        # the bracket tends to log^2 2 != 0, so 1/(1-t) is a genuine pole
        raise PoleError("EQ12 has a simple pole at t = 1")
    num = (
        li2(t)
        + 2.0 * LOG2 * math.log1p(t)
        + 2.0 * _LI2_HALF
        - 2.0 * li2(0.5 * (1.0 + t))
    )
    return num / (1.0 - t)


def _eq13(t: float) -> float:
    if not (-1.0 <= t <= 1.0):
        raise DomainError("EQ13 requires -1 <= t <= 1")
    if abs(1.0 - t) < NEAR_POLE_WINDOW:
        return LOG2  # removable limit
    num = li2(t) + LOG2 * LOG2 - 2.0 * (li2(0.5 * (1.0 + t)) - _LI2_HALF)
    return num / (1.0 - t)


def _eq20(x: float) -> float:
    if not (-1.0 / 3.0 <= x <= 1.0):
        raise DomainError("EQ20 requires -1/3 <= x <= 1")
    l1px = math.log1p(x)
    return (
        li3(2.0 * x / (1.0 + x))
        - li3(x / (1.0 + x))
        - li3(0.5 * (1.0 + x))
        + _LI3_HALF
        - li3(x)
        + l1px * (li2(x) + _LI2_HALF + 0.5 * LOG2 * l1px)
    )


def _eq22(x: float, mu: float) -> float:
    if not (-1.0 < x < 1.0):
        raise DomainError("EQ22 requires |x| < 1")
    return (
        _li2_ext(mu * (1.0 + x) / (1.0 + mu))
        - _li2_ext(mu / (1.0 + mu))
        - math.log1p(mu) * math.log1p(x)
    )


def _eq24(x: float, mu: float) -> float:
    if not (-1.0 < x < 1.0):
        raise DomainError("EQ24 requires |x| < 1")
    return _li2_ext((1.0 + mu) * x / (1.0 + x)) - _li2_ext(x / (1.0 + x))


def _eq26_rhs(x: float) -> float:
    l1px = math.log1p(x)
    return (
        -li2(0.5 * (1.0 + x))
        + _LI2_HALF
        + li2(x)
        - li2(-x)
        + LOG2 * l1px
        - 0.5 * l1px * l1px
    )


def _eq26(x: float) -> float:
    if not (-1.0 / 3.0 <= x <= 1.0):
        raise DomainError("EQ26 requires -1/3 <= x <= 1")
    return _eq26_rhs(x)


def _li2_two_x_over_1px(x: float) -> float:
    """Li2(2x/(1+x)) continued to -1 < x < -1/3, where 2x/(1+x) < -1."""
    if x >= -1.0 / 3.0:
        return li2(2.0 * x / (1.0 + x))
    return _eq26_rhs(x)


def _eq27(x: float) -> float:
    if not (-1.0 < x < 1.0):
        raise DomainError("EQ27 requires |x| < 1")
    r = math.log1p(-x) - math.log1p(x)  # log((1-x)/(1+x))
    return _li2_two_x_over_1px(x) + 0.25 * r * r


def _eq28(x: float, mu: float) -> float:
    if not (-1.0 < x < 1.0):
        raise DomainError("EQ28 requires |x| < 1")
    return _li3_ext((1.0 + mu) * x / (1.0 + x)) - _li3_ext(x / (1.0 + x))


def _landen(x: float) -> float:
    if not (-1.0 < x <= 1.0):
        raise DomainError("LANDEN requires -1 < x <= 1")
    l1px = math.log1p(x)
    return -0.5 * l1px * l1px - li2(-x)


def int_li2_over_1mt(
    x: float, version: str = "auto", b_constant_corrected: bool = True
) -> float:
    """Antiderivative J(x) = integral_0^x Li2(t)/(1-t) dt, -1 <= x < 1.

    Two independent closed forms are provided: version "a" holds on
    [-1, 1/2], version "b" on [0, 1); "auto" picks whichever applies.  The
    b_constant_corrected switch exists purely as evidence plumbing: with
    False, version "b" uses the (wrong) constant pi/6 instead of pi^2/6 in
    its log(1-x) coefficient, and the mismatch is surfaced in verification
    report notes.
    """
    if not (-1.0 <= x < 1.0):
        raise DomainError("int_li2_over_1mt requires -1 <= x < 1")
    if version == "auto":
        version = "a" if x <= 0.5 else "b"
    if version == "a":
        if x > 0.5:
            raise DomainError("version a holds on -1 <= x <= 1/2")
        return (
            -2.0 * li3(-x / (1.0 - x))
            - 2.0 * li3(x)
            + math.log1p(-x) * li2(x)
            + math.log1p(-x) ** 3 / 3.0
        )
    if version == "b":
        if x < 0.0:
            raise DomainError("version b holds on 0 <= x < 1")
        const = _PI_SQ_OVER_6 if b_constant_corrected else math.pi / 6.0
        return 2.0 * (li3(1.0 - x) - _ZETA3) - math.log1p(-x) * (
            li2(1.0 - x) + const
        )
    raise ValueError("version must be 'auto', 'a' or 'b'")


#: Exact endpoint constants for the shifted squared-coefficient series.
EQ18_VALUE = 1.5 * _ZETA3 - _PI_SQ_OVER_6 * LOG2 - LOG2**3 / 3.0
EQ19_VALUE = _PI_SQ_OVER_12 * LOG2 - 0.75 * _ZETA3 - LOG2**3 / 3.0


def closed_form_eq17(x: float) -> float:
    """Closed form of sum_n (H_n^- - log 2)^2 x^(n+1)/(n+1) on [-1, 1].

    The assembled expression has removable 0 * inf products at both
    endpoints, so x within NEAR_POLE_WINDOW of +-1 returns the exact limit
    values EQ18_VALUE / EQ19_VALUE instead.
    """
    if not (-1.0 <= x <= 1.0):
        raise DomainError("closed_form_eq17 requires -1 <= x <= 1")
    if abs(1.0 - x) < NEAR_POLE_WINDOW:
        return EQ18_VALUE
    if abs(1.0 + x) < NEAR_POLE_WINDOW:
        return EQ19_VALUE
    j = int_li2_over_1mt(x)
    l1mx = math.log1p(-x)
    l1px = math.log1p(x)
    half_up = li2(0.5 * (1.0 + x))
    return (
        j
        + l1mx * (2.0 * half_up - _PI_SQ_OVER_6)
        + 2.0 * l1px * (l1mx * l1mx - LOG2 * LOG2)
        + 2.0 * LOG2 * (half_up - _LI2_HALF)
        - 2.0 * LOG2 * l1mx * l1mx
        + 4.0 * l1mx * li2(0.5 * (1.0 - x))
        - 4.0 * (li3(0.5 * (1.0 - x)) - _LI3_HALF)
    )


def abel_sides(mu: float, x: float) -> tuple[float, float]:
    """Both sides of the five-term Abel relation for (mu, x)."""
    mu = _check_mu(mu)
    if not (-1.0 < x < 1.0):
        raise DomainError("abel relation requires |x| < 1")
    lhs = (
        _li2_ext((1.0 + mu) * x / (1.0 + x))
        + _li2_ext(mu * (1.0 + x) / (1.0 + mu))
        - li2(mu * x)
    )
    rhs = (
        _li2_ext(x / (1.0 + x))
        + _li2_ext(mu / (1.0 + mu))
        + math.log1p(mu) * math.log1p(x)
    )
    return lhs, rhs


def abel_residual(mu: float, x: float) -> float:
    lhs, rhs = abel_sides(mu, x)
    return lhs - rhs


def ramanujan_eq27_residual(x: float) -> float:
    """Closed dilogarithm side minus the odd-harmonic series at x."""
    r = sum_series(SeriesId.RAMANUJAN_ODD, x, 1e-13)
    return _eq27(x) - r.value


_MU_FORMS = {ClosedFormId.EQ22, ClosedFormId.EQ24,
             ClosedFormId.EQ25_ABEL, ClosedFormId.EQ28}

_DOMAIN_TEXT: dict[ClosedFormId, str] = {
    ClosedFormId.EQ2: "|t| < 1",
    ClosedFormId.EQ3: "-1 < t <= 1",
    ClosedFormId.EQ5: "-1 <= t <= 1, t != 1",
    ClosedFormId.EQ8: "|t| <= 1",
    ClosedFormId.EQ11: "|t| <= 1",
    ClosedFormId.EQ12: "|t| < 1",
    ClosedFormId.EQ13: "|t| <= 1",
    ClosedFormId.EQ17: "|t| <= 1",
    ClosedFormId.EQ20: "-1/3 <= t <= 1",
    ClosedFormId.EQ22: "|t| < 1, -1 < mu <= 1",
    ClosedFormId.EQ24: "|t| < 1, -1 < mu <= 1",
    ClosedFormId.EQ25_ABEL: "|t| < 1, -1 < mu <= 1",
    ClosedFormId.EQ26: "-1/3 <= t <= 1",
    ClosedFormId.EQ27_RAMANUJAN: "|t| < 1",
    ClosedFormId.EQ28: "|t| < 1, -1 < mu <= 1",
    ClosedFormId.EQ29_G: "|t| <= 1",
    ClosedFormId.EQ30_BIGG: "|t| <= 1",
    ClosedFormId.LANDEN: "-1 < t <= 1",
}


def closed_form_catalog() -> list[tuple[str, str]]:
    """(closed-form tag, domain) rows in enum order, for the CLI listing."""
    return [(cid.name, _DOMAIN_TEXT[cid]) for cid in ClosedFormId]


def closed_form(cf_id: ClosedFormId, t: float, mu: float | None = None) -> float:
    """Evaluate the tagged closed form at t (and mu where required)."""
    if cf_id in _MU_FORMS:
        if mu is None:
            raise ValueError(f"{cf_id.name} requires mu")
        mu = _check_mu(mu)
    elif mu is not None:
        raise ValueError(f"{cf_id.name} takes no mu")
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("t must be finite")

    if cf_id is ClosedFormId.EQ2:
        if not (-1.0 < t < 1.0):
            raise DomainError("EQ2 requires |t| < 1")
        return math.log1p(t) / (1.0 - t)
    if cf_id is ClosedFormId.EQ3:
        return _eq3(t)
    if cf_id is ClosedFormId.EQ5:
        return _eq5(t)
    if cf_id is ClosedFormId.EQ8:
        return _eq8(t)
    if cf_id is ClosedFormId.EQ11:
        return _eq11(t)
    if cf_id is ClosedFormId.EQ12:
        return _eq12(t)
    if cf_id is ClosedFormId.EQ13:
        return _eq13(t)
    if cf_id is ClosedFormId.EQ17:
        return closed_form_eq17(t)
    if cf_id is ClosedFormId.EQ20:
        return _eq20(t)
    if cf_id is ClosedFormId.EQ22:
        return _eq22(t, mu)
    if cf_id is ClosedFormId.EQ24:
        return _eq24(t, mu)
    if cf_id is ClosedFormId.EQ25_ABEL:
        return abel_sides(mu, t)[1]
    if cf_id is ClosedFormId.EQ26:
        return _eq26(t)
    if cf_id is ClosedFormId.EQ27_RAMANUJAN:
        return _eq27(t)
    if cf_id is ClosedFormId.EQ28:
        return _eq28(t, mu)
    if cf_id is ClosedFormId.EQ29_G:
        return _eq13(t)
    if cf_id is ClosedFormId.EQ30_BIGG:
        return closed_form_eq17(t)
    if cf_id is ClosedFormId.LANDEN:
        return _landen(t)
    raise ValueError(f"unknown closed form {cf_id!r}")
