"""Tagged power series with rigorous tail bounds.

Each SeriesId names one concrete power series sum_{n} a_n t^(n+p) whose
coefficients involve skew-harmonic numbers.  sum_series evaluates it three
ways depending on t:

* interior |t| < 1: direct summation, geometric tail bound
  env(N+1) |t|^(N+1+p) / (1 - |t|), where env is a per-series nonincreasing
  majorant of |a_n|;
* alternating endpoint: iterated averaging (accelerate_alternating) with a
  bracket-width bound;
* one-signed endpoint: direct partial sum plus an explicit tail correction
  built from the asymptotic c_n = (-1)^n (log 2 - H_n^-) ~ u/2 + u^2/4
  - u^4/8 + O(u^6) in u = 1/(n+1), with the next omitted order as bound.

Every returned error_bound is meant to be honest: re-evaluating with more
terms moves the value by at most the reported bound.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .core_numerics import (
    LOG2,
    odd_harmonic,
    skew_harmonic,
    skew_harmonic_mu,
)
from .errors import DomainError
from .result import EvalResult, Status

DEFAULT_MAX_TERMS = 200_000
_max_terms = DEFAULT_MAX_TERMS


def set_max_terms(n: int) -> None:
    """Set the global term cap used by sum_series."""
    global _max_terms
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("max terms must be a positive integer")
    _max_terms = n


def get_max_terms() -> int:
    return _max_terms


class SeriesId(enum.Enum):
    GF_SKEW = "GF_SKEW"
    GF_CENTERED = "GF_CENTERED"
    SKEW_OVER_N = "SKEW_OVER_N"
    CENTERED_OVER_N = "CENTERED_OVER_N"
    CENTERED_SHIFT = "CENTERED_SHIFT"
    SKEW_SQ = "SKEW_SQ"
    CENTERED_SQ = "CENTERED_SQ"
    CENTERED_SQ_SHIFT = "CENTERED_SQ_SHIFT"
    SKEW_OVER_NSQ = "SKEW_OVER_NSQ"
    MU_LEWIN = "MU_LEWIN"
    MU_DILOG = "MU_DILOG"
    MU_TRILOG = "MU_TRILOG"
    RAMANUJAN_ODD = "RAMANUJAN_ODD"


def _c(n: int) -> float:
    """c_n = (-1)^n (log 2 - H_n^-) = integral_0^1 x^n/(1+x) dx > 0."""
    d = LOG2 - skew_harmonic(n)
    return d if n % 2 == 0 else -d


def _c_mu(mu: float) -> float:
    """Uniform bound on |H_n^-(mu)| over n >= 1 for -1 < mu <= 1."""
    if mu >= 0.0:
        return 1.0
    a = -mu
    return -math.log1p(-a) / a


@dataclass(frozen=True)
class _SeriesSpec:
    label: str            # companion closed-form tag, interface data
    p: int                # value = t^p * sum a_n t^n
    needs_mu: bool
    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool
    exclude_plus_one: bool
    domain_text: str
    coeff: Callable[[int, float | None], float]
    env: Callable[[int, float | None], float]

    def in_domain(self, t: float) -> bool:
        if t == 1.0 and self.exclude_plus_one:
            return False
        if not (self.lo < t < self.hi):
            if t == self.lo and self.lo_closed:
                return True
            if t == self.hi and self.hi_closed:
                return True
            return False
        return True


def _coeff_gf_skew(n: int, mu: float | None) -> float:
    return skew_harmonic(n) if n >= 1 else 0.0


def _coeff_gf_centered(n: int, mu: float | None) -> float:
    return skew_harmonic(n) - LOG2


def _coeff_skew_over_n(n: int, mu: float | None) -> float:
    return skew_harmonic(n) / n if n >= 1 else 0.0


def _coeff_centered_over_n(n: int, mu: float | None) -> float:
    return (skew_harmonic(n) - LOG2) / n if n >= 1 else 0.0


def _coeff_centered_shift(n: int, mu: float | None) -> float:
    return (skew_harmonic(n) - LOG2) / (n + 1)


def _coeff_skew_sq(n: int, mu: float | None) -> float:
    return skew_harmonic(n) ** 2 if n >= 1 else 0.0


def _coeff_centered_sq(n: int, mu: float | None) -> float:
    return (skew_harmonic(n) - LOG2) ** 2


def _coeff_centered_sq_shift(n: int, mu: float | None) -> float:
    return (skew_harmonic(n) - LOG2) ** 2 / (n + 1)


def _coeff_skew_over_nsq(n: int, mu: float | None) -> float:
    return skew_harmonic(n) / (n + 1) ** 2 if n >= 1 else 0.0


def _coeff_mu_lewin(n: int, mu: float | None) -> float:
    if n < 1:
        return 0.0
    sign = 1.0 if n % 2 == 1 else -1.0
    return mu * sign * skew_harmonic_mu(n, mu) / (n + 1)


def _coeff_mu_dilog(n: int, mu: float | None) -> float:
    if n < 1:
        return 0.0
    sign = 1.0 if n % 2 == 1 else -1.0
    return mu * sign * skew_harmonic_mu(n, mu) / n


def _coeff_mu_trilog(n: int, mu: float | None) -> float:
    if n < 1:
        return 0.0
    sign = 1.0 if n % 2 == 1 else -1.0
    inner = math.fsum(skew_harmonic_mu(k, mu) / k for k in range(1, n + 1))
    return sign * inner / n


def _coeff_ramanujan(n: int, mu: float | None) -> float:
    if n < 1 or n % 2 == 0:
        return 0.0
    m = (n + 1) // 2
    return 2.0 * odd_harmonic(m) / n


def _env_one(n: int, mu: float | None) -> float:
    return 1.0


def _env_inv(n: int, mu: float | None) -> float:
    return 1.0 / max(n, 1)


def _env_half_inv_sq(n: int, mu: float | None) -> float:
    # |(H_n^- - log 2)/n| = c_n/n <= 1/(2n^2) for n >= 1
    return 0.5 / max(n, 1) ** 2


def _env_inv_np1_sq(n: int, mu: float | None) -> float:
    return 1.0 / (n + 1) ** 2


def _env_inv_np1(n: int, mu: float | None) -> float:
    return 1.0 / (n + 1)


def _env_inv_np1_cube(n: int, mu: float | None) -> float:
    return 1.0 / (n + 1) ** 3


def _env_mu_shift(n: int, mu: float | None) -> float:
    return abs(mu) * _c_mu(mu) / (n + 1)


def _env_mu_over_n(n: int, mu: float | None) -> float:
    return abs(mu) * _c_mu(mu) / max(n, 1)


def _env_mu_log(n: int, mu: float | None) -> float:
    n = max(n, 1)
    return _c_mu(mu) * (1.0 + math.log(n)) / n


def _env_ramanujan(n: int, mu: float | None) -> float:
    n = max(n, 1)
    return (2.0 + math.log(n)) / n


_SPECS: dict[SeriesId, _SeriesSpec] = {
    SeriesId.GF_SKEW: _SeriesSpec(
        "EQ2", 0, False, -1.0, 1.0, False, False, False, "|t| < 1",
        _coeff_gf_skew, _env_one),
    SeriesId.GF_CENTERED: _SeriesSpec(
        "EQ3", 0, False, -1.0, 1.0, False, True, False, "|t| < 1 or t = 1",
        _coeff_gf_centered, _env_inv_np1),
    SeriesId.SKEW_OVER_N: _SeriesSpec(
        "EQ5", 0, False, -1.0, 1.0, True, False, True, "|t| <= 1, t != 1",
        _coeff_skew_over_n, _env_inv),
    SeriesId.CENTERED_OVER_N: _SeriesSpec(
        "EQ8", 0, False, -1.0, 1.0, True, True, False, "|t| <= 1",
        _coeff_centered_over_n, _env_half_inv_sq),
    SeriesId.CENTERED_SHIFT: _SeriesSpec(
        "EQ11", 1, False, -1.0, 1.0, True, True, False, "|t| <= 1",
        _coeff_centered_shift, _env_inv_np1_sq),
    SeriesId.SKEW_SQ: _SeriesSpec(
        "EQ12", 0, False, -1.0, 1.0, False, False, False, "|t| < 1",
        _coeff_skew_sq, _env_one),
    SeriesId.CENTERED_SQ: _SeriesSpec(
        "EQ13", 0, False, -1.0, 1.0, True, True, False, "|t| <= 1",
        _coeff_centered_sq, _env_inv_np1_sq),
    SeriesId.CENTERED_SQ_SHIFT: _SeriesSpec(
        "EQ17", 1, False, -1.0, 1.0, True, True, False, "|t| <= 1",
        _coeff_centered_sq_shift, _env_inv_np1_cube),
    SeriesId.SKEW_OVER_NSQ: _SeriesSpec(
        "EQ20", 1, False, -1.0 / 3.0, 1.0, True, True, False,
        "-1/3 <= t <= 1",
        _coeff_skew_over_nsq, _env_inv_np1_sq),
    SeriesId.MU_LEWIN: _SeriesSpec(
        "EQ22", 1, True, -1.0, 1.0, False, False, False,
        "|t| < 1, -1 < mu <= 1",
        _coeff_mu_lewin, _env_mu_shift),
    SeriesId.MU_DILOG: _SeriesSpec(
        "EQ24", 0, True, -1.0, 1.0, False, False, False,
        "|t| < 1, -1 < mu <= 1",
        _coeff_mu_dilog, _env_mu_over_n),
    SeriesId.MU_TRILOG: _SeriesSpec(
        "EQ28", 0, True, -1.0, 1.0, False, False, False,
        "|t| < 1, -1 < mu <= 1",
        _coeff_mu_trilog, _env_mu_log),
    SeriesId.RAMANUJAN_ODD: _SeriesSpec(
        "EQ27", 0, False, -1.0, 1.0, False, False, False, "|t| < 1",
        _coeff_ramanujan, _env_ramanujan),
}


def series_catalog() -> list[tuple[str, str, str]]:
    """(series tag, companion closed-form tag, domain) rows, enum order."""
    return [(sid.name, sp.label, sp.domain_text) for sid, sp in _SPECS.items()]


def coefficient(series_id: SeriesId, n: int, mu: float | None = None) -> float:
    """Coefficient a_n of the tagged series (exact rule, no caching tricks)."""
    spec = _SPECS[series_id]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError("n must be an integer >= 0")
    if spec.needs_mu and mu is None:
        raise ValueError(f"{series_id.name} requires mu")
    if not spec.needs_mu and mu is not None:
        raise ValueError(f"{series_id.name} takes no mu")
    return spec.coeff(n, mu)


def _coeff_stream(series_id: SeriesId, mu: float | None) -> Iterator[float]:
    """Yields a_0, a_1, ... with O(1) incremental work per term.

    Kahan-compensated running accumulators keep the streamed coefficients
    within a few ulp of the batch rule in `coefficient`.
    """
    spec = _SPECS[series_id]
    if series_id in (SeriesId.MU_LEWIN, SeriesId.MU_DILOG, SeriesId.MU_TRILOG):
        yield 0.0
        s = 0.0    # running H_n^-(mu)
        cs = 0.0
        inner = 0.0  # running sum_k H_k^-(mu)/k
        ci = 0.0
        p = 1.0    # (-mu)^(n-1)
        for n in itertools.count(1):
            y = p / n - cs
            t = s + y
            cs = (t - s) - y
            s = t
            p *= -mu
            sign = 1.0 if n % 2 == 1 else -1.0
            if series_id is SeriesId.MU_LEWIN:
                yield mu * sign * s / (n + 1)
            elif series_id is SeriesId.MU_DILOG:
                yield mu * sign * s / n
            else:
                y = s / n - ci
                t = inner + y
                ci = (t - inner) - y
                inner = t
                yield sign * inner / n
    else:
        for n in itertools.count(0):
            yield spec.coeff(n, mu)


def cauchy_divide(coeffs: list[float], lam: float, n_out: int) -> list[float]:
    """Coefficients of (sum a_n t^n) / (1 - lam t) through order n_out.

    The recurrence b_n = lam * b_(n-1) + a_n is the Cauchy product with the
    geometric series and gives b_n = sum_{k<=n} lam^(n-k) a_k exactly.
    """
    if n_out < 0:
        raise ValueError("n_out must be >= 0")
    if len(coeffs) < n_out + 1:
        raise ValueError("need at least n_out + 1 input coefficients")
    out = []
    b = 0.0
    for n in range(n_out + 1):
        b = lam * b + coeffs[n]
        out.append(b)
    return out


# -- alternating / one-signed endpoint machinery ----------------------------

_FP_SLACK = 2e-16


def accelerate_alternating(terms: list[float], tol: float) -> EvalResult:
    """Estimate the limit of sum(terms + tail) from a finite prefix.

    For strictly alternating input with nonincreasing magnitudes, iterated
    averaging of the partial sums is used; consecutive entries of every row
    bracket the limit, so half the tightest bracket is a rigorous bound.
    One-signed input falls back to Richardson extrapolation of the partial
    sums at geometrically spaced indices (a documented asymptotic model,
    bound 4x the last extrapolation increment).  Anything else is summed
    plainly with a last-term scale bound.
    """
    if tol <= 0.0 or not math.isfinite(tol):
        raise ValueError("tol must be positive")
    terms = [float(x) for x in terms]
    if not terms:
        raise ValueError("terms must be non-empty")
    if len(terms) == 1:
        c = terms[0]
        bound = abs(c)
        status = Status.CONVERGED if bound <= tol else Status.MAX_TERMS
        return EvalResult(c, bound, 1, status)

    signs = [1 if x > 0 else -1 for x in terms if x != 0.0]
    alternating = (
        len(signs) == len(terms)
        and all(signs[i] == -signs[i + 1] for i in range(len(signs) - 1))
    )
    mags = [abs(x) for x in terms]
    nonincreasing = all(
        mags[i + 1] <= mags[i] * (1.0 + 1e-12) for i in range(len(mags) - 1)
    )
    one_signed = len(signs) == len(terms) and all(s == signs[0] for s in signs)

    partials = list(itertools.accumulate(terms))

    if alternating and nonincreasing:
        value, bound = _average_brackets(partials, terms)
    elif one_signed and nonincreasing and len(terms) >= 8:
        value, bound = _richardson_limit(partials)
    else:
        value = math.fsum(terms)
        bound = 2.0 * abs(terms[-1]) + 8e-16 * (1.0 + abs(value))
    status = Status.CONVERGED if bound <= tol else Status.MAX_TERMS
    return EvalResult(value, bound, len(terms), status)


def _average_brackets(partials: list[float], terms: list[float]) -> tuple[float, float]:
    row = partials
    best_val = partials[-1]
    best_hw = abs(terms[-1])
    while len(row) >= 2:
        a, b = row[-2], row[-1]
        hw = 0.5 * abs(b - a)
        if hw < best_hw:
            best_hw = hw
            best_val = 0.5 * (a + b)
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
    bound = 1.25 * best_hw + 8e-16 * (1.0 + abs(best_val))
    return best_val, bound


def _richardson_limit(partials: list[float]) -> tuple[float, float]:
    # Neville extrapolation to h = 0 of s_k against h = 1/k at k, k/2, k/4...
    m = len(partials)
    ks = []
    k = m
    while k >= 4 and len(ks) < 8:
        ks.append(k)
        k //= 2
    xs = [1.0 / k for k in ks]
    tab = [partials[k - 1] for k in ks]
    diag = [tab[0]]
    for j in range(1, len(tab)):
        for i in range(len(tab) - 1, j - 1, -1):
            tab[i] = tab[i] + (tab[i] - tab[i - 1]) * xs[i] / (xs[i - j] - xs[i])
        diag.append(tab[-1])
    est = diag[-1]
    step = abs(diag[-1] - diag[-2]) if len(diag) >= 2 else abs(est)
    bound = 4.0 * step + 8e-15 * (1.0 + abs(est))
    return est, bound


def _tail_zeta(s: int, m_start: int) -> float:
    """sum_{n >= m_start} n^-s by Euler-Maclaurin; error << the model errors
    these tails get folded into (next omitted term is O(m^-(s+5)))."""
    m = float(m_start)
    if s == 2:
        return 1.0 / m + 0.5 / m**2 + 1.0 / (6.0 * m**3) - 1.0 / (30.0 * m**5)
    if s == 3:
        return 0.5 / m**2 + 0.5 / m**3 + 0.25 / m**4 - 1.0 / (12.0 * m**6)
    if s == 4:
        return 1.0 / (3.0 * m**3) + 0.5 / m**4 + 1.0 / (3.0 * m**5) - 1.0 / (6.0 * m**7)
    if s == 5:
        return 0.25 / m**4 + 0.5 / m**5 + 5.0 / (12.0 * m**6)
    raise ValueError("tail order not supported")


# Tail models for the one-signed endpoint sums, from
# c_n = u/2 + u^2/4 - u^4/8 + O(u^6), u = 1/(n+1).  Each returns the
# correction for sum over n > N and a rigorous bound on its model error.

def _tail_c_over_n(N: int) -> tuple[float, float]:
    # c_n/n = u^2/2 + 3u^3/4 + O(u^4)
    m = N + 2
    return 0.5 * _tail_zeta(2, m) + 0.75 * _tail_zeta(3, m), 2.0 * _tail_zeta(4, m)


def _tail_c_shift(N: int) -> tuple[float, float]:
    # c_n/(n+1) = u^2/2 + u^3/4 + O(u^5)
    m = N + 2
    return 0.5 * _tail_zeta(2, m) + 0.25 * _tail_zeta(3, m), _tail_zeta(4, m)


def _tail_c_sq(N: int) -> tuple[float, float]:
    # c_n^2 = u^2/4 + u^3/4 + u^4/16 + O(u^5)
    m = N + 2
    t = 0.25 * _tail_zeta(2, m) + 0.25 * _tail_zeta(3, m) + _tail_zeta(4, m) / 16.0
    return t, _tail_zeta(5, m) + 0.25 * _tail_zeta(4, m)


def _tail_c_sq_shift(N: int) -> tuple[float, float]:
    # c_n^2/(n+1) = u^3/4 + u^4/4 + O(u^5)
    m = N + 2
    return 0.25 * _tail_zeta(3, m) + 0.25 * _tail_zeta(4, m), _tail_zeta(5, m)


def _size_endpoint(tail_fn: Callable[[int], tuple[float, float]], tol: float) -> int:
    n = 512
    while tail_fn(n)[1] > 0.5 * tol and 2 * n <= _max_terms:
        n *= 2
    return min(n, _max_terms)


def _endpoint_one_signed(
    term_fn: Callable[[int], float],
    n_start: int,
    tail_fn: Callable[[int], tuple[float, float]],
    tail_sign: float,
    tol: float,
) -> EvalResult:
    N = _size_endpoint(tail_fn, tol)
    partial = math.fsum(term_fn(n) for n in range(n_start, N + 1))
    correction, model_err = tail_fn(N)
    value = partial + tail_sign * correction
    bound = model_err + _FP_SLACK * (1.0 + abs(value))
    status = Status.CONVERGED if bound <= tol else Status.MAX_TERMS
    return EvalResult(value, bound, N + 1 - n_start, status)


def _endpoint_alternating(
    series_id: SeriesId, sign: float, tol: float, prefactor: float
) -> EvalResult:
    spec = _SPECS[series_id]
    m = 64
    best: EvalResult | None = None
    while True:
        stream = _coeff_stream(series_id, None)
        terms = []
        s = 1.0
        for n in range(m):
            a = next(stream)
            terms.append(a * s)
            s *= sign
        while terms and terms[0] == 0.0:
            terms.pop(0)
        r = accelerate_alternating(terms, tol)
        if best is None or r.error_bound < best.error_bound:
            best = EvalResult(prefactor * r.value, r.error_bound, m, r.status)
        if best.converged() or m >= 1024:
            return best
        m *= 2


def _endpoint_skew_over_n_neg1(tol: float) -> EvalResult:
    # sum_{n>=1} (-1)^n H_n^-/n: split H_n^- = log2 - (-1)^n c_n; the
    # alternating log2 part beyond N is exactly -log2 * (-1)^N c_N, the c
    # part gets the c_n/n tail model.
    def tail(N: int) -> tuple[float, float]:
        t, b = _tail_c_over_n(N)
        return t, b

    N = _size_endpoint(tail, tol)
    partial = math.fsum(
        (skew_harmonic(n) / n if n % 2 == 0 else -skew_harmonic(n) / n)
        for n in range(1, N + 1)
    )
    alt_rem = -LOG2 * ((1.0 if N % 2 == 0 else -1.0) * _c(N))
    correction, model_err = tail(N)
    value = partial + alt_rem - correction
    bound = model_err + _FP_SLACK * (1.0 + abs(value))
    status = Status.CONVERGED if bound <= tol else Status.MAX_TERMS
    return EvalResult(value, bound, N, status)


def _endpoint_skew_over_nsq_pos1(tol: float) -> EvalResult:
    # sum_{n>=1} H_n^-/(n+1)^2 at t = 1: H_n^- = log2 - (-1)^n c_n; the
    # log2 part beyond N is log2 * tail_zeta(2, N+2), the alternating c part
    # is bounded by its first term ~ 1/(2 (N+2)^3).
    def bound_fn(N: int) -> tuple[float, float]:
        return 0.0, (N + 2.0) ** -3

    N = _size_endpoint(bound_fn, tol)
    partial = math.fsum(
        skew_harmonic(n) / (n + 1) ** 2 for n in range(1, N + 1)
    )
    value = partial + LOG2 * _tail_zeta(2, N + 2)
    bound = (N + 2.0) ** -3 + _FP_SLACK * (1.0 + abs(value))
    status = Status.CONVERGED if bound <= tol else Status.MAX_TERMS
    return EvalResult(value, bound, N, status)


def _dispatch_endpoint(series_id: SeriesId, t: float, tol: float) -> EvalResult:
    sid = SeriesId
    if series_id is sid.GF_CENTERED and t == 1.0:
        return _endpoint_alternating(series_id, 1.0, tol, 1.0)
    if series_id is sid.CENTERED_OVER_N:
        if t == 1.0:
            return _endpoint_alternating(series_id, 1.0, tol, 1.0)
        return _endpoint_one_signed(
            lambda n: -_c(n) / n, 1, _tail_c_over_n, -1.0, tol)
    if series_id is sid.CENTERED_SHIFT:
        if t == 1.0:
            return _endpoint_alternating(series_id, 1.0, tol, 1.0)
        # t^p prefactor is -1; the inner sum is -sum c_n/(n+1)
        return _endpoint_one_signed(
            lambda n: _c(n) / (n + 1), 0, _tail_c_shift, 1.0, tol)
    if series_id is sid.CENTERED_SQ:
        if t == -1.0:
            return _endpoint_alternating(series_id, -1.0, tol, 1.0)
        return _endpoint_one_signed(
            lambda n: _c(n) ** 2, 0, _tail_c_sq, 1.0, tol)
    if series_id is sid.CENTERED_SQ_SHIFT:
        if t == -1.0:
            return _endpoint_alternating(series_id, -1.0, tol, -1.0)
        return _endpoint_one_signed(
            lambda n: _c(n) ** 2 / (n + 1), 0, _tail_c_sq_shift, 1.0, tol)
    if series_id is sid.SKEW_OVER_N and t == -1.0:
        return _endpoint_skew_over_n_neg1(tol)
    if series_id is sid.SKEW_OVER_NSQ and t == 1.0:
        return _endpoint_skew_over_nsq_pos1(tol)
    raise AssertionError(f"no endpoint rule for {series_id} at t={t}")


def sum_series(
    series_id: SeriesId,
    t: float,
    tol: float = 1e-12,
    mu: float | None = None,
    *,
    min_terms: int = 0,
) -> EvalResult:
    """Evaluate the tagged series at t to absolute tolerance tol.

    Out-of-domain t (or mu) yields status DIVERGENT_INPUT with value nan
    rather than an exception.  min_terms forces at least that many interior
    terms; it exists so callers can check bound honesty and is ignored at
    |t| = 1.
    """
    spec = _SPECS[series_id]
    if not (isinstance(tol, (int, float)) and tol > 0.0 and math.isfinite(tol)):
        raise ValueError("tol must be a positive finite number")
    if spec.needs_mu and mu is None:
        raise ValueError(f"{series_id.name} requires mu")
    if not spec.needs_mu and mu is not None:
        raise ValueError(f"{series_id.name} takes no mu")
    if spec.needs_mu and not (-1.0 < mu <= 1.0):
        return EvalResult(math.nan, math.inf, 0, Status.DIVERGENT_INPUT)
    if not (isinstance(t, (int, float)) and math.isfinite(t)) or not spec.in_domain(float(t)):
        return EvalResult(math.nan, math.inf, 0, Status.DIVERGENT_INPUT)
    t = float(t)

    if abs(t) == 1.0:
        return _dispatch_endpoint(series_id, t, tol)

    if t == 0.0:
        a0 = spec.coeff(0, mu) if spec.p == 0 else 0.0
        return EvalResult(a0, 0.0, 1, Status.CONVERGED)

    q = abs(t)
    geom = q ** (spec.p + 1) / (1.0 - q)
    cap = get_max_terms()
    stream = _coeff_stream(series_id, mu)
    terms: list[float] = []
    pw = 1.0
    tail = math.inf
    hit_cap = True
    for n in range(cap):
        terms.append(next(stream) * pw)
        pw *= t
        tail = spec.env(n + 1, mu) * geom
        geom *= q
        if tail <= 0.5 * tol and n + 1 >= min_terms:
            hit_cap = False
            break
    value = math.fsum(terms) * t**spec.p if spec.p else math.fsum(terms)
    bound = tail + _FP_SLACK * (1.0 + abs(value))
    if hit_cap or bound > tol:
        return EvalResult(value, bound, len(terms), Status.MAX_TERMS)
    return EvalResult(value, bound, len(terms), Status.CONVERGED)
