"""Harmonic-family prefix sums, reference constants, and half-integer digamma
differences.

Everything downstream (series coefficients, closed forms, the verifier's
discrete identities) consumes these values, so they are computed once into a
compensated prefix cache and treated as exact thereafter.
"""

from __future__ import annotations

import math
import threading

from .errors import DomainError

#: Decimal literals with >= 17 significant digits, never computed at startup.
CONSTANTS: dict[str, float] = {
    "LOG2": 0.69314718055994530942,
    "PI": 3.1415926535897932385,
    "PI_SQ_OVER_6": 1.6449340668482264365,
    "PI_SQ_OVER_12": 0.82246703342411321824,
    "ZETA3": 1.2020569031595942854,
    "CATALAN_G": 0.91596559417721901505,
    "EULER_GAMMA": 0.57721566490153286061,
    "LI2_HALF": 0.58224052646501250590,
    "LI3_HALF": 0.53721319360804020094,
    "LI2_MINUS1": -0.82246703342411321824,
    "LI3_MINUS1": -0.90154267736969571405,
}

LOG2 = CONSTANTS["LOG2"]

DEFAULT_CACHE_LIMIT = 1_000_000


class HarmonicCache:
    """Prefix sums H_n, H_n^(2) and the skew variant H_n^-, grown lazily.

    values_h[n], values_h2[n], values_skew[n] hold the sums for index n with
    the 0-th entries equal to 0.  Accumulation is forward with Kahan
    compensation, which keeps every cached prefix within a couple of ulp of
    the exactly rounded sum for n up to the cache limit.  Growth happens
    under a lock; entries already filled are immutable, so concurrent reads
    need no synchronization.
    """

    def __init__(self, limit: int = DEFAULT_CACHE_LIMIT) -> None:
        if limit < 1:
            raise ValueError("cache limit must be positive")
        self.limit = int(limit)
        self.values_h: list[float] = [0.0]
        self.values_h2: list[float] = [0.0]
        self.values_skew: list[float] = [0.0]
        self._carry = [0.0, 0.0, 0.0]  # Kahan compensations for the 3 sums
        self._lock = threading.Lock()

    def ensure(self, n: int) -> None:
        """Fill the cache through index n.  Usage error beyond the limit."""
        if n > self.limit:
            raise ValueError(
                f"index {n} exceeds the configured cache limit {self.limit}"
            )
        if n < len(self.values_h):
            return
        with self._lock:
            start = len(self.values_h)
            if n < start:
                return
            h, h2, sk = self.values_h, self.values_h2, self.values_skew
            ch, ch2, csk = self._carry
            vh, vh2, vsk = h[-1], h2[-1], sk[-1]
            for k in range(start, n + 1):
                inv = 1.0 / k
                y = inv - ch
                t = vh + y
                ch = (t - vh) - y
                vh = t
                h.append(vh)

                y = inv * inv - ch2
                t = vh2 + y
                ch2 = (t - vh2) - y
                vh2 = t
                h2.append(vh2)

                y = (inv if k % 2 == 1 else -inv) - csk
                t = vsk + y
                csk = (t - vsk) - y
                vsk = t
                sk.append(vsk)
            self._carry = [ch, ch2, csk]

    def h(self, n: int) -> float:
        self.ensure(n)
        return self.values_h[n]

    def h2(self, n: int) -> float:
        self.ensure(n)
        return self.values_h2[n]

    def skew(self, n: int) -> float:
        self.ensure(n)
        return self.values_skew[n]


_CACHE = HarmonicCache()


def _check_index(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError("n must be an integer")
    if n < 0:
        raise DomainError("n must be >= 0")
    return n


def harmonic(n: int) -> float:
    """H_n = sum_{k=1..n} 1/k, with harmonic(0) = 0."""
    return _CACHE.h(_check_index(n))


def harmonic2(n: int) -> float:
    """H_n^(2) = sum_{k=1..n} 1/k^2, with harmonic2(0) = 0."""
    return _CACHE.h2(_check_index(n))


def skew_harmonic(n: int) -> float:
    """H_n^- = 1 - 1/2 + ... + (-1)^(n-1)/n, with skew_harmonic(0) = 0."""
    return _CACHE.skew(_check_index(n))


def odd_harmonic(n: int) -> float:
    """O_n = 1 + 1/3 + ... + 1/(2n-1), via O_n = H_{2n} - H_n/2."""
    _check_index(n)
    return _CACHE.h(2 * n) - 0.5 * _CACHE.h(n)


def skew_harmonic_mu(n: int, mu: float) -> float:
    """The polynomial sum_{k=1..n} (-mu)^(k-1) / k.

    Defined for n >= 1; reduces to skew_harmonic(n) at mu = 1.  The intended
    parameter range is |mu| < 1 with the endpoints admitted as closure.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("n must be an integer >= 1")
    terms = []
    p = 1.0
    for k in range(1, n + 1):
        terms.append(p / k)
        p *= -mu
    return math.fsum(terms)


def digamma_half_diff(n: int) -> float:
    """psi((n+1)/2) - psi(n/2) for integer n >= 1.

    Uses the exact half-integer recurrences psi(x+1) = psi(x) + 1/x with
    base values psi(1) = -gamma and psi(1/2) = -gamma - 2 log 2; gamma
    cancels in the difference, leaving only harmonic-type sums.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("n must be an integer >= 1")
    if n % 2 == 0:
        m = n // 2
        # psi(m + 1/2) - psi(m)
        return -2.0 * LOG2 + 2.0 * odd_harmonic(m) - harmonic(m - 1)
    m = (n - 1) // 2
    # psi(m + 1) - psi(m + 1/2)
    return harmonic(m) + 2.0 * LOG2 - 2.0 * odd_harmonic(m)


def constant(name: str) -> float:
    """Look up a ConstantTable entry by name."""
    try:
        return CONSTANTS[name]
    except KeyError:
        raise KeyError(
            f"unknown constant {name!r}; valid names: {', '.join(sorted(CONSTANTS))}"
        ) from None
