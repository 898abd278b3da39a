"""Archimedean Gamma-factor bookkeeping and critical points.

The archimedean factor of the L-function of a weight-w Hodge multiset H
without (p,p)-class is the product over classes (p,q) with p < q of
Gamma_C(s - p)^mult, where Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).  An
integer m is critical when neither this factor nor the one of the dual
evaluated at 1 - s has a pole at m.

Two independent computations of the critical set are provided:

* :func:`critical_interval` uses the closed form p < m < q + 1;
* :func:`critical_interval_via_poles` scans integers and tests the two
  pole conditions directly (Gamma has poles at the non-positive
  integers).

Their agreement is a cross-check exercised by the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterator

from .errors import NotCriticalPairError, PpClassError
from .hodge import HalfInt, HodgeMultiset

if TYPE_CHECKING:  # pragma: no cover
    from .automorphic import InfinityTypeData


@dataclass(frozen=True)
class GammaFactor:
    """Multiset of Gamma_C shifts: the factor is prod Gamma_C(s - p)^mult."""

    shifts: tuple[tuple[int, int], ...]

    def has_pole_at(self, s: int | Fraction) -> bool:
        """Gamma_C(s - p) has a pole iff s - p is a non-positive integer."""
        return any(s <= p for p, _ in self.shifts)


@dataclass(frozen=True)
class CriticalInterval:
    """Inclusive interval of critical points, stepping by 1 from lo.

    Endpoints are integers on the motivic side and may be half-integers
    on the automorphic side; in both cases the points form lo, lo+1, ...
    """

    lo: int | Fraction
    hi: int | Fraction

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, m) -> bool:
        if self.empty:
            return False
        return self.lo <= m <= self.hi and Fraction(m - self.lo).denominator == 1

    def points(self) -> Iterator[int | Fraction]:
        m = self.lo
        while m <= self.hi:
            yield m
            m = m + 1

    def __str__(self) -> str:
        if self.empty:
            return "(empty)"
        return f"[{self.lo}, {self.hi}]"


def _require_no_pp(h: HodgeMultiset) -> None:
    p = h.pp_class()
    if p is not None:
        raise PpClassError(
            f"Hodge multiset has a ({p},{p})-class; no critical points exist",
            pair=(p, p),
        )


def gamma_factor(h: HodgeMultiset) -> GammaFactor:
    """Shifts of the archimedean factor: the p of every class with p < q."""
    _require_no_pp(h)
    shifts = tuple(sorted((p, m) for p, q, m in h.items() if p < q))
    return GammaFactor(shifts)


def critical_interval(h: HodgeMultiset) -> CriticalInterval:
    """Closed-form critical set: 1 + max p <= m <= min q over classes p < q."""
    _require_no_pp(h)
    ps = [p for p, q, _ in h.items() if p < q]
    qs = [q for p, q, _ in h.items() if p < q]
    return CriticalInterval(1 + max(ps), min(qs))


def critical_interval_via_poles(h: HodgeMultiset) -> CriticalInterval:
    """Critical set by direct pole scan, independent of the closed form.

    Scans every integer m in [min(p,q)-1, max(p,q)+1]; outside that range
    one of the two pole conditions always fires.  m survives when the
    factor of h has no pole at m and the factor of the dual has no pole
    at 1 - m.
    """
    _require_no_pp(h)
    g = gamma_factor(h)
    g_dual = gamma_factor(h.dual())
    indices = [v for p, q, _ in h.items() for v in (p, q)]
    lo_scan, hi_scan = min(indices) - 1, max(indices) + 1
    kept = [
        m
        for m in range(lo_scan, hi_scan + 1)
        if not g.has_pole_at(m) and not g_dual.has_pole_at(1 - m)
    ]
    if not kept:
        return CriticalInterval(0, -1)
    if kept != list(range(kept[0], kept[-1] + 1)):
        raise AssertionError(f"pole scan produced a non-interval: {kept}")
    return CriticalInterval(kept[0], kept[-1])


def pair_critical_points(pi: "InfinityTypeData", pip: "InfinityTypeData") -> CriticalInterval:
    """Critical points of a pair of infinity types, in Z + (n+n')/2.

    For every pair of exponents a_i (from pi) and b_j (from pip), with
    W the sum of the two purity weights: if a_i + b_j > -W/2 the point
    must satisfy -a_i - b_j < m < a_i + b_j + W + 1, otherwise
    a_i + b_j + W < m < -a_i - b_j + 1.  All bounds lie on the same
    half-integer grid as m, so the strict inequalities tighten by 1.
    """
    w_sum = pi.w + pip.w
    forbidden = Fraction(-w_sum, 2)
    lows: list[Fraction] = []
    highs: list[Fraction] = []
    for i, a in enumerate(pi.a, start=1):
        for j, b in enumerate(pip.a, start=1):
            s = a + b
            if s == forbidden:
                raise NotCriticalPairError(
                    f"exponent sum a_{i} + b_{j} = {s} hits -(w+w')/2; "
                    "the pair has no critical values",
                    pair=(i, j),
                )
            if s > forbidden:
                lows.append(-s)
                highs.append(s + w_sum + 1)
            else:
                lows.append(s + w_sum)
                highs.append(-s + 1)
    lo = max(lows) + 1
    hi = min(highs) - 1
    grid = Fraction(pi.n + pip.n, 2)
    if Fraction(lo - grid).denominator != 1:  # pragma: no cover - parity guard
        raise AssertionError(f"interval endpoint {lo} off the Z+(n+n')/2 grid")
    return CriticalInterval(HalfInt(lo), HalfInt(hi))
