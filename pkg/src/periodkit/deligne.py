"""Deligne period of a restricted tensor product, as a period monomial.

Three closed forms are assembled over the formal period alphabet:

* the raw form  prod_{(a,b) in A} Q[a;M] Q[b;M'] * d[M]^n' * d[M']^n,
  where the tensor determinant period is eagerly rewritten as
  d(M x M') = d(M)^n' d(M')^n;
* the simplified form
  (2πi)^(-nn'(n+n'-2)/2) * prod_j Qs[j;M]^sp(j) * prod_k Qs[k;M']^sp'(k)
  whose expansion agrees exactly with the raw form;
* the conjectural right-hand side for a critical point m, which replaces
  the leading power by (2πi)^(nn'm).

Signs are dropped throughout: for motives restricted from a quadratic
imaginary field the two Deligne periods agree up to the coefficient
field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import IndexPairSet, SplitIndices, set_A, set_T, split_indices
from .errors import NonIntegerExponentError, NotCriticalError
from .hodge import RegularMotiveData, restriction_tensor
from .lfactor import critical_interval
from .periods import PeriodMonomial, delta, motive_tag, q, q_sup, two_pi_i


@dataclass(frozen=True)
class PairContext:
    """A tensor pair with its index sets and split indices precomputed.

    ``sp`` is sp(., M; M') and ``sp_sym`` is sp(., M'; M).
    """

    M: RegularMotiveData
    Mp: RegularMotiveData
    A: IndexPairSet
    T: IndexPairSet
    sp: SplitIndices
    sp_sym: SplitIndices

    @classmethod
    def build(cls, m: RegularMotiveData, mp: RegularMotiveData) -> "PairContext":
        return cls(
            M=m,
            Mp=mp,
            A=set_A(m, mp),
            T=set_T(m, mp),
            sp=split_indices(m, mp),
            sp_sym=split_indices(mp, m),
        )

    def consistent(self) -> bool:
        """Recompute the cached sets and indices and compare."""
        fresh = PairContext.build(self.M, self.Mp)
        return (
            self.A == fresh.A
            and self.T == fresh.T
            and self.sp == fresh.sp
            and self.sp_sym == fresh.sp_sym
        )


def deligne_period_raw(ctx: PairContext) -> PeriodMonomial:
    """The Deligne period as a product over the index set A."""
    tm = motive_tag(ctx.M)
    tmp = motive_tag(ctx.Mp)
    out = PeriodMonomial.one("EE'")
    for a, b in ctx.A.sorted_members():
        out = out * q(a, tm) * q(b, tmp)
    out = out * delta(tm) ** ctx.Mp.rank * delta(tmp) ** ctx.M.rank
    return out


def deligne_period_simplified(ctx: PairContext) -> PeriodMonomial:
    """The Deligne period grouped through the Qs periods and split indices."""
    n, np_ = ctx.M.rank, ctx.Mp.rank
    tm = motive_tag(ctx.M)
    tmp = motive_tag(ctx.Mp)
    lead = -n * np_ * (n + np_ - 2)
    assert lead % 2 == 0
    out = two_pi_i(lead // 2).with_label("EE'")
    for j in range(n + 1):
        out = out * q_sup(j, tm) ** ctx.sp[j]
    for k in range(np_ + 1):
        out = out * q_sup(k, tmp) ** ctx.sp_sym[k]
    return out


def conjecture_rhs_motivic(ctx: PairContext, m: Fraction | int) -> PeriodMonomial:
    """Predicted period of the L-value at m, for m + (n+n'-2)/2 critical."""
    n, np_ = ctx.M.rank, ctx.Mp.rank
    m = Fraction(m)
    shift = Fraction(n + np_ - 2, 2)
    interval = critical_interval(restriction_tensor(ctx.M, ctx.Mp))
    if (m + shift).denominator != 1 or (m + shift) not in interval:
        legal = f"[{interval.lo - shift}, {interval.hi - shift}]"
        raise NotCriticalError(
            f"m = {m} is not critical for the pair; critical m lie in {legal}",
            interval=interval,
        )
    lead = m * n * np_
    if lead.denominator != 1:  # unreachable for m on the critical grid
        raise NonIntegerExponentError(f"(2πi) exponent {lead} is not an integer")
    tm = motive_tag(ctx.M)
    tmp = motive_tag(ctx.Mp)
    out = two_pi_i(int(lead)).with_label("EE'")
    for j in range(n + 1):
        out = out * q_sup(j, tm) ** ctx.sp[j]
    for k in range(np_ + 1):
        out = out * q_sup(k, tmp) ** ctx.sp_sym[k]
    return out
