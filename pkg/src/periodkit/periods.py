"""Canonical monomials over formal period symbols, with rewrite rules.

Elements of (E (x) C)^x modulo E^x are modeled as monomials with integer
exponents over a fixed alphabet of symbols:

* ``(2πi)``            the Tate period
* ``Q[i;T]``           the i-th motivic period of the motive tagged T
* ``d[T]``             the determinant period delta
* ``D[T]``             the normalized determinant (2πi)^(n(n-1)/2) d[T]
* ``Qp[j;T]``          the prefix product Q[1]...Q[j]
* ``Qs[j;T]``          the grouped period Qp[j;T] * D[T]
* ``P[j;T]``           the j-th automorphic period (opaque symbol)
* ``Qxi[T]``           the first period of the auxiliary character motive

A tag names a motive together with functor decorations (conjugate, dual,
Tate twist, determinant).  Conjugation and dual cancel in pairs at the
tag level, mirroring that both functors are involutions.

Scalars from the coefficient field are invisible at this level, so a
monomial carries only exponents; the ``field_label`` annotation records
which field the relation is taken over and never affects equality.

The rewrite rules are the standard period relations:

=================  ==========================================================
``q_conj``         Q[i;T] -> Q[n+1-i; T^c]^-1            (conjugation toggle)
``delta_conj``     d[T^c] -> (prod_i Q[i;T]) d[T]
``delta_twist``    d[T(k)] -> (2πi)^(k n) d[T]
``delta_dual``     d[T^v] -> d[T]^-1
``conj_as_dual``   d[T^c] -> d[T^v(1-n)]      (conjugate self-dual tags only)
``q_dual``         Q[i;T^v] -> Q[n+1-i;T]^-1  (conjugate self-dual tags only)
``xi_to_delta``    Qxi[T] -> (2πi)^(-n(n-1)/2) d[T]^-1   (csd tags only)
``det_q``          Q[1;det(T)] -> prod_i Q[i;T]
=================  ==========================================================

The determinant period of the trivial motive is rational, so ``d`` of the
undecorated trivial tag is dropped when a monomial is assembled; with the
twist rule this gives the canonical form (2πi)^k for the Tate motives.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable, NamedTuple

from .errors import RuleNotApplicable, UnknownRankError

# Tag decorations.  Conjugate and dual are self-cancelling; twists merge.
_CONJ = "c"
_DUAL = "v"
_DET = "det"


@dataclass(frozen=True)
class MotiveTag:
    """A motive name plus functor decorations, rank and self-duality flag.

    ``rank`` may be None for purely formal tags; rules that need it raise
    :class:`~periodkit.errors.UnknownRankError`.  ``csd`` marks the
    underlying motive as conjugate self-dual, which gates the rules that
    are only valid in that case.
    """

    label: str
    rank: int | None = None
    csd: bool = False
    ops: tuple = ()

    def conj(self) -> "MotiveTag":
        if self.ops and self.ops[-1] == _CONJ:
            return replace(self, ops=self.ops[:-1])
        return replace(self, ops=self.ops + (_CONJ,))

    def dual(self) -> "MotiveTag":
        if self.ops and self.ops[-1] == _DUAL:
            return replace(self, ops=self.ops[:-1])
        return replace(self, ops=self.ops + (_DUAL,))

    def twist(self, k: int) -> "MotiveTag":
        if self.ops and isinstance(self.ops[-1], tuple):
            k = k + self.ops[-1][1]
            base = self.ops[:-1]
        else:
            base = self.ops
        if k == 0:
            return replace(self, ops=base)
        return replace(self, ops=base + (("t", k),))

    def det(self) -> "MotiveTag":
        return replace(self, ops=self.ops + (_DET,))

    @property
    def rank_value(self) -> int | None:
        r = self.rank
        for op in self.ops:
            if op == _DET:
                r = 1
        return r

    def require_rank(self) -> int:
        r = self.rank_value
        if r is None:
            raise UnknownRankError(f"tag {self.text()} carries no rank")
        return r

    def peel(self, kind: str):
        """Strip a trailing decoration of the given kind, or return None.

        For a twist, returns (base_tag, k); otherwise the base tag.
        """
        if not self.ops:
            return None
        last = self.ops[-1]
        if kind == "t":
            if isinstance(last, tuple) and last[0] == "t":
                return replace(self, ops=self.ops[:-1]), last[1]
            return None
        if last == kind:
            return replace(self, ops=self.ops[:-1])
        return None

    def text(self) -> str:
        s = self.label
        for op in self.ops:
            if op == _CONJ:
                s += "^c"
            elif op == _DUAL:
                s += "^v"
            elif op == _DET:
                s = f"det({s})"
            else:
                s += f"({op[1]})"
        return s

    def sort_key(self):
        return (self.text(), self.rank if self.rank is not None else -1)


#: The trivial motive (rank one, weight zero); its twists are the Tate motives.
TRIVIAL = MotiveTag("Z", rank=1)


def motive_tag(m, csd: bool = False) -> MotiveTag:
    """Tag for anything exposing ``label`` and ``rank`` attributes."""
    return MotiveTag(m.label, rank=m.rank, csd=csd)


_KIND_ORDER = {"2pi": 0, "Q": 1, "d": 2, "D": 3, "Qp": 4, "Qs": 5, "P": 6, "Qxi": 7}
_INDEXED_FROM_ONE = {"Q"}
_INDEXED_FROM_ZERO = {"Qp", "Qs", "P"}


@dataclass(frozen=True)
class PeriodSymbol:
    """One letter of the period alphabet; see the module docstring."""

    kind: str
    index: int | None = None
    tag: MotiveTag | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.kind == "2pi":
            if self.index is not None or self.tag is not None:
                raise ValueError("(2πi) carries no index or tag")
            return
        if self.tag is None:
            raise ValueError(f"symbol {self.kind} needs a motive tag")
        rank = self.tag.rank_value
        if self.kind in _INDEXED_FROM_ONE:
            if self.index is None or self.index < 1:
                raise ValueError(f"{self.kind} index starts at 1, got {self.index}")
            if rank is not None and self.index > rank:
                raise ValueError(
                    f"{self.kind} index {self.index} exceeds rank {rank} of {self.tag.text()}"
                )
        elif self.kind in _INDEXED_FROM_ZERO:
            if self.index is None or self.index < 0:
                raise ValueError(f"{self.kind} index starts at 0, got {self.index}")
            if rank is not None and self.index > rank:
                raise ValueError(
                    f"{self.kind} index {self.index} exceeds rank {rank} of {self.tag.text()}"
                )
        elif self.index is not None:
            raise ValueError(f"{self.kind} carries no index")

    def text(self) -> str:
        if self.kind == "2pi":
            return "(2πi)"
        if self.kind in ("d", "D", "Qxi"):
            return f"{self.kind}[{self.tag.text()}]"
        return f"{self.kind}[{self.index};{self.tag.text()}]"

    def sort_key(self):
        tag_key = self.tag.sort_key() if self.tag is not None else ("", -1)
        return (_KIND_ORDER[self.kind], tag_key, self.index if self.index is not None else -1)


_TWO_PI = PeriodSymbol("2pi")


def join_field_labels(a: str, b: str) -> str:
    tokens = []
    for tok in a.split(";") + b.split(";"):
        if tok and tok not in tokens:
            tokens.append(tok)
    return ";".join(tokens)


class PeriodMonomial:
    """A free-abelian-group element over period symbols.

    Zero exponents are never stored; the factor order is the canonical
    print order, so equal monomials are structurally identical.  Equality
    and hashing ignore ``field_label``.
    """

    __slots__ = ("factors", "field_label")

    def __init__(self, factors: Iterable[tuple[PeriodSymbol, int]] = (), field_label: str = ""):
        merged: dict[PeriodSymbol, int] = {}
        for sym, exp in factors:
            if exp == 0:
                continue
            # The trivial motive's comparison is rational: drop its delta.
            if sym.kind == "d" and sym.tag == TRIVIAL:
                continue
            merged[sym] = merged.get(sym, 0) + exp
        canon = tuple(
            (sym, exp)
            for sym, exp in sorted(merged.items(), key=lambda kv: kv[0].sort_key())
            if exp != 0
        )
        object.__setattr__(self, "factors", canon)
        object.__setattr__(self, "field_label", field_label)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("PeriodMonomial is immutable")

    @classmethod
    def one(cls, field_label: str = "") -> "PeriodMonomial":
        return cls((), field_label)

    def __mul__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        return PeriodMonomial(
            tuple(self.factors) + tuple(other.factors),
            join_field_labels(self.field_label, other.field_label),
        )

    def __pow__(self, k: int) -> "PeriodMonomial":
        return PeriodMonomial(((s, e * k) for s, e in self.factors), self.field_label)

    def inv(self) -> "PeriodMonomial":
        return self ** -1

    def __truediv__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        return self * other.inv()

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodMonomial) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    @property
    def is_one(self) -> bool:
        return not self.factors

    def exponent(self, sym: PeriodSymbol) -> int:
        for s, e in self.factors:
            if s == sym:
                return e
        return 0

    @property
    def two_pi_exponent(self) -> int:
        return self.exponent(_TWO_PI)

    def with_label(self, field_label: str) -> "PeriodMonomial":
        return PeriodMonomial(self.factors, field_label)

    def text(self) -> str:
        """Canonical rendering; (2πi) always shows its exponent."""
        if not self.factors:
            return "1"
        parts = []
        for sym, exp in self.factors:
            s = sym.text()
            if sym.kind == "2pi" or exp != 1:
                s += f"^{exp}"
            parts.append(s)
        return " * ".join(parts)

    def to_json(self) -> dict:
        return {
            "text": self.text(),
            "factors": [{"symbol": s.text(), "exp": e} for s, e in self.factors],
            "field_label": self.field_label,
        }

    def __repr__(self) -> str:
        return f"PeriodMonomial({self.text()!r})"


def mono_mul(x: PeriodMonomial, y: PeriodMonomial) -> PeriodMonomial:
    return x * y


def mono_pow(x: PeriodMonomial, k: int) -> PeriodMonomial:
    return x ** k


def mono_eq(x: PeriodMonomial, y: PeriodMonomial) -> bool:
    return x == y


def two_pi_i(k: int = 1) -> PeriodMonomial:
    return PeriodMonomial(((_TWO_PI, k),))


def q(i: int, tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("Q", i, tag), 1),))


def delta(tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("d", None, tag), 1),))


def delta_cap(tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("D", None, tag), 1),))


def q_paren(j: int, tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("Qp", j, tag), 1),))


def q_sup(j: int, tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("Qs", j, tag), 1),))


def p_sup(j: int, tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("P", j, tag), 1),))


def q_xi(tag: MotiveTag) -> PeriodMonomial:
    return PeriodMonomial(((PeriodSymbol("Qxi", None, tag), 1),))


def delta_tate(k: int) -> PeriodMonomial:
    """Canonical determinant period of the Tate motive: (2πi)^k."""
    return apply_rule(delta(TRIVIAL.twist(k)), "delta_twist") if k else PeriodMonomial.one()


def _q_range(tag: MotiveTag, j: int) -> PeriodMonomial:
    out = PeriodMonomial.one()
    for i in range(1, j + 1):
        out = out * q(i, tag)
    return out


def expand(x: PeriodMonomial) -> PeriodMonomial:
    """Rewrite D, Qp and Qs into the base alphabet {Q, d, (2πi)}.

    Idempotent on base symbols and a group homomorphism.  Opaque symbols
    (P, Qxi) pass through untouched.
    """
    out = PeriodMonomial.one(x.field_label)
    for sym, exp in x.factors:
        if sym.kind == "D":
            n = sym.tag.require_rank()
            piece = two_pi_i(n * (n - 1) // 2) * delta(sym.tag)
        elif sym.kind == "Qp":
            piece = _q_range(sym.tag, sym.index)
        elif sym.kind == "Qs":
            n = sym.tag.require_rank()
            piece = _q_range(sym.tag, sym.index) * two_pi_i(n * (n - 1) // 2) * delta(sym.tag)
        else:
            piece = PeriodMonomial(((sym, 1),))
        out = out * piece ** exp
    return out


# ---------------------------------------------------------------------------
# Rewrite rules.  Each matcher maps (symbol, exponent) to a replacement
# monomial, or None when the symbol does not match.

def _rule_q_conj(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "Q":
        return None
    n = sym.tag.require_rank()
    return q(n + 1 - sym.index, sym.tag.conj()) ** (-exp)


def _rule_delta_conj(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "d":
        return None
    base = sym.tag.peel(_CONJ)
    if base is None:
        return None
    n = base.require_rank()
    return (_q_range(base, n) * delta(base)) ** exp


def _rule_delta_twist(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "d":
        return None
    peeled = sym.tag.peel("t")
    if peeled is None:
        return None
    base, k = peeled
    n = base.require_rank()
    return (two_pi_i(k * n) * delta(base)) ** exp


def _rule_delta_dual(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "d":
        return None
    base = sym.tag.peel(_DUAL)
    if base is None:
        return None
    return delta(base) ** (-exp)


def _rule_conj_as_dual(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "d" or not sym.tag.csd:
        return None
    base = sym.tag.peel(_CONJ)
    if base is None:
        return None
    n = base.require_rank()
    return delta(base.dual().twist(1 - n)) ** exp


def _rule_q_dual(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "Q" or not sym.tag.csd:
        return None
    base = sym.tag.peel(_DUAL)
    if base is None:
        return None
    n = base.require_rank()
    return q(n + 1 - sym.index, base) ** (-exp)


def _rule_xi_to_delta(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "Qxi" or not sym.tag.csd:
        return None
    n = sym.tag.require_rank()
    return (two_pi_i(-(n * (n - 1) // 2)) * delta(sym.tag).inv()) ** exp


def _rule_det_q(sym: PeriodSymbol, exp: int) -> PeriodMonomial | None:
    if sym.kind != "Q" or sym.index != 1:
        return None
    base = sym.tag.peel(_DET)
    if base is None:
        return None
    n = base.require_rank()
    return _q_range(base, n) ** exp


_Rule = Callable[[PeriodSymbol, int], "PeriodMonomial | None"]

RULES: dict[str, tuple[_Rule, str]] = {
    "q_conj": (_rule_q_conj, "E"),
    "delta_conj": (_rule_delta_conj, "E"),
    "delta_twist": (_rule_delta_twist, "E;K"),
    "delta_dual": (_rule_delta_dual, "E"),
    "conj_as_dual": (_rule_conj_as_dual, "E"),
    "q_dual": (_rule_q_dual, "E"),
    "xi_to_delta": (_rule_xi_to_delta, "E;K"),
    "det_q": (_rule_det_q, "E"),
}


def apply_rule(x: PeriodMonomial, rule: str) -> PeriodMonomial:
    """Replace every factor matching the named rule by its right-hand side."""
    if rule not in RULES:
        raise KeyError(f"unknown rule {rule!r}; known: {sorted(RULES)}")
    matcher, label = RULES[rule]
    out = PeriodMonomial.one(join_field_labels(x.field_label, label))
    matched = False
    for sym, exp in x.factors:
        piece = matcher(sym, exp)
        if piece is None:
            piece = PeriodMonomial(((sym, exp),))
        else:
            matched = True
        out = out * piece
    if not matched:
        raise RuleNotApplicable(f"rule {rule!r} matches no factor of {x.text()}")
    return out


class DerivationResult(NamedTuple):
    lhs: PeriodMonomial
    rhs: PeriodMonomial
    ok: bool


def derive_delta_square_identity(n: int, label: str = "M") -> DerivationResult:
    """Derive d[M]^-2 (2πi)^(n(1-n)) = prod_i Q[i;M] for a csd motive.

    The determinant period of the conjugate is rewritten two ways: via
    the conjugation rule, and via conjugate-as-dual followed by the twist
    and dual rules.  Dividing both routes by d[M] yields the two sides of
    the identity; ``ok`` records that each route reproduces its stated
    closed form exactly.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    tag = MotiveTag(label, rank=n, csd=True)
    dc = delta(tag.conj())
    via_conj = apply_rule(dc, "delta_conj")
    via_dual = apply_rule(dc, "conj_as_dual")
    try:
        via_dual = apply_rule(via_dual, "delta_twist")
    except RuleNotApplicable:
        pass  # n = 1: the twist by 1-n is empty
    via_dual = apply_rule(via_dual, "delta_dual")
    d_inv = delta(tag).inv()
    lhs = via_dual * d_inv
    rhs = via_conj * d_inv
    ok = lhs == two_pi_i(n * (1 - n)) * delta(tag) ** -2 and rhs == _q_range(tag, n)
    return DerivationResult(lhs, rhs, ok)


def derive_grouped_period_identity(n: int, s: int, label: str = "M") -> DerivationResult:
    """Match Qs[s;M] against the dual-period expression of the s-th period.

    The right-hand side starts from Q[1;M^v]...Q[n-s;M^v] * Qxi[M], is
    rewritten through the dual rule, the rank-n identity from
    :func:`derive_delta_square_identity`, and the xi rule; ``ok`` reports exact
    monomial equality with the expansion of Qs[s;M].
    """
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    tag = MotiveTag(label, rank=n, csd=True)
    lhs = expand(q_sup(s, tag))
    rhs = PeriodMonomial.one()
    for i in range(1, n - s + 1):
        rhs = rhs * q(i, tag.dual())
    rhs = rhs * q_xi(tag)
    if s < n:
        rhs = apply_rule(rhs, "q_dual")
    identity = derive_delta_square_identity(n, label)
    rhs = rhs * identity.rhs * identity.lhs.inv()  # multiply by 1 in the period algebra
    rhs = apply_rule(rhs, "xi_to_delta")
    return DerivationResult(lhs, rhs, lhs == rhs)
