"""Exact re-derivation of the Deligne period formula by symbolic determinant.

The coefficient matrix of the comparison isomorphism, restricted to the
basis vectors outside the index sets A and T, is assembled over a
Laurent-polynomial ring with one variable per matrix coefficient A_ia,
B_jb and per period Q_t, Q'_u.  Its exact determinant, multiplied by the
cleared period monomial, must agree up to a global sign (a column-order
choice) with det(A)^n' det(B)^n, the determinant of the Kronecker
product.  The check runs over exact integers; there is no floating
point and no modular shortcut.

The determinant uses dynamic programming over column subsets (row-major
Laplace expansion with memoization), with exponent vectors packed into
single integers so that monomial multiplication is one addition.  Cost
grows as 2^size, hence the configurable size bound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations

from .deligne import PairContext
from .errors import SizeLimitError

DEFAULT_SIZE_LIMIT = 12
SIZE_LIMIT_ENV = "PK_MAX_ORACLE_SIZE"


def configured_size_limit() -> int:
    raw = os.environ.get(SIZE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SIZE_LIMIT_ENV} must be an integer, got {raw!r}") from None


class LaurentPoly:
    """Multivariate Laurent polynomial with exact integer coefficients.

    Terms map exponent vectors (one slot per variable, negatives allowed)
    to non-zero integers.  The variable table is a shared tuple of names;
    operations require both operands to carry the same table.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict[tuple[int, ...], int] | None = None):
        self.vars = vars
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "LaurentPoly":
        return cls(vars)

    @classmethod
    def one(cls, vars: tuple[str, ...]) -> "LaurentPoly":
        return cls(vars, {(0,) * len(vars): 1})

    @classmethod
    def monomial(
        cls, vars: tuple[str, ...], exps: dict[int, int], coeff: int = 1
    ) -> "LaurentPoly":
        key = [0] * len(vars)
        for idx, e in exps.items():
            key[idx] += e
        return cls(vars, {tuple(key): coeff})

    @classmethod
    def var(cls, vars: tuple[str, ...], idx: int, exp: int = 1) -> "LaurentPoly":
        return cls.monomial(vars, {idx: exp})

    def _check(self, other: "LaurentPoly") -> None:
        if self.vars != other.vars:
            raise ValueError("operands live over different variable tables")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            n = terms.get(k, 0) + c
            if n:
                terms[k] = n
            elif k in terms:
                del terms[k]
        return LaurentPoly(self.vars, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                n = out.get(k, 0) + ca * cb
                if n:
                    out[k] = n
                elif k in out:
                    del out[k]
        return LaurentPoly(self.vars, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("only non-negative powers are supported")
        out = LaurentPoly.one(self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):  # pragma: no cover - polynomials are not dict keys
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for key in sorted(self.terms):
            c = self.terms[key]
            names = [
                f"{self.vars[i]}^{e}" if e != 1 else self.vars[i]
                for i, e in enumerate(key)
                if e
            ]
            body = "*".join(names) if names else "1"
            chunks.append(f"{c}*{body}" if c != 1 or not names else body)
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


@dataclass(frozen=True)
class SymMatrix:
    """A square matrix of Laurent polynomials with labeled rows and columns."""

    vars: tuple[str, ...]
    rows: tuple[tuple[LaurentPoly, ...], ...]
    row_desc: tuple = ()
    col_desc: tuple = ()

    @property
    def size(self) -> int:
        return len(self.rows)


def sym_det(mx: SymMatrix) -> LaurentPoly:
    """Exact determinant by column-subset dynamic programming.

    Exponent vectors are packed into single integers with a per-variable
    bit field wide enough for every intermediate product, so the result
    is exact and independent of evaluation order.
    """
    k = mx.size
    if k == 0:
        return LaurentPoly.one(mx.vars)
    for row in mx.rows:
        if len(row) != k:
            raise ValueError("matrix is not square")
    nv = len(mx.vars)
    max_abs = 1
    for row in mx.rows:
        for poly in row:
            for key in poly.terms:
                for e in key:
                    if abs(e) > max_abs:
                        max_abs = abs(e)
    width = (k * max_abs + 1).bit_length() + 1
    bias = 1 << (width - 1)
    mask = (1 << width) - 1
    bias_key = sum(bias << (width * i) for i in range(nv))

    def pack(key: tuple[int, ...]) -> int:
        return sum((e + bias) << (width * i) for i, e in enumerate(key))

    packed_rows = [
        [{pack(key): c for key, c in poly.terms.items()} for poly in row]
        for row in mx.rows
    ]

    states: dict[int, dict[int, int]] = {0: {bias_key: 1}}
    for r in range(k):
        new_states: dict[int, dict[int, int]] = {}
        for col_mask, poly in states.items():
            for c in range(k):
                bit = 1 << c
                if col_mask & bit:
                    continue
                entry = packed_rows[r][c]
                if not entry:
                    continue
                negative = bin(col_mask >> (c + 1)).count("1") % 2 == 1
                target = new_states.setdefault(col_mask | bit, {})
                for ke, ce in entry.items():
                    if negative:
                        ce = -ce
                    shift = ke - bias_key
                    for kp, cp in poly.items():
                        nk = kp + shift
                        n = target.get(nk, 0) + ce * cp
                        if n:
                            target[nk] = n
                        elif nk in target:
                            del target[nk]
        states = new_states

    final = states.get((1 << k) - 1, {})
    terms: dict[tuple[int, ...], int] = {}
    for packed, c in final.items():
        key = tuple(((packed >> (width * i)) & mask) - bias for i in range(nv))
        terms[key] = c
    return LaurentPoly(mx.vars, terms)


def naive_det(mx: SymMatrix) -> LaurentPoly:
    """Permutation-sum determinant, used as an independent reference."""
    k = mx.size
    out = LaurentPoly.zero(mx.vars)
    for perm in permutations(range(k)):
        inversions = sum(
            1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j]
        )
        term = LaurentPoly.one(mx.vars)
        for r in range(k):
            term = term * mx.rows[r][perm[r]]
        out = out + (-term if inversions % 2 else term)
    return out


# ---------------------------------------------------------------------------
# Variable table and matrix assembly for a tensor pair.


@dataclass(frozen=True)
class PairVariables:
    """Variable layout: A_ia block, B_jb block, then Q and Q' blocks."""

    n: int
    np: int
    names: tuple[str, ...]

    @classmethod
    def build(cls, n: int, np_: int) -> "PairVariables":
        names = []
        for i in range(1, n + 1):
            for a in range(1, n + 1):
                names.append(f"A[{i},{a}]")
        for j in range(1, np_ + 1):
            for b in range(1, np_ + 1):
                names.append(f"B[{j},{b}]")
        for t in range(1, n + 1):
            names.append(f"Q[{t}]")
        for u in range(1, np_ + 1):
            names.append(f"Q'[{u}]")
        return cls(n, np_, tuple(names))

    def a_idx(self, i: int, a: int) -> int:
        return (i - 1) * self.n + (a - 1)

    def b_idx(self, j: int, b: int) -> int:
        return self.n * self.n + (j - 1) * self.np + (b - 1)

    def q_idx(self, t: int) -> int:
        return self.n * self.n + self.np * self.np + (t - 1)

    def qp_idx(self, u: int) -> int:
        return self.n * self.n + self.np * self.np + self.n + (u - 1)


def _complement_columns(ctx: PairContext) -> tuple[list, list]:
    n, np_ = ctx.M.rank, ctx.Mp.rank
    all_pairs = [(x, y) for x in range(1, n + 1) for y in range(1, np_ + 1)]
    cols_a = [p for p in all_pairs if p not in ctx.A.members]
    cols_t = [p for p in all_pairs if p not in ctx.T.members]
    return cols_a, cols_t


def build_mat1(ctx: PairContext) -> SymMatrix:
    """The nn' x nn' coefficient matrix of the comparison isomorphism.

    Rows run over (i, j) lexicographically.  Columns list first the pairs
    (a, b) outside A with entries A_ia B_jb, then the pairs (t, u)
    outside T with entries Q_{n+1-t}^-1 Q'_{n'+1-u}^-1 A_{i,n+1-t}
    B_{j,n'+1-u}, using that the conjugate coefficients are the plain
    ones divided by the matching period.
    """
    n, np_ = ctx.M.rank, ctx.Mp.rank
    pv = PairVariables.build(n, np_)
    cols_a, cols_t = _complement_columns(ctx)
    col_desc = tuple(("A-complement",) + p for p in cols_a) + tuple(
        ("T-complement",) + p for p in cols_t
    )
    rows = []
    row_desc = []
    for i in range(1, n + 1):
        for j in range(1, np_ + 1):
            row_desc.append((i, j))
            row = []
            for a, b in cols_a:
                row.append(
                    LaurentPoly.monomial(pv.names, {pv.a_idx(i, a): 1, pv.b_idx(j, b): 1})
                )
            for t, u in cols_t:
                row.append(
                    LaurentPoly.monomial(
                        pv.names,
                        {
                            pv.q_idx(n + 1 - t): -1,
                            pv.qp_idx(np_ + 1 - u): -1,
                            pv.a_idx(i, n + 1 - t): 1,
                            pv.b_idx(j, np_ + 1 - u): 1,
                        },
                    )
                )
            rows.append(tuple(row))
    return SymMatrix(pv.names, tuple(rows), tuple(row_desc), col_desc)


def cleared_period_product(ctx: PairContext) -> LaurentPoly:
    """The monomial prod_{(t,u) not in T} Q_{n+1-t} Q'_{n'+1-u}."""
    n, np_ = ctx.M.rank, ctx.Mp.rank
    pv = PairVariables.build(n, np_)
    exps: dict[int, int] = {}
    _, cols_t = _complement_columns(ctx)
    for t, u in cols_t:
        qi = pv.q_idx(n + 1 - t)
        qpu = pv.qp_idx(np_ + 1 - u)
        exps[qi] = exps.get(qi, 0) + 1
        exps[qpu] = exps.get(qpu, 0) + 1
    return LaurentPoly.monomial(pv.names, exps)


def _coefficient_block(pv: PairVariables, which: str) -> SymMatrix:
    if which == "A":
        size, idx = pv.n, pv.a_idx
    else:
        size, idx = pv.np, pv.b_idx
    rows = tuple(
        tuple(LaurentPoly.var(pv.names, idx(i, a)) for a in range(1, size + 1))
        for i in range(1, size + 1)
    )
    return SymMatrix(pv.names, rows)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the determinant identity check for one tensor pair."""

    size: int
    ok: bool
    sign: int | None
    lhs: LaurentPoly
    rhs: LaurentPoly

    def to_json(self) -> dict:
        return {"size": self.size, "ok": self.ok, "sign": self.sign}


def verify_proposition(ctx: PairContext, size_limit: int | None = None) -> VerificationReport:
    """Check det(Mat1) * cleared periods = +/- det(A)^n' det(B)^n exactly.

    The column order of Mat1 is a convention the period relation absorbs
    into the coefficient field, so equality is asserted up to a recorded
    global sign.
    """
    n, np_ = ctx.M.rank, ctx.Mp.rank
    size = n * np_
    bound = configured_size_limit() if size_limit is None else size_limit
    if size > bound:
        raise SizeLimitError(size, bound)
    lhs = sym_det(build_mat1(ctx)) * cleared_period_product(ctx)
    pv = PairVariables.build(n, np_)
    det_a = sym_det(_coefficient_block(pv, "A"))
    det_b = sym_det(_coefficient_block(pv, "B"))
    rhs = det_a ** np_ * det_b ** n
    if lhs == rhs:
        ok, sign = True, 1
    elif lhs == -rhs:
        ok, sign = True, -1
    else:  # pragma: no cover - would indicate a real defect
        ok, sign = False, None
    return VerificationReport(size=size, ok=ok, sign=sign, lhs=lhs, rhs=rhs)
