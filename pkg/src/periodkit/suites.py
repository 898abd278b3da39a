"""Reproducible verification suites behind ``pk verify``.

Each property is a predicate run on sampled or enumerated instances; the
sub-seed of every trial is derived from (seed, property name, trial
index), so the summary is independent of execution order and the trials
could run concurrently without changing it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import automorphic as am
from . import combinatorics as cb
from . import deligne as dl
from . import hodge as hg
from . import lfactor as lf
from . import oracle as orc
from . import periods as pd
from . import sampling as smp

SUITES = ("combinatorics", "oracle", "rewrite")

_DEFAULT_TRIALS = {"combinatorics": 1000, "rewrite": 500, "oracle": 100}
_DEFAULT_MAX_RANK = {"combinatorics": 4, "rewrite": 4, "oracle": 3}


@dataclass
class PropertyResult:
    name: str
    instances: int
    failures: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out = {"name": self.name, "instances": self.instances, "failures": self.failures}
        if self.detail:
            out["detail"] = self.detail
        return out


def _trial_rng(seed: int, name: str, trial: int) -> random.Random:
    return random.Random(f"{seed}/{name}/{trial}")


def _run_property(seed: int, name: str, trials: int, check) -> PropertyResult:
    """Run ``check(rng, trial_index)`` for every trial; raises count as failures."""
    failures = 0
    detail = ""
    for t in range(trials):
        rng = _trial_rng(seed, name, t)
        try:
            ok = check(rng, t)
        except Exception as exc:
            ok = False
            if not detail:
                detail = f"trial {t}: {type(exc).__name__}: {exc}"
        if not ok:
            failures += 1
            if not detail:
                detail = f"first failing trial: {t}"
    return PropertyResult(name, trials, failures, detail)


# ---------------------------------------------------------------------------
# combinatorics suite


def _suite_combinatorics(seed: int, trials: int, max_rank: int) -> list[PropertyResult]:
    def pair(rng):
        return smp.random_pp_free_pair(rng, max_rank)

    def functor_involutions(rng, _):
        m = smp.random_motive(rng, rng.randint(1, max_rank))
        k = rng.randint(-3, 3)
        return (
            m.conjugate().conjugate() == m
            and m.dual().dual() == m
            and m.dual().conjugate() == m.conjugate().dual()
            and m.tate_twist(k).tate_twist(-k) == m
        )

    def tensor_shape(rng, _):
        m, mp = pair(rng)
        h = hg.restriction_tensor(m, mp)
        swap_closed = all(h.multiplicity(q_, p_) == mult for p_, q_, mult in h.items())
        return swap_closed and h.total_multiplicity() == 2 * m.rank * mp.rank

    def tableau(rng, _):
        m, mp = pair(rng)
        return cb.set_A(m, mp).is_tableau()

    def at_duality(rng, _):
        m, mp = pair(rng)
        a, t = cb.set_A(m, mp), cb.set_T(m, mp)
        n, np_ = m.rank, mp.rank
        return all(
            ((t_, u_) in t.members) == ((n + 1 - t_, np_ + 1 - u_) not in a.members)
            for t_ in range(1, n + 1)
            for u_ in range(1, np_ + 1)
        )

    def split_sum(rng, _):
        m, mp = pair(rng)
        return (
            cb.split_indices(m, mp).total() == mp.rank
            and cb.split_indices(mp, m).total() == m.rank
        )

    def split_conjugation(rng, _):
        m, mp = pair(rng)
        sp = cb.split_indices(m, mp)
        spc = cb.split_indices(m.conjugate(), mp.conjugate())
        return all(sp[i] == spc[m.rank - i] for i in range(m.rank + 1))

    def cardinality(rng, _):
        m, mp = pair(rng)
        return cb.verify_cardinality_lemma(m, mp)

    def critical_cross_oracle(rng, _):
        h = smp.random_swap_closed_multiset(rng)
        iv = lf.critical_interval(h)
        ivp = lf.critical_interval_via_poles(h)
        return iv == ivp and not iv.empty and iv.lo + iv.hi == h.weight + 1

    def pair_criticality_matches_hodge(rng, _):
        pi = smp.random_infinity_type(rng, rng.randint(1, max_rank), "Pi")
        pip = smp.random_infinity_type(rng, rng.randint(1, max_rank), "Pi'")
        motive_side = hg.has_no_pp_class(
            hg.restriction_tensor(am.dict_to_motive(pi), am.dict_to_motive(pip))
        )
        return am.pair_is_critical(pi, pip) == motive_side

    def auto_split_matches_motive(rng, _):
        pi, pip = smp.random_critical_rep_pair(rng, max_rank)
        return (
            am.split_indices_auto(pi, pip)
            == cb.split_indices(am.dict_to_motive(pi), am.dict_to_motive(pip))
        ) and (
            am.split_indices_auto(pip, pi)
            == cb.split_indices(am.dict_to_motive(pip), am.dict_to_motive(pi))
        )

    def pair_points_match_shifted_interval(rng, _):
        pi, pip = smp.random_critical_rep_pair(rng, max_rank)
        auto = lf.pair_critical_points(pi, pip)
        h = hg.restriction_tensor(am.dict_to_motive(pi), am.dict_to_motive(pip))
        iv = lf.critical_interval(h)
        shift = Fraction(pi.n + pip.n - 2, 2)
        return auto.lo == iv.lo - shift and auto.hi == iv.hi - shift

    checks = [
        ("functor_involutions", functor_involutions),
        ("tensor_swap_closure_and_size", tensor_shape),
        ("set_A_is_tableau", tableau),
        ("A_T_index_duality", at_duality),
        ("split_indices_sum_to_rank", split_sum),
        ("split_conjugation_symmetry", split_conjugation),
        ("cardinality_lemma", cardinality),
        ("critical_interval_cross_oracle", critical_cross_oracle),
        ("pair_criticality_matches_hodge_side", pair_criticality_matches_hodge),
        ("auto_split_matches_motive_split", auto_split_matches_motive),
        ("pair_points_match_shifted_interval", pair_points_match_shifted_interval),
    ]
    return [_run_property(seed, name, trials, fn) for name, fn in checks]


# ---------------------------------------------------------------------------
# rewrite suite


def _random_monomial(rng: random.Random) -> pd.PeriodMonomial:
    tag = pd.MotiveTag(rng.choice(["M", "M'"]), rank=rng.randint(1, 4))
    out = pd.PeriodMonomial.one()
    for _ in range(rng.randint(0, 4)):
        kind = rng.choice(["2pi", "Q", "d", "D", "Qp", "Qs"])
        e = rng.choice([-2, -1, 1, 2])
        if kind == "2pi":
            out = out * pd.two_pi_i(rng.randint(-3, 3))
        elif kind == "Q":
            out = out * pd.q(rng.randint(1, tag.rank), tag) ** e
        elif kind == "d":
            out = out * pd.delta(tag) ** e
        elif kind == "D":
            out = out * pd.delta_cap(tag) ** e
        elif kind == "Qp":
            out = out * pd.q_paren(rng.randint(0, tag.rank), tag) ** e
        else:
            out = out * pd.q_sup(rng.randint(0, tag.rank), tag) ** e
    return out


_DELTA_SQUARE_RANKS = tuple(range(1, 9))
_COMPARISON_CASES = tuple((n, s) for n in range(1, 9) for s in range(n + 1))


def _suite_rewrite(seed: int, trials: int, max_rank: int) -> list[PropertyResult]:
    def group_laws(rng, _):
        x, y, z = (_random_monomial(rng) for _ in range(3))
        return (
            (x * y) * z == x * (y * z)
            and x * y == y * x
            and x * x.inv() == pd.PeriodMonomial.one()
            and x * pd.PeriodMonomial.one() == x
        )

    def expand_homomorphism(rng, _):
        x, y = _random_monomial(rng), _random_monomial(rng)
        return pd.expand(x * y) == pd.expand(x) * pd.expand(y) and pd.expand(
            pd.expand(x)
        ) == pd.expand(x)

    def q_conj_involution(rng, _):
        tag = pd.MotiveTag("M", rank=rng.randint(1, 6))
        if rng.random() < 0.5:
            tag = tag.conj()
        x = pd.q(rng.randint(1, tag.rank_value), tag)
        return pd.apply_rule(pd.apply_rule(x, "q_conj"), "q_conj") == x

    def tate_closed_forms(rng, _):
        k = rng.randint(-4, 4)
        if pd.delta_tate(k) != pd.two_pi_i(k):
            return False
        r = rng.randint(1, 5)
        tag = pd.MotiveTag("M", rank=r)
        if k == 0:
            return True
        rewritten = pd.apply_rule(pd.delta(tag.twist(k)), "delta_twist")
        return rewritten == pd.two_pi_i(k * r) * pd.delta(tag)

    def delta_square_chain(_, t):
        return pd.derive_delta_square_identity(_DELTA_SQUARE_RANKS[t]).ok

    def comparison_chain(_, t):
        n, s = _COMPARISON_CASES[t]
        return pd.derive_grouped_period_identity(n, s).ok

    def simplified_equals_raw(rng, _):
        ctx = dl.PairContext.build(*smp.random_pp_free_pair(rng, max_rank))
        return pd.expand(dl.deligne_period_simplified(ctx)) == pd.expand(
            dl.deligne_period_raw(ctx)
        )

    def conjecture_p_to_q(rng, _):
        pi, pip = smp.random_critical_rep_pair(rng, max_rank)
        m = rng.choice(list(lf.pair_critical_points(pi, pip).points()))
        return am.crosscheck_conjecture(pi, pip, m)

    checks = [
        ("monomial_group_laws", group_laws, trials),
        ("expand_is_homomorphism", expand_homomorphism, trials),
        ("q_conjugation_involution", q_conj_involution, trials),
        ("tate_delta_closed_forms", tate_closed_forms, trials),
        ("csd_delta_square_identity", delta_square_chain, len(_DELTA_SQUARE_RANKS)),
        ("grouped_period_comparison", comparison_chain, len(_COMPARISON_CASES)),
        ("simplified_matches_raw_expansion", simplified_equals_raw, trials),
        ("automorphic_matches_motivic_rhs", conjecture_p_to_q, trials),
    ]
    return [_run_property(seed, name, count, fn) for name, fn, count in checks]


# ---------------------------------------------------------------------------
# oracle suite


def _suite_oracle(seed: int, trials: int, max_rank: int) -> list[PropertyResult]:
    def det_vs_naive(rng, _):
        vars_ = tuple(f"x{i}" for i in range(4))
        k = rng.randint(1, 4)
        rows = []
        for _ in range(k):
            row = []
            for _ in range(k):
                poly = orc.LaurentPoly.zero(vars_)
                for _ in range(rng.randint(0, 2)):
                    exps = {rng.randrange(4): rng.randint(-2, 2) for _ in range(2)}
                    poly = poly + orc.LaurentPoly.monomial(vars_, exps, rng.randint(-3, 3))
                row.append(poly)
            rows.append(tuple(row))
        mx = orc.SymMatrix(vars_, tuple(rows))
        return orc.sym_det(mx) == orc.naive_det(mx)

    def cleared_matches_raw_q(rng, _):
        ctx = dl.PairContext.build(*smp.random_pp_free_pair(rng, max_rank))
        pv = orc.PairVariables.build(ctx.M.rank, ctx.Mp.rank)
        ((key, coeff),) = orc.cleared_period_product(ctx).terms.items()
        if coeff != 1:
            return False
        raw = dl.deligne_period_raw(ctx)
        for a in range(1, ctx.M.rank + 1):
            want = raw.exponent(pd.PeriodSymbol("Q", a, pd.motive_tag(ctx.M)))
            if key[pv.q_idx(a)] != want:
                return False
        for b in range(1, ctx.Mp.rank + 1):
            want = raw.exponent(pd.PeriodSymbol("Q", b, pd.motive_tag(ctx.Mp)))
            if key[pv.qp_idx(b)] != want:
                return False
        return True

    results = [
        _run_property(seed, "determinant_vs_permutation_sum", min(trials, 40), det_vs_naive),
        _run_property(
            seed, "cleared_periods_match_raw_q_part", min(trials, 200), cleared_matches_raw_q
        ),
    ]

    # The determinant identity runs `trials` seed-fixed configurations for
    # every rank shape (n, n') up to max_rank.
    name = "deligne_period_determinant_identity"
    failures = 0
    detail = ""
    instances = 0
    for n in range(1, max_rank + 1):
        for np_ in range(1, max_rank + 1):
            for t in range(trials):
                instances += 1
                rng = _trial_rng(seed, f"{name}/{n}x{np_}", t)
                try:
                    ctx = dl.PairContext.build(
                        *smp.random_pp_free_pair(rng, max_rank, ranks=(n, np_))
                    )
                    ok = orc.verify_proposition(ctx).ok
                except Exception as exc:
                    ok = False
                    if not detail:
                        detail = f"shape {n}x{np_} trial {t}: {type(exc).__name__}: {exc}"
                if not ok:
                    failures += 1
                    if not detail:
                        detail = f"first failure at shape {n}x{np_} trial {t}"
    results.append(PropertyResult(name, instances, failures, detail))
    return results


_SUITE_FNS = {
    "combinatorics": _suite_combinatorics,
    "rewrite": _suite_rewrite,
    "oracle": _suite_oracle,
}


def run_suites(
    suite: str,
    seed: int = 42,
    trials: int | None = None,
    max_rank: int | None = None,
) -> dict:
    """Run one suite (or ``all``) and return a JSON-ready summary."""
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in _SUITE_FNS:
            raise ValueError(f"unknown suite {name!r}; choose from {('all',) + SUITES}")
    results: list[PropertyResult] = []
    for name in names:
        t = trials if trials is not None else _DEFAULT_TRIALS[name]
        r = max_rank if max_rank is not None else _DEFAULT_MAX_RANK[name]
        results.extend(_SUITE_FNS[name](seed, t, r))
    return {
        "suite": suite,
        "seed": seed,
        "ok": all(r.ok for r in results),
        "properties": [r.to_json() for r in results],
    }
