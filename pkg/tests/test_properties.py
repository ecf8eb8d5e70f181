"""Randomized checks of the algebraic laws the library is built around."""

from hypothesis import assume, given, settings, strategies as st

from mgu.oracle import EnumBound, EquationSet, enumerated_unifiers, solve_equations
from mgu.substitution import Subst, compose, more_general
from mgu.terms import (
    Signature,
    Var,
    concat,
    is_valid_position,
    positions_of,
    subterm_at,
    term_size,
    vars_of,
)
from mgu.unify import (
    Unified,
    classic_unify,
    is_mgu,
    is_unifier,
    robinson_unify,
    robinson_unify_efficient,
    sub_of_frst_diff,
)

SIG = Signature({"a": 0, "b": 0, "f": 2, "g": 1})
VARS = ("X", "Y", "Z", "W")

_leaves = st.sampled_from([Var(v) for v in VARS] + [SIG.app("a"), SIG.app("b")])


def _extend(children):
    return st.one_of(
        st.builds(lambda u: SIG.app("g", u), children),
        st.builds(lambda u, v: SIG.app("f", u, v), children, children),
    )


terms_st = st.recursive(_leaves, _extend, max_leaves=10)
substs_st = st.dictionaries(st.sampled_from(VARS), terms_st, max_size=3).map(Subst)

# Pairs over two variables keep the unifier enumeration small.
_leaves_xy = st.sampled_from([Var("X"), Var("Y"), SIG.app("a"), SIG.app("b")])
terms_xy_st = st.recursive(_leaves_xy, _extend, max_leaves=6)


@st.composite
def term_and_position(draw):
    t = draw(terms_st)
    ps = positions_of(t)
    return t, ps[draw(st.integers(0, len(ps) - 1))]


DEFAULT = settings(max_examples=120, deadline=None)


@DEFAULT
@given(term_and_position())
def test_subterm_of_concat_splits(tp):
    t, r = tp
    for k in range(len(r) + 1):
        p, q = r[:k], r[k:]
        assert subterm_at(t, concat(p, q)) == subterm_at(subterm_at(t, p), q)


@DEFAULT
@given(term_and_position(), st.data())
def test_concat_of_valid_positions_is_valid(tp, data):
    t, p = tp
    inner = positions_of(subterm_at(t, p))
    q = inner[data.draw(st.integers(0, len(inner) - 1))]
    assert is_valid_position(t, concat(p, q))


@DEFAULT
@given(terms_st)
def test_positions_prefix_closed_and_sized(t):
    ps = positions_of(t)
    assert len(ps) == len(set(ps)) == term_size(t)
    assert all(p[:-1] in set(ps) for p in ps if p)
    assert ps == sorted(ps)


@DEFAULT
@given(substs_st, term_and_position())
def test_apply_commutes_with_subterm(sigma, tp):
    t, p = tp
    assert sigma.apply(subterm_at(t, p)) == subterm_at(sigma.apply(t), p)


@DEFAULT
@given(substs_st, term_and_position())
def test_apply_preserves_positions(sigma, tp):
    t, p = tp
    assert is_valid_position(sigma.apply(t), p)


@DEFAULT
@given(substs_st, terms_st)
def test_positions_of_applied_term_formula(sigma, t):
    image = sigma.apply(t)
    expected = set()
    for p in positions_of(t):
        sub = subterm_at(t, p)
        if isinstance(sub, Var):
            expected.update(concat(p, q) for q in positions_of(sigma.apply(sub)))
        else:
            expected.add(p)
    assert set(positions_of(image)) == expected


@DEFAULT
@given(substs_st, term_and_position())
def test_apply_preserves_head_symbols(sigma, tp):
    t, p = tp
    sub = subterm_at(t, p)
    if not isinstance(sub, Var):
        assert subterm_at(sigma.apply(t), p).symbol == sub.symbol


@DEFAULT
@given(substs_st, terms_st)
def test_eliminated_variables_stay_gone(sigma, t):
    gone = sigma.dom() - sigma.vran()
    applied_vars = vars_of(sigma.apply(t))
    assert not (gone & applied_vars)


@DEFAULT
@given(substs_st, substs_st, terms_st)
def test_compose_apply_law(sigma, tau, t):
    assert compose(sigma, tau).apply(t) == sigma.apply(tau.apply(t))


@DEFAULT
@given(substs_st, substs_st, substs_st)
def test_compose_associative(s1, s2, s3):
    assert compose(s1, compose(s2, s3)) == compose(compose(s1, s2), s3)


@DEFAULT
@given(substs_st, terms_st, terms_st)
def test_applied_equal_agrees_with_apply(sigma, s, t):
    assert sigma.applied_equal(s, t) == (sigma.apply(s) == sigma.apply(t))


@DEFAULT
@given(substs_st)
def test_idempotence_characterizations_agree(sigma):
    assert (compose(sigma, sigma) == sigma) == sigma.dom().isdisjoint(sigma.vran())


@DEFAULT
@given(substs_st)
def test_more_general_reflexive(sigma):
    assert more_general(sigma, sigma)


@DEFAULT
@given(substs_st, substs_st, substs_st)
def test_more_general_on_constructed_chain(theta, g1, g2):
    mid = compose(g1, theta)
    far = compose(g2, mid)
    assert more_general(theta, mid)
    assert more_general(mid, far)
    assert more_general(theta, far)


@DEFAULT
@given(substs_st, substs_st, substs_st)
def test_more_general_respects_composition(sig, gamma, theta):
    rho = compose(gamma, sig)
    assert more_general(compose(sig, theta), compose(rho, theta))


@DEFAULT
@given(terms_st, terms_st)
def test_algorithms_and_oracle_agree(s, t):
    outcomes = [
        classic_unify(s, t),
        robinson_unify(s, t),
        robinson_unify_efficient(s, t),
        solve_equations(EquationSet([(s, t)])),
    ]
    flags = [isinstance(o, Unified) for o in outcomes]
    assert len(set(flags)) == 1
    if flags[0]:
        assert outcomes[0].mgu == outcomes[1].mgu == outcomes[2].mgu
        assert more_general(outcomes[3].mgu, outcomes[1].mgu)
        assert more_general(outcomes[1].mgu, outcomes[3].mgu)


@DEFAULT
@given(terms_st, terms_st)
def test_returned_mgu_unifies_and_is_idempotent(s, t):
    out = robinson_unify(s, t)
    if isinstance(out, Unified):
        assert is_unifier(out.mgu, s, t)
        assert out.mgu.is_idempotent()


@DEFAULT
@given(terms_st, terms_st)
def test_trace_measure_decreases_by_one(s, t):
    steps = []
    robinson_unify(s, t, trace=steps.append)
    for ts in steps:
        assert ts.vars_after == ts.vars_before - 1


@DEFAULT
@given(terms_st, terms_st)
def test_resolving_first_diff_eliminates_exactly_its_domain(s, t):
    assume(s != t and isinstance(robinson_unify(s, t), Unified))
    sigma = sub_of_frst_diff(s, t)
    after = vars_of(sigma.apply(s)) | vars_of(sigma.apply(t))
    assert after == (vars_of(s) | vars_of(t)) - sigma.dom()


@settings(max_examples=40, deadline=None)
@given(terms_xy_st, terms_xy_st)
def test_mgu_certified_against_enumerated_unifiers(s, t):
    out = robinson_unify(s, t)
    if isinstance(out, Unified):
        bound = EnumBound(1, ("X", "Y"), SIG)
        candidates = enumerated_unifiers(s, t, bound)
        assert is_mgu(out.mgu, s, t, candidates)
        for sigma in candidates:
            assert sigma == compose(sigma, out.mgu)
