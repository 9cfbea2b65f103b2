"""Tests for the mode calculus on vacuum descendants.

A state is a combination of normal-ordered products of the conformal
vector and its D-derivatives; the engine evaluates any mode of such a
state on Verma vectors.  The suite freezes hand-checked polynomial
identities in a formal highest weight h, checks the commutator rule for
composite modes against binomial expansions, and cross-validates the
engine's truncation bounds with an independent wide-window evaluator.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from virfock.scalars import GF, QQ, Poly, formal_ring
from virfock.verma import VermaVector, verma_module
from virfock.modes import (
    build_state,
    engine_for,
    mode_apply,
    named_state,
    named_state_pbw,
    named_state_verma,
    state_add,
    state_degree,
    term_degree,
    verify_annihilation,
)


# ---------------------------------------------------------------------------
# State construction and normal forms
# ---------------------------------------------------------------------------


def test_build_state_normal_forms():
    # L(-2)1 is the conformal vector itself.
    assert build_state([-2]) == {(0,): Fraction(1)}
    # L(-n)1 = D^(n-2) w / (n-2)!
    assert build_state([-6]) == {(4,): Fraction(1, 24)}
    assert build_state([-3]) == {(1,): Fraction(1)}
    # Products stack left to right.
    assert build_state([-2, -2, -2]) == {(0, 0, 0): Fraction(1)}
    assert build_state([-4, -2]) == {(2, 0): Fraction(1, 2)}


def test_leading_translation_action():
    # L(-1) on the bare vacuum is zero ...
    assert build_state([-1]) == {}
    # ... and otherwise acts as D, by the Leibniz rule over the factors.
    assert build_state([-1, -2]) == {(1,): Fraction(1)}
    # Repeated differentiation keeps coefficient 1 on the raw derivative;
    # the 1/2! shows up only in the normal form of L(-4) itself.
    assert build_state([-1, -1, -2]) == {(2,): Fraction(1)}
    assert build_state([-1, -1, -2]) == {
        k: Fraction(2) * v for k, v in build_state([-4]).items()
    }
    assert build_state([-1, -2, -2]) == {(1, 0): Fraction(1), (0, 1): Fraction(1)}


def test_build_state_rejects_bad_words():
    with pytest.raises(ValueError, match="empty"):
        build_state([])
    with pytest.raises(ValueError, match="negative"):
        build_state([-2, 0])
    with pytest.raises(ValueError, match="negative"):
        build_state([3, -2])


def test_named_states():
    s = named_state("s")
    assert s == {
        (0, 0, 0): Fraction(64),
        (1, 1): Fraction(93),
        (2, 0): Fraction(-132),
        (4,): Fraction(-9, 2),
    }
    assert named_state("u") == {(0, 0): Fraction(1), (2,): Fraction(-1)}
    assert state_degree(s) == 6
    assert state_degree(named_state("u")) == 4
    with pytest.raises(ValueError, match="unknown state"):
        named_state("t")


def test_named_state_pbw_words():
    assert named_state_pbw("s") == (
        (64, (-2, -2, -2)),
        (93, (-3, -3)),
        (-264, (-4, -2)),
        (-108, (-6,)),
    )
    assert named_state_pbw("u") == ((1, (-2, -2)), (-2, (-4,)))


def test_named_state_verma_matches_pbw_monomials():
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    u = named_state_verma("u", m)
    assert u == m.monomial((2, 2)) + m.monomial((4,)).scale(Fraction(-2))
    s = named_state_verma("s", m)
    expect = (
        m.monomial((2, 2, 2)).scale(Fraction(64))
        + m.monomial((3, 3)).scale(Fraction(93))
        + m.monomial((4, 2)).scale(Fraction(-264))
        + m.monomial((6,)).scale(Fraction(-108))
    )
    assert s == expect


def test_state_add_cancels_to_zero():
    x = build_state([-2, -2])
    assert state_add(dict(x), build_state([-2, -2]), Fraction(-1)) == {}
    with pytest.raises(ValueError, match="zero or mixes"):
        state_degree({})


def test_term_degree_counts_conformal_weight():
    assert term_degree(()) == 0
    assert term_degree((0,)) == 2
    assert term_degree((4,)) == 6
    assert term_degree((0, 0, 0)) == 6
    assert term_degree((2, 0)) == 6


# ---------------------------------------------------------------------------
# Mode convention and simple actions
# ---------------------------------------------------------------------------


def test_conformal_vector_modes_are_virasoro_operators():
    # w_m = L(m - 1): the engine's construction-time self-test pins w_1 = L(0),
    # and the shift holds across the board.
    m = verma_module(Fraction(1, 2), Fraction(1, 16), QQ)
    omega = build_state([-2])
    for vec in (m.monomial((2,)), m.monomial((2, 1)), m.vacuum()):
        for n in range(-3, 4):
            assert mode_apply(omega, n + 1, vec, m) == m.apply_mode(n, vec)


def test_engine_is_cached_per_module():
    m = verma_module(Fraction(1, 2), Fraction(1, 16), QQ)
    assert engine_for(m) is engine_for(m)


def test_mode_apply_of_zero_state_is_zero():
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    assert mode_apply({}, 3, m.monomial((2,)), m) == VermaVector.zero()


# ---------------------------------------------------------------------------
# Frozen scalar actions at formal highest weight
# ---------------------------------------------------------------------------


def vacuum_scalar(state, n, module):
    """The scalar f with (state)_n v = f * v, or None if not a multiple."""
    out = mode_apply(state, n, module.vacuum(), module)
    if not out.terms:
        return module.ring.zero()
    assert set(out.terms) == {()}
    return out.terms[()]


def test_degree_shift_scalars_formal():
    # Degree-6 states drop the highest weight vector by their mode index
    # minus one; at n = 5 the result is a scalar multiple of v.
    F = formal_ring(0)
    m = verma_module(Fraction(1, 2), F.h(), F)
    h = F.h()
    assert vacuum_scalar(build_state([-6], F), 5, m) == 5 * h
    assert vacuum_scalar(build_state([-2, -2, -2], F), 5, m) == h**3 + 6 * h**2 + 8 * h
    assert vacuum_scalar(build_state([-3, -3], F), 5, m) == 4 * h**2 + 6 * h
    assert vacuum_scalar(build_state([-4, -2], F), 5, m) == 3 * h**2 + 2 * h


def test_degree_six_combination_vanishes_exactly_on_ising_weights():
    # s_5 v = (64 h^3 - 36 h^2 + 2 h) v = 64 h (h - 1/2)(h - 1/16) v.
    F = formal_ring(0)
    m = verma_module(Fraction(1, 2), F.h(), F)
    got = vacuum_scalar(named_state("s", F), 5, m)
    assert isinstance(got, Poly)
    assert got.coeffs == (Fraction(0), Fraction(2), Fraction(-36), Fraction(64))
    for h, expect in [
        (Fraction(0), Fraction(0)),
        (Fraction(1, 2), Fraction(0)),
        (Fraction(1, 16), Fraction(0)),
        (Fraction(1), Fraction(30)),
    ]:
        mod = verma_module(Fraction(1, 2), h, QQ)
        assert vacuum_scalar(named_state("s"), 5, mod) == expect


def test_degree_four_combination_scalar_mod_seven():
    # u_3 v = (h^2 + 3h) v = h(h - 4) v over GF(7).
    F7 = formal_ring(7)
    m = verma_module(Fraction(1, 2), F7.h(), F7)
    got = vacuum_scalar(named_state("u", F7), 3, m)
    assert got == F7.h() ** 2 + F7.of_int(3) * F7.h()
    for h, expect in [(0, 0), (4, 0), (1, 4), (2, 3)]:
        mod = verma_module(Fraction(1, 2), Fraction(h), GF(7))
        assert vacuum_scalar(named_state("u", GF(7)), 3, mod) == GF(7).of_int(expect)


def test_degree_six_mode_five_on_level_two_formal():
    # s_5 L(-2)v = f(h) L(-2)v + g(h) L(-1)^2 v with
    # f = 64 h^3 + 1884 h^2 - 4078 h and g = 1920 h + 210.
    F = formal_ring(0)
    m = verma_module(Fraction(1, 2), F.h(), F)
    out = mode_apply(named_state("s", F), 5, m.monomial((2,)), m)
    f = out.terms[(2,)]
    g = out.terms[(1, 1)]
    assert set(out.terms) == {(2,), (1, 1)}
    assert f.coeffs == (Fraction(0), Fraction(-4078), Fraction(1884), Fraction(64))
    assert g.coeffs == (Fraction(210), Fraction(1920))


@pytest.mark.parametrize(
    "h,factor,level2,level11",
    [
        # At h = 1/2 the image is -390 (4 L(-2) - 3 L(-1)^2) v.
        (Fraction(1, 2), Fraction(-390), Fraction(4), Fraction(-3)),
        # At h = 1/16 the image is -(165/2)(3 L(-2) - 4 L(-1)^2) v.
        (Fraction(1, 16), Fraction(-165, 2), Fraction(3), Fraction(-4)),
    ],
)
def test_degree_six_mode_five_on_level_two_at_special_weights(h, factor, level2, level11):
    m = verma_module(Fraction(1, 2), h, QQ)
    out = mode_apply(named_state("s"), 5, m.monomial((2,)), m)
    expect = (m.monomial((2,)).scale(level2) + m.monomial((1, 1)).scale(level11)).scale(factor)
    assert out == expect


def test_degree_six_mode_six_on_level_two_at_h_zero():
    # At h = 0 the level-2 target drops to level 1: s_6 L(-2)v = 66 L(-1)v,
    # with 66 = 2 * 3 * 11 assembled from the four PBW pieces.
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    target = m.monomial((2,))
    pieces = {
        (-2, -2, -2): Fraction(561, 4),
        (-3, -3): Fraction(92),
        (-4, -2): Fraction(191, 4),
        (-6,): Fraction(45),
    }
    for word, scalar in pieces.items():
        out = mode_apply(build_state(list(word)), 6, target, m)
        assert out == m.monomial((1,)).scale(scalar)
    total = sum(
        Fraction(coeff) * pieces[word] for coeff, word in named_state_pbw("s")
    )
    assert total == 66
    assert mode_apply(named_state("s"), 6, target, m) == m.monomial((1,)).scale(Fraction(66))


def test_degree_six_mode_seven_kills_level_two_at_h_zero():
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    assert mode_apply(named_state("s"), 7, m.monomial((2,)), m) == VermaVector.zero()


# ---------------------------------------------------------------------------
# Annihilation of irreducible quotients
# ---------------------------------------------------------------------------


def test_degree_six_state_annihilates_both_ising_irreducibles():
    for h in (Fraction(0), Fraction(1, 16)):
        m = verma_module(Fraction(1, 2), h, QQ)
        rep = verify_annihilation(named_state("s"), m, max_mode=8, max_target_degree=6)
        assert rep.ok
        assert rep.state_degree == 6
        assert rep.checks == 210


def test_degree_four_state_annihilates_weight_four_module_mod_seven():
    m = verma_module(Fraction(1, 2), Fraction(4), GF(7))
    rep = verify_annihilation(named_state("u", GF(7)), m, max_mode=8, max_target_degree=4)
    assert rep.ok
    assert rep.state_degree == 4
    assert rep.checks == 60


def test_annihilation_verifier_reports_violations():
    # Negative control: over the rationals the degree-4 state does not kill
    # the vacuum irreducible, and the report says where it fails.
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    rep = verify_annihilation(named_state("u"), m, max_mode=6, max_target_degree=4)
    assert not rep.ok
    assert rep.violations


# ---------------------------------------------------------------------------
# Commutator rule for composite modes
# ---------------------------------------------------------------------------


def omega_modes_of_omega(ring):
    """The states w_i w for i >= 0: Dw, 2w, 0, (c/2) vacuum, then zero."""
    c = ring.of_fraction(Fraction(1, 2))
    half = ring.of_fraction(Fraction(1, 2))
    return {
        0: {(1,): ring.one()},
        1: {(0,): ring.of_int(2)},
        2: {},
        3: {(): c * half},
    }


@pytest.mark.parametrize("s", [0, 1, 2, 4])
@pytest.mark.parametrize("t", range(-3, 4))
def test_commutator_of_conformal_modes_expands_binomially(s, t):
    # [w_s, w_t] = sum_i C(s, i) (w_i w)_{s+t-i}; the i = 3 term carries the
    # central scalar and only fires when s + t = 2 (e.g. s = 4, t = -2).
    m = verma_module(Fraction(1, 2), Fraction(1, 16), QQ)
    omega = build_state([-2])
    inner = omega_modes_of_omega(QQ)
    targets = [m.vacuum(), m.monomial((1,)), m.monomial((2,)), m.monomial((2, 1))]
    for y in targets:
        lhs = mode_apply(omega, s, mode_apply(omega, t, y, m), m) - mode_apply(
            omega, t, mode_apply(omega, s, y, m), m
        )
        rhs = VermaVector.zero()
        for i in range(0, s + 1):
            coeff = QQ.of_int(math.comb(s, i))
            term = mode_apply(inner.get(i, {}), s + t - i, y, m)
            rhs = rhs + term.scale(coeff)
        assert lhs == rhs


# ---------------------------------------------------------------------------
# Independent wide-window evaluator
# ---------------------------------------------------------------------------


def naive_term(t, m, part, module, pad=4):
    """Evaluate the mode t_m on a basis monomial without memoization and
    with summation windows padded beyond the engine's truncation bounds.

    The padding adds only terms that vanish on degree grounds, so any
    disagreement with the memoized engine means a truncation bug.
    """
    ring = module.ring
    if not t:
        return {part: ring.one()} if m == -1 else {}
    if len(t) == 1:
        a = t[0]
        if a == 0:
            return dict(mode_on_monomial(m - 1, part, module))
        f = ring.of_int(-m)
        if not f:
            return {}
        return {q: f * cv for q, cv in naive_term((a - 1,), m - 1, part, module, pad).items()}
    x, y = (t[0],), t[1:]
    d = sum(part)
    dx, dy = term_degree(x), term_degree(y)
    acc = {}
    for i in range(m - d - dy - pad, 0):
        acc = naive_compose(x, i, naive_term(y, m - 1 - i, part, module, pad), acc, module, pad)
    for i in range(0, d + dx + pad):
        acc = naive_compose(y, m - 1 - i, naive_term(x, i, part, module, pad), acc, module, pad)
    return acc


def naive_compose(t, k, inner, acc, module, pad):
    for q, cv in inner.items():
        for r, cw in naive_term(t, k, q, module, pad).items():
            s = acc.get(r)
            s = cv * cw if s is None else s + cv * cw
            if s:
                acc[r] = s
            else:
                acc.pop(r, None)
    return acc


def mode_on_monomial(n, part, module):
    out = module.apply_mode(n, module.monomial(part))
    return out.terms


@pytest.mark.parametrize(
    "word",
    [[-2], [-3], [-4], [-2, -2], [-3, -2], [-2, -2, -2]],
)
def test_engine_agrees_with_wide_window_evaluator(word):
    m = verma_module(Fraction(1, 2), Fraction(1, 16), QQ)
    state = build_state(word)
    deg = state_degree(state)
    for n in (deg - 2, deg - 1, deg, deg + 1):
        for target_degree in (0, 1, 2):
            for part in m.basis(target_degree):
                got = mode_apply(state, n, m.monomial(part), m).terms
                want = {}
                for t, cv in state.items():
                    for q, cw in naive_term(t, n, part, m).items():
                        s = want.get(q)
                        s = cv * cw if s is None else s + cv * cw
                        if s:
                            want[q] = s
                        else:
                            want.pop(q, None)
                assert got == want, (word, n, part)


def test_engine_agrees_with_wide_window_evaluator_mod_seven():
    m = verma_module(Fraction(1, 2), Fraction(4), GF(7))
    state = named_state("u", GF(7))
    for n in (2, 3, 4, 5):
        for part in ((), (1,), (2,), (1, 1)):
            got = mode_apply(state, n, m.monomial(part), m).terms
            want = {}
            for t, cv in state.items():
                for q, cw in naive_term(t, n, part, m).items():
                    s = want.get(q)
                    s = cv * cw if s is None else s + cv * cw
                    if s:
                        want[q] = s
                    else:
                        want.pop(q, None)
            assert got == want, (n, part)


@given(
    n=st.integers(min_value=4, max_value=8),
    target=st.sampled_from([(), (1,), (2,), (1, 1), (2, 1)]),
)
def test_degree_six_state_engine_matches_oracle(n, target):
    m = verma_module(Fraction(1, 2), Fraction(0), QQ)
    state = named_state("s")
    got = mode_apply(state, n, m.monomial(target), m).terms
    want = {}
    for t, cv in state.items():
        for q, cw in naive_term(t, n, target, m, pad=3).items():
            s = want.get(q)
            s = cv * cw if s is None else s + cv * cw
            if s:
                want[q] = s
            else:
                want.pop(q, None)
    assert got == want
