from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivevertex.lattice import LatticeSpec, WeightParams, partition_function_oracle, weights_at
from fivevertex.qism import (DimensionCapError, SparseOperator, VacuumEigenvalues, bosonic_site,
                             build_bosonic_L, build_four_vertex_L, build_L5v, build_L5v_second,
                             build_monodromy, build_Spm_L, failing_relations, five_vertex_delta,
                             five_vertex_site, four_vertex_delta, g_fn, matrix_element_Z,
                             monodromy_from_sites, phase_operators, second_branch_delta,
                             six_vertex_L, spm_site, verify_action_lemma, verify_commutation_16,
                             verify_RLL, verify_symmetry_proposition)
from fivevertex.qism.lops import Site
from fivevertex.qism.verify import verify_RTT
from fivevertex.sampling import RationalSampler

nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool)


def P(alpha, delta):
    return WeightParams(alpha, delta, (1,), (1,))


def chain(rs, M, Delta):
    return [five_vertex_site(x, a, Delta)
            for x, a in zip(rs.rationals(M, distinct_squares=True), rs.rationals(M))]


# -- the five-vertex L-operator ------------------------------------------------


def test_L5v_zero_pattern():
    p = P(Fraction(2, 3), 5)
    m = build_L5v(Fraction(7, 4), Fraction(1, 2), p).matrix()
    w = weights_at(Fraction(2, 3), 5, Fraction(7, 4), Fraction(1, 2))
    assert m == [[w.w1, 0, 0, 0], [0, w.w4, w.w6, 0], [0, w.w5, w.w3, 0], [0, 0, 0, 0]]
    assert build_L5v(3, 3, p).matrix()[0][0] == 0


def test_one_site_monodromy_is_the_L_operator():
    p = P(3, 2)
    T = build_monodromy(Fraction(5, 2), (Fraction(1, 3),), p)
    L = build_L5v(Fraction(5, 2), Fraction(1, 3), p)
    assert (T.A, T.B, T.C, T.D) == (L.A, L.B, L.C, L.D)


@pytest.mark.parametrize("M", range(1, 6))
def test_vacuum_eigenvalues_match_closed_form(M):
    rs = RationalSampler(M)
    xi = rs.rationals(M)
    alpha, Delta = rs.rational(), rs.rational()
    p = P(alpha, Delta)
    eig = VacuumEigenvalues.five_vertex(xi, alpha, Delta)
    for u in rs.rationals(3):
        T = build_monodromy(u, xi, p)
        vac = {0: Fraction(1)}
        for op, ev in ((T.A, eig.a(u)), (T.D, eig.d(u))):
            out = op.apply(vac)
            assert set(out) <= {0} and out.get(0, 0) == ev


@pytest.mark.parametrize("M", [2, 3])
def test_B_and_C_annihilate_the_vacuum_sides(M):
    rs = RationalSampler(10 + M)
    p = P(rs.rational(), rs.rational())
    T = build_monodromy(rs.rational(), rs.rationals(M), p)
    assert all(v == 0 for v in T.C.apply({0: Fraction(1)}).values())
    assert all(v == 0 for v in T.B.apply_left({0: Fraction(1)}).values())
    assert T.B.apply({0: Fraction(1)})


def test_dimension_cap():
    p = P(1, 1)
    with pytest.raises(DimensionCapError):
        build_monodromy(2, [Fraction(k) for k in range(1, 6)], p, m_max=4)


# -- partition function as a vacuum element -------------------------------------


@pytest.mark.parametrize("L,M", [(L, M) for L in range(1, 5) for M in range(1, 5)])
def test_matrix_element_equals_oracle(L, M):
    rs = RationalSampler(L * 10 + M)
    for N in range(min(L, M) + 1):
        spec = LatticeSpec(L, M, N)
        p = WeightParams(rs.rational(), rs.rational(), rs.rationals(L), rs.rationals(M))
        assert matrix_element_Z(spec, p) == partition_function_oracle(spec, p)


def test_matrix_element_N0_is_product_of_a():
    rs = RationalSampler(4)
    p = WeightParams(rs.rational(), rs.rational(), rs.rationals(3), rs.rationals(3))
    eig = VacuumEigenvalues.five_vertex(p.xi, p.alpha, p.delta)
    expected = eig.a(p.u[0]) * eig.a(p.u[1]) * eig.a(p.u[2])
    assert matrix_element_Z(LatticeSpec(3, 3, 0), p) == expected


def test_matrix_element_two_by_two_base_case():
    rs = RationalSampler(8)
    p = WeightParams(rs.rational(), rs.rational(), rs.rationals(2, distinct_squares=True),
                     rs.rationals(2))
    eig = VacuumEigenvalues.five_vertex(p.xi, p.alpha, p.delta)
    u1, u2 = p.u
    s1 = g_fn(u2, u1, p.delta) * (eig.a(u2) * eig.d(u1) - eig.a(u1) * eig.d(u2))
    assert matrix_element_Z(LatticeSpec(2, 2, 1), p) == s1


# -- RLL for the solution zoo ---------------------------------------------------


def test_rll_five_vertex_example():
    p = P(1, 5)
    assert verify_RLL(lambda u: build_L5v(u, 1, p), u=2, v=3, Delta=5).is_zero()


@given(nonzero, nonzero, nonzero, nonzero, nonzero)
@settings(max_examples=20)
def test_rll_five_vertex_random(u, v, xi, alpha, Delta):
    if u * u == v * v:
        return
    p = P(alpha, Delta)
    assert verify_RLL(lambda z: build_L5v(z, xi, p), u=u, v=v, Delta=Delta).is_zero()


@given(nonzero, nonzero, nonzero, nonzero)
@settings(max_examples=20)
def test_rll_second_branch_and_four_vertex(u, v, alpha, Delta):
    if u * u == v * v:
        return
    assert verify_RLL(lambda z: build_L5v_second(z, alpha, Delta), u=u, v=v,
                      Delta=Delta).is_zero()
    assert verify_RLL(lambda z: build_four_vertex_L(z, Delta), u=u, v=v, Delta=Delta).is_zero()


def test_rll_negative_control():
    p = P(2, 3)

    def corrupted(u):
        w = weights_at(p.alpha, p.delta, u, 1)
        return six_vertex_L(w.w1, 1, w.w3, w.w4, w.w5, w.w6)

    assert not verify_RLL(corrupted, u=2, v=3, Delta=3).is_zero()
    # the right L-operator with the wrong Delta in R also fails
    assert not verify_RLL(lambda u: build_L5v(u, 1, p), u=2, v=3, Delta=5).is_zero()


@pytest.mark.parametrize("variant", ["first", "second", "third"])
@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("betas", [(0, 0), (Fraction(2, 3), 0), (0, Fraction(-5, 2))])
def test_rll_spm(variant, m, betas):
    rs = RationalSampler(m)
    Delta, alpha, gamma = rs.rational(), rs.rational(), Fraction(4, 3)
    u, v = rs.rationals(2, distinct_squares=True)
    res = verify_RLL(lambda z: build_Spm_L(variant, m, None, z, alpha, *betas, gamma, Delta),
                     u=u, v=v, Delta=Delta)
    assert res.is_zero()


def test_spm_rejects_bad_input():
    with pytest.raises(ValueError):
        build_Spm_L("first", 1, None, 2, 1, 1, 1, 0, 2)
    with pytest.raises(ValueError):
        build_Spm_L("first", 2, (Fraction(1, 2), Fraction(1, 2)), 2, 1, 0, 0, 0, 2)
    with pytest.raises(ValueError):
        build_Spm_L("fourth", 1, None, 2, 1, 0, 0, 0, 2)


def test_spm_m1_reductions():
    u, alpha, Delta, gamma = Fraction(5, 3), Fraction(-2, 7), Fraction(3, 4), Fraction(2, 9)
    first = build_Spm_L("first", 1, None, u, alpha, 0, 0, gamma, Delta)
    assert first.matrix() == build_L5v(u, 1, P(alpha, Delta)).matrix()
    second = build_Spm_L("second", 1, None, u, alpha, 0, 0, gamma, Delta)
    assert second.matrix() == build_L5v_second(u, alpha, Delta).matrix()
    third = build_Spm_L("third", 1, None, u, alpha, 0, 0, gamma, Delta)
    assert third.matrix() == build_four_vertex_L(u, Delta).matrix()


@given(nonzero, nonzero, nonzero, nonzero)
def test_delta_bookkeeping(u, xi, alpha, Delta):
    L1 = build_L5v(u, xi, P(alpha, Delta))
    if L1.matrix()[0][0]:
        assert five_vertex_delta(L1) == Delta
    if u * u != 1:
        assert second_branch_delta(build_L5v_second(u, alpha, Delta)) == Delta
    assert four_vertex_delta(build_four_vertex_L(u, Delta)) == Delta


# -- bosonic solution ------------------------------------------------------------


@pytest.mark.parametrize("Delta", [Fraction(2), Fraction(-3, 5)])
def test_phase_operator_algebra(Delta):
    F = 6
    phi, dag = phase_operators(Delta, F)
    pp = phi @ dag
    comm = pp - (dag @ phi) * (Delta * Delta)
    for n in range(F - 1):
        for k in range(F - 1):
            assert pp[n, k] == (Delta ** (2 * n) if n == k else 0)
            assert comm[n, k] == (1 if n == k == 0 else 0)


def test_bosonic_input_guards():
    with pytest.raises(ValueError):
        build_bosonic_L(2, 2, 1, 3, 6)  # alpha*delta = 2 is not -s^2
    with pytest.raises(ValueError):
        build_bosonic_L(2, 1, -1, 3, 6)  # alpha*delta = -1
    with pytest.raises(ValueError):
        build_bosonic_L(2, 1, -4, 3, 2)  # cutoff too small


def test_bosonic_delta_zero_structure():
    # Delta = 1, delta = 0: A = u - (alpha/u) pi, D = 1/u, B and C the bare phase operators
    u, alpha, F = Fraction(3, 2), Fraction(5, 7), 6
    L = build_bosonic_L(u, alpha, 0, 1, F)
    phi, dag = phase_operators(1, F)
    pi = SparseOperator(F, {(0, 0): 1})
    assert L.A == SparseOperator.identity(F, u) - pi * (alpha / u)
    assert L.D == SparseOperator.identity(F, 1 / u)
    assert L.B == dag and L.C == phi


@pytest.mark.parametrize("sign", [1, -1])
def test_bosonic_rll_on_safe_block(sign):
    rs = RationalSampler(20 + sign)
    for _ in range(3):
        Delta = rs.rational()
        u, v = rs.rationals(2, distinct_squares=True)
        alpha = rs.rational()
        s = rs.integer(1, 4) + Fraction(1, rs.integer(2, 4))
        delta = -s * s / alpha
        res = verify_RLL(lambda z: build_bosonic_L(z, alpha, delta, Delta, 6, sign),
                         u=u, v=v, Delta=Delta, safe_dim=3)
        assert res.is_zero()


# -- sixteen relations, RTT and commuting families ----------------------------------


def test_sixteen_relations_five_vertex_M3():
    rs = RationalSampler(31)
    Delta = rs.rational()
    sites = chain(rs, 3, Delta)
    u, v = rs.rationals(2, distinct_squares=True)
    Tu, Tv = monodromy_from_sites(u, sites), monodromy_from_sites(v, sites)
    assert failing_relations(verify_commutation_16(Tu, Tv, u, v, Delta)) == []
    # the C B relation written out
    cb = Tu.C @ Tv.B - (Tu.A @ Tv.D - Tv.A @ Tu.D) * g_fn(u, v, Delta)
    assert cb.is_zero()


def test_sixteen_relations_negative_control():
    rs = RationalSampler(32)
    Delta = rs.rational()
    sites = chain(rs, 2, Delta)
    u, v = rs.rationals(2, distinct_squares=True)
    Tu, Tv = monodromy_from_sites(u, sites), monodromy_from_sites(v, sites)
    assert failing_relations(verify_commutation_16(Tu, Tv, u, v, Delta + 1))


def test_sixteen_relations_bosonic_safe_block():
    rs = RationalSampler(33)
    Delta, u, v = rs.rational(), *rs.rationals(2, distinct_squares=True)
    site = bosonic_site(Fraction(2), Fraction(-9, 8), Delta, 6)
    Tu, Tv = monodromy_from_sites(u, [site]), monodromy_from_sites(v, [site])
    assert failing_relations(verify_commutation_16(Tu, Tv, u, v, Delta, safe_dim=3)) == []


def test_sixteen_relations_mixed_spm_chain():
    rs = RationalSampler(34)
    Delta, u, v = rs.rational(), *rs.rationals(2, distinct_squares=True)
    sites = [spm_site("first", 2, 3, 0, Fraction(1, 2), 2, Delta),
             spm_site("second", 1, Fraction(-1, 3), 0, 0, 5, Delta)]
    Tu, Tv = monodromy_from_sites(u, sites), monodromy_from_sites(v, sites)
    assert failing_relations(verify_commutation_16(Tu, Tv, u, v, Delta)) == []


@pytest.mark.parametrize("M", [2, 3])
def test_rtt_full_monodromy(M):
    rs = RationalSampler(40 + M)
    Delta = rs.rational()
    sites = chain(rs, M, Delta)
    u, v = rs.rationals(2, distinct_squares=True)
    assert verify_RTT(lambda z: monodromy_from_sites(z, sites), u, v, Delta).is_zero()


@pytest.mark.parametrize("M", range(1, 5))
def test_same_operator_family_commutes(M):
    rs = RationalSampler(50 + M)
    sites = chain(rs, M, rs.rational())
    u, v = rs.rationals(2, distinct_squares=True)
    Tu, Tv = monodromy_from_sites(u, sites), monodromy_from_sites(v, sites)
    for name in "ABCD":
        X, Y = Tu.get(name), Tv.get(name)
        assert (X @ Y - Y @ X).is_zero()


# -- action lemma and symmetry -----------------------------------------------------


@pytest.mark.parametrize("n,M,which", [(1, 2, "A"), (2, 3, "D"), (2, 3, "A"), (0, 2, "A")])
def test_action_lemma_examples(n, M, which):
    rs = RationalSampler(60 + n)
    p = WeightParams(rs.rational(), rs.rational(), (1,), rs.rationals(M))
    u = rs.rationals(n + 1, distinct_squares=True)
    res = verify_action_lemma(n, u, which, M, p)
    assert all(v == 0 for v in res.values())


def test_action_lemma_rejects_coincident():
    p = WeightParams(1, 2, (1,), (1, 2))
    with pytest.raises(ValueError):
        verify_action_lemma(1, [2, -2], "A", 2, p)


@pytest.mark.parametrize("sets,which", [
    (((1,), (), (1,)), "A"),  # swap C and B arguments
    (((), (1,), (1,)), "A"),  # swap A and B arguments
    (((1,), (1,), (1,)), "D"),
    (((2,), (0,), (1,)), "A"),
])
def test_symmetry_examples(sets, which):
    rs = RationalSampler(70)
    Delta = rs.rational()
    sites = chain(rs, 2, Delta)
    cache = {}

    def make(x):
        if x not in cache:
            cache[x] = monodromy_from_sites(x, sites)
        return cache[x]

    sizes = [len(s) for s in sets]
    vals = rs.rationals(sum(sizes), distinct_squares=True)
    us, vs, ws = vals[:sizes[0]], vals[sizes[0]:sizes[0] + sizes[1]], vals[sizes[0] + sizes[1]:]
    out = verify_symmetry_proposition(make, us, vs, ws, which)
    assert out and all(out.values())


def test_symmetry_fails_without_weighting():
    # dropping the v^-1 weight breaks the A/B swap: A(v) B(w) != A(w) B(v)
    rs = RationalSampler(71)
    sites = chain(rs, 2, rs.rational())
    v, w = rs.rationals(2, distinct_squares=True)
    Tv, Tw = monodromy_from_sites(v, sites), monodromy_from_sites(w, sites)
    assert Tv.A @ Tw.B != Tw.A @ Tv.B
    assert (Tv.A @ Tw.B) * (1 / v) == (Tw.A @ Tv.B) * (1 / w)


def test_site_dimension_check():
    bad = Site(3, lambda u: build_L5v(u, 1, P(1, 1)))
    with pytest.raises(ValueError):
        bad(2)
