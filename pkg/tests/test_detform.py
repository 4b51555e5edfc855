from fractions import Fraction
from itertools import permutations

import pytest

from fivevertex.detform import (S_A, S_D, S_A_recursion_rhs, Z_hom_Q, Z_theorem1,
                                appendix_b_sides, base_case_S1, five_vertex_eigenvalues,
                                q_limit_residual, scalar_product_Qn, verify_appendixB)
from fivevertex.lattice import LatticeSpec, WeightParams, partition_function_oracle
from fivevertex.qism import VacuumEigenvalues, bracket, five_vertex_site, monodromy_from_sites
from fivevertex.sampling import RationalSampler


def inhom(rs, L, M):
    return WeightParams(rs.rational(), rs.rational(), rs.rationals(L, distinct_squares=True),
                        rs.rationals(M, distinct_squares=True))


def free_eig(rs, u):
    return VacuumEigenvalues.from_table({x: (rs.rational(), rs.rational()) for x in u})


# -- vacuum elements --------------------------------------------------------------


def test_base_cases():
    rs = RationalSampler(1)
    p = inhom(rs, 2, 3)
    eig = five_vertex_eigenvalues(p)
    u1, u2 = p.u
    s1 = base_case_S1(u1, u2, eig, p.delta)
    assert S_A(1, 0, [u1, u2], eig, p.delta) == s1
    assert S_D(1, 0, [u1, u2], eig, p.delta) == s1
    assert S_A(0, 1, [u1], eig, p.delta) == eig.a(u1)
    assert S_D(0, 1, [u1], eig, p.delta) == eig.d(u1)


@pytest.mark.parametrize("which", ["A", "D"])
def test_n1_m1_against_operators(which):
    rs = RationalSampler(2)
    Delta = rs.rational()
    sites = [five_vertex_site(x, a, Delta)
             for x, a in zip(rs.rationals(3, distinct_squares=True), rs.rationals(3))]
    eig = VacuumEigenvalues.from_sites(sites)
    u = rs.rationals(3, distinct_squares=True)
    value = bracket(lambda x: monodromy_from_sites(x, sites), [u[2]], [u[1]], [u[0]], which)
    S = S_A if which == "A" else S_D
    assert S(1, 1, u, eig, Delta) == value


@pytest.mark.parametrize("n", [1, 2, 3])
def test_S_A_equals_S_D_without_middle(n):
    rs = RationalSampler(n)
    u = rs.rationals(2 * n, distinct_squares=True)
    eig = free_eig(rs, u)
    Delta = rs.rational()
    assert S_A(n, 0, u, eig, Delta) == S_D(n, 0, u, eig, Delta)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(0, 3) for m in range(1, 6 - 2 * n)])
def test_S_A_recursion(n, m):
    rs = RationalSampler(10 * n + m)
    p = inhom(rs, 2 * n + m, 3)
    eig = five_vertex_eigenvalues(p)
    assert S_A(n, m, p.u, eig, p.delta) == S_A_recursion_rhs(n, m, p.u, eig, p.delta)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (0, 3)])
def test_row_scaling(n, m):
    rs = RationalSampler(20 + n + m)
    u = rs.rationals(2 * n + m, distinct_squares=True)
    eig = free_eig(rs, u)
    c = rs.rational()
    scaled = VacuumEigenvalues(lambda x: c * eig.a(x), eig.d)
    Delta = rs.rational()
    assert S_A(n, m, u, scaled, Delta) == c ** (n + m) * S_A(n, m, u, eig, Delta)
    assert S_D(n, m, u, scaled, Delta) == c ** n * S_D(n, m, u, eig, Delta)


def test_coincident_rapidities_rejected():
    eig = VacuumEigenvalues.five_vertex((1, 2), 1, 1)
    with pytest.raises(ValueError):
        S_A(1, 0, [2, -2], eig, 1)
    spec = LatticeSpec(2, 2, 1)
    with pytest.raises(ValueError):
        Z_theorem1(spec, WeightParams(1, 1, (3, 3), (1, 2)))


# -- the L x L formula ------------------------------------------------------------


@pytest.mark.parametrize("L,M", [(L, M) for L in range(1, 5) for M in range(1, 5)])
def test_theorem1_equals_oracle(L, M):
    rs = RationalSampler(100 + 10 * L + M)
    for N in range(min(L, M) + 1):
        spec = LatticeSpec(L, M, N)
        p = inhom(rs, L, M)
        assert Z_theorem1(spec, p) == partition_function_oracle(spec, p)


def test_theorem1_edges():
    rs = RationalSampler(7)
    p = inhom(rs, 3, 4)
    eig = five_vertex_eigenvalues(p)
    a = d = Fraction(1)
    for x in p.u:
        a *= eig.a(x)
        d *= eig.d(x)
    assert Z_theorem1(LatticeSpec(3, 4, 0), p) == a
    assert Z_theorem1(LatticeSpec(3, 4, 3), p) == d


def test_printed_prefactor_indexing():
    # the product over u_1..u_{|L-2N|} agrees only when the middle block is empty
    rs = RationalSampler(8)
    p = inhom(rs, 3, 3)
    spec = LatticeSpec(3, 3, 1)
    oracle = partition_function_oracle(spec, p)
    assert Z_theorem1(spec, p) == oracle
    assert Z_theorem1(spec, p, prefactor="printed") != oracle
    q = inhom(rs, 4, 3)
    even = LatticeSpec(4, 3, 2)
    assert Z_theorem1(even, q, prefactor="printed") == partition_function_oracle(even, q)
    with pytest.raises(ValueError):
        Z_theorem1(spec, p, prefactor="other")


def test_theorem1_symmetries():
    rs = RationalSampler(9)
    spec = LatticeSpec(5, 3, 1)  # n = 1, m = 3: B block u_1, A block u_2..u_4, C block u_5
    p = inhom(rs, 5, 3)
    z = Z_theorem1(spec, p)
    for perm in permutations(p.xi):
        assert Z_theorem1(spec, WeightParams(p.alpha, p.delta, p.u, perm)) == z
    u = list(p.u)
    for mid in permutations(u[1:4]):
        assert Z_theorem1(spec, WeightParams(p.alpha, p.delta, [u[0], *mid, u[4]], p.xi)) == z
    spec2 = LatticeSpec(4, 3, 2)  # n = 2, m = 0
    q = inhom(rs, 4, 3)
    z2 = Z_theorem1(spec2, q)
    v = list(q.u)
    for swapped in ([v[1], v[0], v[2], v[3]], [v[0], v[1], v[3], v[2]]):
        assert Z_theorem1(spec2, WeightParams(q.alpha, q.delta, swapped, q.xi)) == z2


# -- homogeneous limit -----------------------------------------------------------------


def test_hom_N0_is_power_of_a():
    eig = VacuumEigenvalues.five_vertex((1, 1, 1), Fraction(2, 3), Fraction(5, 4))
    u = Fraction(7, 3)
    assert Z_hom_Q(LatticeSpec(4, 3, 0), u, Fraction(2, 3), Fraction(5, 4)) == eig.a(u) ** 4


@pytest.mark.parametrize("L,M", [(L, M) for L in range(1, 5) for M in range(1, 5)])
def test_hom_equals_oracle(L, M):
    rs = RationalSampler(200 + 10 * L + M)
    for N in range(min(L, M) + 1):
        spec = LatticeSpec(L, M, N)
        alpha, Delta = rs.rational(), rs.rational()
        u = rs.rational_where(lambda x: x * x != 1)
        p = WeightParams.homogeneous_point(spec, u, alpha, Delta)
        assert Z_hom_Q(spec, u, alpha, Delta) == partition_function_oracle(spec, p)


def test_hom_two_by_two_example():
    spec = LatticeSpec(2, 2, 1)
    p = WeightParams.homogeneous_point(spec, 2)
    assert Z_hom_Q(spec, 2) == partition_function_oracle(spec, p)


def test_hom_unit_and_zero_points():
    spec = LatticeSpec(3, 3, 1)
    for u in (1, -1):
        assert Z_hom_Q(spec, u) == partition_function_oracle(
            spec, WeightParams.homogeneous_point(spec, u))
    with pytest.raises(ValueError):
        Z_hom_Q(spec, 0)


@pytest.mark.parametrize("L", range(1, 5))
def test_symbolic_limit_of_V_matrix(L):
    rs = RationalSampler(300 + L)
    for N in range(L + 1):
        spec = LatticeSpec(L, 4, min(N, 4))
        u0 = rs.rational_where(lambda x: x * x != 1)
        assert q_limit_residual(spec, u0, rs.rational(), rs.rational()) == 0


# -- the n x n form ----------------------------------------------------------------------


def test_Qn_base_case():
    rs = RationalSampler(11)
    p = inhom(rs, 2, 3)
    eig = five_vertex_eigenvalues(p)
    assert scalar_product_Qn(1, p.u, eig, p.delta) == base_case_S1(*p.u, eig, p.delta)


@pytest.mark.parametrize("n", [2, 3])
def test_Qn_matches_S_A_with_free_eigenvalues(n):
    rs = RationalSampler(12 + n)
    u = rs.rationals(2 * n, distinct_squares=True)
    eig = free_eig(rs, u)
    Delta = rs.rational()
    assert scalar_product_Qn(n, u, eig, Delta) == S_A(n, 0, u, eig, Delta)


@pytest.mark.parametrize("n,draws", [(1, 5), (2, 10), (3, 5)])
def test_appendix_b_identity(n, draws):
    rs = RationalSampler(40 + n)
    for _ in range(draws):
        u = rs.rationals(2 * n, distinct_squares=True)
        assert verify_appendixB(n, rs.rationals(2 * n), rs.rationals(2 * n), u)


def test_appendix_b_sides_detect_mismatch():
    rs = RationalSampler(44)
    u = rs.rationals(4, distinct_squares=True)
    a, d = rs.rationals(4), rs.rationals(4)
    lhs, rhs = appendix_b_sides(2, a, d, u)
    assert lhs == rhs
    # feeding the n x n side different d~ values breaks the equality
    d2 = list(d)
    d2[0] += 1
    lhs2, rhs2 = appendix_b_sides(2, a, d2, u)
    assert lhs2 == rhs2 and rhs2 != rhs
