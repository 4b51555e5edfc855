from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivevertex.lattice import (LatticeSpec, SizeBudgetError, WeightParams, config_to_plane_partition,
                                count_configs, enumerate_configs, enumerate_plane_partitions,
                                macmahon_count, parse_dump, partition_function_oracle,
                                plane_partition_to_config, vertex_weights, weights_at)
from fivevertex.sampling import RationalSampler

nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool)


def transfer_oracle(spec, params):
    """Independent sum: row-by-row transfer over vertical-edge bitmasks.

    Lines enter at the bottom and leave at the top; inside a row a line can
    go straight up or turn right and run until it turns up again. Positions
    are left to right; column j of the weights is counted from the right.
    """
    L = spec.L
    start = tuple(1 if p < spec.N else 0 for p in range(L))
    end = tuple(1 if p >= L - spec.N else 0 for p in range(L))
    states = {start: Fraction(1)}
    for k in range(spec.M, 0, -1):  # bottom row is row M
        new = {}
        for below, w0 in states.items():
            # scan left to right carrying the horizontal occupancy
            partial = [((), 0, w0)]
            for p in range(L):
                wts = vertex_weights(params, params.u[L - 1 - p], params.xi[k - 1])
                nxt = []
                for top, h, w in partial:
                    b = below[p]
                    if b and h:
                        continue  # would need type 2
                    if not b and not h:
                        nxt.append((top + (0,), 0, w * wts.w1))
                    elif b:
                        nxt.append((top + (1,), 0, w * wts.w3))
                        nxt.append((top + (0,), 1, w * wts.w5))
                    else:
                        nxt.append((top + (0,), 1, w * wts.w4))
                        nxt.append((top + (1,), 0, w * wts.w6))
                partial = nxt
            for top, h, w in partial:
                if h == 0 and w:
                    new[top] = new.get(top, 0) + w
        states = new
    return states.get(end, Fraction(0))


def random_params(rs, spec):
    return WeightParams(rs.rational(), rs.rational(), rs.rationals(spec.L), rs.rationals(spec.M))


# -- weights ----------------------------------------------------------------------


def test_weight_examples():
    w = weights_at(1, 1, 2, 1)
    assert (w.w1, w.w2, w.w3, w.w4, w.w5, w.w6) == (Fraction(3, 2), 0, 2, 2, 1, 1)
    assert weights_at(Fraction(7, 3), 5, Fraction(4, 9), Fraction(4, 9)).w1 == 0
    w = weights_at(1, 2, 3, 2)
    assert (w.w1, w.w3, w.w4) == (Fraction(5, 12), Fraction(3, 2), Fraction(3, 2))


@pytest.mark.parametrize("args", [(0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)])
def test_weights_reject_zero(args):
    with pytest.raises(ValueError):
        weights_at(*args)


@given(nonzero, nonzero, nonzero, nonzero)
def test_delta_is_the_weight_ratio(alpha, delta, u, xi):
    w = weights_at(alpha, delta, u, xi)
    if w.w1:
        assert (w.w3 * w.w4 - w.w5 * w.w6) / (w.w1 * w.w3) == delta


def test_lattice_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(2, 2, 3)
    with pytest.raises(ValueError):
        LatticeSpec(0, 2, 0)
    with pytest.raises(TypeError):
        LatticeSpec(2.0, 2, 1)
    assert LatticeSpec(8, 9, 3).box == (5, 3, 6)


# -- enumeration and counting ----------------------------------------------------


@pytest.mark.parametrize("spec,count", [((2, 2, 1), 2), ((4, 4, 2), 20), ((3, 3, 0), 1)])
def test_count_examples(spec, count):
    spec = LatticeSpec(*spec)
    assert count_configs(spec) == count
    assert macmahon_count(*spec.box) == count
    assert sum(1 for _ in enumerate_plane_partitions(*spec.box)) == count


@pytest.mark.parametrize("L,M", [(L, M) for L in range(1, 6) for M in range(1, 6)])
def test_count_matches_plane_partitions(L, M):
    for N in range(min(L, M) + 1):
        spec = LatticeSpec(L, M, N)
        assert count_configs(spec) == sum(1 for _ in enumerate_plane_partitions(*spec.box))


def test_budget_is_enforced():
    with pytest.raises(SizeBudgetError):
        count_configs(LatticeSpec(4, 4, 2), budget=19)
    assert count_configs(LatticeSpec(4, 4, 2), budget=20) == 20


def test_no_type_two_and_boundaries():
    spec = LatticeSpec(4, 5, 2)
    for c in enumerate_configs(spec):
        types = c.vertex_types()
        assert all(t in (1, 3, 4, 5, 6) for row in types for t in row)
        v = c.vertical_edges()
        # columns are stored right to left: the leftmost N at the bottom, the rightmost N on top
        assert v[0] == [0, 0, 1, 1] and v[-1] == [1, 1, 0, 0]
        for row in c.horizontal_edges():
            assert row[0] == 0 and row[-1] == 0


def test_dump_round_trip():
    spec = LatticeSpec(4, 4, 2)
    for c in enumerate_configs(spec):
        assert parse_dump(c.dump(), spec) == c


# -- plane partition bijection -------------------------------------------------------


def test_bijection_extremes():
    spec = LatticeSpec(4, 5, 2)
    pps = [config_to_plane_partition(c, spec) for c in enumerate_configs(spec)]
    A = spec.A
    assert ((0,) * spec.C,) * spec.B in pps
    assert ((A,) * spec.C,) * spec.B in pps
    empty = LatticeSpec(3, 3, 0)
    (only,) = list(enumerate_configs(empty))
    assert config_to_plane_partition(only, empty) == ()
    assert all(t == 1 for row in only.vertex_types() for t in row)


@pytest.mark.parametrize("box", [(2, 2, 2), (1, 3, 2), (3, 2, 1), (2, 3, 3), (0, 2, 2)])
def test_bijection_is_injective_and_onto(box):
    A, B, C = box
    spec = LatticeSpec(A + B, B + C, B)
    images = [config_to_plane_partition(c, spec) for c in enumerate_configs(spec)]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_plane_partitions(A, B, C))
    for pp in images:
        assert config_to_plane_partition(plane_partition_to_config(pp, spec), spec) == pp


def test_bijection_structure_for_large_box():
    # a 5 x 3 x 6 box: lattice 8 x 9 with three lines; check shape and monotonicity
    spec = LatticeSpec(8, 9, 3)
    rs = RationalSampler(3)
    pps = list(enumerate_plane_partitions(*spec.box))
    for _ in range(50):
        pp = pps[rs.integer(0, len(pps) - 1)]
        c = plane_partition_to_config(pp, spec)
        assert len(pp) == spec.B and all(len(r) == spec.C for r in pp)
        assert config_to_plane_partition(c, spec) == pp
        assert all(t in (1, 3, 4, 5, 6) for row in c.vertex_types() for t in row)


# -- partition function -----------------------------------------------------------


def test_two_by_two_golden_value():
    spec = LatticeSpec(2, 2, 1)
    p = WeightParams(1, 1, (2, 3), (1, 5))
    z = partition_function_oracle(spec, p)
    assert z == transfer_oracle(spec, p)
    # line turns right in the bottom row: w3(3/1) w1(2/1) = 3 * 3/2;
    # line goes up the left column first: w3(2/5) w1(3/5) = 2/5 * (-16/15)
    assert z == Fraction(9, 2) - Fraction(32, 75) == Fraction(611, 150)


@pytest.mark.parametrize("L,M", [(L, M) for L in range(1, 5) for M in range(1, 5)])
def test_oracle_matches_transfer_sum(L, M):
    rs = RationalSampler(100 * L + M)
    for N in range(min(L, M) + 1):
        spec = LatticeSpec(L, M, N)
        p = random_params(rs, spec)
        assert partition_function_oracle(spec, p) == transfer_oracle(spec, p)


def test_closed_forms_at_edges():
    rs = RationalSampler(5)
    for L, M in product(range(1, 5), repeat=2):
        p = random_params(rs, LatticeSpec(L, M, 0))
        a = d = Fraction(1)
        for uj in p.u:
            aj = dj = Fraction(1)
            for xk in p.xi:
                w = vertex_weights(p, uj, xk)
                aj *= w.w1
                dj *= w.w3
            a *= aj
            d *= dj
        assert partition_function_oracle(LatticeSpec(L, M, 0), p) == a
        if L <= M:
            assert partition_function_oracle(LatticeSpec(L, M, L), p) == d


@settings(max_examples=25)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_alpha_scaling(L, M, data):
    N = data.draw(st.integers(0, min(L, M)))
    spec = LatticeSpec(L, M, N)
    u = data.draw(st.lists(nonzero, min_size=L, max_size=L))
    xi = data.draw(st.lists(nonzero, min_size=M, max_size=M))
    alpha, delta = data.draw(nonzero), data.draw(nonzero)
    z1 = partition_function_oracle(spec, WeightParams(1, delta, u, xi))
    za = partition_function_oracle(spec, WeightParams(alpha, delta, u, xi))
    assert za == alpha ** (M * (L - 2 * N)) * z1


def test_param_arity_is_checked():
    with pytest.raises(ValueError):
        partition_function_oracle(LatticeSpec(2, 2, 1), WeightParams(1, 1, (2,), (1, 5)))
