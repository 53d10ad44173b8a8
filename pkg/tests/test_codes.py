import numpy as np
import pytest

from graphcodes.codes import (
    _macwilliams_min_weight,
    _min_weight_enum,
    code_instance,
    dimension,
    distance_profile,
    minimum_distance,
    null_space,
    rank,
    regularity_index,
    rref,
)
from graphcodes.errors import BudgetExceeded
from graphcodes.gfq import make_field
from graphcodes.graph import build_family
from graphcodes.toric import parameterize, torus_points


def test_rref_gf5():
    F = make_field(5)
    M = [[1, 0, 2], [0, 1, 3], [2, 3, 1]]
    R, pivots = rref(M, F)
    assert pivots == [0, 1, 2]
    assert R.tolist() == np.eye(3, dtype=int).tolist()


def test_rref_rank_deficient():
    F = make_field(3)
    M = [[1, 2, 0], [2, 1, 0], [0, 0, 0]]
    R, pivots = rref(M, F)
    assert len(pivots) == 1  # second row is twice the first
    assert R.tolist() == [[1, 2, 0]]


def test_rank_gf4():
    F = make_field(4)
    # Rows (1, a), (a, a^2) are proportional; a is whatever element 2 encodes.
    a = 2
    M = [[1, a], [a, F.mul(a, a)]]
    assert rank(M, F) == 1


def test_null_space_annihilates():
    F = make_field(5)
    M = np.array([[1, 2, 3, 4], [0, 1, 1, 2]])
    N = null_space(M, F)
    assert N.shape[0] == 2
    for row in N:
        for m in M:
            acc = 0
            for a, b in zip(m, row):
                acc = F.add(acc, F.mul(int(a), int(b)))
            assert acc == 0


def test_dimension_base_cases():
    X = parameterize(build_family("complete_bipartite", [2, 3]), make_field(5))
    assert dimension(X, 0) == 1
    assert dimension(X, 1) == X.s


def test_dimension_c6_ternary_plateau():
    X = parameterize(build_family("cycle", [6]), make_field(3))
    assert dimension(X, 2) == 16  # 2^(s-2)


def test_dimension_invariant_under_edge_reorder():
    G = build_family("cycle", [6])
    H = G.reorder_edges([4, 2, 6, 1, 3, 5])
    F = make_field(4)
    for d in range(4):
        assert dimension(parameterize(G, F), d) == dimension(parameterize(H, F), d)


def test_regularity_torus_p1_gf5():
    assert regularity_index(torus_points(2, make_field(5))) == 3


def test_regularity_c6_gf3():
    assert regularity_index(parameterize(build_family("cycle", [6]), make_field(3))) == 2


def test_regularity_k4_gf3():
    assert regularity_index(parameterize(build_family("complete", [4]), make_field(3))) == 2


def test_mindist_p1_gf5():
    T = torus_points(2, make_field(5))
    assert minimum_distance(T, 1) == 3  # q - 1 - d


def test_mindist_degree_zero_is_length():
    X = parameterize(build_family("cycle", [4]), make_field(3))
    assert minimum_distance(X, 0) == X.m


def test_mindist_budget_refusal():
    X = parameterize(build_family("cycle", [6]), make_field(5))
    with pytest.raises(BudgetExceeded) as exc:
        minimum_distance(X, 1, budget=10)
    assert exc.value.required == (5**6 - 1) // 4


def test_primal_and_dual_routes_agree():
    # Same distances whether computed by message enumeration or by the
    # MacWilliams transform of the dual distribution.
    F = make_field(3)
    T = torus_points(3, F)
    for d in range(1, 5):
        inst = code_instance(T, d)
        primal = _min_weight_enum(inst.generator, F)
        H = rref(null_space(inst.generator, F), F)[0]
        if H.shape[0]:
            assert primal == _macwilliams_min_weight(H, F, inst.k)
        assert primal == minimum_distance(T, d)


def test_profile_torus_p2_gf5():
    T = torus_points(3, make_field(5))
    rows = distance_profile(T, 6)
    assert [r.delta for r in rows[1:]] == [12, 8, 4, 3, 2, 1]
    assert rows[0].delta == T.m


def test_profile_singleton_and_plateau():
    X = parameterize(build_family("cycle", [6]), make_field(3))
    rows = distance_profile(X, 4)
    for r in rows:
        assert r.delta <= r.singleton
    reg = regularity_index(X)
    for r in rows:
        if r.d >= reg:
            assert r.delta == 1


def test_profile_mds_p1_gf5():
    T = torus_points(2, make_field(5))
    for r in distance_profile(T, 3)[1:]:
        assert r.delta == r.singleton  # MDS at every degree up to q - 3
