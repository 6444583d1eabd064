import pytest

import ccx


def test_cube_basics():
    q3 = ccx.make_cube(3)
    assert q3.vertex_count == 8
    assert q3.edge_count == 12
    assert q3.hyperplane_count == 3
    assert q3.dimension == 3
    assert q3.dist(0, 7) == 3
    assert q3.separators(0, 7) == [0, 1, 2]
    assert q3.dist_linf(0, 7) == 1
    assert q3.median(0b000, 0b011, 0b101) == 0b001
    assert "8 vertices" in repr(q3)


def test_validation_report():
    rep = ccx.validate(3, [(0, 1), (1, 2), (0, 2)])
    assert rep["is_median"] is False
    assert rep["witness"] == [0, 1, 2]
    ok = ccx.validate(2, [(0, 1)])
    assert ok["is_median"] is True
    with pytest.raises(ccx.Error):
        ccx.Complex(3, [(0, 1), (1, 2), (0, 2)])


def test_convexity_and_gates():
    grid = ccx.make_grid(3, 3)
    hull = grid.convex_hull([0, 4])
    assert hull == [0, 1, 3, 4]
    assert grid.is_convex(hull)
    assert grid.gate(8, [0, 1, 2]) == 2
    assert grid.project([2, 5, 8], [0, 3, 6]) == [0, 3, 6]


def test_separation_and_contact():
    grid = ccx.make_grid(3, 3)
    rep = grid.separation_report(0, 2)
    assert rep["degree_direct"] == rep["degree_projection"] == 2
    assert not rep["strongly_separated"]

    p5 = ccx.make_path(5)
    assert p5.strongly_separated(0, 3)
    assert p5.delta(0, 3) == 2
    assert p5.delta_chain(0, 3) == [1, 2]
    assert p5.qi_check()["clean"] is True
    assert p5.four_point_twice_delta() == 0


def test_duality_round_trip():
    q3 = ccx.make_cube(3)
    walls = q3.walls()
    dual, wall_map = ccx.dual(walls["ground"], [tuple(w) for w in walls["walls"]])
    assert ccx.isomorphic(dual, q3)
    assert sorted(wall_map) == [0, 1, 2]

    factors = q3.decompose()
    assert len(factors["classes"]) == 3


def test_actions():
    q3 = ccx.make_cube(3)
    gens = ccx.cube_symmetry_generators(3)
    assert ccx.group_order(q3, gens) == 48
    profile = ccx.acyl_profile(q3, gens)
    assert profile["n_hyp"] == [16]

    rot = [((v & 1) << 1) | (((v >> 1) & 1) << 2) | ((v >> 2) & 1) for v in range(8)]
    rep = ccx.displacement(q3, rot, 0, 7)
    assert rep["max_disp"] == 2
    assert rep["corrected_bound_holds"] is True
    assert rep["literal_bound_holds"] is False


def test_wpd_pipeline():
    p9 = ccx.make_path(9)
    domain = list(range(8))
    vmap = [v + 1 if v <= 7 else -1 for v in range(9)]
    out = ccx.wpd_certificate(p9, domain, vmap, "line window")
    assert out["certified"] is True
    assert out["degree"] == 0
    assert out["stabilizer_intersection"] == 1

    sk = ccx.skewer(p9, domain, vmap)
    assert len(sk["witnesses"]) == 28


def test_ramsey():
    assert ccx.ramsey_bound(1, 1) == 6
    assert ccx.ramsey_bound(2, 2) == 18


def test_separation_primitives():
    p5 = ccx.make_path(5)
    assert ccx.separates(p5, 1, 0, 2)
    assert not ccx.facing_triple(p5, 0, 1, 2)
    layers = ccx.hyperplane_layers(p5, 0, [0, 1, 2, 3])
    assert layers["layers"] == [[0], [1], [2], [3]]
    assert layers["away_closed"]


def test_contact_consequences():
    grid = ccx.make_grid(4, 4)
    rep = ccx.hagen_check(grid)
    assert rep["holds"]
    assert rep["geodesics_checked"] > 0


def test_coarse_stabilizer():
    p5 = ccx.make_path(5)
    swap = ccx.path_end_swap(5)
    assert len(ccx.coarse_stabilizer(p5, [swap], 0, 4, 4)) == 2
    assert len(ccx.coarse_stabilizer(p5, [swap], 0, 4, 0)) == 1
