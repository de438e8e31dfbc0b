"""Pseudo-regularity checks, both characterizations, walk identities,
classification, and the whole-graph invariant suite."""

import numpy as np
import pytest

from pdrkit import (
    VERDICT_DISTANCE_BIREGULAR,
    VERDICT_DISTANCE_REGULAR,
    VERDICT_NOT_PDR,
    WALK_BIREGULAR,
    WALK_NEITHER,
    WALK_REGULAR,
    adjacency_powers,
    bfs,
    classify,
    combinatorial_intersection_array,
    decompose,
    enumerate_connected,
    perron_transform_consistency,
    generate_named,
    is_pdr_around,
    pseudo_regular_check,
    verify_graph,
    walk_formula_check,
    walk_regularity,
    weighted_distance_column,
)

GOLDEN = (1 + np.sqrt(5)) / 2


def prepared(g):
    return g, decompose(g)


# --- weighted distance columns ----------------------------------------------


def test_weighted_column_k3():
    g, dec = prepared(generate_named("complete", 3))
    assert np.allclose(weighted_distance_column(g, dec, 0, 1), [0.0, 1.0, 1.0], atol=1e-12)


def test_weighted_column_path3_center():
    g, dec = prepared(generate_named("path", 3))
    col = weighted_distance_column(g, dec, 1, 1)
    want = 3 / (2 * np.sqrt(2))
    assert col[1] == 0.0
    assert np.allclose(col[[0, 2]], [want, want], atol=1e-12)
    assert want == pytest.approx(1.0606601717, abs=1e-9)


def test_weighted_column_level_zero_and_range():
    g, dec = prepared(generate_named("cycle", 5))
    col = weighted_distance_column(g, dec, 2, 0)
    want = np.zeros(5)
    want[2] = float(dec.perron[2]) ** 2
    assert np.allclose(col, want, atol=1e-12)
    with pytest.raises(ValueError):
        weighted_distance_column(g, dec, 2, 3)


# --- pseudo-regular partitions ------------------------------------------------


def test_pseudo_regular_c4_distance_partition():
    g, dec = prepared(generate_named("cycle", 4))
    info = bfs(g, 0)
    quotient, witness = pseudo_regular_check(g, dec, info.cells)
    assert witness is None
    triples = quotient.tridiagonal()
    assert np.allclose(triples, [(0.0, 0.0, 2.0), (1.0, 0.0, 1.0), (2.0, 0.0, 0.0)], atol=1e-10)


def test_pseudo_regular_star_center_partition():
    # Star with two leaves: weighted flows collapse to the spectral radius sqrt(2).
    g, dec = prepared(generate_named("complete_bipartite", 1, 2))
    cells = (np.array([0]), np.array([1, 2]))
    quotient, witness = pseudo_regular_check(g, dec, cells)
    assert witness is None
    assert quotient.entries[0, 1] == pytest.approx(np.sqrt(2), abs=1e-12)  # center outflow
    assert quotient.entries[1, 0] == pytest.approx(np.sqrt(2), abs=1e-12)  # leaf upflow
    assert quotient.entries[0, 0] == 0.0 and quotient.entries[1, 1] == 0.0


def test_pseudo_regular_p4_witness():
    # Perron vector of the 4-path is proportional to (1, phi, phi, 1).
    g, dec = prepared(generate_named("path", 4))
    info = bfs(g, 1)
    quotient, witness = pseudo_regular_check(g, dec, info.cells)
    assert quotient is None
    assert (witness.cell, witness.target) == (1, 0)
    assert (witness.vertex_a, witness.vertex_b) == (0, 2)
    assert witness.value_a == pytest.approx(GOLDEN, abs=1e-9)
    assert witness.value_b == pytest.approx(1.0, abs=1e-9)
    assert witness.gap >= 0.5


def test_pseudo_regular_rejects_malformed_partition():
    g, dec = prepared(generate_named("cycle", 4))
    with pytest.raises(ValueError):
        pseudo_regular_check(g, dec, (np.array([0, 1]), np.array([1, 2, 3])))
    with pytest.raises(ValueError):
        pseudo_regular_check(g, dec, (np.array([0, 1]),))
    with pytest.raises(ValueError):
        pseudo_regular_check(g, dec, (np.array([0, 1, 2, 3]), np.array([], dtype=int)))


def test_quotient_rows_sum_to_radius():
    for g in [generate_named("petersen"), generate_named("complete_bipartite", 2, 3)]:
        dec = decompose(g)
        info = bfs(g, 0)
        quotient, _ = pseudo_regular_check(g, dec, info.cells)
        sums = quotient.entries.sum(axis=1)
        assert np.max(np.abs(sums - dec.spectral_radius)) < 1e-9


# --- per-vertex reports ---------------------------------------------------------


def test_is_pdr_petersen():
    g, dec = prepared(generate_named("petersen"))
    for u in range(10):
        rep = is_pdr_around(g, dec, u)
        assert rep.is_pdr and rep.via_partition and rep.via_polynomials and rep.extremal
        triples = rep.quotient.tridiagonal()
        assert np.allclose(triples, [(0, 0, 3), (1, 0, 2), (1, 2, 0)], atol=1e-9)


def test_is_pdr_p4_end_vertex():
    g, dec = prepared(generate_named("path", 4))
    rep = is_pdr_around(g, dec, 0)
    assert rep.is_pdr and rep.extremal
    assert rep.eccentricity == 3 and rep.local_degree == 3


def test_is_pdr_p4_inner_vertex():
    g, dec = prepared(generate_named("path", 4))
    rep = is_pdr_around(g, dec, 1)
    assert not rep.is_pdr and not rep.via_partition and not rep.via_polynomials
    assert rep.witness is not None and rep.quotient is None


def test_characterizations_agree_n_up_to_5():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            dec = decompose(g)
            for u in range(g.n):
                rep = is_pdr_around(g, dec, u)  # raises on disagreement
                assert rep.via_partition == rep.via_polynomials
                if rep.is_pdr:
                    assert rep.extremal


def test_sum_rule_at_pdr_vertices():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            dec = decompose(g)
            for u in range(g.n):
                rep = is_pdr_around(g, dec, u)
                if rep.is_pdr:
                    for triple in rep.quotient.tridiagonal():
                        assert abs(sum(triple) - dec.spectral_radius) < 1e-7


# --- walk formulas ---------------------------------------------------------------


def test_walk_formula_k3():
    g, dec = prepared(generate_named("complete", 3))
    res_u, res_v = walk_formula_check(g, dec, 0, 1, 1)
    assert max(res_u, res_v) < 1e-10
    assert adjacency_powers(g, 1)[1][0, 1] == 1


def test_walk_formula_petersen_no_common_neighbors():
    g, dec = prepared(generate_named("petersen"))
    res = walk_formula_check(g, dec, 0, 1, 2)
    assert max(res) < 1e-9
    assert adjacency_powers(g, 2)[2][0, 1] == 0


def test_walk_formula_c4_length3():
    g, dec = prepared(generate_named("cycle", 4))
    res = walk_formula_check(g, dec, 0, 1, 3)
    assert max(res) < 1e-9
    # Exact count: four walks of length three between adjacent vertices.
    assert adjacency_powers(g, 3)[3][0, 1] == 4


def test_walk_formula_requires_adjacency():
    g, dec = prepared(generate_named("cycle", 4))
    with pytest.raises(ValueError):
        walk_formula_check(g, dec, 0, 2, 3)


# --- combinatorial oracle ---------------------------------------------------------


def test_combinatorial_arrays():
    arr = combinatorial_intersection_array(generate_named("petersen"), 0)
    assert (arr.b, arr.c, arr.a) == ((3, 2), (1, 1), (0, 0, 2))

    arr = combinatorial_intersection_array(generate_named("cycle", 6), 0)
    assert (arr.b, arr.c) == ((2, 1, 1), (1, 1, 2))

    arr = combinatorial_intersection_array(generate_named("cycle", 5), 0)
    assert (arr.b, arr.c) == ((2, 1), (1, 1))

    arr = combinatorial_intersection_array(generate_named("complete", 4), 0)
    assert (arr.b, arr.c) == ((3,), (1,))

    assert combinatorial_intersection_array(generate_named("path", 4), 1) is None


# --- walk regularity ----------------------------------------------------------------


def test_walk_regularity_labels():
    g, dec = prepared(generate_named("petersen"))
    assert walk_regularity(g, dec) == WALK_REGULAR
    g, dec = prepared(generate_named("complete_bipartite", 2, 3))
    assert walk_regularity(g, dec) == WALK_BIREGULAR
    g, dec = prepared(generate_named("path", 4))
    assert walk_regularity(g, dec) == WALK_NEITHER


# --- classification -----------------------------------------------------------------


def test_classify_petersen():
    cls = classify(generate_named("petersen"))
    assert cls.verdict == VERDICT_DISTANCE_REGULAR
    (arr,) = cls.intersection_arrays
    assert (arr.b, arr.c) == ((3, 2), (1, 1))
    assert cls.alpha_levels == (pytest.approx(1.0, abs=1e-12),)
    assert cls.walk_regularity == WALK_REGULAR
    assert cls.witness is None


def test_classify_named_regular_family():
    for name, args, b, c in [
        ("cycle", (5,), (2, 1), (1, 1)),
        ("cycle", (6,), (2, 1, 1), (1, 1, 2)),
        ("complete", (4,), (3,), (1,)),
        ("complete", (1,), (), ()),
        ("complete_bipartite", (3, 3), (3, 2), (1, 3)),
    ]:
        cls = classify(generate_named(name, *args))
        assert cls.verdict == VERDICT_DISTANCE_REGULAR
        (arr,) = cls.intersection_arrays
        assert (arr.b, arr.c) == (b, c)


def test_classify_k23():
    cls = classify(generate_named("complete_bipartite", 2, 3))
    assert cls.verdict == VERDICT_DISTANCE_BIREGULAR
    first, second = cls.intersection_arrays
    assert first.part == 0 and (first.b, first.c) == ((3, 1), (1, 3))
    assert second.part == 1 and (second.b, second.c) == ((2, 2), (1, 2))
    assert cls.alpha_levels[0] == pytest.approx(np.sqrt(5 / 4), abs=1e-9)
    assert cls.alpha_levels[1] == pytest.approx(np.sqrt(5 / 6), abs=1e-9)
    assert cls.walk_regularity == WALK_BIREGULAR


def test_classify_star():
    cls = classify(generate_named("complete_bipartite", 1, 3))
    assert cls.verdict == VERDICT_DISTANCE_BIREGULAR
    first, second = cls.intersection_arrays
    assert (first.b, first.c) == ((3,), (1,))
    assert (second.b, second.c) == ((1, 2), (1, 1))
    # Closed forms with degrees (3, 1).
    assert cls.alpha_levels[0] == pytest.approx(np.sqrt(2.0), abs=1e-9)
    assert cls.alpha_levels[1] == pytest.approx(np.sqrt(2.0 / 3.0), abs=1e-9)


def test_classify_p4_negative_control():
    cls = classify(generate_named("path", 4))
    assert cls.verdict == VERDICT_NOT_PDR
    assert cls.witness == 1  # lowest failing vertex is inner
    assert cls.intersection_arrays is None and cls.alpha_levels is None
    assert cls.walk_regularity == WALK_NEITHER


def test_classify_theorem_dichotomy_n_up_to_5():
    # Every all-PDR graph must come out distance-regular or distance-biregular,
    # regular ones regular, non-regular ones bipartite biregular.
    seen = {VERDICT_DISTANCE_REGULAR: 0, VERDICT_DISTANCE_BIREGULAR: 0, VERDICT_NOT_PDR: 0}
    for n in range(1, 6):
        for g in enumerate_connected(n):
            dec = decompose(g)
            reports = [is_pdr_around(g, dec, u) for u in range(g.n)]
            cls = classify(g, dec=dec, reports=reports)
            seen[cls.verdict] += 1
            if all(r.is_pdr for r in reports):
                assert cls.verdict in (VERDICT_DISTANCE_REGULAR, VERDICT_DISTANCE_BIREGULAR)
                degs = g.degrees
                if degs.min() == degs.max():
                    assert cls.verdict == VERDICT_DISTANCE_REGULAR
                else:
                    assert cls.verdict == VERDICT_DISTANCE_BIREGULAR
            else:
                assert cls.verdict == VERDICT_NOT_PDR
                assert not reports[cls.witness].is_pdr
    # Labeled counts on up to five vertices: the distance-regular graphs are
    # K_1, K_2, K_3, the 3 labelings of C_4, K_4, the 12 labelings of C_5,
    # and K_5 (total 20); the distance-biregular ones are the stars on 3..5
    # vertices (3 + 4 + 5 labelings) and the 10 labelings of K_{2,3}.
    assert seen[VERDICT_DISTANCE_REGULAR] == 20
    assert seen[VERDICT_DISTANCE_BIREGULAR] == 22
    assert seen[VERDICT_NOT_PDR] == 730


# --- transform consistency -------------------------------------------------------


def test_transform_petersen_zero_residuals():
    g, dec = prepared(generate_named("petersen"))
    res = perron_transform_consistency(g, dec, 0)
    assert float(res.max()) < 1e-10


def test_transform_c6():
    g, dec = prepared(generate_named("cycle", 6))
    res = perron_transform_consistency(g, dec, 0)
    assert float(res.max()) < 1e-10
    arr = combinatorial_intersection_array(g, 0)
    assert (arr.b, arr.c) == ((2, 1, 1), (1, 1, 2))


def test_transform_k23_degree3_side():
    g, dec = prepared(generate_named("complete_bipartite", 2, 3))
    res = perron_transform_consistency(g, dec, 0)
    assert float(res.max()) < 1e-9


def test_transform_rejects_irregular_vertex():
    g, dec = prepared(generate_named("path", 4))
    with pytest.raises(ValueError):
        perron_transform_consistency(g, dec, 1)


def test_transform_star_leaf():
    # Around a leaf of a star: cells {leaf}, {center}, {other leaves} are
    # constant-Perron and integer-regular, so the transform must line up.
    g = generate_named("complete_bipartite", 1, 3)
    dec = decompose(g)
    res = perron_transform_consistency(g, dec, 1)
    assert float(res.max()) < 1e-9


def test_transform_rejects_nonconstant_cells():
    # No graph this small pairs integer regularity with a mixed-Perron cell,
    # so doctor the decomposition to drive the precondition check.
    g = generate_named("cycle", 4)
    dec = decompose(g)
    skew = dec.perron.copy()
    skew[1] *= 1.5
    doctored = type(dec)(
        eigenvalues=dec.eigenvalues,
        multiplicities=dec.multiplicities,
        idempotents=dec.idempotents,
        perron=skew,
    )
    with pytest.raises(ValueError):
        perron_transform_consistency(g, doctored, 0)


# --- whole-graph suite -----------------------------------------------------------


def test_verify_graph_clean_on_named_set():
    for g in [
        generate_named("petersen"),
        generate_named("path", 4),
        generate_named("complete_bipartite", 2, 3),
        generate_named("cycle", 6),
        generate_named("complete", 1),
    ]:
        result = verify_graph(g)
        assert result.violations == ()


def test_verify_graph_verdicts():
    assert verify_graph(generate_named("petersen")).verdict == VERDICT_DISTANCE_REGULAR
    assert verify_graph(generate_named("path", 4)).verdict == VERDICT_NOT_PDR
    r = verify_graph(generate_named("complete_bipartite", 1, 2))
    assert r.verdict == VERDICT_DISTANCE_BIREGULAR and r.all_pdr
