import glie


def test_witt_ranks():
    assert [glie.witt_rank(2, d) for d in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    assert glie.witt_rank(3, 3) == 8


def test_lyndon_enumeration():
    assert glie.enumerate_lyndon_words(2, 3) == [[0, 0, 1], [0, 1, 1]]
    assert glie.is_lyndon([0, 0, 1])
    assert not glie.is_lyndon([1, 0])
    assert glie.standard_bracketing([0, 0, 1]) == (0, (0, 1))


def test_presentation_registry():
    names = glie.list_presentations()
    assert "kohno" in names and "sphere-reduced" in names


def test_pm04_table_is_free_on_two_generators():
    table = glie.hilbert_table("pm0n-reduced", 4, 5)
    assert [row["rank"] for row in table] == [2, 1, 2, 3, 6]
    assert all(row["torsion"] == [] for row in table)


def test_sphere_degree_one_torsion():
    row = glie.graded_component("sphere-reduced", 4, 1)
    assert row["rank"] == 2
    assert row["torsion"] == [2]


def test_central_sum():
    assert glie.central_sum_check("sphere-reduced", 4)
    assert glie.central_sum_check("sphere-reduced", 5)


def test_braid_checks():
    assert glie.braids_equal(3, [1, 2, 1], [2, 1, 2])
    assert not glie.braids_equal(3, [1], [2])
    assert glie.verify_burau_relations(4)["all_pass"]
    assert glie.delta_squared_check(4)
    assert glie.verify_magnus_equivalence(4)
    assert glie.centrality_check(4)
    sanity = glie.sphere_relator_sanity(4)
    assert sanity["permutation_is_identity"]
    assert sanity["exponent_sum"] == 6


def test_integer_lattice_ops():
    inv = glie.smith_invariants([[2, 2, 2]])
    assert inv["free_rank"] == 2
    assert inv["torsion"] == [2]
    assert glie.hermite_form([[1, 1], [1, -1]]) == [[1, 1], [0, 2]]
