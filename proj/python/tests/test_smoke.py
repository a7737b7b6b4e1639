import json

import pyspecht


def test_partition_basics():
    assert pyspecht.conjugate([4, 2, 2, 2]) == [4, 4, 1, 1]
    assert pyspecht.regularise([4, 2, 2, 2]) == [5, 3, 2]
    assert pyspecht.dominates([3, 1], [2, 2])
    assert not pyspecht.is_regular([2, 2])
    assert not pyspecht.is_restricted([2, 2])
    assert pyspecht.is_alternating([2, 1])
    assert pyspecht.first_disconnected_ladder([4, 2, 2, 2]) == 4
    assert pyspecht.first_disconnected_ladder([2, 2]) is None
    assert pyspecht.add_residue([5, 3, 3, 2], 1) == [6, 3, 3, 3]


def test_blocks_and_lr():
    core, weight = pyspecht.core_and_weight([6, 6, 5, 2, 1])
    assert core == [3, 2, 1] and weight == 7
    h, v = pyspecht.two_quotient([13, 8, 7, 4, 3, 2, 1, 1, 1, 1, 1])
    assert h == [3, 1, 1] and v == [2]
    assert pyspecht.from_quotient([3, 2, 1], [1], []) == [5, 2, 1]
    assert pyspecht.lr_coefficient([2, 1], [1], [1, 1]) == 1
    assert sorted(pyspecht.lr_support([1], [1])) == [[1, 1], [2]]


def test_fock():
    image = dict()
    for parts, poly in pyspecht.apply_word([7, 6, 3, 2, 1], [(1, 4), (0, 3), (1, 2)]):
        image[tuple(parts)] = poly
    assert image[(7, 7, 5, 5, 4)] == {6: 1}
    assert pyspecht.ladder_fill_degree([7, 6, 3, 2, 1], [7, 7, 5, 5, 4], 1) == 6
    assert pyspecht.v_decomposition_number([1, 1], [2]) == {1: 1}
    assert pyspecht.composition_length([4, 2, 2, 2]) >= 2
    matrix = pyspecht.decomposition_matrix(2)
    assert matrix["columns"] == ["2"]
    assert matrix["entries"][1] == {"row": "1,1", "col": "2", "poly": {"1": 1}}


def test_classification_and_witness():
    assert pyspecht.classify([2, 2]) == "irreducible"
    assert pyspecht.classify([4, 4, 2, 2]) == "reducible"
    assert pyspecht.oracle_classify([2, 1]) == "irreducible"
    assert pyspecht.oracle_classify([4, 2, 2, 2]) == "reducible"

    witness = json.loads(pyspecht.witness_json([4, 4, 2, 2]))
    assert witness["verified"] is True
    assert witness["terminal"]["type"] == "perm_hom"
    assert witness["terminal"]["mu"] == "6,6"

    witness = json.loads(pyspecht.witness_json([5, 3, 3, 2]))
    assert witness["terminal"]["type"] == "carter_payne"
    assert witness["terminal"]["mu"] == "8,4,3,2,1"


def test_small_sweep():
    ok, checked, counterexamples = pyspecht.verify_suite("witness", 10, jobs=2)
    assert ok and checked > 0 and counterexamples == []
