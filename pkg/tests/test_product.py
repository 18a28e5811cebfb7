import itertools
import math

import pytest

from zdposet.errors import (
    BadParamError,
    FactorHasZeroDivisorsError,
    IndexOutOfRangeError,
    IndicesNotOrderedError,
    NeedEqualSizesForTripleError,
    NotAscendingError,
    TooFewFactorsError,
    WrongArityError,
)
from zdposet.poset import generate, parse_poset
from zdposet.product import (
    bipartite_case,
    equivalence_suite,
    is_boolean_lattice,
    j_single,
    j_triple,
    parse_size_vectors,
    predicted_counts,
    predicted_triple_size,
    sweep_report,
    validate_factors,
    well_covered_verdict,
)


def chains(*sizes):
    return [generate("chain", s) for s in sizes]


def coords_of(A, members):
    return {A.product.coord_of[v] for v in members}


def names_of_coords(A, members, pos=0):
    return coords_of(A, members)


def test_validate_three_two_chains():
    A = validate_factors(chains(2, 2, 2))
    assert A.factor_sizes == (2, 2, 2)
    assert len(A.dense) == 1
    (d,) = A.dense
    assert A.product.coord_of[d] == (1, 1, 1)


def test_validate_three_three_chains():
    A = validate_factors(chains(3, 3, 3))
    assert len(A.dense) == 8


def test_validate_rejects_multi_atom_factor():
    with pytest.raises(FactorHasZeroDivisorsError):
        validate_factors([generate("m_atoms", 2), generate("chain", 4)])


def test_validate_rejects_unordered_sizes():
    with pytest.raises(NotAscendingError):
        validate_factors(chains(3, 2, 2))


def test_validate_rejects_single_factor():
    with pytest.raises(TooFewFactorsError):
        validate_factors(chains(3))


def test_validate_accepts_non_chain_unique_atom_factor():
    # 0 < a < {b, c} < 1: bounded, one atom, Z = {0}
    text = (
        "poset v1\nelem 0\nelem a\nelem b\nelem c\nelem 1\n"
        "le 0 a\nle a b\nle a c\nle b 1\nle c 1\n"
    )
    P = parse_poset(text)
    A = validate_factors([generate("chain", 2), P])
    assert A.factor_sizes == (2, 5)
    assert len(A.dense) == 4


def test_j_single_two_chains():
    A = validate_factors(chains(2, 2, 2))
    J = j_single(A, 1)
    assert coords_of(A, J) == {(1, 0, 0), (1, 1, 0), (1, 0, 1)}


def test_j_single_three_chains():
    A = validate_factors(chains(3, 3, 3))
    assert len(j_single(A, 1)) == 10  # 18 above the atom, minus 8 dense


def test_j_single_index_guard():
    A = validate_factors(chains(2, 2, 2))
    with pytest.raises(IndexOutOfRangeError):
        j_single(A, 4)
    with pytest.raises(IndexOutOfRangeError):
        j_single(A, 0)


def test_j_triple_two_chains():
    A = validate_factors(chains(2, 2, 2))
    J = j_triple(A, 1, 2, 3)
    assert coords_of(A, J) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}


def test_j_triple_three_chains():
    A = validate_factors(chains(3, 3, 3))
    assert len(j_triple(A, 1, 2, 3)) == 12


def test_j_triple_index_guard():
    A = validate_factors(chains(2, 2, 2))
    with pytest.raises(IndicesNotOrderedError):
        j_triple(A, 1, 1, 2)
    with pytest.raises(IndicesNotOrderedError):
        j_triple(A, 2, 1, 3)


def test_predicted_counts_match_spoken_values():
    assert predicted_counts([3, 3, 3]) .j_single_sizes == (10, 10, 10)
    assert predicted_counts([3, 3, 3]).j_triple_size == 12
    assert predicted_counts([2, 2, 2]).j_single_sizes == (3, 3, 3)
    assert predicted_counts([2, 2, 2]).j_triple_size == 3
    assert predicted_counts([2, 2, 2, 2]).j_single_sizes == (7, 7, 7, 7)
    assert predicted_counts([2, 2, 2, 2]).j_triple_size == 7
    assert predicted_counts([2, 2, 3]).j_single_sizes == (4, 4, 6)
    assert predicted_counts([2, 2, 3]).j_triple_size is None
    with pytest.raises(NeedEqualSizesForTripleError):
        predicted_triple_size([2, 2, 3])
    with pytest.raises(TooFewFactorsError):
        predicted_counts([2, 3])


@pytest.mark.parametrize(
    "sizes",
    [s for s in itertools.combinations_with_replacement(range(2, 5), 3)]
    + [s for s in itertools.combinations_with_replacement(range(2, 4), 4)],
)
def test_enumerated_counts_match_formulas(sizes):
    A = validate_factors(chains(*sizes))
    counts = predicted_counts(sizes)
    for i in range(1, len(sizes) + 1):
        assert len(j_single(A, i)) == counts.j_single_sizes[i - 1]
    if counts.j_triple_size is not None:
        assert len(j_triple(A, 1, 2, 3)) == counts.j_triple_size
    assert len(A.dense) == math.prod(s - 1 for s in sizes)


@pytest.mark.parametrize(
    "sizes",
    list(itertools.combinations_with_replacement(range(2, 5), 3))
    + [(2, 2, 2, 2), (2, 2, 2, 3), (2, 2, 3, 3), (2, 2, 2, 2, 2)],
)
def test_formula_verdict_matches_enumeration_within_caps(sizes):
    from zdposet.complexes import independence_complex, is_well_covered

    A = validate_factors(chains(*sizes))
    formula, _ = well_covered_verdict(A)
    enumerated = is_well_covered(independence_complex(A.graph))
    assert formula == enumerated


def test_well_covered_verdicts():
    assert well_covered_verdict(validate_factors(chains(2, 2, 2)))[0] is True
    ok, why = well_covered_verdict(validate_factors(chains(3, 3, 3)))
    assert not ok and why == "|J_1| = 10 != 12 = |J_1,2,3|"
    ok, why = well_covered_verdict(validate_factors(chains(2, 2, 3)))
    assert not ok and why == "|J_1| = 4 != 6 = |J_3|"
    with pytest.raises(TooFewFactorsError):
        well_covered_verdict(validate_factors(chains(2, 2)))


def test_equivalence_suite_all_true():
    r = equivalence_suite(validate_factors(chains(2, 2, 2)))
    assert r.value is True
    assert dict(r.statements) == {
        "cohen-macaulay": True,
        "well-covered": True,
        "all-factors-2-chains": True,
        "boolean-lattice": True,
        "boolean-poset": True,
    }


def test_equivalence_suite_all_false():
    r = equivalence_suite(validate_factors(chains(3, 3, 3)))
    assert r.value is False
    assert all(v is False for _, v in r.statements)


def test_equivalence_suite_four_factors():
    r = equivalence_suite(validate_factors(chains(2, 2, 2, 2)))
    assert r.value is True


def test_is_boolean_lattice_distinguishes_posets(figure1):
    # figure1 is a Boolean poset but not a lattice: two atoms have no join
    assert figure1.is_boolean()
    assert not is_boolean_lattice(figure1)
    assert is_boolean_lattice(generate("boolean_lattice", 3))


def test_bipartite_two_two():
    r = bipartite_case(validate_factors(chains(2, 2)))
    assert r.part_sizes == (1, 1)
    assert r.complete_bipartite and r.well_covered
    assert r.cm_status == "CM"


def test_bipartite_three_three():
    r = bipartite_case(validate_factors(chains(3, 3)))
    assert r.part_sizes == (2, 2)
    assert r.complete_bipartite
    assert r.well_covered  # K_{2,2} is well-covered but not CM
    assert r.cm_status == "NotCM"
    assert "K_{2,2}" in r.note


def test_bipartite_mixed():
    r = bipartite_case(validate_factors(chains(2, 3)))
    assert r.part_sizes == (1, 2)
    assert not r.well_covered
    assert r.cm_status == "NotCM"


def test_bipartite_guard():
    with pytest.raises(WrongArityError):
        bipartite_case(validate_factors(chains(2, 2, 2)))


def test_parse_size_vectors():
    assert parse_size_vectors("2,2,2\n\n# c\n3,3\n") == [(2, 2, 2), (3, 3)]
    with pytest.raises(BadParamError) as err:
        parse_size_vectors("2,2\nnope\n")
    assert "line 2" in str(err.value)
    with pytest.raises(BadParamError):
        parse_size_vectors("2\n")
    with pytest.raises(BadParamError):
        parse_size_vectors("2,1\n")


def test_sweep_report_golden():
    got = sweep_report([(2, 2, 2), (3, 3, 3), (2, 3)])
    assert got == (
        "sizes\t|D|\t|J_1|\t|J_1,2,3|\twell-covered\tCM\tboolean-lattice\n"
        "2,2,2\t1\t3\t3\tyes\tyes\tyes\n"
        "3,3,3\t8\t10\t12\tno\tno\tno\n"
        "2,3\t2\t1\t-\tno\tno\tno\n"
    )


def test_sweep_report_parallel_matches_serial():
    vectors = [(2, 2, 2), (2, 2), (3, 3), (2, 2, 3)]
    assert sweep_report(vectors, workers=2) == sweep_report(vectors)


def test_sweep_above_cap_flags_formula_verdict():
    row = sweep_report([(3, 3, 3)], max_vertices=10).splitlines()[1]
    assert "no [unverified-by-enumeration]" in row
