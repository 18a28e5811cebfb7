import random

import pytest

import brute
from zdposet.complexes import FacetComplex, independence_complex
from zdposet.errors import NotAFaceError, SizeLimitExceededError
from zdposet.homology import (
    faces_by_dimension,
    link_of,
    reduced_betti,
    reisner_cm,
)
from zdposet.poset import direct_product, generate
from zdposet.zdg import zero_divisor_graph


def betti_map(C, **kw):
    return {d: b for d, b in reduced_betti(C, **kw).betti.items() if b}


def test_faces_of_two_points():
    C = FacetComplex([("a",), ("b",)])
    by_size = faces_by_dimension(C)
    assert by_size == [[()], [("a",), ("b",)]]


def test_faces_of_two_disjoint_edges():
    C = FacetComplex([(1, 3), (2, 4)])
    by_size = faces_by_dimension(C)
    assert [len(b) for b in by_size] == [1, 4, 2]


def test_figure1_f_vector_from_closure(figure1):
    # frozen from the brute-force closure of the five facets; the reduced
    # Euler characteristic -1+8-18+16-5 vanishes
    C = independence_complex(zero_divisor_graph(figure1))
    expected = brute.f_vector(C.facets)
    assert expected == (1, 8, 18, 16, 5)
    got = [len(b) for b in faces_by_dimension(C)]
    assert tuple(got) == expected
    # cross-check f_1 against the edge count: C(8,2) - 10 edges
    assert got[2] == 8 * 7 // 2 - 10


def test_betti_two_disjoint_points():
    assert betti_map(FacetComplex([("a",), ("b",)])) == {0: 1}


def test_betti_hollow_triangle():
    assert betti_map(FacetComplex([(1, 2), (2, 3), (1, 3)])) == {1: 1}


def test_betti_two_disjoint_edges():
    assert betti_map(FacetComplex([(1, 3), (2, 4)])) == {0: 1}


def test_betti_sphere_and_point():
    octa = FacetComplex(
        [
            (1, 2, 5), (2, 3, 5), (3, 4, 5), (1, 4, 5),
            (1, 2, 6), (2, 3, 6), (3, 4, 6), (1, 4, 6),
        ]
    )
    assert betti_map(octa) == {2: 1}
    assert betti_map(FacetComplex([(1,)])) == {}
    assert betti_map(FacetComplex([()])) == {-1: 1}


def test_figure1_complex_is_acyclic(figure1):
    # the complex passes the link criterion, so homology vanishes below the
    # top dimension, and the zero Euler characteristic kills the top too
    C = independence_complex(zero_divisor_graph(figure1))
    assert betti_map(C) == {}


def test_link_identity_and_facet(figure1):
    C = independence_complex(zero_divisor_graph(figure1))
    assert link_of(C, ()).facets == C.facets
    assert link_of(C, C.facets[0]).facets == ((),)


def test_link_of_vertex(figure1):
    P = figure1
    C = independence_complex(zero_divisor_graph(P))
    L = link_of(C, (P.id_of("q1'"),))
    expected_facets = {
        frozenset(g)
        for g in brute.link_faces(C.facets, (P.id_of("q1'"),))
        if len(g) == 3
    }
    assert {frozenset(f) for f in L.facets} == expected_facets
    assert L.dimension == 2


def test_link_rejects_non_face(figure1):
    P = figure1
    C = independence_complex(zero_divisor_graph(P))
    with pytest.raises(NotAFaceError):
        link_of(C, (P.id_of("q1"), P.id_of("q1'")))


def test_reisner_verdicts(figure1):
    C = independence_complex(zero_divisor_graph(figure1))
    assert reisner_cm(C) == (True, None)
    four_cycle = FacetComplex([(1, 3), (2, 4)])
    assert reisner_cm(four_cycle) == (False, ((), 0))
    K3 = independence_complex(zero_divisor_graph(generate("m_atoms", 3)))
    assert reisner_cm(K3) == (True, None)


def test_reisner_on_nonpure_product_complex():
    pp = direct_product([generate("chain", 3)] * 3)
    C = independence_complex(zero_divisor_graph(pp.carrier))
    ok, witness = reisner_cm(C)
    assert not ok
    face, dim = witness
    assert dim < link_of(C, face).dimension


def test_betti_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 8)
        verts = list(range(n))
        edges = [
            (a, b) for a in verts for b in verts if a < b and rng.random() < 0.5
        ]
        from zdposet.graphs import Graph

        C = independence_complex(Graph(verts, edges))
        perm = verts[:]
        rng.shuffle(perm)
        relabeled = FacetComplex(
            [tuple(perm[v] for v in f) for f in C.facets]
        )
        assert reduced_betti(C).betti == reduced_betti(relabeled).betti


def test_rank_matches_under_reversed_elimination(figure1):
    complexes = [
        independence_complex(zero_divisor_graph(figure1)),
        FacetComplex([(1, 2), (2, 3), (1, 3)]),
        FacetComplex([(1, 3), (2, 4)]),
        independence_complex(
            zero_divisor_graph(generate("boolean_lattice", 3))
        ),
    ]
    for C in complexes:
        assert (
            reduced_betti(C, elimination_order="forward").betti
            == reduced_betti(C, elimination_order="reverse").betti
        )


def test_reisner_pass_implies_pure():
    from zdposet.complexes import is_well_covered
    from zdposet.graphs import Graph

    rng = random.Random(23)
    complexes = [
        independence_complex(zero_divisor_graph(generate("boolean_lattice", 3))),
        independence_complex(zero_divisor_graph(generate("m_atoms", 4))),
        FacetComplex([(1, 2), (2, 3)]),
        FacetComplex([(1,), (2, 3)]),
    ]
    for _ in range(30):
        n = rng.randint(1, 8)
        edges = [
            (a, b) for a in range(n) for b in range(n) if a < b and rng.random() < 0.5
        ]
        complexes.append(independence_complex(Graph(range(n), edges)))
    for C in complexes:
        ok, _ = reisner_cm(C)
        if ok:
            assert is_well_covered(C)


def test_reisner_report_summary_and_table():
    from zdposet.homology import reisner_report

    C = FacetComplex([(1, 3), (2, 4)])
    assert reisner_report(C) == "CM: no\n"
    table = reisner_report(C, verbose=True)
    lines = table.splitlines()
    assert lines[0] == "face\tlink-dim\tbetti"
    assert lines[1] == "{}\t1\t0,1,0"  # the whole complex is disconnected
    assert lines[-1] == "CM: no"
    assert len(lines) == 2 + 7  # header, 7 faces, summary
    simplex = FacetComplex([(1, 2)])
    assert reisner_report(simplex) == "CM: yes\n"


def test_homology_size_cap():
    from zdposet.graphs import Graph

    verts = list(range(21))
    complete = [(a, b) for a in verts for b in verts if a < b]
    C = independence_complex(Graph(verts, complete))
    with pytest.raises(SizeLimitExceededError):
        reduced_betti(C)
    with pytest.raises(SizeLimitExceededError):
        reisner_cm(C)
    assert reduced_betti(C, max_vertices=21).betti[0] == 20
