"""Independence complexes: facet enumeration, coveredness, edge ideals.

Facets (maximal independent sets) are enumerated with Bron-Kerbosch on
the complement graph, over vertex-index bitmasks.  Facet lists are
canonical: each facet is a sorted vertex tuple and the list is sorted
lexicographically, so all downstream output is reproducible bit for bit.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    EmptyComplexError,
    NotBooleanError,
    NotIndependentError,
    NoVariablesError,
    SizeLimitExceededError,
    UnknownVertexError,
)
from .graphs import Graph, Vertex, vertex_label
from .poset import Poset, bits

DEFAULT_MAX_VERTICES = 40


class FacetComplex:
    """A finite simplicial complex presented by its facet list.

    The constructor deduplicates, drops non-maximal sets and sorts, so two
    complexes with the same faces compare equal facet-wise.
    """

    def __init__(self, facets: Iterable[Sequence[Vertex]]):
        distinct = {tuple(sorted(f)) for f in facets}
        maximal = [
            f
            for f in distinct
            if not any(f is not g and set(f) <= set(g) for g in distinct)
        ]
        self.facets: tuple[tuple[Vertex, ...], ...] = tuple(sorted(maximal))

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        seen = set()
        for f in self.facets:
            seen.update(f)
        return tuple(sorted(seen))

    @property
    def dimension(self) -> int:
        if not self.facets:
            raise EmptyComplexError("complex has no facets")
        return max(len(f) for f in self.facets) - 1

    def has_face(self, face: Iterable[Vertex]) -> bool:
        fs = set(face)
        return any(fs <= set(f) for f in self.facets)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FacetComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.facets)} facets)"


class IndependenceComplex(FacetComplex):
    def __init__(self, graph: Graph, facets: Iterable[Sequence[Vertex]]):
        super().__init__(facets)
        self.graph = graph


def _maximal_independent_masks(nbr: list[int], n: int) -> list[int]:
    # Bron-Kerbosch with pivoting on the complement graph: maximal cliques
    # there are exactly the maximal independent sets here.
    full = (1 << n) - 1
    comp = [~nbr[i] & full & ~(1 << i) for i in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (p & comp[u]).bit_count())
        for v in bits(p & ~comp[pivot]):
            vbit = 1 << v
            expand(r | vbit, p & comp[v], x & comp[v])
            p &= ~vbit
            x |= vbit

    expand(0, full, 0)
    return out


def independence_complex(
    G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> IndependenceComplex:
    """Enumerate all maximal independent sets of G exhaustively."""
    verts = G.vertices
    n = len(verts)
    if n > max_vertices:
        raise SizeLimitExceededError(
            f"{n} vertices exceed the facet-enumeration cap {max_vertices}"
        )
    pos = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for i, v in enumerate(verts):
        for w in G.neighbors(v):
            nbr[i] |= 1 << pos[w]
    masks = _maximal_independent_masks(nbr, n)
    facets = [tuple(verts[i] for i in bits(m)) for m in masks]
    return IndependenceComplex(G, facets)


def is_well_covered(C: FacetComplex) -> bool:
    """True when every facet has the same cardinality."""
    if not C.facets:
        raise EmptyComplexError("complex has no facets")
    return len({len(f) for f in C.facets}) == 1


def is_very_well_covered(C: IndependenceComplex) -> bool:
    """Well-covered, no isolated vertices, and |V| twice the facet size."""
    if not is_well_covered(C):
        return False
    if C.graph.has_isolated_vertex():
        return False
    return len(C.graph.vertices) == 2 * len(C.facets[0])


def extend_independent(
    P: Poset, G: Graph, seed: Iterable[int]
) -> tuple[int, ...]:
    """Grow an independent set of a Boolean poset's graph to half the vertices.

    Scans complementary pairs untouched by the current set in ascending id
    order; from each pair it adds the member that keeps the set independent,
    preferring the heavier element (then the smaller id) when both work.
    The result is always a facet of size |V|/2.
    """
    if not P.is_boolean():
        raise NotBooleanError(f"poset is not Boolean: {P.boolean_failure}")
    vertex_set = set(G.vertices)
    current = set()
    for v in seed:
        if v not in vertex_set:
            raise UnknownVertexError(f"seed element {v!r} is not a vertex")
        current.add(v)
    for v in current:
        hit = G.neighbors(v) & current
        if hit:
            w = min(hit)
            raise NotIndependentError(
                f"seed contains the adjacent pair "
                f"({P.elements[v]}, {P.elements[w]})"
            )

    pairs = sorted(
        {tuple(sorted((v, min(P.complements_of(v))))) for v in G.vertices}
    )
    for a, b in pairs:
        if a in current or b in current:
            continue
        can_a = not (G.neighbors(a) & current)
        can_b = not (G.neighbors(b) & current)
        if can_a and can_b:
            wa, wb = P.weight(a), P.weight(b)
            pick = a if (wa, -a) >= (wb, -b) else b
        elif can_a:
            pick = a
        elif can_b:
            pick = b
        else:
            raise AssertionError(
                "no member of an untouched complementary pair extends the set; "
                "impossible for a Boolean poset"
            )
        current.add(pick)
    return tuple(sorted(current))


def export_edge_ideal(G: Graph, dialect: str) -> str:
    """Emit the squarefree quadratic generators of the edge ideal.

    One variable per vertex in ascending id order; generators sorted by
    (min index, max index); a name map rides along as comments.
    """
    if dialect not in ("m2", "singular"):
        raise ValueError(f"unknown dialect {dialect!r} (use 'm2' or 'singular')")
    verts = G.vertices
    m = len(verts)
    if m == 0:
        raise NoVariablesError("graph has no vertices: nothing to export")
    pos = {v: i for i, v in enumerate(verts)}
    gens = [f"v{pos[a]}*v{pos[b]}" for a, b in G.edges()]
    comment = "--" if dialect == "m2" else "//"
    lines = [f"{comment} v{i} = {vertex_label(G, v)}" for i, v in enumerate(verts)]
    if dialect == "m2":
        lines.append(f"R = QQ[v0..v{m - 1}];")
        body = ", ".join(gens) if gens else "0_R"
        lines.append(f"I = monomialIdeal({body});")
    else:
        lines.append(f"ring R = 0, (v0..v{m - 1}), dp;")
        body = ", ".join(gens) if gens else "0"
        lines.append(f"ideal I = {body};")
    return "\n".join(lines) + "\n"
