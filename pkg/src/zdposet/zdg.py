"""Zero-divisor graphs of posets and their structural lemma checks.

The graph of a poset with least element 0 has the nonzero zero-divisors
as vertices, two being adjacent exactly when their lower cone is {0}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBooleanError
from .graphs import Graph
from .poset import Poset


class ZdGraph(Graph):
    """A materialized zero-divisor graph; keeps the source poset around."""

    def __init__(self, owner: Poset, vertices, edges):
        super().__init__(vertices, edges)
        self.owner = owner

    def vertex_names(self) -> tuple[str, ...]:
        return tuple(self.owner.elements[v] for v in self.vertices)


def zero_divisors(P: Poset) -> frozenset[int]:
    """Ids of all a admitting a nonzero b with lower cone {a,b} = {0}."""
    bot = P._require_bottom()
    nonzero = P.full_mask & ~(1 << bot)
    return frozenset(
        a for a in range(len(P)) if P.perp_mask(a) & nonzero
    )


def zero_divisor_graph(P: Poset) -> ZdGraph:
    """Graph on the nonzero zero-divisors; empty when Z(P) = {0}."""
    bot = P._require_bottom()
    verts = sorted(zero_divisors(P) - {bot})
    edges = []
    for i, a in enumerate(verts):
        pa = P.perp_mask(a)
        for b in verts[i + 1 :]:
            if (pa >> b) & 1:
                edges.append((a, b))
    return ZdGraph(P, verts, edges)


def graph_complements(G: Graph, v) -> frozenset:
    """Neighbors w of v such that the edge v-w lies in no triangle."""
    nv = G.neighbors(v)
    return frozenset(w for w in nv if not (nv & G.neighbors(w)))


def ends(G: Graph) -> frozenset:
    """Vertices of degree exactly one."""
    return frozenset(v for v in G.vertices if G.degree(v) == 1)


@dataclass(frozen=True)
class LemmaReport:
    ok: bool
    violations: tuple[str, ...]


def require_boolean(P: Poset) -> None:
    reason = P.boolean_failure
    if reason is not None:
        raise NotBooleanError(f"poset is not Boolean: {reason}")


def check_unique_complementation(P: Poset, G: ZdGraph) -> LemmaReport:
    """Every vertex must have exactly one graph complement, equal to its
    order-theoretic complement."""
    require_boolean(P)
    violations = []
    for v in G.vertices:
        gc = graph_complements(G, v)
        oc = P.complements_of(v)
        assert len(oc) == 1, "Boolean posets are uniquely complemented"
        (c,) = oc
        if gc != {c}:
            got = ",".join(P.names(gc)) or "(none)"
            violations.append(
                f"{P.elements[v]}: graph complements {{{got}}} != "
                f"order complement {P.elements[c]}"
            )
    return LemmaReport(not violations, tuple(violations))


def check_atom_end_lemma(P: Poset, G: ZdGraph) -> LemmaReport:
    """A vertex is an atom iff its complement is the unique end adjacent to it."""
    require_boolean(P)
    atoms = P.atoms()
    end_set = ends(G)
    violations = []
    for b in G.vertices:
        (c,) = P.complements_of(b)
        ends_at_b = end_set & G.neighbors(b)
        if b in atoms:
            if ends_at_b != {c}:
                got = ",".join(P.names(ends_at_b)) or "(none)"
                violations.append(
                    f"atom {P.elements[b]}: adjacent ends {{{got}}} != "
                    f"complement {P.elements[c]}"
                )
        elif c in end_set and G.adjacent(b, c):
            violations.append(
                f"{P.elements[b]} is not an atom but its complement "
                f"{P.elements[c]} is an adjacent end"
            )
    return LemmaReport(not violations, tuple(violations))


def to_dot(G: ZdGraph) -> str:
    """Deterministic DOT text: edges sorted by (min id, max id), one per line."""
    lines = ["graph zdg {"]
    for a, b in G.edges():
        lines.append(f'  "{G.owner.elements[a]}" -- "{G.owner.elements[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
