"""Zero-divisor graphs of products of unique-atom bounded posets.

For factors with no nonzero zero-divisors the product graph carries the
canonical maximal independent sets J_i (everything above the i-th atom,
dense elements removed) and J_{i,j,k} (above at least two of three
atoms).  Their sizes obey closed counting formulas, and comparing them
decides well-coveredness without any facet enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .cmcert import is_cohen_macaulay
from .complexes import (
    DEFAULT_MAX_VERTICES,
    independence_complex,
    is_well_covered,
)
from .errors import (
    BadParamError,
    FactorHasZeroDivisorsError,
    IndexOutOfRangeError,
    IndicesNotOrderedError,
    NeedEqualSizesForTripleError,
    NotAscendingError,
    TheoremContractError,
    TooFewFactorsError,
    WrongArityError,
)
from .homology import DEFAULT_MAX_HOMOLOGY_VERTICES
from .poset import Poset, ProductPoset, bits, direct_product, generate
from .zdg import ZdGraph, zero_divisor_graph, zero_divisors


class ProductAnalysis:
    """A validated product of unique-atom factors plus its dense elements."""

    def __init__(self, product: ProductPoset):
        self.product = product
        self.factor_sizes: tuple[int, ...] = tuple(
            len(f) for f in product.factors
        )
        carrier = product.carrier
        bottoms = tuple(f.bottom for f in product.factors)
        dense = frozenset(
            i
            for i, co in enumerate(product.coord_of)
            if all(c != b for c, b in zip(co, bottoms))
        )
        # dense elements are exactly the non-zero-divisors
        z = zero_divisors(carrier)
        assert dense == frozenset(range(len(carrier))) - z, (
            "dense set must equal the complement of Z(P)"
        )
        assert len(dense) == math.prod(s - 1 for s in self.factor_sizes), (
            "|D| must be the product of (|P_i| - 1)"
        )
        self.dense = dense
        self._atom_ids = tuple(
            self._atom_vertex(pos) for pos in range(len(product.factors))
        )

    def _atom_vertex(self, pos: int) -> int:
        factors = self.product.factors
        (q,) = factors[pos].atoms()
        co = tuple(
            q if m == pos else f.bottom for m, f in enumerate(factors)
        )
        return self.product.id_of_coords(co)

    @property
    def n(self) -> int:
        return len(self.factor_sizes)

    @property
    def carrier(self) -> Poset:
        return self.product.carrier

    @cached_property
    def graph(self) -> ZdGraph:
        return zero_divisor_graph(self.carrier)


def validate_factors(factors: Sequence[Poset]) -> ProductAnalysis:
    """Check the factor hypotheses (bounded, ascending, Z = {0}) and build."""
    if len(factors) < 2:
        raise TooFewFactorsError("need at least two factors")
    sizes = [len(f) for f in factors]
    if sizes != sorted(sizes):
        raise NotAscendingError(f"factor sizes {sizes} are not ascending")
    for pos, f in enumerate(factors, 1):
        expected = {f.bottom} if f.bottom is not None else set()
        if zero_divisors(f) != expected or len(f) < 2:
            raise FactorHasZeroDivisorsError(
                f"factor {pos} must satisfy Z(P) = {{0}} "
                "(equivalently: at least two elements and a unique atom)"
            )
    return ProductAnalysis(direct_product(factors))


def _assert_maximal_independent(G: ZdGraph, members: frozenset[int]) -> None:
    for v in sorted(members):
        hit = G.neighbors(v) & members
        assert not hit, (
            f"set is not independent: {G.owner.elements[v]} is adjacent to "
            f"{G.owner.elements[min(hit)]}"
        )
    for v in G.vertices:
        if v not in members:
            assert G.neighbors(v) & members, (
                f"set is not maximal: {G.owner.elements[v]} could be added"
            )


def j_single(A: ProductAnalysis, i: int) -> frozenset[int]:
    """The maximal independent set above the i-th atom (1-based), minus D."""
    if not 1 <= i <= A.n:
        raise IndexOutOfRangeError(f"factor index {i} not in 1..{A.n}")
    q = A._atom_ids[i - 1]
    members = frozenset(bits(A.carrier.up[q])) - A.dense
    _assert_maximal_independent(A.graph, members)
    return members


def j_triple(A: ProductAnalysis, i: int, j: int, k: int) -> frozenset[int]:
    """Union of the three pairwise atom upper cones, minus D (1-based)."""
    if not (1 <= i < j < k <= A.n):
        raise IndicesNotOrderedError(
            f"indices ({i},{j},{k}) must satisfy 1 <= i < j < k <= {A.n}"
        )
    carrier = A.carrier
    qi, qj, qk = (A._atom_ids[m - 1] for m in (i, j, k))
    mask = (
        (carrier.up[qi] & carrier.up[qj])
        | (carrier.up[qj] & carrier.up[qk])
        | (carrier.up[qi] & carrier.up[qk])
    )
    members = frozenset(bits(mask)) - A.dense
    _assert_maximal_independent(A.graph, members)
    return members


@dataclass(frozen=True)
class PredictedCounts:
    j_single_sizes: tuple[int, ...]
    j_triple_size: int | None


def predicted_triple_size(sizes: Sequence[int]) -> int:
    """Closed inclusion-exclusion count of |J_{i,j,k}| for equal sizes."""
    n = len(sizes)
    if n < 3:
        raise TooFewFactorsError("the triple formula needs n >= 3")
    if len(set(sizes)) != 1:
        raise NeedEqualSizesForTripleError(
            f"the closed triple formula needs equal sizes, got {tuple(sizes)}"
        )
    a = sizes[0]
    return 3 * ((a - 1) ** 2 * a ** (n - 2) - (a - 1) ** n) - 2 * (
        (a - 1) ** 3 * a ** (n - 3) - (a - 1) ** n
    )


def predicted_counts(sizes: Sequence[int]) -> PredictedCounts:
    """Formula sizes of the J-sets; the triple form needs equal sizes."""
    n = len(sizes)
    if n < 3:
        raise TooFewFactorsError("counting formulas apply for n >= 3")
    dense = math.prod(s - 1 for s in sizes)
    singles = tuple(
        (math.prod(sizes) // sizes[i]) * (sizes[i] - 1) - dense
        for i in range(n)
    )
    triple = predicted_triple_size(sizes) if len(set(sizes)) == 1 else None
    return PredictedCounts(singles, triple)


def well_covered_verdict(A: ProductAnalysis) -> tuple[bool, str]:
    """Theorem-level verdict: well-covered iff every factor is a 2-chain.

    The explanation cites actually enumerated J-set sizes, not formulas.
    """
    if A.n < 3:
        raise TooFewFactorsError("the product verdict applies for n >= 3")
    singles = [len(j_single(A, i)) for i in range(1, A.n + 1)]
    for i in range(A.n):
        for j in range(i + 1, A.n):
            if singles[i] != singles[j]:
                return False, (
                    f"|J_{i + 1}| = {singles[i]} != {singles[j]} = |J_{j + 1}|"
                )
    if all(s == 2 for s in A.factor_sizes):
        return True, "every factor is a 2-chain; all J-sets share one size"
    triple = len(j_triple(A, 1, 2, 3))
    return False, f"|J_1| = {singles[0]} != {triple} = |J_1,2,3|"


def _has_all_joins(P: Poset) -> bool:
    n = len(P)
    for a in range(n):
        for b in range(a, n):
            u = P.up[a] & P.up[b]
            if not any(u & ~P.up[m] == 0 for m in bits(u)):
                return False
    return True


def is_boolean_lattice(P: Poset) -> bool:
    """Boolean poset + pairwise joins + order-isomorphic to a power set."""
    if not P.is_boolean():
        return False
    if not _has_all_joins(P):
        return False
    k = len(P.atoms())
    if len(P) != 2**k:
        return False
    supports = [P.atoms_mask & P.down[x] for x in range(len(P))]
    if len(set(supports)) != len(P):
        return False
    for a in range(len(P)):
        for b in range(len(P)):
            if P.leq(a, b) != (supports[a] & ~supports[b] == 0):
                return False
    return True


@dataclass(frozen=True)
class EquivalenceReport:
    statements: tuple[tuple[str, bool], ...]
    value: bool


def equivalence_suite(
    A: ProductAnalysis,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
) -> EquivalenceReport:
    """Evaluate the five equivalent statements and insist they agree."""
    if A.n < 3:
        raise TooFewFactorsError("the equivalence applies for n >= 3")
    verdict = is_cohen_macaulay(
        A.carrier,
        max_vertices=max_vertices,
        max_homology_vertices=max_homology_vertices,
    )
    if verdict.status == "Inconclusive":
        raise TheoremContractError(
            f"CM verdict inconclusive under the configured caps: {verdict.detail}"
        )
    wc = is_well_covered(independence_complex(A.graph, max_vertices))
    statements = (
        ("cohen-macaulay", verdict.status == "CM"),
        ("well-covered", wc),
        ("all-factors-2-chains", all(s == 2 for s in A.factor_sizes)),
        ("boolean-lattice", is_boolean_lattice(A.carrier)),
        ("boolean-poset", A.carrier.is_boolean()),
    )
    values = {v for _, v in statements}
    if len(values) != 1:
        detail = ", ".join(f"{name}={v}" for name, v in statements)
        raise TheoremContractError(
            f"the five equivalent statements disagree: {detail}"
        )
    return EquivalenceReport(statements, statements[0][1])


@dataclass(frozen=True)
class BipartiteReport:
    part_sizes: tuple[int, int]
    complete_bipartite: bool
    well_covered: bool
    cm_status: str
    note: str


def bipartite_case(A: ProductAnalysis) -> BipartiteReport:
    """The two-factor case: the graph is complete bipartite on the axes."""
    if A.n != 2:
        raise WrongArityError(f"bipartite analysis needs exactly 2 factors, got {A.n}")
    f1, f2 = A.product.factors
    part1, part2 = [], []
    for v in A.graph.vertices:
        c1, c2 = A.product.coord_of[v]
        if c1 != f1.bottom and c2 == f2.bottom:
            part1.append(v)
        elif c1 == f1.bottom and c2 != f2.bottom:
            part2.append(v)
    complete = len(part1) + len(part2) == len(A.graph.vertices)
    if complete:
        for a in part1:
            if A.graph.neighbors(a) != frozenset(part2):
                complete = False
                break
    sizes = (len(part1), len(part2))
    assert sizes == (len(f1) - 1, len(f2) - 1)
    wc = is_well_covered(independence_complex(A.graph))
    status = is_cohen_macaulay(A.carrier).status
    note = (
        f"parts have sizes |P_1|-1 = {sizes[0]} and |P_2|-1 = {sizes[1]}; "
        f"the graph is K_{{{sizes[0]},{sizes[1]}}}"
    )
    return BipartiteReport(sizes, complete, wc, status, note)


# -- sweep harness -------------------------------------------------------------


def parse_size_vectors(text: str) -> list[tuple[int, ...]]:
    """One comma-separated factor-size vector per line; # comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            sizes = tuple(int(tok) for tok in line.split(","))
        except ValueError:
            raise BadParamError(
                f"line {lineno}: expected comma-separated integers, got {line!r}"
            ) from None
        if len(sizes) < 2:
            raise BadParamError(
                f"line {lineno}: a factor vector needs at least 2 entries"
            )
        if any(s < 2 for s in sizes):
            raise BadParamError(
                f"line {lineno}: factor sizes must be at least 2"
            )
        out.append(sizes)
    return out


SWEEP_HEADER = "sizes\t|D|\t|J_1|\t|J_1,2,3|\twell-covered\tCM\tboolean-lattice"

_YES_NO = {True: "yes", False: "no"}
_STATUS_CELL = {"CM": "yes", "NotCM": "no", "Inconclusive": "inconclusive"}


def sweep_row(
    sizes: Sequence[int],
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
) -> str:
    """One TSV row for the chain product with the given factor sizes."""
    A = validate_factors([generate("chain", s) for s in sizes])
    dense = len(A.dense)
    j1 = len(j_single(A, 1))
    lattice_cell = _YES_NO[is_boolean_lattice(A.carrier)]
    if A.n == 2:
        report = bipartite_case(A)
        cells = [
            ",".join(str(s) for s in sizes),
            str(dense),
            str(j1),
            "-",
            _YES_NO[report.well_covered],
            _STATUS_CELL[report.cm_status],
            lattice_cell,
        ]
        return "\t".join(cells)

    jt = len(j_triple(A, 1, 2, 3))
    wc_formula, _ = well_covered_verdict(A)
    if len(A.graph.vertices) <= max_vertices:
        wc = is_well_covered(independence_complex(A.graph, max_vertices))
        if wc != wc_formula:
            raise TheoremContractError(
                f"formula verdict {wc_formula} disagrees with enumeration {wc} "
                f"for sizes {tuple(sizes)}"
            )
        verdict = is_cohen_macaulay(
            A.carrier,
            max_vertices=max_vertices,
            max_homology_vertices=max_homology_vertices,
        )
        wc_cell = _YES_NO[wc]
        cm_cell = _STATUS_CELL[verdict.status]
    else:
        flag = " [unverified-by-enumeration]"
        wc_cell = _YES_NO[wc_formula] + flag
        if wc_formula:
            # all sizes are 2: the Boolean path needs no facet enumeration
            verdict = is_cohen_macaulay(A.carrier, max_vertices=max_vertices)
            cm_cell = _STATUS_CELL[verdict.status]
        else:
            cm_cell = "no" + flag
    cells = [
        ",".join(str(s) for s in sizes),
        str(dense),
        str(j1),
        str(jt),
        wc_cell,
        cm_cell,
        lattice_cell,
    ]
    return "\t".join(cells)


def sweep_report(
    vectors: Sequence[Sequence[int]],
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
    workers: int = 1,
) -> str:
    """TSV report over factor-size vectors, in input order."""
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(
                pool.map(
                    sweep_row,
                    vectors,
                    [max_vertices] * len(vectors),
                    [max_homology_vertices] * len(vectors),
                )
            )
    else:
        rows = [
            sweep_row(v, max_vertices, max_homology_vertices) for v in vectors
        ]
    return "\n".join([SWEEP_HEADER, *rows]) + "\n"
