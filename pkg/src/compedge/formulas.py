"""Closed-form predictions for powers of complementary edge ideals.

Every function here is a direct transcription of a proved statement, with
the hypotheses (n >= 3, at least one edge) enforced at this boundary; the
ideal-level machinery tolerates the degenerate cases instead.  Brute-force
counterparts live in :mod:`compedge.verify`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    Graph,
    complete_graph,
    component_summary,
    cycle_graph,
    induced_subgraph,
    is_isomorphic,
    matching_graph,
    path_graph,
)
from .ideals import (
    BigDegreeCase,
    CaseClassification,
    MonomialIdeal,
    complementary_edge_ideal,
    ideal,
)
from .monomials import x_of_set


def _require_formula_hypotheses(g: Graph) -> None:
    if g.n < 3:
        raise ValueError("closed forms require at least 3 vertices")
    if not g.edges:
        raise ValueError("closed forms require at least one edge")


@dataclass(frozen=True)
class AssPrediction:
    """Stable associated primes of the powers, with entry-index bounds.

    ``entry_bounds`` carries max{1, |F|-2} per prime (1 for singletons).
    This is reported as a bound, not as the exact entry index: independent
    sets F of size >= 3 whose vertices all have outside neighbors enter one
    power later, at |F|-1.  ``astab_bound`` is n-2.
    """

    stable_set: frozenset[frozenset[int]]
    entry_bounds: dict[frozenset[int], int]
    astab_bound: int


def ass_infinity(g: Graph) -> AssPrediction:
    """Stable set of associated primes of the powers of I_c(G).

    Isolated vertices split off as x_i^k factors, each contributing its
    singleton prime; the remaining primes are the subsets F of the
    non-isolated vertices, |F| > 1, whose induced subgraph has no bipartite
    connected component with more than one vertex.
    """
    _require_formula_hypotheses(g)
    iso = g.isolated_vertices
    stable: set[frozenset[int]] = {frozenset({i}) for i in iso}
    non_iso = sorted(set(range(g.n)) - iso)
    for size in range(2, len(non_iso) + 1):
        for combo in itertools.combinations(non_iso, size):
            sub, _ = induced_subgraph(g, combo)
            if component_summary(sub).b_tilde == 0:
                stable.add(frozenset(combo))
    bounds = {F: (1 if len(F) == 1 else max(1, len(F) - 2)) for F in stable}
    return AssPrediction(frozenset(stable), bounds, g.n - 2)


def ass_first_power(g: Graph) -> set[frozenset[int]]:
    """Associated primes of I_c(G) itself.

    After peeling the isolated vertices (each gives its singleton), the
    primes of the rest are the non-edges and the triangles of the peeled
    graph, read in the original labels.
    """
    _require_formula_hypotheses(g)
    iso = g.isolated_vertices
    out: set[frozenset[int]] = {frozenset({i}) for i in iso}
    non_iso = sorted(set(range(g.n)) - iso)
    for i, j in itertools.combinations(non_iso, 2):
        if not g.has_edge(i, j):
            out.add(frozenset({i, j}))
    for i, j, k in itertools.combinations(non_iso, 3):
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k):
            out.add(frozenset({i, j, k}))
    return out


def localization_formula(g: Graph, F) -> MonomialIdeal:
    """Monomial localization of I_c(G) at P_F, from the combinatorial side.

    With A_F the vertices of F isolated inside G|_F but not in G, the
    localization is I_c(G|_F) + (x_F/x_i : i in A_F) whenever some edge of
    G meets F, and the principal ideal (x_F) otherwise.  The result lives
    in the |F|-variable ring with the order-preserving index map sorted(F).
    """
    _require_formula_hypotheses(g)
    fs = sorted(set(F))
    if not fs:
        raise ValueError("localization needs a nonempty vertex subset")
    if fs[0] < 0 or fs[-1] >= g.n:
        raise ValueError(f"vertices {fs} out of range for n={g.n}")
    m = len(fs)
    touched = {v for e in g.edges for v in e}
    if not touched & set(fs):
        return ideal([x_of_set(range(m), m)], m)
    sub, _ = induced_subgraph(g, fs)
    gens = list(complementary_edge_ideal(sub).generators)
    for pos, i in enumerate(fs):
        if sub.is_isolated(pos) and i in touched:
            gens.append(x_of_set(set(range(m)) - {pos}, m))
    # some vertex of F meets an edge of G, so a generator always survives
    assert gens
    return ideal(gens, m)


def reg_closed_form(cls: CaseClassification, k: int) -> int:
    """Regularity of the k-th power, by classification case."""
    if k < 1:
        raise ValueError("power must be >= 1")
    n = cls.ambient
    if cls.case is BigDegreeCase.COMPLEMENTARY_EDGE:
        c = component_summary(cls.graph).c
        if k <= c - 2:
            return (n - 1) * k
        return (n - 2) * k + c - 1
    if cls.case is BigDegreeCase.MATROIDAL_VERONESE:
        return cls.veronese_degree * k
    if cls.case is BigDegreeCase.MIXED:
        return (n - 1) * k
    raise ValueError("no regularity formula for unclassified ideals")


def depth_and_dstab_closed_form(cls: CaseClassification) -> tuple[int, int]:
    """Stable depth of S/I^k and the bound on where it is reached.

    Pure complementary edge ideals stabilize at depth b(G) with index
    bound n-1; the mixed case stabilizes at b(G) minus the number of
    degree-(n-1) generators, with index bound n-2.  The matroidal case is
    background material and not covered here.
    """
    n = cls.ambient
    if n < 3:
        raise ValueError("depth formulas require ambient >= 3")
    if cls.case is BigDegreeCase.COMPLEMENTARY_EDGE:
        return component_summary(cls.graph).b, n - 1
    if cls.case is BigDegreeCase.MIXED:
        b = component_summary(cls.graph).b
        return b - len(cls.degree_n1_vars), n - 2
    raise ValueError("stable depth formula covers the graph-backed cases only")


def _is_tk2_without_isolated(g: Graph) -> bool:
    summary = component_summary(g)
    if summary.isolated:
        return False
    if any(len(comp) != 2 for comp in summary.components):
        return False
    return len(summary.components) >= 2


def v_closed_form(g: Graph, k: int) -> int:
    """v-number of I_c(G)^k: (n-2)k for a matching tK_2 with t >= 2 and no
    isolated vertices, (n-2)k - 1 in every other case."""
    _require_formula_hypotheses(g)
    if k < 1:
        raise ValueError("power must be >= 1")
    if _is_tk2_without_isolated(g):
        return (g.n - 2) * k
    return (g.n - 2) * k - 1


_SYMBOLIC_CLASS: list[Graph] = [
    matching_graph(1),  # K_2
    complete_graph(3),
    path_graph(3),
    matching_graph(2),
    path_graph(4),
    cycle_graph(4),
]


def symbolic_equals_ordinary_class(g: Graph) -> bool:
    """Whether all symbolic powers of I_c(G) are ordinary: the non-isolated
    part must be one of K_2, K_3, P_3, 2K_2, P_4, C_4."""
    _require_formula_hypotheses(g)
    non_iso = sorted(set(range(g.n)) - g.isolated_vertices)
    core, _ = induced_subgraph(g, non_iso)
    return any(
        core.n == h.n and is_isomorphic(core, h) for h in _SYMBOLIC_CLASS
    )


def linear_powers_predicate(cls: CaseClassification) -> bool:
    """Whether every power has linear quotients (equivalently is
    componentwise linear): automatic in the matroidal case, and otherwise
    exactly when the graph of the degree-(n-2) part is connected apart from
    isolated vertices (c(G) = 1)."""
    if cls.case is BigDegreeCase.MATROIDAL_VERONESE:
        return True
    if cls.case in (BigDegreeCase.COMPLEMENTARY_EDGE, BigDegreeCase.MIXED):
        return component_summary(cls.graph).c == 1
    raise ValueError("no linear-powers criterion for unclassified ideals")


def vstab(g: Graph) -> int:
    """Index from which the v-function is linear: always 1 here."""
    _require_formula_hypotheses(g)
    return 1
