"""Monomial ideals with canonical minimal generating sets.

Every ideal is stored as its unique minimal generating set, sorted by
(total degree, lex on exponent vectors), so equality of ideals is equality
of generator sequences.  The zero ideal has no generators, the unit ideal
has the single generator 1.  All operations are pure.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph
from .monomials import Monomial, canonical_key, one, x_of_set

_NUMPY_MINIMALIZE_THRESHOLD = 48


class LimitExceededError(RuntimeError):
    """A configured search-space or resource limit was exceeded."""


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``ambient`` variables, canonically presented.

    Construct through :func:`ideal` (or the specific builders below) so the
    generators are minimalized and sorted; the raw constructor trusts its
    input.
    """

    ambient: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.ambient < 1:
            raise ValueError("ambient must be positive")
        for g in self.generators:
            if g.ambient != self.ambient:
                raise ValueError(
                    f"generator {g} has ambient {g.ambient}, ideal has {self.ambient}"
                )

    @property
    def is_zero(self) -> bool:
        return len(self.generators) == 0

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.generators:
            out.update(g.support)
        return frozenset(out)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    @property
    def indeg(self) -> int:
        """Least degree of a generator; the zero ideal has no initial degree."""
        if self.is_zero:
            raise ValueError("zero ideal has no initial degree")
        return self.generators[0].degree

    @property
    def maxdeg(self) -> int:
        if self.is_zero:
            raise ValueError("zero ideal has no generator degrees")
        return self.generators[-1].degree

    def mu(self, j: int) -> int:
        """Number of minimal generators of total degree j."""
        return sum(1 for g in self.generators if g.degree == j)

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({g.degree for g in self.generators}))

    def contains(self, u: Monomial) -> bool:
        """Membership: true iff some minimal generator divides u."""
        if u.ambient != self.ambient:
            raise ValueError(f"ambient mismatch: {u.ambient} vs {self.ambient}")
        return any(g.divides(u) for g in self.generators)

    def __contains__(self, u: Monomial) -> bool:
        return self.contains(u)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is a subideal, i.e. every generator of other lies here."""
        return all(self.contains(g) for g in other.generators)

    def lcm_of_generators(self) -> Monomial:
        if self.is_zero:
            raise ValueError("zero ideal has no generators")
        exps = [0] * self.ambient
        for g in self.generators:
            for i, e in enumerate(g.exponents):
                if e > exps[i]:
                    exps[i] = e
        return Monomial(tuple(exps))

    def exponent_matrix(self) -> np.ndarray:
        """Generators as an (m, ambient) int array, in canonical order."""
        if self.is_zero:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array([g.exponents for g in self.generators], dtype=np.int64)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "generators": [list(g.exponents) for g in self.generators],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "MonomialIdeal":
        ambient = int(data["ambient"])
        gens = [Monomial(tuple(int(e) for e in row)) for row in data["generators"]]
        for g in gens:
            if g.ambient != ambient:
                raise ValueError("generator length does not match ambient")
        return ideal(gens, ambient)


# ---------------------------------------------------------------------------
# construction


def _minimalize_tuples(
    tuples: Iterable[tuple[int, ...]], ambient: int
) -> list[tuple[int, ...]]:
    """Minimal elements of a set of exponent vectors, canonically sorted."""
    uniq = sorted(set(tuples), key=lambda t: (sum(t), t))
    if not uniq:
        return []
    if uniq[0] == (0,) * ambient:
        return [uniq[0]]
    if len(uniq) > _NUMPY_MINIMALIZE_THRESHOLD:
        arr = np.array(uniq, dtype=np.int16)
        m = arr.shape[0]
        le = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
        np.fill_diagonal(le, False)
        dominated = le.any(axis=0)
        return [uniq[k] for k in range(m) if not dominated[k]]
    kept: list[tuple[int, ...]] = []
    for t in uniq:
        if not any(all(a <= b for a, b in zip(k, t)) for k in kept):
            kept.append(t)
    return kept


def ideal(gens: Iterable[Monomial], ambient: int | None = None) -> MonomialIdeal:
    """Minimalize a generating set: drop strict multiples, dedupe, sort."""
    gens = list(gens)
    if ambient is None:
        if not gens:
            raise ValueError("ambient required for an empty generating set")
        ambient = gens[0].ambient
    for g in gens:
        if g.ambient != ambient:
            raise ValueError(f"ambient mismatch: {g.ambient} vs {ambient}")
    mins = _minimalize_tuples((g.exponents for g in gens), ambient)
    return MonomialIdeal(ambient, tuple(Monomial(t) for t in mins))


def zero_ideal(ambient: int) -> MonomialIdeal:
    return MonomialIdeal(ambient, ())


def unit_ideal(ambient: int) -> MonomialIdeal:
    return MonomialIdeal(ambient, (one(ambient),))


def parse_ideal(text: str, ambient: int) -> MonomialIdeal:
    """Parse ``(x1*x2, x3)`` / ``(0)`` / ``(1)`` using the monomial syntax."""
    from .monomials import parse_monomial

    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if body == "0" or body == "":
        return zero_ideal(ambient)
    return ideal([parse_monomial(part, ambient) for part in body.split(",")], ambient)


# ---------------------------------------------------------------------------
# closure operations


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Product ideal, generated by the pairwise products, minimalized."""
    if I.ambient != J.ambient:
        raise ValueError("ambient mismatch")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ambient)
    prods = {
        tuple(a + b for a, b in zip(g.exponents, h.exponents))
        for g in I.generators
        for h in J.generators
    }
    mins = _minimalize_tuples(prods, I.ambient)
    return MonomialIdeal(I.ambient, tuple(Monomial(t) for t in mins))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th power by iterated products, minimalizing after every step."""
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    if k == 0:
        return unit_ideal(I.ambient)
    out = I
    for _ in range(k - 1):
        out = multiply(out, I)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by the pairwise lcms, minimalized."""
    if I.ambient != J.ambient:
        raise ValueError("ambient mismatch")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.ambient)
    meets = {
        tuple(max(a, b) for a, b in zip(g.exponents, h.exponents))
        for g in I.generators
        for h in J.generators
    }
    mins = _minimalize_tuples(meets, I.ambient)
    return MonomialIdeal(I.ambient, tuple(Monomial(t) for t in mins))


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """Colon ideal I : u, generated by g / gcd(g, u)."""
    if u.ambient != I.ambient:
        raise ValueError("ambient mismatch")
    if I.is_zero:
        return zero_ideal(I.ambient)
    quots = {
        tuple(max(a - b, 0) for a, b in zip(g.exponents, u.exponents))
        for g in I.generators
    }
    mins = _minimalize_tuples(quots, I.ambient)
    return MonomialIdeal(I.ambient, tuple(Monomial(t) for t in mins))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Colon by an ideal: the intersection of I : v over generators v of J."""
    if I.ambient != J.ambient:
        raise ValueError("ambient mismatch")
    if J.is_zero:
        return unit_ideal(I.ambient)
    out = colon(I, J.generators[0])
    for v in J.generators[1:]:
        out = intersect(out, colon(I, v))
    return out


def localize(I: MonomialIdeal, F: Iterable[int]) -> MonomialIdeal:
    """Monomial localization: substitute 1 for every variable outside F.

    The result lives in a fresh ambient of size |F|; new variable k stands
    for ``sorted(F)[k]``, the order-preserving index map.
    """
    fs = sorted(set(F))
    if not fs:
        raise ValueError("localization needs a nonempty variable subset")
    if fs[0] < 0 or fs[-1] >= I.ambient:
        raise ValueError(f"variables {fs} out of range for ambient {I.ambient}")
    if I.is_zero:
        return zero_ideal(len(fs))
    images = {tuple(g.exponents[i] for i in fs) for g in I.generators}
    mins = _minimalize_tuples(images, len(fs))
    return MonomialIdeal(len(fs), tuple(Monomial(t) for t in mins))


def graded_component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by all degree-j monomials of I."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if I.is_zero or j < I.indeg:
        return zero_ideal(I.ambient)
    gens: set[tuple[int, ...]] = set()
    for g in I.generators:
        d = j - g.degree
        if d < 0:
            continue
        for combo in itertools.combinations_with_replacement(range(I.ambient), d):
            exps = list(g.exponents)
            for i in combo:
                exps[i] += 1
            gens.add(tuple(exps))
    # all candidates share degree j, so deduplication alone minimalizes
    out = sorted(gens)
    return MonomialIdeal(I.ambient, tuple(Monomial(t) for t in out))


# ---------------------------------------------------------------------------
# graphs <-> ideals


def complementary_edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by (x_1...x_n)/(x_i x_j) over the edges {i,j}."""
    n = g.n
    gens = [x_of_set(set(range(n)) - {i, j}, n) for i, j in sorted(g.edges)]
    if not gens:
        return zero_ideal(n)
    return ideal(gens, n)


def edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by x_i x_j over the edges {i,j}."""
    gens = [x_of_set({i, j}, g.n) for i, j in sorted(g.edges)]
    if not gens:
        return zero_ideal(g.n)
    return ideal(gens, g.n)


class BigDegreeCase(enum.Enum):
    """Trichotomy for squarefree ideals generated in degrees >= n-2."""

    COMPLEMENTARY_EDGE = "complementary-edge"
    MATROIDAL_VERONESE = "matroidal-veronese"
    MIXED = "mixed"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class CaseClassification:
    case: BigDegreeCase
    ambient: int
    graph: Graph | None = None
    degree_n1_vars: frozenset[int] = frozenset()
    veronese_degree: int | None = None

    @property
    def applicable(self) -> bool:
        return self.case is not BigDegreeCase.NOT_APPLICABLE


def _graph_from_degree_n2_gens(
    gens: Sequence[Monomial], n: int
) -> Graph:
    full = frozenset(range(n))
    edges = []
    for g in gens:
        missing = sorted(full - g.support)
        if len(missing) != 2:
            raise ValueError(f"generator {g} does not omit exactly two variables")
        edges.append((missing[0], missing[1]))
    return Graph(n, frozenset(edges))


def classify_big_degree(I: MonomialIdeal) -> CaseClassification:
    """Sort a squarefree ideal generated in degrees >= n-2 into its case.

    n is the ambient variable count, so that a degree-(n-2) squarefree
    generator omits exactly two variables and the graph reconstruction
    I = I_c(G) is the literal inverse of the defining substitution.
    """
    if not I.is_squarefree:
        raise ValueError("classification requires a squarefree ideal")
    n = I.ambient
    if not I.is_proper:
        return CaseClassification(BigDegreeCase.NOT_APPLICABLE, n)
    degs = I.generator_degrees()
    if any(d < n - 2 for d in degs):
        return CaseClassification(BigDegreeCase.NOT_APPLICABLE, n)
    if degs == (n - 2,):
        g = _graph_from_degree_n2_gens(I.generators, n)
        if complementary_edge_ideal(g) != I:
            raise ValueError("reconstruction mismatch: ideal is not I_c of its graph")
        return CaseClassification(BigDegreeCase.COMPLEMENTARY_EDGE, n, graph=g)
    if degs == (n - 1,) or degs == (n,):
        return CaseClassification(
            BigDegreeCase.MATROIDAL_VERONESE, n, veronese_degree=degs[0]
        )
    if degs == (n - 2, n - 1):
        small = [g for g in I.generators if g.degree == n - 2]
        big = [g for g in I.generators if g.degree == n - 1]
        graph = _graph_from_degree_n2_gens(small, n)
        iso_vars = set()
        for g in big:
            missing = sorted(frozenset(range(n)) - g.support)
            i = missing[0]
            if not graph.is_isolated(i):
                raise ValueError(
                    f"degree n-1 generator {g} misses non-isolated vertex {i + 1}"
                )
            iso_vars.add(i)
        return CaseClassification(
            BigDegreeCase.MIXED, n, graph=graph, degree_n1_vars=frozenset(iso_vars)
        )
    return CaseClassification(BigDegreeCase.NOT_APPLICABLE, n)


# ---------------------------------------------------------------------------
# primes and symbolic powers


def minimal_primes_squarefree(I: MonomialIdeal) -> set[frozenset[int]]:
    """Minimal primes of a squarefree ideal: minimal transversals of the
    generator supports, found by subset enumeration over supp(I)."""
    if not I.is_squarefree:
        raise ValueError("minimal primes via transversals requires squarefree input")
    if not I.is_proper:
        raise ValueError("zero and unit ideals have no associated primes here")
    supports = [g.support for g in I.generators]
    universe = sorted(I.support)
    found: list[frozenset[int]] = []
    for size in range(1, len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            cand = frozenset(combo)
            if any(prev <= cand for prev in found):
                continue
            if all(cand & s for s in supports):
                found.append(cand)
    return set(found)


def prime_power(F: Iterable[int], k: int, ambient: int) -> MonomialIdeal:
    """P_F^k: all monomials of degree k in the variables of F."""
    fs = sorted(set(F))
    if not fs:
        raise ValueError("prime needs a nonempty variable set")
    if k < 1:
        raise ValueError("power must be positive")
    gens = []
    for combo in itertools.combinations_with_replacement(fs, k):
        exps = [0] * ambient
        for i in combo:
            exps[i] += 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(ambient, tuple(sorted(gens, key=canonical_key)))


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th symbolic power of a squarefree ideal: the intersection of P_F^k
    over the minimal primes F (squarefree ideals have no embedded primes)."""
    if k < 1:
        raise ValueError("symbolic power needs k >= 1")
    if not I.is_squarefree or not I.is_proper:
        raise ValueError("symbolic power implemented for proper squarefree ideals")
    primes = sorted(minimal_primes_squarefree(I), key=lambda F: (len(F), sorted(F)))
    out: MonomialIdeal | None = None
    for F in primes:
        pk = prime_power(F, k, I.ambient)
        out = pk if out is None else intersect(out, pk)
    assert out is not None
    return out


# ---------------------------------------------------------------------------
# divisor-box membership, shared by the homology and witness-search oracles


def membership_box(I: MonomialIdeal, bound: Monomial) -> np.ndarray:
    """Membership table of I over the divisor box of ``bound``.

    Returns a boolean array of shape (bound_1+1, ..., bound_n+1) whose cell
    at index u says whether x^u lies in I.  Only generators inside the box
    can divide a box point, so the table is filled with one slice per such
    generator.
    """
    if bound.ambient != I.ambient:
        raise ValueError("ambient mismatch")
    shape = tuple(e + 1 for e in bound.exponents)
    table = np.zeros(shape, dtype=bool)
    for g in I.generators:
        if all(a <= b for a, b in zip(g.exponents, bound.exponents)):
            table[tuple(slice(e, None) for e in g.exponents)] = True
    return table
