"""Multigraded Betti numbers of monomial ideals over small prime fields.

The oracle is Hochster-style: beta_{i,a}(I) is the rank of the reduced
homology H~_{i-1} of the upper-Koszul complex of I at the multidegree a,
and only multidegrees in the lcm lattice of the generators can carry a
nonzero rank.  Regularity, projective dimension and depth are read off the
table; the table itself is computed per characteristic so that field
(in)dependence is an observable, not an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .ideals import LimitExceededError, MonomialIdeal, graded_component
from .monomials import Monomial

DEFAULT_PRIME = 2
DEFAULT_GROUND_LIMIT = 12
DEFAULT_LATTICE_LIMIT = 50_000
DEFAULT_BOX_LIMIT = 5_000_000
DEFAULT_QUOTIENTS_LIMIT = 24

_SMALL_PRIMES = frozenset(
    {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
     73, 79, 83, 89, 97}
)


def _check_prime(p: int) -> None:
    if p not in _SMALL_PRIMES:
        raise ValueError(f"characteristic must be a small prime, got {p}")


# ---------------------------------------------------------------------------
# simplicial complexes and reduced homology


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of a ground set of variables.

    The void complex (no faces at all) and the irrelevant complex (only the
    empty face) are distinct values; the distinction carries H~_{-1}.
    """

    ground: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        gset = set(self.ground)
        for f in self.faces:
            if not f <= gset:
                raise ValueError(f"face {sorted(f)} not inside ground {self.ground}")
            for v in f:
                if f - {v} not in self.faces:
                    raise ValueError("face set is not downward closed")

    @property
    def is_void(self) -> bool:
        return len(self.faces) == 0

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset({frozenset()})

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.faces) - 1


def simplicial_complex(ground: tuple[int, ...], faces) -> SimplicialComplex:
    return SimplicialComplex(tuple(ground), frozenset(frozenset(f) for f in faces))


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """Upper-Koszul complex of I at multidegree a.

    Ground set is supp(a); a squarefree b below it is a face exactly when
    x^(a-b) lies in I.  Membership is monotone under shrinking b, so the
    face set is downward closed by construction.
    """
    if I.is_zero:
        raise ValueError("upper-Koszul complex needs a nonzero ideal")
    if a.ambient != I.ambient:
        raise ValueError("ambient mismatch")
    ground = tuple(sorted(a.support))
    faces = []
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            exps = list(a.exponents)
            for i in combo:
                exps[i] -= 1
            if Monomial(tuple(exps)) in I:
                faces.append(frozenset(combo))
    return SimplicialComplex(ground, frozenset(faces))


def _rank_gf2(rows: list[int]) -> int:
    """Rank of a 0/1 matrix whose rows are bitmask integers."""
    pivots: list[int] = []
    rank = 0
    for row in rows:
        for piv in pivots:
            low = piv & -piv
            if row & low:
                row ^= piv
        if row:
            pivots.append(row)
            rank += 1
    return rank


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank over F_p by fraction-style Gaussian elimination."""
    M = np.array(mat, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for rr in range(r, rows):
            if M[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        col = M[r + 1 :, c]
        nz = np.nonzero(col)[0]
        if nz.size:
            M[r + 1 + nz] = (M[r + 1 + nz] - np.outer(col[nz], M[r])) % p
        r += 1
    return r


def _boundary_rank(lower: list[int], upper: list[int], p: int) -> int:
    """Rank of the boundary map from the faces in ``upper`` (bitmasks, all of
    one cardinality) down to those in ``lower``."""
    if not lower or not upper:
        return 0
    row_index = {f: i for i, f in enumerate(lower)}
    if p == 2:
        rows = [0] * len(lower)
        for j, f in enumerate(upper):
            rem = f
            while rem:
                low = rem & -rem
                rows[row_index[f ^ low]] |= 1 << j
                rem ^= low
        return _rank_gf2(rows)
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        sign = 1
        rem = f
        while rem:
            low = rem & -rem
            mat[row_index[f ^ low], j] = sign
            sign = -sign
            rem ^= low
    return _rank_mod_p(mat, p)


_HOMOLOGY_MEMO: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
_HOMOLOGY_MEMO_CAP = 400_000


def _is_cone(face_masks: frozenset[int], vertex_masks: int) -> bool:
    """A cone over any vertex has vanishing reduced homology everywhere."""
    rem = vertex_masks
    while rem:
        vbit = rem & -rem
        if all(f | vbit in face_masks for f in face_masks):
            return True
        rem ^= vbit
    return False


def _homology_ranks_masks(face_masks: frozenset[int], p: int) -> dict[int, int]:
    """Reduced homology ranks of a complex given as face bitmasks."""
    if not face_masks:
        return {}
    if face_masks == frozenset({0}):
        return {-1: 1}
    vertex_masks = 0
    for f in face_masks:
        vertex_masks |= f
    if _is_cone(face_masks, vertex_masks):
        return {}
    key = (sum(1 << f for f in face_masks), p)
    hit = _HOMOLOGY_MEMO.get(key)
    if hit is not None:
        return dict(hit)
    by_dim: dict[int, list[int]] = {}
    for f in face_masks:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}
    rank_up = 0  # rank of the boundary map coming from dimension d+1
    for d in range(top, -2, -1):
        faces = by_dim.get(d, [])
        rank_down = _boundary_rank(by_dim.get(d - 1, []), faces, p) if d >= 0 else 0
        h = len(faces) - rank_down - rank_up
        if h:
            ranks[d] = h
        rank_up = rank_down
    if len(_HOMOLOGY_MEMO) >= _HOMOLOGY_MEMO_CAP:
        _HOMOLOGY_MEMO.clear()
    _HOMOLOGY_MEMO[key] = tuple(ranks.items())
    return ranks


def reduced_homology_ranks(
    C: SimplicialComplex, p: int = DEFAULT_PRIME, ground_limit: int = DEFAULT_GROUND_LIMIT
) -> dict[int, int]:
    """Ranks of H~_d over F_p for d = -1 .. dim; zero ranks are omitted."""
    _check_prime(p)
    if len(C.ground) > ground_limit:
        raise LimitExceededError(
            f"homology limited to ground sets of size <= {ground_limit}"
        )
    pos = {v: t for t, v in enumerate(C.ground)}
    masks = frozenset(sum(1 << pos[v] for v in f) for f in C.faces)
    return _homology_ranks_masks(masks, p)


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Multigraded Betti numbers of an ideal: (i, multidegree) -> rank > 0."""

    characteristic: int
    ambient: int
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def graded(self) -> dict[tuple[int, int], int]:
        """Total graded numbers beta_{i,j}, summing multidegrees of size j."""
        out: dict[tuple[int, int], int] = {}
        for (i, a), rank in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + rank
        return out

    def total(self, i: int) -> int:
        return sum(rank for (ii, _), rank in self.entries.items() if ii == i)

    @property
    def projective_dimension_ideal(self) -> int:
        return max(i for (i, _) in self.entries)

    @property
    def projective_dimension_quotient(self) -> int:
        return self.projective_dimension_ideal + 1

    @property
    def regularity(self) -> int:
        return max(sum(a) - i for (i, a) in self.entries)

    def pretty(self) -> str:
        """Macaulay2-style total-degree table for the ideal's resolution."""
        graded = self.graded()
        imax = max(i for i, _ in graded)
        jmin = min(j - i for (i, j) in graded)
        jmax = max(j - i for (i, j) in graded)
        header = ["      "] + [f"{i:>6}" for i in range(imax + 1)]
        lines = ["".join(header)]
        totals = ["total:"] + [f"{self.total(i):>6}" for i in range(imax + 1)]
        lines.append("".join(totals))
        for shift in range(jmin, jmax + 1):
            row = [f"{shift:>5}:"]
            for i in range(imax + 1):
                v = graded.get((i, i + shift), 0)
                row.append(f"{v if v else '.':>6}")
            lines.append("".join(row))
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "entries": [
                {"i": i, "multidegree": list(a), "rank": rank}
                for (i, a), rank in sorted(self.entries.items())
            ],
        }


def _lcm_lattice_points(
    gens: np.ndarray, bound: np.ndarray, lattice_limit: int, box_limit: int
) -> np.ndarray:
    """All joins of nonempty generator subsets, without enumerating subsets.

    A box point a is such a join exactly when it equals the join of the
    generators below it (and at least one generator lies below it), so the
    lattice is a filter over the divisor box of the generator lcm.
    """
    shape = tuple(int(b) + 1 for b in bound)
    cells = int(np.prod([s for s in shape], dtype=np.int64))
    if cells > box_limit:
        return _lcm_lattice_points_iterative(gens, lattice_limit)
    axes = [np.arange(s, dtype=np.int16) for s in shape]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(cells, -1)
    points = []
    chunk = max(1, 2_000_000 // max(1, gens.shape[0] * gens.shape[1]))
    for start in range(0, cells, chunk):
        block = grid[start : start + chunk]
        below = (gens[None, :, :] <= block[:, None, :]).all(axis=2)
        joined = np.where(below[:, :, None], gens[None, :, :], 0).max(axis=1)
        ok = below.any(axis=1) & (joined == block).all(axis=1)
        points.append(block[ok])
    out = np.concatenate(points, axis=0)
    if out.shape[0] > lattice_limit:
        raise LimitExceededError(
            f"lcm lattice has {out.shape[0]} points, limit {lattice_limit}"
        )
    return out


def _lcm_lattice_points_iterative(gens: np.ndarray, lattice_limit: int) -> np.ndarray:
    """Pairwise-join closure; fallback when the divisor box is too large."""
    seen: set[tuple[int, ...]] = {tuple(int(x) for x in g) for g in gens}
    frontier = list(seen)
    while frontier:
        nxt = []
        for t in frontier:
            ta = np.array(t, dtype=np.int16)
            for s in list(seen):
                j = tuple(int(x) for x in np.maximum(ta, np.array(s, dtype=np.int16)))
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
                    if len(seen) > lattice_limit:
                        raise LimitExceededError(
                            f"lcm lattice exceeds limit {lattice_limit}"
                        )
        frontier = nxt
    return np.array(sorted(seen), dtype=np.int16)


@lru_cache(maxsize=None)
def _subset_bits(g: int) -> np.ndarray:
    """(2^g, g) 0/1 table: row m is the indicator vector of the bitmask m."""
    masks = np.arange(1 << g, dtype=np.int64)
    return (masks[:, None] >> np.arange(g)[None, :] & 1).astype(np.int16)


def betti_table(
    I: MonomialIdeal,
    p: int = DEFAULT_PRIME,
    lattice_limit: int = DEFAULT_LATTICE_LIMIT,
    box_limit: int = DEFAULT_BOX_LIMIT,
) -> BettiTable:
    """Multigraded Betti table of I over F_p via upper-Koszul homology."""
    _check_prime(p)
    if not I.is_proper:
        raise ValueError("Betti table needs a nonzero, non-unit ideal")
    return _betti_table_cached(I, p, lattice_limit, box_limit)


@lru_cache(maxsize=200_000)
def _betti_table_cached(
    I: MonomialIdeal, p: int, lattice_limit: int, box_limit: int
) -> BettiTable:
    gens = I.exponent_matrix().astype(np.int16)
    bound = gens.max(axis=0)
    points = _lcm_lattice_points(gens, bound, lattice_limit, box_limit)
    shape = tuple(int(b) + 1 for b in bound)
    table = np.zeros(shape, dtype=bool)
    for g in I.generators:
        table[tuple(slice(e, None) for e in g.exponents)] = True
    flat = table.reshape(-1)
    strides = np.array(
        [int(np.prod(shape[i + 1 :], dtype=np.int64)) for i in range(len(shape))],
        dtype=np.int64,
    )
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for a in points:
        supp = np.nonzero(a)[0]
        g = len(supp)
        cands = np.repeat(a[None, :], 1 << g, axis=0)
        cands[:, supp] -= _subset_bits(g)
        idx = cands.astype(np.int64) @ strides
        flags = flat[idx]
        face_masks = frozenset(int(m) for m in np.nonzero(flags)[0])
        ranks = _homology_ranks_masks(face_masks, p)
        if ranks:
            a_t = tuple(int(x) for x in a)
            for d, r in ranks.items():
                entries[(d + 1, a_t)] = r
    return BettiTable(p, I.ambient, entries)


@dataclass(frozen=True)
class HomologicalInvariants:
    """reg(I), pd(S/I), and depth(S/I) both in the declared ambient ring and
    in the subring on the ideal's support (Auslander-Buchsbaum)."""

    regularity: int
    pd_quotient: int
    depth: int
    depth_support: int


def reg_pd_depth(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> HomologicalInvariants:
    """Regularity, projective dimension, and depth of S/I over F_p."""
    if not I.is_proper:
        raise ValueError("invariants need a nonzero, non-unit ideal")
    table = betti_table(I, p)
    reg = table.regularity
    pd_q = table.projective_dimension_quotient
    return HomologicalInvariants(
        regularity=reg,
        pd_quotient=pd_q,
        depth=I.ambient - pd_q,
        depth_support=len(I.support) - pd_q,
    )


def has_linear_resolution(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> bool:
    """For an equigenerated ideal: reg(I) equals the generation degree."""
    if not I.is_proper:
        raise ValueError("linear resolution needs a nonzero, non-unit ideal")
    degs = I.generator_degrees()
    if len(degs) != 1:
        raise ValueError("linear resolution is defined for equigenerated ideals")
    return betti_table(I, p).regularity == degs[0]


def is_componentwise_linear(I: MonomialIdeal, p: int = DEFAULT_PRIME) -> bool:
    """Check linear resolution of every graded component I_<j>.

    Components above reg(I) are generated in their own degree with linear
    resolution automatically, so only indeg(I) <= j <= reg(I) is checked.
    """
    if not I.is_proper:
        raise ValueError("componentwise linearity needs a nonzero, non-unit ideal")
    reg = betti_table(I, p).regularity
    for j in range(I.indeg, reg + 1):
        if not has_linear_resolution(graded_component(I, j), p):
            return False
    return True


# ---------------------------------------------------------------------------
# linear quotients


def has_linear_quotients(
    I: MonomialIdeal, limit: int = DEFAULT_QUOTIENTS_LIMIT
) -> tuple[bool, tuple[Monomial, ...] | None]:
    """Search for a linear-quotients order of the minimal generators.

    Exact backtracking over orders with nondecreasing degrees (an ideal with
    linear quotients always admits such an order), with memoization on the
    set of already-placed generators.  Returns (True, witness order) or
    (False, None) after exhausting the search.
    """
    if not I.is_proper:
        raise ValueError("linear quotients need a nonzero, non-unit ideal")
    m = len(I.generators)
    if m > limit:
        raise LimitExceededError(f"{m} generators exceeds backtracking limit {limit}")
    if m == 1:
        return True, tuple(I.generators)

    arr = I.exponent_matrix()
    degs = arr.sum(axis=1)
    bits = 1 << np.arange(I.ambient, dtype=np.int64)
    # gt[v][u]: bitmask of variables t with v_t > u_t
    gt = ((arr[:, None, :] > arr[None, :, :]) * bits[None, None, :]).sum(axis=2)
    # sv[w][u]: the variable bit when (w : u) is a single variable, else 0
    diff = np.maximum(arr[:, None, :] - arr[None, :, :], 0)
    single = diff.sum(axis=2) == 1
    svvar = (diff > 0) @ bits
    sv = np.where(single, svvar, 0)

    order: list[int] = []
    dead: set[int] = set()

    def admissible(u: int) -> bool:
        tmask = 0
        for w in order:
            tmask |= int(sv[w, u])
        if tmask == 0:
            return False
        return all(int(gt[v, u]) & tmask for v in order)

    def search(chosen_mask: int) -> bool:
        if len(order) == m:
            return True
        if chosen_mask in dead:
            return False
        last_deg = degs[order[-1]] if order else 0
        for u in range(m):
            if chosen_mask >> u & 1 or degs[u] < last_deg:
                continue
            if order and not admissible(u):
                continue
            order.append(u)
            if search(chosen_mask | 1 << u):
                return True
            order.pop()
        if len(dead) < 1 << 22:
            dead.add(chosen_mask)
        return False

    if search(0):
        return True, tuple(I.generators[i] for i in order)
    return False, None
