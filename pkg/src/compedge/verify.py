"""Brute-force oracles and the census sweep harness.

The oracles know nothing about the closed forms: associated primes come
from an exhaustive colon-witness search over the divisors of the generator
lcm, depth zero from a socle-witness search, v-numbers from the same
witness space.  Restricting witnesses to divisors of lcm(G(I)) loses
nothing: if (I : u) = P then (I : gcd(u, lcm)) = P, since exponents of u
above the lcm never affect divisibility by a generator.  The fuzz suite
cross-validates this against the independent localization/socle route.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import formulas
from .cache import DiskCache, cache_key
from .graphs import Graph, enumerate_labeled_graphs, to_graph6
from .ideals import (
    BigDegreeCase,
    LimitExceededError,
    MonomialIdeal,
    classify_big_degree,
    colon,
    colon_ideal,
    complementary_edge_ideal,
    localize,
    membership_box,
    multiply,
    power,
    symbolic_power,
)
from .monomials import Monomial, variable
from .resolution import betti_table, has_linear_quotients, is_componentwise_linear, reg_pd_depth

DEFAULT_DIVISOR_LIMIT = 1_000_000
REPORT_SCHEMA_VERSION = 1


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper:
        raise ValueError("oracle needs a nonzero, non-unit ideal")


def _divisor_grid(bound: Monomial) -> np.ndarray:
    """All divisor exponent vectors of ``bound`` as rows, in the same order
    as :func:`compedge.monomials.divisors`."""
    axes = [np.arange(e + 1, dtype=np.int16) for e in bound.exponents]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    return grid.reshape(-1, bound.ambient)


def _divisor_count(bound: Monomial) -> int:
    out = 1
    for e in bound.exponents:
        out *= e + 1
    return out


def _mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if mask >> i & 1)


def _colon_prime_scan(I: MonomialIdeal, divisor_limit: int):
    """Yield (exponents, degree, prime mask) for every divisor u of the
    generator lcm with (I : u) a monomial prime."""
    bound = I.lcm_of_generators()
    count = _divisor_count(bound)
    if count > divisor_limit:
        raise LimitExceededError(
            f"witness space has {count} divisors, limit {divisor_limit}"
        )
    gens = I.exponent_matrix().astype(np.int16)
    m, n = gens.shape
    grid = _divisor_grid(bound)
    bits = 1 << np.arange(n, dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, m * n))
    for start in range(0, grid.shape[0], chunk):
        u = grid[start : start + chunk]
        quot = np.maximum(
            gens[None, :, :].astype(np.int32) - u[:, None, :], 0
        )
        deg = quot.sum(axis=2)
        member = (deg == 0).any(axis=1)
        sup = ((quot > 0) * bits[None, None, :]).sum(axis=2)
        fmask = np.bitwise_or.reduce(np.where(deg == 1, sup, 0), axis=1)
        meets = (sup & fmask[:, None]) != 0
        ok = ~member & (fmask != 0) & meets.all(axis=1)
        for row in np.nonzero(ok)[0]:
            exps = tuple(int(x) for x in u[row])
            yield exps, sum(exps), int(fmask[row])


def ass_oracle(
    I: MonomialIdeal, divisor_limit: int = DEFAULT_DIVISOR_LIMIT
) -> set[frozenset[int]]:
    """Associated primes by exhaustive colon-witness search.

    F is reported exactly when (I : u) = P_F for some divisor u of the lcm
    of the minimal generators; a colon ideal counts as prime exactly when
    its minimal generators are single variables.
    """
    _require_proper(I)
    n = I.ambient
    return {
        _mask_to_set(mask, n)
        for _, _, mask in _colon_prime_scan(I, divisor_limit)
    }


def depth_zero_oracle(
    I: MonomialIdeal, divisor_limit: int = DEFAULT_DIVISOR_LIMIT
) -> tuple[bool, Monomial | None]:
    """Socle witness search: some u not in I with x_i u in I for all i.

    Such a u exists iff the maximal ideal is associated, i.e. iff the
    quotient has depth zero.  Returns the canonically smallest witness.
    """
    _require_proper(I)
    bound = I.lcm_of_generators()
    if _divisor_count(bound) > divisor_limit:
        raise LimitExceededError(
            f"witness space has {_divisor_count(bound)} divisors, limit {divisor_limit}"
        )
    socle = ~membership_box(I, bound)
    if not socle.any():
        return False, None
    for i in range(I.ambient):
        socle &= membership_box(colon(I, variable(i, I.ambient)), bound)
        if not socle.any():
            return False, None
    hits = np.argwhere(socle)
    best = min((int(row.sum()), tuple(int(x) for x in row)) for row in hits)
    return True, Monomial(best[1])


def stable_ass_localization(
    I: MonomialIdeal,
    k_max: int,
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT,
) -> dict[frozenset[int], int]:
    """The primes F with depth S_F/(I(P_F))^k = 0 for some k <= k_max,
    mapped to the least such k.  Independent route to the stable set."""
    _require_proper(I)
    out: dict[frozenset[int], int] = {}
    n = I.ambient
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            J = localize(I, combo)
            if not J.is_proper:
                continue
            Jk = J
            for k in range(1, k_max + 1):
                if k > 1:
                    Jk = multiply(Jk, J)
                hit, _ = depth_zero_oracle(Jk, divisor_limit)
                if hit:
                    out[frozenset(combo)] = k
                    break
    return out


@dataclass(frozen=True)
class VWitness:
    v: int
    witness: Monomial
    prime: frozenset[int]


def v_oracle(
    I: MonomialIdeal, divisor_limit: int = DEFAULT_DIVISOR_LIMIT
) -> VWitness:
    """Least degree of a monomial u with (I : u) prime, with the witness.

    Ties are broken by the canonical monomial order, then by the smaller
    prime, so reports are reproducible.
    """
    _require_proper(I)
    n = I.ambient
    best: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None
    for exps, deg, mask in _colon_prime_scan(I, divisor_limit):
        key = (deg, exps, tuple(sorted(_mask_to_set(mask, n))))
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError("no prime colon ideal found; is the input proper?")
    return VWitness(best[0], Monomial(best[1]), frozenset(best[2]))


def local_v_oracle(
    I: MonomialIdeal,
    F: Iterable[int],
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT,
) -> VWitness:
    """v-number at the fixed prime P_F; errors if F is not associated."""
    _require_proper(I)
    n = I.ambient
    target = frozenset(F)
    tmask = sum(1 << i for i in target)
    best: tuple[int, tuple[int, ...]] | None = None
    for exps, deg, mask in _colon_prime_scan(I, divisor_limit):
        if mask != tmask:
            continue
        key = (deg, exps)
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError(
            f"P_{{{','.join(str(i + 1) for i in sorted(target))}}} is not associated"
        )
    return VWitness(best[0], Monomial(best[1]), target)


@dataclass(frozen=True)
class PersistenceResult:
    holds: bool
    first_violation: tuple[int, frozenset[int]] | None
    ass_by_k: tuple[frozenset[frozenset[int]], ...]


def _ass_by_k(
    I: MonomialIdeal, k_max: int, divisor_limit: int
) -> list[set[frozenset[int]]]:
    out = []
    Ik = I
    for k in range(1, k_max + 1):
        if k > 1:
            Ik = multiply(Ik, I)
        out.append(ass_oracle(Ik, divisor_limit))
    return out


def persistence_check(
    I: MonomialIdeal,
    k_max: int,
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT,
    ass_by_k: list[set[frozenset[int]]] | None = None,
) -> PersistenceResult:
    """Verify Ass(I^k) is contained in Ass(I^(k+1)) for k < k_max."""
    _require_proper(I)
    asses = ass_by_k if ass_by_k is not None else _ass_by_k(I, k_max, divisor_limit)
    for k in range(1, len(asses)):
        lost = asses[k - 1] - asses[k]
        if lost:
            worst = min(lost, key=lambda f: (len(f), sorted(f)))
            return PersistenceResult(
                False, (k, worst), tuple(frozenset(a) for a in asses)
            )
    return PersistenceResult(True, None, tuple(frozenset(a) for a in asses))


@dataclass(frozen=True)
class StrongPersistenceResult:
    holds: bool
    first_failure: int | None


def strong_persistence_check(
    I: MonomialIdeal, k_max: int
) -> StrongPersistenceResult:
    """Check the ideal identity I^(k+1) : I = I^k for k = 1..k_max.

    Whether this always holds for complementary edge ideals is open; the
    result is recorded as an observation, never asserted.
    """
    _require_proper(I)
    Ik = I
    for k in range(1, k_max + 1):
        Ik1 = multiply(Ik, I)
        if colon_ideal(Ik1, I) != Ik:
            return StrongPersistenceResult(False, k)
        Ik = Ik1
    return StrongPersistenceResult(True, None)


# ---------------------------------------------------------------------------
# sweep harness


ALL_CHECKS = (
    "ass",
    "persistence",
    "entry-bound",
    "localization",
    "reg",
    "depth-monotone",
    "depth-stable",
    "v",
    "symbolic",
    "linear",
    "betti-field-independence",
    "strong-persistence",
)

_INFORMATIONAL_CHECKS = frozenset({"strong-persistence"})


@dataclass(frozen=True)
class SweepConfig:
    k_max: int = 3
    checks: tuple[str, ...] = ALL_CHECKS
    primes: tuple[int, ...] = (2, 3)
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT
    lq_limit: int = 24
    budget_ms: float | None = None
    cache_dir: str | None = None


@dataclass
class VerificationReport:
    graph: Graph
    per_k: dict[int, dict] = field(default_factory=dict)
    summary: dict[str, bool | None] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)
    timings_ms: dict[str, float] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def failed_checks(self) -> list[str]:
        return sorted(k for k, v in self.summary.items() if v is False)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "graph": {
                "n": self.graph.n,
                "edges": [list(e) for e in self.graph.edge_list()],
                "graph6": to_graph6(self.graph),
            },
            "per_k": {str(k): v for k, v in sorted(self.per_k.items())},
            "summary": self.summary,
            "skipped": self.skipped,
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
            "details": self.details,
        }


def _fmt_primes(primes: Iterable[frozenset[int]]) -> list[list[int]]:
    return sorted(
        (sorted(i + 1 for i in f) for f in primes), key=lambda s: (len(s), s)
    )


class _Budget:
    def __init__(self, budget_ms: float | None):
        self.start = time.perf_counter()
        self.budget_ms = budget_ms

    def check(self) -> None:
        if self.budget_ms is None:
            return
        if (time.perf_counter() - self.start) * 1000.0 > self.budget_ms:
            raise _BudgetExceeded()

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0


class _BudgetExceeded(Exception):
    pass


class _GraphState:
    """Lazily computed shared state for one sweep graph."""

    def __init__(self, g: Graph, cfg: SweepConfig, cache: DiskCache | None):
        self.g = g
        self.cfg = cfg
        self.cache = cache
        self.ideal = complementary_edge_ideal(g)
        self._powers: list[MonomialIdeal] = [self.ideal]
        self._asses: list[set[frozenset[int]]] | None = None
        self._cls = None
        self._invariants: dict[int, object] = {}

    def power(self, k: int) -> MonomialIdeal:
        while len(self._powers) < k:
            self._powers.append(multiply(self._powers[-1], self.ideal))
        return self._powers[k - 1]

    @property
    def cls(self):
        if self._cls is None:
            self._cls = classify_big_degree(self.ideal)
        return self._cls

    def asses(self) -> list[set[frozenset[int]]]:
        if self._asses is None:
            out = []
            for k in range(1, self.cfg.k_max + 1):
                Ik = self.power(k)
                cached = None
                key = None
                if self.cache is not None:
                    key = cache_key(
                        Ik, "ass_oracle", {"divisor_limit": self.cfg.divisor_limit}
                    )
                    cached = self.cache.get(key)
                if cached is not None:
                    out.append({frozenset(f) for f in cached})
                else:
                    found = ass_oracle(Ik, self.cfg.divisor_limit)
                    if self.cache is not None:
                        self.cache.put(key, [sorted(f) for f in found])
                    out.append(found)
            self._asses = out
        return self._asses

    def invariants(self, k: int):
        if k not in self._invariants:
            Ik = self.power(k)
            p = self.cfg.primes[0]
            cached = None
            key = None
            if self.cache is not None:
                key = cache_key(Ik, "reg_pd_depth", {"p": p})
                cached = self.cache.get(key)
            if cached is not None:
                from .resolution import HomologicalInvariants

                self._invariants[k] = HomologicalInvariants(**cached)
            else:
                inv = reg_pd_depth(Ik, p)
                if self.cache is not None:
                    self.cache.put(
                        key,
                        {
                            "regularity": inv.regularity,
                            "pd_quotient": inv.pd_quotient,
                            "depth": inv.depth,
                            "depth_support": inv.depth_support,
                        },
                    )
                self._invariants[k] = inv
        return self._invariants[k]


def _check_ass(st: _GraphState, rpt: VerificationReport) -> bool:
    g, cfg = st.g, st.cfg
    asses = st.asses()
    first = formulas.ass_first_power(g)
    stable = formulas.ass_infinity(g).stable_set
    ok = asses[0] == first
    for k in range(1, cfg.k_max + 1):
        entry = rpt.per_k.setdefault(k, {})
        entry["ass_oracle"] = _fmt_primes(asses[k - 1])
        if k == 1:
            entry["ass_formula_match"] = asses[0] == first
        elif k >= g.n - 2:
            match = asses[k - 1] == stable
            entry["ass_formula_match"] = match
            ok = ok and match
        else:
            entry["ass_formula_match"] = None
    rpt.details["ass"] = {
        "first_power_formula": _fmt_primes(first),
        "stable_formula": _fmt_primes(stable),
    }
    return ok


def _check_persistence(st: _GraphState, rpt: VerificationReport) -> bool:
    res = persistence_check(
        st.ideal, st.cfg.k_max, st.cfg.divisor_limit, ass_by_k=st.asses()
    )
    if not res.holds:
        k, prime = res.first_violation
        rpt.details["persistence"] = {
            "violation_k": k,
            "lost_prime": sorted(i + 1 for i in prime),
        }
    return res.holds


def _check_entry_bound(st: _GraphState, rpt: VerificationReport) -> bool:
    pred = formulas.ass_infinity(st.g)
    asses = st.asses()
    rows = []
    ok = True
    for F in sorted(pred.stable_set, key=lambda f: (len(f), sorted(f))):
        if len(F) < 2:
            continue
        bound = pred.entry_bounds[F]
        observed = next(
            (k for k in range(1, st.cfg.k_max + 1) if F in asses[k - 1]), None
        )
        rows.append(
            {
                "prime": sorted(i + 1 for i in F),
                "bound": bound,
                "observed_entry": observed,
            }
        )
        if bound <= st.cfg.k_max and (observed is None or observed > bound):
            ok = False
    rpt.details["entry-bound"] = rows
    return ok


def _check_localization(st: _GraphState, rpt: VerificationReport) -> bool:
    g = st.g
    mismatches = []
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            lhs = formulas.localization_formula(g, combo)
            rhs = localize(st.ideal, combo)
            if lhs != rhs:
                mismatches.append(sorted(i + 1 for i in combo))
    if mismatches:
        rpt.details["localization"] = {"mismatched_subsets": mismatches}
    return not mismatches


def _check_reg(st: _GraphState, rpt: VerificationReport) -> bool:
    ok = True
    for k in range(1, st.cfg.k_max + 1):
        oracle = st.invariants(k).regularity
        predicted = formulas.reg_closed_form(st.cls, k)
        entry = rpt.per_k.setdefault(k, {})
        entry["reg_oracle"] = oracle
        entry["reg_formula"] = predicted
        ok = ok and oracle == predicted
    return ok


def _check_depth_monotone(st: _GraphState, rpt: VerificationReport) -> bool:
    depths = []
    for k in range(1, st.cfg.k_max + 1):
        d = st.invariants(k).depth
        rpt.per_k.setdefault(k, {})["depth_oracle"] = d
        depths.append(d)
    return all(depths[i] >= depths[i + 1] for i in range(len(depths) - 1))


def _check_depth_stable(st: _GraphState, rpt: VerificationReport) -> bool | None:
    if st.cls.case not in (BigDegreeCase.COMPLEMENTARY_EDGE, BigDegreeCase.MIXED):
        rpt.skipped["depth-stable"] = "no stable-depth formula for this case"
        return None
    stable_depth, dstab_bound = formulas.depth_and_dstab_closed_form(st.cls)
    if st.cfg.k_max < dstab_bound:
        rpt.skipped["depth-stable"] = (
            f"needs k_max >= {dstab_bound} to reach the stabilized value"
        )
        return None
    observed = st.invariants(dstab_bound).depth
    rpt.details["depth-stable"] = {
        "stable_depth_formula": stable_depth,
        "depth_at_dstab_bound": observed,
        "dstab_bound": dstab_bound,
    }
    return observed == stable_depth


def _check_v(st: _GraphState, rpt: VerificationReport) -> bool:
    g = st.g
    ok = True
    for k in range(1, st.cfg.k_max + 1):
        wit = v_oracle(st.power(k), st.cfg.divisor_limit)
        predicted = formulas.v_closed_form(g, k)
        entry = rpt.per_k.setdefault(k, {})
        entry["v_oracle"] = wit.v
        entry["v_formula"] = predicted
        lower = (g.n - 2) * k - 1
        ok = ok and wit.v == predicted and wit.v >= lower
    return ok


def _check_symbolic(st: _GraphState, rpt: VerificationReport) -> bool:
    predicted = formulas.symbolic_equals_ordinary_class(st.g)
    actual = symbolic_power(st.ideal, 2) == st.power(2)
    rpt.details["symbolic"] = {
        "class_predicate": predicted,
        "second_power_symbolic_equals_ordinary": actual,
    }
    return predicted == actual


def _check_linear(st: _GraphState, rpt: VerificationReport) -> bool:
    predicted = formulas.linear_powers_predicate(st.cls)
    p = st.cfg.primes[0]
    per_k = {}
    ok = True
    for k in range(1, min(st.cfg.k_max, 3) + 1):
        Ik = st.power(k)
        lq, _ = has_linear_quotients(Ik, st.cfg.lq_limit)
        cl = is_componentwise_linear(Ik, p)
        per_k[k] = {"linear_quotients": lq, "componentwise_linear": cl}
        ok = ok and lq == predicted and cl == predicted
    rpt.details["linear"] = {"predicted": predicted, "per_k": per_k}
    return ok


def _check_betti_field_independence(
    st: _GraphState, rpt: VerificationReport
) -> bool:
    if len(st.cfg.primes) < 2:
        rpt.skipped["betti-field-independence"] = "needs at least two primes"
        return None
    ok = True
    for k in range(1, min(st.cfg.k_max, 2) + 1):
        Ik = st.power(k)
        tables = [betti_table(Ik, p) for p in st.cfg.primes]
        same = all(t.entries == tables[0].entries for t in tables[1:])
        ok = ok and same
        if not same:
            rpt.details.setdefault("betti-field-independence", {})[str(k)] = {
                str(p): t.to_json_dict() for p, t in zip(st.cfg.primes, tables)
            }
    return ok


def _check_strong_persistence(st: _GraphState, rpt: VerificationReport) -> None:
    res = strong_persistence_check(st.ideal, st.cfg.k_max)
    rpt.details["strong-persistence"] = {
        "observed_holds": res.holds,
        "first_failure_k": res.first_failure,
    }
    rpt.skipped["strong-persistence"] = "informational: open question, not asserted"
    return None


_CHECK_FUNCS = {
    "ass": _check_ass,
    "persistence": _check_persistence,
    "entry-bound": _check_entry_bound,
    "localization": _check_localization,
    "reg": _check_reg,
    "depth-monotone": _check_depth_monotone,
    "depth-stable": _check_depth_stable,
    "v": _check_v,
    "symbolic": _check_symbolic,
    "linear": _check_linear,
    "betti-field-independence": _check_betti_field_independence,
    "strong-persistence": _check_strong_persistence,
}


def normalize_checks(names: Iterable[str]) -> tuple[str, ...]:
    requested = list(names)
    if "all" in requested:
        return ALL_CHECKS
    unknown = [c for c in requested if c not in _CHECK_FUNCS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {ALL_CHECKS}")
    return tuple(c for c in ALL_CHECKS if c in requested)


def run_graph_checks(
    g: Graph, cfg: SweepConfig, cache: DiskCache | None = None
) -> VerificationReport:
    """Run the selected checks on one graph, degrading to per-check skips
    on limit or budget overruns rather than aborting."""
    rpt = VerificationReport(graph=g)
    budget = _Budget(cfg.budget_ms)
    if cache is None and cfg.cache_dir:
        cache = DiskCache(cfg.cache_dir)
    st = _GraphState(g, cfg, cache)
    for name in normalize_checks(cfg.checks):
        t0 = time.perf_counter()
        try:
            budget.check()
            rpt.summary[name] = _CHECK_FUNCS[name](st, rpt)
        except _BudgetExceeded:
            rpt.summary[name] = None
            rpt.skipped[name] = f"budget of {cfg.budget_ms} ms exceeded"
        except LimitExceededError as exc:
            rpt.summary[name] = None
            rpt.skipped[name] = f"limit: {exc}"
        rpt.timings_ms[name] = (time.perf_counter() - t0) * 1000.0
    return rpt


def _sweep_worker(args: tuple[Graph, SweepConfig]) -> VerificationReport:
    g, cfg = args
    return run_graph_checks(g, cfg)


def sweep(
    n_max: int,
    cfg: SweepConfig | None = None,
    n_min: int | None = None,
    workers: int = 1,
    census_limit: int = 6,
) -> list[VerificationReport]:
    """Run the selected checks over every labeled graph with at least one
    edge on n_min..n_max vertices, in deterministic census order."""
    cfg = cfg or SweepConfig()
    n_min = n_max if n_min is None else n_min
    if n_min < 3:
        raise ValueError("sweep needs n >= 3 (smaller graphs give improper ideals)")
    graphs = [
        g
        for n in range(n_min, n_max + 1)
        for g in enumerate_labeled_graphs(n, limit=census_limit)
        if g.edges
    ]
    if workers <= 1:
        return [run_graph_checks(g, cfg) for g in graphs]
    import multiprocessing as mp

    with mp.get_context("fork").Pool(workers) as pool:
        return list(pool.imap(_sweep_worker, ((g, cfg) for g in graphs), chunksize=8))


# ---------------------------------------------------------------------------
# report output


def write_reports_jsonl(reports: Iterable[VerificationReport], path) -> None:
    with open(path, "w") as fh:
        for rpt in reports:
            fh.write(json.dumps(rpt.to_json_dict(), sort_keys=True))
            fh.write("\n")


def markdown_summary(reports: list[VerificationReport]) -> str:
    """Aggregate pass/fail/skip counts per check, plus a failure listing."""
    counts: dict[str, list[int]] = {}
    failures: list[tuple[str, str, str]] = []
    for rpt in reports:
        for name, outcome in rpt.summary.items():
            row = counts.setdefault(name, [0, 0, 0])
            if outcome is True:
                row[0] += 1
            elif outcome is False:
                row[1] += 1
                detail = json.dumps(rpt.details.get(name, {}), sort_keys=True)
                if len(detail) > 120:
                    detail = detail[:117] + "..."
                failures.append((to_graph6(rpt.graph), name, detail))
            else:
                row[2] += 1
    lines = [
        "# Sweep summary",
        "",
        f"Graphs checked: {len(reports)}",
        "",
        "| check | pass | fail | skipped |",
        "|---|---|---|---|",
    ]
    for name in ALL_CHECKS:
        if name in counts:
            p, f, s = counts[name]
            lines.append(f"| {name} | {p} | {f} | {s} |")
    if failures:
        lines += ["", "## Failures", ""]
        lines += [f"- `{g6}` {name}: {detail}" for g6, name, detail in failures]
    return "\n".join(lines) + "\n"


def sweep_passed(reports: list[VerificationReport]) -> bool:
    """True iff every non-skipped, non-informational check passed."""
    return all(
        outcome is not False
        for rpt in reports
        for name, outcome in rpt.summary.items()
        if name not in _INFORMATIONAL_CHECKS
    )
