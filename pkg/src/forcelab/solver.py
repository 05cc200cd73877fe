"""Exact leaky forcing numbers by cardinality-ascending subset search."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb

from .forcing import _Search, mandatory_vertices
from .graph import Graph, GraphError, VertexSet, members, popcount

DEFAULT_BUDGET_EVALS = 10**9
DEFAULT_BUDGET_SECS = 600.0
CHUNK = 1024


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its budget; no partial answer is given."""

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass
class SolveReport:
    graph: str
    leaks: int
    z_value: int | None
    witness: VertexSet | None
    lower: int
    upper: int
    candidates_tested: int = 0
    leak_sets_tested: int = 0
    elapsed: float = 0.0
    mandatory: VertexSet = 0

    @property
    def exact(self) -> bool:
        return self.z_value is not None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "graph": self.graph,
            "leaks": self.leaks,
            "status": "exact" if self.exact else "unknown",
            "z_value": self.z_value,
            "witness": members(self.witness) if self.witness is not None else None,
            "bounds": [self.lower, self.upper],
            "mandatory": members(self.mandatory),
            "candidates_tested": self.candidates_tested,
            "leak_sets_tested": self.leak_sets_tested,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


_worker_graph: Graph | None = None


def _init_worker(g: Graph) -> None:
    global _worker_graph
    _worker_graph = g


def _scan(g: Graph, ell: int, base: int, chunk: list[tuple[int, ...]], stop_at_first: bool):
    """Check a chunk of candidates; returns per-candidate ``(passed, evaluations)``."""
    out = []
    for combo in chunk:
        b = base
        for v in combo:
            b |= 1 << v
        search = _Search(g, b)
        passed = search.find(0, ell, g.vertices) is None
        out.append((passed, search.evaluations))
        if passed and stop_at_first:
            break
    return out


def _scan_in_worker(ell, base, chunk, stop_at_first):
    return _scan(_worker_graph, ell, base, chunk, stop_at_first)


def _chunks(it, size):
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


class _Runner:
    """Evaluates candidate chunks serially or on a process pool, yielding results in order."""

    def __init__(self, g: Graph, workers: int):
        self.g = g
        self.workers = workers
        self.pool = None

    def __enter__(self):
        if self.workers > 1:
            self.pool = ProcessPoolExecutor(self.workers, initializer=_init_worker, initargs=(self.g,))
        return self

    def __exit__(self, *exc):
        if self.pool is not None:
            self.pool.shutdown(cancel_futures=True)

    def results(self, ell, base, chunks, stop_at_first):
        if self.pool is None:
            for chunk in chunks:
                yield chunk, _scan(self.g, ell, base, chunk, stop_at_first)
            return
        window = []
        for chunk in chunks:
            window.append((chunk, self.pool.submit(_scan_in_worker, ell, base, chunk, stop_at_first)))
            if len(window) >= 2 * self.workers:
                chunk0, fut = window.pop(0)
                yield chunk0, fut.result()
        for chunk0, fut in window:
            yield chunk0, fut.result()


def min_leaky_forcing(
    g: Graph,
    leaks: int,
    budget_evals: int | None = DEFAULT_BUDGET_EVALS,
    budget_secs: float | None = DEFAULT_BUDGET_SECS,
    workers: int = 1,
    use_mandatory: bool = True,
) -> SolveReport:
    """Compute the ``leaks``-leaky forcing number of ``g`` exactly.

    Candidates are all supersets of the mandatory vertices, visited by size
    and then lexicographically, so the first passing set is the
    lexicographically least minimum one. Statistics are accumulated in
    candidate order, which keeps them identical for any worker count.
    If a budget runs out the report carries bounds and ``z_value=None``.
    """
    if leaks < 0:
        raise GraphError(f"leak count must be nonnegative, got {leaks}")
    start = time.perf_counter()
    n = g.n
    ell = min(leaks, n)
    base = mandatory_vertices(g, ell) if use_mandatory else 0
    free = members(g.vertices & ~base)
    report = SolveReport(g.name or f"graph(n={n})", leaks, None, None, 0, n, mandatory=base)
    lo = max(popcount(base), 1) if n else 0
    report.lower = lo
    if n == 0:
        report.z_value, report.witness = 0, 0
        return report
    with _Runner(g, workers) as runner:
        for c in range(lo, n + 1):
            report.lower = c
            candidates = combinations(free, c - popcount(base))
            for chunk, results in runner.results(ell, base, _chunks(candidates, CHUNK), True):
                for combo, (passed, evals) in zip(chunk, results):
                    report.candidates_tested += 1
                    report.leak_sets_tested += evals
                    if passed:
                        w = base
                        for v in combo:
                            w |= 1 << v
                        report.z_value = report.upper = c
                        report.witness = w
                        report.elapsed = time.perf_counter() - start
                        return report
                    if budget_evals is not None and report.leak_sets_tested > budget_evals:
                        report.elapsed = time.perf_counter() - start
                        return report
                if budget_secs is not None and time.perf_counter() - start > budget_secs:
                    report.elapsed = time.perf_counter() - start
                    return report
    raise AssertionError("the full vertex set always passes")


def enumerate_minimum_sets(
    g: Graph,
    leaks: int,
    z: int,
    max_candidates: int | None = 5_000_000,
    workers: int = 1,
) -> list[VertexSet]:
    """Every ``leaks``-leaky forcing set of size ``z``, in lexicographic order."""
    ell = min(leaks, g.n)
    base = mandatory_vertices(g, ell)
    free = members(g.vertices & ~base)
    k = z - popcount(base)
    if k < 0:
        return []
    total = comb(len(free), k)
    if max_candidates is not None and total > max_candidates:
        raise BudgetExceeded(f"{total} candidates of size {z} exceed the cap of {max_candidates}")
    found = []
    with _Runner(g, workers) as runner:
        for chunk, results in runner.results(ell, base, _chunks(combinations(free, k), CHUNK), False):
            for combo, (passed, _) in zip(chunk, results):
                if passed:
                    found.append(base | sum(1 << v for v in combo))
    return found


def _require_exact(g: Graph, leaks: int, **kw) -> SolveReport:
    rep = min_leaky_forcing(g, leaks, **kw)
    if not rep.exact:
        raise BudgetExceeded(
            f"Z_({leaks}) of {rep.graph} not resolved within budget", rep.lower, rep.upper
        )
    return rep


@dataclass
class ContainmentReport:
    graph: str
    leaks: int
    base_leaks: int
    quantifier: str
    z_base: int
    z_leaks: int
    answer: bool
    witness_pair: tuple[VertexSet, VertexSet] | None
    count_base: int
    count_leaks: int

    def to_json(self) -> dict:
        pair = None
        if self.witness_pair is not None:
            pair = {"base": members(self.witness_pair[0]), "leaky": members(self.witness_pair[1])}
        return {
            "graph": self.graph,
            "leaks": self.leaks,
            "base_leaks": self.base_leaks,
            "quantifier": self.quantifier,
            "z_base": self.z_base,
            "z_leaks": self.z_leaks,
            "answer": "yes" if self.answer else "no",
            "witness_pair": pair,
            "minimum_sets": {"base": self.count_base, "leaky": self.count_leaks},
        }


def containment_question(
    g: Graph,
    leaks: int,
    base_leaks: int = 0,
    quantifier: str = "some",
    workers: int = 1,
    max_candidates: int | None = 5_000_000,
) -> ContainmentReport:
    """Is some minimum ``leaks``-leaky set a superset of a minimum ``base_leaks``-leaky set?

    With ``quantifier="all"`` the question becomes whether every minimum
    ``leaks``-leaky set contains one; the witness is then the lexicographically
    least pair found for the first leaky set.
    """
    if quantifier not in ("some", "all"):
        raise ValueError(f"quantifier must be 'some' or 'all', got {quantifier!r}")
    if base_leaks > leaks:
        raise ValueError("base_leaks must not exceed leaks")
    z0 = _require_exact(g, base_leaks, workers=workers).z_value
    zl = _require_exact(g, leaks, workers=workers).z_value
    lows = enumerate_minimum_sets(g, base_leaks, z0, max_candidates, workers)
    highs = enumerate_minimum_sets(g, leaks, zl, max_candidates, workers)

    def contained(high):
        for low in lows:
            if low & ~high == 0:
                return low
        return None

    pair = None
    if quantifier == "some":
        for high in highs:
            low = contained(high)
            if low is not None:
                pair = (low, high)
                break
        answer = pair is not None
    else:
        answer = True
        for high in highs:
            low = contained(high)
            if low is None:
                answer = False
                break
            if pair is None:
                pair = (low, high)
        if not answer:
            pair = None
    return ContainmentReport(
        g.name, leaks, base_leaks, quantifier, z0, zl, answer, pair, len(lows), len(highs)
    )


@dataclass
class ChainReport:
    graph: str
    max_leaks: int
    z_values: list[int]
    counts: list[int]
    exists: bool
    strict_exists: bool
    chain: list[VertexSet] | None
    equal_levels: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "max_leaks": self.max_leaks,
            "z_values": self.z_values,
            "minimum_set_counts": self.counts,
            "nested_chain_exists": self.exists,
            "strict_chain_exists": self.strict_exists,
            "equal_consecutive_levels": self.equal_levels,
            "chain": [members(b) for b in self.chain] if self.chain is not None else None,
        }


def nested_chain(
    g: Graph,
    k: int,
    workers: int = 1,
    max_candidates: int | None = 5_000_000,
) -> ChainReport:
    """Search for minimum sets ``B_0 <= B_1 <= ... <= B_k``, one per leak count.

    Strict inclusion is only possible where consecutive forcing numbers
    differ; ``equal_levels`` lists each ``l`` with ``Z_(l) == Z_(l+1)``.
    """
    zs, levels = [], []
    for ell in range(k + 1):
        z = _require_exact(g, ell, workers=workers).z_value
        zs.append(z)
        levels.append(enumerate_minimum_sets(g, ell, z, max_candidates, workers))
    equal = [ell for ell in range(k) if zs[ell] == zs[ell + 1]]

    def extend(prefix):
        if len(prefix) == k + 1:
            return prefix
        prev = prefix[-1] if prefix else 0
        for b in levels[len(prefix)]:
            if prev & ~b == 0:
                got = extend(prefix + [b])
                if got is not None:
                    return got
        return None

    chain = extend([])
    exists = chain is not None
    return ChainReport(
        g.name, k, zs, [len(lv) for lv in levels], exists, exists and not equal, chain, equal
    )
