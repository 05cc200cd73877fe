"""Color change rule with leaks, and the adversarial leaky-forcing check.

A colored vertex that is not leaky forces its unique uncolored neighbor.
Leaks are fixed before play starts and may sit on any vertex, colored or not;
a leaky vertex can still be colored, it just never forces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, SetLike, VertexSet, members, popcount


@dataclass(frozen=True)
class ForcingTrace:
    initial: VertexSet
    leaks: VertexSet
    events: tuple[tuple[int, int], ...]
    final: VertexSet

    @property
    def forcers(self) -> VertexSet:
        m = 0
        for f, _ in self.events:
            m |= 1 << f
        return m

    def to_json(self) -> dict:
        return {
            "initial": members(self.initial),
            "leaks": members(self.leaks),
            "events": [[f, u] for f, u in self.events],
            "final": members(self.final),
        }


@dataclass(frozen=True)
class LeakCertificate:
    """A leak placement under which the candidate set stalls."""

    leaks: VertexSet
    stalled: VertexSet

    def to_json(self) -> dict:
        return {"leaks": members(self.leaks), "stalled": members(self.stalled)}

    def replays(self, g: Graph, b: SetLike) -> bool:
        final = closure(g, b, self.leaks).final
        return self.stalled != 0 and g.vertices & ~final == self.stalled


@dataclass
class LeakCheck:
    """Outcome of :func:`is_leaky_forcing_set`; truthy iff the set survives every placement."""

    ok: bool
    certificate: LeakCertificate | None = None
    leak_sets_tested: int = 0

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"result": "ok", "leak_sets_tested": self.leak_sets_tested}
        return {
            "result": "fail",
            "certificate": self.certificate.to_json(),
            "leak_sets_tested": self.leak_sets_tested,
        }


def propagate(adj: tuple[int, ...], colored: int, leaky: int) -> tuple[int, int]:
    """Run the rule to its fixpoint; returns ``(final colored set, forcers used)``.

    Candidate forcers are taken lowest id first from a pending mask.
    """
    pending = colored & ~leaky
    forcers = 0
    while pending:
        low = pending & -pending
        pending ^= low
        v = low.bit_length() - 1
        unc = adj[v] & ~colored
        if unc and not unc & (unc - 1):
            colored |= unc
            forcers |= low
            u = unc.bit_length() - 1
            pending |= ((adj[u] & colored) | unc) & ~leaky & ~low
    return colored, forcers


def closure(g: Graph, b: SetLike, leaks: SetLike = 0) -> ForcingTrace:
    b = g.check_set(b)
    leaks = g.check_set(leaks)
    adj = g.adj
    colored = b
    pending = b & ~leaks
    events = []
    while pending:
        low = pending & -pending
        pending ^= low
        v = low.bit_length() - 1
        unc = adj[v] & ~colored
        if unc and not unc & (unc - 1):
            u = unc.bit_length() - 1
            colored |= unc
            events.append((v, u))
            pending |= ((adj[u] & colored) | unc) & ~leaks & ~low
    return ForcingTrace(b, leaks, tuple(events), colored)


def replay(g: Graph, trace: ForcingTrace) -> bool:
    """Check every event of ``trace`` against the rule, in order."""
    colored = trace.initial
    for f, u in trace.events:
        if trace.leaks >> f & 1 or not colored >> f & 1:
            return False
        unc = g.adj[f] & ~colored
        if unc != 1 << u:
            return False
        colored |= unc
    return colored == trace.final


def is_zero_forcing_set(g: Graph, b: SetLike) -> bool:
    b = g.check_set(b)
    return propagate(g.adj, b, 0)[0] == g.vertices


def mandatory_vertices(g: Graph, leaks: int) -> VertexSet:
    """Vertices of degree at most ``leaks``; every leaky forcing set contains them."""
    m = 0
    for v, row in enumerate(g.adj):
        if popcount(row) <= leaks:
            m |= 1 << v
    return m


class _Search:
    def __init__(self, g: Graph, b: int):
        self.adj = g.adj
        self.full = g.vertices
        self.b = b
        self.evaluations = 0

    def fails(self, leaks: int) -> bool:
        self.evaluations += 1
        return propagate(self.adj, self.b, leaks)[0] != self.full

    def find(self, start: int, budget: int, allowed: int) -> int | None:
        """A failing leak set ``L`` with ``start <= L <= start | allowed`` and at most
        ``budget`` extra leaks, or None.

        A leak-free trace stays valid when leaks land only on vertices that
        never forced in it, so any failing extension must hit one of its
        forcers. Branching on those covers every placement.
        """
        seen = set()
        stack = [(start, budget)]
        while stack:
            leaks, k = stack.pop()
            if leaks in seen:
                continue
            seen.add(leaks)
            self.evaluations += 1
            final, forcers = propagate(self.adj, self.b, leaks)
            if final != self.full:
                return leaks
            if k == 0:
                continue
            branch = forcers & allowed & ~leaks
            for f in reversed(members(branch)):
                stack.append((leaks | 1 << f, k - 1))
        return None

    def least_failing(self, ell: int) -> int:
        """Lexicographically least failing leak set of size exactly ``ell``.

        Caller guarantees one exists.
        """
        n = self.full.bit_length()
        chosen = 0
        last = -1
        for pos in range(ell):
            need = ell - pos - 1
            for v in range(last + 1, n - need):
                trial = chosen | 1 << v
                above = self.full & ~((1 << (v + 1)) - 1)
                if self.find(trial, need, above) is not None:
                    chosen, last = trial, v
                    break
            else:
                raise AssertionError("no failing leak set found during canonicalization")
        return chosen


def is_leaky_forcing_set(
    g: Graph,
    b: SetLike,
    leaks: int,
    method: str = "branch",
    canonical: bool = True,
) -> LeakCheck:
    """Decide whether ``b`` forces all of ``g`` under every placement of ``leaks`` leaks.

    ``method="branch"`` explores only placements that hit a forcer of the
    current trace; ``method="exhaustive"`` runs the closure for all
    C(n, leaks) placements in lexicographic order. Both return the
    lexicographically least failing placement as the certificate when
    ``canonical`` is set.
    """
    b = g.check_set(b)
    if leaks < 0 or leaks > g.n:
        raise GraphError(f"leak count must be in 0..{g.n}, got {leaks}")
    search = _Search(g, b)
    if method == "exhaustive":
        for combo in combinations(range(g.n), leaks):
            lmask = sum(1 << v for v in combo)
            if search.fails(lmask):
                return _failure(g, b, lmask, search.evaluations)
        return LeakCheck(True, None, search.evaluations)
    if method != "branch":
        raise ValueError(f"unknown method {method!r}")
    found = search.find(0, leaks, g.vertices)
    if found is None:
        return LeakCheck(True, None, search.evaluations)
    if canonical:
        found = search.least_failing(leaks)
    else:
        found = _pad(found, leaks, g.vertices)
    return _failure(g, b, found, search.evaluations)


def _pad(lmask: int, size: int, universe: int) -> int:
    spare = universe & ~lmask
    while popcount(lmask) < size:
        low = spare & -spare
        lmask |= low
        spare ^= low
    return lmask


def _failure(g: Graph, b: int, lmask: int, evaluations: int) -> LeakCheck:
    final = propagate(g.adj, b, lmask)[0]
    return LeakCheck(False, LeakCertificate(lmask, g.vertices & ~final), evaluations)
