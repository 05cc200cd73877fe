"""Reproduction of the checkable leaky-forcing claims.

Expected values live in the claim builders below, one per result. Each
claim is an independent job; the runner orders results by claim id so the
JSON is the same for any worker count.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import ceil, comb

from .families import (
    complete_bipartite,
    generalized_petersen,
    half_cube_set,
    hypercube,
    prism_inner,
    random_tree,
    wheel,
)
from .forcing import is_leaky_forcing_set
from .graph import Graph, members
from .solver import containment_question, min_leaky_forcing, nested_chain

PASS, FAIL, SKIPPED = "pass", "fail", "skipped-beyond-budget"

# Deterministic budget for claims reported as beyond desk scale: enough to
# push the lower bound past the trivial one, far short of a full search.
PROBE_EVALS = 50_000


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    expected: str
    computed: str
    status: str
    certificate: dict | None = None

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "certificate": self.certificate,
        }


def _solve_cert(rep) -> dict:
    return {
        "witness": members(rep.witness),
        "mandatory": members(rep.mandatory),
        "candidates_tested": rep.candidates_tested,
        "leak_sets_tested": rep.leak_sets_tested,
    }


def _check_cert(g: Graph, b: int, check, method: str) -> dict:
    cert = {"set": members(b), "method": method, "leak_sets_tested": check.leak_sets_tested}
    if not check.ok:
        cert["leak_certificate"] = check.certificate.to_json()
    return cert


def _equality(claim_id: str, g: Graph, leaks: int, expected: int) -> ClaimResult:
    rep = min_leaky_forcing(g, leaks, budget_secs=None)
    status = PASS if rep.z_value == expected else FAIL
    return ClaimResult(
        claim_id,
        f"Z_({leaks})({g.name}) = {expected}",
        f"Z_({leaks})({g.name}) = {rep.z_value}",
        status,
        _solve_cert(rep),
    )


# -- hypercubes ---------------------------------------------------------------


def verify_halfcube(d: int, method: str = "branch") -> ClaimResult:
    """The half-cube is a (d-2)-leaky forcing set of Q_d."""
    if not 2 <= d <= 7:
        raise ValueError(f"d must be in 2..7, got {d}")
    g = hypercube(d)
    b = half_cube_set(d)
    check = is_leaky_forcing_set(g, b, d - 2, method=method)
    cert = _check_cert(g, b, check, method)
    cert["placements"] = comb(g.n, d - 2)
    return ClaimResult(
        f"thm1-d{d}",
        f"half-cube ({1 << (d - 1)} vertices) is a {d - 2}-leaky forcing set of Q{d}",
        "ok" if check.ok else "fails",
        PASS if check.ok else FAIL,
        cert,
    )


def _halfcube_skipped(d: int) -> ClaimResult:
    return ClaimResult(
        f"thm1-d{d}",
        f"half-cube ({1 << (d - 1)} vertices) is a {d - 2}-leaky forcing set of Q{d}",
        "not run (enable the d=7 check explicitly)",
        SKIPPED,
        {"placements": comb(1 << d, d - 2)},
    )


def _minimality_skipped(claim_id: str, d: int) -> ClaimResult:
    g = hypercube(d)
    rep = min_leaky_forcing(g, d - 2, budget_evals=PROBE_EVALS, budget_secs=None)
    upper = 1 << (d - 1)
    return ClaimResult(
        claim_id,
        f"Z_({d - 2})(Q{d}) = {upper}",
        f"bounds [{rep.lower}, {upper}] after {rep.leak_sets_tested} evaluations",
        SKIPPED,
        {"lower": rep.lower, "upper": upper, "candidates_tested": rep.candidates_tested},
    )


def verify_cube_values() -> list[ClaimResult]:
    out = [
        _equality("Z1-Q3", hypercube(3), 1, 4),
        _equality("Z2-Q4", hypercube(4), 2, 8),
    ]
    suff = verify_halfcube(5)
    out.append(
        ClaimResult(
            "Z3-Q5-sufficiency",
            "half-cube of Q5 (16 vertices) is a 3-leaky forcing set",
            suff.computed,
            suff.status,
            suff.certificate,
        )
    )
    out.append(_minimality_skipped("Z3-Q5-minimality", 5))
    return out


def verify_conjecture(d_max: int = 7) -> list[ClaimResult]:
    """Z_(d-2)(Q_d) = 2^(d-1): exact for d <= 4, bounds only above."""
    out = []
    for d in range(2, d_max + 1):
        cid = f"conj-d{d}"
        if d <= 4:
            out.append(_equality(cid, hypercube(d), d - 2, 1 << (d - 1)))
        else:
            out.append(_minimality_skipped(cid, d))
    return out


# -- prisms ---------------------------------------------------------------------


def prism_formula(n: int, leaks: int) -> tuple[str, int]:
    """``("=", v)`` or ``("<=", v)`` for Z_(leaks)(GP(n,1))."""
    if leaks >= 3:
        return "=", 2 * n
    if leaks in (0, 1):
        return "=", 3 if n == 3 else 4
    if n == 3:
        return "=", 4
    if n == 4:
        return "<=", 6
    return "<=", n


def prism_construction(n: int) -> int:
    """The 2-leaky sets used for the upper bounds: X plus u_1, u_2 at n=4, X above."""
    x = prism_inner(n)
    return x | 0b11 if n == 4 else x


def _prism_bound(claim_id: str, n: int, bound: int, exact: bool) -> ClaimResult:
    g = generalized_petersen(n, 1)
    b = prism_construction(n)
    check = is_leaky_forcing_set(g, b, 2)
    cert = _check_cert(g, b, check, "branch")
    computed = f"construction of size {len(members(b))} {'ok' if check.ok else 'fails'}"
    ok = check.ok and len(members(b)) <= bound
    if exact:
        rep = min_leaky_forcing(g, 2, budget_secs=None)
        cert["exact"] = _solve_cert(rep)
        computed += f"; exact Z_(2) = {rep.z_value}"
        ok = ok and rep.z_value <= bound
    return ClaimResult(claim_id, f"Z_(2)({g.name}) <= {bound}", computed, PASS if ok else FAIL, cert)


def verify_prism(n_max: int = 6, bound_max: int = 10) -> list[ClaimResult]:
    if not 3 <= n_max <= 7:
        raise ValueError(f"n_max must be in 3..7, got {n_max}")
    out = []
    for n in range(3, n_max + 1):
        for leaks in range(4):
            rel, val = prism_formula(n, leaks)
            cid = f"thm2-gp{n}-l{leaks}"
            if rel == "=":
                out.append(_equality(cid, generalized_petersen(n, 1), leaks, val))
            else:
                out.append(_prism_bound(cid, n, val, exact=True))
    for n in range(max(n_max + 1, 4), bound_max + 1):
        out.append(_prism_bound(f"thm2-ub-gp{n}", n, prism_formula(n, 2)[1], exact=False))
    return out


def verify_gp_skip2(n_max: int = 6) -> list[ClaimResult]:
    """New data for GP(n,2): exact values, passing iff the witness re-validates."""
    out = []
    for n in range(5, n_max + 1):
        g = generalized_petersen(n, 2)
        for leaks in range(4):
            rep = min_leaky_forcing(g, leaks, budget_secs=None)
            recheck = is_leaky_forcing_set(g, rep.witness, leaks).ok
            out.append(
                ClaimResult(
                    f"gpk2-n{n}-l{leaks}",
                    "exact value (open problem; witness re-validated)",
                    f"Z_({leaks})({g.name}) = {rep.z_value}",
                    PASS if recheck else FAIL,
                    _solve_cert(rep),
                )
            )
    out.append(
        ClaimResult(
            f"gpk2-n{n_max + 1}-up",
            "Z_(l)(GP(n,p)) for larger n and p >= 2",
            "not computed",
            SKIPPED,
            None,
        )
    )
    return out


# -- complete bipartite and wheels ---------------------------------------------


def bipartite_formula(m: int, n: int, leaks: int) -> int:
    if leaks <= n - 1:
        return m + n - 2
    if m - 1 >= leaks:
        return m + n - 1
    return m + n


def verify_bipartite(m_max: int = 5, n_max: int | None = None) -> list[ClaimResult]:
    if not 1 <= m_max <= 5:
        raise ValueError(f"m_max must be in 1..5, got {m_max}")
    n_max = m_max if n_max is None else n_max
    out = []
    for m in range(1, m_max + 1):
        for n in range(1, min(m, n_max) + 1):
            for leaks in range(m + 2):
                out.append(
                    _equality(f"prop42-K{m},{n}-l{leaks}", complete_bipartite(m, n), leaks,
                              bipartite_formula(m, n, leaks))
                )
    return out


def wheel_formula(n: int, leaks: int) -> int:
    if leaks in (0, 1):
        return 3
    if leaks == 2:
        return ceil(2 * n / 3)
    if n > leaks:
        return n
    return n + 1


def _containment(claim_id: str, g: Graph, leaks: int) -> ClaimResult:
    rep = containment_question(g, leaks)
    pair = rep.to_json()["witness_pair"]
    return ClaimResult(
        claim_id,
        f"a minimum zero-forcing set of {g.name} lies in a minimum {leaks}-leaky forcing set",
        "yes" if rep.answer else "no",
        PASS if rep.answer else FAIL,
        {"witness_pair": pair, "z_base": rep.z_base, "z_leaks": rep.z_leaks,
         "minimum_sets": [rep.count_base, rep.count_leaks]},
    )


def verify_wheel(n_max: int = 8, containment: bool = True) -> list[ClaimResult]:
    if not 3 <= n_max <= 8:
        raise ValueError(f"n_max must be in 3..8, got {n_max}")
    out = []
    for n in range(3, n_max + 1):
        g = wheel(n)
        for leaks in range(n + 2):
            out.append(_equality(f"prop44-W{n}-l{leaks}", g, leaks, wheel_formula(n, leaks)))
            if containment and leaks >= 1:
                out.append(_containment(f"cor45-W{n}-l{leaks}", g, leaks))
    return out


def tree_instances(count: int = 24) -> list[tuple[int, int]]:
    """``(n, seed)`` pairs covering sizes 2..9."""
    return [(2 + s % 8, s) for s in range(count)]


def verify_containment_corollaries(seeds: list[int] | None = None) -> list[ClaimResult]:
    seeds = list(range(24)) if seeds is None else seeds
    out = []
    for s in seeds:
        n = 2 + s % 8
        out.append(_containment(f"cor41-T{n}s{s}-l1", random_tree(n, s), 1))
    for m in range(1, 5):
        for n in range(1, m + 1):
            for leaks in range(1, m):
                out.append(_containment(f"cor42-K{m},{n}-l{leaks}", complete_bipartite(m, n), leaks))
    for n in range(3, 7):
        for leaks in (1, 2):
            out.append(_containment(f"cor45-W{n}-l{leaks}", wheel(n), leaks))
    return out


def verify_chains() -> list[ClaimResult]:
    """Nested minimum sets B_0 <= B_1 for wheels, whose small-leak minimum sets coincide."""
    out = []
    for n in range(3, 7):
        rep = nested_chain(wheel(n), 1)
        out.append(
            ClaimResult(
                f"chain-W{n}-k1",
                f"nested chain B_0 <= B_1 exists in W{n}",
                f"exists={rep.exists} strict={rep.strict_exists}",
                PASS if rep.exists else FAIL,
                rep.to_json(),
            )
        )
    return out


# -- runner ---------------------------------------------------------------------

SUITES = {
    "cubes": [(verify_cube_values, ())],
    "halfcube": [(verify_halfcube, (d,)) for d in range(2, 7)] + [(_halfcube_skipped, (7,))],
    "conjecture": [(verify_conjecture, ())],
    "prism": [(verify_prism, ())],
    "gp2": [(verify_gp_skip2, ())],
    "bipartite": [(verify_bipartite, ())],
    "wheel": [(verify_wheel, ())],
    "containment": [(verify_containment_corollaries, ())],
    "chain": [(verify_chains, ())],
}


def _natural(claim_id: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", claim_id)]


def _run_job(job) -> list[ClaimResult]:
    fn, args = job
    res = fn(*args)
    return res if isinstance(res, list) else [res]


def jobs_for(suite: str, include_d7: bool = False) -> list:
    names = list(SUITES) if suite == "all" else [suite]
    jobs = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
        for fn, args in SUITES[name]:
            if include_d7 and fn is _halfcube_skipped:
                fn = verify_halfcube
            jobs.append((fn, args))
    return jobs


def run_suite(suite: str = "all", workers: int = 1, include_d7: bool = False) -> list[ClaimResult]:
    jobs = jobs_for(suite, include_d7)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            batches = list(pool.map(_run_job, jobs))
    else:
        batches = [_run_job(j) for j in jobs]
    merged = {}
    for batch in batches:
        for r in batch:
            merged.setdefault(r.claim_id, r)
    return sorted(merged.values(), key=lambda r: _natural(r.claim_id))
