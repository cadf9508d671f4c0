"""Exhaustive ground truth at small scale.

Everything here answers questions by enumeration, never by formula:
all labeled realizations of a degree sequence, exact k-connectedness of
each, extremal edge counts, and sweep audits that compare the arithmetic
predicates of :mod:`kconnseq.sequence_core` against enumerated truth.

Connectivity is decided by brute-force vertex-subset removal -- a second,
independent route from the max-flow computation in graph_core, so the two
can cross-check each other in tests.

Audits parallelize over sequences (or edge-count buckets) with
ProcessPoolExecutor; results are merged in task-submission order and then
sorted, so reports are byte-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from .errors import TooLarge
from .graph_core import SimpleGraph
from .sequence_core import (
    DegreeSequence,
    corollary_threshold,
    theorem1_check,
    theorem2_check,
)

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "HARD_ENUMERATION_CAP",
    "SequenceVerdict",
    "DiscrepancyReport",
    "enumerate_realizations",
    "oracle_graphic",
    "oracle_verdict",
    "oracle_max_edges_non_k_connected",
    "audit_theorem1",
    "audit_theorem2",
    "audit_corollary",
    "all_degree_sequences",
]

# Default per-call ceiling on the vertex count of exhaustive enumeration.
# 8 keeps the worst case (2^28 potential edge subsets before pruning)
# inside an interactive budget; callers may raise it per invocation.
DEFAULT_ENUMERATION_LIMIT = 8
# The CLI refuses --oracle-limit beyond this, whatever the caller says.
HARD_ENUMERATION_CAP = 10


# -- enumeration core --------------------------------------------------------


def _enumerate_masks(terms: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield adjacency masks of every labeled graph realizing ``terms``.

    Backtracking: repeatedly take the vertex of largest residual degree
    (ties: lowest label) and branch over every way to complete its whole
    neighborhood among vertices that still need edges.  Each labeled graph
    arises from exactly one branch sequence, so there are no duplicates.
    """
    n = len(terms)
    if sum(terms) % 2 == 1:
        return
    if any(t > n - 1 for t in terms):
        return
    adj = [0] * n
    residual = list(terms)

    def rec() -> Iterator[tuple[int, ...]]:
        pivot = -1
        best = 0
        for v in range(n):
            if residual[v] > best:
                best = residual[v]
                pivot = v
        if pivot < 0:
            yield tuple(adj)
            return
        row = adj[pivot]
        cands = [
            u
            for u in range(n)
            if u != pivot and residual[u] > 0 and not (row >> u) & 1
        ]
        need = residual[pivot]
        if len(cands) < need:
            return
        residual[pivot] = 0
        for chosen in combinations(cands, need):
            for u in chosen:
                adj[pivot] |= 1 << u
                adj[u] |= 1 << pivot
                residual[u] -= 1
            yield from rec()
            for u in chosen:
                adj[pivot] &= ~(1 << u)
                adj[u] &= ~(1 << pivot)
                residual[u] += 1
        residual[pivot] = need

    yield from rec()


def _connected_within(adj: Sequence[int], live: int) -> bool:
    """Is the graph induced on the ``live`` vertex mask connected?

    Zero or one live vertices count as connected (removal of a separator
    candidate never empties the graph in the callers below).
    """
    if live == 0:
        return True
    start = live & -live
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & live & ~seen
        seen |= frontier
    return seen == live


_REMOVAL_MASKS: dict[tuple[int, int], list[int]] = {}


def _removal_masks(n: int, size: int) -> list[int]:
    key = (n, size)
    masks = _REMOVAL_MASKS.get(key)
    if masks is None:
        masks = [
            sum(1 << v for v in subset) for subset in combinations(range(n), size)
        ]
        _REMOVAL_MASKS[key] = masks
    return masks


def _kappa_capped(adj: Sequence[int], n: int, cap: int) -> int:
    """min(vertex connectivity, cap), by trying every small removal set.

    Independent of the flow-based computation in graph_core: searches
    removal subsets of size 1, 2, ... directly.  No subset up to size
    n - 2 disconnecting the graph means the graph is complete, where
    connectivity is n - 1 by convention.
    """
    if n <= 1:
        return 0
    full = (1 << n) - 1
    if not _connected_within(adj, full):
        return 0
    for size in range(1, min(cap, n - 1)):
        for rm in _removal_masks(n, size):
            if not _connected_within(adj, full & ~rm):
                return size
    return min(cap, n - 1)


# -- public enumeration API ---------------------------------------------------


def enumerate_realizations(
    s: DegreeSequence, *, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[SimpleGraph]:
    """Every labeled graph on 0..phi-1 where vertex i has degree s[i].

    Each graph is yielded exactly once; the stream is empty iff the
    sequence is not graphic.  Raises TooLarge when phi exceeds ``limit``.
    """
    if len(s) > limit:
        raise TooLarge(f"phi = {len(s)} exceeds enumeration limit {limit}")
    return (
        SimpleGraph._from_masks(len(s), masks) for masks in _enumerate_masks(s.terms)
    )


def oracle_graphic(s: DegreeSequence, *, limit: int = DEFAULT_ENUMERATION_LIMIT) -> bool:
    """Graphicality by exhaustion: does any realization exist?"""
    for _ in enumerate_realizations(s, limit=limit):
        return True
    return False


@dataclass(frozen=True)
class SequenceVerdict:
    """Enumerated truth about one (sequence, k) pair.

    all_k_connected is None ("not applicable") exactly when the sequence
    has no realization at all.
    """

    sequence: DegreeSequence
    k: int
    graphic: bool
    exists_k_connected: bool
    all_k_connected: bool | None
    realization_count: int

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "sequence": list(self.sequence.terms),
            "k": self.k,
            "graphic": self.graphic,
            "exists_k_connected": self.exists_k_connected,
            "all_k_connected": self.all_k_connected,
            "realization_count": self.realization_count,
        }


def oracle_verdict(
    s: DegreeSequence, k: int, *, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> SequenceVerdict:
    """Exact existential and universal k-connectedness of s's realizations.

    Enumerates every labeled realization (the count is part of the
    verdict); connectivity checks stop once both booleans are settled.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(s) > limit:
        raise TooLarge(f"phi = {len(s)} exceeds enumeration limit {limit}")
    n = len(s)
    count = 0
    exists = False
    all_k = True
    for adj in _enumerate_masks(s.terms):
        count += 1
        if not exists or all_k:
            if _kappa_capped(adj, n, k) >= k:
                exists = True
            else:
                all_k = False
    return SequenceVerdict(
        sequence=s,
        k=k,
        graphic=count > 0,
        exists_k_connected=exists,
        all_k_connected=None if count == 0 else all_k,
        realization_count=count,
    )


def oracle_max_edges_non_k_connected(
    n: int,
    k: int,
    enforce_min_degree: bool,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> int | None:
    """Largest edge count of an n-vertex graph that is NOT k-connected.

    Scans edge counts downward from C(n,2), enumerating all labeled graphs
    of that size, optionally keeping only those with minimum degree >= k.
    Returns None when no graph qualifies at all (e.g. the min-degree
    constraint is unsatisfiable on n vertices).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n > limit:
        raise TooLarge(f"n = {n} exceeds enumeration limit {limit}")
    pairs = list(combinations(range(n), 2))
    for m in range(len(pairs), -1, -1):
        for combo in combinations(pairs, m):
            adj = [0] * n
            for a, b in combo:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            if enforce_min_degree and any(row.bit_count() < k for row in adj):
                continue
            if _kappa_capped(adj, n, k) < k:
                return m
    return None


# -- audit sweeps -------------------------------------------------------------


def all_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """Every non-increasing positive sequence of length n with terms <= n-1.

    This is the audit universe: it includes sequences the predicates
    reject, so both directions of each equivalence get exercised.
    """
    for terms in combinations_with_replacement(range(n - 1, 0, -1), n):
        yield DegreeSequence(terms)


def _profile_worker(args: tuple[tuple[int, ...], int]) -> tuple[int, int, int]:
    """(realization count, min kappa-hat, max kappa-hat) for one sequence.

    kappa-hat is connectivity capped at k_max; min/max are 0 when no
    realization exists.
    """
    terms, k_cap = args
    n = len(terms)
    count = 0
    lo = hi = 0
    for adj in _enumerate_masks(terms):
        kap = _kappa_capped(adj, n, k_cap)
        if count == 0:
            lo = hi = kap
        else:
            lo = min(lo, kap)
            hi = max(hi, kap)
        count += 1
    return count, lo, hi


def _sequence_profiles(
    n: int, k_cap: int, jobs: int | None
) -> list[tuple[tuple[int, ...], int, int, int]]:
    universe = [s.terms for s in all_degree_sequences(n)]
    tasks = [(terms, k_cap) for terms in universe]
    if jobs is None or jobs <= 1:
        results = [_profile_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_profile_worker, tasks, chunksize=16))
    return [
        (terms, count, lo, hi)
        for terms, (count, lo, hi) in zip(universe, results)
    ]


def _universe_dict(n: int, k_max: int, sequence_count: int) -> dict:
    return {"n": n, "k_max": k_max, "sequence_count": sequence_count}


@dataclass(frozen=True)
class DiscrepancyReport:
    """Outcome of sweeping one predicate against enumerated truth.

    ``entries`` lists exactly the comparisons where the predicate and the
    enumeration disagree, sorted lexicographically (sequence first, then
    k; violating graphs sort by edge count then edge list).  ``boundary``
    is only present for the necessity audit: sequences sitting exactly at
    the edge-count bound, recorded whether or not they agree.
    """

    subject: str
    universe: dict
    entries: tuple[dict, ...]
    summary: dict
    boundary: tuple[dict, ...] | None = None

    @property
    def has_discrepancies(self) -> bool:
        return bool(self.entries)

    def to_json_dict(self) -> dict:
        out = {
            "schema_version": 1,
            "subject": self.subject,
            "universe": dict(self.universe),
            "entries": [dict(e) for e in self.entries],
        }
        if self.boundary is not None:
            out["boundary"] = [dict(b) for b in self.boundary]
        out["summary"] = dict(self.summary)
        return out


def audit_theorem1(
    n: int,
    k_max: int,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    jobs: int | None = None,
) -> DiscrepancyReport:
    """Compare the four-condition feasibility predicate with enumeration.

    For every sequence in the length-n universe and every k in 1..k_max,
    the claim "some k-connected realization exists" is checked against
    exhaustive truth; disagreements become report entries.
    """
    if n > limit:
        raise TooLarge(f"n = {n} exceeds enumeration limit {limit}")
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    profiles = _sequence_profiles(n, k_max, jobs)
    entries = []
    for terms, count, _lo, hi in profiles:
        s = DegreeSequence(terms)
        for k in range(1, k_max + 1):
            claimed = theorem1_check(s, k).verdict
            observed = count > 0 and hi >= k
            if claimed != observed:
                entries.append(
                    {
                        "theorem": "theorem1",
                        "sequence": list(terms),
                        "k": k,
                        "claimed": claimed,
                        "observed": observed,
                    }
                )
    entries.sort(key=lambda e: (e["sequence"], e["k"]))
    summary = {
        "comparisons": len(profiles) * k_max,
        "discrepancies": len(entries),
    }
    return DiscrepancyReport(
        subject="theorem1",
        universe=_universe_dict(n, k_max, len(profiles)),
        entries=tuple(entries),
        summary=summary,
    )


def audit_theorem2(
    n: int,
    k_max: int,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    jobs: int | None = None,
) -> DiscrepancyReport:
    """Compare the necessity predicate with enumeration.

    Only sequences with at least one realization are compared ("all
    realizations are k-connected" is vacuous otherwise).  Sequences whose
    epsilon sits exactly on the bound C(phi-2,2)+2k-1 land in the
    ``boundary`` annex regardless of agreement.
    """
    if n > limit:
        raise TooLarge(f"n = {n} exceeds enumeration limit {limit}")
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    profiles = _sequence_profiles(n, k_max, jobs)
    entries = []
    boundary = []
    comparisons = 0
    for terms, count, lo, _hi in profiles:
        if count == 0:
            continue
        s = DegreeSequence(terms)
        dsum = sum(terms)
        for k in range(1, k_max + 1):
            report = theorem2_check(s, k)
            claimed = report.verdict
            observed = lo >= k
            comparisons += 1
            if claimed != observed:
                entries.append(
                    {
                        "theorem": "theorem2",
                        "sequence": list(terms),
                        "k": k,
                        "claimed": claimed,
                        "observed": observed,
                    }
                )
            bound = report.thresholds["necessity_bound"]
            if dsum == 2 * bound:
                boundary.append(
                    {
                        "sequence": list(terms),
                        "k": k,
                        "epsilon_bound": bound,
                        "claimed": claimed,
                        "observed": observed,
                    }
                )
    entries.sort(key=lambda e: (e["sequence"], e["k"]))
    boundary.sort(key=lambda e: (e["sequence"], e["k"]))
    summary = {
        "comparisons": comparisons,
        "discrepancies": len(entries),
        "boundary_cases": len(boundary),
    }
    return DiscrepancyReport(
        subject="theorem2",
        universe=_universe_dict(n, k_max, len(profiles)),
        entries=tuple(entries),
        summary=summary,
        boundary=tuple(boundary),
    )


def _corollary_worker(args: tuple[int, int, int, bool]) -> list[tuple]:
    """All labeled n-vertex graphs with exactly m edges that break the claim."""
    n, k, m, enforce = args
    pairs = list(combinations(range(n), 2))
    violations = []
    for combo in combinations(pairs, m):
        adj = [0] * n
        for a, b in combo:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        if enforce and any(row.bit_count() < k for row in adj):
            continue
        kap = _kappa_capped(adj, n, k)
        if kap < k:
            degs = sorted((row.bit_count() for row in adj), reverse=True)
            violations.append((combo, kap, degs))
    return violations


def audit_corollary(
    n: int,
    k: int,
    enforce_min_degree: bool,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    jobs: int | None = None,
) -> DiscrepancyReport:
    """Check "edge count >= threshold forces k-connected" by enumeration.

    Every labeled n-vertex graph at or above corollary_threshold(n, k)
    (optionally restricted to minimum degree >= k) that is not k-connected
    becomes an entry.  An empty entry list means the claim held on this
    instance under the chosen regime.
    """
    if n > limit:
        raise TooLarge(f"n = {n} exceeds enumeration limit {limit}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    threshold = corollary_threshold(n, k)
    max_edges = comb(n, 2)
    lo = max(threshold, 0)
    tasks = [(n, k, m, enforce_min_degree) for m in range(lo, max_edges + 1)]
    if jobs is None or jobs <= 1:
        buckets = [_corollary_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            buckets = list(pool.map(_corollary_worker, tasks))
    entries = []
    for bucket in buckets:
        for combo, kap, degs in bucket:
            entries.append(
                {
                    "theorem": "corollary",
                    "k": k,
                    "edge_count": len(combo),
                    "edges": [list(e) for e in combo],
                    "degree_sequence": list(degs),
                    "claimed": True,
                    "observed": False,
                    "connectivity": kap,
                }
            )
    entries.sort(key=lambda e: (e["edge_count"], e["edges"]))
    graphs_checked = sum(comb(max_edges, m) for m in range(lo, max_edges + 1))
    universe = {
        "n": n,
        "k": k,
        "enforce_min_degree": enforce_min_degree,
        "threshold": threshold,
        "max_edges": max_edges,
        "graph_count": graphs_checked,
    }
    summary = {
        "graphs_checked": graphs_checked,
        "violations": len(entries),
    }
    return DiscrepancyReport(
        subject="corollary",
        universe=universe,
        entries=tuple(entries),
        summary=summary,
    )
