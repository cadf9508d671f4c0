"""Deliberately naive reference implementations for cross-checking.

Everything here works on plain (n, edge list) pairs with simple loops,
shares no code with the package under test, and favours obvious
correctness over speed.  Keep it that way: these are the referees.
"""

from __future__ import annotations

from itertools import combinations


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def degree_vector(n: int, edges) -> list[int]:
    degs = [0] * n
    for a, b in edges:
        degs[a] += 1
        degs[b] += 1
    return degs


def count_realizations(terms) -> int:
    """Labeled graphs where vertex i has degree terms[i], by edge subsets."""
    n = len(terms)
    count = 0
    for edges in _subsets(all_pairs(n)):
        if degree_vector(n, edges) == list(terms):
            count += 1
    return count


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def is_connected(n: int, edges, removed=()) -> bool:
    """Connectivity of the induced subgraph on the surviving vertices."""
    removed = set(removed)
    alive = [v for v in range(n) if v not in removed]
    if not alive:
        return False
    adj = {v: set() for v in alive}
    for a, b in edges:
        if a not in removed and b not in removed:
            adj[a].add(b)
            adj[b].add(a)
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def vertex_connectivity(n: int, edges) -> int:
    """Smallest vertex set whose removal disconnects; n-1 for complete."""
    if n <= 1:
        return 0
    for size in range(n - 1):
        for removal in combinations(range(n), size):
            if not is_connected(n, edges, removal):
                return size
    return n - 1


def min_separator(n: int, edges, a: int, b: int) -> int:
    """Fewest other vertices whose removal parts a from b (a, b non-adjacent)."""
    others = [v for v in range(n) if v != a and v != b]
    for size in range(len(others) + 1):
        for removal in combinations(others, size):
            if not _same_component(n, edges, set(removal), a, b):
                return size
    raise AssertionError("adjacent vertices cannot be separated")


def _same_component(n: int, edges, removed, a: int, b: int) -> bool:
    adj = {v: set() for v in range(n) if v not in removed}
    for x, y in edges:
        if x not in removed and y not in removed:
            adj[x].add(y)
            adj[y].add(x)
    seen = {a}
    stack = [a]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return b in seen


def random_edges(n: int, rng, p: float = 0.5) -> list[tuple[int, int]]:
    return [e for e in all_pairs(n) if rng.random() < p]
