"""Exact maximum-clique search on small graphs, bitset adjacency.

Branch and bound in the usual greedy-coloring style: candidates are colored
greedily, the color count bounds the clique size achievable from a node, and
branches are explored in reverse color order so the bound prunes early.
Vertices are visited in a fixed order everywhere, so node counts and results
are reproducible run to run.

``max_clique`` returns the size found by branch and bound together with the
lexicographically least maximum clique (as a sorted vertex tuple), extracted
by a second, decision-style search.  ``max_clique_exhaustive`` enumerates
every clique with no bounding at all; it exists purely as an independent
cross-check for the pruned search on small graphs.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_color_order(adj: Sequence[int], cand: int) -> List[Tuple[int, int]]:
    """Color candidates greedily; returns (vertex, color) in coloring order.

    Vertices of one color class form an independent set, so a clique inside
    ``cand`` has at most max-color vertices, and a vertex listed with color c
    can extend a clique by at most c vertices drawn from earlier classes.
    """
    order = []
    color = 0
    remaining = cand
    while remaining:
        color += 1
        avail = remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append((v, color))
            remaining &= ~(1 << v)
            avail &= ~(1 << v)
            avail &= ~adj[v]
    return order


def max_clique(adj: Sequence[int]) -> Tuple[int, Tuple[int, ...], int]:
    """Maximum clique size, lexicographically least witness, nodes explored."""
    n = len(adj)
    if n == 0:
        return 0, (), 0
    nodes = 0
    best = 0

    # initial ordering by degeneracy: repeatedly strip a minimum-degree vertex
    degree = [bin(a).count("1") for a in adj]
    alive = (1 << n) - 1
    peel: List[int] = []
    deg = list(degree)
    for _ in range(n):
        v = min((u for u in range(n) if alive >> u & 1), key=lambda u: (deg[u], u))
        peel.append(v)
        alive &= ~(1 << v)
        for u in _bits(adj[v] & alive):
            deg[u] -= 1
    rank = {v: i for i, v in enumerate(peel)}

    def expand(cand: int, size: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if cand == 0:
            if size > best:
                best = size
            return
        order = _greedy_color_order(adj, cand)
        for v, color in reversed(order):
            if size + color <= best:
                return
            expand(cand & adj[v], size + 1)
            cand &= ~(1 << v)

    # seed the search from later peel positions first: small bounds early
    root = (1 << n) - 1
    for v in sorted(range(n), key=lambda u: -rank[u]):
        if not root >> v & 1:
            continue
        expand(root & adj[v], 1)
        root &= ~(1 << v)

    def exists(cand: int, need: int) -> bool:
        nonlocal nodes
        nodes += 1
        if need <= 0:
            return True
        if bin(cand).count("1") < need:
            return False
        order = _greedy_color_order(adj, cand)
        if order[-1][1] < need:
            return False
        for v, color in reversed(order):
            if color < need:
                return False
            if exists(cand & adj[v], need - 1):
                return True
            cand &= ~(1 << v)
        return False

    # lexicographically least witness of the proven maximum size
    witness: List[int] = []
    cand = (1 << n) - 1
    while len(witness) < best:
        for v in _bits(cand):
            above = ~((1 << (v + 1)) - 1)
            rest = cand & adj[v] & above
            if exists(rest, best - len(witness) - 1):
                witness.append(v)
                cand = rest
                break
        else:
            raise AssertionError("witness extraction lost the maximum clique")
    return best, tuple(witness), nodes


def max_clique_exhaustive(adj: Sequence[int]) -> int:
    """Maximum clique by full clique enumeration, no pruning of any kind."""
    n = len(adj)

    def grow(cand: int, size: int) -> int:
        best = size
        for v in _bits(cand):
            above = ~((1 << (v + 1)) - 1)
            best = max(best, grow(cand & adj[v] & above, size + 1))
        return best

    return grow((1 << n) - 1, 0)
