"""Connected simple graphs: parsing, BFS distances, exhaustive enumeration.

Vertices are always 0..n-1 internally. Edge-list files may declare themselves
1-based in the header; the parser normalizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, GraphParseError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    The plain constructor trusts its arguments (used by the enumerator on hot
    paths); use from_edges for validated construction.
    """

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n, edges):
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def edge_count(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def adjacency_masks(self):
        """Neighbour sets as integer bitmasks, one per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degrees(self):
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def parse_edge_list(text):
    """Parse the plain edge-list format into a Graph.

    First significant line is ``n`` optionally followed by ``0-based`` or
    ``1-based`` (default 0-based); every following line is ``u v``. ``#``
    starts a comment anywhere. Raises GraphParseError with the offending
    1-based line number on malformed input, out-of-range or repeated edges,
    and self-loops.
    """
    n = None
    base = 0
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if not parts[0].lstrip("-").isdigit():
                raise GraphParseError(
                    f"expected vertex count, got {parts[0]!r}", line=lineno)
            n = int(parts[0])
            if n < 1:
                raise GraphParseError("vertex count must be positive", line=lineno)
            if len(parts) == 2:
                if parts[1] == "1-based":
                    base = 1
                elif parts[1] != "0-based":
                    raise GraphParseError(
                        f"unknown header flag {parts[1]!r} "
                        "(expected 0-based or 1-based)", line=lineno)
            elif len(parts) > 2:
                raise GraphParseError(
                    "header must be 'n' or 'n 0-based' or 'n 1-based'", line=lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u = int(parts[0]) - base
            v = int(parts[1]) - base
        except ValueError:
            raise GraphParseError(
                f"non-integer endpoint in {line!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(
                f"endpoint out of range in {line!r} "
                f"(n={n}, {base}-based labels)", line=lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {parts[0]}", line=lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge {line!r}", line=lineno)
        seen.add(key)
    if n is None:
        raise GraphParseError("no vertex count found")
    return Graph(n, frozenset(seen))


def format_edge_list(g, one_based=False):
    """Inverse of parse_edge_list (canonical sorted order)."""
    base = 1 if one_based else 0
    lines = [f"{g.n} {'1-based' if one_based else '0-based'}"]
    lines.extend(f"{u + base} {v + base}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _bfs_reach(adj, start, n):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g):
    if g.n == 1:
        return True
    return _bfs_reach(g.adjacency_masks(), 0, g.n) == (1 << g.n) - 1


def is_tree(g):
    return g.edge_count == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class DistanceData:
    """Distance matrix of a connected graph plus derived vertex invariants.

    dist:   n x n shortest-path distances (int64)
    tr:     row sums of dist (transmissions)
    wiener: sum of dist over unordered pairs
    p:      row maxima of dist (eccentricities)
    sdd:    distance-weighted transmission sums, sdd[i] = sum_k dist[i,k]*tr[k]
    """

    n: int
    dist: np.ndarray
    tr: np.ndarray
    wiener: int
    p: np.ndarray
    sdd: np.ndarray


def compute_distance_data(g):
    """All-pairs BFS distances and the derived invariants.

    Raises DisconnectedGraphError if any pair is unreachable.
    """
    n = g.n
    adj = g.adjacency_masks()
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                b = f & -f
                row[b.bit_length() - 1] = d
                f ^= b
        if seen != full:
            raise DisconnectedGraphError(
                f"graph is disconnected (vertex {s} cannot reach every vertex)")
        rows.append(row)
    dist = np.array(rows, dtype=np.int64)
    tr = dist.sum(axis=1)
    wiener = int(tr.sum()) // 2
    p = dist.max(axis=1) if n > 1 else np.zeros(1, dtype=np.int64)
    sdd = dist @ tr
    return DistanceData(n=n, dist=dist, tr=tr, wiener=wiener, p=p, sdd=sdd)


def transmission_regularity(dd):
    """The common transmission k if every vertex has the same, else None."""
    k = int(dd.tr[0])
    if (dd.tr == k).all():
        return k
    return None


_ENUM_CAP = 7


def _connected_mask(mask, pairs, n):
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        u, v = pairs[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        m ^= b
    return _bfs_reach(adj, 0, n) == (1 << n) - 1


def _mask_to_graph(mask, pairs, n):
    edges = []
    m = mask
    while m:
        b = m & -m
        edges.append(pairs[b.bit_length() - 1])
        m ^= b
    return Graph(n, frozenset(edges))


def _canonical_masks(masks, pairs, n):
    """Minimum edge-bitmask over all vertex permutations, vectorized over masks."""
    npairs = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    shifts = np.arange(npairs, dtype=np.int64)
    masks = np.asarray(sorted(masks), dtype=np.int64)
    bits = (masks[:, None] >> shifts) & 1
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        pmap = np.empty(npairs, dtype=np.int64)
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            pmap[i] = index[(a, b) if a < b else (b, a)]
        remapped = (bits << shifts[pmap]).sum(axis=1)
        np.minimum(canon, remapped, out=canon)
    return canon


def enumerate_connected(n, dedup=False):
    """Yield every connected labeled graph on n vertices, 1 <= n <= 7.

    Deterministic: ascending edge-bitmask order over the pair sequence
    (0,1), (0,2), ..., (n-2,n-1). With dedup=True, isomorphic duplicates are
    collapsed to the representative with the smallest bitmask over all vertex
    relabelings, yielded in ascending canonical order. Beyond n = 7 the
    labeled space is too large; feed a graph6 stream instead.
    """
    if not 1 <= n <= _ENUM_CAP:
        raise ValueError(
            f"exhaustive enumeration is capped at n <= {_ENUM_CAP} (got n={n}); "
            "use a graph6 stream for larger graphs")
    pairs = list(itertools.combinations(range(n), 2))
    if dedup:
        connected = [m for m in range(1 << len(pairs))
                     if _connected_mask(m, pairs, n)]
        canon = _canonical_masks(connected, pairs, n)
        for mask in sorted(set(int(c) for c in canon)):
            yield _mask_to_graph(mask, pairs, n)
        return
    for mask in range(1 << len(pairs)):
        if _connected_mask(mask, pairs, n):
            yield _mask_to_graph(mask, pairs, n)


def sample_connected(n, count, seed):
    """Uniform connected labeled graphs by rejection sampling (with replacement).

    Deterministic for a fixed seed. Yields exactly count graphs.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    pairs = list(itertools.combinations(range(n), 2))
    npairs = len(pairs)
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        mask = rng.getrandbits(npairs) if npairs else 0
        if _connected_mask(mask, pairs, n):
            produced += 1
            yield _mask_to_graph(mask, pairs, n)
