"""Finite simple undirected graphs on dense vertex ranges.

The edge tuple of a :class:`Graph` is sorted lexicographically; the position of an edge in it
is the canonical edge index every GF(2) chain in this package is written against.
"""

from collections import deque
from itertools import combinations

import networkx as nx

try:
    from .hamgen_errors import CapacityError, GraphError, UndefinedDegreeError
    from .hamgen_settings import setting
except ImportError:
    from hamgen_errors import CapacityError, GraphError, UndefinedDegreeError
    from hamgen_settings import setting


class Graph:
    __slots__ = ("n", "edges", "_adj", "_index")

    def __init__(self, n, edges):
        self.n = n
        self.edges = edges
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._index = {e: i for i, e in enumerate(edges)}

    @property
    def f0(self):
        return self.n

    @property
    def f1(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u] if 0 <= u < self.n else False

    def edge_index(self, u, v):
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError("{}-{} is not an edge".format(u, v)) from None

    def to_networkx(self):
        out = nx.Graph()
        out.add_nodes_from(range(self.n))
        out.add_edges_from(self.edges)
        return out

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n={}, f1={})".format(self.n, len(self.edges))


def _pair(e):
    u, v = e
    return (int(u), int(v))


def new_graph(n, edges):
    n = int(n)
    if n < 0:
        raise GraphError("vertex count must be non-negative, got {}".format(n))
    seen = set()
    for i, e in enumerate(edges):
        u, v = _pair(e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(
                "edge {} ({}, {}) has an endpoint outside [0, {})".format(i, u, v, n), i
            )
        if u == v:
            raise GraphError("edge {} ({}, {}) is a self-loop".format(i, u, v), i)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError("edge {} ({}, {}) is a duplicate".format(i, u, v), i)
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def min_degree(g):
    if g.n == 0:
        raise UndefinedDegreeError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in g.vertices())


def max_degree(g):
    if g.n == 0:
        raise UndefinedDegreeError("maximum degree of the empty graph is undefined")
    return max(g.degree(v) for v in g.vertices())


def add_edge(g, e):
    u, v = _pair(e)
    if g.has_edge(u, v):
        raise GraphError("{}-{} is already an edge".format(u, v))
    return new_graph(g.n, g.edges + ((u, v),))


def delete_edge(g, e):
    u, v = _pair(e)
    if not g.has_edge(u, v):
        raise GraphError("{}-{} is not an edge".format(u, v))
    key = (u, v) if u < v else (v, u)
    return Graph(g.n, tuple(x for x in g.edges if x != key))


def delete_vertices(g, removed):
    removed = set(int(v) for v in removed)
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError("vertex {} is outside [0, {})".format(v, g.n))
    kept = tuple(v for v in g.vertices() if v not in removed)
    new_index = {old: new for new, old in enumerate(kept)}
    edges = tuple(
        (new_index[u], new_index[v]) for u, v in g.edges if u in new_index and v in new_index
    )
    return Graph(len(kept), edges), kept


def relabel(g, perm):
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling is not a permutation of {} vertices".format(g.n))
    return new_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def _reach(g, start, blocked):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def components(g):
    out = []
    seen = set()
    for v in g.vertices():
        if v in seen:
            continue
        comp = _reach(g, v, ())
        seen |= comp
        out.append(sorted(comp))
    return out


def component_count(g):
    return len(components(g))


def is_connected(g):
    if g.n <= 1:
        return True
    return len(_reach(g, 0, ())) == g.n


def _connected_without(g, blocked):
    rest = [v for v in g.vertices() if v not in blocked]
    if len(rest) <= 1:
        return True
    return len(_reach(g, rest[0], blocked)) == len(rest)


def is_k_connected(g, k):
    limit = setting("max_connectivity")
    if not 1 <= k <= limit:
        raise GraphError("connectivity order must lie in 1..{}, got {}".format(limit, k))
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if not _connected_without(g, set(cut)):
                return False
    return True


def connectivity(g):
    """Largest k up to the max_connectivity setting with g k-connected, 0 if none."""
    best = 0
    for k in range(1, setting("max_connectivity") + 1):
        if not is_k_connected(g, k):
            break
        best = k
    return best


def bipartition(g):
    colour = [-1] * g.n
    for root in g.vertices():
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    first = tuple(v for v in g.vertices() if colour[v] == 0)
    second = tuple(v for v in g.vertices() if colour[v] == 1)
    return first, second


def is_square_bipartite(g):
    classes = bipartition(g)
    return classes is not None and len(classes[0]) == len(classes[1])


def _signature(g, v):
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def _search_order(g):
    order = []
    placed = set()
    for root in sorted(g.vertices(), key=lambda v: (-g.degree(v), v)):
        if root in placed:
            continue
        placed.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda x: (-g.degree(x), x)):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    return order


def find_isomorphism(g, h):
    cap = setting("isomorphism_max_vertices")
    if g.n > cap or h.n > cap:
        raise CapacityError(
            "isomorphism search is limited to {} vertices (got {} and {})".format(cap, g.n, h.n)
        )
    if g.n != h.n or g.f1 != h.f1:
        return None
    sig_g = [_signature(g, v) for v in g.vertices()]
    sig_h = [_signature(h, v) for v in h.vertices()]
    if sorted(sig_g) != sorted(sig_h):
        return None
    order = _search_order(g)
    earlier = {}
    for pos, v in enumerate(order):
        earlier[v] = [u for u in order[:pos]]
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(pos):
        if pos == len(order):
            return True
        v = order[pos]
        for w in h.vertices():
            if used[w] or sig_h[w] != sig_g[v]:
                continue
            if any(g.has_edge(u, v) != h.has_edge(mapping[u], w) for u in earlier[v]):
                continue
            mapping[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    if extend(0):
        return tuple(mapping)
    return None


def verify_isomorphism(g, h, m):
    if g.n != h.n or g.f1 != h.f1 or len(m) != g.n:
        return False
    if sorted(m) != list(range(h.n)):
        return False
    return all(h.has_edge(m[u], m[v]) for u, v in g.edges)


def verify_automorphism(g, m):
    return verify_isomorphism(g, g, m)
