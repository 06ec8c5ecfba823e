"""The cycle space Z1(X; Z/2): circuits, chains, bases and support decomposition."""

from collections import deque
from dataclasses import dataclass

try:
    from .hamgen_errors import GraphError
    from .hamgen_gf2 import EdgeVector
    from .hamgen_graph import component_count
except ImportError:
    from hamgen_errors import GraphError
    from hamgen_gf2 import EdgeVector
    from hamgen_graph import component_count


@dataclass(frozen=True, order=True)
class Circuit:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self):
        return ",".join(str(v) for v in self.vertices)


def canonical(seq):
    seq = list(seq)
    start = seq.index(min(seq))
    seq = seq[start:] + seq[:start]
    if len(seq) > 2 and seq[1] > seq[-1]:
        seq = [seq[0]] + seq[1:][::-1]
    return tuple(seq)


def make_circuit(g, seq):
    seq = [int(v) for v in seq]
    if len(seq) >= 2 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(seq) < 3:
        raise GraphError("a circuit needs at least 3 vertices, got {}".format(seq))
    if len(set(seq)) != len(seq):
        raise GraphError("circuit {} repeats a vertex".format(seq))
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if not (0 <= a < g.n and g.has_edge(a, b)):
            raise GraphError("circuit {} uses the non-edge {}-{}".format(seq, a, b))
    return Circuit(canonical(seq))


def circuit_set(circuits):
    return tuple(sorted(set(circuits)))


def parse_circuit(g, text, layout=None):
    tokens = [t.strip() for t in str(text).replace(" ", ",").split(",") if t.strip()]
    seq = []
    for token in tokens:
        if token.lstrip("-").isdigit():
            seq.append(int(token))
        elif layout is not None and token in layout:
            seq.append(int(layout[token]))
        else:
            raise GraphError("unknown vertex {!r} in circuit {!r}".format(token, text))
    return make_circuit(g, seq)


def circuit_edges(c):
    seq = c.vertices
    return [
        (a, b) if a < b else (b, a) for a, b in zip(seq, seq[1:] + seq[:1])
    ]


def edge_set_chain(g, pairs):
    return EdgeVector.from_support(g.f1, [g.edge_index(u, v) for u, v in pairs])


def circuit_to_chain(g, c):
    return edge_set_chain(g, circuit_edges(c))


def chain_edges(g, v):
    return [g.edges[i] for i in v.support()]


def is_cycle(g, v):
    degree = [0] * g.n
    for u, w in chain_edges(g, v):
        degree[u] ^= 1
        degree[w] ^= 1
    return not any(degree)


def betti1(g):
    return g.f1 - g.n + component_count(g)


def _spanning_forest(g):
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree, chords = [], []
    for i, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            chords.append(i)
        else:
            parent[ru] = rv
            tree.append(i)
    return tree, chords


def _tree_path(adj, u, v):
    prev = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in sorted(adj[a]):
            if b not in prev:
                prev[b] = a
                queue.append(b)
    path = [v]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def cycle_space_basis(g):
    tree, chords = _spanning_forest(g)
    adj = [set() for _ in range(g.n)]
    for i in tree:
        u, v = g.edges[i]
        adj[u].add(v)
        adj[v].add(u)
    basis = []
    for i in chords:
        u, v = g.edges[i]
        path = _tree_path(adj, u, v)
        basis.append(circuit_to_chain(g, make_circuit(g, path)))
    return basis


def decompose_support(g, v):
    if not is_cycle(g, v):
        raise ValueError("chain {} is not a cycle".format(v.to_string()))
    remaining = [set() for _ in range(g.n)]
    for a, b in chain_edges(g, v):
        remaining[a].add(b)
        remaining[b].add(a)
    found = []
    for start in range(g.n):
        while remaining[start]:
            path = [start]
            position = {start: 0}
            cur = start
            while True:
                nxt = min(remaining[cur])
                remaining[cur].discard(nxt)
                remaining[nxt].discard(cur)
                if nxt in position:
                    cut = position[nxt]
                    found.append(Circuit(canonical(path[cut:])))
                    for w in path[cut + 1 :]:
                        del position[w]
                    del path[cut + 1 :]
                    cur = nxt
                    if len(path) == 1 and not remaining[cur]:
                        break
                    continue
                position[nxt] = len(path)
                path.append(nxt)
                cur = nxt
    return circuit_set(found)
