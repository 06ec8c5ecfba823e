"""Exhaustive backtracking search for circuits and Hamilton paths."""

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

try:
    from .hamgen_cycles import Circuit, circuit_edges
    from .hamgen_errors import CapacityError, GraphError, InapplicableError
    from .hamgen_graph import bipartition, is_connected
    from .hamgen_settings import log, setting
except ImportError:
    from hamgen_cycles import Circuit, circuit_edges
    from hamgen_errors import CapacityError, GraphError, InapplicableError
    from hamgen_graph import bipartition, is_connected
    from hamgen_settings import log, setting


@dataclass(frozen=True)
class LengthSet:
    """Lengths as a function of the graph: offsets are added to f0, explicit values are kept."""

    offsets: frozenset = field(default_factory=frozenset)
    explicit: frozenset = field(default_factory=frozenset)
    shift: int = 0

    @classmethod
    def hamilton(cls):
        return cls(frozenset({0}))

    @classmethod
    def near_hamilton(cls):
        return cls(frozenset({-1, 0}))

    @classmethod
    def missing_one(cls):
        return cls(frozenset({-1}))

    @classmethod
    def of(cls, *lengths):
        return cls(explicit=frozenset(int(x) for x in lengths))

    @classmethod
    def parse(cls, text):
        offsets, explicit = set(), set()
        for token in str(text).split(","):
            token = token.strip().replace(" ", "")
            if not token:
                continue
            if token.startswith("f0"):
                rest = token[2:]
                try:
                    offsets.add(int(rest) if rest else 0)
                except ValueError:
                    raise ValueError("bad length term {!r}".format(token)) from None
            else:
                try:
                    explicit.add(int(token))
                except ValueError:
                    raise ValueError("bad length term {!r}".format(token)) from None
        if not offsets and not explicit:
            raise ValueError("empty length set {!r}".format(text))
        return cls(frozenset(offsets), frozenset(explicit))

    def minus_one(self):
        return replace(self, shift=self.shift + 1)

    def resolve(self, g, paths=False):
        raw = {g.n + o for o in self.offsets} | set(self.explicit)
        raw = {x - self.shift for x in raw}
        low, high = (1, g.n - 1) if paths else (3, g.n)
        return frozenset(x for x in raw if low <= x <= high)

    def label(self):
        terms = []
        for o in sorted(self.offsets):
            terms.append("f0" if o == 0 else "f0{:+d}".format(o))
        terms.extend(str(x) for x in sorted(self.explicit))
        text = "{" + ",".join(terms) + "}"
        return text if not self.shift else "{}-{}".format(text, self.shift)


def _lengths(g, lengths):
    if isinstance(lengths, LengthSet):
        return lengths.resolve(g)
    return frozenset(int(x) for x in lengths if 3 <= int(x) <= g.n)


@dataclass(frozen=True)
class CircuitSearch:
    circuits: tuple
    partial: bool = False

    def __len__(self):
        return len(self.circuits)

    def __iter__(self):
        return iter(self.circuits)

    def require_complete(self, what="circuit enumeration"):
        if self.partial:
            raise CapacityError(
                "{} exceeded the cap of {} circuits".format(what, len(self.circuits))
            )
        return self.circuits


@dataclass(frozen=True)
class PairVerdict:
    holds: bool
    witness: tuple = None

    def __bool__(self):
        return self.holds


def _connected_within(g, nodes, root):
    if not nodes:
        return True
    seen = {root}
    queue = deque([root])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b in nodes and b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(nodes)


def _closing_feasible(g, start, nxt, unvisited):
    # Every remaining vertex sits inside the rest of the circuit from nxt back to start.
    if not unvisited:
        return g.has_edge(nxt, start)
    usable = unvisited | {nxt, start}
    for u in unvisited:
        if sum(1 for w in g.neighbors(u) if w in usable) < 2:
            return False
    if not any(w in unvisited for w in g.neighbors(start)):
        return False
    return _connected_within(g, unvisited | {nxt}, nxt)


def _search_branch(g, start, first, wanted, cap):
    allowed = frozenset(range(start, g.n))
    full = wanted == frozenset({len(allowed)})
    longest = max(wanted)
    found = []
    path = [start, first]
    on_path = {start, first}

    def extend(cur):
        depth = len(path)
        if depth in wanted and depth >= 3 and g.has_edge(cur, start) and path[1] < cur:
            found.append(Circuit(tuple(path)))
            if len(found) >= cap:
                return True
        if depth >= longest:
            return False
        for nxt in sorted(g.neighbors(cur)):
            if nxt not in allowed or nxt in on_path:
                continue
            if full and not _closing_feasible(g, start, nxt, allowed - on_path - {nxt}):
                continue
            path.append(nxt)
            on_path.add(nxt)
            stop = extend(nxt)
            on_path.discard(nxt)
            path.pop()
            if stop:
                return True
        return False

    if full and not _closing_feasible(g, start, first, allowed - on_path):
        return found
    extend(first)
    return found


def circuits_with_lengths(g, lengths, limit=None, threads=None):
    wanted = _lengths(g, lengths)
    limit = setting("circuit_cap") if limit is None else int(limit)
    threads = threads or setting("threads")
    if not wanted:
        return CircuitSearch(())
    shortest = min(wanted)
    tasks = [
        (s, w)
        for s in range(g.n)
        if g.n - s >= shortest
        for w in sorted(g.neighbors(s))
        if w > s
    ]
    cap = limit + 1
    found = []
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda t: _search_branch(g, t[0], t[1], wanted, cap), tasks)
            for part in parts:
                found.extend(part)
    else:
        for s, w in tasks:
            found.extend(_search_branch(g, s, w, wanted, cap))
            if len(found) >= cap:
                break
    found.sort()
    partial = len(found) > limit
    if partial:
        log("circuit enumeration stopped at the cap of {} circuits".format(limit))
    return CircuitSearch(tuple(found[:limit]), partial)


def hamilton_circuits(g, limit=None, threads=None):
    if g.n < 3:
        raise GraphError("Hamilton circuits need at least 3 vertices, got {}".format(g.n))
    return circuits_with_lengths(g, LengthSet.hamilton(), limit=limit, threads=threads)


def _parity_allows(g, u, v):
    classes = bipartition(g)
    if classes is None:
        return True
    first = set(classes[0])
    a, b = len(classes[0]), len(classes[1])
    if a == b:
        return (u in first) != (v in first)
    if a == b + 1:
        return u in first and v in first
    if b == a + 1:
        return u not in first and v not in first
    return False


def hamilton_path(g, u, v):
    if u == v:
        raise GraphError("Hamilton path endpoints must differ, got {} twice".format(u))
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError("vertex {} is outside [0, {})".format(x, g.n))
    if not is_connected(g) or not _parity_allows(g, u, v):
        return None
    path = [u]
    unvisited = set(g.vertices()) - {u}

    def feasible(nxt):
        rest = unvisited - {nxt}
        if not rest:
            return nxt == v
        if v not in rest:
            return False
        usable = rest | {nxt}
        for w in rest:
            need = 1 if w == v else 2
            if sum(1 for x in g.neighbors(w) if x in usable) < need:
                return False
        return _connected_within(g, usable, nxt)

    def extend(cur):
        if not unvisited:
            return cur == v
        for nxt in sorted(g.neighbors(cur)):
            if nxt not in unvisited or not feasible(nxt):
                continue
            path.append(nxt)
            unvisited.discard(nxt)
            if extend(nxt):
                return True
            unvisited.add(nxt)
            path.pop()
        return False

    if extend(u):
        return tuple(path)
    return None


def find_path(g, u, v, lengths):
    if u == v:
        raise GraphError("path endpoints must differ, got {} twice".format(u))
    lengths = frozenset(lengths)
    if not lengths:
        return None
    if g.n - 1 in lengths:
        found = hamilton_path(g, u, v)
        if found is not None:
            return found
    others = lengths - {g.n - 1}
    if not others:
        return None
    longest = max(others)
    path = [u]
    on_path = {u}

    def extend(cur):
        edges = len(path) - 1
        if edges >= longest:
            return False
        for nxt in sorted(g.neighbors(cur)):
            if nxt in on_path:
                continue
            if nxt == v:
                if edges + 1 in others:
                    path.append(v)
                    return True
                continue
            path.append(nxt)
            on_path.add(nxt)
            if extend(nxt):
                return True
            on_path.discard(nxt)
            path.pop()
        return False

    if extend(u):
        return tuple(path)
    return None


def is_path_connected(g, lengths):
    wanted = lengths.minus_one().resolve(g, paths=True)
    for u in g.vertices():
        for v in range(u + 1, g.n):
            if find_path(g, u, v, wanted) is None:
                return PairVerdict(False, (u, v))
    return PairVerdict(True)


def is_laceable(g, lengths):
    classes = bipartition(g)
    if classes is None:
        raise InapplicableError("laceability needs a bipartite graph")
    wanted = lengths.minus_one().resolve(g, paths=True)
    pairs = sorted((min(a, b), max(a, b)) for a in classes[0] for b in classes[1])
    for u, v in pairs:
        if find_path(g, u, v, wanted) is None:
            return PairVerdict(False, (u, v))
    return PairVerdict(True)


def is_hamilton_connected(g):
    return is_path_connected(g, LengthSet.hamilton())


def is_hamilton_laceable(g):
    return is_laceable(g, LengthSet.hamilton())


def has_circuit_of_length(g, k):
    """Existence only: stops at the first circuit found and never reports a cap."""
    if not 3 <= k <= g.n:
        return False
    wanted = frozenset({k})
    return any(
        _search_branch(g, s, w, wanted, 1)
        for s in range(g.n - k + 1)
        for w in sorted(g.neighbors(s))
        if w > s
    )


def is_pancyclic(g):
    if g.n < 3:
        return False
    return all(has_circuit_of_length(g, k) for k in range(3, g.n + 1))


def edges_off_hamilton_circuits(g, circuits=None):
    if circuits is None:
        circuits = hamilton_circuits(g).require_complete("Hamilton circuit enumeration")
    used = set()
    for c in circuits:
        used.update(circuit_edges(c))
    return [e for e in g.edges if e not in used]


def every_edge_on_hamilton_circuit(g, circuits=None):
    return not edges_off_hamilton_circuits(g, circuits)
