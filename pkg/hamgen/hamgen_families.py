"""Constructors for the named graph families and small Cayley graphs.

Vertex layout contract (names in ``Family.layout``):

- prisms and Moebius ladders: ``x<i>`` -> i, ``y<i>`` -> r + i
- apex variants: ``z`` -> 2r; two-apex variants: ``z'`` -> 2r, ``z''`` -> 2r + 1
- bipartite cyclic ladder: ``a<i>`` -> i, ``b<i>`` -> r + i
- square of a circuit: ``v<i>`` -> i
- the fixed small graphs: ``v<k>`` -> k - 1
- Cayley graphs: dotted coordinates in mixed-radix order
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

try:
    from .hamgen_errors import CapacityError, GraphError, InapplicableError, UsageError
    from .hamgen_graph import find_isomorphism, is_connected, new_graph
    from .hamgen_settings import setting
except ImportError:
    from hamgen_errors import CapacityError, GraphError, InapplicableError, UsageError
    from hamgen_graph import find_isomorphism, is_connected, new_graph
    from hamgen_settings import setting


CN2 = "cn2"
CL = "cl"
PR = "pr"
M = "m"
NCL = "ncl"
PR_BOXTIMES = "pr-boxtimes"
M_BOXTIMES = "m-boxtimes"
PR_BOXMINUS = "pr-boxminus"
M_BOXMINUS = "m-boxminus"
PR_BOXMINUS_MINUS = "pr-boxminus-minus"
M_BOXMINUS_MINUS = "m-boxminus-minus"
CE_I1 = "ce-i1"
CE_I3 = "ce-i3"
X7 = "x7"
CAYLEY = "cayley"

LADDER_TAGS = (
    CL,
    PR,
    M,
    NCL,
    PR_BOXTIMES,
    M_BOXTIMES,
    PR_BOXMINUS,
    M_BOXMINUS,
    PR_BOXMINUS_MINUS,
    M_BOXMINUS_MINUS,
)
FIXED_TAGS = (CE_I1, CE_I3, X7)
ALL_TAGS = (CN2,) + LADDER_TAGS + FIXED_TAGS + (CAYLEY,)

CE_I1_EDGES = (
    (1, 4), (1, 6), (1, 7), (2, 4), (2, 5), (2, 7),
    (3, 4), (3, 5), (3, 6), (5, 6), (5, 7), (6, 7),
)  # fmt: skip
CE_I3_EDGES = (
    (1, 7), (1, 8), (1, 9), (1, 12), (2, 7), (2, 8), (2, 9),
    (3, 7), (3, 8), (3, 9), (4, 9), (4, 10), (4, 11),
    (5, 10), (5, 11), (5, 12), (6, 10), (6, 11), (6, 12),
)  # fmt: skip
X7_EDGES = (
    (1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 6), (2, 7),
    (3, 4), (3, 5), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7),
)  # fmt: skip
FIXED_GRAPHS = {CE_I1: (7, CE_I1_EDGES), CE_I3: (12, CE_I3_EDGES), X7: (7, X7_EDGES)}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    r: int = None
    orders: tuple = ()
    connection: tuple = ()

    def label(self):
        if self.tag == CAYLEY:
            return "cayley:{}:{}".format(
                "x".join(str(o) for o in self.orders),
                ",".join(_element_name(s) for s in self.connection),
            )
        if self.r is None:
            return self.tag
        return "{}:{}".format(self.tag, self.r)


@dataclass(frozen=True)
class Family:
    spec: FamilySpec
    graph: object
    layout: dict

    def vertex(self, name):
        return self.layout[name]

    def edge(self, a, b):
        return (self.layout[a], self.layout[b])


def _element_name(element):
    return ".".join(str(c) for c in element)


def _int_param(text, family):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise UsageError("family {} needs an integer parameter, got {!r}".format(family, text))


def parse_family(text):
    text = str(text).strip()
    head, _, rest = text.partition(":")
    if head in FIXED_TAGS:
        if rest:
            raise UsageError("family {} takes no parameter".format(head))
        return FamilySpec(head)
    if head == CN2 or head in LADDER_TAGS:
        if not rest:
            raise UsageError("family {} needs a size parameter".format(head))
        return FamilySpec(head, _int_param(rest, head))
    if head == CAYLEY:
        orders_text, _, s_text = rest.partition(":")
        if not orders_text or not s_text:
            raise UsageError("cayley family needs cayley:<orders>:<S>")
        orders = tuple(_int_param(o, head) for o in orders_text.split("x"))
        connection = []
        for token in s_text.split(","):
            coords = tuple(_int_param(c, head) for c in token.split("."))
            if len(coords) != len(orders):
                raise UsageError(
                    "element {!r} has {} coordinates, group has {}".format(
                        token, len(coords), len(orders)
                    )
                )
            connection.append(coords)
        return FamilySpec(CAYLEY, None, orders, tuple(connection))
    raise UsageError("unknown family {!r}".format(text))


def _ladder_layout(r, first="x", second="y"):
    layout = {}
    for i in range(r):
        layout["{}{}".format(first, i)] = i
        layout["{}{}".format(second, i)] = r + i
    return layout


def ladder_edges(r, moebius):
    edges = []
    for i in range(r):
        edges.append((i, r + i))
    for i in range(r - 1):
        edges.append((i, i + 1))
        edges.append((r + i, r + i + 1))
    if moebius:
        edges.append((0, 2 * r - 1))
        edges.append((r, r - 1))
    else:
        edges.append((0, r - 1))
        edges.append((r, 2 * r - 1))
    return edges


def _boxtimes(r, moebius):
    z = 2 * r
    edges = ladder_edges(r, moebius) + [(z, 0), (z, r), (z, 1), (z, r + 1)]
    layout = _ladder_layout(r)
    layout["z"] = z
    return 2 * r + 1, edges, layout


def _boxminus(r, moebius, with_breaking_edge=True):
    z1, z2 = 2 * r, 2 * r + 1
    edges = ladder_edges(r, moebius) + [(0, z1), (r, z1), (1, z2), (r + 1, z2), (z1, z2)]
    if with_breaking_edge:
        edges.append((0, z2))
    layout = _ladder_layout(r)
    layout["z'"] = z1
    layout["z''"] = z2
    return 2 * r + 2, edges, layout


def _cyclic_ladder(r):
    edges = set()
    for i in range(r):
        for d in (-1, 0, 1):
            j = (i + d) % r
            edges.add((i, r + j))
    return 2 * r, sorted(edges), _ladder_layout(r, "a", "b")


def _non_cyclic_ladder(r):
    n, edges, layout = _cyclic_ladder(r)
    drop = {(r - 1, r), (0, 2 * r - 1)}
    return n, [e for e in edges if e not in drop], layout


def _square_of_circuit(n):
    edges = set()
    for i in range(n):
        for d in (1, 2):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return n, sorted(edges), {"v{}".format(i): i for i in range(n)}


def _check_size(spec):
    if spec.tag == CN2:
        if spec.r is None or spec.r < 5:
            raise GraphError("cn2 needs n >= 5, got {}".format(spec.r))
    elif spec.tag in LADDER_TAGS:
        if spec.r is None or spec.r < 3:
            raise GraphError("{} needs r >= 3, got {}".format(spec.tag, spec.r))


def build(spec):
    if isinstance(spec, str):
        spec = parse_family(spec)
    _check_size(spec)
    tag, r = spec.tag, spec.r
    if tag == CAYLEY:
        graph = cayley(spec.orders, spec.connection)
        elements = _group_elements(spec.orders)
        layout = {_element_name(e): i for i, e in enumerate(elements)}
        return Family(spec, graph, layout)
    if tag in FIXED_GRAPHS:
        n, pairs = FIXED_GRAPHS[tag]
        edges = [(u - 1, v - 1) for u, v in pairs]
        layout = {"v{}".format(k): k - 1 for k in range(1, n + 1)}
    elif tag == CN2:
        n, edges, layout = _square_of_circuit(r)
    elif tag == PR or tag == M:
        n, edges, layout = 2 * r, ladder_edges(r, tag == M), _ladder_layout(r)
    elif tag == CL:
        n, edges, layout = _cyclic_ladder(r)
    elif tag == NCL:
        n, edges, layout = _non_cyclic_ladder(r)
    elif tag in (PR_BOXTIMES, M_BOXTIMES):
        n, edges, layout = _boxtimes(r, tag == M_BOXTIMES)
    elif tag in (PR_BOXMINUS, M_BOXMINUS):
        n, edges, layout = _boxminus(r, tag == M_BOXMINUS)
    elif tag in (PR_BOXMINUS_MINUS, M_BOXMINUS_MINUS):
        n, edges, layout = _boxminus(r, tag == M_BOXMINUS_MINUS, with_breaking_edge=False)
    else:
        raise UsageError("unknown family tag {!r}".format(tag))
    return Family(spec, new_graph(n, edges), layout)


def build_graph(tag, r=None):
    return build(FamilySpec(tag, r)).graph


def _group_elements(orders):
    return list(product(*[range(o) for o in orders]))


def _normalize(orders, element):
    element = tuple(int(c) for c in element)
    if len(element) != len(orders):
        raise GraphError(
            "element {} does not match group orders {}".format(element, tuple(orders))
        )
    return tuple(c % o for c, o in zip(element, orders))


def _negate(orders, element):
    return tuple((-c) % o for c, o in zip(element, orders))


def cayley(orders, connection):
    orders = tuple(int(o) for o in orders)
    if not orders or any(o < 1 for o in orders):
        raise GraphError("group orders must be positive, got {}".format(orders))
    size = prod(orders)
    cap = setting("cayley_max_order")
    if size > cap:
        raise CapacityError("Cayley graphs are limited to order {}, got {}".format(cap, size))
    conn = {_normalize(orders, s) for s in connection}
    zero = tuple(0 for _ in orders)
    if zero in conn:
        raise GraphError("connection set contains the identity")
    for s in conn:
        if _negate(orders, s) not in conn:
            raise GraphError("connection set is not symmetric: missing -{}".format(s))
    elements = _group_elements(orders)
    index = {e: i for i, e in enumerate(elements)}
    edges = set()
    for a in elements:
        for s in conn:
            b = tuple((x + y) % o for x, y, o in zip(a, s, orders))
            i, j = index[a], index[b]
            edges.add((min(i, j), max(i, j)))
    return new_graph(size, sorted(edges))


def generates_group(orders, connection):
    return is_connected(cayley(orders, connection))


def _symmetric_classes(n):
    classes = []
    for s in range(1, n // 2 + 1):
        classes.append(tuple(sorted({s, (n - s) % n})))
    return classes


def cyclic_connection_sets(n, degree):
    classes = _symmetric_classes(n)
    for k in range(len(classes) + 1):
        for chosen in combinations(classes, k):
            members = [s for cls in chosen for s in cls]
            if len(members) == degree:
                yield tuple(sorted(members))


def cyclic_cayley_witness(g, n):
    cap = setting("not_cayley_max_vertices")
    if n > cap:
        raise CapacityError("cyclic Cayley search is limited to {} vertices, got {}".format(cap, n))
    if g.n != n:
        raise GraphError("graph has {} vertices, group has order {}".format(g.n, n))
    degrees = {g.degree(v) for v in g.vertices()}
    if len(degrees) > 1:
        raise InapplicableError("graph is not regular, so it is not a Cayley graph")
    degree = degrees.pop() if degrees else 0
    for conn in cyclic_connection_sets(n, degree):
        candidate = cayley((n,), [(s,) for s in conn])
        if find_isomorphism(g, candidate) is not None:
            return conn
    return None


def not_cayley_on_cyclic(g, n):
    return cyclic_cayley_witness(g, n) is None
