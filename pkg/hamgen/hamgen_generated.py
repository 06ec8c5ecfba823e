"""Codimension of circuit spans, the M / bM classes, lifting and realization."""

from dataclasses import dataclass

try:
    from .hamgen_cycles import betti1, circuit_to_chain, cycle_space_basis, make_circuit
    from .hamgen_errors import GraphError, InapplicableError
    from .hamgen_gf2 import EdgeVector, direct_sum_split, in_span, independent_indices, rank
    from .hamgen_graph import add_edge, bipartition
    from .hamgen_hamilton import (
        LengthSet,
        PairVerdict,
        circuits_with_lengths,
        find_path,
        is_laceable,
        is_path_connected,
    )
    from .hamgen_report import FINDING, PASS, VerificationReport, derived
except ImportError:
    from hamgen_cycles import betti1, circuit_to_chain, cycle_space_basis, make_circuit
    from hamgen_errors import GraphError, InapplicableError
    from hamgen_gf2 import EdgeVector, direct_sum_split, in_span, independent_indices, rank
    from hamgen_graph import add_edge, bipartition
    from hamgen_hamilton import (
        LengthSet,
        PairVerdict,
        circuits_with_lengths,
        find_path,
        is_laceable,
        is_path_connected,
    )
    from hamgen_report import FINDING, PASS, VerificationReport, derived


@dataclass(frozen=True)
class SpanReport:
    ambient_dim: int
    span_dim: int
    codimension: int
    basis_witness: tuple
    generator_count: int

    def to_dict(self):
        return {
            "ambient_dim": self.ambient_dim,
            "span_dim": self.span_dim,
            "codimension": self.codimension,
            "basis_witness": list(self.basis_witness),
            "generator_count": self.generator_count,
        }


@dataclass(frozen=True)
class Membership:
    span: SpanReport
    paths: object
    xi: int

    @property
    def holds(self):
        return self.span.codimension == self.xi and bool(self.paths)

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {
            "xi": self.xi,
            "span": self.span.to_dict(),
            "paths_ok": None if self.paths is None else self.paths.holds,
            "paths_witness": None if self.paths is None else self.paths.witness,
            "holds": self.holds,
        }


def enumerate_circuits(g, lengths, cap=None, threads=None):
    search = circuits_with_lengths(g, lengths, limit=cap, threads=threads)
    label = lengths.label() if isinstance(lengths, LengthSet) else sorted(lengths)
    return search.require_complete("enumeration of circuits with lengths {}".format(label))


def span_report(g, lengths, cap=None, threads=None, circuits=None):
    if circuits is None:
        circuits = enumerate_circuits(g, lengths, cap, threads)
    chains = [circuit_to_chain(g, c) for c in circuits]
    witness = independent_indices(chains)
    ambient = betti1(g)
    return SpanReport(ambient, len(witness), ambient - len(witness), tuple(witness), len(circuits))


def _check_xi(g, xi):
    ambient = betti1(g)
    if not 0 <= xi <= ambient:
        raise ValueError("codimension {} outside [0, {}]".format(xi, ambient))


def membership(g, lengths, xi, bipartite=False, cap=None, threads=None):
    _check_xi(g, xi)
    if bipartite and bipartition(g) is None:
        raise InapplicableError("the bipartite class needs a bipartite graph")
    span = span_report(g, lengths, cap, threads)
    if span.codimension != xi:
        return Membership(span, None, xi)
    paths = is_laceable(g, lengths) if bipartite else is_path_connected(g, lengths)
    return Membership(span, paths, xi)


def in_M(g, lengths, xi, cap=None, threads=None):
    return membership(g, lengths, xi, False, cap, threads).holds


def in_bM(g, lengths, xi, cap=None, threads=None):
    return membership(g, lengths, xi, True, cap, threads).holds


def embed_chain(g, h, v):
    return EdgeVector.from_support(h.f1, [h.edge_index(*g.edges[i]) for i in v.support()])


def lift_edge(g, lengths, xi, e, bipartite=False, cap=None, threads=None):
    u, v = int(e[0]), int(e[1])
    if g.has_edge(u, v):
        raise GraphError("{}-{} is already an edge".format(u, v))
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("{}-{} is not a valid new edge".format(u, v))
    if bipartite:
        classes = bipartition(g)
        if classes is None:
            raise InapplicableError("the bipartite class needs a bipartite graph")
        first = set(classes[0])
        if (u in first) == (v in first):
            raise ValueError("{}-{} joins two vertices of one bipartition class".format(u, v))
    before = membership(g, lengths, xi, bipartite, cap, threads)
    if not before.holds:
        raise ValueError(
            "graph is not in the {} class for lengths {} and codimension {}".format(
                "bM" if bipartite else "M", lengths.label(), xi
            )
        )
    h = add_edge(g, (u, v))
    path = find_path(g, u, v, lengths.minus_one().resolve(g, paths=True))
    computed = {"path_found": path is not None}
    expected = {
        "path_found": derived(True),
        "ds2": derived(True),
    }
    if xi == 0:
        expected["ds1"] = derived(True)
        expected["member_after"] = derived(True)
    if path is None:
        return VerificationReport.evaluate("lift", computed, expected, witness={"edge": (u, v)})

    circuit = make_circuit(h, path)
    u0 = circuit_to_chain(h, circuit)
    b0 = h.edge_index(u, v)

    g_chains = [
        embed_chain(g, h, circuit_to_chain(g, c))
        for c in enumerate_circuits(g, lengths, cap, threads)
    ]
    h_chains = [circuit_to_chain(h, c) for c in enumerate_circuits(h, lengths, cap, threads)]
    w_gens, cert = direct_sum_split(h_chains, b0, u0)
    dim_w = rank(w_gens)
    dim_g = before.span.span_dim
    covers = rank(w_gens + g_chains) == dim_w
    ds1 = dim_w == dim_g and covers

    z_h = cycle_space_basis(h)
    w2, _ = direct_sum_split(z_h, b0, u0)
    z_g = [embed_chain(g, h, x) for x in cycle_space_basis(g)]
    dim_w2 = rank(w2)
    ds2 = dim_w2 == betti1(g) and rank(w2 + z_g) == dim_w2

    after = membership(h, lengths, xi, bipartite, cap, threads)
    computed.update(
        {
            "circuit": str(circuit),
            "dim_span_before": dim_g,
            "dim_span_after": after.span.span_dim,
            "dim_w": dim_w,
            "ds1": ds1,
            "dim_cycle_space_before": betti1(g),
            "dim_cycle_space_after": betti1(h),
            "dim_w2": dim_w2,
            "ds2": ds2,
            "member_after": after.holds,
            "replaced_generators": len(cert.replaced),
        }
    )
    report = VerificationReport.evaluate(
        "lift", computed, expected, witness={"edge": (u, v), "path": path}
    )
    if xi != 0 and not (ds1 and after.holds) and report.status == PASS:
        report.status = FINDING
        report.note = "codimension changed when the edge was added"
    return report


def realize(g, target, lengths, cap=None, threads=None):
    circuits = enumerate_circuits(g, lengths, cap, threads)
    chains = [circuit_to_chain(g, c) for c in circuits]
    goal = circuit_to_chain(g, target)
    coefficients = in_span(goal, chains)
    if coefficients is None:
        return None
    return [c for c, bit in zip(circuits, coefficients) if bit]


def single_extra_circuit_suffices(g, cap=None, threads=None):
    """First circuit of length f0 - 1 that closes a codimension-1 Hamilton span, if any."""
    hamilton = [
        circuit_to_chain(g, c) for c in enumerate_circuits(g, LengthSet.hamilton(), cap, threads)
    ]
    if betti1(g) - rank(hamilton) != 1:
        return None
    for c in enumerate_circuits(g, LengthSet.missing_one(), cap, threads):
        if in_span(circuit_to_chain(g, c), hamilton) is None:
            return c
    return None
