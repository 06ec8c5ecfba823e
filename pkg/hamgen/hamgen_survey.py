"""Seeded sampling of dense graphs for the two open Hamilton-span questions.

Samples are drawn uniformly from the edge sets of a fixed vertex range (all pairs in ``dirac``
mode, cross pairs of two equal classes in ``bipartite-quarter`` mode) and rejected until the
minimum degree meets the floor. Each accepted graph is pushed through the exact pipeline and
reported as one record; the last record is a summary.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

try:
    from .hamgen_cycles import betti1, circuit_to_chain
    from .hamgen_errors import CapacityError, UsageError
    from .hamgen_families import CL, build_graph
    from .hamgen_gf2 import rank
    from .hamgen_graph import min_degree, new_graph
    from .hamgen_hamilton import hamilton_circuits, is_hamilton_connected, is_hamilton_laceable
    from .hamgen_report import FINDING, PASS
    from .hamgen_settings import REPORT_SCHEMA, SAMPLER_ID, log, setting
except ImportError:
    from hamgen_cycles import betti1, circuit_to_chain
    from hamgen_errors import CapacityError, UsageError
    from hamgen_families import CL, build_graph
    from hamgen_gf2 import rank
    from hamgen_graph import min_degree, new_graph
    from hamgen_hamilton import hamilton_circuits, is_hamilton_connected, is_hamilton_laceable
    from hamgen_report import FINDING, PASS
    from hamgen_settings import REPORT_SCHEMA, SAMPLER_ID, log, setting


DIRAC = "dirac"
QUARTER = "bipartite-quarter"
MODES = (DIRAC, QUARTER)
PARITIES = ("any", "odd", "even")
UNKNOWN = "unknown"

# mode -> (fraction of n, additive offset) for the default minimum degree
DEFAULT_THRESHOLDS = {
    DIRAC: (Fraction(1, 2), 0),
    QUARTER: (Fraction(1, 4), 1),
}


def parse_threshold(value):
    """A degree threshold as a fraction of n, from ``1/2``, ``0.6`` or a number."""
    if isinstance(value, bool):
        raise UsageError("bad degree threshold {!r}; use 1/2 or 0.6".format(value))
    if isinstance(value, float):
        value = repr(value)
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise UsageError("bad degree threshold {!r}; use 1/2 or 0.6".format(value)) from None


@dataclass(frozen=True)
class SurveyConfig:
    n: int
    mode: str = DIRAC
    delta_floor: object = None
    samples: int = 100
    seed: int = 0
    parity: str = "any"

    def threshold(self):
        """(fraction, offset); an explicit delta_floor carries no offset."""
        if self.delta_floor is None:
            return DEFAULT_THRESHOLDS.get(self.mode, DEFAULT_THRESHOLDS[DIRAC])
        return parse_threshold(self.delta_floor), 0

    def floor(self):
        fraction, offset = self.threshold()
        return math.ceil(fraction * self.n) + offset

    def validate(self):
        if self.mode not in MODES:
            raise UsageError("unknown survey mode {!r}".format(self.mode))
        if self.parity not in PARITIES:
            raise UsageError("unknown parity constraint {!r}".format(self.parity))
        if self.n < 4:
            raise UsageError("survey needs n >= 4, got {}".format(self.n))
        if self.n > setting("survey_max_vertices"):
            raise CapacityError(
                "survey n = {} exceeds the cap of {} vertices".format(
                    self.n, setting("survey_max_vertices")
                )
            )
        if self.parity == "odd" and self.n % 2 == 0:
            raise UsageError("n = {} is not odd".format(self.n))
        if self.parity == "even" and self.n % 2 == 1:
            raise UsageError("n = {} is not even".format(self.n))
        if self.mode == QUARTER and (self.n % 2 or self.n < 6):
            raise UsageError("{} mode needs an even n >= 6, got {}".format(QUARTER, self.n))
        top = self.n // 2 if self.mode == QUARTER else self.n - 1
        if not 0 <= self.floor() <= top:
            raise UsageError("degree floor {} outside [0, {}]".format(self.floor(), top))
        if self.samples < 1:
            raise UsageError("samples must be positive, got {}".format(self.samples))
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed {} is not a 64-bit unsigned integer".format(self.seed))
        return self


def candidate_pairs(cfg):
    if cfg.mode == QUARTER:
        half = cfg.n // 2
        pairs = [(a, half + b) for a in range(half) for b in range(half)]
    else:
        pairs = list(combinations(range(cfg.n), 2))
    return np.array(pairs, dtype=np.int64).reshape(-1, 2)


class EdgeSampler:
    """Uniform edge sets over ``pairs``, rejected until every degree reaches ``floor``."""

    def __init__(self, n, pairs, floor, seed, max_draws=None):
        self.n = n
        self.pairs = pairs
        self.floor = floor
        self.rng = np.random.default_rng(seed)
        self.max_draws = max_draws or setting("survey_max_rejections")
        self.draws = 0

    def draw(self):
        for attempt in range(1, self.max_draws + 1):
            mask = self.rng.integers(0, 2, size=len(self.pairs), dtype=np.uint8).astype(bool)
            chosen = self.pairs[mask]
            degrees = np.bincount(chosen.ravel(), minlength=self.n)
            if degrees.min() >= self.floor:
                self.draws += attempt
                return attempt, new_graph(self.n, [(int(u), int(v)) for u, v in chosen])
        self.draws += self.max_draws
        log(
            "no graph on {} vertices met degree floor {} after {} draws".format(
                self.n, self.floor, self.max_draws
            )
        )
        raise CapacityError(
            "rejection sampling exhausted {} draws at degree floor {}".format(
                self.max_draws, self.floor
            )
        )


def hamilton_codimension(g, cap=None, threads=None):
    """(circuits seen, span dimension, codimension or None, capped).

    A capped enumeration still decides codimension 0 once the partial span is full.
    """
    search = hamilton_circuits(g, limit=cap, threads=threads)
    dim = rank([circuit_to_chain(g, c) for c in search])
    ambient = betti1(g)
    if search.partial and dim < ambient:
        return len(search), dim, None, True
    return len(search), dim, ambient - dim, search.partial


def ladder_embeds(g):
    pattern = build_graph(CL, g.n // 2).to_networkx()
    return GraphMatcher(g.to_networkx(), pattern).subgraph_is_monomorphic()


def sample_record(cfg, index, draws, g, cap=None, threads=None):
    seen, dim, codim, capped = hamilton_codimension(g, cap, threads)
    record = {
        "record": "sample",
        "index": index,
        "draws": draws,
        "f1": g.f1,
        "min_degree": min_degree(g),
        "edges": [list(e) for e in g.edges],
        "betti1": betti1(g),
        "hamilton_circuits": seen,
        "span_dim": dim,
        "codimension": codim,
        "capped": capped,
    }
    if cfg.mode == QUARTER:
        record["laceable"] = is_hamilton_laceable(g).holds
        record["cl_embeds"] = ladder_embeds(g)
    else:
        record["hamilton_connected"] = is_hamilton_connected(g).holds
    return record


def candidate_reason(cfg, record):
    if cfg.mode == QUARTER:
        if not record["cl_embeds"]:
            return "no spanning bipartite cyclic ladder"
        return None
    if cfg.n % 2 and record["codimension"]:
        return "odd-order Dirac graph with Hamilton codimension {}".format(record["codimension"])
    return None


def header(cfg):
    fraction, offset = cfg.threshold()
    return {
        "record": "header",
        "schema": REPORT_SCHEMA,
        "sampler": SAMPLER_ID,
        "n": cfg.n,
        "mode": cfg.mode,
        "parity": cfg.parity,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "delta_threshold": str(fraction),
        "delta_offset": offset,
        "delta_floor": cfg.floor(),
    }


def run_survey(cfg, cap=None, threads=None):
    """Yield the header, one record per sample, and the summary."""
    cfg.validate()
    yield header(cfg)
    sampler = EdgeSampler(cfg.n, candidate_pairs(cfg), cfg.floor(), cfg.seed)
    histogram = {}
    candidates = []
    for index in range(cfg.samples):
        draws, g = sampler.draw()
        record = sample_record(cfg, index, draws, g, cap, threads)
        key = UNKNOWN if record["codimension"] is None else str(record["codimension"])
        histogram[key] = histogram.get(key, 0) + 1
        reason = candidate_reason(cfg, record)
        if reason:
            log("survey sample {} is a counterexample candidate: {}".format(index, reason))
            candidates.append(
                {
                    "index": index,
                    "reason": reason,
                    "codimension": record["codimension"],
                    "edges": record["edges"],
                }
            )
        yield record
    yield {
        "record": "summary",
        "sampler": SAMPLER_ID,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "draws": sampler.draws,
        "histogram": histogram,
        "candidates": candidates,
        "status": FINDING if candidates else PASS,
    }
