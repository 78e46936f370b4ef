"""Theorem-verification harness over a corpus of graphs and corona pairs.

Each check re-derives the claimed bound or structural property on every
corpus instance by exact enumeration.  Instances that exceed the search
caps are marked skipped, never failed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Tuple

from .automorphisms import (
    SearchCapExceeded,
    decompose_corona_automorphism,
    enumerate_automorphisms,
    restriction_to_base,
)
from .config import RunConfig
from .constructive import (
    compute_M,
    corona_edge_labeling,
    corona_vertex_labeling,
    friendship_distinguishing_formula,
    friendship_splitting_formula,
    friendship_splitting_labeling,
    splitting_edge_labeling,
    splitting_vertex_labeling,
)
from .corona import CopyRole, neighbourhood_corona, splitting_graph
from .distinguishing import (
    DegenerateEdgeCase,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from .families import (
    complete,
    cycle,
    friendship,
    path,
    random_connected_graph,
    star,
)
from .graphs import EdgeLabeling, Graph

THEOREM_IDS = (
    "degree-formulas",
    "counts",
    "degree-gap",
    "max-degree-base",
    "decomposition",
    "singleton-copies",
    "splitting-vertex-bound",
    "splitting-edge-bound",
    "star-sharpness",
    "friendship-formula",
    "friendship-splitting",
    "ratio-trend",
    "corona-vertex-bound",
    "rigid-base-bound",
    "corona-edge-bound",
)


@dataclass
class TheoremReport:
    theorem: str
    instances: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances": self.instances,
            "skipped": self.skipped,
            "counterexamples": list(self.counterexamples),
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        }


@dataclass(frozen=True)
class Corpus:
    """Named single graphs and (g1, g2) corona pairs."""

    graphs: Tuple[Tuple[str, Graph], ...]
    pairs: Tuple[Tuple[str, Graph, Graph], ...]
    friendship_range: Tuple[int, ...] = (2, 3, 4)
    friendship_splitting_range: Tuple[int, ...] = (2, 3)
    star_range: Tuple[int, ...] = (2, 3)


def seeded_pairs(
    seed: int,
    count: int,
    max_n1: int = 5,
    max_n2: int = 3,
    require_edge_base: bool = False,
    vertex_cap: int = 24,
) -> list[Tuple[str, Graph, Graph]]:
    """Seeded random connected pairs whose corona fits under the cap.

    With require_edge_base, pairs whose factors have no finite
    distinguishing index (K1 and K2 shapes) are redrawn, since the edge
    construction needs distinguishing base edge labelings.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n1 = rng.randint(2, max_n1)
        n2 = rng.randint(1, max_n2)
        if n1 + n1 * n2 > vertex_cap:
            continue
        g1 = random_connected_graph(n1, rng)
        g2 = random_connected_graph(n2, rng)
        if require_edge_base:
            if g1.n < 3 or g2.n == 2:
                continue
        out.append((f"rand[{len(out)}](n1={n1},n2={n2})", g1, g2))
    return out


def asymmetric_graph() -> Graph:
    """A 6-vertex connected graph with trivial automorphism group (a path
    with a triangle bump); D = 1, used for the rigid-base checks."""
    from .graphs import make_graph

    return make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])


def default_corpus(config: RunConfig) -> Corpus:
    graphs = [(f"P{n}", path(n)) for n in range(2, 8)]
    graphs += [(f"C{n}", cycle(n)) for n in (4, 5, 6)]
    graphs += [("K4", complete(4)), ("K1,3", star(3)), ("K1,4", star(4))]
    graphs += [("F2", friendship(2)), ("F3", friendship(3)), ("A6", asymmetric_graph())]
    pairs = [
        ("A6*K2", asymmetric_graph(), complete(2)),
        ("A6*P3", asymmetric_graph(), path(3)),
        ("P4*P3", path(4), path(3)),
        ("C4*K2", cycle(4), complete(2)),
        ("P3*P2", path(3), path(2)),
        ("K2*P3", complete(2), path(3)),
        ("K1,3*K1", star(3), complete(1)),
        ("F2*K1", friendship(2), complete(1)),
        ("F3*K1", friendship(3), complete(1)),
    ]
    pairs += seeded_pairs(config.seed, 10, vertex_cap=config.vertex_cap)
    return Corpus(tuple(graphs), tuple(pairs))


def _timed(check: Callable[[TheoremReport], None], theorem: str) -> TheoremReport:
    report = TheoremReport(theorem)
    start = time.perf_counter()
    check(report)
    report.seconds = time.perf_counter() - start
    return report


def run_theorem_harness(config: RunConfig, corpus: Optional[Corpus] = None) -> list[TheoremReport]:
    corpus = corpus if corpus is not None else default_corpus(config)
    checks = {
        "degree-formulas": lambda r: check_degree_formulas(r, corpus),
        "counts": lambda r: check_counts(r, corpus),
        "degree-gap": lambda r: check_degree_gap(r, corpus, config),
        "max-degree-base": lambda r: check_max_degree_stays_base(r, corpus, config),
        "decomposition": lambda r: check_decomposition(r, corpus, config),
        "singleton-copies": lambda r: check_singleton_copies(r, corpus, config),
        "splitting-vertex-bound": lambda r: check_splitting_vertex_bound(r, corpus, config),
        "splitting-edge-bound": lambda r: check_splitting_edge_bound(r, corpus, config),
        "star-sharpness": lambda r: check_star_sharpness(r, corpus, config),
        "friendship-formula": lambda r: check_friendship_formula(r, corpus, config),
        "friendship-splitting": lambda r: check_friendship_splitting(r, corpus, config),
        "ratio-trend": lambda r: check_ratio_trend(r),
        "corona-vertex-bound": lambda r: check_corona_vertex_bound(r, corpus, config),
        "rigid-base-bound": lambda r: check_rigid_base_bound(r, corpus, config),
        "corona-edge-bound": lambda r: check_corona_edge_bound(r, corpus, config),
    }
    return [_timed(checks[tid], tid) for tid in THEOREM_IDS]


def _connected_pairs(corpus: Corpus) -> Iterable[Tuple[str, Graph, Graph]]:
    for name, g1, g2 in corpus.pairs:
        if g1.is_connected() and g2.is_connected() and g1.n > 1:
            yield name, g1, g2


def check_degree_formulas(report: TheoremReport, corpus: Corpus) -> None:
    """Corona degrees: (n2+1)*d1(v) on the base, d2(u)+d1(v) in copies."""
    for name, g1, g2 in corpus.pairs:
        report.instances += 1
        cor = neighbourhood_corona(g1, g2)
        for i in range(g1.n):
            if cor.graph.degree(i) != (g2.n + 1) * g1.degree(i):
                report.counterexamples.append(f"{name}: base degree at v{i}")
        for i in range(g1.n):
            for j in range(g2.n):
                vid = cor.index.copy_id(i, j)
                if cor.graph.degree(vid) != g2.degree(j) + g1.degree(i):
                    report.counterexamples.append(f"{name}: copy degree at ({i},{j})")


def check_counts(report: TheoremReport, corpus: Corpus) -> None:
    """Corona has n1 + n1*n2 vertices and m1(2*n2+1) + n1*m2 edges."""
    for name, g1, g2 in corpus.pairs:
        report.instances += 1
        cor = neighbourhood_corona(g1, g2)
        if cor.n != g1.n + g1.n * g2.n:
            report.counterexamples.append(f"{name}: vertex count")
        if cor.graph.m != g1.m * (2 * g2.n + 1) + g1.n * g2.m:
            report.counterexamples.append(f"{name}: edge count")


def _corona_group(g1: Graph, g2: Graph, config: RunConfig):
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph, config.vertex_cap, config.group_cap)
    return cor, group


def check_degree_gap(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """If an automorphism sends a base vertex into copy k, the copy's host
    must have strictly larger g1-degree.  Expected vacuous: the event
    count itself is reported via instances of the inner loop."""
    for name, g1, g2 in _connected_pairs(corpus):
        report.instances += 1
        try:
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        events = 0
        for f in group.elements:
            for i in range(g1.n):
                role = cor.index.role_of(f(i))
                if isinstance(role, CopyRole):
                    events += 1
                    if not g1.degree(role.i) > g1.degree(i):
                        report.counterexamples.append(f"{name}: f(v{i}) in copy {role.i}")
        if events:
            report.counterexamples.append(f"{name}: {events} base-to-copy events")


def check_max_degree_stays_base(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """Maximum-degree base vertices are mapped into the base block."""
    for name, g1, g2 in _connected_pairs(corpus):
        report.instances += 1
        try:
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        dmax = max(g1.degree(v) for v in range(g1.n))
        tops = [v for v in range(g1.n) if g1.degree(v) == dmax]
        for f in group.elements:
            for v in tops:
                if f(v) >= g1.n:
                    report.counterexamples.append(f"{name}: max-degree v{v} leaves base")


def check_decomposition(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """Every corona automorphism restricts to the base and decomposes into
    per-copy automorphisms following a copy permutation."""
    for name, g1, g2 in _connected_pairs(corpus):
        report.instances += 1
        try:
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        for f in group.elements:
            try:
                restriction_to_base(cor, f)
                decompose_corona_automorphism(cor, f)
            except Exception as exc:
                report.counterexamples.append(f"{name}: {exc}")
                break


def check_singleton_copies(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """Splitting graphs: each singleton copy follows the copy permutation."""
    for name, g1, g2 in _connected_pairs(corpus):
        if g2.n != 1:
            continue
        report.instances += 1
        try:
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        for f in group.elements:
            try:
                dec = decompose_corona_automorphism(cor, f)
            except Exception as exc:
                report.counterexamples.append(f"{name}: {exc}")
                break
            for i in range(g1.n):
                if f(cor.index.copy_id(i, 0)) != cor.index.copy_id(dec.copy_map[i], 0):
                    report.counterexamples.append(f"{name}: copy {i} strays")


def check_splitting_vertex_bound(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """D(G*K1) <= D(G): the inherited labeling distinguishes G*K1."""
    for name, g in corpus.graphs:
        if not g.is_connected() or g.n < 2:
            continue
        report.instances += 1
        try:
            base = distinguishing_number(g, config.vertex_cap, config.group_cap, config.labeling_cap)
            lab = splitting_vertex_labeling(g, base.witness)
            cor = splitting_graph(g)
            group = enumerate_automorphisms(cor.graph, config.vertex_cap, config.group_cap)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        if not is_distinguishing_vertex(cor.graph, group, lab):
            report.counterexamples.append(f"{name}: labeling not distinguishing")
        if lab.label_count > base.value:
            report.counterexamples.append(f"{name}: uses more than D(G) labels")


def check_splitting_edge_bound(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """D'(G*K1) <= D'(G) via inherited edge labels (K2 excluded)."""
    for name, g in corpus.graphs:
        if not g.is_connected() or g.n < 3:
            continue
        report.instances += 1
        try:
            base = distinguishing_index(g, config.vertex_cap, config.group_cap, config.labeling_cap)
            lab = splitting_edge_labeling(g, base.witness)
            cor = splitting_graph(g)
            group = enumerate_automorphisms(cor.graph, config.vertex_cap, config.group_cap)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        except DegenerateEdgeCase:
            report.skipped += 1
            continue
        if not is_distinguishing_edge(cor.graph, group, lab):
            report.counterexamples.append(f"{name}: edge labeling not distinguishing")
        if lab.label_count > base.value:
            report.counterexamples.append(f"{name}: uses more than D'(G) labels")


def check_star_sharpness(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """D(K_{1,n}*K1) = n = D'(K_{1,n}*K1)."""
    for n in corpus.star_range:
        report.instances += 1
        cor = splitting_graph(star(n))
        try:
            dnum = distinguishing_number(
                cor.graph, config.vertex_cap, config.group_cap, config.labeling_cap
            )
            didx = distinguishing_index(
                cor.graph, config.vertex_cap, config.group_cap, config.labeling_cap
            )
        except SearchCapExceeded:
            report.skipped += 1
            continue
        if dnum.value != n:
            report.counterexamples.append(f"K1,{n}*K1: D = {dnum.value} != {n}")
        if didx.value != n:
            report.counterexamples.append(f"K1,{n}*K1: D' = {didx.value} != {n}")


def check_friendship_formula(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """Brute-force D(F_n) matches the closed form."""
    for n in corpus.friendship_range:
        report.instances += 1
        try:
            got = distinguishing_number(
                friendship(n), config.vertex_cap, config.group_cap, config.labeling_cap
            ).value
        except SearchCapExceeded:
            report.skipped += 1
            continue
        want = friendship_distinguishing_formula(n)
        if got != want:
            report.counterexamples.append(f"F{n}: D = {got} != {want}")


def check_friendship_splitting(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """Brute-force D(F_n*K1) matches the closed form, and the blade
    construction achieves it."""
    for n in corpus.friendship_splitting_range:
        report.instances += 1
        want = friendship_splitting_formula(n)
        cor = splitting_graph(friendship(n))
        try:
            got = distinguishing_number(
                cor.graph, config.vertex_cap, config.group_cap, config.labeling_cap
            ).value
            group = enumerate_automorphisms(cor.graph, config.vertex_cap, config.group_cap)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        if got != want:
            report.counterexamples.append(f"F{n}*K1: D = {got} != {want}")
        lab = friendship_splitting_labeling(n)
        if not is_distinguishing_vertex(cor.graph, group, lab):
            report.counterexamples.append(f"F{n}*K1: blade labeling not distinguishing")
        if lab.label_count != want:
            report.counterexamples.append(f"F{n}*K1: blade labeling label count")


RATIO_GRID = (100, 316, 1000, 3162, 10**4)


def check_ratio_trend(report: TheoremReport, grid: Optional[Iterable[int]] = None) -> None:
    """Formula-evaluated D(F_n*K1)/D(F_n) is non-increasing on a log grid
    from 10^2 to 10^4 and ends at or below 0.25.  (Pointwise the ratio
    wobbles with the ceilings for small n; only the trend is claimed.)"""
    ns = list(grid) if grid is not None else list(RATIO_GRID)
    prev = None
    for n in ns:
        report.instances += 1
        ratio = friendship_splitting_formula(n) / friendship_distinguishing_formula(n)
        if prev is not None and ratio > prev + 1e-12:
            report.counterexamples.append(f"ratio increased at n={n}")
        prev = ratio
    if prev is not None and prev > 0.25:
        report.counterexamples.append(f"ratio at n={ns[-1]} is {prev} > 0.25")


def check_corona_vertex_bound(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """D(G1*G2) <= max{D(G1), D(G2)+M}: the replacement-pattern labeling
    distinguishes and respects the label budget."""
    for name, g1, g2 in _connected_pairs(corpus):
        report.instances += 1
        try:
            d1 = distinguishing_number(g1, config.vertex_cap, config.group_cap, config.labeling_cap)
            d2 = distinguishing_number(g2, config.vertex_cap, config.group_cap, config.labeling_cap)
            lab = corona_vertex_labeling(g1, g2, d1.witness, d2.witness)
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        bound = max(d1.value, d2.value + compute_M(d1.value, d2.value))
        if not is_distinguishing_vertex(cor.graph, group, lab):
            report.counterexamples.append(f"{name}: labeling not distinguishing")
        if lab.label_count > bound:
            report.counterexamples.append(f"{name}: {lab.label_count} labels > {bound}")


def check_rigid_base_bound(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """When D(G1) = 1 the corona labeling needs at most D(G2) labels."""
    for name, g1, g2 in _connected_pairs(corpus):
        try:
            d1 = distinguishing_number(g1, config.vertex_cap, config.group_cap, config.labeling_cap)
        except SearchCapExceeded:
            continue
        if d1.value != 1:
            continue
        report.instances += 1
        try:
            d2 = distinguishing_number(g2, config.vertex_cap, config.group_cap, config.labeling_cap)
            lab = corona_vertex_labeling(g1, g2, d1.witness, d2.witness)
            cor, group = _corona_group(g1, g2, config)
        except SearchCapExceeded:
            report.skipped += 1
            continue
        if not is_distinguishing_vertex(cor.graph, group, lab):
            report.counterexamples.append(f"{name}: labeling not distinguishing")
        if lab.label_count > d2.value:
            report.counterexamples.append(f"{name}: {lab.label_count} labels > D(G2)")


def check_corona_edge_bound(report: TheoremReport, corpus: Corpus, config: RunConfig) -> None:
    """D'(G1*G2) <= max{D'(G1), D'(G2)} via the inherited edge labeling."""
    for name, g1, g2 in _connected_pairs(corpus):
        report.instances += 1
        try:
            d1 = distinguishing_index(g1, config.vertex_cap, config.group_cap, config.labeling_cap)
            if g2.m > 0:
                d2 = distinguishing_index(
                    g2, config.vertex_cap, config.group_cap, config.labeling_cap
                )
                b2w, b2v = d2.witness, d2.value
            else:
                b2w, b2v = EdgeLabeling({}), 0
            lab = corona_edge_labeling(g1, g2, d1.witness, b2w)
            cor, group = _corona_group(g1, g2, config)
        except (DegenerateEdgeCase, SearchCapExceeded):
            report.skipped += 1
            continue
        bound = max(d1.value, b2v)
        if not is_distinguishing_edge(cor.graph, group, lab):
            report.counterexamples.append(f"{name}: edge labeling not distinguishing")
        if lab.label_count > bound:
            report.counterexamples.append(f"{name}: {lab.label_count} labels > {bound}")
