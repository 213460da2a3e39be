"""Batch verification of the structural claims over enumerated graph universes.

Every target couples a filtered universe with a per-graph check.  Violations
of proved statements are implementation bugs by definition, so reports render
them as such; they carry a decodable graph6 witness.  Reports are byte-stable:
graphs are processed in canonical order, results are merged by sorting, and
timing is kept out of the canonical JSON.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .colorers import (
    bound_p5_k1_2k2,
    bound_p5_k1_k1k3,
    bound_p5_k23,
    classify_triangle_free,
    color_k1_union_k3_free,
    color_p5_k1_2k2,
    color_p5_k1_k1k3,
    color_p5_k23,
    color_sumner,
    color_wagon_2k2_free,
)
from .errors import PreconditionError, SearchExhaustedError
from .enumeration import GraphStream, encode_graph6, from_file
from .graphs import Graph, complement, cycle_graph, empty_graph, is_clique, is_connected
from .invariants import (
    chi_bound_divisible,
    chromatic_number,
    clique_number,
    find_perfect_division,
    independence_number,
    is_perfectly_divisible,
    is_proper_coloring,
)
from .patterns import (
    find_odd_hole,
    find_odd_antihole,
    is_perfect,
    odd_antihole_not_two_cliques,
    pattern,
)
from .structure import (
    check_antihole_lemma,
    check_c5_cutset_lemma,
    check_k1uk3_hole_lemma,
    check_k1uk3_level_lemma,
    check_k23_hole_lemma,
    check_k23_level_lemma,
    check_p5_hole_lemma,
    decompose_five_hole,
    find_all_five_holes,
    find_all_odd_antiholes,
    find_clique_cutset,
    find_dominating_clique_or_p3,
    find_five_hole,
    find_homogeneous_set,
    minimal_cutsets,
)

THREADS_ENV = "CHIBIND_THREADS"

_TRIPLE_INDEPENDENT = empty_graph(3, "3K1")


@dataclass(frozen=True)
class CheckOutcome:
    violations: tuple[str, ...] = ()
    ratio: float | None = None
    row: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    target: str
    params: dict
    graphs_checked: int
    violations: list[tuple[str, str]]
    extremes: dict
    wall_time: float
    rows: list[dict] = field(default_factory=list)

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "target": self.target,
            "params": self.params,
            "counts": {
                "graphs_checked": self.graphs_checked,
                "violations": len(self.violations),
            },
            "violations": [{"g6": g6, "detail": d} for g6, d in self.violations],
            "extremes": self.extremes,
        }
        if include_timing:
            payload["seconds"] = self.wall_time
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        keys = sorted({k for row in self.rows for k in row})
        lines = [",".join(keys)]
        for row in self.rows:
            lines.append(",".join(str(row.get(k, "")) for k in keys))
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        status = "ok" if not self.violations else "IMPLEMENTATION BUG SUSPECTED"
        return (f"{self.target}: {self.graphs_checked} graphs checked, "
                f"{len(self.violations)} violations [{status}] "
                f"({self.wall_time:.1f}s)")


@dataclass(frozen=True)
class Target:
    name: str
    default_cap: int
    hard_cap: int
    filter_desc: str
    streams: Callable[[int], Iterator[Graph]]
    admit: Callable[[Graph], bool]
    check: Callable[[Graph], CheckOutcome]


def _sizes(stream_fn: Callable[[int], GraphStream], n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from stream_fn(n)


def _free_stream(names: tuple, connected: bool = False, omega_min: int | None = None):
    def build(n: int) -> GraphStream:
        return GraphStream(("generated", n, connected),
                           free_of=tuple(_resolve(p) for p in names),
                           omega_min=omega_min)
    return build


def _resolve(p):
    return p.graph if hasattr(p, "graph") else (p if isinstance(p, Graph) else pattern(p).graph)


def _has_five_hole(g: Graph) -> bool:
    return find_five_hole(g) is not None


def _no_clique_cutset(g: Graph) -> bool:
    return find_clique_cutset(g) is None


# ---------------------------------------------------------------------------
# per-target checks


def _check_divisible(g: Graph) -> CheckOutcome:
    ok = is_perfectly_divisible(g)
    return CheckOutcome(() if ok else ("not perfectly divisible",),
                        row={"divisible": ok})


def _bound_check(g: Graph, bound_fn, pipeline, connected_only_pipeline: bool) -> CheckOutcome:
    w = clique_number(g)
    bound = bound_fn(w)
    chi, _ = chromatic_number(g)
    violations = []
    if chi > bound:
        violations.append(f"exact chromatic number {chi} exceeds bound {bound}")
    ratio = chi / bound if bound > 0 else None
    row = {"n": g.n, "omega": w, "chi": chi, "bound": bound}
    if not connected_only_pipeline or is_connected(g):
        coloring, cert = pipeline(g)
        if not is_proper_coloring(g, coloring):
            violations.append("pipeline colouring is improper")
        if cert.colors_used > bound:
            violations.append(f"pipeline used {cert.colors_used} colours above bound {bound}")
        if cert.colors_used < chi:
            violations.append("pipeline claims fewer colours than the chromatic number")
        ratio = cert.colors_used / bound if bound > 0 else None
        row["colors_used"] = cert.colors_used
        row["fallback"] = int(any(s.step == "exact-fallback" for s in cert.pipeline_trace))
    return CheckOutcome(tuple(violations), ratio, row)


def _check_t12(g: Graph) -> CheckOutcome:
    return _bound_check(g, bound_p5_k23, color_p5_k23, connected_only_pipeline=True)


def _check_t13(g: Graph) -> CheckOutcome:
    return _bound_check(g, bound_p5_k1_2k2, color_p5_k1_2k2, connected_only_pipeline=True)


def _check_t14(g: Graph) -> CheckOutcome:
    return _bound_check(g, bound_p5_k1_k1k3, color_p5_k1_k1k3, connected_only_pipeline=True)


def _check_wagon(g: Graph) -> CheckOutcome:
    w = clique_number(g)
    bound = (w * w + w) // 2
    chi, _ = chromatic_number(g)
    violations = []
    if chi > bound:
        violations.append(f"exact chromatic number {chi} exceeds bound {bound}")
    coloring = color_wagon_2k2_free(g)
    if not is_proper_coloring(g, coloring):
        violations.append("bucket colouring is improper")
    if coloring.used() > bound:
        violations.append(f"bucket colouring used {coloring.used()} above bound {bound}")
    ratio = coloring.used() / bound if bound else None
    return CheckOutcome(tuple(violations), ratio,
                        {"n": g.n, "omega": w, "chi": chi, "bound": bound,
                         "colors_used": coloring.used()})


def _check_sumner(g: Graph) -> CheckOutcome:
    chi, _ = chromatic_number(g)
    violations = []
    if chi > 3:
        violations.append(f"exact chromatic number {chi} exceeds 3")
    coloring = color_sumner(g)
    if not is_proper_coloring(g, coloring):
        violations.append("three-colouring is improper")
    if coloring.used() > 3:
        violations.append("three-colouring used more than 3 colours")
    shapes = [kind for kind, _ in classify_triangle_free(g)]
    if not all(kind in ("bipartite", "blown-up-five-hole") for kind in shapes):
        violations.append("component missing a structure proof")
    return CheckOutcome(tuple(violations), coloring.used() / 3,
                        {"n": g.n, "chi": chi, "colors_used": coloring.used(),
                         "shapes": "|".join(shapes)})


def _check_k1uk3_bound(g: Graph) -> CheckOutcome:
    w = clique_number(g)
    bound = 3 * w - 3
    chi, _ = chromatic_number(g)
    violations = []
    if chi > bound:
        violations.append(f"exact chromatic number {chi} exceeds bound {bound}")
    coloring = color_k1_union_k3_free(g)
    if not is_proper_coloring(g, coloring):
        violations.append("peeling colouring is improper")
    if coloring.used() > bound:
        violations.append(f"peeling colouring used {coloring.used()} above bound {bound}")
    return CheckOutcome(tuple(violations), coloring.used() / bound if bound else None,
                        {"n": g.n, "omega": w, "chi": chi, "bound": bound,
                         "colors_used": coloring.used()})


def _check_dominating(g: Graph) -> CheckOutcome:
    violations = []
    try:
        kind, found = find_dominating_clique_or_p3(g)
    except SearchExhaustedError:
        return CheckOutcome(("search exhausted without a dominating clique or three-path",))
    covered = found.mask
    for v in found:
        covered |= g.adj[v]
    if covered != (1 << g.n) - 1:
        violations.append("returned set does not dominate")
    if kind == "clique" and not is_clique(g, found):
        violations.append("returned clique is not a clique")
    if kind == "p3":
        from .graphs import induced

        sub = induced(g, found)
        if sub.edge_count() != 2 or max(sub.degree_sequence()) != 2:
            violations.append("returned three-path is not an induced path")
    return CheckOutcome(tuple(violations), row={"n": g.n, "kind": kind})


def _per_hole_check(checker) -> Callable[[Graph], CheckOutcome]:
    def run(g: Graph) -> CheckOutcome:
        violations: list[str] = []
        holes = find_all_five_holes(g)
        for hole in holes:
            dec = decompose_five_hole(g, hole)
            for v in checker(g, dec):
                violations.append(f"hole {hole}: {v}")
        return CheckOutcome(tuple(violations), row={"n": g.n, "holes": len(holes)})
    return run


def _check_c5_cutsets(g: Graph) -> CheckOutcome:
    return CheckOutcome(tuple(check_c5_cutset_lemma(g)), row={"n": g.n})


def _check_antiholes(g: Graph) -> CheckOutcome:
    return CheckOutcome(tuple(check_antihole_lemma(g)), row={"n": g.n})


def _check_two_cliques(g: Graph) -> CheckOutcome:
    ok = odd_antihole_not_two_cliques(g)
    return CheckOutcome(() if ok else ("odd antihole split into two cliques",),
                        row={"n": g.n})


def _antihole_stream(n: int) -> Iterator[Graph]:
    if n >= 5 and n % 2 == 1:
        yield complement(cycle_graph(n))


def _always(_: Graph) -> bool:
    return True


TARGETS: dict[str, Target] = {}


def _register(name: str, default_cap: int, hard_cap: int, filter_desc: str,
              streams, admit, check) -> None:
    TARGETS[name] = Target(name, default_cap, hard_cap, filter_desc, streams, admit, check)


_register("theorem-1.1", 8, 10, "connected, no induced P5/C5/K2,3",
          _free_stream(("P5", "C5", "K2,3"), connected=True), _always, _check_divisible)
_register("theorem-1.2", 9, 10, "no induced P5/K2,3, omega >= 2",
          _free_stream(("P5", "K2,3"), omega_min=2), _always, _check_t12)
_register("theorem-1.3", 9, 10, "connected, no induced P5/K1+2K2, omega >= 2",
          _free_stream(("P5", "K1+2K2"), connected=True, omega_min=2), _always, _check_t13)
_register("theorem-1.4", 9, 10, "no induced P5/K1+(K1uK3)",
          _free_stream(("P5", "K1+(K1uK3)")), _always, _check_t14)
_register("lemma-2.2", 9, 10, "no induced P5, with a five-hole",
          _free_stream(("P5",)), _has_five_hole, _per_hole_check(check_p5_hole_lemma))
_register("lemma-2.4", 8, 10, "independence number at most two",
          _free_stream((_TRIPLE_INDEPENDENT,)), _always, _check_divisible)
_register("lemma-3.1", 9, 10, "connected, no induced P5/C5/K2,3, no clique cutset",
          _free_stream(("P5", "C5", "K2,3"), connected=True), _no_clique_cutset,
          _check_c5_cutsets)
_register("lemma-4.1", 9, 10, "no induced P5/K2,3, with a five-hole",
          _free_stream(("P5", "K2,3")), _has_five_hole, _per_hole_check(check_k23_hole_lemma))
_register("lemma-4.2", 9, 10, "connected, no induced P5/K2,3, no clique cutset, five-hole",
          _free_stream(("P5", "K2,3"), connected=True),
          lambda g: _has_five_hole(g) and _no_clique_cutset(g),
          _per_hole_check(check_k23_level_lemma))
_register("lemma-5.1", 9, 10, "connected, no induced P5",
          _free_stream(("P5",), connected=True), _always, _check_dominating)
_register("lemma-5.2", 8, 10, "no induced 2K2",
          _free_stream(("2K2",)), _always, _check_wagon)
_register("lemma-6.1", 9, 10, "no induced P5/K3",
          _free_stream(("P5", "K3")), _always, _check_sumner)
_register("lemma-6.2", 9, 10, "no induced P5/K1uK3, at least one edge",
          _free_stream(("P5", "K1uK3")), lambda g: g.edge_count() >= 1, _check_k1uk3_bound)
_register("lemma-6.3", 9, 10, "connected, no induced P5/K1+(K1uK3), no clique cutset, five-hole",
          _free_stream(("P5", "K1+(K1uK3)"), connected=True),
          lambda g: _has_five_hole(g) and _no_clique_cutset(g),
          _per_hole_check(check_k1uk3_hole_lemma))
_register("lemma-6.4", 9, 10, "connected, no induced P5/K1+(K1uK3), no clique cutset, five-hole",
          _free_stream(("P5", "K1+(K1uK3)"), connected=True),
          lambda g: _has_five_hole(g) and _no_clique_cutset(g),
          _per_hole_check(check_k1uk3_level_lemma))
_register("lemma-6.5", 9, 10, "no induced P5/K1+(K1uK3), five-cycle-free, with a big odd antihole",
          _free_stream(("P5", "K1+(K1uK3)")),
          lambda g: not _has_five_hole(g) and bool(find_all_odd_antiholes(g, 7)),
          _check_antiholes)
# the two-cliques scan is exponential in the antihole length, so the cap stays
# well under the 64-vertex graph budget
_register("observation-2.1", 9, 21, "odd antiholes",
          lambda n: _antihole_stream(n), _always, _check_two_cliques)


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify(target: str, n_max: int | None = None, source: str | None = None,
           threads: int | None = None, keep_rows: bool = False,
           connected: bool = False) -> VerificationReport:
    """Run one verification target over its universe up to ``n_max`` vertices.

    ``source`` replaces the generated universe with a graph6 file; class
    filters and admission predicates still apply.  ``connected`` restricts a
    universe that is not already connected-only.  Results are independent of
    the thread count.
    """
    if target not in TARGETS:
        raise KeyError(f"unknown verification target {target!r}; known: {sorted(TARGETS)}")
    entry = TARGETS[target]
    cap = entry.default_cap if n_max is None else n_max
    if cap > entry.hard_cap:
        raise PreconditionError(f"{target} supports n_max up to {entry.hard_cap}")
    started = time.monotonic()
    if source is None:
        graphs: Iterable[Graph] = _sizes(entry.streams, cap)
        source_desc = "generated"
    else:
        graphs = _file_universe(source, entry, cap)
        source_desc = source

    def run_one(g: Graph):
        g6 = encode_graph6(g)
        outcome = entry.check(g)
        return g6, outcome

    admitted = (g for g in graphs
                if entry.admit(g) and (not connected or is_connected(g)))
    workers = threads if threads is not None else thread_count()
    results: list[tuple[str, CheckOutcome]] = []
    if workers <= 1:
        for g in admitted:
            results.append(run_one(g))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, admitted))
    results.sort(key=lambda item: (len(item[0]), item[0]))
    violations = []
    rows = []
    best_ratio = None
    witness = None
    for g6, outcome in results:
        for detail in outcome.violations:
            violations.append((g6, detail))
        if keep_rows:
            rows.append({"g6": g6, **outcome.row,
                         "ratio": outcome.ratio if outcome.ratio is not None else "",
                         "violations": len(outcome.violations)})
        if outcome.ratio is not None and (best_ratio is None or outcome.ratio > best_ratio):
            best_ratio = outcome.ratio
            witness = g6
    extremes = {}
    if best_ratio is not None:
        extremes = {"max_ratio": round(best_ratio, 6), "witness": witness}
    filter_desc = entry.filter_desc + (", connected" if connected else "")
    return VerificationReport(
        target=target,
        params={"n_max": cap, "filter": filter_desc, "source": source_desc},
        graphs_checked=len(results),
        violations=sorted(violations),
        extremes=extremes,
        wall_time=time.monotonic() - started,
        rows=rows,
    )


def _file_universe(path: str, entry: Target, cap: int) -> Iterator[Graph]:
    template = entry.streams(1)
    if isinstance(template, GraphStream):
        stream: Iterable[Graph] = GraphStream(
            ("file", path), free_of=template.free_of,
            connected_only=template.connected_only,
            omega_min=template.omega_min, omega_max=template.omega_max)
    else:
        stream = from_file(path)
    for g in stream:
        if g.n <= cap:
            yield g


# ---------------------------------------------------------------------------
# single-graph entry points


PIPELINES: dict[str, Callable] = {
    "p5-k23": color_p5_k23,
    "p5-k1-2k2": color_p5_k1_2k2,
    "p5-k1-k1uk3": color_p5_k1_k1k3,
}

SUB_COLORERS: dict[str, tuple[Callable, Callable[[int], int]]] = {
    "sumner": (color_sumner, lambda w: 3),
    "wagon-2k2": (color_wagon_2k2_free, lambda w: (w * w + w) // 2),
    "k1-union-k3": (color_k1_union_k3_free, lambda w: max(3 * w - 3, 1)),
    "divisible": (lambda g: chi_bound_divisible(g)[1], lambda w: w * (w + 1) // 2),
}


def color_one(g: Graph, pipeline: str) -> dict:
    """Colour one graph through a pipeline; raises on precondition failure."""
    if pipeline in PIPELINES:
        coloring, cert = PIPELINES[pipeline](g)
        trace = [
            {"step": s.step, "vertices": sorted(s.vertices), "palette": list(s.palette)}
            for s in cert.pipeline_trace
        ]
        return {
            "pipeline": pipeline,
            "n": g.n,
            "colors": list(coloring.colors),
            "colors_used": cert.colors_used,
            "omega": cert.omega,
            "bound": cert.bound_value,
            "trace": trace,
        }
    if pipeline in SUB_COLORERS:
        fn, bound_fn = SUB_COLORERS[pipeline]
        coloring = fn(g)
        w = clique_number(g)
        return {
            "pipeline": pipeline,
            "n": g.n,
            "colors": list(coloring.colors),
            "colors_used": coloring.used(),
            "omega": w,
            "bound": bound_fn(w),
            "trace": [],
        }
    raise KeyError(f"unknown pipeline {pipeline!r}; known: "
                   f"{sorted(PIPELINES) + sorted(SUB_COLORERS)}")


def analyze_one(g: Graph) -> dict:
    """Structural profile: invariants, searches, cutsets, and divisibility."""
    chi, _ = chromatic_number(g)
    hole = find_odd_hole(g)
    antihole = find_odd_antihole(g)
    homog = find_homogeneous_set(g)
    profile: dict = {
        "n": g.n,
        "edges": g.edge_count(),
        "degree_sequence": list(g.degree_sequence()),
        "connected": is_connected(g),
        "omega": clique_number(g),
        "alpha": independence_number(g),
        "chi": chi,
        "perfect": is_perfect(g),
        "odd_hole": sorted(hole) if hole else None,
        "odd_antihole": sorted(antihole) if antihole else None,
        "homogeneous_set": sorted(homog) if homog else None,
    }
    five = find_five_hole(g)
    if five is not None:
        dec = decompose_five_hole(g, five)
        profile["five_hole"] = list(five)
        profile["hole_classes"] = {
            "{" + ",".join(map(str, sorted(key))) + "}": sorted(vs)
            for key, vs in sorted(dec.classes.items(), key=lambda kv: sorted(kv[0]))
            if vs
        }
    if is_connected(g) and g.n >= 2:
        cut = find_clique_cutset(g)
        profile["clique_cutset"] = sorted(cut.cutset) if cut else None
        if g.n <= 12:
            profile["minimal_cutsets"] = [sorted(r.cutset) for r in minimal_cutsets(g)]
    if g.n <= 13:
        profile["perfectly_divisible"] = is_perfectly_divisible(g)
        division = find_perfect_division(g)
        if division is not None:
            profile["perfect_division"] = {
                "perfect_side": sorted(division.a),
                "rest": sorted(division.b),
                "omega": division.omega_g,
                "omega_rest": division.omega_b,
            }
    return profile
