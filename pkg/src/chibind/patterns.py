"""Forbidden-pattern catalog, induced-subgraph detection, and the perfection test.

Detection is one generic backtracking search over degree-feasible candidate
maps; every catalog pattern goes through the same audited code path.  Odd-hole
and odd-antihole search provide the perfection test, and both searches use a
canonical cycle ordering (least start vertex, smaller second neighbour first)
so certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .graphs import (
    Graph,
    VertexSet,
    bits_of,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    join,
    path_graph,
)


@dataclass(frozen=True)
class Pattern:
    """A named small graph from the catalog, or a user-supplied one."""

    name: str
    graph: Graph


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex -> host vertex witnessing an induced copy."""

    map: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.map)

    def image(self, n_host: int) -> VertexSet:
        return VertexSet.of(self.map, n_host)


def _build_catalog() -> dict[str, Pattern]:
    k1 = complete_graph(1)
    k2 = complete_graph(2)
    k3 = complete_graph(3)
    diamond = join(k1, path_graph(3))
    graphs: dict[str, Graph] = {}
    for t in range(2, 8):
        graphs[f"P{t}"] = path_graph(t)
    for t in range(4, 10):
        graphs[f"C{t}"] = cycle_graph(t)
    for t in range(1, 7):
        graphs[f"K{t}"] = complete_graph(t)
    graphs["K1,3"] = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    graphs["K2,3"] = join(empty_graph(2), empty_graph(3))
    graphs["2K2"] = disjoint_union(k2, k2)
    graphs["K1+2K2"] = join(k1, disjoint_union(k2, k2))
    graphs["K1uK3"] = disjoint_union(k1, k3)
    graphs["K1+(K1uK3)"] = join(k1, disjoint_union(k1, k3))
    graphs["bull"] = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
    graphs["cricket"] = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])
    graphs["diamond"] = diamond
    # pendant on a degree-2 vertex of the diamond (vertex 1 below)
    graphs["cochair"] = from_edge_list(5, list(diamond.edges()) + [(1, 4)])
    graphs["dart"] = join(k1, disjoint_union(k1, path_graph(3)))
    graphs["hammer"] = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    graphs["house"] = complement(path_graph(5))
    graphs["gem"] = join(k1, path_graph(4))
    graphs["gem+"] = join(k1, disjoint_union(k1, path_graph(4)))
    # diamond apex 0, path 1-2-3; new vertex joined to the degree-2 vertices 1 and 3
    graphs["paraglider"] = from_edge_list(5, list(diamond.edges()) + [(4, 1), (4, 3)])
    # standard banner: a 4-cycle with one pendant vertex; named but not drawn
    # alongside the rest of the catalog, so treated as externally defined
    graphs["banner"] = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    return {name: Pattern(name, g.relabel(name)) for name, g in graphs.items()}


PATTERN_CATALOG: dict[str, Pattern] = _build_catalog()

_NORMALIZED = {name.lower().replace("_", "").replace("{", "").replace("}", ""): name
               for name in PATTERN_CATALOG}


def pattern(name: str) -> Pattern:
    """Resolve a catalog pattern by name; lookup is case- and brace-insensitive."""
    key = name.strip().lower().replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    if key not in _NORMALIZED:
        raise KeyError(f"unknown pattern {name!r}")
    return PATTERN_CATALOG[_NORMALIZED[key]]


def pattern_names() -> tuple[str, ...]:
    return tuple(PATTERN_CATALOG)


def parse_pattern_list(text: str) -> list[Pattern]:
    """Parse a comma-separated pattern list.

    Names like ``K2,3`` contain a comma, so a purely numeric token is glued
    back onto its predecessor: ``"P5,K2,3"`` -> ``[P5, K2,3]``.
    """
    tokens: list[str] = []
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        if tok.isdigit() and tokens:
            tokens[-1] += "," + tok
        else:
            tokens.append(tok)
    return [pattern(tok) for tok in tokens]


def _as_graph(p: Pattern | Graph | str) -> Graph:
    if isinstance(p, Pattern):
        return p.graph
    if isinstance(p, Graph):
        return p
    return pattern(p).graph


def _candidate_masks(host_adj: tuple[int, ...], n: int, padj: tuple[int, ...], k: int) -> list[int] | None:
    # thresh[d] = vertices of degree at least d
    maxdeg = max((r.bit_count() for r in padj), default=0)
    thresh = [0] * (maxdeg + 1)
    for v in range(n):
        d = min(host_adj[v].bit_count(), maxdeg)
        thresh[d] |= 1 << v
    acc = 0
    for d in range(maxdeg, -1, -1):
        acc |= thresh[d]
        thresh[d] = acc
    cand = [thresh[padj[i].bit_count()] for i in range(k)]
    if any(not m for m in cand):
        return None
    return cand


@lru_cache(maxsize=4096)
def _connectivity_order(padj: tuple[int, ...], k: int, start: int) -> tuple[int, ...]:
    """Assignment order growing from ``start`` along pattern edges, so host
    candidates shrink to neighbourhoods as early as possible."""
    order = [start]
    seen = 1 << start
    while len(order) < k:
        nxt = -1
        for i in order:
            fresh = padj[i] & ~seen
            if fresh:
                nxt = (fresh & -fresh).bit_length() - 1
                break
        if nxt < 0:
            for i in range(k):
                if not seen >> i & 1:
                    nxt = i
                    break
        order.append(nxt)
        seen |= 1 << nxt
    return tuple(order)


def _embed(host_adj: tuple[int, ...], cand: list[int], padj: tuple[int, ...],
           order: tuple[int, ...], image: list[int], idx: int, used: int, forced: int) -> bool:
    k = len(order)
    if idx == k:
        return True
    i = order[idx]
    if idx == 0 and forced >= 0:
        allowed = 1 << forced
    else:
        allowed = cand[i] & ~used
        if forced >= 0:
            allowed &= ~(1 << forced)
    row = padj[i]
    for q in range(idx):
        j = order[q]
        if row >> j & 1:
            allowed &= host_adj[image[j]]
        else:
            allowed &= ~host_adj[image[j]]
        if not allowed:
            return False
    while allowed:
        low = allowed & -allowed
        allowed ^= low
        image[i] = low.bit_length() - 1
        if _embed(host_adj, cand, padj, order, image, idx + 1, used | low, forced):
            return True
    return False


def find_induced(host: Graph, pat: Pattern | Graph | str) -> Embedding | None:
    """Least induced embedding of ``pat`` in ``host`` under the deterministic
    search order, or None.

    Pattern vertices are assigned along a fixed connectivity-first order with
    host candidates tried ascending, so reruns agree byte for byte.
    """
    pg = _as_graph(pat)
    k, n = pg.n, host.n
    if k == 0:
        return Embedding(())
    if k > n:
        return None
    cand = _candidate_masks(host.adj, n, pg.adj, k)
    if cand is None:
        return None
    order = _connectivity_order(pg.adj, k, 0)
    image = [0] * k
    if _embed(host.adj, cand, pg.adj, order, image, 0, 0, -1):
        return Embedding(tuple(image))
    return None


@lru_cache(maxsize=1024)
def _pin_orbit_reps(padj: tuple[int, ...], k: int) -> tuple[int, ...]:
    """One pattern position per automorphism orbit; pinning only these loses
    nothing because an automorphism moves a pinned copy onto any orbit mate."""
    reps = []
    covered = [False] * k
    image = [0] * k
    for p in range(k):
        if covered[p]:
            continue
        reps.append(p)
        order = _connectivity_order(padj, k, p)
        for q in range(k):
            if not covered[q] and _embed(padj, [(1 << k) - 1] * k, padj, order, image, 0, 0, q):
                covered[q] = True
    return tuple(reps)


def has_induced_using(host_adj: tuple[int, ...], n: int, pg: Graph, vertex: int) -> bool:
    """True iff some induced copy of ``pg`` uses ``vertex``.

    Internal fast path for hereditary extension filtering: a freshly added
    vertex is the only place a new forbidden copy can appear.
    """
    k = pg.n
    if k == 0 or k > n:
        return k == 0
    padj = pg.adj
    vdeg = host_adj[vertex].bit_count()
    cand = _candidate_masks(host_adj, n, padj, k)
    if cand is None:
        return False
    image = [0] * k
    for pos in _pin_orbit_reps(padj, k):
        if padj[pos].bit_count() > vdeg:
            continue
        order = _connectivity_order(padj, k, pos)
        if _embed(host_adj, cand, padj, order, image, 0, 0, vertex):
            return True
    return False


def is_free(host: Graph, patterns: list[Pattern | Graph | str] | tuple) -> bool:
    """True iff ``host`` induces none of the listed patterns."""
    return all(find_induced(host, p) is None for p in patterns)


def _find_hole_tuple(adj: tuple[int, ...], sub: int, length: int) -> tuple[int, ...] | None:
    """Least induced cycle of exactly ``length`` vertices inside ``sub``.

    Canonical ordering: the cycle starts at its least vertex and runs toward
    the smaller of the two neighbours; tuples are produced in ascending
    lexicographic order, so the first hit is the least one.
    """
    if length > sub.bit_count():
        return None
    path = [0] * length

    def grow(depth: int, used: int, above_start: int) -> bool:
        last = path[depth - 1]
        if depth == length - 1:
            # closing vertex: adjacent to both ends, independent of the middle,
            # and larger than path[1] to fix the traversal direction
            allowed = adj[last] & adj[path[0]] & sub & ~used
            for j in range(1, depth - 1):
                allowed &= ~adj[path[j]]
            allowed &= ~((1 << (path[1] + 1)) - 1)
            if allowed:
                path[depth] = (allowed & -allowed).bit_length() - 1
                return True
            return False
        allowed = adj[last] & sub & ~used & above_start
        if depth >= 2:
            allowed &= ~adj[path[0]]
        for j in range(1, depth - 1):
            allowed &= ~adj[path[j]]
        for v in bits_of(allowed):
            path[depth] = v
            if grow(depth + 1, used | (1 << v), above_start):
                return True
        return False

    for s in bits_of(sub):
        path[0] = s
        if grow(1, 1 << s, ~((2 << s) - 1)):
            return tuple(path)
    return None


def has_odd_hole_mask(adj: tuple[int, ...], sub: int) -> bool:
    n = sub.bit_count()
    for length in range(5, n + 1, 2):
        if _find_hole_tuple(adj, sub, length) is not None:
            return True
    return False


def find_odd_hole(g: Graph) -> VertexSet | None:
    """Vertex set of the least induced odd cycle of length >= 5, or None."""
    full = (1 << g.n) - 1
    for length in range(5, g.n + 1, 2):
        tup = _find_hole_tuple(g.adj, full, length)
        if tup is not None:
            return VertexSet.of(tup, g.n)
    return None


def find_odd_antihole(g: Graph) -> VertexSet | None:
    """Vertex set of the least odd hole of the complement, or None."""
    return find_odd_hole(complement(g))


def is_perfect(g: Graph) -> bool:
    """No odd hole and no odd antihole, which characterises perfection."""
    full = (1 << g.n) - 1
    comp = complement(g)
    return not has_odd_hole_mask(g.adj, full) and not has_odd_hole_mask(comp.adj, full)


def is_perfect_mask(adj: tuple[int, ...], comp_adj: tuple[int, ...], sub: int) -> bool:
    """Perfection of the induced subgraph on ``sub`` given both adjacency views."""
    return not has_odd_hole_mask(adj, sub) and not has_odd_hole_mask(comp_adj, sub)


def is_odd_antihole(g: Graph) -> bool:
    """True iff ``g`` is the complement of a single odd cycle on >= 5 vertices."""
    if g.n < 5 or g.n % 2 == 0:
        return False
    comp = complement(g)
    if any(comp.degree(v) != 2 for v in range(g.n)):
        return False
    from .graphs import is_connected

    return is_connected(comp)


def odd_antihole_not_two_cliques(g: Graph) -> bool:
    """Exhaustively confirm no bipartition of an odd antihole into two cliques.

    The scan tries every bipartition; a True result certifies impossibility.
    """
    if not is_odd_antihole(g):
        raise PreconditionError("input is not an odd antihole on >= 5 vertices")
    from .graphs import is_clique_mask

    full = (1 << g.n) - 1
    for a in range(0, 1 << (g.n - 1)):
        if is_clique_mask(g.adj, a) and is_clique_mask(g.adj, full & ~a):
            return False
    return True
