"""Structural analyzers: five-hole neighbourhood classes, distance levels,
homogeneous sets, cutsets, dominating cliques, and the checkable structure
facts the colouring pipelines rely on.

Checkers return violation lists rather than booleans so a harness can print
counterexample certificates.  On the graph classes these facts are proved for,
a nonempty list means an implementation bug, not a mathematical event.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionError, SearchExhaustedError, StructureAssertionError
from .graphs import (
    Graph,
    VertexSet,
    bits_of,
    components_masks,
    distances_from,
    induced,
    is_clique_mask,
    is_connected,
    is_independent_mask,
    neighborhood_mask,
)
from .invariants import clique_number_mask
from .patterns import _find_hole_tuple, is_free, pattern


def _class_key(*indices: int) -> frozenset[int]:
    """Literal 1-based class index set, reduced mod 5."""
    return frozenset((i - 1) % 5 + 1 for i in indices)


ALL_FIVE = _class_key(1, 2, 3, 4, 5)


@dataclass(frozen=True, eq=False)
class FiveHoleDecomposition:
    """A five-hole, the exact-neighbourhood classes on it, and distance levels.

    ``classes`` maps every nonempty index subset ``T`` of ``{1..5}`` to the
    vertices adjacent to exactly ``{v_i : i in T}`` on the hole.  ``levels[i]``
    holds the vertices at hop distance ``i+1`` from the hole; vertices in
    other components land in ``unreachable``.
    """

    hole: tuple[int, int, int, int, int]
    classes: dict[frozenset[int], VertexSet]
    levels: tuple[VertexSet, ...]
    unreachable: VertexSet

    def hole_vertex(self, i: int) -> int:
        """1-based, cyclic: index 6 means index 1."""
        return self.hole[(i - 1) % 5]

    def neighbor_class(self, *indices: int) -> VertexSet:
        return self.classes[_class_key(*indices)]

    def level(self, i: int) -> VertexSet:
        n = self.levels[0].n if self.levels else self.unreachable.n
        if 1 <= i <= len(self.levels):
            return self.levels[i - 1]
        return VertexSet(0, n)

    def hole_set(self) -> VertexSet:
        n = self.unreachable.n
        return VertexSet.of(self.hole, n)


def find_all_five_holes(g: Graph) -> list[tuple[int, ...]]:
    """Every induced five-cycle, one canonical ordering per vertex set."""
    out = []
    for combo in itertools.combinations(range(g.n), 5):
        sub = 0
        for v in combo:
            sub |= 1 << v
        tup = _find_hole_tuple(g.adj, sub, 5)
        if tup is not None:
            out.append(tup)
    return out


def find_five_hole(g: Graph) -> tuple[int, ...] | None:
    """Least induced five-cycle in canonical cyclic order, or None."""
    holes = find_all_five_holes(g)
    return min(holes) if holes else None


def decompose_five_hole(g: Graph, hole: tuple[int, ...], p5_free: bool = False) -> FiveHoleDecomposition:
    """Classify every vertex off the hole by exact hole-neighbourhood and level.

    With ``p5_free`` set, the class-shape facts that hold in every P5-free
    host are asserted: singleton and adjacent-pair classes are empty, the
    distance-two classes and consecutive triples see nothing at level two,
    and a connected host has no vertices past level three.
    """
    if len(hole) != 5 or len(set(hole)) != 5:
        raise PreconditionError("a five-hole needs five distinct vertices")
    for i in range(5):
        a, b = hole[i], hole[(i + 1) % 5]
        c = hole[(i + 2) % 5]
        if not g.has_edge(a, b):
            raise PreconditionError(f"hole vertices {a},{b} are not adjacent")
        if g.has_edge(a, c):
            raise PreconditionError(f"hole chord {a},{c}: cycle is not induced")
    n = g.n
    hole_mask = 0
    for v in hole:
        hole_mask |= 1 << v
    dist = distances_from(g, VertexSet(hole_mask, n))
    depth = max((d for d in dist if d is not None), default=0)
    level_masks = [0] * depth
    unreachable = 0
    for v in range(n):
        d = dist[v]
        if d is None:
            unreachable |= 1 << v
        elif d >= 1:
            level_masks[d - 1] |= 1 << v
    classes: dict[frozenset[int], int] = {}
    if depth >= 1:
        for x in bits_of(level_masks[0]):
            key = frozenset(i + 1 for i in range(5) if g.has_edge(x, hole[i]))
            classes[key] = classes.get(key, 0) | (1 << x)
    class_sets = {}
    for r in range(1, 6):
        for combo in itertools.combinations(range(1, 6), r):
            key = frozenset(combo)
            class_sets[key] = VertexSet(classes.get(key, 0), n)
    dec = FiveHoleDecomposition(
        hole=tuple(hole),
        classes=class_sets,
        levels=tuple(VertexSet(m, n) for m in level_masks),
        unreachable=VertexSet(unreachable, n),
    )
    if p5_free:
        problems = _p5_class_shape_violations(g, dec)
        if is_connected(g) and len(dec.levels) > 3:
            problems.append("a connected P5-free host has vertices past level three")
        if problems:
            raise StructureAssertionError("; ".join(problems))
    return dec


def _p5_class_shape_violations(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    out = []
    level2 = dec.level(2).mask
    for i in range(1, 6):
        if dec.neighbor_class(i):
            out.append(f"singleton class {{{i}}} is nonempty")
        if dec.neighbor_class(i, i + 1):
            out.append(f"adjacent-pair class {{{i},{i + 1}}} is nonempty")
        near = dec.neighbor_class(i, i + 2).mask | dec.neighbor_class(i, i + 1, i + 2).mask
        for x in bits_of(near):
            if g.adj[x] & level2:
                out.append(f"vertex {x} in a distance-two or consecutive-triple class sees level two")
    return out


def check_p5_hole_lemma(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    """Structure facts of P5-free hosts around a five-hole; empty when correct."""
    out = _p5_class_shape_violations(g, dec)
    if is_connected(g) and len(dec.levels) > 3:
        out.append("connected host has vertices past level three")
    level1 = dec.level(1)
    level3 = dec.level(3).mask
    for x in level1:
        if level3:
            dist_x = distances_from(g, VertexSet(1 << x, g.n))
            reach2 = 0
            for v in range(g.n):
                if dist_x[v] == 2:
                    reach2 |= 1 << v
            if reach2 & level3 and _class_key(*_class_of(g, dec, x)) != ALL_FIVE:
                out.append(f"vertex {x} reaches level three at distance two but misses a hole vertex")
    for x in dec.level(2):
        for comp in components_masks(g.adj, level3):
            hit = g.adj[x] & comp
            if hit and hit != comp:
                out.append(f"level-two vertex {x} is neither complete nor anticomplete to a level-three component")
    return out


def _class_of(g: Graph, dec: FiveHoleDecomposition, x: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, 6) if g.has_edge(x, dec.hole_vertex(i)))


def five_cliques_partition(g: Graph, dec: FiveHoleDecomposition) -> tuple[VertexSet, ...]:
    """The five clique groups covering the classes outside the all-five class
    and the consecutive triples; group ``i`` avoids hole vertex ``v_i``."""
    nc = dec.neighbor_class
    groups = (
        nc(2, 5) | nc(2, 3, 5) | nc(2, 4, 5) | nc(2, 3, 4, 5),
        nc(1, 3) | nc(1, 3, 4) | nc(1, 3, 5) | nc(1, 3, 4, 5),
        nc(2, 4) | nc(1, 2, 4, 5),
        nc(3, 5) | nc(1, 2, 3, 5),
        nc(1, 4) | nc(1, 2, 4) | nc(1, 2, 3, 4),
    )
    return groups


def is_bad_pair(g: Graph, dec: FiveHoleDecomposition, u: int, v: int) -> bool:
    """Non-adjacent hole neighbours whose classes pair up as
    ``{i,i+1,i+3}`` against ``{i,i+1,i+2,i+4}`` for some ``i``."""
    level1 = dec.level(1)
    if u not in level1 or v not in level1:
        raise PreconditionError("bad pairs are defined for hole neighbours")
    if g.has_edge(u, v):
        raise PreconditionError("bad pairs are non-adjacent by definition")
    tu = frozenset(_class_of(g, dec, u))
    tv = frozenset(_class_of(g, dec, v))
    for i in range(1, 6):
        three = _class_key(i, i + 1, i + 3)
        four = _class_key(i, i + 1, i + 2, i + 4)
        if (tu, tv) in ((three, four), (four, three)):
            return True
    return False


def check_k23_hole_lemma(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    """Structure facts of hosts with no induced P5 or K2,3 around a five-hole."""
    out = []
    n = g.n
    level1 = dec.level(1)
    level2 = dec.level(2).mask
    hv = dec.hole_vertex
    # (a) two common second neighbours on the hole with the middle missed force an edge
    for u, v in itertools.combinations(level1, 2):
        if g.has_edge(u, v):
            continue
        for i in range(1, 6):
            a, b, c = hv(i), hv(i + 1), hv(i + 2)
            if (g.has_edge(u, a) and g.has_edge(v, a) and g.has_edge(u, c)
                    and g.has_edge(v, c) and not g.has_edge(u, b) and not g.has_edge(v, b)):
                out.append(f"forced edge missing between {u} and {v} around hole position {i}")
    # (b) clique classes
    for i in range(1, 6):
        for key_desc, vs in (
            (f"{{{i},{i + 2}}}", dec.neighbor_class(i, i + 2)),
            (f"{{{i},{i + 1},{i + 3}}}", dec.neighbor_class(i, i + 1, i + 3)),
            (f"{{{i}..{i + 3}}}", dec.neighbor_class(i, i + 1, i + 2, i + 3)),
        ):
            if not is_clique_mask(g.adj, vs.mask):
                out.append(f"class {key_desc} is not a clique")
    # (c) small independence and completeness between consecutive triples
    if clique_number_mask(tuple(~r & ((1 << n) - 1) & ~(1 << v) for v, r in enumerate(g.adj)),
                          dec.neighbor_class(1, 2, 3, 4, 5).mask) > 2:
        out.append("all-five class has three pairwise non-adjacent vertices")
    comp_adj = tuple(~r & ((1 << n) - 1) & ~(1 << v) for v, r in enumerate(g.adj))
    for i in range(1, 6):
        triple = dec.neighbor_class(i, i + 1, i + 2).mask
        if clique_number_mask(comp_adj, triple) > 2:
            out.append(f"consecutive triple class at {i} has three pairwise non-adjacent vertices")
        nxt = dec.neighbor_class(i + 1, i + 2, i + 3).mask
        for x in bits_of(triple):
            if g.adj[x] & nxt != nxt:
                out.append(f"class at {i} is not complete to the next consecutive triple")
                break
    # (d) only bad pairs share level-two neighbours
    for u, v in itertools.combinations(level1, 2):
        if g.has_edge(u, v) or is_bad_pair(g, dec, u, v):
            continue
        if g.adj[u] & g.adj[v] & level2:
            out.append(f"non-adjacent non-bad pair {u},{v} shares a level-two neighbour")
    # (e) the five-clique partition
    groups = five_cliques_partition(g, dec)
    w = clique_number_mask(g.adj, (1 << n) - 1)
    expected = level1.mask & ~dec.neighbor_class(1, 2, 3, 4, 5).mask
    for i in range(1, 6):
        expected &= ~dec.neighbor_class(i, i + 1, i + 2).mask
    union = 0
    for i, grp in enumerate(groups, start=1):
        if union & grp.mask:
            out.append(f"clique group {i} overlaps an earlier group")
        union |= grp.mask
        if not is_clique_mask(g.adj, grp.mask):
            out.append(f"clique group {i} is not a clique")
        if len(grp) > max(w - 1, 0):
            out.append(f"clique group {i} exceeds size omega-1")
        if g.adj[hv(i)] & grp.mask:
            out.append(f"hole vertex v{i} has a neighbour in its own clique group")
    if union != expected:
        out.append("clique groups do not partition the leftover hole neighbourhood")
    return out


def check_k23_level_lemma(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    """Level facts of hosts with no induced P5 or K2,3 and no clique cutset:
    nothing at level three, small independence per level-two component, and
    full-clique components attach only through the all-five class."""
    out = []
    n = g.n
    comp_adj = tuple(~r & ((1 << n) - 1) & ~(1 << v) for v, r in enumerate(g.adj))
    if dec.level(3):
        out.append("level three is nonempty")
    w = clique_number_mask(g.adj, (1 << n) - 1)
    allfive = dec.neighbor_class(1, 2, 3, 4, 5).mask
    for comp in components_masks(g.adj, dec.level(2).mask):
        if clique_number_mask(comp_adj, comp) > 2:
            out.append("a level-two component has three pairwise non-adjacent vertices")
        if clique_number_mask(g.adj, comp) == w:
            attach = neighborhood_mask(g.adj, comp) & dec.level(1).mask
            if attach & ~allfive:
                out.append("a full-clique level-two component attaches outside the all-five class")
    return out


def check_k1uk3_hole_lemma(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    """Class facts of hosts free of P5 and of the join of a vertex to K1+K3."""
    out = []
    k1uk3 = pattern("K1uK3")
    k3 = pattern("K3")
    for i in range(1, 6):
        vi = dec.hole_vertex(i)
        if not is_free(induced(g, VertexSet(g.adj[vi], g.n)), [k1uk3]):
            out.append(f"neighbourhood of hole vertex v{i} induces K1uK3")
        if not is_free(induced(g, dec.neighbor_class(i, i + 2)), [k3]):
            out.append(f"class {{{i},{i + 2}}} induces a triangle")
        union = (dec.neighbor_class(i, i + 1, i + 2)
                 | dec.neighbor_class(i, i + 1, i + 3)
                 | dec.neighbor_class(i, i + 1, i + 2, i + 3))
        if not is_independent_mask(g.adj, union.mask):
            out.append(f"triple and quadruple classes starting at {i} are not independent")
    level1 = dec.level(1).mask
    for comp in components_masks(g.adj, dec.level(2).mask):
        dominated = any(g.adj[u] & comp == comp for u in bits_of(level1))
        if dominated:
            continue
        found = False
        for u, v in itertools.combinations(bits_of(level1), 2):
            if not g.has_edge(u, v) and g.adj[u] & comp and g.adj[v] & comp:
                found = True
                break
        if not found:
            out.append("an undominated level-two component lacks a non-adjacent attachment pair")
    return out


def triangle_free_level2_split(g: Graph, dec: FiveHoleDecomposition) -> tuple[VertexSet, VertexSet]:
    """Split level two into two triangle-free parts, component by component.

    A component dominated by one hole neighbour is triangle-free outright; an
    undominated one splits into the first attachment's neighbourhood and the
    rest, following the attachment-pair structure.  Both parts are re-checked
    before returning.
    """
    n = g.n
    level1 = dec.level(1).mask
    a_mask = 0
    b_mask = 0
    for comp in components_masks(g.adj, dec.level(2).mask):
        if any(g.adj[u] & comp == comp for u in bits_of(level1)):
            a_mask |= comp
            continue
        pair = None
        for u, v in itertools.combinations(bits_of(level1), 2):
            if not g.has_edge(u, v) and g.adj[u] & comp and g.adj[v] & comp:
                pair = (u, v)
                break
        if pair is None:
            raise StructureAssertionError("undominated level-two component lacks an attachment pair")
        u, _ = pair
        a_mask |= g.adj[u] & comp
        b_mask |= comp & ~g.adj[u]
    k3 = pattern("K3")
    for part, name in ((a_mask, "first"), (b_mask, "second")):
        if not is_free(induced(g, VertexSet(part, n)), [k3]):
            raise StructureAssertionError(f"{name} level-two part induces a triangle")
    return VertexSet(a_mask, n), VertexSet(b_mask, n)


def check_k1uk3_level_lemma(g: Graph, dec: FiveHoleDecomposition) -> list[str]:
    """Level facts for the same class: level three is triangle-free and level
    two splits into two triangle-free parts."""
    out = []
    k3 = pattern("K3")
    if not is_free(induced(g, dec.level(3)), [k3]):
        out.append("level three induces a triangle")
    try:
        triangle_free_level2_split(g, dec)
    except StructureAssertionError as exc:
        out.append(str(exc))
    return out


def find_all_odd_antiholes(g: Graph, min_length: int = 7) -> list[tuple[int, ...]]:
    """Odd antiholes of length at least ``min_length``, in cyclic complement
    order (consecutive tuple entries are non-adjacent), ascending by length
    then vertex set."""
    from .graphs import complement

    comp = complement(g)
    out = []
    for length in range(min_length | 1, g.n + 1, 2):
        for combo in itertools.combinations(range(g.n), length):
            sub = 0
            for v in combo:
                sub |= 1 << v
            tup = _find_hole_tuple(comp.adj, sub, length)
            if tup is not None:
                out.append(tup)
    return out


def antihole_neighborhood_split(
    g: Graph, order: tuple[int, ...]
) -> tuple[VertexSet, VertexSet, tuple[VertexSet, ...]]:
    """Split the neighbourhood of an odd antihole into the fully attached part
    ``S`` and the partially attached part ``T``, with ``T`` bucketed by the
    first position whose vertex is missed while the next and the third-next
    are hit.  Every partially attached vertex must land in a bucket.
    """
    n = g.n
    h = len(order)
    a_mask = 0
    for v in order:
        a_mask |= 1 << v
    nbrs = neighborhood_mask(g.adj, a_mask)
    s_mask = 0
    for x in bits_of(nbrs):
        if g.adj[x] & a_mask == a_mask:
            s_mask |= 1 << x
    t_mask = nbrs & ~s_mask
    buckets = [0] * h
    for x in bits_of(t_mask):
        for i in range(h):
            vi = order[i]
            vi1 = order[(i + 1) % h]
            vi3 = order[(i + 3) % h]
            if not g.has_edge(x, vi) and g.has_edge(x, vi1) and g.has_edge(x, vi3):
                buckets[i] |= 1 << x
                break
        else:
            raise StructureAssertionError(f"partially attached vertex {x} fits no antihole bucket")
    return (VertexSet(s_mask, n), VertexSet(t_mask, n),
            tuple(VertexSet(m, n) for m in buckets))


def check_antihole_lemma(g: Graph) -> list[str]:
    """Neighbourhood facts around big odd antiholes in five-cycle-free hosts:
    the fully attached part avoids K1uK3, the partial part splits into
    independent buckets, and nothing sits at distance two."""
    out = []
    k1uk3 = pattern("K1uK3")
    for order in find_all_odd_antiholes(g, 7):
        a_set = VertexSet.of(order, g.n)
        try:
            s, _t, buckets = antihole_neighborhood_split(g, order)
        except StructureAssertionError as exc:
            out.append(str(exc))
            continue
        if not is_free(induced(g, s), [k1uk3]):
            out.append("fully attached antihole neighbourhood induces K1uK3")
        for i, bucket in enumerate(buckets, start=1):
            if not is_independent_mask(g.adj, bucket.mask):
                out.append(f"antihole bucket {i} is not independent")
        dist = distances_from(g, a_set)
        if any(d == 2 for d in dist):
            out.append("a vertex sits at distance two from an odd antihole")
    return out


def find_homogeneous_set(g: Graph) -> VertexSet | None:
    """Smallest-then-least proper set every outside vertex sees fully or not at all.

    Seeds every vertex pair and closes it under splitters; the minimal closure
    over all pairs is exactly the smallest homogeneous set.
    """
    n = g.n
    if n < 3:
        return None
    full = (1 << n) - 1
    best: tuple[int, int] | None = None
    for u in range(n):
        for v in range(u + 1, n):
            x = (1 << u) | (1 << v)
            while x != full:
                splitters = 0
                for z in bits_of(full & ~x):
                    hit = g.adj[z] & x
                    if hit and hit != x:
                        splitters |= 1 << z
                if not splitters:
                    break
                x |= splitters
            if x == full:
                continue
            key = (x.bit_count(), x)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return VertexSet(best[1], n)


@dataclass(frozen=True)
class CutsetReport:
    """A separating set with its kind and the components it leaves behind."""

    cutset: VertexSet
    kind: str
    side_components: tuple[VertexSet, ...]


def _removal_components(g: Graph, mask: int) -> list[int]:
    return components_masks(g.adj, (1 << g.n) - 1 & ~mask)


def find_clique_cutset(g: Graph) -> CutsetReport | None:
    """Least clique (by size then members) whose removal disconnects ``g``."""
    if not is_connected(g):
        raise PreconditionError("clique cutsets are defined for connected graphs")
    n = g.n
    for size in range(1, max(n - 1, 0)):
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not is_clique_mask(g.adj, mask):
                continue
            comps = _removal_components(g, mask)
            if len(comps) >= 2:
                return CutsetReport(
                    VertexSet(mask, n), "clique-cutset",
                    tuple(VertexSet(c, n) for c in comps),
                )
    return None


def minimal_cutsets(g: Graph) -> list[CutsetReport]:
    """All inclusion-minimal separating sets, by exhaustive subset scan."""
    if not is_connected(g):
        raise PreconditionError("cutsets are defined for connected graphs")
    n = g.n
    if n > 12:
        raise PreconditionError("minimal-cutset scan supports at most 12 vertices")
    cutsets = []
    for mask in range(1, (1 << n) - 1):
        if len(_removal_components(g, mask)) >= 2:
            cutsets.append(mask)
    cutsets.sort(key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for mask in cutsets:
        if any(kept & mask == kept for kept in minimal):
            continue
        minimal.append(mask)
    return [
        CutsetReport(VertexSet(m, n), "minimal-cutset",
                     tuple(VertexSet(c, n) for c in _removal_components(g, m)))
        for m in minimal
    ]


def _dominates(g: Graph, mask: int) -> bool:
    full = (1 << g.n) - 1
    covered = mask
    for v in bits_of(mask):
        covered |= g.adj[v]
    return covered == full


def find_dominating_clique_or_p3(g: Graph) -> tuple[str, VertexSet]:
    """Least dominating clique, else least dominating induced three-path.

    Guaranteed to succeed on connected P5-free inputs; exhaustion on such an
    input signals a bug.
    """
    if not is_connected(g):
        raise PreconditionError("domination search needs a connected graph")
    n = g.n
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_clique_mask(g.adj, mask) and _dominates(g, mask):
                return "clique", VertexSet(mask, n)
    for combo in itertools.combinations(range(n), 3):
        sub = induced(g, VertexSet.of(combo, n))
        if sub.edge_count() == 2 and max(sub.degree_sequence()) == 2:
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _dominates(g, mask):
                return "p3", VertexSet(mask, n)
    raise SearchExhaustedError("no dominating clique or three-path found")


def _induced_path_interior_sizes(g: Graph, s1: int, s2: int, interior: int) -> list[int]:
    """Interior sizes of all induced s1-s2 paths with interior inside ``interior``."""
    sizes = []
    path = [s1]

    def extend(used: int) -> None:
        last = path[-1]
        if g.has_edge(last, s2) and all(not g.has_edge(p, s2) for p in path[:-1]):
            sizes.append(len(path) - 1)
        cand = g.adj[last] & interior & ~used
        for p in path[:-1]:
            cand &= ~g.adj[p]
        for v in bits_of(cand):
            path.append(v)
            extend(used | (1 << v))
            path.pop()

    extend(1 << s1)
    return sizes


def check_c5_cutset_lemma(g: Graph) -> list[str]:
    """Minimal-cutset facts for connected hosts free of P5, C5, and K2,3 with
    no clique cutset: two sides, length-two attachment paths, one-side
    completeness, and independence number exactly two on the cutset."""
    if not is_connected(g):
        raise PreconditionError("the cutset facts are about connected graphs")
    out = []
    n = g.n
    comp_adj = tuple(~r & ((1 << n) - 1) & ~(1 << v) for v, r in enumerate(g.adj))
    for report in minimal_cutsets(g):
        s_mask = report.cutset.mask
        comps = report.side_components
        if len(comps) != 2:
            out.append(f"minimal cutset {sorted(report.cutset)} leaves {len(comps)} components")
            continue
        for s1, s2 in itertools.combinations(report.cutset, 2):
            if g.has_edge(s1, s2):
                continue
            for side in comps:
                sizes = _induced_path_interior_sizes(g, s1, s2, side.mask)
                if not sizes:
                    out.append(f"no attachment path between {s1},{s2} through one side")
                elif any(k != 1 for k in sizes):
                    out.append(f"attachment path between {s1},{s2} has length above two")
        for s in report.cutset:
            if not any(g.adj[s] & side.mask == side.mask for side in comps):
                out.append(f"cutset vertex {s} is complete to neither side")
        if clique_number_mask(comp_adj, s_mask) != 2:
            out.append(f"cutset {sorted(report.cutset)} has independence number != 2")
    return out
