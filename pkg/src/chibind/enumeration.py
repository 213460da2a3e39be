"""Non-isomorphic graph generation, canonical forms, and graph6 interchange.

Generation extends each (n-1)-vertex representative by one vertex over all
neighbour subsets and keeps one representative per canonical form.  Hereditary
freeness filters prune during extension (a forbidden copy in a child must use
the new vertex), which is what makes exhaustive class sweeps at nine vertices
affordable.  Canonical forms come from equitable-partition refinement with an
individualise-and-refine search, taking the minimum adjacency string over the
explored orderings; cells of pairwise twins collapse to a single ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Iterator

from .errors import PreconditionError
from .graphs import CapacityError, Graph, GraphError, bits_of
from .patterns import Pattern, _as_graph, has_induced_using, is_free, parse_pattern_list

GENERATION_CAP = 10


# ---------------------------------------------------------------------------
# canonical forms


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        any_fat = False
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
            if len(cell) > 1:
                any_fat = True
        if not any_fat:
            return cells
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                row = adj[v]
                # packed per-cell neighbour counts; 7 bits per cell suffice
                sig = 0
                for m in masks:
                    sig = sig << 7 | (row & m).bit_count()
                got = buckets.get(sig)
                if got is None:
                    buckets[sig] = [v]
                else:
                    got.append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def _pairwise_twins(adj: tuple[int, ...], cell: list[int]) -> bool:
    for i in range(len(cell)):
        for j in range(i + 1, len(cell)):
            u, w = cell[i], cell[j]
            if adj[u] == adj[w]:
                continue
            if adj[u] ^ adj[w] == (1 << u) | (1 << w):
                continue
            return False
    return True


def _bits_under(n: int, adj: tuple[int, ...], perm: list[int]) -> int:
    bits = 0
    for j in range(1, n):
        row = adj[perm[j]]
        for i in range(j):
            bits = bits << 1 | (row >> perm[i] & 1)
    return bits


def _canon(n: int, adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Canonical bit string and a permutation achieving it (position -> vertex)."""
    if n == 0:
        return 0, ()
    best_bits = -1
    best_perm: tuple[int, ...] = ()

    def descend(cells: list[list[int]]) -> None:
        nonlocal best_bits, best_perm
        cells = _refine(adj, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            perm = [c[0] for c in cells]
            bits = _bits_under(n, adj, perm)
            if best_bits < 0 or bits < best_bits:
                best_bits = bits
                best_perm = tuple(perm)
            return
        cell = cells[idx]
        if _pairwise_twins(adj, cell):
            split = [[v] for v in sorted(cell)]
            descend(cells[:idx] + split + cells[idx + 1:])
            return
        for v in cell:
            rest = [u for u in cell if u != v]
            descend(cells[:idx] + [[v], rest] + cells[idx + 1:])

    descend([list(range(n))])
    return best_bits, best_perm


def _apply_perm(n: int, adj: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    pos = [0] * n
    for p, v in enumerate(perm):
        pos[v] = p
    rows = []
    for p in range(n):
        out = 0
        for v in bits_of(adj[perm[p]]):
            out |= 1 << pos[v]
        rows.append(out)
    return tuple(rows)


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: vertex count plus canonical adjacency bits."""
    bits, _ = _canon(g.n, g.adj)
    return g.n, bits


def canonical_form(g: Graph) -> Graph:
    """The canonically labelled copy of ``g``."""
    _, perm = _canon(g.n, g.adj)
    return Graph(g.n, _apply_perm(g.n, g.adj, perm), g.label)


# ---------------------------------------------------------------------------
# generation


_GEN_CACHE: dict[tuple, list[tuple[int, ...]]] = {}


def _pattern_cache_key(free_graphs: tuple[Graph, ...]) -> tuple:
    return tuple(sorted(canonical_key(pg) for pg in free_graphs))


def _representatives(n: int, free_graphs: tuple[Graph, ...]) -> list[tuple[int, ...]]:
    key = (n, _pattern_cache_key(free_graphs))
    cached = _GEN_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 0:
        out = [()]
    elif n == 1:
        g1 = Graph(1, (0,))
        out = [(0,)] if is_free(g1, free_graphs) else []
    else:
        parents = _representatives(n - 1, free_graphs)
        newbit = 1 << (n - 1)
        seen: set[int] = set()
        out_pairs: list[tuple[int, tuple[int, ...]]] = []
        pats = [pg for pg in free_graphs if pg.n <= n]
        for padj in parents:
            for sub in range(1 << (n - 1)):
                child = tuple(
                    padj[v] | newbit if sub >> v & 1 else padj[v] for v in range(n - 1)
                ) + (sub,)
                if any(has_induced_using(child, n, pg, n - 1) for pg in pats):
                    continue
                bits, perm = _canon(n, child)
                if bits in seen:
                    continue
                seen.add(bits)
                out_pairs.append((bits, _apply_perm(n, child, perm)))
        out_pairs.sort()
        out = [adj for _, adj in out_pairs]
    _GEN_CACHE[key] = out
    return out


def representatives(n: int, free_of: Iterable[Pattern | Graph | str] = ()) -> list[Graph]:
    """Canonically labelled representatives on exactly ``n`` vertices, in
    canonical-string order, restricted to the hereditary class avoiding
    ``free_of`` as induced subgraphs."""
    if n > GENERATION_CAP:
        raise PreconditionError(f"generation supports at most {GENERATION_CAP} vertices")
    free_graphs = tuple(_as_graph(p) for p in free_of)
    return [Graph(n, adj) for adj in _representatives(n, free_graphs)]


# ---------------------------------------------------------------------------
# graph6


def encode_graph6(g: Graph) -> str:
    """Standard short-form graph6 text for a graph on at most 62 vertices."""
    if g.n > 62:
        raise CapacityError("short-form graph6 supports at most 62 vertices")
    chunks = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chunks.append(chr(63 + acc))
    return "".join(chunks)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; rejects long forms and malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    if not s.isascii():
        raise GraphError("graph6 input must be ASCII")
    first = ord(s[0])
    if first == 126:
        raise GraphError("long-form graph6 (more than 62 vertices) is not supported")
    n = first - 63
    if not 0 <= n <= 62:
        raise GraphError(f"graph6 header byte {first} outside the short-form range")
    payload = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(payload) != need:
        raise GraphError(f"graph6 payload has {len(payload)} bytes, expected {need}")
    bits = 0
    for ch in payload:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphError(f"graph6 payload byte {b} out of range")
        bits = bits << 6 | (b - 63)
    total = need * 6
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            bit = bits >> (total - 1 - pos) & 1
            pos += 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def iter_graph6_file(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield decode_graph6(line)


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count


# ---------------------------------------------------------------------------
# streams


@dataclass(frozen=True)
class GraphStream:
    """A deterministic graph source with class filters applied before emission.

    ``source`` is either ``("generated", n, connected_only)`` or
    ``("file", path)``.  Freeness filters on generated sources prune during
    extension; the emitted members are identical to post-filtering because the
    classes are hereditary.
    """

    source: tuple
    free_of: tuple = ()
    connected_only: bool = False
    omega_min: int | None = None
    omega_max: int | None = None

    def __iter__(self) -> Iterator[Graph]:
        from .graphs import is_connected
        from .invariants import clique_number

        if self.source[0] == "generated":
            _, n, conn = self.source
            base: Iterable[Graph] = representatives(n, self.free_of)
            conn = conn or self.connected_only
        else:
            base = iter_graph6_file(self.source[1])
            base = (g for g in base if is_free(g, self.free_of)) if self.free_of else base
            conn = self.connected_only
        for g in base:
            if conn and not is_connected(g):
                continue
            if self.omega_min is not None or self.omega_max is not None:
                w = clique_number(g)
                if self.omega_min is not None and w < self.omega_min:
                    continue
                if self.omega_max is not None and w > self.omega_max:
                    continue
            yield g


def generate(n: int, connected_only: bool = False) -> GraphStream:
    """One representative per isomorphism class on exactly ``n`` vertices."""
    if n > GENERATION_CAP:
        raise PreconditionError(f"generation supports at most {GENERATION_CAP} vertices")
    return GraphStream(("generated", n, connected_only))


def from_file(path: str) -> GraphStream:
    return GraphStream(("file", path))


def filter_stream(stream: GraphStream, free_of: Iterable[Pattern | Graph | str] = (),
                  connected: bool | None = None, omega_min: int | None = None,
                  omega_max: int | None = None) -> GraphStream:
    """Narrow a stream; unknown pattern names fail immediately."""
    resolved = tuple(_as_graph(p) for p in free_of)
    merged = stream.free_of + resolved
    return replace(
        stream,
        free_of=merged,
        connected_only=stream.connected_only if connected is None else connected,
        omega_min=omega_min if omega_min is not None else stream.omega_min,
        omega_max=omega_max if omega_max is not None else stream.omega_max,
    )


def parse_free_argument(text: str) -> tuple[Graph, ...]:
    """CLI helper: resolve a comma-separated pattern list to graphs."""
    return tuple(p.graph for p in parse_pattern_list(text))
