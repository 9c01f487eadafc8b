"""Simple undirected graphs stored as per-vertex neighbor bitmasks.

Parsing (edge list, graph6), family generators, complement, connectivity,
degree profiles, diameter, and exhaustive labeled enumeration.  Edge bit
``j*(j-1)//2 + i`` for a pair ``i < j`` follows the graph6 column order,
so a graph's pair mask is exactly its graph6 payload bit stream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .numeric import SplitMix64

MAX_GRAPH6_N = 62  # short-form graph6 only
MAX_ENUM_N = 8


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


def pair_bit(i: int, j: int) -> int:
    """Bit index of the unordered pair {i, j} (requires i < j)."""
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count, neighbor bitmasks, edge count."""

    n: int
    adj: tuple[int, ...]
    m: int

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n=n, adj=tuple(adj), m=len(edges))

    @classmethod
    def from_pair_mask(cls, n: int, mask: int) -> "Graph":
        adj = [0] * n
        m = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                    m += 1
                k += 1
        if mask >> k:
            raise GraphFormatError("pair mask has bits beyond the last vertex pair")
        return cls(n=n, adj=tuple(adj), m=m)

    def pair_mask(self) -> int:
        mask = 0
        for j in range(1, self.n):
            row = self.adj[j]
            base = j * (j - 1) // 2
            for i in range(j):
                if row >> i & 1:
                    mask |= 1 << (base + i)
        return mask

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for j in range(1, self.n):
            row = self.adj[j]
            for i in range(j):
                if row >> i & 1:
                    out.append((i, j))
        return out

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' header plus m lines 'u v' (0-based vertices)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph6(line: str) -> Graph:
    """Decode a short-form graph6 string (n < 63)."""
    s = line.strip()
    if not s:
        raise GraphFormatError("empty graph6 input")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 (n >= 63) not supported")
    if n < 1:
        raise GraphFormatError("graph6 order must be >= 1")
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    payload = s[1:]
    if len(payload) != nbytes:
        raise GraphFormatError(
            f"graph6 payload for n={n} needs {nbytes} characters, got {len(payload)}"
        )
    mask = 0
    for k, ch in enumerate(payload):
        group = ord(ch) - 63
        for b in range(6):
            idx = 6 * k + b
            if group >> (5 - b) & 1:
                if idx >= npairs:
                    raise GraphFormatError("graph6 padding bits must be zero")
                mask |= 1 << idx
    return Graph.from_pair_mask(n, mask)


def to_graph6(g: Graph) -> str:
    """Encode as short-form graph6 (requires n < 63)."""
    if g.n > MAX_GRAPH6_N:
        raise GraphFormatError(f"graph6 short form supports n <= {MAX_GRAPH6_N}")
    mask = g.pair_mask()
    npairs = g.n * (g.n - 1) // 2
    chars = [chr(g.n + 63)]
    for k in range(0, npairs, 6):
        group = 0
        for b in range(6):
            if k + b < npairs and mask >> (k + b) & 1:
                group |= 1 << (5 - b)
        chars.append(chr(group + 63))
    return "".join(chars)


# --- families ---------------------------------------------------------------

_FAMILY_KINDS = ("complete", "multipartite", "cycle", "path", "star", "petersen", "gnp")


@dataclass(frozen=True)
class GraphFamily:
    """Declarative generator descriptor; validated on construction."""

    kind: str
    n: int | None = None
    parts: tuple[int, ...] | None = None
    p: float | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("complete", "path", "star"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.kind} family needs n >= 1")
        elif self.kind == "cycle":
            if self.n is None or self.n < 3:
                raise ValueError("cycle family needs n >= 3")
        elif self.kind == "multipartite":
            if self.parts is None or len(self.parts) < 2 or any(p < 1 for p in self.parts):
                raise ValueError("multipartite family needs >= 2 parts, each >= 1")
        elif self.kind == "gnp":
            if self.n is None or self.n < 1:
                raise ValueError("gnp family needs n >= 1")
            if self.p is None or not (0.0 <= self.p <= 1.0):
                raise ValueError("gnp family needs p in [0, 1]")
            if self.seed is None:
                raise ValueError("gnp family needs a seed")

    @classmethod
    def complete(cls, n): return cls("complete", n=n)

    @classmethod
    def multipartite(cls, parts): return cls("multipartite", parts=tuple(parts))

    @classmethod
    def cycle(cls, n): return cls("cycle", n=n)

    @classmethod
    def path(cls, n): return cls("path", n=n)

    @classmethod
    def star(cls, n): return cls("star", n=n)

    @classmethod
    def petersen(cls): return cls("petersen")

    @classmethod
    def gnp(cls, n, p, seed): return cls("gnp", n=n, p=p, seed=seed)


def generate(family: GraphFamily) -> Graph:
    """Build the standard labeled graph of a family."""
    k = family.kind
    if k == "complete":
        n = family.n
        return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))
    if k == "multipartite":
        bounds = list(itertools.accumulate((0,) + family.parts))
        n = bounds[-1]
        part_of = [0] * n
        for pi in range(len(family.parts)):
            for v in range(bounds[pi], bounds[pi + 1]):
                part_of[v] = pi
        edges = [(i, j) for i, j in itertools.combinations(range(n), 2)
                 if part_of[i] != part_of[j]]
        return Graph.from_edges(n, edges)
    if k == "cycle":
        n = family.n
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n - 1)] + [(0, n - 1)])
    if k == "path":
        n = family.n
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if k == "star":
        n = family.n
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if k == "petersen":
        edges = []
        for i in range(5):
            edges.append((i, (i + 1) % 5))          # outer cycle
            edges.append((i, i + 5))                # spokes
            edges.append((i + 5, (i + 2) % 5 + 5))  # inner pentagram
        return Graph.from_edges(10, sorted(set(tuple(sorted(e)) for e in edges)))
    if k == "gnp":
        # pairs scanned in lexicographic (i, j) order, one PRNG draw each
        rng = SplitMix64(family.seed)
        edges = []
        for i in range(family.n):
            for j in range(i + 1, family.n):
                if rng.next_float() < family.p:
                    edges.append((i, j))
        return Graph.from_edges(family.n, edges)
    raise ValueError(f"unknown family kind {k!r}")


# --- structural queries ------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(n=g.n, adj=adj, m=g.n * (g.n - 1) // 2 - g.m)


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            nxt |= g.adj[v]
            frontier &= frontier - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


@dataclass(frozen=True)
class DegreeProfile:
    """Non-increasing degree sequence with its two largest entries."""

    degrees: tuple[int, ...]
    delta1: int
    delta2: int


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n < 2:
        raise ValueError("degree profile needs n >= 2")
    degs = tuple(sorted(g.degrees(), reverse=True))
    return DegreeProfile(degrees=degs, delta1=degs[0], delta2=degs[1])


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; raises on disconnected input."""
    best = 0
    full = (1 << g.n) - 1
    for src in range(g.n):
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                nxt |= g.adj[v]
                frontier &= frontier - 1
            frontier = nxt & ~seen
            if frontier:
                seen |= frontier
                d += 1
        if seen != full:
            raise DisconnectedGraphError("diameter of a disconnected graph")
        best = max(best, d)
    return best


def regularity(g: Graph) -> int | None:
    """Common degree r if the graph is regular, else None."""
    degs = g.degrees()
    r = degs[0]
    return r if all(d == r for d in degs) else None


# --- exhaustive enumeration --------------------------------------------------

def _mask_connected(n: int, mask: int) -> bool:
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            nxt |= adj[v]
            frontier &= frontier - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def connected_pair_masks(n: int, start: int = 0, step: int = 1) -> Iterator[int]:
    """Ascending pair masks of connected labeled graphs; stride lets workers shard."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    npairs = n * (n - 1) // 2
    need = n - 1  # fewer edges can never connect n vertices
    for mask in range(start, 1 << npairs, step):
        if bin(mask).count("1") < need:
            continue
        if _mask_connected(n, mask):
            yield mask


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices, ascending pair-mask order."""
    for mask in connected_pair_masks(n):
        yield Graph.from_pair_mask(n, mask)


def enumerate_regular(n: int, r: int, connected_only: bool = False) -> Iterator[Graph]:
    """Labeled r-regular graphs on n vertices by degree-constrained backtracking.

    Deterministic lexicographic order of neighbor choices; far cheaper than
    filtering the full 2**C(n,2) enumeration once n reaches 8.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    if not 0 <= r < n:
        raise ValueError(f"regularity must satisfy 0 <= r < n, got {r}")
    if n * r % 2:
        return
    adj = [0] * n
    deg = [0] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(adj)
            return
        need = r - deg[v]
        if need < 0:
            return
        cands = [u for u in range(v + 1, n) if deg[u] < r]
        if need > len(cands):
            return
        # remaining stubs beyond v must pair up among themselves
        for chosen in itertools.combinations(cands, need):
            for u in chosen:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
                deg[u] += 1
            deg[v] = r
            rest = sum(r - deg[u] for u in range(v + 1, n))
            if rest % 2 == 0 and all(
                r - deg[u] <= n - 1 - u + sum(1 for w in range(v + 1, u) if deg[w] < r)
                for u in range(v + 1, n)
            ):
                yield from extend(v + 1)
            deg[v] = r - need
            for u in chosen:
                adj[v] &= ~(1 << u)
                adj[u] &= ~(1 << v)
                deg[u] -= 1

    for snapshot in extend(0):
        g = Graph(n=n, adj=snapshot, m=n * r // 2)
        if connected_only and not is_connected(g):
            continue
        yield g
