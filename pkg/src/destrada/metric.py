"""All-pairs shortest-path distances of connected graphs, kept integral."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DisconnectedGraphError, Graph


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric integer hop-distance matrix; max entry is the diameter."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def diameter(self) -> int:
        return max(max(row) for row in self.rows)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every source; raises on any unreachable pair."""
    n = g.n
    full = (1 << n) - 1
    rows = []
    for src in range(n):
        row = [0] * n
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
                d += 1
                seen |= frontier
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    row[v] = d
                    f &= f - 1
        if seen != full:
            raise DisconnectedGraphError("distance matrix of a disconnected graph")
        rows.append(tuple(row))
    return DistanceMatrix(n=n, rows=tuple(rows))


def sum_sq_distances(dm: DistanceMatrix) -> int:
    """Sum of squared distances over unordered pairs, exact integer."""
    total = 0
    for i in range(dm.n):
        row = dm.rows[i]
        for j in range(i + 1, dm.n):
            total += row[j] * row[j]
    return total
