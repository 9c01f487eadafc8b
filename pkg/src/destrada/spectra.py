"""Dense symmetric eigensolver and spectral utilities.

Full spectra come from Householder tridiagonalization followed by
implicit-shift QL iteration, written out here rather than delegated, so
the same arithmetic runs everywhere the harness does.  No eigenvectors
are accumulated; nothing downstream needs them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph
from .metric import DistanceMatrix, sum_sq_distances

# strictly-positive threshold for eigenvalue sign counts
ZERO_TOL = 1e-9
# |lambda_1(A) - r| allowed when a spectrum claims to come from an r-regular graph
REGULAR_SPECTRUM_TOL = 1e-8

_EPS = 2.220446049250313e-16
_TINY = 1e-300
_MAX_QL_SWEEPS = 50


class EigenConvergenceError(RuntimeError):
    """QL iteration exceeded the sweep budget (numerically pathological input)."""


@dataclass(frozen=True)
class SymMatrix:
    """Exactly symmetric real matrix."""

    n: int
    rows: tuple[tuple[float, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "SymMatrix":
        n = len(rows)
        data = tuple(tuple(float(x) for x in row) for row in rows)
        if any(len(row) != n for row in data):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if data[i][j] != data[j][i]:
                    raise ValueError(f"asymmetric entries at ({i}, {j})")
        return cls(n=n, rows=data)

    def trace(self) -> float:
        return math.fsum(self.rows[i][i] for i in range(self.n))

    def frobenius_sq(self) -> float:
        return math.fsum(x * x for row in self.rows for x in row)


def adjacency_matrix(g: Graph) -> SymMatrix:
    rows = tuple(
        tuple(1.0 if g.adj[i] >> j & 1 else 0.0 for j in range(g.n))
        for i in range(g.n)
    )
    return SymMatrix(n=g.n, rows=rows)


def distance_sym(dm: DistanceMatrix) -> SymMatrix:
    return SymMatrix(n=dm.n, rows=tuple(tuple(float(x) for x in row) for row in dm.rows))


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted non-increasing."""

    values: tuple[float, ...]

    def __post_init__(self):
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum must be sorted non-increasing")

    def __len__(self) -> int:
        return len(self.values)


def _tridiagonalize(a: list[list[float]], n: int) -> tuple[list[float], list[float]]:
    """Householder reduction in place; returns (diagonal, subdiagonal e[1..n-1])."""
    e = [0.0] * n
    for i in range(n - 1, 0, -1):
        l = i - 1
        if l > 0:
            scale = 0.0
            ai = a[i]
            for k in range(l + 1):
                scale += abs(ai[k])
            if scale == 0.0:
                e[i] = ai[l]
                continue
            h = 0.0
            inv = 1.0 / scale
            for k in range(l + 1):
                ai[k] *= inv
                h += ai[k] * ai[k]
            f = ai[l]
            g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
            e[i] = scale * g
            h -= f * g
            ai[l] = f - g
            f = 0.0
            for j in range(l + 1):
                g = 0.0
                aj = a[j]
                for k in range(j + 1):
                    g += aj[k] * ai[k]
                for k in range(j + 1, l + 1):
                    g += a[k][j] * ai[k]
                e[j] = g / h
                f += e[j] * ai[j]
            hh = f / (h + h)
            for j in range(l + 1):
                f = ai[j]
                g = e[j] - hh * f
                e[j] = g
                aj = a[j]
                for k in range(j + 1):
                    aj[k] -= f * e[k] + g * ai[k]
        else:
            e[i] = a[i][l]
    d = [a[i][i] for i in range(n)]
    return d, e


def _ql_implicit_shift(d: list[float], e: list[float], n: int) -> None:
    """Eigenvalues of a symmetric tridiagonal matrix, overwriting d."""
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd + _TINY:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise EigenConvergenceError(
                    f"QL failed to converge within {_MAX_QL_SWEEPS} sweeps"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0


def eig_sym(mat: SymMatrix) -> Spectrum:
    """All eigenvalues of a symmetric matrix, sorted non-increasing."""
    n = mat.n
    if n == 1:
        return Spectrum(values=(mat.rows[0][0],))
    a = [list(row) for row in mat.rows]
    d, e = _tridiagonalize(a, n)
    _ql_implicit_shift(d, e, n)
    d.sort(reverse=True)
    return Spectrum(values=tuple(d))


def count_positive(s: Spectrum) -> int:
    """Number of eigenvalues strictly above the zero threshold."""
    return sum(1 for v in s.values if v > ZERO_TOL)


def lemma1_check(s: Spectrum, dm: DistanceMatrix) -> tuple[float, float]:
    """Residuals of the two distance-spectrum trace identities.

    Returns (|sum of eigenvalues|, |sum of squares - 2 * sum d_ij^2|); a
    correct spectrum of dm keeps both below 1e-9 * max(1, 2 * sum d_ij^2).
    """
    ssq2 = 2 * sum_sq_distances(dm)
    r_sum = abs(math.fsum(s.values))
    r_sumsq = abs(math.fsum(v * v for v in s.values) - ssq2)
    return r_sum, r_sumsq


def _check_regular_head(s: Spectrum, r: int) -> None:
    if abs(s.values[0] - r) > REGULAR_SPECTRUM_TOL:
        raise ValueError(
            f"leading eigenvalue {s.values[0]!r} does not match regularity {r}"
        )


def lemma2_spectrum(adj_spectrum: Spectrum, n: int, r: int) -> Spectrum:
    """Distance spectrum of an r-regular diameter-<=2 graph from its A-spectrum.

    {2n - 2 - r} joined with {-2 - lambda_i(A)} over the non-leading values.
    """
    _check_regular_head(adj_spectrum, r)
    values = [float(2 * n - 2 - r)]
    values.extend(-2.0 - v for v in adj_spectrum.values[1:])
    values.sort(reverse=True)
    return Spectrum(values=tuple(values))


def complement_adj_spectrum(adj_spectrum: Spectrum, n: int, r: int) -> Spectrum:
    """Adjacency spectrum of the complement of an r-regular graph.

    {n - r - 1} joined with {-1 - lambda_i(A)} over the non-leading values.
    """
    _check_regular_head(adj_spectrum, r)
    values = [float(n - r - 1)]
    values.extend(-1.0 - v for v in adj_spectrum.values[1:])
    values.sort(reverse=True)
    return Spectrum(values=tuple(values))
