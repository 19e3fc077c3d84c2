"""Uniform hypergraphs, the sunflower builder and eigen-equation residuals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParams


@dataclass(frozen=True)
class SunflowerParams:
    """A k-uniform sunflower with s seeds and p petals.

    Seeds are vertices 1..s; petal i occupies the next k - s labels.
    """

    k: int
    s: int
    p: int

    def __post_init__(self):
        for name in ("k", "s", "p"):
            if not isinstance(getattr(self, name), int):
                raise InvalidParams("%s must be an integer" % name)
        if self.k < 2:
            raise InvalidParams("k must be at least 2, got %d" % self.k)
        if not 1 <= self.s <= self.k - 1:
            raise InvalidParams("s must satisfy 1 <= s <= k-1, got s=%d, k=%d" % (self.s, self.k))
        if self.p < 1:
            raise InvalidParams("p must be at least 1, got %d" % self.p)

    @property
    def n(self) -> int:
        return self.p * (self.k - self.s) + self.s

    @property
    def K(self) -> int:
        k, s = self.k, self.s
        return (k - 1) ** (k - s) - s * k ** (k - s - 1)

    def seeds(self) -> range:
        return range(1, self.s + 1)

    def petal(self, i: int) -> range:
        """Vertices of petal i (1-based)."""
        start = self.s + (i - 1) * (self.k - self.s) + 1
        return range(start, start + self.k - self.s)


@dataclass(frozen=True)
class UniformHypergraph:
    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def edges_at(self, v: int) -> list[int]:
        """Indices of edges containing v."""
        return [i for i, e in enumerate(self.edges) if v in e]

    def degree(self, v: int) -> int:
        return len(self.edges_at(v))


def make_sunflower(params: SunflowerParams) -> UniformHypergraph:
    seeds = tuple(params.seeds())
    edges = tuple(seeds + tuple(params.petal(i)) for i in range(1, params.p + 1))
    return UniformHypergraph(params.k, params.n, edges)


def validate(h: UniformHypergraph) -> str | None:
    """Return None if h is a well-formed k-uniform hypergraph, else the first violation."""
    seen = set()
    for idx, e in enumerate(h.edges):
        if len(e) != h.k:
            return "edge size: edge %d has %d vertices, expected %d" % (idx, len(e), h.k)
        if len(set(e)) != len(e):
            return "repeated vertex in edge %d" % idx
        if any(not 1 <= v <= h.n for v in e):
            return "vertex range: edge %d leaves [1, %d]" % (idx, h.n)
        if tuple(sorted(e)) != tuple(e):
            return "unsorted edge %d" % idx
        if e in seen:
            return "duplicate edge %d" % idx
        seen.add(e)
    return None


def eigen_residual(h: UniformHypergraph, lam: complex, x: Sequence[complex]) -> float:
    """Scale-free residual of lam * x_v^(k-1) = sum_{e ∋ v} prod_{u in e-v} x_u.

    The maximal per-vertex violation is divided by
    (1 + |lam|) * max(1, ||x||_inf^(k-1)).
    """
    if len(x) != h.n:
        raise ValueError("vector has length %d, hypergraph has %d vertices" % (len(x), h.n))
    x = [complex(v) for v in x]
    norm = max(abs(v) for v in x)
    if norm == 0:
        raise ValueError("zero vector is never an eigenvector")
    rhs = [0j] * h.n
    for e in h.edges:
        for v in e:
            prod = 1 + 0j
            for u in e:
                if u != v:
                    prod *= x[u - 1]
            rhs[v - 1] += prod
    worst = max(abs(lam * x[v] ** (h.k - 1) - rhs[v]) for v in range(h.n))
    return worst / ((1 + abs(lam)) * max(1.0, norm ** (h.k - 1)))
