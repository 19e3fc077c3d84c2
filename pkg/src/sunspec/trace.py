"""Brute-force spectral moments through rooted-edge sequences.

A rooted-edge sequence is d pairs (root, edge) with non-decreasing roots.
Each pair stands for the (k-1)! orderings of the non-root vertices, which
cancels the ((k-1)!)^-d normalization of the trace formula, so

    S_d = d (k-1)^n * sum over balanced sequences of t(D_f) / prod deg+(v)

where D_f is the multi-digraph sending one arc from each root to every other
vertex of its edge and t is the Matrix-Tree arborescence count.
Disconnected balanced digraphs have t = 0 and drop out on their own.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InvalidParams, SizeCapExceeded, VerificationError
from .hypergraph import SunflowerParams, UniformHypergraph, make_sunflower
from .linalg import ff_determinant

DEFAULT_SIZE_CAP = 10**7

Pair = tuple[int, int]  # (root vertex, edge index)


@dataclass(frozen=True)
class MultiDigraph:
    """Arc multiplicities; ``mult[u][v]`` counts arcs from vertex u+1 to v+1."""

    n: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise ValueError("multiplicity matrix must be %dx%d" % (self.n, self.n))
        if any(self.mult[i][i] for i in range(self.n)):
            raise ValueError("loops are not allowed")
        if any(m < 0 for row in self.mult for m in row):
            raise ValueError("negative arc multiplicity")

    @classmethod
    def from_arcs(cls, n: int, arcs: dict[tuple[int, int], int]) -> "MultiDigraph":
        """Build from ``{(u, v): multiplicity}`` with 1-based labels."""
        mult = [[0] * n for _ in range(n)]
        for (u, v), m in arcs.items():
            mult[u - 1][v - 1] += m
        return cls(n, tuple(map(tuple, mult)))

    @property
    def out_degrees(self) -> list[int]:
        return [sum(row) for row in self.mult]

    @property
    def in_degrees(self) -> list[int]:
        return [sum(col) for col in zip(*self.mult)] if self.n else []

    def out_degree(self, v: int) -> int:
        return sum(self.mult[v - 1])

    def in_degree(self, v: int) -> int:
        return sum(row[v - 1] for row in self.mult)

    def support(self) -> list[int]:
        """Non-isolated vertices, 1-based."""
        outs, ins = self.out_degrees, self.in_degrees
        return [v + 1 for v in range(self.n) if outs[v] or ins[v]]

    def laplacian(self) -> list[list[int]]:
        outs = self.out_degrees
        return [
            [outs[u] if u == v else -self.mult[u][v] for v in range(self.n)]
            for u in range(self.n)
        ]

    @property
    def arc_count(self) -> int:
        return sum(self.out_degrees)


@dataclass(frozen=True)
class RootedEdgeSeq:
    host: UniformHypergraph
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        roots = [r for r, _ in self.pairs]
        if roots != sorted(roots):
            raise ValueError("roots must be non-decreasing")
        for r, e in self.pairs:
            if not 0 <= e < len(self.host.edges) or r not in self.host.edges[e]:
                raise ValueError("root %d is not in edge %d" % (r, e))

    def edges_used(self) -> set[int]:
        return {e for _, e in self.pairs}


def build_Df(seq: RootedEdgeSeq) -> MultiDigraph:
    h = seq.host
    mult = [[0] * h.n for _ in range(h.n)]
    for r, e in seq.pairs:
        for v in h.edges[e]:
            if v != r:
                mult[r - 1][v - 1] += 1
    return MultiDigraph(h.n, tuple(map(tuple, mult)))


def is_balanced(dg: MultiDigraph) -> bool:
    return dg.out_degrees == dg.in_degrees


def arborescence_count(dg: MultiDigraph, root: int | None = None) -> int:
    """Matrix-Tree count: determinant of the out-degree Laplacian with the root deleted.

    Only non-isolated vertices take part; by default the first of them is the
    root. The result is 0 when the support is disconnected.
    """
    support = dg.support()
    if not support:
        raise ValueError("digraph has no arcs")
    if root is None:
        root = support[0]
    if root not in support:
        raise ValueError("root %d is isolated" % root)
    lap = dg.laplacian()
    keep = [v - 1 for v in support if v != root]
    return ff_determinant([[lap[i][j] for j in keep] for i in keep])


def out_degree_product(dg: MultiDigraph) -> int:
    prod = 1
    for deg in dg.out_degrees:
        if deg:
            prod *= deg
    return prod


def count_sequences(h: UniformHypergraph, d: int) -> int:
    """Number of root-sorted sequences of length d (before any balance filter)."""
    ways = [1] + [0] * d
    for v in range(1, h.n + 1):
        deg = h.degree(v)
        new = [0] * (d + 1)
        for j in range(d + 1):
            acc, pw = 0, 1
            for i in range(j + 1):
                acc += ways[j - i] * pw
                pw *= deg
            new[j] = acc
        ways = new
    return ways[d]


def iter_sequences(h: UniformHypergraph, d: int) -> Iterator[tuple[Pair, ...]]:
    """Every root-sorted sequence of length d, unfiltered."""
    for roots in itertools.combinations_with_replacement(range(1, h.n + 1), d):
        choices = [h.edges_at(r) for r in roots]
        for edges in itertools.product(*choices):
            yield tuple(zip(roots, edges))


def iter_balanced(
    h: UniformHypergraph, d: int, prefix: Sequence[Pair] = ()
) -> Iterator[tuple[tuple[Pair, ...], tuple[tuple[int, ...], ...]]]:
    """Depth-first search over root-sorted sequences whose digraph is balanced.

    Once the search moves past a root value, that vertex's out-degree is final
    and its in-degree can only grow, so in > out there is a dead end.
    Yields (pairs, multiplicity matrix) for every balanced sequence, in a
    deterministic order. ``prefix`` fixes the leading pairs.
    """
    n = h.n
    targets = {
        (v, e): [u - 1 for u in h.edges[e] if u != v]
        for v in range(1, n + 1)
        for e in h.edges_at(v)
    }
    incident = [h.edges_at(v) for v in range(1, n + 1)]
    mult = [[0] * n for _ in range(n)]
    outd = [0] * n
    ind = [0] * n
    pairs: list[Pair] = []

    def push(pair: Pair) -> None:
        r = pair[0] - 1
        for u in targets[pair]:
            mult[r][u] += 1
            ind[u] += 1
        outd[r] += len(targets[pair])
        pairs.append(pair)

    def pop() -> None:
        pair = pairs.pop()
        r = pair[0] - 1
        for u in targets[pair]:
            mult[r][u] -= 1
            ind[u] -= 1
        outd[r] -= len(targets[pair])

    for pair in prefix:
        push(pair)

    def rec(min_root: int) -> Iterator:
        if len(pairs) == d:
            if outd == ind:
                yield tuple(pairs), tuple(map(tuple, mult))
            return
        for u in range(min_root - 1):
            if ind[u] > outd[u]:
                return
        for r in range(min_root, n + 1):
            if r > min_root and ind[r - 2] > outd[r - 2]:
                return
            for e in incident[r - 1]:
                push((r, e))
                yield from rec(r)
                pop()

    start = prefix[-1][0] if prefix else 1
    yield from rec(start)


def _thread_count() -> int:
    raw = os.environ.get("SUNSPEC_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParams("SUNSPEC_THREADS must be a positive integer, got %r" % raw)
    if value < 1:
        raise InvalidParams("SUNSPEC_THREADS must be a positive integer, got %r" % raw)
    return value


def _partial_sum(h: UniformHypergraph, d: int, prefix: tuple[Pair, ...]) -> Fraction:
    cache: dict = {}
    total = Fraction(0)
    for _, mult in iter_balanced(h, d, prefix):
        ratio = cache.get(mult)
        if ratio is None:
            dg = MultiDigraph(h.n, mult)
            ratio = Fraction(arborescence_count(dg), out_degree_product(dg))
            cache[mult] = ratio
        total += ratio
    return total


def spectral_moment_oracle(
    h: UniformHypergraph, d: int, size_cap: int = DEFAULT_SIZE_CAP, threads: int | None = None
) -> int:
    """S_d(h) by direct enumeration of rooted-edge sequences.

    Work is split by the first pair; partial sums are exact, so the result
    does not depend on scheduling. ``threads`` defaults to $SUNSPEC_THREADS.
    """
    if d < 1:
        raise InvalidParams("d must be positive")
    total_seqs = count_sequences(h, d)
    if total_seqs > size_cap:
        raise SizeCapExceeded("%d sequences exceed cap %d" % (total_seqs, size_cap))
    if threads is None:
        threads = _thread_count()
    prefixes = [((v, e),) for v in range(1, h.n + 1) for e in h.edges_at(v)]
    if threads > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_partial_sum, [h] * len(prefixes), [d] * len(prefixes), prefixes))
    else:
        parts = [_partial_sum(h, d, pre) for pre in prefixes]
    value = d * (h.k - 1) ** h.n * sum(parts, Fraction(0))
    if value.denominator != 1:
        raise VerificationError("oracle moment %s is not an integer" % value)
    return value.numerator


@dataclass(frozen=True)
class EulerianProfile:
    """Per-petal root counts m and seed-to-petal root counts Q (s x len(m))."""

    k: int
    s: int
    d: int
    m: tuple[int, ...]
    Q: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.m)

    def violations(self) -> list[str]:
        k, s, d, m, Q = self.k, self.s, self.d, self.m, self.Q
        out = []
        if d % k:
            out.append("k does not divide d")
            return out
        if not m or any(x < 1 for x in m):
            out.append("m must be a non-empty vector of positive integers")
        if len(Q) != s or any(len(row) != len(m) for row in Q):
            out.append("Q must be %dx%d" % (s, len(m)))
            return out
        if any(q < 0 for row in Q for q in row):
            out.append("Q has negative entries")
        if sum(m) != d // k:
            out.append("sum(m) = %d != d/k = %d" % (sum(m), d // k))
        for v, row in enumerate(Q):
            if sum(row) != d // k:
                out.append("row %d of Q sums to %d != d/k" % (v + 1, sum(row)))
        for i, col in enumerate(zip(*Q)):
            if sum(col) != s * m[i]:
                out.append("column %d of Q sums to %d != s*m = %d" % (i + 1, sum(col), s * m[i]))
        return out

    def check(self) -> None:
        problems = self.violations()
        if problems:
            raise InvalidParams("; ".join(problems))

    def canonical(self) -> "EulerianProfile":
        """Petals sorted on (m_i, column i of Q)."""
        cols = list(zip(*self.Q)) if self.Q else [()] * self.t
        order = sorted(range(self.t), key=lambda i: (self.m[i], cols[i]))
        m = tuple(self.m[i] for i in order)
        Q = tuple(tuple(row[i] for i in order) for row in self.Q)
        return EulerianProfile(self.k, self.s, self.d, m, Q)


def _dmq_arcs(k: int, s: int, d: int, m: Sequence[int], Q: Sequence[Sequence[int]], n: int):
    mult = [[0] * n for _ in range(n)]
    seeds = list(range(s))
    for a in seeds:
        for b in seeds:
            if a != b:
                mult[a][b] += d // k
    for i, mi in enumerate(m):
        petal = list(range(s + i * (k - s), s + (i + 1) * (k - s)))
        for a in petal:
            for b in petal:
                if a != b:
                    mult[a][b] += mi
            for b in seeds:
                mult[a][b] += mi
        for v in seeds:
            for b in petal:
                mult[v][b] += Q[v][i]
    return tuple(map(tuple, mult))


def build_DmQ(profile: EulerianProfile) -> MultiDigraph:
    """The digraph D(m, Q) laid out like S(k, s, t): seeds first, then petals."""
    profile.check()
    k, s = profile.k, profile.s
    n = s + profile.t * (k - s)
    return MultiDigraph(n, _dmq_arcs(k, s, profile.d, profile.m, profile.Q, n))


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_profiles(k: int, s: int, d: int, t: int) -> list[EulerianProfile]:
    """All (m, Q) on t petals satisfying the three linear constraints."""
    if d % k:
        raise InvalidParams("k must divide d")
    r = d // k
    out = []
    rows = list(_weak_compositions(r, t))
    for m in _weak_compositions(r, t):
        if any(x < 1 for x in m):
            continue
        for Q in itertools.product(rows, repeat=s):
            if all(sum(col) == s * mi for col, mi in zip(zip(*Q), m)):
                out.append(EulerianProfile(k, s, d, m, tuple(Q)))
    return out


def profile_sequence(params: SunflowerParams, profile: EulerianProfile) -> RootedEdgeSeq:
    """A sequence on the sunflower whose digraph is D(m, Q), using petals 1..t.

    Every vertex of petal i roots edge i m_i times, and seed v roots edge i
    Q[v][i] times.
    """
    profile.check()
    if profile.t > params.p:
        raise InvalidParams("profile has more petals than the sunflower")
    pairs: list[Pair] = []
    for v in params.seeds():
        for i in range(profile.t):
            pairs += [(v, i)] * profile.Q[v - 1][i]
    for i in range(profile.t):
        for u in params.petal(i + 1):
            pairs += [(u, i)] * profile.m[i]
    pairs.sort(key=lambda pair: pair[0])
    return RootedEdgeSeq(make_sunflower(params), tuple(pairs))


def _extract_profile(params: SunflowerParams, d: int, pairs: Sequence[Pair]):
    """Read (m, Q) off a sequence; returns (profile, used petals) or an error string."""
    used = sorted({e for _, e in pairs})
    counts: dict[int, int] = {}
    seed_counts: dict[tuple[int, int], int] = {}
    for r, e in pairs:
        if r <= params.s:
            seed_counts[(r, e)] = seed_counts.get((r, e), 0) + 1
        else:
            counts[r] = counts.get(r, 0) + 1
    m = []
    for e in used:
        per_vertex = {counts.get(u, 0) for u in params.petal(e + 1)}
        if len(per_vertex) != 1:
            return "petal %d vertices root unequally often: %s" % (e + 1, sorted(per_vertex)), used
        m.append(per_vertex.pop())
    Q = tuple(tuple(seed_counts.get((v, e), 0) for e in used) for v in params.seeds())
    return EulerianProfile(params.k, params.s, d, tuple(m), Q), used


@dataclass
class Prop34Report:
    params: SunflowerParams
    d: int
    sequences: int = 0
    found: set = field(default_factory=set)
    expected: set = field(default_factory=set)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_prop34(params: SunflowerParams, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> Prop34Report:
    """Two-sided check that connected balanced D_f are exactly the D(m, Q).

    Forward: every connected balanced digraph met by enumeration matches
    D(m, Q) for its own extracted profile, after canonical petal ordering,
    and that profile satisfies the constraints. Backward: every constraint
    solution on t <= min(d/k, p) petals is realized by the explicit
    sequence construction, and its canonical form was met by enumeration.
    """
    k, s = params.k, params.s
    if d % k:
        raise InvalidParams("k must divide d")
    h = make_sunflower(params)
    total = count_sequences(h, d)
    if total > size_cap:
        raise SizeCapExceeded("%d sequences exceed cap %d" % (total, size_cap))
    report = Prop34Report(params, d)

    for pairs, mult in iter_balanced(h, d):
        dg = MultiDigraph(h.n, mult)
        if arborescence_count(dg) == 0:
            continue
        report.sequences += 1
        profile, used = _extract_profile(params, d, pairs)
        if isinstance(profile, str):
            report.counterexamples.append("%s in %s" % (profile, pairs))
            continue
        problems = profile.violations()
        if problems:
            report.counterexamples.append("%s violates %s" % (pairs, "; ".join(problems)))
            continue
        canon = profile.canonical()
        cols = list(zip(*profile.Q))
        order = sorted(range(profile.t), key=lambda i: (profile.m[i], cols[i]))
        # host vertex (0-based) for each vertex of D(m, Q) under the petal relabeling
        embed = list(range(s))
        for i in order:
            embed += [v - 1 for v in params.petal(used[i] + 1)]
        ref = build_DmQ(canon)
        same = all(
            ref.mult[a][b] == mult[embed[a]][embed[b]] for a in range(ref.n) for b in range(ref.n)
        ) and dg.arc_count == ref.arc_count
        if not same:
            report.counterexamples.append("D_f of %s differs from D(m, Q) for %s" % (pairs, canon))
            continue
        report.found.add(canon)

    for t in range(1, min(d // k, params.p) + 1):
        for profile in enumerate_profiles(k, s, d, t):
            report.expected.add(profile.canonical())
            seq = profile_sequence(params, profile)
            dg = build_Df(seq)
            ref = build_DmQ(profile)
            padded = tuple(
                tuple(ref.mult[a][b] if a < ref.n and b < ref.n else 0 for b in range(h.n))
                for a in range(h.n)
            )
            if dg.mult != padded or not is_balanced(dg):
                report.counterexamples.append("construction for %s does not give D(m, Q)" % (profile,))
    for canon in sorted(report.expected - report.found, key=repr):
        report.counterexamples.append("profile %s never met by enumeration" % (canon,))
    for canon in sorted(report.found - report.expected, key=repr):
        report.counterexamples.append("enumeration met unexpected profile %s" % (canon,))
    return report


@dataclass(frozen=True)
class Lemma35Report:
    profile: EulerianProfile
    trees_formula: int
    trees_matrix_tree: int
    outdeg_formula: int
    outdeg_direct: int

    @property
    def ok(self) -> bool:
        return self.trees_formula == self.trees_matrix_tree and self.outdeg_formula == self.outdeg_direct


def verify_lemma35b(profile: EulerianProfile, p_used: int | None = None) -> Lemma35Report:
    """Compare the closed forms for t(D) and prod deg+ with direct computation on D(m, Q)."""
    profile.check()
    k, s, d = profile.k, profile.s, profile.d
    p = profile.t if p_used is None else p_used
    if p != profile.t:
        raise InvalidParams("p_used must equal len(m)")
    if p > d // k:
        raise InvalidParams("p_used must not exceed d/k")
    prod_m = 1
    for mi in profile.m:
        prod_m *= mi ** (k - s)
    trees = d ** (s - 1) * s ** (p - 1) * k ** (p * (k - s - 1)) * prod_m
    outdeg = (d // k) ** s * (k - 1) ** (k * p - s * p + s) * prod_m
    dg = build_DmQ(profile)
    return Lemma35Report(profile, trees, arborescence_count(dg), outdeg, out_degree_product(dg))


def subsunflower_supports(params: SunflowerParams, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> set[int]:
    """Numbers of distinct edges used by connected balanced sequences.

    Raises VerificationError unless this is {1, ..., min(d/k, p)}.
    """
    if d % params.k:
        raise InvalidParams("k must divide d")
    h = make_sunflower(params)
    total = count_sequences(h, d)
    if total > size_cap:
        raise SizeCapExceeded("%d sequences exceed cap %d" % (total, size_cap))
    sizes = set()
    for pairs, mult in iter_balanced(h, d):
        if arborescence_count(MultiDigraph(h.n, mult)):
            sizes.add(len({e for _, e in pairs}))
    expected = set(range(1, min(d // params.k, params.p) + 1))
    if sizes != expected:
        raise VerificationError("supports %s, expected %s" % (sorted(sizes), sorted(expected)))
    return sizes
