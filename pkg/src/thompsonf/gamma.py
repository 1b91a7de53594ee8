"""The density-3 witness family: graphs Gamma_n and their Cayley realizations.

Abstract side: labelled graphs (vertices 0..V-1, undirected labelled
edges, loops allowed) with two operators.  psi shifts every label up by
one.  apply_A(i, .) replaces each vertex v of rank r (rank = maximum
incident label) by a column of r - i copies chained by x_i edges, and
fans every edge labelled j > i out to the first j - i column levels with
labels j, j-1, ..., i+1.  Iterating Gamma_1 = (one vertex, one x_1 loop)
through Gamma_{n+1} = apply_A(0, psi(Gamma_n)) produces graphs on
Catalan(n) vertices whose label-0/1 subgraphs ("bar" graphs) have
density 6(n-1)/(2n-1), approaching 3.

Concrete side: running the same column construction on actual group
elements, starting from a path of x_n edges through x_n^{-k}, realizes
Gamma_{n,m} as a full subgraph of the Cayley graph over x_0..x_n.  Every
spawned edge is verified by composition; column provenance from the seed
path supports the per-column density averages rho_k.

Degrees count both endpoints, so a loop adds 2 to its vertex's degree;
edge counts (the b numbers) count a loop once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

from .diagrams import (
    Diagram,
    atomic,
    canonical_key,
    compose,
    from_word,
    invert,
    to_normal_form,
)
from .subgraphs import Subgraph

LabeledEdge = Tuple[int, int, int]  # (u, v, label); u == v is a loop


@dataclass(frozen=True)
class LabeledGraph:
    vertex_count: int
    edges: Tuple[LabeledEdge, ...]

    def ranks(self) -> List[int]:
        """Per-vertex maximum incident label; -1 for an isolated vertex."""
        rank = [-1] * self.vertex_count
        for u, v, label in self.edges:
            if label > rank[u]:
                rank[u] = label
            if label > rank[v]:
                rank[v] = label
        return rank

    def degrees(self) -> List[int]:
        deg = [0] * self.vertex_count
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop contributes 2 to its endpoint
        return deg


def xi_single(n: int) -> LabeledGraph:
    """One vertex with one loop labelled x_n."""
    if n < 1:
        raise ValueError("seed label must be at least 1")
    return LabeledGraph(1, ((0, 0, n),))


def xi_path(n: int, m: int) -> LabeledGraph:
    """A path of m+1 vertices joined by m edges labelled x_n."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return LabeledGraph(m + 1, tuple((k, k + 1, n) for k in range(m)))


def psi(g: LabeledGraph) -> LabeledGraph:
    """Shift every edge label up by one."""
    return LabeledGraph(
        g.vertex_count, tuple((u, v, label + 1) for u, v, label in g.edges)
    )


def apply_A(i: int, g: LabeledGraph) -> LabeledGraph:
    """Column expansion at level i.

    Vertex v of rank r becomes the column v_0..v_{r-i-1} chained by x_i
    edges; an edge (v, w) labelled j > i spawns (v_k, w_k) labelled
    j - k for 0 <= k < j - i.  Requires every rank > i; an edge labelled
    j <= i would be outside the construction and raises.
    """
    ranks = g.ranks()
    if min(ranks, default=0) <= i:
        raise ValueError(f"apply_A({i}) needs every vertex rank above {i}")
    base = [0] * g.vertex_count
    total = 0
    for v, r in enumerate(ranks):
        base[v] = total
        total += r - i
    edges: List[LabeledEdge] = []
    for v, r in enumerate(ranks):
        for k in range(1, r - i):
            edges.append((base[v] + k, base[v] + k - 1, i))
    for u, v, j in g.edges:
        if j <= i:
            raise ValueError(f"edge labelled {j} cannot survive apply_A({i})")
        for k in range(j - i):
            edges.append((base[u] + k, base[v] + k, j - k))
    return LabeledGraph(total, tuple(edges))


def gamma(n: int) -> LabeledGraph:
    """Gamma_1 = xi_single(1); Gamma_{k+1} = apply_A(0, psi(Gamma_k))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = xi_single(1)
    for _ in range(n - 1):
        g = apply_A(0, psi(g))
    return g


def bar(g: LabeledGraph) -> LabeledGraph:
    """Erase all edges labelled 2 or higher."""
    return LabeledGraph(
        g.vertex_count, tuple(e for e in g.edges if e[2] <= 1)
    )


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def rank_counts(g: LabeledGraph) -> Dict[int, int]:
    """Vertices per rank."""
    counts: Dict[int, int] = {}
    for r in g.ranks():
        counts[r] = counts.get(r, 0) + 1
    return counts


def closed_a(n: int, k: int) -> int:
    """Rank-k vertex count of Gamma_n: k (2n-k-1)! / ((n-k)! n!)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    numerator = k * math.factorial(2 * n - k - 1)
    denominator = math.factorial(n - k) * math.factorial(n)
    assert numerator % denominator == 0
    return numerator // denominator


def edge_label_counts(g: LabeledGraph) -> Dict[int, int]:
    """Edges per label, loops counted once."""
    counts: Dict[int, int] = {}
    for _, _, label in g.edges:
        counts[label] = counts.get(label, 0) + 1
    return counts


def closed_b(n: int, k: int) -> int:
    """Label-k edge count of Gamma_n.

    b_nn = 1 always; b_10 = 0; for 0 <= k < n, n >= 2:
    (k+1) (2n-k-2)! (3n^2 - 3n(k+1) + k^2 + 2k) / ((n-k)! (n+1)!).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == n:
        return 1
    if n == 1:
        return 0  # the only case is k = 0
    numerator = (
        (k + 1)
        * math.factorial(2 * n - k - 2)
        * (3 * n * n - 3 * n * (k + 1) + k * k + 2 * k)
    )
    denominator = math.factorial(n - k) * math.factorial(n + 1)
    assert numerator % denominator == 0
    return numerator // denominator


def closed_b_first_two(n: int) -> int:
    """b_n0 = b_n1 = 3 (2n-2)! / ((n-2)! (n+1)!) for n >= 2."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    numerator = 3 * math.factorial(2 * n - 2)
    denominator = math.factorial(n - 2) * math.factorial(n + 1)
    assert numerator % denominator == 0
    return numerator // denominator


def density_bar(n: int) -> Fraction:
    """Measured density of bar(Gamma_n): 2 #edges / #vertices, exact."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    g = bar(gamma(n))
    return Fraction(2 * len(g.edges), g.vertex_count)


def density_bar_closed(n: int) -> Fraction:
    """6(n-1)/(2n-1), the closed form of density_bar."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    return Fraction(6 * (n - 1), 2 * n - 1)


def degree_histogram(g: LabeledGraph) -> Dict[int, int]:
    """Vertices per degree, a loop contributing 2."""
    counts: Dict[int, int] = {}
    for d in g.degrees():
        counts[d] = counts.get(d, 0) + 1
    return counts


def closed_nu(n: int, d: int) -> int:
    """Degree-d vertex count of bar(Gamma_n) for d in {2,3,4}, n >= 5."""
    if n < 5:
        raise ValueError("closed degree counts need n >= 5")
    if d == 2:
        numerator = 3 * math.factorial(2 * n - 4)
        denominator = math.factorial(n - 2) * math.factorial(n - 1)
    elif d == 3:
        numerator = 4 * (5 * n - 12) * math.factorial(2 * n - 5)
        denominator = math.factorial(n - 3) * math.factorial(n)
    elif d == 4:
        numerator = 6 * math.factorial(2 * n - 5)
        denominator = math.factorial(n - 5) * math.factorial(n + 1)
    else:
        raise ValueError("degree must be 2, 3 or 4")
    assert numerator % denominator == 0
    return numerator // denominator


class ConstructionError(RuntimeError):
    """A concrete column construction failed verification."""


@dataclass(frozen=True)
class ConcreteGamma:
    """Gamma_{n,m} realized inside the Cayley graph over x_0..x_n."""

    n: int
    m: int
    vertices: Dict[str, Diagram] = field(repr=False)
    origin: Dict[str, int] = field(repr=False)  # seed-path column 0..m
    edges: FrozenSet[Tuple[str, str, int]] = field(repr=False)  # v = u * x_label

    @property
    def size(self) -> int:
        return len(self.vertices)

    def subgraph(self, labels: Tuple[int, ...] = (0, 1)) -> Subgraph:
        """The label-filtered view as a plain subgraph (default: bar)."""
        return Subgraph(
            gens=tuple(labels),
            vertices=dict(self.vertices),
            edges=frozenset(e for e in self.edges if e[2] in labels),
        )


def _concrete_apply_A(
    i: int,
    vertices: Dict[str, Diagram],
    origin: Dict[str, int],
    edges: List[Tuple[str, str, int]],
) -> Tuple[Dict[str, Diagram], Dict[str, int], List[Tuple[str, str, int]]]:
    ranks: Dict[str, int] = {}
    for u, v, label in edges:
        ranks[u] = max(ranks.get(u, -1), label)
        ranks[v] = max(ranks.get(v, -1), label)
    if set(ranks) != set(vertices) or min(ranks.values()) <= i:
        raise ConstructionError(f"apply_A({i}) precondition violated")
    x_i_inverse = invert(atomic(i))
    columns: Dict[str, List[str]] = {}
    new_vertices: Dict[str, Diagram] = {}
    new_origin: Dict[str, int] = {}
    new_edges: List[Tuple[str, str, int]] = []
    for uk, d in vertices.items():
        column = [uk]
        new_vertices[uk] = d
        new_origin[uk] = origin[uk]
        current = d
        for _ in range(ranks[uk] - i - 1):
            current = compose(current, x_i_inverse)
            ck = canonical_key(current)
            if ck in new_vertices:
                raise ConstructionError(f"column vertex collision at {ck}")
            new_vertices[ck] = current
            new_origin[ck] = origin[uk]
            new_edges.append((ck, column[-1], i))  # column[-1] = ck * x_i
            column.append(ck)
        columns[uk] = column
    for uk, vk, j in edges:
        if j <= i:
            raise ConstructionError(f"edge labelled {j} under apply_A({i})")
        for k in range(j - i):
            a, b = columns[uk][k], columns[vk][k]
            if compose(new_vertices[a], atomic(j - k)) != new_vertices[b]:
                raise ConstructionError(
                    f"spawned edge {a} -x{j - k}-> {b} failed verification"
                )
            new_edges.append((a, b, j - k))
    return new_vertices, new_origin, new_edges


def gamma_nm_concrete(n: int, m: int) -> ConcreteGamma:
    """Gamma_{n,m} = apply_A(0) ... apply_A(n-2) of the x_n path of length m.

    Seed vertices are x_n^{-k} for k = 0..m; columns descend by
    x_i^{-1}.  The result has (m+1) Catalan(n) vertices, all reduced
    monomials in x_0..x_n with nonpositive exponents.
    """
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    x_n_inverse = invert(atomic(n))
    vertices: Dict[str, Diagram] = {}
    origin: Dict[str, int] = {}
    edges: List[Tuple[str, str, int]] = []
    current = from_word(())
    previous_key = canonical_key(current)
    vertices[previous_key] = current
    origin[previous_key] = 0
    for k in range(1, m + 1):
        current = compose(current, x_n_inverse)
        ck = canonical_key(current)
        vertices[ck] = current
        origin[ck] = k
        edges.append((ck, previous_key, n))  # previous = current * x_n
        previous_key = ck
    for i in range(n - 2, -1, -1):
        vertices, origin, edges = _concrete_apply_A(i, vertices, origin, edges)
    expected = (m + 1) * catalan(n)
    if len(vertices) != expected:
        raise ConstructionError(
            f"vertex count {len(vertices)} differs from (m+1) Catalan(n) = {expected}"
        )
    return ConcreteGamma(
        n=n, m=m, vertices=vertices, origin=origin, edges=frozenset(edges)
    )


def fullness_check(g: ConcreteGamma, extra_labels: int = 2) -> bool:
    """Verify g is the full subgraph induced on its vertex set.

    For every vertex and every label k <= n, the neighbour u * x_k lies
    in the vertex set iff the edge was recorded.  Labels n+1..n+extra
    are spot-checked to confirm no edge escapes the recorded range (the
    vertex normal forms only involve x_0..x_n).
    """
    recorded = set(g.edges)
    for uk, d in g.vertices.items():
        for k in range(g.n + 1):
            vk = canonical_key(compose(d, atomic(k)))
            if (vk in g.vertices) != ((uk, vk, k) in recorded):
                raise ConstructionError(
                    f"fullness violated at {uk} under x{k}"
                )
        for k in range(g.n + 1, g.n + 1 + extra_labels):
            if canonical_key(compose(d, atomic(k))) in g.vertices:
                raise ConstructionError(
                    f"unexpected x{k} edge inside the vertex set at {uk}"
                )
    return True


def monomial_shape_ok(g: ConcreteGamma) -> bool:
    """Every vertex is a monomial x_n^-s x_{n-2}^-t ... with exponents <= 0.

    Checked as a property of the construction: the normal form has an
    empty positive part and nonincreasing generator subscripts with the
    subscript n-1 absent.
    """
    for d in g.vertices.values():
        nf = to_normal_form(d)
        if nf.pos:
            return False
        if any(j > g.n or j == g.n - 1 for j in nf.neg):
            return False
    return True


def column_partition(
    g: ConcreteGamma, labels: Tuple[int, ...] = (0, 1)
) -> List[Tuple[int, Fraction]]:
    """Per seed-path column k = 0..m: (vertex count, average degree rho_k).

    Degrees are taken over the label-filtered edge set (default: the bar
    graph).  The column sizes are all equal and the interior averages
    rho_1 = ... = rho_{m-1} coincide; the size-weighted mean of the
    rho_k reproduces the density of the filtered subgraph.
    """
    wanted = set(labels)
    deg = dict.fromkeys(g.vertices, 0)
    for u, v, label in g.edges:
        if label in wanted:
            deg[u] += 1
            deg[v] += 1
    sizes = [0] * (g.m + 1)
    sums = [0] * (g.m + 1)
    for vk, column in g.origin.items():
        sizes[column] += 1
        sums[column] += deg[vk]
    return [
        (sizes[k], Fraction(sums[k], sizes[k])) for k in range(g.m + 1)
    ]
