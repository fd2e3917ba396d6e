"""Graphs defined by primes.

Gaussian graphs G(n): vertices {2..n+1}, edge a~b iff a+ib is a Gaussian
prime (symmetric since b+ia = i·conj(a+ib)); they are bipartite with the
odd/even vertex classes, so triangle-free and χ = |V| − |E|.

Quaternion graphs on vertices {a+ib : 1 <= a,b <= n}: H(n) joins two vertices
when a²+b²+c²+d² is prime; L(n) joins them when all four coordinates are odd
and (a²+b²+c²+d²)/4 is prime.

GCD graphs on {1..n}: a~b iff gcd(a,b) > 1.  Components are 2 + π(n) − π(n/2)
and edges n(n−1)/2 − Φ(n) + 1 with Φ the totient summatory function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ratkernel as rk
from .planarith import gaussian_prime_mask


@dataclass
class Graph:
    vertices: list
    edges: set  # frozenset of 2-tuples (u, v) with u < v

    @property
    def V(self):
        return len(self.vertices)

    @property
    def E(self):
        return len(self.edges)

    def adjacency(self):
        idx = {v: i for i, v in enumerate(self.vertices)}
        a = np.zeros((self.V, self.V), dtype=np.int64)
        for u, v in self.edges:
            a[idx[u], idx[v]] = a[idx[v], idx[u]] = 1
        return a


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in vertices})


def component_count(g):
    return _components(g.vertices, g.edges)


def is_bipartite(g):
    color = {}
    adj = {v: [] for v in g.vertices}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


@dataclass
class GraphStats:
    V: int
    E: int
    components: int
    bipartite: bool
    chi: int


def stats(g):
    return GraphStats(g.V, g.E, component_count(g), is_bipartite(g),
                      g.V - g.E)


def gaussian_graph(n):
    """G(n): vertices {2..n+1}, a~b iff a+ib Gaussian prime."""
    if n < 2:
        raise ValueError("n >= 2 required")
    mask = gaussian_prime_mask(2, n + 1, 2, n + 1)
    edges = set()
    for a in range(2, n + 2):
        for b in range(a + 1, n + 2):
            if mask[a - 2, b - 2]:
                edges.add((a, b))
    return Graph(list(range(2, n + 2)), edges)


def gaussian_graph_chi_two_ways(n):
    """χ(G(n)) via the edge list and via the box prime count (E = primes/2)."""
    g = gaussian_graph(n)
    mask = gaussian_prime_mask(2, n + 1, 2, n + 1)
    box_primes = int(mask.sum()) - int(np.trace(mask))  # a=b never prime here
    return g.V - g.E, g.V - box_primes // 2


def lipschitz_graph(n):
    """H(n): vertices (a,b) in [1,n]², edge when a²+b²+c²+d² is prime."""
    return _quat_graph(n, hurwitz=False)


def hurwitz_graph(n):
    """Half-integer variant: edge when all of a,b,c,d are odd and the norm of
    the half-coordinate quaternion (a+ib+jc+kd)/2, i.e. (a²+b²+c²+d²)/4, is
    prime."""
    return _quat_graph(n, hurwitz=True)


def _quat_graph(n, hurwitz):
    if n < 1:
        raise ValueError("n >= 1 required")
    verts = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    nmax = 4 * n * n
    s = rk.sieve(max(nmax, 4))
    edges = set()
    for i, (a, b) in enumerate(verts):
        for (c, d) in verts[i + 1:]:
            q = a * a + b * b + c * c + d * d
            if hurwitz:
                if a % 2 and b % 2 and c % 2 and d % 2 and q % 4 == 0 \
                        and s.flags[q // 4]:
                    edges.add(((a, b), (c, d)))
            elif s.flags[q]:
                edges.add(((a, b), (c, d)))
    return Graph(verts, edges)


def gcd_graph(n):
    """Vertices {1..n}, a~b iff gcd(a,b) > 1."""
    if n < 3:
        raise ValueError("n >= 3 required")
    idx = np.arange(1, n + 1, dtype=np.int64)
    g = np.gcd.outer(idx, idx)
    edges = {(int(a), int(b)) for a, b in zip(*np.nonzero(np.triu(g > 1, 1)))}
    edges = {(a + 1, b + 1) for a, b in edges}
    return Graph(list(range(1, n + 1)), edges)


def gcd_components(n):
    """Components of the gcd graph: 1 is isolated, primes in (n/2, n] are
    isolated, everything else falls in one blob (for n >= 4)."""
    g = gcd_graph(n)
    return component_count(g)


def gcd_components_formula(n):
    s = rk.sieve(max(n, 4))
    return 2 + s.pi(n) - s.pi(n // 2)


def gcd_edge_count(n):
    return gcd_graph(n).E


def gcd_edge_count_formula(n):
    return n * (n - 1) // 2 - rk.totient_summatory(n) + 1


def gcd_vertex_degree(v, n):
    """Degree of v in the gcd graph, with an inclusion-exclusion cross-check."""
    if not 1 <= v <= n:
        raise ValueError("vertex out of range")
    direct = sum(1 for k in range(1, n + 1)
                 if k != v and math.gcd(k, v) > 1)
    # inclusion-exclusion over the prime radical of v
    primes = [p for p, _e in rk.factorize(v)] if v > 1 else []
    coprime = 0
    for mask in range(1 << len(primes)):
        d = 1
        bits = 0
        for i, p in enumerate(primes):
            if mask & (1 << i):
                d *= p
                bits += 1
        coprime += (-1) ** bits * (n // d)
    formula = n - coprime - (1 if v > 1 else 0)
    if direct != formula:
        raise AssertionError(f"degree mismatch at v={v}, n={n}")
    return direct


def clique_euler_characteristic(g, max_clique_cap=60):
    """Σ_k (−1)^(k+1) · #K_k over complete subgraphs."""
    if g.V > max_clique_cap:
        raise rk.CapacityError(
            f"{g.V} vertices above clique cap {max_clique_cap}")
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    chi = 0
    for clique in nx.enumerate_all_cliques(h):
        chi += -1 if len(clique) % 2 == 0 else 1
    return chi
