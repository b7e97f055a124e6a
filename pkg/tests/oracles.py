"""Independent reference implementations used as test oracles.

Everything here is deliberately naive and kept separate from the library's
algorithms: cofactor expansion for characteristic polynomials, subset
enumeration for spanning trees, the literal existential definition for
super-graph lifts, Fraction-based Gaussian elimination for rank.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np


def naive_char_poly(matrix) -> tuple[int, ...]:
    """det(xI - M) by cofactor expansion, memoized on the column set.

    Polynomials are coefficient tuples (low to high) of exact ints.
    """
    m = [[int(x) for x in row] for row in np.asarray(matrix, dtype=object)]
    n = len(m)
    full = (1 << n) - 1
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def poly_add(a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return tuple(out)

    def poly_scale(a, c):
        return tuple(x * c for x in a)

    def poly_shift_scale(a, c0):
        # a * (x + c0)
        out = [0] * (len(a) + 1)
        for i, x in enumerate(a):
            out[i + 1] += x
            out[i] += x * c0
        return tuple(out)

    def det(mask: int) -> tuple[int, ...]:
        if mask in memo:
            return memo[mask]
        row = n - bin(mask).count("1")
        acc: tuple[int, ...] = (0,)
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            col = low.bit_length() - 1
            sub = det(mask ^ low)
            if col == row:
                term = poly_shift_scale(sub, -m[row][col])
            else:
                term = poly_scale(sub, -m[row][col])
            acc = poly_add(acc, term if sign == 1 else poly_scale(term, -1))
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    result = det(full)
    return result + (0,) * (n + 1 - len(result))


def spanning_trees_enumerated(adjacency) -> int:
    """Count (N-1)-edge acyclic edge subsets by exhaustive enumeration."""
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    if n == 1:
        return 1
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(adj, 1)))]
    count = 0
    for subset in combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


def enumeration_cost(adjacency) -> int:
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    edges = int(adj.sum()) // 2
    return comb(edges, n - 1) if n > 1 else 1


def is_complete(adjacency) -> bool:
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    return int(adj.sum()) == n * (n - 1)


def complement_edges(adjacency) -> list[tuple[int, int]]:
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    return [(u, v) for u in range(n) for v in range(u + 1, n) if not adj[u, v]]


def spanning_trees_by_complement(adjacency) -> int:
    """Spanning trees of a dense graph by inclusion-exclusion over its
    missing edges: sum over acyclic subsets T of the complement of
    (-1)^|T| times the number of labelled trees containing the forest T
    (generalized Cayley: n^{c-2} times the product of component sizes).
    Purely combinatorial; exhaustive over 2^|missing| subsets.
    """
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    missing = complement_edges(adj)
    total = 0
    for mask in range(1 << len(missing)):
        parent = list(range(n))
        size = [1] * n

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        picked = 0
        m = mask
        idx = 0
        while m:
            if m & 1:
                u, v = missing[idx]
                ru, rv = find(u), find(v)
                if ru == rv:
                    acyclic = False
                    break
                parent[ru] = rv
                size[rv] += size[ru]
                picked += 1
            m >>= 1
            idx += 1
        if not acyclic:
            continue
        components = n - picked
        product = 1
        for x in range(n):
            if find(x) == x:
                product *= size[x]
        term = n**components * product
        total += -term if picked % 2 else term
    # the generalized Cayley count carries an n^{-2}; division is exact
    assert total % (n * n) == 0
    return total // (n * n)


def brute_force_super(adjacency, block_of, class_cliques: bool):
    """The lift computed straight from its existential definition."""
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    out = np.zeros_like(adj)
    for g in range(n):
        for h in range(n):
            if g == h:
                continue
            if class_cliques and block_of[g] == block_of[h]:
                out[g, h] = True
                continue
            members_g = [x for x in range(n) if block_of[x] == block_of[g]]
            members_h = [x for x in range(n) if block_of[x] == block_of[h]]
            out[g, h] = any(adj[x, y] for x in members_g for y in members_h)
    return out


def brute_force_power_edges(table) -> set[tuple[int, int]]:
    """x ~ y when one is a positive power of the other, by direct search."""
    n = table.order
    edges = set()
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            cur = x
            for _ in range(n):
                cur = table.mul(cur, x)
                if cur == y:
                    edges.add((min(x, y), max(x, y)))
                    break
    return edges


def enhanced_by_common_cyclic(table):
    """x ~ y when {x, y} lies in <z> for some z, by direct search."""
    n = table.order
    members = []
    for z in range(n):
        sub = {table.identity}
        cur = z
        while cur != table.identity:
            sub.add(cur)
            cur = table.mul(cur, z)
        members.append(sub)
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            if any(x in sub and y in sub for sub in members):
                adj[x, y] = adj[y, x] = True
    return adj


def rational_nullity(matrix) -> int:
    """N minus the rank over Q, by Fraction Gaussian elimination."""
    m = [[Fraction(int(x)) for x in row] for row in np.asarray(matrix, dtype=object)]
    n = len(m)
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(n):
            if i != rank and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return n - rank


def component_count(adjacency) -> int:
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    seen = [False] * n
    parts = 0
    for s in range(n):
        if seen[s]:
            continue
        parts += 1
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            for v in np.flatnonzero(adj[u]):
                if not seen[v]:
                    seen[v] = True
                    stack.append(int(v))
    return parts


def random_simple_graph(rng, n: int, p: float):
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u, v] = adj[v, u] = True
    return adj
