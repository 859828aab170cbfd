"""Shared fixtures and independent oracle implementations.

The oracles deliberately avoid the package's algorithms: raw subset
enumeration for matching numbers, definition-level enumeration of
bouquet sets, naive recursion for vertex decomposability, and
fraction-based Gaussian elimination for homology ranks.  Tests freeze
oracle outputs and compare the package against them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from hyperinv import build, named_instance
from hyperinv.hypergraph import bit_ids


@pytest.fixture
def h1():
    return named_instance("h1")


@pytest.fixture
def h2():
    return named_instance("h2")


@pytest.fixture
def star3():
    return named_instance("star3")


@pytest.fixture
def p3():
    return named_instance("p3")


@pytest.fixture
def c5():
    return named_instance("c5")


# ---------------------------------------------------------------------------
# matching oracle: raw subset enumeration straight from the definitions


def oracle_matching_numbers(h):
    edges = h.edges
    c = c_prime = m = 0
    for r in range(1, len(edges) + 1):
        for fam in combinations(edges, r):
            union = 0
            total = 0
            for e in fam:
                union |= e
                total += e.bit_count()
            weight = union.bit_count() - r
            matching = total == union.bit_count()
            semi = all(e in fam for e in edges if e & union == e)
            if matching:
                m = max(m, weight)
            if semi:
                c_prime = max(c_prime, weight)
            if matching and semi:
                c = max(c, weight)
    return c, c_prime, m


# ---------------------------------------------------------------------------
# bouquet oracle: enumerate bouquet sets literally from the definition


def _partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _proper_subsets(mask):
    ids = list(bit_ids(mask))
    for r in range(1, len(ids)):
        for combo in combinations(ids, r):
            m = 0
            for i in combo:
                m |= 1 << i
            yield m


def _group_root_options(group):
    """Possible root sets for one bouquet; [] means the group is invalid."""
    if len(group) >= 2:
        inter = group[0]
        for e in group[1:]:
            inter &= e
        return [inter] if inter else []
    return list(_proper_subsets(group[0]))


def oracle_bouquet_numbers(h):
    """(d, d') by literal enumeration; practical only for few small edges."""
    edges = list(h.edges)
    best_d = best_dp = 0
    for r in range(1, len(edges) + 1):
        for chosen in combinations(edges, r):
            for part in _partitions(list(chosen)):
                options = [_group_root_options(g) for g in part]
                if any(not o for o in options):
                    continue

                def walk(i, roots, flowers):
                    nonlocal best_d, best_dp
                    if i == len(part):
                        if not any(e & roots == e for e in edges):
                            best_dp = max(best_dp, flowers.bit_count())
                        from itertools import product

                        for stems in product(*part):
                            if len(set(stems)) != len(stems):
                                continue
                            u = 0
                            tot = 0
                            for s in stems:
                                u |= s
                                tot += s.bit_count()
                            if tot != u.bit_count():
                                continue
                            if all(e in stems for e in edges if e & u == e):
                                best_d = max(best_d, flowers.bit_count())
                                return
                        return
                    g = part[i]
                    u = 0
                    for e in g:
                        u |= e
                    for rt in options[i]:
                        walk(i + 1, roots | rt, flowers | (u & ~rt))

                walk(0, 0, 0)
    return best_d, best_dp


# ---------------------------------------------------------------------------
# vertex decomposability oracle: naive recursion on facet lists


def oracle_vd(facets, n):
    facets = tuple(sorted(facets))
    if not facets or facets == (0,):
        return True
    if len(facets) == 1:
        return True
    fs = set(facets)
    support = 0
    for f in facets:
        support |= f
    for v in bit_ids(support):
        bit = 1 << v
        dele = {f & ~bit for f in facets}
        dele = {f for f in dele if not any(o != f and f & o == f for o in dele)}
        if not all(f in fs for f in dele):
            continue
        link = {f & ~bit for f in facets if f & bit}
        link = {f for f in link if not any(o != f and f & o == f for o in link)}
        if oracle_vd(tuple(dele), n) and oracle_vd(tuple(link), n):
            return True
    return False


def oracle_independence_facets(h):
    ind = [u for u in range(1 << h.n) if not any(e & u == e for e in h.edges)]
    s = set(ind)
    return tuple(
        sorted(u for u in ind if not any((u | 1 << v) in s for v in range(h.n) if not u >> v & 1))
    )


# ---------------------------------------------------------------------------
# homology oracle: Fraction-based Gaussian elimination over Q


def oracle_rank(rows):
    if not rows or not rows[0]:
        return 0
    m = [[Fraction(v) for v in r] for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def oracle_reduced_homology(faces):
    """Reduced Betti numbers of a face set (masks), dims from -1 up."""
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for lst in by_dim.values():
        lst.sort()
    top = max(by_dim)
    bdr = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        cols = by_dim.get(d, [])
        rows = [[0] * len(cols) for _ in lower]
        for j, f in enumerate(cols):
            for k, v in enumerate(bit_ids(f)):
                rows[lower[f & ~(1 << v)]][j] = -1 if k % 2 else 1
        bdr[d] = oracle_rank(rows)
    out = {}
    for d in range(-1, top + 1):
        b = len(by_dim.get(d, [])) - bdr.get(d, 0) - bdr.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def oracle_betti_table(h):
    """Graded Betti numbers via the homology sum, oracle homology inside."""
    entries = {}
    for w in range(1, 1 << h.n):
        sub = [e for e in h.edges if e & w == e]
        if not sub:
            continue
        ids = list(bit_ids(w))
        j = len(ids)
        faces = [
            u
            for u in range(1 << h.n)
            if u & w == u and not any(e & u == e for e in sub)
        ]
        hom = oracle_reduced_homology(faces)
        for dim, rank in hom.items():
            i = j - dim - 1
            if i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + rank
    return entries


# ---------------------------------------------------------------------------
# small instance helper for property tests


def tiny_hypergraphs():
    """A deterministic mixed bag of small instances used across tests."""
    out = [
        named_instance(k)
        for k in ("h1", "h2", "star3", "p3", "single_edge", "two_disjoint_edges", "c4", "c5")
    ]
    out.append(build(["x1", "x2", "x3"], []))
    out.append(
        build(["x1", "x2", "x3", "x4", "x5"], [["x1", "x2", "x3"], ["x3", "x4", "x5"]])
    )
    return out
