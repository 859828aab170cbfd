"""Graded Betti numbers of the Stanley-Reisner ring of an independence
complex, via the reduced-homology sum over induced subcomplexes, plus
regularity, projective dimension, and the Alexander dual.

Ranks are exact: fraction-free integer elimination over the rationals,
or modular elimination over GF(p).  The reduced chain complex includes
the empty face, so restrictions whose only face is empty contribute the
(-1)-dimensional class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .complexes import SimplicialComplex, complex_from_facets
from .errors import SizeLimitExceeded
from .hypergraph import Hypergraph, bit_ids, from_masks

DEFAULT_HOMOLOGY_CAP = 14
DEFAULT_BETTI_CAP = 12

FIELD_Q = "Q"


def parse_field(text: str) -> str:
    t = text.strip().lower()
    if t == "q":
        return FIELD_Q
    if t.startswith("f") and t[1:].isdigit() and int(t[1:]) >= 2:
        return f"F{int(t[1:])}"
    raise ValueError(f"unknown field {text!r}")


def _rank_rational(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            mr = m[r]
            f = mr[col]
            for c in range(col + 1, ncols):
                mr[c] = (pv * mr[c] - f * m[row][c]) // prev
            mr[col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    m = [[v % p for v in r] for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(v * inv) % p for v in m[row]]
        for r in range(row + 1, nrows):
            f = m[r][col]
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _rank(rows: list[list[int]], field: str) -> int:
    if field == FIELD_Q:
        return _rank_rational(rows)
    return _rank_mod_p(rows, int(field[1:]))


def _all_faces(facets: tuple[int, ...]) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        ids = list(bit_ids(f))
        for k in range(len(ids) + 1):
            for combo in combinations(ids, k):
                m = 0
                for i in combo:
                    m |= 1 << i
                faces.add(m)
    return faces


def _homology_from_faces(faces: set[int], field: str) -> dict[int, int]:
    """Reduced Betti numbers keyed by dimension, zero entries omitted."""
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for lst in by_dim.values():
        lst.sort()
    top = max(by_dim)
    ranks: dict[int, int] = {}
    boundary_rank: dict[int, int] = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        cols = by_dim.get(d, [])
        rows = [[0] * len(cols) for _ in lower]
        for j, f in enumerate(cols):
            for sgn_idx, v in enumerate(bit_ids(f)):
                face = f & ~(1 << v)
                rows[lower[face]][j] = -1 if sgn_idx % 2 else 1
        boundary_rank[d] = _rank(rows, field)
    for d in range(-1, top + 1):
        dim_count = len(by_dim.get(d, []))
        b = dim_count - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        if b:
            ranks[d] = b
    return ranks


@dataclass(frozen=True)
class HomologyProfile:
    ranks: dict  # dimension -> rank, zero entries omitted


def reduced_homology(
    d: SimplicialComplex, field: str = FIELD_Q, cap: int = DEFAULT_HOMOLOGY_CAP
) -> HomologyProfile:
    if d.n > cap:
        raise SizeLimitExceeded(f"ground set {d.n} exceeds homology cap {cap}")
    if d.kind == "void":
        return HomologyProfile({})
    return HomologyProfile(_homology_from_faces(_all_faces(d.facets), field))


# ---------------------------------------------------------------------------
# Betti table via the induced-subcomplex homology sum

_SUBGRAPH_HOMOLOGY_MEMO: dict[tuple, dict[int, int]] = {}


def _independent_faces(n: int, edges: tuple[int, ...]) -> set[int]:
    return {u for u in range(1 << n) if not any(e & u == e for e in edges)}


def _subhypergraph_homology(n: int, edges: tuple[int, ...], field: str) -> dict[int, int]:
    """Homology of the independence complex of a (compressed) hypergraph."""
    key = (n, edges, field)
    hit = _SUBGRAPH_HOMOLOGY_MEMO.get(key)
    if hit is None:
        hit = _homology_from_faces(_independent_faces(n, edges), field)
        _SUBGRAPH_HOMOLOGY_MEMO[key] = hit
    return hit


@dataclass(frozen=True)
class BettiTable:
    entries: dict  # (i, j) -> rank, zero entries omitted
    n: int
    field: str

    @property
    def reg(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def to_json_obj(self) -> dict:
        return {
            "field": self.field,
            "entries": [[i, j, r] for (i, j), r in sorted(self.entries.items())],
            "reg": self.reg,
            "pd": self.pd,
        }


def betti_table(
    h: Hypergraph, field: str = FIELD_Q, cap: int = DEFAULT_BETTI_CAP
) -> BettiTable:
    """Exact graded Betti numbers of the quotient by the edge ideal.

    For each vertex subset W, the restriction of the independence complex
    is the independence complex of the sub-hypergraph of edges inside W;
    its reduced homology in dimension |W|-i-1 contributes to the (i, |W|)
    entry.  Results per compressed sub-hypergraph are memoized globally.
    """
    if h.n > cap:
        raise SizeLimitExceeded(f"{h.n} vertices exceed Betti cap {cap}")
    if h.void:
        raise SizeLimitExceeded("Betti table of the void-marker hypergraph is undefined")
    entries: dict[tuple[int, int], int] = {}
    n = h.n
    for w in range(1, 1 << n):
        ids = list(bit_ids(w))
        j = len(ids)
        pos = {old: new for new, old in enumerate(ids)}
        sub = []
        for e in h.edges:
            if e & w == e:
                m = 0
                for i in bit_ids(e):
                    m |= 1 << pos[i]
                sub.append(m)
        if not sub:
            continue  # full simplex restriction: no reduced homology
        hom = _subhypergraph_homology(j, tuple(sorted(sub)), field)
        for dim, rank in hom.items():
            i = j - dim - 1
            if i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + rank
    return BettiTable(entries, n, field)


def reg_and_pd(h: Hypergraph, field: str = FIELD_Q, cap: int = DEFAULT_BETTI_CAP) -> dict:
    t = betti_table(h, field, cap)
    return {"reg": t.reg, "pd": t.pd}


# ---------------------------------------------------------------------------
# Alexander duality


def minimal_nonfaces(d: SimplicialComplex) -> tuple[int, ...]:
    """Inclusion-minimal subsets of the ground set that are not faces."""
    out: list[int] = []
    for size in range(0, d.n + 1):
        for combo in combinations(range(d.n), size):
            m = 0
            for i in combo:
                m |= 1 << i
            if d.is_face(m):
                continue
            if any(o & m == o for o in out):
                continue
            out.append(m)
    return tuple(sorted(out))


def alexander_dual(d: SimplicialComplex) -> SimplicialComplex:
    """Complex of complements of non-faces; full simplex and void swap."""
    full = (1 << d.n) - 1
    duals = [full & ~m for m in minimal_nonfaces(d)]
    return SimplicialComplex(d.labels, tuple(sorted(duals)))


def complex_to_hypergraph(d: SimplicialComplex) -> Hypergraph:
    """Hypergraph whose independence complex is D (edges = minimal non-faces)."""
    nonfaces = minimal_nonfaces(d)
    if 0 in nonfaces:
        return Hypergraph(d.labels, (), void=True)
    return from_masks(d.labels, nonfaces)
