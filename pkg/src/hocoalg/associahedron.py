"""Cells of the associahedra as planar trees, their boundary, the Tamari order
and the signed cellular diagonal.

A planar tree is a nested tuple: a leaf is the empty tuple ``()`` and an
internal node is the tuple of its (at least two) children, left to right.
The cell of ``K_n`` indexed by a tree with ``n`` leaves has dimension
``sum(children - 2)`` over its internal nodes; the corolla is the top cell.

Text form: ``*`` for a leaf and parentheses around the children of a node,
e.g. ``(****)`` is the top cell of ``K_4`` and ``((**)*)`` the left comb of
arity 3.
"""
from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from . import _linalg

LEAF: tuple = ()
PlanarTree = tuple


# ---------------------------------------------------------------------------
# basic tree data

def is_leaf(t: PlanarTree) -> bool:
    return t == LEAF


@lru_cache(maxsize=None)
def arity(t: PlanarTree) -> int:
    return 1 if is_leaf(t) else sum(arity(c) for c in t)


@lru_cache(maxsize=None)
def dimension(t: PlanarTree) -> int:
    if is_leaf(t):
        return 0
    return len(t) - 2 + sum(dimension(c) for c in t)


def internal_nodes(t: PlanarTree) -> int:
    return 0 if is_leaf(t) else 1 + sum(internal_nodes(c) for c in t)


def is_binary(t: PlanarTree) -> bool:
    return dimension(t) == 0


def corolla(n: int) -> PlanarTree:
    if n < 2:
        raise ValueError("corolla needs arity >= 2")
    return (LEAF,) * n


def left_comb(n: int) -> PlanarTree:
    t = (LEAF, LEAF)
    for _ in range(n - 2):
        t = (t, LEAF)
    return t


def right_comb(n: int) -> PlanarTree:
    t = (LEAF, LEAF)
    for _ in range(n - 2):
        t = (LEAF, t)
    return t


def render(t: PlanarTree) -> str:
    return "*" if is_leaf(t) else "(" + "".join(render(c) for c in t) + ")"


def parse(text: str) -> PlanarTree:
    s = "".join(text.split())
    pos = 0

    def node() -> PlanarTree:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"unexpected end of tree text {text!r}")
        ch = s[pos]
        if ch == "*":
            pos += 1
            return LEAF
        if ch != "(":
            raise ValueError(f"unexpected {ch!r} at {pos} in {text!r}")
        pos += 1
        kids = []
        while pos < len(s) and s[pos] != ")":
            kids.append(node())
        if pos >= len(s):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        pos += 1
        if len(kids) < 2:
            raise ValueError(f"internal node with {len(kids)} children in {text!r}")
        return tuple(kids)

    t = node()
    if pos != len(s):
        raise ValueError(f"trailing characters in {text!r}")
    if is_leaf(t):
        raise ValueError("a bare leaf is not a cell")
    return t


# ---------------------------------------------------------------------------
# faces

def _groupings(kids: tuple) -> Iterator[tuple]:
    k = len(kids)
    for size in range(2, k):
        for start in range(0, k - size + 1):
            yield kids[:start] + (kids[start:start + size],) + kids[start + size:]


@lru_cache(maxsize=None)
def _faces(t: PlanarTree) -> tuple:
    if is_leaf(t):
        return ()
    out = list(_groupings(t))
    for j, c in enumerate(t):
        for f in _faces(c):
            out.append(t[:j] + (f,) + t[j + 1:])
    return tuple(out)


def faces(t: PlanarTree) -> list[PlanarTree]:
    """Codimension-one faces: refinements of ``t`` by one new internal edge."""
    if dimension(t) < 1:
        raise ValueError(f"vertex {render(t)} has no faces")
    return list(_faces(t))


@lru_cache(maxsize=None)
def refinements(t: PlanarTree) -> tuple:
    """All faces of every codimension of the cell ``t``, including ``t`` itself."""
    seen = {t: None}
    frontier = [t]
    while frontier:
        nxt = []
        for u in frontier:
            for f in _faces(u):
                if f not in seen:
                    seen[f] = None
                    nxt.append(f)
        frontier = nxt
    return tuple(seen)


def cells(n: int) -> tuple:
    """Every cell of ``K_n``."""
    return refinements(corolla(n))


def binary_trees(n: int) -> tuple:
    return tuple(t for t in cells(n) if is_binary(t))


# ---------------------------------------------------------------------------
# Tamari order

def _right_rotations(t: PlanarTree) -> Iterator[PlanarTree]:
    if is_leaf(t):
        return
    a, c = t
    if not is_leaf(a):
        yield (a[0], (a[1], c))
    for r in _right_rotations(a):
        yield (r, c)
    for r in _right_rotations(c):
        yield (a, r)


@lru_cache(maxsize=None)
def _up_sets(n: int) -> dict:
    """For each binary tree of arity n, the set of trees reachable by right rotations."""
    verts = binary_trees(n)
    succ = {v: tuple(_right_rotations(v)) for v in verts}
    up: dict = {}

    def visit(v):
        if v in up:
            return up[v]
        acc = {v}
        for w in succ[v]:
            acc |= visit(w)
        up[v] = frozenset(acc)
        return up[v]

    for v in verts:
        visit(v)
    return up


def tamari_leq(u: PlanarTree, v: PlanarTree) -> bool:
    if not (is_binary(u) and is_binary(v)):
        raise ValueError("Tamari order is defined on binary trees")
    if arity(u) != arity(v):
        raise ValueError("arity mismatch")
    return v in _up_sets(arity(u))[u]


@lru_cache(maxsize=None)
def min_vertex(t: PlanarTree) -> PlanarTree:
    if is_leaf(t):
        return t
    kids = [min_vertex(c) for c in t]
    acc = (kids[0], kids[1])
    for c in kids[2:]:
        acc = (acc, c)
    return acc


@lru_cache(maxsize=None)
def max_vertex(t: PlanarTree) -> PlanarTree:
    if is_leaf(t):
        return t
    kids = [max_vertex(c) for c in t]
    acc = (kids[-2], kids[-1])
    for c in reversed(kids[:-2]):
        acc = (c, acc)
    return acc


def cell_leq(a: PlanarTree, b: PlanarTree) -> bool:
    if arity(a) != arity(b):
        raise ValueError("arity mismatch")
    return tamari_leq(max_vertex(a), min_vertex(b))


# ---------------------------------------------------------------------------
# chains

class Chain:
    """Rational combination of cells of one ``K_n``; keys are trees or pairs of trees."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, v in items:
            nv = acc.get(k, 0) + v
            if nv:
                acc[k] = Fraction(nv)
            else:
                acc.pop(k, None)
        self.terms = acc

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, k) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Chain) and self.terms == other.terms

    def __add__(self, other: Chain) -> Chain:
        return Chain(list(self.items()) + list(other.items()))

    def __sub__(self, other: Chain) -> Chain:
        return Chain(list(self.items()) + [(k, -v) for k, v in other.items()])

    def __mul__(self, c) -> Chain:
        return Chain((k, v * c) for k, v in self.items())

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return " + ".join(f"{v}·{render(k)}" for k, v in self.items()) or "0"


class BiChain(Chain):
    """Element of ``C_*(K_n) (x) C_*(K_n)``; keys are ``(a, b)`` pairs of trees."""

    __slots__ = ()

    def __add__(self, other):
        return BiChain(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return BiChain(list(self.items()) + [(k, -v) for k, v in other.items()])

    def __mul__(self, c):
        return BiChain((k, v * c) for k, v in self.items())

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return " + ".join(f"{v}·{render(a)}⊗{render(b)}" for (a, b), v in self.items()) or "0"


# ---------------------------------------------------------------------------
# boundary
#
# A cell is read as the operadic composite (c_1 (x) ... (x) c_k) o e_k of its
# root corolla with its subtrees.  The differential is a derivation for this
# composition, and on a corolla it is the quadratic part of the A-infinity
# coalgebra relation with exponent k(n+i+1):
#     d e_n = - sum_{1<=m<=n-2, i} (-1)^{m(n+i+1)} (id^i (x) e_{m+1} (x) id) o e_{n-m}.

@lru_cache(maxsize=None)
def _boundary(t: PlanarTree) -> tuple:
    if is_leaf(t):
        return ()
    k = len(t)
    out: dict = defaultdict(int)
    prefix = 0
    for j, c in enumerate(t):
        for f, s in _boundary(c):
            out[t[:j] + (f,) + t[j + 1:]] += s if prefix % 2 == 0 else -s
        prefix += dimension(c)
    total = prefix
    for m in range(1, k - 1):
        for i in range(0, k - m):
            sign = -1 if (m * (k + i + 1)) % 2 == 0 else 1
            tail = sum(dimension(c) for c in t[i + m + 1:])
            if ((m - 1) * tail + total) % 2:
                sign = -sign
            out[t[:i] + (t[i:i + m + 1],) + t[i + m + 1:]] += sign
    return tuple((f, s) for f, s in out.items() if s)


def boundary_of(t: PlanarTree) -> Chain:
    return Chain(_boundary(t))


def boundary(c: Chain | PlanarTree) -> Chain:
    if isinstance(c, tuple):
        c = Chain({c: 1})
    dims = {dimension(t) for t in c}
    if len(dims) > 1:
        raise ValueError("boundary of a non-homogeneous chain")
    if dims and dims.pop() < 1:
        raise ValueError("boundary of a vertex chain")
    acc: dict = defaultdict(Fraction)
    for t, v in c.items():
        for f, s in _boundary(t):
            acc[f] += v * s
    return Chain(acc)


def bichain_boundary(x: BiChain) -> BiChain:
    """``(d (x) 1 + 1 (x) d)`` with the Koszul sign ``(-1)^{|a|}`` on the second term."""
    acc: dict = defaultdict(Fraction)
    for (a, b), v in x.items():
        for f, s in _boundary(a):
            acc[(f, b)] += v * s
        sa = -1 if dimension(a) % 2 else 1
        for f, s in _boundary(b):
            acc[(a, f)] += v * s * sa
    return BiChain(acc)


# ---------------------------------------------------------------------------
# diagonal

class DiagonalSignError(RuntimeError):
    pass


def diagonal_support(t: PlanarTree) -> list[tuple]:
    """Pairs of faces ``(a, b)`` of ``t`` with ``|a| + |b| = |t|`` and ``max a <= min b``."""
    dim = dimension(t)
    faces_by_dim: dict = defaultdict(list)
    for f in refinements(t):
        faces_by_dim[dimension(f)].append(f)
    out = []
    for da in range(dim + 1):
        for a in faces_by_dim[da]:
            ma = max_vertex(a)
            up = _up_sets(arity(t))[ma]
            for b in faces_by_dim[dim - da]:
                if min_vertex(b) in up:
                    out.append((a, b))
    return out


@lru_cache(maxsize=None)
def _diagonal(t: PlanarTree) -> BiChain:
    if is_binary(t):
        return BiChain({(t, t): 1})
    pairs = diagonal_support(t)
    fixed = {(min_vertex(t), t): Fraction(1), (t, max_vertex(t)): Fraction(1)}
    rhs: dict = defaultdict(Fraction)
    for f, s in _boundary(t):
        for k, v in _diagonal(f).items():
            rhs[k] += s * v
    for p, v in fixed.items():
        for k, w in bichain_boundary(BiChain({p: 1})).items():
            rhs[k] -= v * w
    free = [p for p in pairs if p not in fixed]
    cols = [bichain_boundary(BiChain({p: 1})).terms for p in free]
    sol = _linalg.solve(cols, {k: v for k, v in rhs.items() if v})
    if sol is None:
        raise DiagonalSignError(f"no chain-map signs for {render(t)}")
    if _linalg.nullspace(cols):
        raise DiagonalSignError(f"chain-map signs not unique for {render(t)}")
    terms = dict(fixed)
    for j, v in sol.items():
        terms[free[j]] = v
    return BiChain(terms)


def diagonal(t: PlanarTree) -> BiChain:
    """Signed cellular diagonal of the cell ``t``.

    Support is the comparable pairs of complementary dimension.  Coefficients
    are the unique solution of the chain-map equations, normalised by
    ``+1`` on ``min t (x) t`` and ``t (x) max t``.
    """
    return _diagonal(t)


# ---------------------------------------------------------------------------
# golden sign tables

def diagonal_table(n: int) -> dict[str, list]:
    """Serializable signed term table of the diagonal for every cell of ``K_n``."""
    table = {}
    for t in sorted(cells(n), key=lambda u: (dimension(u), render(u))):
        rows = [[render(a), render(b), str(v)] for (a, b), v in diagonal(t).items()]
        table[render(t)] = sorted(rows)
    return table


def write_golden(path: str | Path, arities: Iterable[int]) -> None:
    data = {str(n): diagonal_table(n) for n in arities}
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


def compare_golden(path: str | Path) -> list[str]:
    """Differences between freshly solved diagonals and a golden file."""
    data = json.loads(Path(path).read_text())
    diffs = []
    for n, table in data.items():
        fresh = diagonal_table(int(n))
        for cell, rows in table.items():
            if fresh.get(cell) != rows:
                diffs.append(f"K_{n} cell {cell}: golden {rows} != computed {fresh.get(cell)}")
        for cell in set(fresh) - set(table):
            diffs.append(f"K_{n} cell {cell}: missing from golden file")
    return diffs
