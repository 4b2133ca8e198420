"""A-infinity and C-infinity coalgebras.

A structure is anything with ``coop(r)`` returning the graded map
``psi_r : C -> C^{(x) r}`` (``coop(1)`` is the differential) and a
``max_arity`` above which every cooperation vanishes (``None`` if unknown).
Cells of the associahedra act through :func:`evaluate_cell`; the quadratic
relations and the tensor product of two structures are built on top of that.
"""
from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Mapping

from . import associahedron as K
from .graded import (
    UNIT,
    Gen,
    GradedMap,
    GradedSpace,
    PairGen,
    Tensor,
    apply_at,
    apply_maps,
    degree,
    interleave,
    render_key,
    permutation_sign,
)
from .report import Report


class AInfStructure:
    """Base class: memoizes the cooperation maps produced by ``_coop``."""

    max_arity: int | None = None
    name: str = "structure"

    def __init__(self):
        self._maps: dict[int, GradedMap] = {}
        self._cells: dict = {}

    def coop(self, r: int) -> GradedMap:
        m = self._maps.get(r)
        if m is None:
            if r < 1:
                raise ValueError("cooperations start at arity 1 (the differential)")
            m = self._maps[r] = GradedMap(r - 2, lambda x, r=r: self._coop(r, x), f"psi_{r}")
        return m

    def _coop(self, r: int, x: Hashable) -> Tensor:
        raise NotImplementedError

    def cell_map(self, t: K.PlanarTree) -> GradedMap | None:
        """``psi(t)``; ``None`` for a leaf (identity)."""
        if K.is_leaf(t):
            return None
        m = self._cells.get(t)
        if m is None:
            kids = [self.cell_map(c) for c in t]
            root = self.coop(len(t))

            def f(x, kids=kids, root=root):
                return apply_maps(kids, root(x))

            m = self._cells[t] = GradedMap(K.dimension(t), f, K.render(t))
        return m


def evaluate_cell(A: AInfStructure, t: K.PlanarTree) -> GradedMap:
    """The composite cooperation of the cell ``t``: ``psi(t) = (psi(c_1) (x) ... ) o psi_k``."""
    if K.is_leaf(t):
        raise ValueError("a leaf is not a cell")
    return A.cell_map(t)


class AInfCoalgebra(AInfStructure):
    """Finite A-infinity coalgebra given by tables on generators.

    ``cooperations[2]`` holds the *reduced* coproduct; for a connected space
    ``psi_2(c) = 1 (x) c + c (x) 1 + reduced(c)`` and ``psi_2(1) = 1 (x) 1``.
    For ``r >= 3`` the tables are taken as given and ``psi_r(1) = 0``.
    Missing entries are zero.
    """

    def __init__(
        self,
        space: GradedSpace,
        cooperations: Mapping[int, Mapping[Gen, Tensor]] | None = None,
        differential: Mapping[Gen, Tensor] | None = None,
        name: str = "C",
        expected_primitive: bool = False,
    ):
        super().__init__()
        self.space = space
        self.tables = {r: dict(tab) for r, tab in (cooperations or {}).items() if tab}
        self.differential = dict(differential or {})
        self.name = name
        self.expected_primitive = expected_primitive
        self.max_arity = max([2, *self.tables])
        self._validate()

    def _validate(self) -> None:
        gens = set(self.space.generators)
        for r, tab in [(1, self.differential), *self.tables.items()]:
            for g, img in tab.items():
                if g not in gens:
                    raise ValueError(f"cooperation {r} assigned on unknown generator {g!r}")
                if self.space.connected and g == UNIT:
                    raise ValueError("cooperations on the unit are fixed by connectedness")
                for key in img:
                    if len(key) != r:
                        raise ValueError(f"psi_{r}({g}) has a term of arity {len(key)}")
                    for f in key:
                        if f not in gens:
                            raise ValueError(f"psi_{r}({g}) uses unknown generator {f!r}")
                    if degree(key) != g.degree + r - 2:
                        raise ValueError(
                            f"degree violation: psi_{r}({g}) has term {render_key(key)} of degree "
                            f"{degree(key)}, expected {g.degree + r - 2}")

    @property
    def basis(self) -> tuple[Gen, ...]:
        return self.space.generators

    def _coop(self, r: int, x: Gen) -> Tensor:
        if r == 1:
            return self.differential.get(x, Tensor.zero(1))
        if r == 2 and self.space.connected:
            if x == UNIT:
                return Tensor.word(UNIT, UNIT)
            base = Tensor({(UNIT, x): 1, (x, UNIT): 1}, 2)
            return base + self.tables.get(2, {}).get(x, Tensor.zero(2))
        if x == UNIT and self.space.connected:
            return Tensor.zero(r)
        return self.tables.get(r, {}).get(x, Tensor.zero(r))

    def reduced_coproduct(self, x: Gen) -> Tensor:
        return self.tables.get(2, {}).get(x, Tensor.zero(2))

    def replace(self, **changes) -> AInfCoalgebra:
        kw = dict(space=self.space, cooperations=self.tables, differential=self.differential,
                  name=self.name, expected_primitive=self.expected_primitive)
        kw.update(changes)
        return AInfCoalgebra(**kw)


# ---------------------------------------------------------------------------
# relations

def _elements(basis: Iterable) -> list[tuple[str, Tensor]]:
    out = []
    for b in basis:
        if isinstance(b, tuple) and len(b) == 2 and isinstance(b[1], Tensor):
            out.append(b)
        elif isinstance(b, Tensor):
            out.append((str(b), b))
        else:
            out.append((render_key((b,)), Tensor.word(b)))
    return out


def relation_residual(A: AInfStructure, n: int, x: Tensor) -> Tensor:
    """Left side of the degree-n quadratic relation applied to ``x``.

    ``sum_{k,i} (-1)^{k(n+i+1)} (id^i (x) psi_{k+1} (x) id^{n-k-1-i}) o psi_{n-k}``.
    """
    acc = Tensor.zero(n)
    for k in range(n):
        outer = apply_at(A.coop(n - k), x, 0)
        if not outer:
            continue
        inner = A.coop(k + 1)
        for i in range(n - k):
            term = apply_at(inner, outer, i)
            acc = acc - term if (k * (n + i + 1)) % 2 else acc + term
    return acc


def default_relation_range(A: AInfStructure) -> int:
    if A.max_arity is None:
        raise ValueError("structure has no arity bound; pass max_n explicitly")
    return 2 * A.max_arity - 1


def _sorted_basis(basis):
    items = _elements(basis)
    return sorted(items, key=lambda lt: (min(lt[1].degrees() or {0}), lt[0]))


def check_ainf(A: AInfStructure, basis: Iterable, degree_cap: int | None = None,
               max_n: int | None = None, check: str = "check-ainf") -> Report:
    """Evaluate the quadratic relations for n = 1..max_n on every basis element."""
    max_n = max_n or default_relation_range(A)
    rep = Report(check, {"structure": A.name, "max_degree": degree_cap, "max_n": max_n})
    with rep.timed():
        elems = [(l, x) for l, x in _sorted_basis(basis)
                 if degree_cap is None or max(x.degrees() or {0}) <= degree_cap]
        for n in range(1, max_n + 1):
            for label, x in elems:
                res = relation_residual(A, n, x)
                if res:
                    rep.fail(f"n={n}, x={label}", res)
        rep.note(f"{len(elems)} basis elements, relations n=1..{max_n}")
    return rep


def _reduced_part(t: Tensor) -> Tensor:
    """Drop the terms that carry a unit factor."""
    return Tensor({k: v for k, v in t.items() if UNIT not in k and () not in k}, t.arity)


def signed_unshuffle(p: int, t: Tensor) -> Tensor:
    """Split into a p-block and the rest, weighted by ``sgn(sigma) * koszul(sigma)``.

    ``sigma`` is the unshuffle moving the chosen positions to the front; the
    result is an arity-2 tensor of words.
    """
    out: dict = {}
    for key, c in t.items():
        r = len(key)
        degs = [degree(a) for a in key]
        for first in itertools.combinations(range(r), p):
            fs = set(first)
            rest = [a for a in range(r) if a not in fs]
            s = sum(degs[a] * degs[b] for a in rest for b in first if b > a)
            sign = permutation_sign(list(first) + rest) * (-1 if s % 2 else 1)
            nk = (tuple(key[a] for a in first), tuple(key[a] for a in rest))
            out[nk] = out.get(nk, 0) + sign * c
    return Tensor(out, 2)


def check_cinf(A: AInfCoalgebra, basis: Iterable | None = None, degree_cap: int | None = None) -> Report:
    """Shuffle condition: every signed (p, r-p)-unshuffle kills the reduced psi_r."""
    basis = A.space.reduced if basis is None else basis
    rep = Report("check-cinf", {"structure": A.name, "max_degree": degree_cap})
    with rep.timed():
        for label, x in _sorted_basis(basis):
            if degree_cap is not None and max(x.degrees() or {0}) > degree_cap:
                continue
            for r in range(2, (A.max_arity or 2) + 1):
                img = _reduced_part(apply_at(A.coop(r), x, 0))
                for p in range(1, r):
                    res = signed_unshuffle(p, img)
                    if res:
                        rep.fail(f"r={r}, split=({p},{r - p}), x={label}", res)
    return rep


# ---------------------------------------------------------------------------
# tensor product

class TensorProductAInf(AInfStructure):
    """``A (x) B`` with ``Psi_r = chi o (psi^A (x) psi^B) o Delta_K(e^{r-2})``.

    ``chi`` pairs the i-th output of A with the i-th output of B, with the
    Koszul sign of that shuffle.
    """

    def __init__(self, A: AInfStructure, B: AInfStructure, diagonal=None, name: str | None = None):
        super().__init__()
        self.A, self.B = A, B
        self.diagonal = diagonal or K.diagonal
        self.name = name or f"{A.name}⊗{B.name}"
        if A.max_arity is not None and B.max_arity is not None:
            self.max_arity = max(2, A.max_arity + B.max_arity - 2)

    def _coop(self, r: int, x: PairGen) -> Tensor:
        a, b = x
        if r == 1:
            left = interleave(apply_at(self.A.coop(1), Tensor.word(a), 0), Tensor.word(b), PairGen)
            right = interleave(Tensor.word(a), apply_at(self.B.coop(1), Tensor.word(b), 0), PairGen)
            return left + (right * (-1 if degree(a) % 2 else 1))
        acc = Tensor.zero(r)
        for (ta, tb), s in self.diagonal(K.corolla(r)).items():
            fa = self.A.cell_map(ta)(a)
            if not fa:
                continue
            fb = self.B.cell_map(tb)(b)
            if not fb:
                continue
            sign = -s if (K.dimension(tb) * degree(a)) % 2 else s
            acc = acc + interleave(fa, fb, PairGen) * sign
        return acc


def tensor_cooperation(A: AInfStructure, B: AInfStructure, r: int) -> GradedMap:
    return TensorProductAInf(A, B).coop(r)


def pair_basis(A: AInfCoalgebra, B: AInfCoalgebra, degree_cap: int | None = None) -> list[PairGen]:
    out = [PairGen(a, b) for a in A.basis for b in B.basis]
    return [p for p in out if degree_cap is None or degree(p) <= degree_cap]


def check_tensor_ainf(A: AInfCoalgebra, B: AInfCoalgebra, degree_cap: int | None = None,
                      max_n: int | None = None, diagonal=None) -> Report:
    P = TensorProductAInf(A, B, diagonal=diagonal)
    rep = check_ainf(P, pair_basis(A, B, degree_cap), degree_cap, max_n, check="check-tensor-ainf")
    return rep
