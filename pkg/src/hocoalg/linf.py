"""L-infinity coalgebras from symmetrized A-infinity coalgebras.

``l^r = S(r) o psi_r`` with ``S(r)`` the signed sum over ``S_r`` (no ``1/r!``).
The primitive construction takes ``psi_r = rho_r`` on the free Lie algebra of
primitives, with the Lie bracket as the product.
"""
from __future__ import annotations

import itertools
import math
from typing import Callable, Iterable, Sequence

from . import _linalg
from .ainf import AInfCoalgebra, AInfStructure, _sorted_basis
from .graded import Tensor, apply_at, full_symmetrize, permute, shuffle_sum
from .hopf import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_LENGTH,
    LieBasis,
    ReducedRestriction,
    RhoExtension,
    bracket,
    bracket_insertion,
    generator_lie_basis,
    primitive_dimensions,
)
from .report import Report


class LInfStructure(AInfStructure):
    """Cooperations ``l^r = S(r) o psi_r`` of a source structure; ``l^1 = d``."""

    def __init__(self, source: AInfStructure, name: str | None = None,
                 bracket: Callable[[Tensor, Tensor], Tensor] | None = None,
                 basis: Sequence | None = None, symmetrized: bool = True):
        super().__init__()
        self.source = source
        self.name = name or f"sym({source.name})"
        self.max_arity = source.max_arity
        self.bracket = bracket
        self.basis = basis
        self.symmetrized = symmetrized

    def _coop(self, r: int, x) -> Tensor:
        img = self.source.coop(r)(x)
        if r == 1 or not self.symmetrized:
            return img
        return full_symmetrize(r, img) if img else Tensor.zero(r)

    def ell(self, r: int, t: Tensor) -> Tensor:
        return apply_at(self.coop(r), t, 0)


def symmetrize(A: AInfStructure, name: str | None = None) -> LInfStructure:
    basis = getattr(A, "basis", None)
    return LInfStructure(A, name=name, basis=basis)


class PrimitiveLInf(LInfStructure):
    """The L-infinity bialgebra on the free Lie algebra of primitives of ``C``."""

    def __init__(self, C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                 length_cap: int = DEFAULT_MAX_LENGTH, symmetrized: bool = True):
        self.lie: LieBasis = generator_lie_basis(C, degree_cap, length_cap)
        super().__init__(ReducedRestriction(RhoExtension(C)), name=f"L({C.name})",
                         bracket=bracket, basis=list(zip(self.lie.names, self.lie.elements)),
                         symmetrized=symmetrized)
        self.base = C
        self.degree_cap = degree_cap
        self.length_cap = length_cap


def theorem_pl(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
               length_cap: int = DEFAULT_MAX_LENGTH) -> PrimitiveLInf:
    return PrimitiveLInf(C, degree_cap, length_cap)


# ---------------------------------------------------------------------------
# axioms

def axiom_ii_residual(L: LInfStructure, n: int, x: Tensor) -> Tensor:
    """``sum_i (-1)^{i(n-i)} S(i, n-i) o (l^i (x) 1) o l^{1+n-i}`` applied to ``x``."""
    acc = Tensor.zero(n)
    for i in range(1, n + 1):
        outer = L.ell(1 + n - i, x)
        if not outer:
            continue
        inner = apply_at(L.coop(i), outer, 0)
        if not inner:
            continue
        term = shuffle_sum(i, n, inner)
        acc = acc - term if (i * (n - i)) % 2 else acc + term
    return acc


def check_linf(L: LInfStructure, basis: Iterable | None = None, degree_cap: int | None = None,
               max_n: int = 4, informational: Iterable[int] = ()) -> Report:
    """Axiom (i) as ``S(r) l^r = r! l^r`` for r = 2..max_n and axiom (ii) for n = 1..max_n.

    Arities in ``informational`` are evaluated and reported as notes only.
    """
    basis = L.basis if basis is None else basis
    if basis is None:
        raise ValueError("no basis to check on")
    rep = Report("check-linf", {"structure": L.name, "max_degree": degree_cap, "max_n": max_n})
    with rep.timed():
        elems = [(l, x) for l, x in _sorted_basis(basis)
                 if degree_cap is None or max(x.degrees() or {0}) <= degree_cap]
        for r in range(2, max_n + 1):
            for label, x in elems:
                img = L.ell(r, x)
                res = full_symmetrize(r, img) - img * math.factorial(r) if img else img
                if res:
                    rep.fail(f"axiom (i), r={r}, x={label}", res)
        for n in range(1, max_n + 1):
            for label, x in elems:
                res = axiom_ii_residual(L, n, x)
                if res:
                    rep.fail(f"axiom (ii), n={n}, x={label}", res)
        for n in informational:
            bad = [label for label, x in elems if axiom_ii_residual(L, n, x)]
            rep.note(f"axiom (ii) at n={n} (informational): "
                     + ("vanishes" if not bad else f"nonzero on {', '.join(bad[:5])}"))
        rep.note(f"{len(elems)} basis elements")
    return rep


def check_ell2_vanishes(L: LInfStructure, basis: Iterable | None = None) -> Report:
    """``l^2 = 0`` on the basis, after checking that ``psi_2`` is graded cocommutative."""
    basis = L.basis if basis is None else basis
    rep = Report("check-ell2", {"structure": L.name})
    with rep.timed():
        for label, x in _sorted_basis(basis):
            raw = apply_at(L.source.coop(2), x, 0)
            swapped = permute((1, 0), raw) if raw else raw
            if swapped != raw:
                rep.fail(f"psi_2 not cocommutative at x={label}", swapped - raw)
            img = L.ell(2, x)
            if img:
                rep.fail(f"l^2(x) != 0 at x={label}", img)
    return rep


def check_linf_bialgebra(L: PrimitiveLInf, arities: Iterable[int] = (2, 3, 4),
                         degree_cap: int = 9) -> Report:
    """``l^r [x, y]`` against the bracket insertion formula on ordered Lie basis pairs."""
    arities = tuple(arities)
    lie = L.lie
    rep = Report("check-lbialgebra", {"structure": L.name, "arities": list(arities),
                                      "max_degree": degree_cap, "max_length": L.length_cap})
    items = list(zip(lie.elements, lie.names, lie.degrees, lie.lengths))
    pairs = 0
    with rep.timed():
        for (x, nx, dx, lx), (y, ny, dy, ly) in itertools.product(items, repeat=2):
            if dx + dy > degree_cap or lx + ly > L.length_cap:
                continue
            pairs += 1
            for r in arities:
                lhs = L.ell(r, L.bracket(x, y))
                rhs = bracket_insertion(r, x, y, L.ell(r, x), L.ell(r, y))
                if lhs != rhs:
                    rep.fail(f"r={r}, x={nx}, y={ny}", lhs - rhs)
        rep.note(f"{pairs} ordered pairs")
    return rep


# ---------------------------------------------------------------------------
# invariants

def ell3_rank_invariant(L: LInfStructure, degree: int, basis: Iterable | None = None) -> int:
    """Rank of ``l^3`` restricted to the degree-``degree`` part of the basis."""
    basis = L.basis if basis is None else basis
    images = [L.ell(3, x).terms for _, x in _sorted_basis(basis) if x.degrees() == {degree}]
    return _linalg.rank(images)


def ell3_ranks(L: LInfStructure, degree_cap: int, basis: Iterable | None = None) -> dict[int, int]:
    return {d: ell3_rank_invariant(L, d, basis) for d in range(1, degree_cap + 1)}


def compare(A: AInfCoalgebra, B: AInfCoalgebra, degree_cap: int = 10,
            length_cap: int = DEFAULT_MAX_LENGTH) -> Report:
    """Compare per-degree primitive dimensions (Lie algebras) and ``l^3`` ranks."""
    rep = Report("compare", {"a": A.name, "b": B.name, "max_degree": degree_cap,
                             "max_length": length_cap})
    with rep.timed():
        da = primitive_dimensions(A, degree_cap, length_cap)
        db = primitive_dimensions(B, degree_cap, length_cap)
        ra = ell3_ranks(theorem_pl(A, degree_cap, length_cap), degree_cap)
        rb = ell3_ranks(theorem_pl(B, degree_cap, length_cap), degree_cap)
        lie_iso = da == db
        low = min(g.degree for g in (*A.space.reduced, *B.space.reduced))
        if low > 0 and length_cap * low < degree_cap:
            rep.note(f"length cap {length_cap} truncates words above degree {length_cap * low}")
        rep.note(f"primitive dimensions {A.name}: {da}")
        rep.note(f"primitive dimensions {B.name}: {db}")
        rep.note(f"l3 ranks {A.name}: { {d: r for d, r in ra.items() if r} }")
        rep.note(f"l3 ranks {B.name}: { {d: r for d, r in rb.items() if r} }")
        if not lie_iso:
            rep.fail("Lie algebras", "per-degree dimensions differ")
            verdict = "not isomorphic as Lie algebras"
        elif ra != rb:
            diff = [d for d in ra if ra[d] != rb[d]]
            verdict = f"Lie-isomorphic (dimensions agree); distinguished by l3 in degree {diff[0]}"
        else:
            verdict = "not distinguished by l3 within caps"
        rep.params["distinguished"] = lie_iso and ra != rb
        rep.note(verdict)
    return rep
