"""The tensor algebra on a reduced A-infinity coalgebra.

Words of ``T(C~)`` are tuples of reduced generators; the empty word is the
unit and the product is concatenation.  Two extensions of the cooperations
``Delta_r`` of ``C`` to ``T(C~)`` are provided:

* :class:`PsiExtension` peels one generator off the left of a word and uses
  the cellular diagonal, ``psi_r(xy) = sum sgn(a,b) psi(a)(x) . psi(b)(y)``.
* :class:`RhoExtension` is the extension through primitive tensor
  cooperations: ``rho_r(xy) = Delta^(r-1)(x) . rho_r(y) + rho_r(x) . Delta^(r-1)(y)``
  with ``Delta^(r-1)`` the iterated coproduct of the tensor Hopf algebra.
  On primitive ``x``, ``y`` this is the insertion formula of
  :func:`insertion_formula`.

Everything is truncated by total degree and word length.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from . import associahedron as K
from .ainf import AInfCoalgebra, AInfStructure, check_ainf
from .graded import (
    UNIT,
    Gen,
    GradedMap,
    Tensor,
    apply_at,
    degree,
    kernel,
    render_key,
    slot_product,
)
from .report import Report

DEFAULT_MAX_DEGREE = 12
DEFAULT_MAX_LENGTH = 4

Word = tuple


def lift(t: Tensor) -> Tensor:
    """Read a tensor over generators of C as a tensor over words of T(C~)."""
    return Tensor(((tuple(() if f == UNIT else (f,) for f in k), v) for k, v in t.items()), t.arity)


def words(generators: Sequence[Gen], max_degree: int, max_length: int, min_length: int = 1) -> list[Word]:
    """All words in the given (reduced) generators within the caps, by degree then length."""
    gens = [g for g in generators if g != UNIT]
    out = []
    layer = [()]
    for length in range(1, max_length + 1):
        layer = [w + (g,) for w in layer for g in gens if degree(w) + g.degree <= max_degree]
        if length >= min_length:
            out.extend(layer)
    return sorted(out, key=lambda w: (degree(w), len(w), [g.name for g in w]))


def word_element(w: Word) -> Tensor:
    return Tensor.word(w)


def multiply(u: Tensor, v: Tensor) -> Tensor:
    """Product mu of two arity-1 tensor algebra elements."""
    return Tensor((((ku[0] + kv[0],), cu * cv) for ku, cu in u.items() for kv, cv in v.items()), 1)


def bracket(u: Tensor, v: Tensor) -> Tensor:
    """Graded commutator ``uv - (-1)^{|u||v|} vu``, bilinear over homogeneous parts."""
    terms = []
    for ku, cu in u.items():
        for kv, cv in v.items():
            a, b = ku[0], kv[0]
            s = -1 if (degree(a) * degree(b)) % 2 else 1
            terms += [((a + b,), cu * cv), ((b + a,), -s * cu * cv)]
    return Tensor(terms, 1)


class _Extension(AInfStructure):
    def __init__(self, base: AInfCoalgebra):
        super().__init__()
        if not base.space.connected:
            raise ValueError("tensor algebra extensions need a connected coalgebra")
        self.base = base

    def _differential(self, w: Word) -> Tensor:
        # d extended as a derivation of the concatenation product
        acc = Tensor.zero(1)
        prefix = 0
        for i, g in enumerate(w):
            dg = lift(self.base.coop(1)(g))
            for (u,), c in dg.items():
                acc = acc + Tensor({(w[:i] + u + w[i + 1:],): -c if prefix % 2 else c}, 1)
            prefix += g.degree
        return acc

    def _on_unit(self, r: int) -> Tensor:
        return Tensor.word((), ()) if r == 2 else Tensor.zero(r)

    def coproduct_power(self, r: int) -> GradedMap:
        """Iterated Hopf coproduct ``Delta^(r-1)`` (left comb of psi_2's)."""
        if r == 1:
            return GradedMap(0, lambda w: Tensor.word(w), "id")
        return self.cell_map(K.left_comb(r))


class PsiExtension(_Extension):
    """``psi_r`` on T(C~) through the cellular diagonal, left-most association."""

    def __init__(self, base: AInfCoalgebra, diagonal=None):
        super().__init__(base)
        self.diagonal = diagonal or K.diagonal
        self.name = f"T({base.name})[psi]"

    def _coop(self, r: int, w: Word) -> Tensor:
        if r == 1:
            return self._differential(w)
        if len(w) == 0:
            return self._on_unit(r)
        if len(w) == 1:
            return lift(self.base.coop(r)(w[0]))
        x, y = w[:1], w[1:]
        acc = Tensor.zero(r)
        for (a, b), s in self.diagonal(K.corolla(r)).items():
            fx = self.cell_map(a)(x)
            if not fx:
                continue
            fy = self.cell_map(b)(y)
            if not fy:
                continue
            sign = -s if (K.dimension(b) * degree(x)) % 2 else s
            acc = acc + slot_product(fx, fy) * sign
        return acc


class RhoExtension(_Extension):
    """``rho_r`` on T(C~): the extension through primitive tensor cooperations.

    ``peel`` selects whether one generator is split off on the left (default)
    or the right; both give the same map.
    """

    def __init__(self, base: AInfCoalgebra, peel: str = "left"):
        super().__init__(base)
        if peel not in ("left", "right"):
            raise ValueError(peel)
        self.peel = peel
        self.hopf = PsiExtension(base)
        self.name = f"T({base.name})[rho]"
        self.max_arity = base.max_arity

    def _coop(self, r: int, w: Word) -> Tensor:
        if r == 1:
            return self._differential(w)
        if len(w) == 0:
            return self._on_unit(r)
        if len(w) == 1:
            return lift(self.base.coop(r)(w[0]))
        x, y = (w[:1], w[1:]) if self.peel == "left" else (w[:-1], w[-1:])
        delta = self.hopf.coproduct_power(r)
        first = slot_product(delta(x), self.coop(r)(y))
        if ((r - 2) * degree(x)) % 2:
            first = -first
        return first + slot_product(self.coop(r)(x), delta(y))


def cooperate(S: AInfStructure, r: int, t: Tensor) -> Tensor:
    """Apply ``coop(r)`` to an arity-1 element."""
    return apply_at(S.coop(r), t, 0)


# ---------------------------------------------------------------------------
# insertion formula for primitive arguments

def insert_left(x: Tensor, t: Tensor) -> Tensor:
    """``sum_i y_1 (x) ... (x) x y_i (x) ... (x) y_r`` with the sign of x passing y_1..y_{i-1}."""
    acc: dict = defaultdict(Fraction)
    for (kx,), cx in x.items():
        dx = degree(kx)
        for key, c in t.items():
            pre = 0
            for i, yi in enumerate(key):
                s = -1 if (dx * pre) % 2 else 1
                acc[key[:i] + (kx + yi,) + key[i + 1:]] += s * c * cx
                pre += degree(yi)
    return Tensor(acc, t.arity)


def insert_right(y: Tensor, t: Tensor) -> Tensor:
    """``sum_i x_1 (x) ... (x) x_i y (x) ... (x) x_r`` with the sign of y passing x_{i+1}..x_r."""
    acc: dict = defaultdict(Fraction)
    for (ky,), cy in y.items():
        dy = degree(ky)
        for key, c in t.items():
            post = sum(degree(f) for f in key)
            for i, xi in enumerate(key):
                post -= degree(xi)
                s = -1 if (dy * post) % 2 else 1
                acc[key[:i] + (xi + ky,) + key[i + 1:]] += s * c * cy
    return Tensor(acc, t.arity)


def _homogeneous_degree(t: Tensor) -> int:
    ds = t.degrees()
    if len(ds) > 1:
        raise ValueError("expected a homogeneous element")
    return ds.pop() if ds else 0


def insertion_formula(r: int, x: Tensor, y: Tensor, rx: Tensor, ry: Tensor) -> Tensor:
    """``rho_r(xy)`` for primitive ``x``, ``y`` given ``rx = rho_r(x)``, ``ry = rho_r(y)``."""
    first = insert_left(x, ry)
    if ((r - 2) * _homogeneous_degree(x)) % 2:
        first = -first
    return first + insert_right(y, rx)


def bracket_insertion(r: int, x: Tensor, y: Tensor, lx: Tensor, ly: Tensor) -> Tensor:
    """``sum y_1 .. [x, y_i] .. y_r + sum x_1 .. [x_i, y] .. x_r`` with Koszul signs.

    ``lx``, ``ly`` are the images of ``x``, ``y`` under the cooperation.
    """
    acc: dict = defaultdict(Fraction)
    dx, dy = _homogeneous_degree(x), _homogeneous_degree(y)
    sx = -1 if ((r - 2) * dx) % 2 else 1
    for key, c in ly.items():
        pre = 0
        for i, yi in enumerate(key):
            s = sx * (-1 if (dx * pre) % 2 else 1)
            for (b,), cb in bracket(x, Tensor.word(yi)).items():
                acc[key[:i] + (b,) + key[i + 1:]] += s * c * cb
            pre += degree(yi)
    for key, c in lx.items():
        post = sum(degree(f) for f in key)
        for i, xi in enumerate(key):
            post -= degree(xi)
            s = -1 if (dy * post) % 2 else 1
            for (b,), cb in bracket(Tensor.word(xi), y).items():
                acc[key[:i] + (b,) + key[i + 1:]] += s * c * cb
    return Tensor(acc, ly.arity or lx.arity)


# ---------------------------------------------------------------------------
# primitives

def primitives(C: AInfCoalgebra, degree_cap: int | None = None) -> list[Tensor]:
    """Basis of the primitives of ``C~``: kernel of the reduced coproduct."""
    return kernel(C.reduced_coproduct, C.space.reduced, degree_cap)


def reduced_hopf_coproduct(T: _Extension):
    def f(w: Word) -> Tensor:
        full = T.coproduct_power(2)(w)
        return Tensor({k: v for k, v in full.items() if k[0] and k[1]}, 2)
    return f


def tensor_primitives(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                      length_cap: int = DEFAULT_MAX_LENGTH) -> list[Tensor]:
    """Primitives of the tensor Hopf algebra ``T(C~)`` within the caps (exact kernel)."""
    T = PsiExtension(C)
    return kernel(reduced_hopf_coproduct(T), words(C.space.reduced, degree_cap, length_cap))


def primitive_dimensions(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                         length_cap: int = DEFAULT_MAX_LENGTH) -> dict[int, int]:
    dims: Counter = Counter()
    for p in tensor_primitives(C, degree_cap, length_cap):
        dims[_homogeneous_degree(p)] += 1
    return dict(sorted(dims.items()))


# ---------------------------------------------------------------------------
# free graded Lie algebra

def _is_lyndon(w: tuple) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _standard_split(w: tuple) -> tuple[tuple, tuple]:
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError("no standard factorization")


@dataclass
class LieBasis:
    """Bracketed basis of the free graded Lie algebra on a set of homogeneous letters."""

    letters: list[Tensor]
    labels: list[str]
    elements: list[Tensor] = field(default_factory=list)
    names: list[str] = field(default_factory=list)
    degrees: list[int] = field(default_factory=list)
    lengths: list[int] = field(default_factory=list)

    def dimensions(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees).items()))

    def in_degree(self, d: int) -> list[Tensor]:
        return [e for e, dd in zip(self.elements, self.degrees) if dd == d]

    def __len__(self):
        return len(self.elements)


def lie_basis(letters: Sequence[Tensor], degree_cap: int, length_cap: int,
              labels: Sequence[str] | None = None) -> LieBasis:
    """Lyndon brackets plus ``[u, u]`` for odd Lyndon ``u``.

    Letters are homogeneous arity-1 elements of T(C~) (typically the
    primitive generators), ordered as given.
    """
    letters = list(letters)
    labels = list(labels) if labels is not None else [str(l) for l in letters]
    ldeg = [_homogeneous_degree(l) for l in letters]
    basis = LieBasis(letters, labels)
    memo: dict[tuple, Tensor] = {}

    def br(w: tuple) -> Tensor:
        if w not in memo:
            if len(w) == 1:
                memo[w] = letters[w[0]]
            else:
                u, v = _standard_split(w)
                memo[w] = bracket(br(u), br(v))
        return memo[w]

    def name(w: tuple) -> str:
        if len(w) == 1:
            return labels[w[0]]
        u, v = _standard_split(w)
        return f"[{name(u)},{name(v)}]"

    found = []
    for length in range(1, length_cap + 1):
        for w in itertools.product(range(len(letters)), repeat=length):
            d = sum(ldeg[i] for i in w)
            if d > degree_cap or not _is_lyndon(w):
                continue
            found.append((d, length, w, br(w), name(w)))
            if d % 2 and 2 * length <= length_cap and 2 * d <= degree_cap:
                e = br(w)
                found.append((2 * d, 2 * length, w + w, bracket(e, e), f"[{name(w)},{name(w)}]"))
    for d, length, w, e, n in sorted(found, key=lambda f: (f[0], f[1], f[2])):
        basis.elements.append(e)
        basis.names.append(n)
        basis.degrees.append(d)
        basis.lengths.append(length)
    return basis


def generator_lie_basis(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                        length_cap: int = DEFAULT_MAX_LENGTH) -> LieBasis:
    """Lie basis on the primitives of C (lifted to words)."""
    prims = primitives(C)
    letters = [lift(p) for p in prims]
    labels = [str(p) for p in prims]
    return lie_basis(letters, degree_cap, length_cap, labels)


def is_primitive_element(T: _Extension, t: Tensor) -> bool:
    red = reduced_hopf_coproduct(T)
    acc = Tensor.zero(2)
    for (w,), c in t.items():
        acc = acc + red(w) * c
    return not acc


# ---------------------------------------------------------------------------
# membership in tensor powers of the Lie algebra

def _content(w: Word) -> tuple:
    return tuple(sorted(Counter(g.name for g in w).items()))


class LieSpan:
    """Decides membership of ``T(C~)^{(x) r}`` elements in ``(L (+) Q.1)^{(x) r}``.

    Requires letters that are single generators, so every basis element is
    homogeneous in generator content and the test splits by content.
    """

    def __init__(self, basis: LieBasis):
        self.by_content: dict[tuple, list[Tensor]] = defaultdict(list)
        for e in basis.elements:
            contents = {_content(k[0]) for k in e}
            if len(contents) != 1:
                raise ValueError("Lie span membership needs monomial letters")
            self.by_content[contents.pop()].append(e)
        self.by_content[()] = [Tensor.word(())]

    def contains(self, t: Tensor) -> bool:
        groups: dict[tuple, dict] = defaultdict(dict)
        for key, c in t.items():
            groups[tuple(_content(f) for f in key)][key] = c
        for sig, target in groups.items():
            factors = [self.by_content.get(s, []) for s in sig]
            if any(not f for f in factors):
                return False
            cols = []
            for combo in itertools.product(*factors):
                acc = {(): Fraction(1)}
                for e in combo:
                    acc = {k + (w,): c * ce for k, c in acc.items() for (w,), ce in e.items()}
                cols.append(acc)
            if _linalg.solve(cols, target) is None:
                return False
        return True


# ---------------------------------------------------------------------------
# checks

def check_bialgebra(C: AInfCoalgebra, arities: Iterable[int] = (2, 3, 4),
                    degree_cap: int = DEFAULT_MAX_DEGREE, length_cap: int = DEFAULT_MAX_LENGTH,
                    generator_left: bool = False, diagonal=None) -> Report:
    """``psi_r(u v) = mu^{(x) r} Psi_r(u (x) v)`` for pairs of words within the caps.

    With ``generator_left`` only single generators ``u`` are tried (the case
    that defines the extension); otherwise every pair of words.  A substitute
    ``diagonal`` changes only the right hand side.
    """
    T = PsiExtension(C)
    diag = diagonal or K.diagonal
    arities = tuple(arities)
    rep = Report("check-bialgebra", {"structure": C.name, "arities": list(arities),
                                     "max_degree": degree_cap, "max_length": length_cap})
    ws = words(C.space.reduced, degree_cap, length_cap)
    pairs = 0
    with rep.timed():
        for u in ws:
            if generator_left and len(u) != 1:
                continue
            for v in ws:
                if degree(u) + degree(v) > degree_cap or len(u) + len(v) > length_cap:
                    continue
                pairs += 1
                for r in arities:
                    lhs = T.coop(r)(u + v)
                    rhs = Tensor.zero(r)
                    for (a, b), s in diag(K.corolla(r)).items():
                        fu = T.cell_map(a)(u)
                        fv = T.cell_map(b)(v) if fu else None
                        if fu and fv:
                            sign = -s if (K.dimension(b) * degree(u)) % 2 else s
                            rhs = rhs + slot_product(fu, fv) * sign
                    if lhs != rhs:
                        rep.fail(f"r={r}, u={render_key((u,))}, v={render_key((v,))}", lhs - rhs)
        rep.note(f"{pairs} word pairs")
    return rep


def check_primitive_ainf(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                         length_cap: int = DEFAULT_MAX_LENGTH, max_n: int | None = None) -> Report:
    """Quadratic relations for the rho-extension on every word within the caps."""
    R = RhoExtension(C)
    basis = [Tensor.word(w) for w in words(C.space.reduced, degree_cap, length_cap)]
    rep = check_ainf(R, basis, degree_cap, max_n or 2 * C.max_arity - 1, check="check-primitive")
    rep.params["max_length"] = length_cap
    return rep


class ReducedRestriction(AInfStructure):
    """Cooperations of ``S`` with every term carrying an empty-word factor dropped."""

    def __init__(self, S: AInfStructure):
        super().__init__()
        self.S = S
        self.max_arity = S.max_arity
        self.name = f"{S.name}|reduced"

    def _coop(self, r: int, w: Word) -> Tensor:
        img = self.S.coop(r)(w)
        if r == 1:
            return img
        return Tensor({k: v for k, v in img.items() if () not in k}, r)


def check_primitive_ainf_on_lie(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                                length_cap: int = DEFAULT_MAX_LENGTH, max_n: int | None = None) -> Report:
    """Quadratic relations for the reduced rho-extension restricted to the Lie basis."""
    R = ReducedRestriction(RhoExtension(C))
    basis = generator_lie_basis(C, degree_cap, length_cap)
    elems = list(zip(basis.names, basis.elements))
    rep = check_ainf(R, elems, degree_cap, max_n or 2 * C.max_arity - 1, check="check-primitive-lie")
    rep.params["max_length"] = length_cap
    return rep


def check_extension_ainf(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
                         length_cap: int = DEFAULT_MAX_LENGTH, max_n: int = 5) -> Report:
    """Quadratic relations for the psi-extension on words within the caps."""
    T = PsiExtension(C)
    basis = [Tensor.word(w) for w in words(C.space.reduced, degree_cap, length_cap)]
    rep = check_ainf(T, basis, degree_cap, max_n, check="check-psi-ainf")
    rep.params["max_length"] = length_cap
    return rep


def check_eq9(C: AInfCoalgebra, degree_cap: int = DEFAULT_MAX_DEGREE,
              length_cap: int = DEFAULT_MAX_LENGTH, min_length: int = 2) -> Report:
    """``2 psi_2 = rho_2`` and ``psi_3 = rho_3`` on decomposable words."""
    T, R = PsiExtension(C), RhoExtension(C)
    rep = Report("check-eq9", {"structure": C.name, "max_degree": degree_cap,
                               "max_length": length_cap, "min_length": min_length})
    bad = {2: 0, 3: 0}
    with rep.timed():
        ws = words(C.space.reduced, degree_cap, length_cap, min_length=min_length)
        for w in ws:
            r2 = R.coop(2)(w) - T.coop(2)(w) * 2
            if r2:
                bad[2] += 1
                rep.fail(f"rho_2 - 2 psi_2 on {render_key((w,))}", r2)
            r3 = R.coop(3)(w) - T.coop(3)(w)
            if r3:
                bad[3] += 1
                rep.fail(f"rho_3 - psi_3 on {render_key((w,))}", r3)
        rep.note(f"{len(ws)} words; rho_2 = 2 psi_2 fails on {bad[2]}, rho_3 = psi_3 fails on {bad[3]}")
    return rep


def check_rho_preserves_primitives(C: AInfCoalgebra, arities: Iterable[int] = (2, 3, 4),
                                   degree_cap: int = 10, length_cap: int = 5,
                                   mode: str = "rho") -> Report:
    """Each Lie basis element is sent into ``(L (+) Q.1)^{(x) r}`` (exact solve)."""
    S = RhoExtension(C) if mode == "rho" else PsiExtension(C)
    arities = tuple(arities)
    basis = generator_lie_basis(C, degree_cap, length_cap)
    span = LieSpan(generator_lie_basis(C, degree_cap + max(arities), length_cap))
    rep = Report(f"check-preserves-primitives[{mode}]",
                 {"structure": C.name, "arities": list(arities), "max_degree": degree_cap,
                  "max_length": length_cap})
    with rep.timed():
        for e, n in zip(basis.elements, basis.names):
            for r in arities:
                img = cooperate(S, r, e)
                if not span.contains(img):
                    rep.fail(f"r={r}, b={n}", img)
        rep.note(f"{len(basis)} Lie basis elements")
    return rep


def find_psi_witness(C: AInfCoalgebra, arities: Iterable[int] = (4, 5),
                     degree_cap: int = 10, length_cap: int = 5) -> tuple | None:
    """A Lie basis element whose psi-image leaves the Lie span, or ``None`` within the caps."""
    rep = check_rho_preserves_primitives(C, arities, degree_cap, length_cap, mode="psi")
    if rep.passed:
        return None
    return rep.witnesses[0]


def check_brformula(C: AInfCoalgebra, arities: Iterable[int] = (2, 3, 4),
                    degree_cap: int = 9, length_cap: int = 5) -> Report:
    """``rho_r[x,y]`` against the bracket insertion formula on Lie basis pairs."""
    R = RhoExtension(C)
    basis = generator_lie_basis(C, degree_cap, length_cap)
    arities = tuple(arities)
    rep = Report("check-brformula", {"structure": C.name, "arities": list(arities),
                                     "max_degree": degree_cap, "max_length": length_cap})
    with rep.timed():
        items = list(zip(basis.elements, basis.names, basis.degrees, basis.lengths))
        for (x, nx, dx, lx), (y, ny, dy, ly) in itertools.product(items, repeat=2):
            if dx + dy > degree_cap or lx + ly > length_cap:
                continue
            for r in arities:
                lhs = cooperate(R, r, bracket(x, y))
                rhs = bracket_insertion(r, x, y, cooperate(R, r, x), cooperate(R, r, y))
                if lhs != rhs:
                    rep.fail(f"r={r}, x={nx}, y={ny}", lhs - rhs)
    return rep
