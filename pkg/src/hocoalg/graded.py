"""Graded vector spaces over Q, tensor words and Koszul signs.

Basis elements carry their own degree: a :class:`Gen` has an explicit degree,
and any tuple of basis elements (a word of the tensor algebra, or a
:class:`PairGen` of ``A (x) B``) has the sum of the degrees of its entries.
A :class:`Tensor` is a finite Q-linear combination of *keys*, each key being a
tuple of ``r`` such factors, i.e. an element of the ``r``-th tensor power.

Grading is homological throughout.  All arithmetic is exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from . import _linalg

Key = tuple
Scalar = int | Fraction


@dataclass(frozen=True)
class Gen:
    """A basis element of a graded space."""

    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree for generator {self.name!r}")

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"{self.name}_{self.degree}"


#: counit / unit element of a connected space
UNIT = Gen("1", 0)


class PairGen(NamedTuple):
    """Basis element ``a (x) b`` of a tensor product of two graded spaces."""

    left: Any
    right: Any

    def __str__(self) -> str:
        return f"({render_factor(self.left)}*{render_factor(self.right)})"


@lru_cache(maxsize=None)
def degree(x: Hashable) -> int:
    if isinstance(x, Gen):
        return x.degree
    return sum(degree(y) for y in x)


def koszul_sign(p: int, q: int) -> int:
    """Sign picked up when objects of degrees ``p`` and ``q`` are swapped."""
    return -1 if (p * q) % 2 else 1


def render_factor(x: Hashable) -> str:
    if isinstance(x, (Gen, PairGen)):
        return str(x)
    if len(x) == 0:
        return "1"
    return "".join(render_factor(y) for y in x)


def render_key(key: Key) -> str:
    return " ⊗ ".join(render_factor(f) for f in key) if key else "()"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class GradedSpace:
    """Finite graded basis; if ``connected`` the unit ``1`` is the only degree-0 element."""

    generators: tuple[Gen, ...]
    connected: bool = True

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator ids")
        if self.connected:
            zero = [g for g in self.generators if g.degree == 0]
            if zero != [UNIT]:
                raise ValueError("connected space needs exactly one degree-0 generator named '1'")

    @property
    def reduced(self) -> tuple[Gen, ...]:
        return tuple(g for g in self.generators if g != UNIT)

    def by_name(self, name: str) -> Gen:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def in_degree(self, d: int) -> list[Gen]:
        return [g for g in self.generators if g.degree == d]


class Tensor:
    """Exact linear combination of tensor words of a fixed tensor-arity."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms: Mapping[Key, Scalar] | Iterable[tuple[Key, Scalar]] = (), arity: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for k, v in items:
            if not isinstance(k, tuple) or isinstance(k, PairGen):
                raise TypeError(f"tensor keys must be tuples of factors, got {k!r}")
            nv = acc.get(k, 0) + v
            if nv:
                acc[k] = Fraction(nv)
            else:
                acc.pop(k, None)
        for k in acc:
            if arity is None:
                arity = len(k)
            elif len(k) != arity:
                raise ValueError("mixed tensor-arity in one Tensor")
        self.terms = acc
        self.arity = arity

    @classmethod
    def word(cls, *factors, coeff: Scalar = 1) -> Tensor:
        return cls({tuple(factors): coeff}, arity=len(factors))

    @classmethod
    def zero(cls, arity: int | None = None) -> Tensor:
        return cls({}, arity)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Key]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, key: Key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def _combine(self, other: Tensor, s: int) -> Tensor:
        if not isinstance(other, Tensor):
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + s * v
        return Tensor(acc, self.arity if self.arity is not None else other.arity)

    def __add__(self, other: Tensor) -> Tensor:
        return self._combine(other, 1)

    def __sub__(self, other: Tensor) -> Tensor:
        return self._combine(other, -1)

    def __neg__(self) -> Tensor:
        return Tensor({k: -v for k, v in self.terms.items()}, self.arity)

    def __mul__(self, c: Scalar) -> Tensor:
        return Tensor({k: v * c for k, v in self.terms.items()}, self.arity)

    __rmul__ = __mul__

    def __matmul__(self, other: Tensor) -> Tensor:
        """Tensor product, ``(a) @ (b) = a (x) b``; no sign is involved."""
        ar = None if self.arity is None or other.arity is None else self.arity + other.arity
        return Tensor(((k1 + k2, v1 * v2) for k1, v1 in self.items() for k2, v2 in other.items()), ar)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self) -> set[int]:
        return {degree(k) for k in self.terms}

    def sorted_items(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: render_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.sorted_items():
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            c = "" if mag == 1 else _fmt_coeff(mag) + "·"
            parts.append(f"{sign} {c}{render_key(k)}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Graded maps and their signed application to tensor slots


class GradedMap:
    """Homogeneous linear map given on basis elements, memoized.

    ``func`` takes one factor (a basis element) and returns a Tensor.
    """

    def __init__(self, degree: int, func: Callable[[Hashable], Tensor], name: str = "f"):
        self.degree = degree
        self.func = func
        self.name = name
        self._memo: dict = {}

    def __call__(self, x: Hashable) -> Tensor:
        try:
            return self._memo[x]
        except KeyError:
            out = self._memo[x] = self.func(x)
            return out

    def apply(self, t: Tensor) -> Tensor:
        """Apply to a tensor of arity one."""
        return apply_at(self, t, 0)

    def __repr__(self) -> str:
        return f"GradedMap({self.name}, degree={self.degree})"


def zero_map(degree: int, arity: int) -> GradedMap:
    return GradedMap(degree, lambda x: Tensor.zero(arity), "0")


IDENTITY = GradedMap(0, lambda x: Tensor.word(x), "id")


def apply_at(f: GradedMap | None, t: Tensor, i: int) -> Tensor:
    """``(id^{(x) i} (x) f (x) id^{...})(t)`` with the Koszul sign of ``f`` passing the prefix."""
    if f is None or f is IDENTITY:
        return t
    acc: dict[Key, Fraction] = {}
    odd = f.degree % 2
    for key, c in t.items():
        img = f(key[i])
        if not img:
            continue
        if odd and sum(degree(y) for y in key[:i]) % 2:
            c = -c
        pre, post = key[:i], key[i + 1:]
        for k2, c2 in img.items():
            nk = pre + k2 + post
            acc[nk] = acc.get(nk, 0) + c * c2
    return Tensor(acc)


def apply_maps(maps: Sequence[GradedMap | None], t: Tensor) -> Tensor:
    """Apply ``f_1 (x) ... (x) f_k`` (``None`` meaning identity) with Koszul signs."""
    if t.arity is not None and t.arity != len(maps):
        raise ValueError(f"arity mismatch: {len(maps)} maps on arity-{t.arity} tensor")
    for i in range(len(maps) - 1, -1, -1):
        t = apply_at(maps[i], t, i)
    return t


def interleave(x: Tensor, y: Tensor, combine: Callable[[Any, Any], Any]) -> Tensor:
    """``(x_1..x_r), (y_1..y_r) -> (x_1 y_1, ..., x_r y_r)`` with the Koszul sign of the shuffle.

    ``combine`` builds the merged factor (concatenation of words, or a pair).
    """
    acc: dict[Key, Fraction] = {}
    for kx, cx in x.items():
        dx = [degree(a) for a in kx]
        suffix = [0] * (len(kx) + 1)
        for j in range(len(kx) - 1, -1, -1):
            suffix[j] = suffix[j + 1] + dx[j]
        for ky, cy in y.items():
            if len(ky) != len(kx):
                raise ValueError("interleave needs equal arities")
            s = 0
            for j, b in enumerate(ky):
                s += degree(b) * suffix[j + 1]
            c = cx * cy * (-1 if s % 2 else 1)
            nk = tuple(combine(a, b) for a, b in zip(kx, ky))
            acc[nk] = acc.get(nk, 0) + c
    return Tensor(acc)


def concat(a: tuple, b: tuple) -> tuple:
    return a + b


def slot_product(x: Tensor, y: Tensor) -> Tensor:
    """Slotwise product ``x . y`` of r-tensors of words (tensor algebra)."""
    return interleave(x, y, concat)


# ---------------------------------------------------------------------------
# Symmetric group actions

def permutation_sign(sigma: Sequence[int]) -> int:
    s = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                s = -s
    return s


def permute(sigma: Sequence[int], x: Tensor) -> Tensor:
    """Move factor ``p`` to position ``sigma[p]`` (0-based), with Koszul sign only.

    This is a left action: ``permute(s, permute(t, x)) == permute(compose(s, t), x)``.
    """
    r = len(sigma)
    if x.arity is not None and x.arity != r and x:
        raise ValueError(f"permutation of {r} letters on arity-{x.arity} tensor")
    acc: dict[Key, Fraction] = {}
    for key, c in x.items():
        degs = [degree(a) for a in key]
        s = 0
        for p in range(r):
            for q in range(p + 1, r):
                if sigma[p] > sigma[q]:
                    s += degs[p] * degs[q]
        out = [None] * r
        for p in range(r):
            out[sigma[p]] = key[p]
        nk = tuple(out)
        acc[nk] = acc.get(nk, 0) + (-c if s % 2 else c)
    return Tensor(acc, r)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``(sigma o tau)(p) = sigma(tau(p))``."""
    return tuple(sigma[tau[p]] for p in range(len(tau)))


def _signed_sum(perms: Iterable[Sequence[int]], x: Tensor, r: int) -> Tensor:
    acc = Tensor.zero(r)
    for sigma in perms:
        t = permute(sigma, x)
        acc = acc + (t if permutation_sign(sigma) > 0 else -t)
    return acc


def full_symmetrize(r: int, x: Tensor) -> Tensor:
    """``S(r)``: sum over all of ``S_r`` weighted by ``sgn(sigma) * koszul(sigma)``."""
    if x and x.arity != r:
        raise ValueError(f"S({r}) applied to arity-{x.arity} tensor")
    return _signed_sum(itertools.permutations(range(r)), x, r)


@lru_cache(maxsize=None)
def shuffles(i: int, r: int) -> tuple[tuple[int, ...], ...]:
    """The ``(i, r-i)``-shuffles: order preserving on ``0..i-1`` and on ``i..r-1``."""
    if not 0 <= i <= r:
        raise ValueError(f"shuffle block {i} out of range for {r}")
    out = []
    for first in itertools.combinations(range(r), i):
        rest = [p for p in range(r) if p not in first]
        out.append(tuple(first) + tuple(rest))
    return tuple(out)


def shuffle_sum(i: int, r: int, x: Tensor) -> Tensor:
    """``S(i, r-i)``: signed sum over the ``C(r, i)`` shuffles."""
    if x and x.arity != r:
        raise ValueError(f"S({i},{r - i}) applied to arity-{x.arity} tensor")
    return _signed_sum(shuffles(i, r), x, r)


def unshuffle(p: int, x: Tensor) -> Tensor:
    """Deconcatenate-after-unshuffling: ``x_1..x_r -> sum (x_S) | (x_S^c)`` over p-subsets S.

    Returned as an arity-2 tensor whose factors are words; only Koszul signs
    appear.  This is the dual of the shuffle product on the tensor coalgebra.
    """
    acc: dict[Key, Fraction] = {}
    for key, c in x.items():
        r = len(key)
        degs = [degree(a) for a in key]
        for first in itertools.combinations(range(r), p):
            fs = set(first)
            s = 0
            for a in range(r):
                if a in fs:
                    continue
                for b in range(a + 1, r):
                    if b in fs:
                        s += degs[a] * degs[b]
            rest = tuple(key[a] for a in range(r) if a not in fs)
            nk = (tuple(key[a] for a in first), rest)
            acc[nk] = acc.get(nk, 0) + (-c if s % 2 else c)
    return Tensor(acc, 2)


# ---------------------------------------------------------------------------
# Kernels and ranks of maps on finite bases

def kernel(f: Callable[[Hashable], Tensor], basis: Iterable[Hashable], degree_cap: int | None = None) -> list[Tensor]:
    """Exact basis of the kernel of ``f`` restricted to span(basis), degree by degree.

    Returned elements are arity-1 Tensors, each homogeneous.
    """
    by_degree: dict[int, list] = {}
    for b in basis:
        d = degree(b)
        if degree_cap is None or d <= degree_cap:
            by_degree.setdefault(d, []).append(b)
    out = []
    for d in sorted(by_degree):
        elems = by_degree[d]
        images = [f(b).terms for b in elems]
        for combo in _linalg.nullspace(images):
            out.append(Tensor({(elems[j],): c for j, c in combo.items()}, 1))
    return out


def tensor_rank(elements: Iterable[Tensor]) -> int:
    return _linalg.rank(t.terms for t in elements)
