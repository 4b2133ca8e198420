"""Exact sparse Gaussian elimination over the rationals.

Vectors are plain dicts ``{key: Fraction}`` with no zero entries.  Keys only
need to be hashable; pivots are chosen in insertion order, and pivot rows are
kept fully reduced against each other so a single pass suffices to reduce a
new vector.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict


def _axpy(target: dict, scale: Fraction, source: Mapping) -> None:
    for k, v in source.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every inserted vector is tagged with an index; ``combo`` records how each
    reduced row is expressed in terms of the inserted vectors.
    """

    def __init__(self) -> None:
        self.rows: dict[Hashable, tuple[dict, dict]] = {}
        self.count = 0

    def reduce(self, vec: Mapping, combo: Mapping | None = None) -> tuple[dict, dict]:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        combo = dict(combo or {})
        for key in [k for k in vec if k in self.rows]:
            c = vec.get(key)
            if not c:
                continue
            prow, pcombo = self.rows[key]
            _axpy(vec, -c, prow)
            _axpy(combo, -c, pcombo)
        return vec, combo

    def add(self, vec: Mapping) -> dict | None:
        """Insert a vector; return the dependency combo if it reduced to zero."""
        idx = self.count
        self.count += 1
        red, combo = self.reduce(vec, {idx: Fraction(1)})
        if not red:
            return combo
        pivot = next(iter(red))
        inv = 1 / red[pivot]
        red = {k: v * inv for k, v in red.items()}
        combo = {k: v * inv for k, v in combo.items()}
        for key, (row, rcombo) in self.rows.items():
            c = row.get(pivot)
            if c:
                _axpy(row, -c, red)
                _axpy(rcombo, -c, combo)
        self.rows[pivot] = (red, combo)
        return None

    @property
    def rank(self) -> int:
        return len(self.rows)


def nullspace(images: list[Mapping]) -> list[dict[int, Fraction]]:
    """Basis of ``{c : sum_j c_j * images[j] == 0}`` as dicts ``{j: c_j}``."""
    ech = Echelon()
    out = []
    for vec in images:
        dep = ech.add(vec)
        if dep is not None:
            out.append(dep)
    return out


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve(columns: list[Mapping], target: Mapping) -> dict[int, Fraction] | None:
    """Find ``c`` with ``sum_j c_j * columns[j] == target``; ``None`` if none exists."""
    ech = Echelon()
    for col in columns:
        ech.add(col)
    red, combo = ech.reduce(target, {})
    if red:
        return None
    return {j: -v for j, v in combo.items() if v}
