"""Sparse exact row reduction over any field whose elements support + - * /.

Vectors are dicts from column keys to nonzero field elements.  The echelon
is kept fully reduced: no stored row contains another row's pivot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping


def _axpy(target: dict, row: Mapping, factor):
    """target -= factor * row, dropping zeros."""
    for key, value in row.items():
        new = target.get(key, 0) - factor * value
        if new == 0:
            target.pop(key, None)
        else:
            target[key] = new


class Echelon:
    """Reduced echelon form of a growing set of vectors.

    ``pivot_key`` picks the pivot of a reduced row among its columns (default:
    the largest key).  With ``track=True`` every row also records how it was
    built from the labelled input vectors.
    """

    def __init__(self, pivot_key: Callable | None = None, track: bool = False):
        self.rows: dict[Hashable, dict] = {}
        self.combos: dict[Hashable, dict] = {}
        self.pivot_key = pivot_key
        self.track = track

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return self.rows.keys()

    def reduce(self, vector: Mapping) -> tuple[dict, dict]:
        """Residual of vector modulo the span, and the combination subtracted."""
        residual = dict(vector)
        combo: dict = {}
        for pivot in [p for p in residual if p in self.rows]:
            factor = residual.get(pivot)
            if not factor:
                continue
            _axpy(residual, self.rows[pivot], factor)
            if self.track:
                for label, c in self.combos[pivot].items():
                    new = combo.get(label, 0) + factor * c
                    if new == 0:
                        combo.pop(label, None)
                    else:
                        combo[label] = new
        return residual, combo

    def add(self, vector: Mapping, label: Hashable = None) -> bool:
        """Insert a vector; False if it was already in the span."""
        residual, combo = self.reduce(vector)
        if not residual:
            return False
        pivot = max(residual, key=self.pivot_key) if self.pivot_key else max(residual)
        scale = residual[pivot]
        if isinstance(scale, int):
            scale = Fraction(scale)
        one = scale / scale
        row = {key: value / scale for key, value in residual.items()}
        row[pivot] = one
        new_combo = {}
        if self.track:
            # row = (vector - combo) / scale
            new_combo = {lab: -c / scale for lab, c in combo.items()}
            new_combo[label] = new_combo.get(label, 0) + one / scale
            new_combo = {lab: c for lab, c in new_combo.items() if c != 0}
        for other, other_row in self.rows.items():
            factor = other_row.get(pivot)
            if factor:
                _axpy(other_row, row, factor)
                if self.track:
                    other_combo = self.combos[other]
                    for lab, c in new_combo.items():
                        value = other_combo.get(lab, 0) - factor * c
                        if value == 0:
                            other_combo.pop(lab, None)
                        else:
                            other_combo[lab] = value
        self.rows[pivot] = row
        if self.track:
            self.combos[pivot] = new_combo
        return True

    def express(self, vector: Mapping) -> dict | None:
        """Coefficients of vector on the labelled inputs, or None if outside the span."""
        residual, combo = self.reduce(vector)
        return None if residual else combo
