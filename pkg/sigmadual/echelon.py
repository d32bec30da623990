from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

import numpy as np
from sortedcontainers import SortedKeyList

from sigmadual.linalg import inv_mod_scalar, mod_p


@dataclass
class Row:
    pivot: int
    vector: np.ndarray


class EchelonBasis:
    """Incrementally maintained reduced row echelon form over F_p.

    Rows are kept ordered by pivot column; every row is zero in the pivot
    columns of all other rows, so the basis is canonical for its span.
    """

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        self.store = SortedKeyList(key=lambda row: row.pivot)

    def __len__(self) -> int:
        return len(self.store)

    def __iter__(self) -> Iterator[Row]:
        return iter(self.store)

    def _vector(self, values) -> np.ndarray:
        v = mod_p(np.asarray(values, dtype=np.int64), self.p)
        if v.shape != (self.dim,):
            raise ValueError(f"Dimension mismatch: {v.shape[0]} != {self.dim}")
        return v

    def reduce(self, values) -> np.ndarray:
        v = self._vector(values)
        for row in self.store:
            c = v[row.pivot]
            if c:
                v = mod_p(v - c * row.vector, self.p)
        return v

    def __contains__(self, values) -> bool:
        return not self.reduce(values).any()

    def add(self, values) -> bool:
        """Returns True if the span grew."""
        v = self.reduce(values)
        nonzero = np.flatnonzero(v)
        if len(nonzero) == 0:
            return False
        pivot = int(nonzero[0])
        v = mod_p(v * inv_mod_scalar(v[pivot], self.p), self.p)
        for row in self.store:
            c = row.vector[pivot]
            if c:
                row.vector = mod_p(row.vector - c * v, self.p)
        self.store.add(Row(pivot, v))
        return True

    def update(self, vectors: Iterable) -> List[np.ndarray]:
        """Adds every vector, returning the ones that grew the span."""
        added = []
        for values in vectors:
            if self.add(values):
                added.append(self._vector(values))
        return added

    def matrix(self) -> Tuple[np.ndarray, Tuple[int, ...]]:
        if not self.store:
            return np.zeros((0, self.dim), dtype=np.int64), ()
        rows = np.stack([row.vector for row in self.store])
        return rows, tuple(row.pivot for row in self.store)
