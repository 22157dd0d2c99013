"""Dense GF(2) linear algebra on bit-packed ints.

Vectors are ints (bit i = coordinate i).  A map is given by the list of
images of the domain's basis vectors.  Used for Artin-Schreier solving on
finite towers, component decompositions along embeddings, and the
linearized isotropy solver.
"""

from __future__ import annotations


class F2Solver:
    """Echelonized image of a list of columns, supporting solve() queries."""

    def __init__(self, columns: list[int]):
        self.columns = columns
        # rows of the echelon form, as (pivot_bit, column_vector, combo_mask)
        self._rows: list[tuple[int, int, int]] = []
        for idx, col in enumerate(columns):
            vec, combo = col, 1 << idx
            for pivot, rvec, rcombo in self._rows:
                if vec >> pivot & 1:
                    vec ^= rvec
                    combo ^= rcombo
            if vec:
                self._rows.append((vec.bit_length() - 1, vec, combo))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def solve(self, target: int) -> int | None:
        """A combination mask m with xor of columns[i] for i in m == target."""
        vec, combo = target, 0
        for pivot, rvec, rcombo in self._rows:
            if vec >> pivot & 1:
                vec ^= rvec
                combo ^= rcombo
        return None if vec else combo

    def in_image(self, target: int) -> bool:
        vec = target
        for pivot, rvec, _ in self._rows:
            if vec >> pivot & 1:
                vec ^= rvec
        return vec == 0
