"""Binary linear codes: Reed-Muller construction, puncture/shorten, hull and LCD tests.

Codes are canonicalized to the RREF of their generator at construction, so
two equal codes compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import f2linalg
from .f2linalg import BitMatrix, gram, rank, rref
from .gf2m import FieldGF2n, enumerate_points, field_new, point_index
from .boolfun import monomials_by_degree

MIN_WEIGHT_DIM_GUARD = 24
MIN_WEIGHT_SEARCH_GUARD = 2_000_000


@dataclass(frozen=True)
class LinearCode:
    """[length, dim] binary code held as a row-reduced generator matrix."""

    length: int
    gen: BitMatrix

    def __post_init__(self) -> None:
        if self.gen.cols != self.length:
            raise ValueError("generator width does not match the code length")

    @property
    def dim(self) -> int:
        return self.gen.rows

    def __str__(self) -> str:
        return f"[{self.length},{self.dim}] code"


def code_from_rows(rows: Iterable[int], length: int) -> LinearCode:
    reduced, _ = rref(BitMatrix.from_rows(rows, length))
    return LinearCode(length, reduced)


def zero_code(length: int) -> LinearCode:
    return LinearCode(length, BitMatrix.zeros(0, length))


def full_code(length: int) -> LinearCode:
    return LinearCode(length, BitMatrix.identity(length))


@lru_cache(maxsize=None)
def _rm_default(d: int, n: int) -> LinearCode:
    return _rm_build(d, n, field_new(n))


def _rm_build(d: int, n: int, field: FieldGF2n) -> LinearCode:
    points = [point_index(p) for p in enumerate_points(field)]
    rows = []
    for level in monomials_by_degree(n)[: d + 1]:
        for m in level:
            acc = 0
            for j, pt in enumerate(points):
                if pt & m == m:
                    acc |= 1 << j
            rows.append(acc)
    return code_from_rows(rows, 1 << n)


def rm(d: int, n: int, field: FieldGF2n | None = None) -> LinearCode:
    """Reed-Muller code of order d: column j evaluates at the j-th enumerated point."""
    if not 0 <= d <= n:
        raise ValueError(f"order {d} out of range 0..{n}")
    if field is None:
        return _rm_default(d, n)
    if field.n != n:
        raise ValueError("field degree does not match the variable count")
    return _rm_build(d, n, field)


def column_points(n: int, field: FieldGF2n | None = None) -> tuple[int, ...]:
    """Map from code column index to truth-table point index."""
    field = field or field_new(n)
    return tuple(point_index(p) for p in enumerate_points(field))


def dual(c: LinearCode) -> LinearCode:
    kern = f2linalg.kernel_basis(c.gen)
    return code_from_rows(kern.data, c.length)


def _check_coords(c: LinearCode, coords: Iterable[int]) -> list[int]:
    out = sorted(set(coords))
    if out and (out[0] < 0 or out[-1] >= c.length):
        raise ValueError("coordinate set out of range")
    return out


def puncture(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Delete the given coordinates from every codeword (dimension may drop)."""
    drop = _check_coords(c, coords)
    keep = [j for j in range(c.length) if j not in set(drop)]
    rows = []
    for row in c.gen.data:
        acc = 0
        for new_j, old_j in enumerate(keep):
            if (row >> old_j) & 1:
                acc |= 1 << new_j
        rows.append(acc)
    return code_from_rows(rows, len(keep))


def shorten(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Keep the codewords that vanish on the given coordinates, then delete them."""
    drop = _check_coords(c, coords)
    work = list(c.gen.data)
    used = 0
    for col in drop:
        bit = 1 << col
        pivot = next((r for r in range(used, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[used], work[pivot] = work[pivot], work[used]
        for r in range(len(work)):
            if r != used and work[r] & bit:
                work[r] ^= work[used]
        used += 1
    survivors = work[used:]
    keep = [j for j in range(c.length) if j not in set(drop)]
    rows = []
    for row in survivors:
        acc = 0
        for new_j, old_j in enumerate(keep):
            if (row >> old_j) & 1:
                acc |= 1 << new_j
        rows.append(acc)
    return code_from_rows(rows, len(keep))


def hull_dim(c: LinearCode) -> int:
    """dim(C ∩ C^perp) = k - rank(G G^T)."""
    return c.dim - rank(gram(c.gen))


def is_lcd(c: LinearCode) -> bool:
    return hull_dim(c) == 0


def is_self_orthogonal(c: LinearCode) -> bool:
    return all(row == 0 for row in gram(c.gen).data)


def is_even_like(c: LinearCode) -> bool:
    """True iff every codeword has even weight (checked on the generator rows)."""
    return all(row.bit_count() % 2 == 0 for row in c.gen.data)


def contains(c: LinearCode, word: int) -> bool:
    """Membership test by reduction against the RREF generator."""
    if word < 0 or word >> c.length:
        raise ValueError("word has bits outside the code length")
    for row in c.gen.data:
        pivot = row & -row
        if word & pivot:
            word ^= row
    return word == 0


def min_weight(c: LinearCode) -> int:
    """Exact minimum nonzero codeword weight.

    Gray-code enumeration of the 2^k - 1 codewords for small dimension;
    otherwise an ascending-weight search against the dual (bounded by a
    candidate-count guard).
    """
    k = c.dim
    if k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if k <= MIN_WEIGHT_DIM_GUARD:
        rows = c.gen.data
        word = 0
        best = c.length + 1
        for i in range(1, 1 << k):
            word ^= rows[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if w < best:
                best = w
        return best
    h = dual(c).gen
    cols = [0] * c.length
    for i, row in enumerate(h.data):
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << i
            row ^= low
    examined = 0
    for w in range(1, c.length + 1):
        for combo in combinations(range(c.length), w):
            examined += 1
            if examined > MIN_WEIGHT_SEARCH_GUARD:
                raise ValueError("minimum-weight search guard exceeded")
            acc = 0
            for j in combo:
                acc ^= cols[j]
            if acc == 0:
                return w
    raise AssertionError("nonzero code without codewords")


def export_code(c: LinearCode) -> str:
    """Generator matrix text with a summary header line."""
    header = f"# code length={c.length} dim={c.dim} lcd={is_lcd(c)} hull={hull_dim(c)}\n"
    return header + f2linalg.to_text(c.gen)


def import_code(text: str) -> LinearCode:
    matrix = f2linalg.from_text(text)
    return code_from_rows(matrix.data, matrix.cols)
