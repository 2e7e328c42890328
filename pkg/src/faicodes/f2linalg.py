"""Bit-packed linear algebra over GF(2).

Rows are stored as Python ints (bit c = column c), so row operations are
word-parallel XORs no matter how wide the matrix gets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix; ``data[r]`` holds row r with bit c = column c."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        mask = (1 << self.cols) - 1
        for r in self.data:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @staticmethod
    def from_rows(rows: Iterable[int], cols: int) -> BitMatrix:
        data = tuple(rows)
        return BitMatrix(len(data), cols, data)

    @staticmethod
    def identity(k: int) -> BitMatrix:
        return BitMatrix(k, k, tuple(1 << i for i in range(k)))

    @staticmethod
    def zeros(rows: int, cols: int) -> BitMatrix:
        return BitMatrix(rows, cols, (0,) * rows)

    def entry(self, r: int, c: int) -> int:
        return (self.data[r] >> c) & 1

    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for r, row in enumerate(self.data):
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << r
                row ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def __str__(self) -> str:
        return to_text(self).rstrip("\n")


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus the pivot columns."""
    work = list(m.data)
    pivots: list[int] = []
    row = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(row, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        for r in range(len(work)):
            if r != row and work[r] & bit:
                work[r] ^= work[row]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    return BitMatrix.from_rows(work[:row], m.cols), tuple(pivots)


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2)."""
    basis: dict[int, int] = {}
    for row in m.data:
        while row:
            lead = row.bit_length() - 1
            other = basis.get(lead)
            if other is None:
                basis[lead] = row
                break
            row ^= other
    return len(basis)


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {x : m @ x^T = 0}, one kernel vector per row (cols bits each)."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for c in range(m.cols):
        if c in pivot_set:
            continue
        vec = 1 << c
        for i, p in enumerate(pivots):
            if red.data[i] & (1 << c):
                vec |= 1 << p
        basis.append(vec)
    return BitMatrix.from_rows(basis, m.cols)


def stack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    return BitMatrix(a.rows + b.rows, a.cols, a.data + b.data)


def row_space_meet_dim(a: BitMatrix, b: BitMatrix) -> int:
    """dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank(a stacked on b)."""
    return rank(a) + rank(b) - rank(stack(a, b))


def gram(g: BitMatrix) -> BitMatrix:
    """g @ g^T over GF(2) (k x k, symmetric)."""
    out = []
    for i in range(g.rows):
        acc = 0
        ri = g.data[i]
        for j in range(g.rows):
            if (ri & g.data[j]).bit_count() & 1:
                acc |= 1 << j
        out.append(acc)
    return BitMatrix.from_rows(out, g.rows)


def mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product a @ b over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    out = []
    for row in a.data:
        acc = 0
        while row:
            low = row & -row
            acc ^= b.data[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return BitMatrix.from_rows(out, b.cols)


def solve_preimage(m: BitMatrix, y: int) -> int | None:
    """One x (bits over m's rows) with x @ m = y, or None if y is outside the row space."""
    if y < 0 or y >> m.cols:
        raise ValueError("target vector has bits outside the column range")
    aug = [(m.data[i], 1 << i) for i in range(m.rows)]
    combo = 0
    row = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(row, len(aug)) if aug[r][0] & bit), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        prow, pcombo = aug[row]
        for r in range(len(aug)):
            if r != row and aug[r][0] & bit:
                aug[r] = (aug[r][0] ^ prow, aug[r][1] ^ pcombo)
        if y & bit:
            y ^= prow
            combo ^= pcombo
        row += 1
        if row == len(aug):
            break
    return combo if y == 0 else None


def to_text(m: BitMatrix) -> str:
    """Serialize as 'rows cols' header plus one 0/1 line per row."""
    lines = [f"{m.rows} {m.cols}"]
    for row in m.data:
        lines.append("".join("1" if (row >> c) & 1 else "0" for c in range(m.cols)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> BitMatrix:
    """Parse the to_text format (lines starting with '#' are skipped)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        rows, cols = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad matrix header: {lines[0]!r}") from exc
    if len(lines) - 1 != rows:
        raise ValueError(f"expected {rows} row lines, got {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row: {ln!r}")
        data.append(sum(1 << c for c, ch in enumerate(ln) if ch == "1"))
    return BitMatrix.from_rows(data, cols)
