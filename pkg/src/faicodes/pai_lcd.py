"""Code-theoretic immunity characterizations and LCD extraction from PAI functions.

A function's support picks out Reed-Muller columns; puncturing away the
complement restricts the code to the support.  Algebraic immunity shows up
as punctured-code dimensions, FAI as trivial meets with punctured duals,
and perfect algebraic immunity as LCD-ness of every punctured order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolfun import BooleanFunction, anf_of, format_function
from .codes import (
    LinearCode,
    column_points,
    dual,
    hull_dim,
    is_even_like,
    is_lcd,
    puncture,
    rm,
    zero_code,
)
from .f2linalg import row_space_meet_dim
from .gf2m import FieldGF2n, field_new
from .immunity import fai


@dataclass(frozen=True)
class SupportColumns:
    """Reed-Muller column indices where the function evaluates to 1."""

    n: int
    cols: frozenset[int]

    def complement(self) -> frozenset[int]:
        return frozenset(range(1 << self.n)) - self.cols


def support_columns(f: BooleanFunction, field: FieldGF2n | None = None) -> SupportColumns:
    pts = column_points(f.n, field)
    cols = frozenset(j for j, pt in enumerate(pts) if (f.tt >> pt) & 1)
    return SupportColumns(f.n, cols)


def function_from_columns(sc: SupportColumns, field: FieldGF2n | None = None) -> BooleanFunction:
    pts = column_points(sc.n, field)
    tt = 0
    for j in sc.cols:
        tt |= 1 << pts[j]
    return BooleanFunction(sc.n, tt)


def _restricted_rm(e: int, n: int, sc: SupportColumns, field: FieldGF2n | None) -> LinearCode:
    """RM(e, n) punctured at the complement of the support (restriction to it)."""
    return puncture(rm(e, n, field), sc.complement())


def ai_exceeds_via_dims(f: BooleanFunction, e: int, field: FieldGF2n | None = None) -> bool:
    """True iff AI(f) > e, decided purely by punctured Reed-Muller dimensions."""
    if f.is_constant():
        raise ValueError("the dimension criterion needs a non-constant function")
    if not 1 <= e <= f.n:
        raise ValueError(f"order {e} out of range 1..{f.n}")
    n = f.n
    sc = support_columns(f, field)
    full_dim = sum(len(level) for level in _mono_levels(n)[: e + 1])
    on_support = puncture(rm(e, n, field), sc.complement())
    off_support = puncture(rm(e, n, field), sc.cols)
    return on_support.dim == full_dim and off_support.dim == full_dim


def _mono_levels(n: int):
    from .boolfun import monomials_by_degree

    return monomials_by_degree(n)


def fai_at_least_via_codes(f: BooleanFunction, s: int, field: FieldGF2n | None = None) -> bool:
    """True iff FAI(f) >= s, via meets of restricted RM codes with restricted duals.

    Requires deg(f) >= s - 1; orders above n collapse to the full space and
    below 0 to the zero code.
    """
    if f.tt == 0:
        raise ValueError("FAI is undefined for the zero function")
    if anf_of(f).degree() < s - 1:
        raise ValueError(f"degree hypothesis violated: deg(f) < {s - 1}")
    n = f.n
    sc = support_columns(f, field)
    comp = sc.complement()
    for e in range(1, n + 1):
        left = puncture(rm(e, n, field), comp)
        e2 = min(e + n - s, n)
        if e2 < 0:
            right = puncture(zero_code(1 << n), comp)
        else:
            right = puncture(rm(e2, n, field), comp)
        if row_space_meet_dim(left.gen, dual(right).gen) != 0:
            return False
    return True


def is_pai_via_lcd(f: BooleanFunction, field: FieldGF2n | None = None) -> bool:
    """True iff the support-restricted RM(e, n) is LCD for every 1 <= e <= n."""
    if f.tt == 0:
        raise ValueError("the LCD criterion needs a nonzero function")
    sc = support_columns(f, field)
    return all(is_lcd(_restricted_rm(e, f.n, sc, field)) for e in range(1, f.n + 1))


def lcd_from_pai(f: BooleanFunction, e: int, field: FieldGF2n | None = None) -> LinearCode:
    """The LCD code RM(e, n) restricted to the support of a PAI function."""
    n = f.n
    if not 1 <= e <= (n - 1) // 2:
        raise ValueError(f"order {e} out of range 1..{(n - 1) // 2}")
    value = fai(f).value
    if value < n:
        raise ValueError(f"not a perfect algebraic immune function: fai = {value} < {n}")
    sc = support_columns(f, field)
    code = _restricted_rm(e, n, sc, field)
    expected_dim = sum(len(level) for level in _mono_levels(n)[: e + 1])
    if not is_lcd(code) or code.dim != expected_dim or code.length != f.tt.bit_count():
        raise AssertionError("extracted code violates the LCD/dimension contract")
    d = dual(code)
    if is_even_like(d) and is_lcd(d) and d.dim % 2 != 0:
        raise AssertionError("even-like LCD dual with odd dimension")
    return code


def carlet_feng_support(
    n: int, offset: int = 0, count: int | None = None, field: FieldGF2n | None = None
) -> SupportColumns:
    """Consecutive powers of alpha (0 adjoined when n is a power of two).

    Column j holds alpha^(j-1), so exponent e maps to column e + 1.  The
    default count 2^(n-1) makes the weight even for n = 2^t + 1 and odd for
    n = 2^t.
    """
    if n >= 2 and n & (n - 1) == 0:
        with_zero = True
    elif n >= 3 and (n - 1) & (n - 2) == 0:
        with_zero = False
    else:
        raise ValueError(f"n = {n} is neither 2^t nor 2^t + 1 (t >= 1)")
    if count is None:
        count = 1 << (n - 1)
    order = (1 << n) - 1
    if not 1 <= count <= order:
        raise ValueError(f"count {count} out of range 1..{order}")
    cols = {((offset + i) % order) + 1 for i in range(count)}
    if with_zero:
        cols.add(0)
    return SupportColumns(n, frozenset(cols))


def pai_certificate(f: BooleanFunction, field: FieldGF2n | None = None) -> dict:
    """Full PAI verdict: definitional FAI, LCD-ness per order, and agreement."""
    n = f.n
    resolved = field or field_new(n)
    sc = support_columns(f, resolved)
    per_e = []
    for e in range(1, n + 1):
        code = _restricted_rm(e, n, sc, resolved)
        per_e.append(
            {
                "e": e,
                "length": code.length,
                "dim": code.dim,
                "hull": hull_dim(code),
                "lcd": is_lcd(code),
            }
        )
    value = fai(f).value
    by_def = value >= n
    by_lcd = all(entry["lcd"] for entry in per_e)
    return {
        "tt": format_function(f),
        "n": n,
        "wt": f.tt.bit_count(),
        "deg": anf_of(f).degree(),
        "fai": value,
        "pai_by_def": by_def,
        "pai_by_lcd": by_lcd,
        "agree": by_def == by_lcd,
        "per_e_lcd_status": per_e,
        "modulus": f"{resolved.modulus:#x}",
    }
