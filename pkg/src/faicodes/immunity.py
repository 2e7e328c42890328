"""Annihilators, algebraic immunity, the fast-immunity profile and FAI.

The FAI search enforces the g not-in {0, 1} exclusion through the preimage
cosets of candidate products: a product value v = f*g only counts when some
g outside {0, 1} reaches it.  For v != f every preimage qualifies; for v = f
the coset 1 + (annihilators of f of degree <= k) holds a usable g exactly
when f has a nonzero annihilator of degree <= k.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .boolfun import (
    Anf,
    BooleanFunction,
    anf_degree,
    anf_of,
    format_anf,
    format_function,
    high_degree_masks,
    mobius,
    monomial_tt,
    monomials_by_degree,
)
from .f2linalg import BitMatrix, kernel_basis, rref, solve_preimage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImmunityProfile:
    """The sequence (mu_1, ..., mu_n); None marks an empty multiple space."""

    n: int
    mu: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.mu) != self.n:
            raise ValueError("profile length must equal the variable count")
        vals = [m for m in self.mu if m is not None]
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError("profile must be non-increasing")

    def min_k_plus_mu(self) -> int | None:
        """min over k of k + mu_k; None when every mu_k is undefined."""
        totals = [k + m for k, m in enumerate(self.mu, start=1) if m is not None]
        return min(totals) if totals else None


@dataclass(frozen=True)
class FaiWitness:
    """A pair g, f*g realizing deg(g) + deg(f*g) = FAI(f)."""

    g: Anf
    product: Anf
    total: int


@dataclass(frozen=True)
class FaiResult:
    value: int
    witness: FaiWitness
    profile_bound: int

    @property
    def diverged(self) -> bool:
        """True when min_k(k + mu_k) undercuts the definition (g = 1 only)."""
        return self.profile_bound != self.value


def _support(tt: int) -> list[int]:
    out = []
    while tt:
        low = tt & -tt
        out.append(low.bit_length() - 1)
        tt ^= low
    return out


def _int_rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            other = basis.get(lead)
            if other is None:
                basis[lead] = row
                break
            row ^= other
    return len(basis)


def _evaluation_rows(points: list[int], monos: list[int]) -> list[int]:
    """One row per point; bit j set iff monomial monos[j] evaluates to 1 there."""
    rows = []
    for pt in points:
        acc = 0
        for j, m in enumerate(monos):
            if pt & m == m:
                acc |= 1 << j
        rows.append(acc)
    return rows


def lda(f: BooleanFunction) -> int | None:
    """Lowest degree of a nonzero annihilator of f; None when f is all-ones."""
    if f.tt == 0:
        return 0
    if f.tt == (1 << f.size) - 1:
        return None
    sup = _support(f.tt)
    levels = monomials_by_degree(f.n)
    monos: list[int] = []
    for e in range(f.n + 1):
        monos.extend(levels[e])
        if _int_rank(_evaluation_rows(sup, monos)) < len(monos):
            return e
    raise AssertionError("a function with a zero has an annihilator of degree <= n")


def annihilator_witness(f: BooleanFunction, e: int) -> Anf | None:
    """A nonzero g with deg(g) <= e and f*g = 0, verified, or None."""
    sup = _support(f.tt)
    monos = [m for level in monomials_by_degree(f.n)[: min(e, f.n) + 1] for m in level]
    matrix = BitMatrix.from_rows(_evaluation_rows(sup, monos), len(monos))
    kern = kernel_basis(matrix)
    if kern.rows == 0:
        return None
    combo = kern.data[0]
    coeffs = 0
    while combo:
        low = combo & -combo
        coeffs |= 1 << monos[low.bit_length() - 1]
        combo ^= low
    g = Anf(f.n, coeffs)
    if f.tt & mobius(coeffs, f.n):
        raise AssertionError("annihilator witness failed the product check")
    return g


def ai(f: BooleanFunction) -> int:
    """min(lda(f), lda(1+f)); the all-ones side never blocks both."""
    full = (1 << f.size) - 1
    vals = [v for v in (lda(f), lda(BooleanFunction(f.n, f.tt ^ full))) if v is not None]
    return min(vals)


def mul_space_basis(f: BooleanFunction, k: int) -> BitMatrix:
    """RREF basis of span{anf(f*m) : m a monomial of degree <= k}, as 2^n-bit rows."""
    if not 0 <= k <= f.n:
        raise ValueError(f"degree bound {k} out of range 0..{f.n}")
    n = f.n
    rows = []
    for level in monomials_by_degree(n)[: k + 1]:
        for m in level:
            prod = f.tt & monomial_tt(m, n)
            if prod:
                rows.append(mobius(prod, n))
    reduced, _ = rref(BitMatrix.from_rows(rows, 1 << n))
    return reduced


# --- degree-ordered elimination engine -------------------------------------
#
# ANF vectors are re-indexed so that bit position grows with (degree, mask).
# A highest-bit XOR basis in these coordinates makes each basis row's degree
# the degree of its leading bit, and the rows of degree <= d span exactly
# the intersection of the row space with {ANFs of degree <= d}.


@lru_cache(maxsize=None)
def _degree_order(n: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m))
    pos = [0] * (1 << n)
    for p, m in enumerate(masks):
        pos[m] = p
    deg_at = tuple(m.bit_count() for m in masks)
    return tuple(pos), tuple(masks), deg_at


def _permute(bits: int, pos: tuple[int, ...]) -> int:
    acc = 0
    while bits:
        low = bits & -bits
        acc |= 1 << pos[low.bit_length() - 1]
        bits ^= low
    return acc


class _DegreeBasis:
    """Incremental XOR basis over degree-ordered ANF coordinates."""

    def __init__(self, n: int) -> None:
        self.pos, self.masks, self.deg_at = _degree_order(n)
        self.table: dict[int, int] = {}

    def insert_anf(self, coeffs: int) -> None:
        row = _permute(coeffs, self.pos)
        table = self.table
        while row:
            lead = row.bit_length() - 1
            other = table.get(lead)
            if other is None:
                table[lead] = row
                return
            row ^= other

    def rows_by_degree(self) -> list[tuple[int, int]]:
        """(degree, permuted row) pairs sorted by degree."""
        deg_at = self.deg_at
        return sorted((deg_at[lead], row) for lead, row in self.table.items())

    def min_degree(self) -> int | None:
        if not self.table:
            return None
        return min(self.deg_at[lead] for lead in self.table)


def _mu_sequence(f: BooleanFunction, upto: int) -> list[int | None]:
    """[mu_1(f), ..., mu_upto(f)] computed on one growing product basis."""
    n = f.n
    basis = _DegreeBasis(n)
    levels = monomials_by_degree(n)
    if f.tt:
        basis.insert_anf(mobius(f.tt, n))  # product with the constant monomial
    out: list[int | None] = []
    for k in range(1, upto + 1):
        for m in levels[k]:
            prod = f.tt & monomial_tt(m, n)
            if prod:
                basis.insert_anf(mobius(prod, n))
        out.append(basis.min_degree())
    return out


def mu(f: BooleanFunction, k: int) -> int | None:
    """Minimum degree over the nonzero products f*g with deg(g) <= k; None if none."""
    if not 1 <= k <= f.n:
        raise ValueError(f"k = {k} out of range 1..{f.n}")
    return _mu_sequence(f, k)[-1]


def profile(f: BooleanFunction) -> ImmunityProfile:
    return ImmunityProfile(f.n, tuple(_mu_sequence(f, f.n)))


def _admissible_mu(
    rows: list[tuple[int, int]], anf_f_perm: int, annihilators_ok: bool
) -> tuple[int | None, int | None]:
    """(mu', witness product row) under the g not-in {0,1} exclusion.

    rows come from _DegreeBasis.rows_by_degree().  A None witness row with a
    non-None mu' means the product f itself, reachable via 1 + annihilator.
    """
    if not rows:
        return None, None
    if annihilators_ok:
        d = rows[0][0]
        for deg, row in rows:
            if deg > d:
                break
            if row != anf_f_perm:
                return d, row
        return d, None  # only f sits at the minimum; 1 + annihilator reaches it
    for deg, row in rows:
        if row != anf_f_perm:
            return deg, row
    return None, None


def fai(f: BooleanFunction) -> FaiResult:
    """Fast algebraic immunity with a verified optimal witness.

    Layered search over k = deg(g): for each k the product basis is reduced in
    degree order, the smallest admissible product degree mu'_k is read off, and
    the best k + mu'_k wins.  The witness is rebuilt by solving f*g = v over
    the monomials of degree <= k and re-checked by explicit multiplication.
    """
    if f.tt == 0:
        raise ValueError("FAI is undefined for the zero function")
    n = f.n
    lda_f = lda(f)
    levels = monomials_by_degree(n)
    basis = _DegreeBasis(n)
    anf_f = mobius(f.tt, n)
    anf_f_perm = _permute(anf_f, basis.pos)
    basis.insert_anf(anf_f)

    best: tuple[int, int] | None = None  # (total, k)
    profile_bound: int | None = None
    for k in range(1, n + 1):
        for m in levels[k]:
            prod = f.tt & monomial_tt(m, n)
            if prod:
                basis.insert_anf(mobius(prod, n))
        rows = basis.rows_by_degree()
        if rows:
            plain = k + rows[0][0]
            if profile_bound is None or plain < profile_bound:
                profile_bound = plain
        annihilators_ok = lda_f is not None and lda_f <= k
        mu_eff, _ = _admissible_mu(rows, anf_f_perm, annihilators_ok)
        if mu_eff is not None and (best is None or k + mu_eff < best[0]):
            best = (k + mu_eff, k)
    if best is None or profile_bound is None:
        raise AssertionError("a nonzero function always has admissible products")
    value, k_star = best
    witness = _extract_witness(f, k_star, value - k_star, lda_f, anf_f, anf_f_perm)
    if value != profile_bound:
        logger.info(
            "FAI definition (%d) differs from the profile bound min_k(k + mu_k) = %d "
            "for tt=%#x, n=%d (products reachable only through g = 1)",
            value,
            profile_bound,
            f.tt,
            f.n,
        )
    total = witness.g.degree() + witness.product.degree()
    if total != value:
        raise AssertionError("FAI witness total does not match the layered search")
    return FaiResult(value, witness, profile_bound)


def _extract_witness(
    f: BooleanFunction,
    k: int,
    d: int,
    lda_f: int | None,
    anf_f: int,
    anf_f_perm: int,
) -> FaiWitness:
    n = f.n
    monos = [m for level in monomials_by_degree(n)[: k + 1] for m in level]
    prod_anfs = [mobius(f.tt & monomial_tt(m, n), n) for m in monos]

    local = _DegreeBasis(n)
    for a in prod_anfs:
        if a:
            local.insert_anf(a)
    annihilators_ok = lda_f is not None and lda_f <= k
    mu_eff, vrow = _admissible_mu(local.rows_by_degree(), anf_f_perm, annihilators_ok)
    if mu_eff != d:
        raise AssertionError("witness extraction disagrees with the layered search")

    if vrow is None:
        # product is f itself; g = 1 + annihilator of degree exactly lda(f) = k
        ann = annihilator_witness(f, k)
        if ann is None:
            raise AssertionError("annihilator route selected without annihilators")
        g_coeffs = ann.coeffs ^ 1
        v_anf = anf_f
    else:
        inv = local.masks
        v_anf = 0
        row = vrow
        while row:
            low = row & -row
            v_anf |= 1 << inv[low.bit_length() - 1]
            row ^= low
        matrix = BitMatrix.from_rows(prod_anfs, 1 << n)
        combo = solve_preimage(matrix, v_anf)
        if combo is None:
            raise AssertionError("admissible product is outside the product span")
        g_coeffs = 0
        while combo:
            low = combo & -combo
            g_coeffs ^= 1 << monos[low.bit_length() - 1]
            combo ^= low

    if g_coeffs in (0, 1):
        raise AssertionError("FAI witness degenerated to a constant")
    g_tt = mobius(g_coeffs, n)
    prod_tt = f.tt & g_tt
    if prod_tt == 0:
        raise AssertionError("FAI witness annihilates f")
    prod_anf = mobius(prod_tt, n)
    if prod_anf != v_anf:
        raise AssertionError("FAI witness product mismatch")
    g = Anf(n, g_coeffs)
    return FaiWitness(g, Anf(n, prod_anf), g.degree() + anf_degree(prod_anf, n))


def ffai(f: BooleanFunction) -> int:
    """min(FAI(f), FAI(1+f)); rejects constants, where one side is undefined."""
    if f.is_constant():
        raise ValueError("FFAI is undefined for constant functions")
    full = (1 << f.size) - 1
    return min(fai(f).value, fai(BooleanFunction(f.n, f.tt ^ full)).value)


def is_pai(f: BooleanFunction) -> bool:
    """Perfect algebraic immunity test: FAI(f) >= n."""
    return fai(f).value >= f.n


# --- independent brute-force oracle -----------------------------------------


def fai_direct(f: BooleanFunction, cap: int | None = None) -> int:
    """Exhaustive FAI over all g with deg(g) <= min(cap, floor(n/2)).

    The degree cap is sound because any optimal witness g has
    deg(g) <= floor(FAI/2) <= floor(n/2) (with a floor of 1 so the range is
    never empty).  Vectorized over every nonzero coefficient choice.
    """
    if f.tt == 0:
        raise ValueError("FAI is undefined for the zero function")
    n = f.n
    eff = max(1, n // 2)
    if cap is not None:
        eff = min(max(1, cap), eff)
    elif n > 5:
        raise ValueError("supply a degree cap for n > 5 (search-space guard)")
    if n > 6:
        raise ValueError("direct search supports n <= 6 (64-bit truth tables)")
    monos = [m for level in monomials_by_degree(n)[: eff + 1] for m in level]
    count = len(monos)
    if count > 20:
        raise ValueError(f"search space 2^{count} exceeds the enumeration guard")

    idx = np.arange(1, 1 << count, dtype=np.uint32)
    g_tt = np.zeros(idx.shape, dtype=np.uint64)
    g_deg = np.zeros(idx.shape, dtype=np.int8)
    for t, m in enumerate(monos):
        chosen = ((idx >> np.uint32(t)) & np.uint32(1)).astype(bool)
        g_tt[chosen] ^= np.uint64(monomial_tt(m, n))
        np.maximum(g_deg, np.where(chosen, np.int8(m.bit_count()), np.int8(0)), out=g_deg)

    prod = g_tt & np.uint64(f.tt)
    anf = prod.copy()
    for shift, mask in _vector_butterfly(n):
        anf ^= (anf & mask) << shift
    deg_p = np.zeros(idx.shape, dtype=np.int8)
    for high in high_degree_masks(n)[:n]:
        deg_p += ((anf & np.uint64(high)) != 0).astype(np.int8)

    valid = (prod != 0) & (idx != 1)  # idx 1 selects only the constant monomial: g = 1
    totals = (g_deg + deg_p)[valid]
    if totals.size == 0:
        raise AssertionError("no admissible g found; the degree cap argument fails")
    return int(totals.min())


@lru_cache(maxsize=None)
def _vector_butterfly(n: int) -> tuple[tuple[np.uint64, np.uint64], ...]:
    from .boolfun import _butterfly_masks  # shares the scalar transform's masks

    return tuple((np.uint64(s), np.uint64(m)) for s, m in _butterfly_masks(n))


def function_report(f: BooleanFunction) -> dict:
    """The per-function analysis record (tt, degrees, immunities, witness)."""
    if f.tt == 0:
        raise ValueError("FAI is undefined for the zero function")
    full = (1 << f.size) - 1
    fc = BooleanFunction(f.n, f.tt ^ full)
    res = fai(f)
    record = {
        "tt": format_function(f),
        "n": f.n,
        "deg": anf_of(f).degree(),
        "wt": f.tt.bit_count(),
        "ai": ai(f),
        "lda_f": lda(f),
        "lda_fc": lda(fc),
        "profile": list(profile(f).mu),
        "fai": res.value,
        "ffai": None if f.is_constant() else ffai(f),
        "witness_g": format_anf(res.witness.g),
        "witness_total": res.witness.total,
    }
    if res.diverged:
        record["profile_bound"] = res.profile_bound
    return record
