"""Boolean functions as packed truth tables, ANF via the Möbius transform.

Conventions (fixed across the whole package):
  * point i encodes (x_1, ..., x_n) with x_j = bit (j-1) of i;
  * a truth table is a 2^n-bit int, bit i = f(point i);
  * an ANF is a 2^n-bit int, bit m = coefficient of the monomial whose
    variable set is the bit mask m.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .f2linalg import BitMatrix, rank, solve_preimage

MAX_VARS = 16


@lru_cache(maxsize=None)
def _butterfly_masks(n: int) -> tuple[tuple[int, int], ...]:
    """(shift, mask) pairs for the in-place radix-2 Möbius passes on 2^n bits."""
    size = 1 << n
    all_ones = (1 << size) - 1
    out = []
    for i in range(n):
        step = 1 << i
        period = step << 1
        # low half of every 2*step block
        mask = all_ones // ((1 << period) - 1) * ((1 << step) - 1)
        out.append((step, mask))
    return tuple(out)


def mobius(bits: int, n: int) -> int:
    """Binary Möbius (butterfly) transform; an involution mapping tt <-> ANF."""
    for shift, mask in _butterfly_masks(n):
        bits ^= (bits & mask) << shift
    return bits


@lru_cache(maxsize=None)
def _var_tts(n: int) -> tuple[int, ...]:
    """Truth table of each coordinate function x_j (index j-1)."""
    size = 1 << n
    all_ones = (1 << size) - 1
    out = []
    for j in range(n):
        step = 1 << j
        period = step << 1
        low = all_ones // ((1 << period) - 1) * ((1 << step) - 1)
        out.append(low << step)
    return tuple(out)


@lru_cache(maxsize=8192)
def monomial_tt(mask: int, n: int) -> int:
    """Truth table of the monomial prod_{j in mask} x_j."""
    tt = (1 << (1 << n)) - 1
    vars_ = _var_tts(n)
    while mask:
        low = mask & -mask
        tt &= vars_[low.bit_length() - 1]
        mask ^= low
    return tt


@lru_cache(maxsize=None)
def monomials_by_degree(n: int) -> tuple[tuple[int, ...], ...]:
    """Monomial masks grouped by degree: level d holds all masks of popcount d."""
    levels: list[list[int]] = [[] for _ in range(n + 1)]
    for m in range(1 << n):
        levels[m.bit_count()].append(m)
    return tuple(tuple(lv) for lv in levels)


@lru_cache(maxsize=None)
def high_degree_masks(n: int) -> tuple[int, ...]:
    """high[d] = OR of 1<<m over masks m with popcount(m) > d, for d = 0..n."""
    acc = [0] * (n + 1)
    for m in range(1 << n):
        pc = m.bit_count()
        for d in range(pc):
            acc[d] |= 1 << m
    return tuple(acc)


def anf_degree(coeffs: int, n: int) -> int:
    """Degree of an ANF bit string; 0 for the zero ANF by convention."""
    if coeffs == 0:
        return 0
    high = high_degree_masks(n)
    for d in range(n + 1):
        if coeffs & high[d] == 0:
            return d
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class BooleanFunction:
    """n-variable Boolean function held as a packed truth table."""

    n: int
    tt: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count {self.n} out of range 1..{MAX_VARS}")
        if not 0 <= self.tt < (1 << (1 << self.n)):
            raise ValueError("truth table does not fit 2^n bits")

    @property
    def size(self) -> int:
        return 1 << self.n

    def value(self, point: int) -> int:
        return (self.tt >> point) & 1

    def is_constant(self) -> bool:
        return self.tt == 0 or self.tt == (1 << self.size) - 1

    def __add__(self, other: BooleanFunction) -> BooleanFunction:
        return add(self, other)

    def __mul__(self, other: BooleanFunction) -> BooleanFunction:
        return multiply(self, other)

    def __invert__(self) -> BooleanFunction:
        return complement(self)


@dataclass(frozen=True)
class Anf:
    """Algebraic normal form as a packed coefficient string."""

    n: int
    coeffs: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count {self.n} out of range 1..{MAX_VARS}")
        if not 0 <= self.coeffs < (1 << (1 << self.n)):
            raise ValueError("coefficient string does not fit 2^n bits")

    def degree(self) -> int:
        return anf_degree(self.coeffs, self.n)

    def is_zero(self) -> bool:
        return self.coeffs == 0


@dataclass(frozen=True)
class AffineMap:
    """x -> A x + b with A invertible over GF(2)."""

    n: int
    matrix: BitMatrix
    shift: int

    def __post_init__(self) -> None:
        if self.matrix.rows != self.n or self.matrix.cols != self.n:
            raise ValueError("matrix shape does not match the variable count")
        if rank(self.matrix) != self.n:
            raise ValueError("affine map requires an invertible matrix")
        if not 0 <= self.shift < (1 << self.n):
            raise ValueError("shift out of range")


def anf_of(f: BooleanFunction) -> Anf:
    return Anf(f.n, mobius(f.tt, f.n))


def tt_of(a: Anf) -> BooleanFunction:
    return BooleanFunction(a.n, mobius(a.coeffs, a.n))


def degree(f: BooleanFunction) -> int:
    return anf_degree(mobius(f.tt, f.n), f.n)


def weight(f: BooleanFunction) -> int:
    return f.tt.bit_count()


def support(f: BooleanFunction) -> set[int]:
    out = set()
    tt = f.tt
    while tt:
        low = tt & -tt
        out.add(low.bit_length() - 1)
        tt ^= low
    return out


def _check_same_n(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.n != g.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {g.n}")


def add(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    _check_same_n(f, g)
    return BooleanFunction(f.n, f.tt ^ g.tt)


def multiply(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    _check_same_n(f, g)
    return BooleanFunction(f.n, f.tt & g.tt)


def complement(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.n, f.tt ^ ((1 << f.size) - 1))


def delta(a: int, n: int) -> BooleanFunction:
    """Indicator function of the single point a."""
    if not 0 <= a < (1 << n):
        raise ValueError(f"point {a} out of range for {n} variables")
    return BooleanFunction(n, 1 << a)


def algebraic_complement(f: BooleanFunction) -> BooleanFunction:
    """f + delta_0: flips every ANF coefficient."""
    return BooleanFunction(f.n, f.tt ^ 1)


def apply_affine(f: BooleanFunction, m: AffineMap) -> BooleanFunction:
    """f composed with the map: new tt[x] = tt[A x + b]."""
    if f.n != m.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {m.n}")
    n = f.n
    # columns of A as n-bit ints: (A x) = XOR of columns at the set bits of x
    cols = [0] * n
    for i in range(n):
        row = m.matrix.data[i]
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << i
            row ^= low
    images = [0] * (1 << n)
    images[0] = m.shift
    for x in range(1, 1 << n):
        low = x & -x
        images[x] = images[x ^ low] ^ cols[low.bit_length() - 1]
    tt = f.tt
    new_tt = 0
    for x, y in enumerate(images):
        if (tt >> y) & 1:
            new_tt |= 1 << x
    return BooleanFunction(n, new_tt)


def concatenate(f0: BooleanFunction, f1: BooleanFunction) -> BooleanFunction:
    """(x_n + 1) f0 + x_n f1 on one more variable; x_n is the top index bit."""
    _check_same_n(f0, f1)
    if f0.n + 1 > MAX_VARS:
        raise ValueError("concatenation exceeds the variable limit")
    return BooleanFunction(f0.n + 1, f0.tt | (f1.tt << f0.size))


def bar(f: BooleanFunction) -> BooleanFunction:
    """x_n + f(x_1, ..., x_{n-1}): concatenation of f with its complement."""
    return concatenate(f, complement(f))


def interpolate_low_degree(
    zeros: set[int] | frozenset[int], one: int, d: int, n: int
) -> Anf | None:
    """A function h with deg(h) <= d, h = 0 on zeros and h(one) = 1, if the system solves.

    Guaranteed to exist whenever len(zeros) + 1 <= 2^(d+1) - 1.
    """
    if one in zeros:
        raise ValueError("the one-point must not be among the zeros")
    monos = [m for level in monomials_by_degree(n)[: min(d, n) + 1] for m in level]
    points = sorted(zeros) + [one]
    rows = []
    for m in monos:
        acc = 0
        for j, pt in enumerate(points):
            if pt & m == m:
                acc |= 1 << j
        rows.append(acc)
    matrix = BitMatrix.from_rows(rows, len(points))
    target = 1 << (len(points) - 1)
    combo = solve_preimage(matrix, target)
    if combo is None:
        return None
    coeffs = 0
    while combo:
        low = combo & -combo
        coeffs |= 1 << monos[low.bit_length() - 1]
        combo ^= low
    return Anf(n, coeffs)


def parse_function(spec: str) -> BooleanFunction:
    """Parse 'n:HEX' (tt, point 0 = LSB) or 'n:{i1,i2,...}' (support list)."""
    head, sep, body = spec.partition(":")
    if not sep:
        raise ValueError(f"bad function spec {spec!r}: expected 'n:HEX' or 'n:{{...}}'")
    try:
        n = int(head)
    except ValueError as exc:
        raise ValueError(f"bad variable count in {spec!r}") from exc
    if not 1 <= n <= MAX_VARS:
        raise ValueError(f"variable count {n} out of range 1..{MAX_VARS}")
    if body.startswith("{"):
        if not body.endswith("}"):
            raise ValueError(f"unterminated support list in {spec!r}")
        inner = body[1:-1].strip()
        tt = 0
        if inner:
            for tok in inner.split(","):
                try:
                    pt = int(tok)
                except ValueError as exc:
                    raise ValueError(f"bad support point {tok!r} in {spec!r}") from exc
                if not 0 <= pt < (1 << n):
                    raise ValueError(f"support point {pt} out of range in {spec!r}")
                tt |= 1 << pt
        return BooleanFunction(n, tt)
    want = ((1 << n) + 3) // 4
    if len(body) != want:
        raise ValueError(f"bad hex length in {spec!r}: expected {want} digits")
    try:
        tt = int(body, 16)
    except ValueError as exc:
        raise ValueError(f"bad hex digits in {spec!r}") from exc
    if tt >> (1 << n):
        raise ValueError(f"truth table in {spec!r} does not fit {1 << n} bits")
    return BooleanFunction(n, tt)


def format_function(f: BooleanFunction) -> str:
    """Canonical 'n:HEX' form of a truth table."""
    digits = ((1 << f.n) + 3) // 4
    return f"{f.n}:{f.tt:0{digits}X}"


def format_anf(a: Anf) -> str:
    """Human-readable ANF, e.g. 'x1*x2 + x3 + 1'."""
    if a.coeffs == 0:
        return "0"
    terms = []
    masks = sorted(
        (m for m in range(1 << a.n) if (a.coeffs >> m) & 1),
        key=lambda m: (m.bit_count(), m),
    )
    for m in masks:
        if m == 0:
            terms.append("1")
        else:
            terms.append("*".join(f"x{j + 1}" for j in range(a.n) if (m >> j) & 1))
    return " + ".join(terms)


def random_function(n: int, rng: random.Random) -> BooleanFunction:
    return BooleanFunction(n, rng.getrandbits(1 << n))


def random_nonconstant(n: int, rng: random.Random) -> BooleanFunction:
    while True:
        f = random_function(n, rng)
        if not f.is_constant():
            return f


def random_affine_map(n: int, rng: random.Random) -> AffineMap:
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(n))
        m = BitMatrix.from_rows(rows, n)
        if rank(m) == n:
            return AffineMap(n, m, rng.getrandbits(n))
