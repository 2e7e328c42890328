"""GF(2^n) arithmetic on log/antilog tables, 2 <= n <= 16.

Elements are ints in polynomial-basis coordinates: bit i is the coefficient
of x^i.  The default modulus for each degree is the lexicographically
smallest primitive polynomial, so the point enumeration is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MIN_DEGREE = 2
MAX_DEGREE = 16


@dataclass(frozen=True)
class FieldGF2n:
    """GF(2^n) with precomputed powers of the primitive element alpha = x."""

    n: int
    modulus: int            # degree-n polynomial, leading bit included
    exp: tuple[int, ...]    # exp[i] = alpha^i, length 2^n - 1
    log: tuple[int, ...]    # log[exp[i]] = i; log[0] = -1 sentinel

    @property
    def order(self) -> int:
        return (1 << self.n) - 1


def _x_power_cycle(modulus: int, n: int) -> list[int] | None:
    """Powers [x^0, ..., x^{2^n-2}] if x has multiplicative order 2^n - 1, else None."""
    if not modulus & 1:
        return None
    top = 1 << n
    powers = [1]
    val = 1
    for _ in range(top - 2):
        val <<= 1
        if val & top:
            val ^= modulus
        if val == 1:
            return None
        powers.append(val)
    val <<= 1
    if val & top:
        val ^= modulus
    return powers if val == 1 else None


def _build(n: int, modulus: int) -> FieldGF2n:
    powers = _x_power_cycle(modulus, n)
    if powers is None:
        raise ValueError(f"polynomial {modulus:#x} is not primitive of degree {n}")
    log = [-1] * (1 << n)
    for i, v in enumerate(powers):
        log[v] = i
    return FieldGF2n(n, modulus, tuple(powers), tuple(log))


@lru_cache(maxsize=None)
def field_new(n: int) -> FieldGF2n:
    """Field on the lexicographically smallest primitive polynomial of degree n."""
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise ValueError(f"unsupported extension degree {n} (need {MIN_DEGREE}..{MAX_DEGREE})")
    for modulus in range((1 << n) + 1, 1 << (n + 1), 2):
        if _x_power_cycle(modulus, n) is not None:
            return _build(n, modulus)
    raise AssertionError(f"no primitive polynomial of degree {n}")  # never happens


def field_with_modulus(n: int, modulus: int) -> FieldGF2n:
    """Field on an explicit modulus; rejects non-primitive polynomials."""
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise ValueError(f"unsupported extension degree {n} (need {MIN_DEGREE}..{MAX_DEGREE})")
    if modulus.bit_length() != n + 1:
        raise ValueError(f"modulus {modulus:#x} does not have degree {n}")
    return _build(n, modulus)


def alpha_pow(field: FieldGF2n, j: int) -> int:
    """alpha^j (j taken mod 2^n - 1)."""
    return field.exp[j % field.order]


def field_mul(field: FieldGF2n, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return field.exp[(field.log[a] + field.log[b]) % field.order]


def enumerate_points(field: FieldGF2n) -> tuple[int, ...]:
    """The enumeration [0, alpha^0, alpha^1, ..., alpha^{2^n-2}] of all field elements."""
    return (0,) + field.exp


def point_index(element: int) -> int:
    """Truth-table index of a field element: coefficient of x^{j-1} drives variable x_j.

    In polynomial-basis int coordinates this is the identity; it exists to
    mark the spots where field elements cross into truth-table indexing.
    """
    return element
