import random

import pytest

from faicodes.boolfun import (
    AffineMap,
    Anf,
    BooleanFunction,
    add,
    algebraic_complement,
    anf_of,
    apply_affine,
    bar,
    complement,
    concatenate,
    degree,
    delta,
    format_anf,
    format_function,
    interpolate_low_degree,
    monomial_tt,
    multiply,
    parse_function,
    random_affine_map,
    random_function,
    support,
    tt_of,
    weight,
)
from faicodes.f2linalg import BitMatrix

MAJ3 = parse_function("3:E8")


def test_anf_trivial_cases():
    assert anf_of(BooleanFunction(3, 0)).coeffs == 0
    assert anf_of(BooleanFunction(3, 0xFF)).coeffs == 1  # constant coefficient only


def test_anf_single_top_point_n2():
    # f(00)=f(10)=f(01)=0, f(11)=1 is the monomial x1*x2
    f = BooleanFunction(2, 0b1000)
    assert anf_of(f).coeffs == 1 << 0b11


def test_anf_roundtrip_small():
    rng = random.Random(1)
    for n in range(1, 13):
        for _ in range(20):
            a = Anf(n, rng.getrandbits(1 << n))
            assert anf_of(tt_of(a)).coeffs == a.coeffs


def test_degree_weight_support():
    zero = BooleanFunction(3, 0)
    assert degree(zero) == 0 and weight(zero) == 0 and support(zero) == set()
    top = tt_of(Anf(3, 1 << 0b111))  # x1*x2*x3
    assert degree(top) == 3 and weight(top) == 1 and support(top) == {7}
    assert degree(MAJ3) == 2 and weight(MAJ3) == 4


def test_pointwise_algebra():
    x1 = BooleanFunction(2, 0b1010)
    x2 = BooleanFunction(2, 0b1100)
    assert multiply(x1, x2).tt == 0b1000
    assert multiply(x1, complement(x1)).tt == 0
    assert add(x1, x1).tt == 0
    with pytest.raises(ValueError):
        add(x1, BooleanFunction(3, 0))


def test_delta_and_algebraic_complement():
    d0 = delta(0, 3)
    assert d0.tt == 1
    assert anf_of(d0).coeffs == (1 << 8) - 1  # every monomial appears
    f = BooleanFunction(3, 0b10110100)
    assert algebraic_complement(algebraic_complement(f)) == f
    assert algebraic_complement(BooleanFunction(3, 0)) == d0
    assert anf_of(algebraic_complement(f)).coeffs == anf_of(f).coeffs ^ ((1 << 8) - 1)


def test_apply_affine_identity_and_translation():
    ident = AffineMap(3, BitMatrix.identity(3), 0)
    assert apply_affine(MAJ3, ident) == MAJ3
    shift = AffineMap(3, BitMatrix.identity(3), 0b101)
    moved = apply_affine(MAJ3, shift)
    assert weight(moved) == weight(MAJ3)
    assert support(moved) == {p ^ 0b101 for p in support(MAJ3)}


def test_apply_affine_variable_swap_symmetric():
    swap = AffineMap(2, BitMatrix.from_rows([0b10, 0b01], 2), 0)
    f = tt_of(Anf(2, 1 << 0b11))  # x1*x2 is symmetric
    assert apply_affine(f, swap) == f


def test_affine_map_rejects_singular():
    with pytest.raises(ValueError):
        AffineMap(2, BitMatrix.from_rows([0b11, 0b11], 2), 0)


def test_affine_preserves_weight_and_degree():
    rng = random.Random(2)
    for n in (3, 4, 5):
        for _ in range(25):
            f = random_function(n, rng)
            m = random_affine_map(n, rng)
            g = apply_affine(f, m)
            assert weight(g) == weight(f)
            assert degree(g) == degree(f)


def test_concatenate_and_bar():
    f = BooleanFunction(2, 0b0110)
    lifted = concatenate(f, f)
    assert lifted.n == 3
    assert all(lifted.value(x) == f.value(x & 0b11) for x in range(8))
    zero1 = BooleanFunction(1, 0)
    one1 = BooleanFunction(1, 0b11)
    xn = concatenate(zero1, one1)
    assert xn.tt == 0b1100  # the new top variable
    x1 = BooleanFunction(1, 0b10)
    assert bar(x1).tt == 0b0110  # x1 + x2


def test_concatenation_degree_identity():
    rng = random.Random(3)
    for n in (2, 3, 4, 5):
        for _ in range(50):
            g0 = random_function(n - 1, rng)
            g1 = random_function(n - 1, rng)
            cat = concatenate(g0, g1)
            if g0 == g1:
                assert degree(cat) == degree(g0)
            else:
                assert degree(cat) == max(degree(g0), degree(add(g0, g1)) + 1)


def test_interpolate_trivial_and_example():
    h = interpolate_low_degree(set(), 5, 0, 3)
    assert h is not None and h.coeffs == 1  # constant one
    h = interpolate_low_degree({0}, 1, 1, 3)
    assert h is not None and h.degree() <= 1
    tt = tt_of(h).tt
    assert tt & 1 == 0 and (tt >> 1) & 1 == 1


def test_interpolate_guaranteed_existence():
    rng = random.Random(4)
    n = 4
    for d in range(0, n):
        max_zeros = min((1 << (d + 1)) - 2, (1 << n) - 1)
        for _ in range(30):
            zeros = set(rng.sample(range(1 << n), rng.randrange(0, max_zeros + 1)))
            candidates = [p for p in range(1 << n) if p not in zeros]
            one = rng.choice(candidates)
            h = interpolate_low_degree(zeros, one, d, n)
            assert h is not None
            tt = tt_of(h).tt
            assert (tt >> one) & 1 == 1
            assert all((tt >> z) & 1 == 0 for z in zeros)
            assert h.degree() <= d
    with pytest.raises(ValueError):
        interpolate_low_degree({3}, 3, 1, 3)


def test_monomial_tt():
    assert monomial_tt(0, 2) == 0b1111
    assert monomial_tt(0b11, 2) == 0b1000


def test_parse_and_format():
    assert parse_function("3:E8") == BooleanFunction(3, 0xE8)
    assert format_function(BooleanFunction(3, 0xE8)) == "3:E8"
    assert parse_function("3:{3,5,6,7}") == BooleanFunction(3, 0xE8)
    assert parse_function("2:{}").tt == 0
    assert parse_function("1:2") == BooleanFunction(1, 2)
    for bad in ["3:E", "3:0E8", "3:G8", "x:E8", "17:0", "3:{8}", "3:{a}", "3", "3:{1"]:
        with pytest.raises(ValueError):
            parse_function(bad)


def test_format_anf():
    assert format_anf(Anf(2, 0)) == "0"
    assert format_anf(Anf(2, 0b1011)) == "1 + x1 + x1*x2"


def test_weight_identity_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(1, 9)
        f, g = random_function(n, rng), random_function(n, rng)
        assert weight(add(f, g)) == weight(f) + weight(g) - 2 * weight(multiply(f, g))
        assert degree(multiply(f, g)) <= degree(f) + degree(g)
