import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from genblock.errors import CapabilityError, DomainError
from genblock.gf import IRREDUCIBLE, field_arith, field_of_order, make_field

SUPPORTED = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)]


def poly_mul(a, b, p, modulus):
    """Schoolbook product of coefficient lists modulo a monic polynomial (oracle)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(modulus) - 1
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for i, m in enumerate(modulus):
                prod[k - e + i] = (prod[k - e + i] - c * m) % p
    return (prod + [0] * e)[:e]


def digits(x, p, e):
    return [(x // p**i) % p for i in range(e)]


@pytest.mark.parametrize("p,e", SUPPORTED)
def test_field_axioms_exhaustive(p, e):
    F = make_field(p, e)
    q = p**e
    add, mul = F.add_table.astype(int), F.mul_table.astype(int)
    el = range(q)
    assert all(add[a, 0] == a and mul[a, 1] == a for a in el)
    assert (add == add.T).all() and (mul == mul.T).all()
    for a, b, c in itertools.product(el, repeat=3):
        assert add[add[a, b], c] == add[a, add[b, c]]
        assert mul[mul[a, b], c] == mul[a, mul[b, c]]
        assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
    for a in el:
        assert add[a, F.neg_table[a]] == 0
        if a:
            assert mul[a, F.inv_table[a]] == 1


@pytest.mark.parametrize("p,e", [k for k in SUPPORTED if k[1] > 1])
def test_multiplication_matches_polynomial_oracle(p, e):
    F = make_field(p, e)
    modulus = list(IRREDUCIBLE[(p, e)])
    for a, b in itertools.product(range(p**e), repeat=2):
        want = poly_mul(digits(a, p, e), digits(b, p, e), p, modulus)
        assert list(F.coefficients(int(F.mul_table[a, b]))) == want


@pytest.mark.parametrize("p,e", [k for k in SUPPORTED if k[1] > 1])
def test_modulus_is_irreducible(p, e):
    modulus = IRREDUCIBLE[(p, e)]
    assert modulus[-1] == 1
    # degree 2 or 3: irreducible iff no root
    for x in range(p):
        assert sum(c * x**i for i, c in enumerate(modulus)) % p != 0


def test_gf8_primitive_element():
    F = make_field(2, 3)
    g = F.primitive_element
    assert F.pow(g, 7) == 1
    assert len({F.pow(g, k) for k in range(7)}) == 7
    assert sorted(F.antilog_table.tolist()) == list(range(1, 8))


def test_gf4_tables():
    F = field_of_order(4)
    # x * x = x + 1 with x encoded as 2
    assert F.mul(2, 2) == 3
    assert F.add(2, 3) == 1


@pytest.mark.parametrize("p,e", SUPPORTED)
def test_log_antilog_inverse(p, e):
    F = make_field(p, e)
    for a in range(1, F.q):
        assert F.antilog(F.log(a)) == a


def test_inverse_of_zero():
    with pytest.raises(DomainError):
        make_field(3).inv(0)


def test_unsupported():
    with pytest.raises(CapabilityError):
        make_field(11)
    with pytest.raises(CapabilityError):
        make_field(2, 5)
    with pytest.raises(DomainError):
        field_of_order(6)


def test_field_arith_matches_methods():
    F = make_field(3, 2)
    assert field_arith(F, "add", 4, 7) == F.add(4, 7)
    assert field_arith(F, "mul", 4, 7) == F.mul(4, 7)
    assert field_arith(F, "inv", 5) == F.inv(5)
    assert field_arith(F, "pow", 5, 8) == 1


@given(st.sampled_from(SUPPORTED), st.data())
def test_frobenius_is_additive(pe, data):
    F = make_field(*pe)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_vector_ops(F3):
    a = np.array([0, 1, 2])
    b = np.array([2, 2, 2])
    assert F3.vadd(a, b).tolist() == [2, 0, 1]
    assert F3.vmul(a, b).tolist() == [0, 2, 1]
    assert F3.vsub(a, b).tolist() == [1, 2, 0]
