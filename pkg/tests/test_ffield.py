import itertools

import pytest
from hypothesis import given, strategies as st

from tutte_galois.ffield import GF, UniPolyFp, ddf, field, is_prime, primes_up_to
from tutte_galois.galois import degree_pattern

import oracles

FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (2, 8)]


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(200) if is_prime(n)] == primes_up_to(199)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms(p, k):
    f = field(p, k)
    elems = range(f.order)
    for a in elems:
        assert f.add(a, f.neg(a)) == 0
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1
    sample = list(elems)[:: max(1, f.order // 16)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(a, b) == f.add(b, a)


@pytest.mark.parametrize("p,k", FIELDS)
def test_characteristic_and_frobenius(p, k):
    f = field(p, k)
    for a in range(f.order):
        total = 0
        for _ in range(p):
            total = f.add(total, a)
        assert total == 0
        # a ** (p**k) == a
        x = a
        for _ in range(k):
            y = 1
            for _ in range(p):
                y = f.mul(y, x)
            x = y
        assert x == a


def test_bad_fields():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(2, 9)


class TestPolynomials:
    def test_addition_mod_5(self):
        f5 = field(5)
        assert UniPolyFp(f5, [3, 1]) + UniPolyFp(f5, [4, 1]) == UniPolyFp(f5, [2, 2])

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            UniPolyFp(field(5), [1, 1]) + UniPolyFp(field(7), [1, 1])

    def test_squarefree(self):
        assert not UniPolyFp.from_ints(3, [0, 0, 1]).is_squarefree()
        assert UniPolyFp.from_ints(3, [1, 0, 1]).is_squarefree()
        # x^p - a is inseparable in characteristic p
        assert not UniPolyFp.from_ints(2, [1, 0, 1]).is_squarefree()

    @given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), max_size=6),
           st.lists(st.integers(0, 6), min_size=1, max_size=5))
    def test_division_identity(self, p, a, b):
        a = UniPolyFp.from_ints(p, a)
        b = UniPolyFp.from_ints(p, b)
        if b.is_zero():
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree

    @given(st.sampled_from([(2, 2), (3, 2), (2, 3)]), st.lists(st.integers(0, 8), max_size=5),
           st.lists(st.integers(0, 8), max_size=5), st.integers(0, 8))
    def test_evaluation_homomorphism_over_extensions(self, pk, a, b, x):
        f = field(*pk)
        a = UniPolyFp(f, [c % f.order for c in a])
        b = UniPolyFp(f, [c % f.order for c in b])
        x %= f.order
        assert (a * b)(x) == f.mul(a(x), b(x))

    def test_powmod_matches_repeated_product(self):
        f = UniPolyFp.from_ints(3, [2, 1, 0, 1])
        x = UniPolyFp.x(field(3))
        slow = UniPolyFp(field(3), [1])
        for _ in range(11):
            slow = (slow * x) % f
        assert x.powmod(11, f) == slow


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_ddf_product_recovers_input(p):
    for coeffs in itertools.product(range(p), repeat=4):
        f = UniPolyFp.from_ints(p, list(coeffs) + [0, 1])
        if not f.is_squarefree():
            continue
        prod = UniPolyFp(field(p), [1])
        for d, g in ddf(f):
            assert g.degree % d == 0
            prod = prod * g
        assert prod == f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ddf_matches_trial_division_exhaustively(p):
    irr = oracles.irreducibles(p, 5)
    for d in range(1, 6):
        for coeffs in oracles.monic_polys(p, d):
            f = UniPolyFp.from_ints(p, coeffs)
            expected = oracles.factor_degrees(coeffs, p, irr)
            pat = degree_pattern(f)
            if expected is None:
                assert pat is None, coeffs
            else:
                assert pat is not None and pat.parts == expected, coeffs


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3)])
def test_irreducible_counts_over_extensions(p, k):
    # number of monic irreducible quadratics over GF(q) is (q^2 - q) / 2
    f = field(p, k)
    q = f.order
    count = 0
    for b in range(q):
        for c in range(q):
            pat = degree_pattern(UniPolyFp(f, [c, b, 1]))
            if pat is not None and pat.parts == (2,):
                count += 1
    assert count == (q * q - q) // 2
