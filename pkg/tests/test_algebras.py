from fractions import Fraction

from bosefermi.algebras import (
    AlgElt,
    algebra_basis,
    algebra_dim,
    cliff_mul,
    e_sign,
    e_triv,
    jm_element,
    perm_sign,
    young_idempotent,
)
from bosefermi.partitions import dim_irrep, partitions


def test_cliff_mul():
    # c0 * c0 = -1
    assert cliff_mul(1, 1) == (-1, 0)
    # c1 * c0 = -c0 c1
    assert cliff_mul(2, 1) == (-1, 3)
    # c0 * c1 = +c0 c1
    assert cliff_mul(1, 2) == (1, 3)


def test_clifford_relations():
    n = 3
    c = [AlgElt.c_gen(n, i) for i in range(n)]
    one = AlgElt.identity(n)
    for i in range(n):
        assert c[i] * c[i] == -1 * one
        for j in range(n):
            if i != j:
                assert c[i] * c[j] == -1 * (c[j] * c[i])


def test_perm_conjugation():
    n = 3
    s0 = AlgElt.s_gen(n, 0)
    c = [AlgElt.c_gen(n, i) for i in range(n)]
    # s0 c0 s0^{-1} = c1
    assert s0 * c[0] * s0 == c[1]
    assert s0 * c[2] * s0 == c[2]


def test_coxeter_relations():
    n = 4
    s = [AlgElt.s_gen(n, i) for i in range(n - 1)]
    one = AlgElt.identity(n)
    for i in range(n - 1):
        assert s[i] * s[i] == one
    for i in range(n - 2):
        assert s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]
    assert s[0] * s[2] == s[2] * s[0]


def test_associativity_spot():
    n = 3
    x = AlgElt.c_gen(n, 0) * AlgElt.s_gen(n, 0) + 2 * AlgElt.c_gen(n, 2)
    y = AlgElt.s_gen(n, 1) * AlgElt.c_gen(n, 1)
    z = AlgElt.c_gen(n, 1) * AlgElt.s_gen(n, 0) - AlgElt.identity(n)
    assert (x * y) * z == x * (y * z)


def test_symmetrizers():
    for n in range(1, 5):
        et = e_triv(n)
        es = e_sign(n)
        assert et * et == et
        assert es * es == es
        for i in range(n - 1):
            s = AlgElt.s_gen(n, i)
            assert s * et == et
            assert et * s == et
            assert s * es == -1 * es
    assert e_triv(2).terms == {
        (0, (0, 1)): Fraction(1, 2),
        (0, (1, 0)): Fraction(1, 2),
    }


def test_young_idempotents():
    from bosefermi.linalg import SpanSolver

    for n in range(1, 5):
        for lam in partitions(n):
            e = young_idempotent(lam)
            assert e * e == e, lam
            # dimension of the left ideal equals the hook length count
            sp = SpanSolver()
            for key in algebra_basis(n, twisted=False):
                x = AlgElt(n, {key: 1})
                sp.add((x * e).terms)
            assert sp.rank == dim_irrep(lam), lam


def test_jm_commute_and_center():
    for twisted in (False, True):
        n = 3
        jms = [jm_element(n, i, twisted) for i in range(1, n + 1)]
        for a in jms:
            for b in jms:
                assert a * b == b * a
        # JM sum is central in the plain group algebra
        if not twisted:
            total = jms[0]
            for j in jms[1:]:
                total = total + j
            for i in range(n - 1):
                s = AlgElt.s_gen(n, i)
                assert s * total == total * s


def test_embed():
    x = AlgElt.c_gen(2, 1) * AlgElt.s_gen(2, 0)
    y = x.embed(4, offset=1)
    expect = AlgElt.c_gen(4, 2) * AlgElt.s_gen(4, 1)
    assert y == expect


def test_parity():
    assert AlgElt.c_gen(2, 0).parity() == 1
    assert AlgElt.s_gen(2, 0).parity() == 0
    mixed = AlgElt.c_gen(2, 0) + AlgElt.s_gen(2, 0)
    assert mixed.parity() is None
    assert mixed.parity_part(1) == AlgElt.c_gen(2, 0)


def test_dims():
    assert algebra_dim(3, False) == 6
    assert algebra_dim(3, True) == 48
    assert len(list(algebra_basis(2, True))) == 8


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((2, 0, 1)) == 1
