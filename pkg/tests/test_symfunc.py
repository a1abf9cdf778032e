from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bosefermi.partitions import (
    add_horizontal_strip,
    add_vertical_strip,
    dim_irrep,
    partitions,
    strict_partitions,
    z_factor,
)
from bosefermi.symfunc import (
    Sym,
    lr_coefficients,
    mono_bigq,
    mono_m,
    mono_p_prod,
    mono_s,
    mono_to_m,
    schurQ_product,
    sn_character,
)


def small_partitions(max_size):
    out = []
    for n in range(max_size + 1):
        out.extend(partitions(n))
    return out


# ----- frozen expansions, checked by hand


def test_h_in_p_frozen():
    assert Sym.h(2).c == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert Sym.e(2).c == {(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)}
    assert Sym.h(0) == Sym.one()


def test_s21_in_p_frozen():
    # chi^(2,1) has values 2, 0, -1 on 1^3, (2,1), (3)
    assert Sym.s((2, 1)).c == {(1, 1, 1): Fraction(1, 3), (3,): Fraction(-1, 3)}


def test_q_in_p_frozen():
    assert Sym.q(1).c == {(1,): Fraction(2)}
    assert Sym.q(2).c == {(1, 1): Fraction(2)}
    assert Sym.q(3).c == {(3,): Fraction(2, 3), (1, 1, 1): Fraction(4, 3)}


# ----- classical identities as cross-checks between the bases


def test_h_equals_schur_row():
    for r in range(1, 6):
        assert Sym.h(r) == Sym.s((r,))
        assert Sym.e(r) == Sym.s((1,) * r)


def test_jacobi_trudi_vs_tableaux():
    # the determinantal and tableau constructions agree, monomial by monomial
    for lam in small_partitions(6):
        if not lam:
            continue
        n = sum(lam)
        poly = {}
        for mu, v in Sym.s(lam).c.items():
            for e, w in mono_p_prod(mu, n).items():
                nv = poly.get(e, Fraction(0)) + v * w
                if nv:
                    poly[e] = nv
                else:
                    del poly[e]
        assert poly == mono_s(lam, n)


def test_pieri_oracle():
    # multiplication by h_k adds horizontal strips, by e_k vertical strips
    for lam in small_partitions(4):
        for k in range(1, 3):
            prod = (Sym.s(lam) * Sym.h(k)).to_s()
            expect = {mu: Fraction(1) for mu in add_horizontal_strip(lam, k)}
            assert prod == expect
            prod = (Sym.s(lam) * Sym.e(k)).to_s()
            expect = {mu: Fraction(1) for mu in add_vertical_strip(lam, k)}
            assert prod == expect


def test_lr_frozen():
    assert lr_coefficients((2,), (1, 1)) == {(3, 1): 1, (2, 1, 1): 1}
    assert lr_coefficients((2, 1), (2, 1)) == {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }


def test_lr_cross_engine():
    # brute-force polynomial route vs powersum transition route
    for lam in small_partitions(3):
        for mu in small_partitions(3):
            if not lam or not mu:
                continue
            direct = lr_coefficients(lam, mu)
            via_p = (Sym.s(lam) * Sym.s(mu)).to_s()
            assert {k: Fraction(v) for k, v in direct.items()} == via_p


def test_lr_symmetry_and_dimension():
    for lam in small_partitions(3):
        for mu in small_partitions(3):
            if not lam or not mu:
                continue
            c = lr_coefficients(lam, mu)
            assert c == lr_coefficients(mu, lam)
            # dimension count: induced product of irreps decomposes accordingly
            n = sum(lam) + sum(mu)
            from math import comb

            lhs = comb(n, sum(lam)) * dim_irrep(lam) * dim_irrep(mu)
            assert lhs == sum(v * dim_irrep(nu) for nu, v in c.items())


def test_schur_orthonormal():
    for lam in small_partitions(4):
        for mu in small_partitions(4):
            expect = Fraction(1) if lam == mu else Fraction(0)
            if sum(lam) != sum(mu):
                expect = Fraction(0)
            assert Sym.s(lam).hall(Sym.s(mu)) == expect


def test_powersum_pairing():
    for lam in small_partitions(4):
        for mu in small_partitions(4):
            got = Sym.p(lam).hall(Sym.p(mu))
            assert got == (z_factor(lam) if lam == mu else 0)


def test_skew_is_adjoint():
    fs = [Sym.s((2, 1)), Sym.p((3, 1)), Sym.h(4)]
    gs = [Sym.s((1, 1)), Sym.p((2,)), Sym.e(2)]
    hs = [Sym.s((2,)), Sym.p((1, 1)), Sym.h(2)]
    for f in fs:
        for g in gs:
            for h in hs:
                assert (g * h).hall(f) == h.hall(f.skew(g))


def test_characters():
    # full character table of S_4, rows indexed by partitions
    table = {
        (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
        (3, 1): {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
        (2, 2): {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
        (2, 1, 1): {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0, (4,): 1},
        (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1, (4,): -1},
    }
    for lam, row in table.items():
        for mu, val in row.items():
            assert sn_character(lam, mu) == val


def test_m_basis_roundtrip():
    assert Sym.s((2, 1)).to_m() == {(2, 1): Fraction(1), (1, 1, 1): Fraction(2)}
    for lam in small_partitions(4):
        if not lam:
            continue
        f = Sym.m(lam)
        assert f.to_m() == {lam: Fraction(1)}
        assert Sym.p(lam).to_m() == mono_to_m(mono_p_prod(lam, max(sum(lam), 1)))


def test_he_basis_roundtrip():
    f = Sym.s((3, 1)) + 2 * Sym.p((2, 2))
    h_coeffs = f.to_h()
    rebuilt = Sym.zero()
    for lam, v in h_coeffs.items():
        term = Sym.one()
        for r in lam:
            term = term * Sym.h(r)
        rebuilt = rebuilt + v * term
    assert rebuilt == f
    e_coeffs = f.to_e()
    rebuilt = Sym.zero()
    for lam, v in e_coeffs.items():
        term = Sym.one()
        for r in lam:
            term = term * Sym.e(r)
        rebuilt = rebuilt + v * term
    assert rebuilt == f


# ----- Schur Q family


def test_Q_frozen_products():
    assert schurQ_product((1,), (1,)) == {(2,): 2}
    assert schurQ_product((1,), (2,)) == {(3,): 2, (2, 1): 1}
    assert schurQ_product((2,), (3,)) == {(5,): 2, (4, 1): 2, (3, 2): 1}


def test_Q21_monomial_frozen():
    got = mono_to_m(mono_bigq((2, 1), 3))
    assert got == {(2, 1): Fraction(4), (1, 1, 1): Fraction(8)}


def test_Q_cross_engine():
    for n1 in range(1, 5):
        for lam in strict_partitions(n1):
            for n2 in range(1, 5):
                for mu in strict_partitions(n2):
                    direct = schurQ_product(lam, mu)
                    via_p = (Sym.Q(lam) * Sym.Q(mu)).to_Q()
                    assert {k: Fraction(v) for k, v in direct.items()} == via_p


def test_Q_engine_bridge():
    # powersum expansion of Q agrees with the polynomial construction
    for n in range(1, 7):
        for lam in strict_partitions(n):
            poly = {}
            for mu, v in Sym.Q(lam).c.items():
                for e, w in mono_p_prod(mu, n).items():
                    nv = poly.get(e, Fraction(0)) + v * w
                    if nv:
                        poly[e] = nv
                    else:
                        del poly[e]
            assert poly == mono_bigq(lam, n)


def test_Q_odd_support():
    for n in range(1, 7):
        for lam in strict_partitions(n):
            assert Sym.Q(lam).is_odd_supported()


def test_twisted_pairing():
    for r in range(1, 8, 2):
        assert Sym.p(r).hall_twisted(Sym.p(r)) == Fraction(r, 2)
    for n1 in range(1, 6):
        for lam in strict_partitions(n1):
            for mu in strict_partitions(n1):
                got = Sym.Q(lam).hall_twisted(Sym.P(mu))
                assert got == (1 if lam == mu else 0)


def test_QP_transition_roundtrip():
    f = Sym.Q((3, 1)) + 2 * Sym.q(2)
    coeffs = f.to_Q()
    rebuilt = Sym.zero()
    for lam, v in coeffs.items():
        rebuilt = rebuilt + v * Sym.Q(lam)
    assert rebuilt == f


def test_to_Q_rejects_even_support():
    with pytest.raises(AssertionError):
        Sym.p(2).to_Q()


# ----- light property-based checks


partition_strategy = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.sampled_from(list(partitions(n)))
)


@given(partition_strategy, partition_strategy)
@settings(max_examples=25, deadline=None)
def test_product_commutes(lam, mu):
    assert Sym.s(lam) * Sym.s(mu) == Sym.s(mu) * Sym.s(lam)


@given(partition_strategy)
@settings(max_examples=25, deadline=None)
def test_s_roundtrip(lam):
    assert Sym.s(lam).to_s() == {lam: Fraction(1)}
