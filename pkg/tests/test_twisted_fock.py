from fractions import Fraction

from bosefermi.partitions import strict_partitions
from bosefermi.symfunc import Sym, mono_iadd, mono_mul, mono_one, mono_q
from bosefermi.twisted_fock import (
    graded_dimension,
    heis_half,
    op_p_row,
    op_q_row,
    phi,
    phi_star,
)


def spanning_states(max_degree):
    out = [Sym.one()]
    for n in range(1, max_degree + 1):
        for lam in strict_partitions(n):
            out.append(Sym.Q(lam))
    return out


def test_half_heisenberg_commutator():
    states = spanning_states(4)
    for m in range(-5, 6, 2):
        for n in range(-5, 6, 2):
            for v in states:
                lhs = heis_half(m, heis_half(n, v)) - heis_half(n, heis_half(m, v))
                expect = Fraction(m, 2) * v if m == -n else Sym.zero()
                assert lhs == expect, (m, n)


def test_p_row_squares():
    # sum_{k=0}^{n} p^(2k) p^(2n-2k) = sum_{k=0}^{n-1} p^(2k+1) p^(2n-2k-1)
    # checked as an operator identity and as a polynomial identity
    states = spanning_states(3)
    for n in range(1, 4):
        for v in states:
            lhs = Sym.zero()
            for k in range(n + 1):
                lhs = lhs + op_p_row(2 * k, op_p_row(2 * n - 2 * k, v))
            rhs = Sym.zero()
            for k in range(n):
                rhs = rhs + op_p_row(2 * k + 1, op_p_row(2 * n - 2 * k - 1, v))
            assert lhs == rhs, n
    N = 8
    for n in range(1, 5):
        lhs = {}
        for k in range(n + 1):
            mono_iadd(lhs, mono_mul(mono_q(2 * k, N), mono_q(2 * n - 2 * k, N)))
        rhs = {}
        for k in range(n):
            mono_iadd(rhs, mono_mul(mono_q(2 * k + 1, N), mono_q(2 * n - 2 * k - 1, N)))
        assert lhs == rhs, n


def test_twisted_commutation():
    # q^(n) p^(m) = p^(m) q^(n) + sum_{k>=1} 2 p^(m-k) q^(n-k)
    states = spanning_states(5)
    for m in range(4):
        for n in range(4):
            for v in states:
                lhs = op_q_row(n, op_p_row(m, v))
                rhs = op_p_row(m, op_q_row(n, v))
                for k in range(1, min(m, n) + 1):
                    rhs = rhs + 2 * op_p_row(m - k, op_q_row(n - k, v))
                assert lhs == rhs, (m, n)


def test_q_row_adjoint():
    # q^(m) is adjoint to p^(m) for the twisted pairing
    states = spanning_states(4)
    for m in range(1, 4):
        for f in states:
            for g in states:
                assert op_p_row(m, f).hall_twisted(g) == f.hall_twisted(op_q_row(m, g))


def test_p_one_row_on_vacuum():
    assert op_p_row(1, Sym.one()) == Sym({(1,): 2})
    assert op_p_row(2, Sym.one()) == Sym({(1, 1): 2})


def test_twisted_clifford():
    states = spanning_states(3)
    rng = range(-2, 3)
    for i in rng:
        for j in rng:
            for v in states:
                acom = phi(i, phi(j, v)) + phi(j, phi(i, v))
                expect = 2 * v if i == -j else Sym.zero()
                assert acom == expect, (i, j)
                # the second family collapses onto the first
                acom = phi(i, phi_star(j, v)) + phi_star(j, phi(i, v))
                expect = 2 * v if i == j else Sym.zero()
                assert acom == expect, (i, j)


def test_raw_contractions_alternating_sign():
    # without the rescaling the anticommutator carries (-1)^i
    from bosefermi.twisted_fock import contract

    states = spanning_states(2)
    for i in range(-2, 3):
        for v in states:
            acom = contract(i, contract(-i, v)) + contract(-i, contract(i, v))
            assert acom == Fraction(2 * (-1) ** i) * v, i


def test_graded_dimension():
    assert graded_dimension(Sym.one()) == 1
    # regular module of the rank n Clifford-symmetric algebra: (2 p_1)^n
    for n in range(1, 5):
        f = Sym.one()
        for _ in range(n):
            f = f * Sym({(1,): 2})
        from math import factorial

        assert graded_dimension(f) == 2**n * factorial(n)
    # one-row module: p^(n) applied to the vacuum has dimension 2^n / lowest?
    assert graded_dimension(op_p_row(1, Sym.one())) == 2
    assert graded_dimension(op_p_row(2, Sym.one())) == 4
    assert graded_dimension(op_p_row(3, Sym.one())) == 8
