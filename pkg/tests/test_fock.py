from fractions import Fraction

from bosefermi.fock import (
    FockState,
    contract_minus,
    heis,
    op_p_col,
    op_p_row,
    op_q_col,
    op_q_row,
    psi,
    psi_star,
)
from bosefermi.partitions import (
    partitions,
    remove_horizontal_strip,
    remove_vertical_strip,
)
from bosefermi.symfunc import Sym


def spanning_states(max_degree, charges=(0,)):
    out = []
    for c in charges:
        for n in range(max_degree + 1):
            for lam in partitions(n):
                out.append(FockState.state(c, Sym.s(lam)))
    return out


def test_heisenberg_commutator():
    states = spanning_states(4)
    for m in range(-3, 4):
        for n in range(-3, 4):
            if m == 0 or n == 0:
                continue
            for v in states:
                lhs = heis(m, heis(n, v)) - heis(n, heis(m, v))
                expect = FockState()
                if m == -n:
                    expect = Fraction(m) * v
                assert lhs == expect, (m, n)


def test_row_operators_are_pieri():
    # independent combinatorial oracle: q^(m) removes horizontal strips,
    # q^(1^m) removes vertical strips
    for n in range(5):
        for lam in partitions(n):
            for m in range(1, 4):
                got = Sym.s(lam).skew(Sym.h(m)).to_s()
                expect = {mu: Fraction(1) for mu in remove_horizontal_strip(lam, m)}
                assert got == expect
                got = Sym.s(lam).skew(Sym.e(m)).to_s()
                expect = {mu: Fraction(1) for mu in remove_vertical_strip(lam, m)}
                assert got == expect


def op_word(state, *ops):
    for op in reversed(ops):
        state = op(state)
    return state


def test_heisenberg_relations_on_fock():
    # q^(n) p^(m) = sum_k p^(m-k) q^(n-k) on states of degree <= 5
    states = spanning_states(5)
    for m in range(4):
        for n in range(4):
            for v in states:
                lhs = op_q_row(n, op_p_row(m, v))
                rhs = FockState()
                for k in range(min(m, n) + 1):
                    rhs = rhs + op_p_row(m - k, op_q_row(n - k, v))
                assert lhs == rhs, (m, n)


def test_mixed_relations_on_fock():
    # q^(n) p^(1^m) = p^(1^m) q^(n) + p^(1^{m-1}) q^(n-1), and the mirror
    states = spanning_states(4)
    for m in range(1, 4):
        for n in range(1, 4):
            for v in states:
                lhs = op_q_row(n, op_p_col(m, v))
                rhs = op_p_col(m, op_q_row(n, v)) + op_p_col(m - 1, op_q_row(n - 1, v))
                assert lhs == rhs, (m, n)
                lhs = op_q_col(n, op_p_row(m, v))
                rhs = op_p_row(m, op_q_col(n, v)) + op_p_row(m - 1, op_q_col(n - 1, v))
                assert lhs == rhs, (m, n)


def test_ps_commute():
    states = spanning_states(3)
    for m in range(1, 4):
        for n in range(1, 4):
            for v in states:
                assert op_p_row(m, op_p_col(n, v)) == op_p_col(n, op_p_row(m, v))
                assert op_q_row(m, op_q_col(n, v)) == op_q_col(n, op_q_row(m, v))


def test_contraction_frozen():
    # C^-_{-1} on the vacuum component is -p^(1) applied to 1, i.e. -h_1
    got = contract_minus(-1, Sym.one())
    assert got == -1 * Sym.h(1)
    # C^-_0 on the vacuum is the identity term k=0 only
    assert contract_minus(0, Sym.one()) == Sym.one()


def test_clifford_relations():
    states = spanning_states(3, charges=(-2, -1, 0, 1, 2))
    rng = range(-2, 3)
    for i in rng:
        for j in rng:
            for v in states:
                acom = psi(i, psi(j, v)) + psi(j, psi(i, v))
                assert not acom, (i, j)
                acom = psi_star(i, psi_star(j, v)) + psi_star(j, psi_star(i, v))
                assert not acom, (i, j)
                acom = psi(i, psi_star(j, v)) + psi_star(j, psi(i, v))
                expect = v if i == j else FockState()
                assert acom == expect, (i, j)
