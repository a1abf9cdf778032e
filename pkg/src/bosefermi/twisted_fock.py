"""Twisted Fock space: half-integer Heisenberg modes on Q[p_1, p_3, p_5, ...].

States are symmetric functions supported on odd powersums.  The mode h_{-j/2}
(j odd positive) multiplies by p_j and h_{j/2} acts by (j/2) d/dp_j, matching
[h_{n/2}, h_{m/2}] = (n/2) delta_{n,-m}.  The one-row operators become
p^(m) = multiplication by q_m and q^(m) = its adjoint under the twisted
pairing <p_r, p_r> = r/2; one-column operators coincide with the one-row
ones here.  The single family of fermions phi_i acts by the contractions C_i.
"""

from fractions import Fraction
from math import factorial

from .symfunc import Sym

HALF = Fraction(1, 2)


def heis_half(n, f):
    """Mode h_{n/2} for odd n: multiply by p_{-n} (n < 0) or (n/2) d/dp_n."""
    assert n % 2 == 1
    if n < 0:
        return f * Sym.p(-n)
    return HALF * f.skew_p(n)


def op_p_row(m, f):
    """p^(m): multiplication by the twisted one-row function q_m."""
    if m < 0:
        return Sym.zero()
    return f * Sym.q(m)


def op_q_row(m, f):
    """q^(m): the twisted-pairing adjoint of p^(m)."""
    if m < 0:
        return Sym.zero()
    return f.skew_twisted(Sym.q(m))


def contract(i, f):
    """C_i applied to a twisted Fock state."""
    out = Sym.zero()
    deg = max(f.degrees(), default=0)
    if i >= 0:
        # sum_k (-1)^k p^(k) q^(i+k)
        for k in range(0, deg - i + 1):
            g = op_q_row(i + k, f)
            if g:
                out = out + Fraction((-1) ** k) * op_p_row(k, g)
    else:
        # sum_k (-1)^{i+k} p^(-i+k) q^(k)
        for k in range(0, deg + 1):
            g = op_q_row(k, f)
            if g:
                out = out + Fraction((-1) ** (i + k)) * op_p_row(-i + k, g)
    return out


def phi(i, f):
    """Fermion phi_i.

    The raw contractions C_i anticommute to 2 (-1)^i delta_{i,-j} on this
    space; rescaling the positive-index generators by (-1)^i removes the
    alternating sign, giving phi_i phi_j + phi_j phi_i = 2 delta_{i,-j}.
    """
    g = contract(i, f)
    if i > 0 and i % 2 == 1:
        return -1 * g
    return g


def phi_star(i, f):
    """The second fermion family; it collapses onto phi_{-i} on this space."""
    return phi(-i, f)


def graded_dimension(f):
    """Total dimension of the module class encoded by a twisted Fock state.

    The functional sends p_1^k to k! and every other powersum monomial to 0;
    on the image of the regular module of the rank n Clifford-symmetric
    algebra (the state (2 p_1)^n) it returns 2^n n!.
    """
    out = Fraction(0)
    for lam, v in f.c.items():
        if all(a == 1 for a in lam):
            out += v * factorial(len(lam))
    assert out.denominator == 1
    return int(out)
