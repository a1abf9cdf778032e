"""Bosonic Fock space with a charge lattice, and the fermions acting on it.

A state is a finite sum of charge components, each component a symmetric
function in Q[p_1, p_2, ...].  The Heisenberg mode h_{-m} multiplies by p_m
and h_m differentiates (m > 0); the one-row and one-column operators p^(m),
q^(m), p^(1^m), q^(1^m) come from the exponential generating functions and
act within a charge component, while the fermions psi_i, psi_i* shift charge
by one and act through the contraction operators C^-, C^+.
"""

from fractions import Fraction

from .symfunc import Sym


class FockState:
    """Finite linear combination of charge sectors."""

    __slots__ = ("c",)

    def __init__(self, comps=None):
        c = {}
        if comps:
            for n, f in comps.items():
                assert isinstance(n, int) and isinstance(f, Sym)
                if f:
                    c[n] = f
        self.c = c

    @staticmethod
    def vacuum(charge=0):
        return FockState({charge: Sym.one()})

    @staticmethod
    def state(charge, f):
        return FockState({charge: f})

    def __add__(self, other):
        out = dict(self.c)
        for n, f in other.c.items():
            g = out.get(n, Sym.zero()) + f
            if g:
                out[n] = g
            else:
                out.pop(n, None)
        return FockState(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return FockState({n: scalar * f for n, f in self.c.items()})

    def __eq__(self, other):
        return isinstance(other, FockState) and self.c == other.c

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        if not self.c:
            return "FockState(0)"
        bits = [f"charge {n}: {f!r}" for n, f in sorted(self.c.items())]
        return "FockState(" + "; ".join(bits) + ")"

    def map_components(self, op):
        out = {}
        for n, f in self.c.items():
            g = op(f)
            if g:
                out[n] = g
        return FockState(out)


# ----- Heisenberg modes and the one-row / one-column operators


def heis(n, state):
    """Mode h_n: multiplication by p_{-n} for n < 0, n * d/dp_n for n > 0."""
    assert n != 0
    if n < 0:
        pm = Sym.p(-n)
        return state.map_components(lambda f: f * pm)
    return state.map_components(lambda f: f.skew_p(n))


def op_p_row(m, state):
    """p^(m): multiplication by the complete homogeneous function h_m."""
    if m < 0:
        return FockState()
    hm = Sym.h(m)
    return state.map_components(lambda f: f * hm)


def op_q_row(m, state):
    """q^(m): the Hall adjoint of p^(m)."""
    if m < 0:
        return FockState()
    hm = Sym.h(m)
    return state.map_components(lambda f: f.skew(hm))


def op_p_col(m, state):
    """p^(1^m): multiplication by the elementary function e_m."""
    if m < 0:
        return FockState()
    em = Sym.e(m)
    return state.map_components(lambda f: f * em)


def op_q_col(m, state):
    """q^(1^m): the Hall adjoint of p^(1^m)."""
    if m < 0:
        return FockState()
    em = Sym.e(m)
    return state.map_components(lambda f: f.skew(em))


# ----- contraction operators on a single symmetric function


def contract_minus(i, f):
    """C^-_i applied to one charge component."""
    out = Sym.zero()
    if i >= 0:
        # sum_k (-1)^k p^(k) q^(1^{i+k})
        for k in range(0, max(f.degrees(), default=0) - i + 1):
            g = f.skew(Sym.e(i + k))
            if g:
                out = out + Fraction((-1) ** k) * (g * Sym.h(k))
    else:
        # sum_k (-1)^{i+k} p^(-i+k) q^(1^k)
        for k in range(0, max(f.degrees(), default=0) + 1):
            g = f.skew(Sym.e(k))
            if g:
                out = out + Fraction((-1) ** (i + k)) * (g * Sym.h(-i + k))
    return out


def contract_plus(i, f):
    """C^+_i applied to one charge component."""
    out = Sym.zero()
    if i >= 0:
        # sum_k (-1)^k p^(1^{i+k}) q^(k)
        for k in range(0, max(f.degrees(), default=0) + 1):
            g = f.skew(Sym.h(k))
            if g:
                out = out + Fraction((-1) ** k) * (g * Sym.e(i + k))
    else:
        # sum_k (-1)^{i+k} p^(1^k) q^(-i+k)
        for k in range(0, max(f.degrees(), default=0) + i + 1):
            g = f.skew(Sym.h(-i + k))
            if g:
                out = out + Fraction((-1) ** (i + k)) * (g * Sym.e(k))
    return out


# ----- fermions


def psi(i, state):
    """psi_i: charge n goes to n + 1 with C^-_{i+n} on the component."""
    out = FockState()
    for n, f in state.c.items():
        g = contract_minus(i + n, f)
        if g:
            out = out + FockState({n + 1: g})
    return out


def psi_star(i, state):
    """psi_i*: charge n goes to n - 1 with C^+_{i+n-1} on the component."""
    out = FockState()
    for n, f in state.c.items():
        g = contract_plus(i + n - 1, f)
        if g:
            out = out + FockState({n - 1: g})
    return out
