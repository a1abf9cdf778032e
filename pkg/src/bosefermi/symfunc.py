"""Symmetric functions with exact rational coefficients.

Two independent computational routes are kept side by side:

* the Sym class stores a symmetric function by its powersum coordinates and
  converts to the other classical bases (h, e, m, s, and the q/Q/P family on
  the odd-powersum subring) through exact per-degree transition matrices;

* a polynomial engine (mono_* functions) expands symmetric functions in
  enough variables for the degree at hand and recovers basis coefficients by
  repeatedly stripping the lexicographically leading monomial.

Structure constants exposed at the API boundary (lr_coefficients,
schurQ_product) come from the polynomial engine; the test suite plays the two
routes against each other.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .linalg import invert_matrix
from .partitions import (
    check_partition,
    is_strict,
    odd_partitions,
    partitions,
    strict_partitions,
    z_factor,
)

ZERO = Fraction(0)


def _merge(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


def _perm_sign(sigma):
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


class Sym:
    """A symmetric function stored by powersum coordinates."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for lam, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[check_partition(lam)] = v
        self.c = c

    # ----- constructors

    @staticmethod
    def zero():
        return Sym()

    @staticmethod
    def one():
        return Sym({(): 1})

    @staticmethod
    def p(lam):
        if isinstance(lam, int):
            lam = (lam,)
        return Sym({tuple(sorted(lam, reverse=True)): 1})

    @staticmethod
    def h(r):
        assert r >= 0
        return _h_in_p(r)

    @staticmethod
    def e(r):
        assert r >= 0
        return _e_in_p(r)

    @staticmethod
    def q(r):
        assert r >= 0
        return _q_in_p(r)

    @staticmethod
    def s(lam):
        return _s_in_p(check_partition(lam))

    @staticmethod
    def m(lam):
        lam = check_partition(lam)
        n = sum(lam)
        row = _m_in_p_matrix(n)[lam]
        return Sym(row)

    @staticmethod
    def Q(lam):
        lam = check_partition(lam)
        assert is_strict(lam), f"Q wants a strict partition, got {lam}"
        return _bigq_in_p(lam)

    @staticmethod
    def P(lam):
        lam = check_partition(lam)
        return Fraction(1, 2 ** len(lam)) * Sym.Q(lam)

    # ----- ring structure

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            else:
                del out[k]
        res = Sym()
        res.c = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = Sym()
        res.c = {k: -v for k, v in self.c.items()}
        return res

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        res = Sym()
        if scalar:
            res.c = {k: scalar * v for k, v in self.c.items()}
        return res

    def __mul__(self, other):
        assert isinstance(other, Sym)
        out = {}
        for la, va in self.c.items():
            for lb, vb in other.c.items():
                k = _merge(la, lb)
                nv = out.get(k, ZERO) + va * vb
                if nv:
                    out[k] = nv
                else:
                    del out[k]
        res = Sym()
        res.c = out
        return res

    def __eq__(self, other):
        return isinstance(other, Sym) and self.c == other.c

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        if not self.c:
            return "Sym(0)"
        bits = []
        for lam in sorted(self.c, key=lambda l: (sum(l), l)):
            bits.append(f"{self.c[lam]}*p{list(lam)}")
        return "Sym(" + " + ".join(bits) + ")"

    # ----- grading

    def degrees(self):
        return sorted({sum(lam) for lam in self.c})

    def homogeneous(self, n):
        return Sym({lam: v for lam, v in self.c.items() if sum(lam) == n})

    def is_odd_supported(self):
        return all(all(a % 2 == 1 for a in lam) for lam in self.c)

    # ----- skewing and pairings

    def skew_p(self, r):
        """Apply the adjoint of multiplication by p_r: r * d/dp_r."""
        assert r >= 1
        out = {}
        for lam, v in self.c.items():
            mult = lam.count(r)
            if not mult:
                continue
            rest = list(lam)
            rest.remove(r)
            k = tuple(rest)
            nv = out.get(k, ZERO) + v * r * mult
            if nv:
                out[k] = nv
            else:
                del out[k]
        res = Sym()
        res.c = out
        return res

    def skew(self, f):
        """Apply f-perp, the Hall adjoint of multiplication by f."""
        out = Sym.zero()
        for lam, v in f.c.items():
            term = self
            for r in lam:
                term = term.skew_p(r)
                if not term:
                    break
            out = out + v * term
        return out

    def skew_p_twisted(self, r):
        """Adjoint of p_r under the twisted pairing: (r/2) * d/dp_r."""
        return Fraction(1, 2) * self.skew_p(r)

    def skew_twisted(self, f):
        out = Sym.zero()
        for lam, v in f.c.items():
            term = self
            for r in lam:
                term = term.skew_p_twisted(r)
                if not term:
                    break
            out = out + v * term
        return out

    def hall(self, other):
        """Hall inner product; powersums satisfy <p_lam, p_mu> = delta * z_lam."""
        out = ZERO
        small, big = (self.c, other.c) if len(self.c) <= len(other.c) else (other.c, self.c)
        for lam, v in small.items():
            w = big.get(lam)
            if w:
                out += v * w * z_factor(lam)
        return out

    def hall_twisted(self, other):
        """Twisted pairing on the odd-powersum subring: <p_r, p_r> = r/2."""
        out = ZERO
        for lam, v in self.c.items():
            w = other.c.get(lam)
            if w:
                assert all(a % 2 == 1 for a in lam)
                out += v * w * Fraction(z_factor(lam), 2 ** len(lam))
        return out

    # ----- basis conversions (one homogeneous degree at a time)

    def _convert(self, matrix_fn):
        out = {}
        for n in self.degrees():
            comp = self.homogeneous(n)
            inv = matrix_fn(n)
            for mu, v in comp.c.items():
                for lam, w in inv[mu].items():
                    nv = out.get(lam, ZERO) + v * w
                    if nv:
                        out[lam] = nv
                    else:
                        del out[lam]
        return out

    def to_p(self):
        return dict(self.c)

    def to_s(self):
        return self._convert(_p_in_s_matrix)

    def to_h(self):
        return self._convert(_p_in_h_matrix)

    def to_e(self):
        return self._convert(_p_in_e_matrix)

    def to_m(self):
        return self._convert(_p_in_m_matrix)

    def to_Q(self):
        assert self.is_odd_supported(), "not in the odd-powersum subring"
        return self._convert(_p_in_Q_matrix)

    def to_P(self):
        return {lam: v * 2 ** len(lam) for lam, v in self.to_Q().items()}


# ---------------------------------------------------------------------------
# transition data, powersum side


@lru_cache(maxsize=None)
def _h_in_p(r):
    if r == 0:
        return Sym.one()
    return Sym({lam: Fraction(1, z_factor(lam)) for lam in partitions(r)})


@lru_cache(maxsize=None)
def _e_in_p(r):
    if r == 0:
        return Sym.one()
    return Sym(
        {lam: Fraction((-1) ** (r - len(lam)), z_factor(lam)) for lam in partitions(r)}
    )


@lru_cache(maxsize=None)
def _q_in_p(r):
    # sum_r q_r z^r = exp(2 sum_{m odd} p_m z^m / m)
    if r == 0:
        return Sym.one()
    return Sym({lam: Fraction(2 ** len(lam), z_factor(lam)) for lam in odd_partitions(r)})


@lru_cache(maxsize=None)
def _s_in_p(lam):
    """Schur function via the determinant in complete homogeneous functions."""
    lam = check_partition(lam)
    l = len(lam)
    if l == 0:
        return Sym.one()
    total = Sym.zero()
    for sigma in permutations(range(l)):
        degs = [lam[i] - i + sigma[i] for i in range(l)]
        if any(d < 0 for d in degs):
            continue
        term = Sym.one()
        for d in degs:
            term = term * _h_in_p(d)
        total = total + _perm_sign(sigma) * term
    return total


@lru_cache(maxsize=None)
def _q2_in_p(r, s):
    """Two-row Schur Q function, r > s >= 0."""
    assert r > s >= 0
    if s == 0:
        return _q_in_p(r)
    out = _q_in_p(r) * _q_in_p(s)
    for i in range(1, s + 1):
        out = out + Fraction(2 * (-1) ** i) * (_q_in_p(r + i) * _q_in_p(s - i))
    return out


@lru_cache(maxsize=None)
def _bigq_in_p(lam):
    """Schur Q function of a strict partition, by Pfaffian expansion."""
    lam = check_partition(lam)
    assert is_strict(lam)
    l = len(lam)
    if l == 0:
        return Sym.one()
    if l == 1:
        return _q_in_p(lam[0])
    if l == 2:
        return _q2_in_p(lam[0], lam[1])
    work = lam if l % 2 == 0 else lam + (0,)
    out = Sym.zero()
    for j in range(1, len(work)):
        head = _q2_in_p(work[0], work[j]) if work[j] else _q_in_p(work[0])
        rest = tuple(work[k] for k in range(1, len(work)) if k != j and work[k])
        sign = (-1) ** (j + 1)
        out = out + sign * (head * _bigq_in_p(rest))
    return out


def _expand_matrix(n, labels, expander):
    return {lam: expander(lam).homogeneous(n).c for lam in labels}


@lru_cache(maxsize=None)
def _p_in_s_matrix(n):
    labels = list(partitions(n))
    mat = _expand_matrix(n, labels, _s_in_p)
    return invert_matrix(mat, labels, labels)


def _prod_over(parts, factor):
    out = Sym.one()
    for r in parts:
        out = out * factor(r)
    return out


@lru_cache(maxsize=None)
def _p_in_h_matrix(n):
    labels = list(partitions(n))
    mat = _expand_matrix(n, labels, lambda lam: _prod_over(lam, _h_in_p))
    return invert_matrix(mat, labels, labels)


@lru_cache(maxsize=None)
def _p_in_e_matrix(n):
    labels = list(partitions(n))
    mat = _expand_matrix(n, labels, lambda lam: _prod_over(lam, _e_in_p))
    return invert_matrix(mat, labels, labels)


@lru_cache(maxsize=None)
def _p_to_m_matrix(n):
    """Rows: p_lam expanded into monomial symmetric functions."""
    labels = list(partitions(n))
    N = max(n, 1)
    return {lam: mono_to_m(mono_p_prod(lam, N)) for lam in labels}


@lru_cache(maxsize=None)
def _m_in_p_matrix(n):
    labels = list(partitions(n))
    return invert_matrix(_p_to_m_matrix(n), labels, labels)


@lru_cache(maxsize=None)
def _p_in_m_matrix(n):
    # inverse of m -> p, i.e. the p -> m data itself reindexed
    labels = list(partitions(n))
    mat = _p_to_m_matrix(n)
    return {lam: dict(mat[lam]) for lam in labels}


@lru_cache(maxsize=None)
def _p_in_Q_matrix(n):
    rows = list(strict_partitions(n))
    cols = list(odd_partitions(n))
    mat = _expand_matrix(n, rows, _bigq_in_p)
    return invert_matrix(mat, rows, cols)


def sn_character(lam, mu):
    """Irreducible S_n character indexed by lam, evaluated on cycle type mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    assert sum(lam) == sum(mu)
    coeff = _s_in_p(lam).c.get(mu, ZERO)
    val = coeff * z_factor(mu)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# polynomial engine: explicit expansions in N variables
#
# A polynomial is a dict mapping exponent tuples of fixed length N to nonzero
# Fractions.


def mono_one(N):
    return {(0,) * N: Fraction(1)}


def mono_iadd(acc, poly, scale=Fraction(1)):
    if not scale:
        return acc
    for e, c in poly.items():
        nv = acc.get(e, ZERO) + scale * c
        if nv:
            acc[e] = nv
        else:
            del acc[e]
    return acc


def mono_mul(f, g):
    out = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            nv = out.get(e, ZERO) + ca * cb
            if nv:
                out[e] = nv
            else:
                del out[e]
    return out


@lru_cache(maxsize=None)
def mono_p(r, N):
    assert r >= 1
    out = {}
    for i in range(N):
        e = [0] * N
        e[i] = r
        out[tuple(e)] = Fraction(1)
    return out


def mono_p_prod(lam, N):
    out = mono_one(N)
    for r in lam:
        out = mono_mul(out, mono_p(r, N))
    return out


@lru_cache(maxsize=None)
def mono_e(r, N):
    if r == 0:
        return mono_one(N)
    out = {}
    for comb in combinations(range(N), r):
        e = [0] * N
        for i in comb:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


@lru_cache(maxsize=None)
def mono_h(r, N):
    out = {}

    def rec(i, remaining, acc):
        if i == N - 1:
            out[tuple(acc + [remaining])] = Fraction(1)
            return
        for k in range(remaining + 1):
            rec(i + 1, remaining - k, acc + [k])

    rec(0, r, [])
    return out


@lru_cache(maxsize=None)
def mono_q(r, N):
    # prod_i (1 + x_i t)/(1 - x_i t) = E(t) H(t)
    out = {}
    for a in range(r + 1):
        mono_iadd(out, mono_mul(mono_e(a, N), mono_h(r - a, N)))
    return out


@lru_cache(maxsize=None)
def mono_m(lam, N):
    lam = check_partition(lam)
    assert len(lam) <= N
    base = lam + (0,) * (N - len(lam))
    return {e: Fraction(1) for e in set(permutations(base))}


@lru_cache(maxsize=None)
def mono_s(lam, N):
    """Schur polynomial by explicit semistandard tableau enumeration."""
    lam = check_partition(lam)
    if not lam:
        return mono_one(N)
    if len(lam) > N:
        return {}
    out = {}
    rows = []

    def fill_row(r, prev_row):
        if r == len(lam):
            e = [0] * N
            for row in rows:
                for v in row:
                    e[v] += 1
            key = tuple(e)
            out[key] = out.get(key, ZERO) + 1
            return
        row = [0] * lam[r]

        def place(j, minval):
            if j == lam[r]:
                rows.append(tuple(row))
                fill_row(r + 1, row)
                rows.pop()
                return
            lo = minval
            if prev_row is not None:
                lo = max(lo, prev_row[j] + 1)
            for v in range(lo, N):
                row[j] = v
                place(j + 1, v)

        place(0, 0)

    fill_row(0, None)
    return out


@lru_cache(maxsize=None)
def mono_q2(r, s, N):
    assert r > s >= 0
    if s == 0:
        return mono_q(r, N)
    out = dict(mono_mul(mono_q(r, N), mono_q(s, N)))
    for i in range(1, s + 1):
        mono_iadd(out, mono_mul(mono_q(r + i, N), mono_q(s - i, N)), Fraction(2 * (-1) ** i))
    return out


@lru_cache(maxsize=None)
def mono_bigq(lam, N):
    lam = check_partition(lam)
    assert is_strict(lam)
    l = len(lam)
    if l == 0:
        return mono_one(N)
    if l == 1:
        return mono_q(lam[0], N)
    if l == 2:
        return mono_q2(lam[0], lam[1], N)
    work = lam if l % 2 == 0 else lam + (0,)
    out = {}
    for j in range(1, len(work)):
        head = mono_q2(work[0], work[j], N) if work[j] else mono_q(work[0], N)
        rest = tuple(work[k] for k in range(1, len(work)) if k != j and work[k])
        mono_iadd(out, mono_mul(head, mono_bigq(rest, N)), Fraction((-1) ** (j + 1)))
    return out


def mono_to_m(poly):
    """Read off monomial symmetric function coefficients."""
    out = {}
    for e, c in poly.items():
        if list(e) == sorted(e, reverse=True):
            out[tuple(x for x in e if x)] = c
    return out


def lr_coefficients(lam, mu):
    """Coefficients of s_lam * s_mu in the Schur basis, by brute force.

    The product is expanded as an honest polynomial in enough variables and
    Schur polynomials are stripped off the lexicographically leading term.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    N = max(sum(lam) + sum(mu), 1)
    f = dict(mono_mul(mono_s(lam, N), mono_s(mu, N)))
    out = {}
    while f:
        e = max(f)
        assert list(e) == sorted(e, reverse=True)
        nu = tuple(x for x in e if x)
        c = f[e]
        assert c.denominator == 1 and c > 0
        out[nu] = int(c)
        mono_iadd(f, mono_s(nu, N), -c)
    return out


def schurQ_product(lam, mu):
    """Coefficients of Q_lam * Q_mu in the Schur Q basis, by brute force."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    assert is_strict(lam) and is_strict(mu)
    N = max(sum(lam) + sum(mu), 1)
    f = dict(mono_mul(mono_bigq(lam, N), mono_bigq(mu, N)))
    out = {}
    while f:
        e = max(f)
        assert list(e) == sorted(e, reverse=True)
        nu = tuple(x for x in e if x)
        assert is_strict(nu)
        c = f[e] / 2 ** len(nu)
        assert c.denominator == 1 and c > 0
        out[nu] = int(c)
        mono_iadd(f, mono_bigq(nu, N), -c)
    return out
