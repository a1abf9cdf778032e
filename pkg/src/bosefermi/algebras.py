"""Group algebras of symmetric groups and their Clifford extensions.

An element is a dict mapping (mask, perm) to Fraction.  perm is a tuple with
perm[i] the image of strand i (0-based); mask is a bitmask encoding the
canonical Clifford monomial c_{i_1} ... c_{i_k} (ascending strand indices)
written to the left of the permutation.  Relations: c_i^2 = -1,
c_i c_j = -c_j c_i for i != j, and w c_i = c_{w(i)} w.  Plain symmetric group
algebra elements are the same objects with every mask zero.  The superdegree
of a term is the popcount of its mask.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .partitions import check_partition, conjugate, dim_irrep

ZERO = Fraction(0)


def bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def cliff_mul(a, b):
    """Product of canonical Clifford monomials c^a * c^b as (sign, mask)."""
    sign = 1
    cur = a
    for j in bits(b):
        if popcount(cur >> (j + 1)) % 2:
            sign = -sign
        bit = 1 << j
        if cur & bit:
            sign = -sign
            cur &= ~bit
        else:
            cur |= bit
    return sign, cur


def perm_move_mask(u, b):
    """Rewrite u * c^b as sign * c^{u(b)} * u; returns (sign, mask)."""
    imgs = [u[j] for j in bits(b)]
    sign = 1
    for x in range(len(imgs)):
        for y in range(x + 1, len(imgs)):
            if imgs[x] > imgs[y]:
                sign = -sign
    mask = 0
    for x in imgs:
        mask |= 1 << x
    return sign, mask


def perm_sign(w):
    sign = 1
    for x in range(len(w)):
        for y in range(x + 1, len(w)):
            if w[x] > w[y]:
                sign = -sign
    return sign


def term_mul(t1, t2):
    """Multiply normal-form terms (mask, perm); returns (sign, term)."""
    (a, u), (b, v) = t1, t2
    s1, ub = perm_move_mask(u, b)
    s2, m = cliff_mul(a, ub)
    w = tuple(u[v[i]] for i in range(len(u)))
    return s1 * s2, (m, w)


class AlgElt:
    """Element of the rank n Clifford-symmetric algebra (or of k[S_n])."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        t = {}
        if terms:
            for key, v in terms.items():
                v = Fraction(v)
                if v:
                    t[key] = v
        self.terms = t

    @staticmethod
    def identity(n):
        return AlgElt(n, {(0, tuple(range(n))): 1})

    @staticmethod
    def from_perm(n, w):
        w = tuple(w)
        assert sorted(w) == list(range(n))
        return AlgElt(n, {(0, w): 1})

    @staticmethod
    def s_gen(n, i):
        """Adjacent transposition of strands i and i+1 (0-based)."""
        assert 0 <= i < n - 1
        w = list(range(n))
        w[i], w[i + 1] = w[i + 1], w[i]
        return AlgElt.from_perm(n, w)

    @staticmethod
    def c_gen(n, i):
        """Clifford generator on strand i (0-based)."""
        assert 0 <= i < n
        return AlgElt(n, {(1 << i, tuple(range(n))): 1})

    @staticmethod
    def transposition(n, i, j):
        assert i != j
        w = list(range(n))
        w[i], w[j] = w[j], w[i]
        return AlgElt.from_perm(n, w)

    def __add__(self, other):
        assert self.n == other.n
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            else:
                del out[k]
        res = AlgElt(self.n)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return -1 * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        res = AlgElt(self.n)
        if scalar:
            res.terms = {k: scalar * v for k, v in self.terms.items()}
        return res

    def __mul__(self, other):
        assert isinstance(other, AlgElt) and self.n == other.n
        out = {}
        for t1, v1 in self.terms.items():
            for t2, v2 in other.terms.items():
                sign, t = term_mul(t1, t2)
                nv = out.get(t, ZERO) + sign * v1 * v2
                if nv:
                    out[t] = nv
                else:
                    del out[t]
        res = AlgElt(self.n)
        res.terms = out
        return res

    def __eq__(self, other):
        return (
            isinstance(other, AlgElt) and self.n == other.n and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"AlgElt({self.n}, 0)"
        bits_ = []
        for (mask, w), v in sorted(self.terms.items()):
            c = "".join(f"c{i}" for i in bits(mask)) or ""
            bits_.append(f"{v}*{c}{w}")
        return f"AlgElt({self.n}, " + " + ".join(bits_) + ")"

    def parity(self):
        """0 or 1 for homogeneous elements, None for mixed or zero."""
        ps = {popcount(m) % 2 for m, _ in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None

    def parity_part(self, p):
        res = AlgElt(self.n)
        res.terms = {k: v for k, v in self.terms.items() if popcount(k[0]) % 2 == p}
        return res

    def embed(self, n_new, offset=0):
        """Include into a larger algebra, shifting strands by offset."""
        assert offset + self.n <= n_new
        out = {}
        ident = list(range(n_new))
        for (mask, w), v in self.terms.items():
            nw = list(ident)
            for i in range(self.n):
                nw[i + offset] = w[i] + offset
            out[(mask << offset, tuple(nw))] = v
        res = AlgElt(n_new)
        res.terms = out
        return res


def algebra_basis(n, twisted):
    """All normal-form terms (mask, perm), deterministically ordered."""
    masks = range(2**n) if twisted else (0,)
    for mask in masks:
        for w in permutations(range(n)):
            yield (mask, w)


def algebra_dim(n, twisted):
    return factorial(n) * (2**n if twisted else 1)


@lru_cache(maxsize=None)
def e_triv(n):
    """The full symmetrizer, an idempotent."""
    terms = {(0, w): Fraction(1, factorial(n)) for w in permutations(range(n))}
    return AlgElt(n, terms)


@lru_cache(maxsize=None)
def e_sign(n):
    terms = {
        (0, w): Fraction(perm_sign(w), factorial(n)) for w in permutations(range(n))
    }
    return AlgElt(n, terms)


def _canonical_tableau(lam):
    """Rows of cell ids 0..n-1 filled row by row."""
    rows = []
    nxt = 0
    for part in lam:
        rows.append(list(range(nxt, nxt + part)))
        nxt += part
    return rows


def _group_sum(n, blocks, signed):
    """Sum over the product of symmetric groups on the given index blocks."""
    out = {}
    for choice in product(*[list(permutations(b)) for b in blocks]):
        w = list(range(n))
        sign = 1
        for b, img in zip(blocks, choice):
            for src, dst in zip(b, img):
                w[src] = dst
            if signed:
                sign *= perm_sign(tuple(img))
        out[(0, tuple(w))] = out.get((0, tuple(w)), ZERO) + sign
    return AlgElt(n, out)


@lru_cache(maxsize=None)
def young_idempotent(lam):
    """The Young idempotent for the row-filled tableau of shape lam.

    The left ideal it generates is the irreducible module of dimension given
    by the hook length formula; one-row and one-column shapes recover the
    full and signed symmetrizers.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if lam == (n,):
        return e_triv(n)
    if lam == (1,) * n:
        return e_sign(n)
    rows = _canonical_tableau(lam)
    cols = [[rows[i][j] for i in range(len(lam)) if lam[i] > j] for j in range(lam[0])]
    a = _group_sum(n, tuple(map(tuple, rows)), signed=False)
    b = _group_sum(n, tuple(map(tuple, cols)), signed=True)
    return Fraction(dim_irrep(lam), factorial(n)) * (a * b)


def jm_element(n, i, twisted):
    """Jucys-Murphy element for strand i (1-based) in the rank n algebra.

    Untwisted: sum of transpositions (j i) over j < i.  Twisted: the same sum
    corrected by Clifford terms, sum_j ((j i) - c_j c_i (j i)).
    """
    assert 1 <= i <= n
    out = AlgElt(n)
    for j in range(1, i):
        t = AlgElt.transposition(n, j - 1, i - 1)
        if twisted:
            out = out + t - AlgElt.c_gen(n, j - 1) * AlgElt.c_gen(n, i - 1) * t
        else:
            out = out + t
    return out
