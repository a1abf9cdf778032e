"""Exact sparse linear algebra over Fraction.

Vectors are dicts mapping hashable basis labels to nonzero Fractions.
Everything here is deterministic: pivot choices depend only on the order in
which labels and rows are fed in.
"""

from fractions import Fraction

ZERO = Fraction(0)


def vec_iadd(acc, vec, scale=Fraction(1)):
    """acc += scale * vec in place, dropping zero entries."""
    if not scale:
        return acc
    for k, v in vec.items():
        nv = acc.get(k, ZERO) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def vec_scale(vec, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


def vec_clean(vec):
    return {k: Fraction(v) for k, v in vec.items() if v}


class Indexer:
    """Integer ids for hashable labels, assigned in first-seen order."""

    def __init__(self):
        self.ids = {}
        self.labels = []

    def id(self, label):
        i = self.ids.get(label)
        if i is None:
            i = len(self.labels)
            self.ids[label] = i
            self.labels.append(label)
        return i

    def __len__(self):
        return len(self.labels)


class SpanSolver:
    """Row space maintained incrementally in echelon form.

    add(vec) returns True when vec enlarges the span.  express(vec) writes vec
    as {generator index: coefficient} over the vectors previously passed to
    add (independent or not), or returns None when vec lies outside the span.
    reduce(vec) returns the canonical remainder of vec modulo the span.
    """

    def __init__(self):
        self.indexer = Indexer()
        # pivot id -> (row dict by id with row[pivot] == 1, combo over generator indices)
        self.rows = {}
        self.ngen = 0

    def _to_ids(self, vec):
        return {self.indexer.id(k): Fraction(v) for k, v in vec.items() if v}

    def _reduce(self, rvec):
        rvec = dict(rvec)
        combo = {}
        while True:
            cand = [i for i in rvec if i in self.rows]
            if not cand:
                return rvec, combo
            i = min(cand)
            coeff = rvec[i]
            row, rcombo = self.rows[i]
            vec_iadd(rvec, row, -coeff)
            vec_iadd(combo, rcombo, coeff)

    def add(self, vec):
        gen = self.ngen
        self.ngen += 1
        rem, combo = self._reduce(self._to_ids(vec))
        if not rem:
            return False
        piv = min(rem)
        c = rem[piv]
        row = {k: v / c for k, v in rem.items()}
        # rem = vec - sum(combo) hence row = (vec - sum(combo)) / c
        rcombo = {g: -v / c for g, v in combo.items()}
        rcombo[gen] = 1 / c
        self.rows[piv] = (row, rcombo)
        return True

    def express(self, vec):
        rem, combo = self._reduce(self._to_ids(vec))
        if rem:
            return None
        return combo

    def reduce(self, vec):
        rem, _ = self._reduce(self._to_ids(vec))
        return {self.indexer.labels[i]: v for i, v in rem.items()}

    def contains(self, vec):
        rem, _ = self._reduce(self._to_ids(vec))
        return not rem

    @property
    def rank(self):
        return len(self.rows)


def rank_of(vectors):
    sp = SpanSolver()
    for v in vectors:
        sp.add(v)
    return sp.rank


def kernel_basis(equations):
    """Basis of the solution space of a homogeneous linear system.

    equations is an iterable of dicts {unknown label: coefficient}.  Solutions
    are returned as dicts over the labels seen in the equations; unknowns that
    appear in no equation are unconstrained and do not show up here.
    """
    idx = Indexer()
    raw = []
    for eq in equations:
        r = {}
        for k, v in eq.items():
            v = Fraction(v)
            if v:
                r[idx.id(k)] = v
        raw.append(r)
    pivots = {}
    for r in raw:
        r = dict(r)
        while r:
            i = min(r)
            if i in pivots:
                vec_iadd(r, pivots[i], -r[i])
            else:
                c = r[i]
                pivots[i] = {k: v / c for k, v in r.items()}
                break
    free = [i for i in range(len(idx)) if i not in pivots]
    basis = []
    for f in free:
        sol = {f: Fraction(1)}
        for i in sorted(pivots, reverse=True):
            row = pivots[i]
            val = ZERO
            for j, v in row.items():
                if j != i and j in sol:
                    val -= v * sol[j]
            if val:
                sol[i] = val
        basis.append({idx.labels[i]: v for i, v in sol.items()})
    return basis


def solve_linear(equations, rhs):
    """One solution of the system (free variables set to zero), or None.

    equations is a list of dicts {label: coefficient}; rhs a list of scalars.
    """
    idx = Indexer()
    rows = []
    for eq, b in zip(equations, rhs):
        r = {}
        for k, v in eq.items():
            v = Fraction(v)
            if v:
                r[idx.id(k)] = v
        rows.append((r, Fraction(b)))
    RHS = len(idx)
    pivots = {}
    for r, b in rows:
        r = dict(r)
        if b:
            r[RHS] = -b
        while r:
            i = min(r)
            if i == RHS:
                return None
            if i in pivots:
                vec_iadd(r, pivots[i], -r[i])
            else:
                c = r[i]
                pivots[i] = {k: v / c for k, v in r.items()}
                break
    sol = {}
    for i in sorted(pivots, reverse=True):
        row = pivots[i]
        val = -row.get(RHS, ZERO)
        for j, v in row.items():
            if j != i and j != RHS and j in sol:
                val -= v * sol[j]
        if val:
            sol[i] = val
    return {idx.labels[i]: v for i, v in sol.items()}


def invert_matrix(mat, rows, cols):
    """Invert a square matrix given as {row label: {col label: coeff}}.

    Returns inv with inv[col][row] such that, reading mat as expressing row
    objects in terms of column objects, inv expresses column objects in terms
    of row objects.
    """
    n = len(rows)
    assert len(cols) == n
    a = [[Fraction(mat.get(r, {}).get(c, 0)) for c in cols] for r in rows]
    inv = [[Fraction(1) if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        assert piv is not None, "matrix is singular"
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        c = a[col][col]
        a[col] = [x / c for x in a[col]]
        inv[col] = [x / c for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    # a is now the identity; row i of inv solves e_i = sum inv[i][j] * mat-row j
    return {
        cols[i]: {rows[j]: inv[i][j] for j in range(n) if inv[i][j]} for i in range(n)
    }
