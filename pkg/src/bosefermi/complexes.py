"""Chain complexes of bimodule words: builders, cones, and minimization.

A complex lives at one base level and one flavor.  Its terms are finite
lists of summands per cohomological degree, each summand a word with a
super shift, and its differentials are sparse morphism components
between adjacent degrees.  d^2 = 0 is asserted exactly on construction.

Conventions, fixed once and used everywhere:
  * [s] moves the term at old degree d to degree d - s and scales the
    differential by (-1)^s, so [1] shifts complexes to the left.
  * {t} adds t to every super shift; only its parity matters.
  * a stored component between summands (u, s) and (u', s') is a matrix
    on the unshifted stages whose morphism parity is (s + s') mod 2 in
    the twisted flavor and 0 otherwise.
  * Cone(f)^n = A^(n+1) + B^n with differential [[-d_A, 0], [f, d_B]].
  * the truncation bound ``trunc`` names the largest base level a family
    of complexes is meant to be evaluated at; it is carried as metadata.
    Summands die on their own when their word dips below level zero or
    presses to a zero stage, and words may pass through levels above the
    bound freely.

The lowering complex at index i collects words P^((a)) Q^((1^b)) with
a - b = -i at degree -a; the raising complex collects P^((1^a)) Q^((b))
with a - b = i at degree b.  In the twisted flavor all boxes are one-row
and the (a, b) summand carries the super shift min(a, b).  Differentials
split one box off each letter and cap the freed pair, with one hollow
dot on the capped strand in the twisted flavor; without that dot the
square of the differential does not vanish.
"""

from fractions import Fraction
from functools import lru_cache

from .bimodules import (
    graded_dim,
    hom_space,
    left_generators,
    normalize_word,
    p_letter,
    q_letter,
    stage,
    summands_isomorphic,
    word_output_level,
)
from .diagrams import (
    Mor,
    cap_pq,
    compose,
    cup_pq,
    dot_q,
    ident,
    merge_p,
    merge_q,
    mor_eq,
    mor_scale,
    mor_sum,
    split_p,
    split_p_corner,
    split_q,
    split_q_corner,
)
from .linalg import (
    Indexer,
    SpanSolver,
    invert_matrix,
    kernel_basis,
    rank_of,
    solve_linear,
    vec_clean,
    vec_iadd,
)
from .partitions import conjugate, partitions, removable_rows, remove_box

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Words and summands


def word_levels(word, base):
    """All levels visited reading the word right to left, or None."""
    lvls = [base]
    for kind, lam in reversed(word):
        k = sum(lam)
        lvls.append(lvls[-1] + k if kind == "P" else lvls[-1] - k)
        if lvls[-1] < 0:
            return None
    return lvls


def summand_alive(word, base):
    """Words dipping below level zero are the zero functor.

    There is no upper ceiling: a truncation bound only selects which
    base levels a family of complexes is evaluated at, and words are
    free to pass through higher levels in the middle.
    """
    return word_levels(word, base) is not None


def format_word(word, sshift=0):
    if not word:
        s = "id"
    else:
        bits = []
        for kind, lam in word:
            if lam == (1,):
                bits.append(kind)
            elif len(lam) == 1:
                bits.append("%s^(%d)" % (kind, lam[0]))
            elif all(a == 1 for a in lam):
                bits.append("%s^(1^%d)" % (kind, len(lam)))
            else:
                bits.append("%s^(%s)" % (kind, ",".join(map(str, lam))))
        s = "".join(bits)
    if sshift % 2:
        s += "{1}"
    return s


# ---------------------------------------------------------------------------
# The complex container


class Complex:
    """Bounded complex of word summands over one base level.

    terms maps degree -> list of (word, sshift); diff maps
    (degree, src index, tgt index) -> Mor.  Dead summands (zero stage or
    levels beyond the truncation) are dropped on construction, then
    d^2 = 0, degree adjacency, and the parity rule are asserted.
    """

    def __init__(self, base, trunc, twisted, terms, diff, recipes=None,
                 check=True):
        self.base = base
        self.trunc = trunc
        self.twisted = twisted
        keep = {}
        index_map = {}
        for deg in sorted(terms):
            kept = []
            for i, (word, s) in enumerate(terms[deg]):
                word = normalize_word(word)
                if summand_alive(word, base):
                    st = stage(word, base, twisted)
                    if st is None or st.dim == 0:
                        continue
                    index_map[(deg, i)] = len(kept)
                    kept.append((word, s))
            if kept:
                keep[deg] = kept
        self.terms = keep
        self.diff = {}
        self.recipes = {}
        for (deg, i, j), f in diff.items():
            if (deg, i) in index_map and (deg + 1, j) in index_map:
                if f.is_zero():
                    continue
                key = (deg, index_map[(deg, i)], index_map[(deg + 1, j)])
                self.diff[key] = f
                if recipes and (deg, i, j) in recipes:
                    self.recipes[key] = recipes[(deg, i, j)]
        if check:
            self.validate()

    def degrees(self):
        return sorted(self.terms)

    def summands(self, deg):
        return self.terms.get(deg, [])

    def is_zero(self):
        return not self.terms

    def output_level(self):
        for deg in self.terms:
            word, _ = self.terms[deg][0]
            return word_output_level(word, self.base)
        return None

    def validate(self):
        out = None
        for deg, summands in self.terms.items():
            for word, s in summands:
                lvl = word_output_level(word, self.base)
                assert lvl is not None
                if out is None:
                    out = lvl
                assert lvl == out, "summands mix output levels"
        for (deg, i, j), f in self.diff.items():
            word, s = self.terms[deg][i]
            word2, s2 = self.terms[deg + 1][j]
            assert f.src_word == word and f.tgt_word == word2
            assert f.base == self.base and f.twisted == self.twisted
            want = (s + s2) & 1 if self.twisted else 0
            assert f.parity == want, "component parity breaks the shift rule"
        for deg in self.degrees():
            if deg + 2 not in self.terms:
                continue
            for i in range(len(self.terms[deg])):
                for k in range(len(self.terms[deg + 2])):
                    acc = None
                    for j in range(len(self.terms[deg + 1])):
                        f = self.diff.get((deg, i, j))
                        g = self.diff.get((deg + 1, j, k))
                        if f is None or g is None:
                            continue
                        h = compose(g, f)
                        acc = h if acc is None else mor_sum([(acc, 1), (h, 1)])
                    assert acc is None or acc.is_zero(), \
                        "differential does not square to zero"

    # ----- shifts

    def shifted(self, s):
        """Cohomological shift [s]: old degree d lands at d - s."""
        terms = {d - s: list(v) for d, v in self.terms.items()}
        sign = Fraction((-1) ** (s & 1))
        diff = {}
        for (deg, i, j), f in self.diff.items():
            diff[(deg - s, i, j)] = mor_scale(f, sign) if sign != 1 else f
        c = Complex(self.base, self.trunc, self.twisted, terms, diff,
                    check=False)
        c.recipes = {(d - s, i, j): r for (d, i, j), r in self.recipes.items()}
        if sign != 1:
            c.recipes = {k: _scaled_recipe(r, sign)
                         for k, r in c.recipes.items()}
        return c

    def sshifted(self, t):
        """Super shift {t}."""
        if t % 2 == 0:
            return self
        assert self.twisted
        terms = {d: [(w, s + t) for w, s in v] for d, v in self.terms.items()}
        c = Complex(self.base, self.trunc, self.twisted, terms, dict(self.diff),
                    check=False)
        c.recipes = dict(self.recipes)
        return c

    # ----- display and serialization

    def pretty(self):
        if self.is_zero():
            return "0"
        degs = self.degrees()
        chunks = []
        for d in degs:
            names = [format_word(w, s) for w, s in self.terms[d]]
            chunks.append("(+)".join(names) + "@%d" % d)
        return "[" + " -> ".join(chunks) + "]"

    def to_json(self):
        terms = []
        for d in self.degrees():
            terms.append([d, [[list(map(list, w)), s]
                              for w, s in self.terms[d]]])
        diffs = []
        for (deg, i, j) in sorted(self.diff):
            f = self.diff[(deg, i, j)]
            entries = []
            for m in sorted(f.mat, key=repr):
                for n in sorted(f.mat[m], key=repr):
                    c = f.mat[m][n]
                    entries.append([repr(m), repr(n), c.numerator,
                                    c.denominator])
            diffs.append([deg, i, j, f.parity, entries])
        return {
            "base": self.base,
            "trunc": self.trunc,
            "twisted": self.twisted,
            "terms": terms,
            "differentials": diffs,
        }


def _scaled_recipe(recipe, c):
    return lambda prefix, suffix, base: mor_scale(
        recipe(prefix, suffix, base), c)


def identity_complex(base, trunc, twisted):
    return Complex(base, trunc, twisted, {0: [((), 0)]}, {})


def word_complex(word, base, trunc, twisted, deg=0, sshift=0):
    return Complex(base, trunc, twisted,
                   {deg: [(normalize_word(word), sshift)]}, {})


def zero_complex(base, trunc, twisted):
    return Complex(base, trunc, twisted, {}, {})


# ---------------------------------------------------------------------------
# The lowering and raising complexes


def _pq_shapes(sign, twisted):
    """Box shapes for the (a, b) summand of the sign complex."""
    if twisted:
        return (lambda a: (a,)), (lambda b: (b,))
    if sign == "-":
        return (lambda a: (a,)), (lambda b: (1,) * b)
    return (lambda a: (1,) * a), (lambda b: (b,))


def _c_word(sign, twisted, a, b):
    psh, qsh = _pq_shapes(sign, twisted)
    return normalize_word((p_letter(psh(a)), q_letter(qsh(b))))


def _edge_minus(sign_unused, twisted, a, b, base, prefix, suffix, dotted):
    """P-box Q-box -> smaller boxes: split both, dot, cap."""
    psh, qsh = _pq_shapes("-", twisted)
    cur = prefix + _c_word("-", twisted, a, b) + suffix
    pos0 = len(prefix)
    steps = []
    if a >= 2:
        f = split_p(cur, base, twisted, pos0)
        steps.append(f)
        cur = f.tgt_word
    ppos = pos0 + (1 if a >= 2 else 0)
    if b >= 2:
        f = split_q(cur, base, twisted, ppos + 1)
        steps.append(f)
        cur = f.tgt_word
    if dotted:
        f = dot_q(cur, base, twisted, ppos + 1)
        steps.append(f)
        cur = f.tgt_word
    f = cap_pq(cur, base, twisted, ppos)
    steps.append(f)
    out = steps[0]
    for f in steps[1:]:
        out = compose(f, out)
    return out


def _edge_plus(sign_unused, twisted, a, b, base, prefix, suffix, dotted):
    """P-box Q-box -> bigger boxes: cup, dot, merge both."""
    psh, qsh = _pq_shapes("+", twisted)
    cur = prefix + _c_word("+", twisted, a, b) + suffix
    pos0 = len(prefix)
    qboxpos = pos0 + (1 if a >= 1 else 0)
    steps = [cup_pq(cur, base, twisted, qboxpos)]
    cur = steps[-1].tgt_word
    if dotted:
        f = dot_q(cur, base, twisted, qboxpos + 1)
        steps.append(f)
        cur = f.tgt_word
    if a >= 1:
        f = merge_p(cur, base, twisted, psh(a + 1), pos0)
        steps.append(f)
        cur = f.tgt_word
    if b >= 1:
        f = merge_q(cur, base, twisted, qsh(b + 1), pos0 + 1)
        steps.append(f)
        cur = f.tgt_word
    out = steps[0]
    for f in steps[1:]:
        out = compose(f, out)
    return out


def c_complex(sign, i, base, trunc, twisted, dotted=None):
    """The index-i lowering ("-") or raising ("+") complex at one base.

    ``dotted`` overrides the hollow dot on twisted differentials; it
    exists so the failure of d^2 = 0 without the dot stays testable.
    """
    assert sign in ("-", "+")
    if dotted is None:
        dotted = twisted
    out_level = base - i if sign == "-" else base + i
    if out_level < 0:
        return zero_complex(base, trunc, twisted)
    # the Q box must fit below the base, which bounds a; every a in the
    # range gives a live summand because the top level never moves
    amin = max(0, -i) if sign == "-" else max(0, i)
    amax = base - i if sign == "-" else base + i
    terms = {}
    for a in range(amin, amax + 1):
        b = a + i if sign == "-" else a - i
        deg = -a if sign == "-" else b
        # undotted twisted differentials ignore the shift bookkeeping,
        # so the d^2 failure is visible instead of a parity mismatch
        s = min(a, b) if twisted and dotted else 0
        terms[deg] = [(_c_word(sign, twisted, a, b), s)]
    diff = {}
    recipes = {}
    for a in range(amin + 1, amax + 1):
        b = a + i if sign == "-" else a - i
        if sign == "-":
            maker = _edge_factory(_edge_minus, twisted, a, b, dotted)
            key = (-a, 0, 0)
        else:
            # stored under the degree of the smaller summand
            maker = _edge_factory(_edge_plus, twisted, a - 1, b - 1, dotted)
            key = (b - 1, 0, 0)
        diff[key] = maker((), (), base)
        recipes[key] = maker
    return Complex(base, trunc, twisted, terms, diff, recipes=recipes)


def _edge_factory(builder, twisted, a, b, dotted):
    return lambda prefix, suffix, base: builder(None, twisted, a, b, base,
                                                prefix, suffix, dotted)


# ---------------------------------------------------------------------------
# The projector resolutions T^-/T^+ over the symmetric group tower


def _t_word(lam):
    if not lam:
        return ()
    return normalize_word((p_letter(lam), q_letter(conjugate(lam))))


def _t_edge(sign, lam, row, base, prefix, suffix, scalar):
    """One corner-removal component of the T differential.

    Removing the corner in ``row`` of lam removes the corner in row
    lam[row]-1 of the conjugate, and the two splits (or merges) meet in
    a plain cap (or cup) on the freed strands.
    """
    d = sum(lam)
    mu = remove_box(lam, row)
    pos0 = len(prefix)
    if sign == "-":
        if d == 1:
            out = cap_pq(prefix + _t_word(lam) + suffix, base, False, pos0)
        else:
            f1 = split_p_corner(prefix + _t_word(lam) + suffix, base, False,
                                row, pos0)
            f2 = split_q_corner(f1.tgt_word, base, False, lam[row] - 1,
                                pos0 + 2)
            f3 = cap_pq(f2.tgt_word, base, False, pos0 + 1)
            out = compose(f3, compose(f2, f1))
    else:
        if d == 1:
            out = cup_pq(prefix + suffix, base, False, pos0)
        else:
            f1 = cup_pq(prefix + _t_word(mu) + suffix, base, False, pos0 + 1)
            f2 = merge_p(f1.tgt_word, base, False, lam, pos0)
            f3 = merge_q(f2.tgt_word, base, False, conjugate(lam), pos0 + 1)
            out = compose(f3, compose(f2, f1))
    return mor_scale(out, scalar) if scalar != 1 else out


def _raw_double_step(sign, lam, r1, r2, base):
    """Unscaled 2-step composite removing corner r1 of lam, then r2."""
    mu = remove_box(lam, r1)
    if sign == "-":
        return compose(_t_edge("-", mu, r2, base, (), (), ONE),
                       _t_edge("-", lam, r1, base, (), (), ONE))
    return compose(_t_edge("+", lam, r1, base, (), (), ONE),
                   _t_edge("+", mu, r2, base, (), (), ONE))


def _proportionality(m1, m2):
    """The scalar k with m2 = k*m1, or None when not proportional."""
    k = None
    for lab, row in m1.mat.items():
        for lab2, c in row.items():
            k = m2.mat.get(lab, {}).get(lab2, ZERO) / c
            break
        if k is not None:
            break
    if k is None:
        return None
    return k if mor_eq(m2, mor_scale(m1, k)) else None


@lru_cache(maxsize=None)
def solve_projector_signs(dmax, trunc, sign="-"):
    """Scalars on the corner-removal edges making d^2 = 0.

    Edges are keyed (lam, row).  Two-step composites landing in the same
    shape by a single route must vanish outright; genuine diamonds give
    one multiplicative constraint each, with the proportionality factor
    required to agree at every base level up to trunc.  The lex-first
    edge is normalized to 1 and every solved scalar is nonzero.
    """
    assert sign in ("-", "+")
    values = {}
    for d in range(1, dmax + 1):
        for lam in sorted(partitions(d)):
            for r in removable_rows(lam):
                values[(lam, r)] = None
    constraints = []
    for d in range(2, dmax + 1):
        for lam in sorted(partitions(d)):
            routes = {}
            for r1 in removable_rows(lam):
                mu = remove_box(lam, r1)
                for r2 in removable_rows(mu):
                    nu = remove_box(mu, r2)
                    routes.setdefault(nu, []).append((r1, r2))
            for nu, paths in sorted(routes.items()):
                bases = range(d, max(trunc, d) + 1)
                if len(paths) == 1:
                    (r1, r2), = paths
                    for b in bases:
                        m = _raw_double_step(sign, lam, r1, r2, b)
                        assert m.is_zero(), \
                            "single-route composite must vanish"
                    continue
                assert len(paths) == 2
                (r1, r2), (r3, r4) = sorted(paths)
                kappa = None
                for b in bases:
                    m1 = _raw_double_step(sign, lam, r1, r2, b)
                    m2 = _raw_double_step(sign, lam, r3, r4, b)
                    if m1.is_zero() and m2.is_zero():
                        continue
                    assert not m1.is_zero() and not m2.is_zero()
                    k = _proportionality(m1, m2)
                    assert k is not None and k != 0, \
                        "diamond routes are not proportional"
                    assert kappa is None or kappa == k, \
                        "diamond factor varies with the base level"
                    kappa = k
                if kappa is None:
                    continue
                mu1, mu2 = remove_box(lam, r1), remove_box(lam, r3)
                constraints.append(((lam, r1), (mu1, r2),
                                    (lam, r3), (mu2, r4), kappa))
    order = sorted(values)
    if order:
        values[order[0]] = ONE
    # c1*c2 = -kappa*c3*c4; propagate, seeding stuck edges with 1
    pending = list(constraints)
    while pending:
        progress = False
        for con in list(pending):
            e1, e2, e3, e4, kappa = con
            left = [values[e1], values[e2]]
            right = [values[e3], values[e4]]
            known = sum(v is not None for v in left + right)
            if known < 3:
                continue
            pending.remove(con)
            progress = True
            if known == 4:
                assert left[0] * left[1] == -kappa * right[0] * right[1]
            elif None in left:
                have = left[0] if left[1] is None else left[1]
                miss = e2 if left[1] is None else e1
                values[miss] = -kappa * right[0] * right[1] / have
            else:
                have = right[0] if right[1] is None else right[1]
                miss = e4 if right[1] is None else e3
                values[miss] = -left[0] * left[1] / (kappa * have)
        if not progress:
            for e in order:
                if values[e] is None:
                    values[e] = ONE
                    break
    for e in order:
        if values[e] is None:
            values[e] = ONE
    for e1, e2, e3, e4, kappa in constraints:
        assert values[e1] * values[e2] == -kappa * values[e3] * values[e4]
    assert all(v != 0 for v in values.values())
    return values


def _t_edge_factory(sign, lam, row, scalar):
    return lambda prefix, suffix, base: _t_edge(sign, lam, row, base,
                                                prefix, suffix, scalar)


def t_complex(sign, base, trunc, dmax=None):
    """The projector resolution at one base: shapes of size d sit in
    degree -d (sign "-") or +d (sign "+"), and every Q box must fit
    under the base, so the complex is finite without any cap."""
    assert sign in ("-", "+")
    dtop = base if dmax is None else min(dmax, base)
    signs = solve_projector_signs(dtop, trunc, sign)
    terms = {}
    layers = {}
    for d in range(dtop + 1):
        layers[d] = sorted(partitions(d))
        deg = -d if sign == "-" else d
        terms[deg] = [(_t_word(lam), 0) for lam in layers[d]]
    diff = {}
    recipes = {}
    for d in range(1, dtop + 1):
        for i, lam in enumerate(layers[d]):
            for r in removable_rows(lam):
                j = layers[d - 1].index(remove_box(lam, r))
                if sign == "-":
                    key = (-d, i, j)
                else:
                    key = (d - 1, j, i)
                maker = _t_edge_factory(sign, lam, r, signs[(lam, r)])
                diff[key] = maker((), (), base)
                recipes[key] = maker
    return Complex(base, trunc, False, terms, diff, recipes=recipes)


def build_operator_complex(which, i, base, trunc, dmax=None):
    """Dispatch on the operator family name."""
    if which == "Psi":
        return c_complex("-", i, base, trunc, False)
    if which == "PsiStar":
        return c_complex("+", i, base, trunc, False)
    if which == "Phi":
        return c_complex("-", i, base, trunc, True)
    if which == "PhiStar":
        return c_complex("+", i, base, trunc, True)
    if which == "Tminus":
        return t_complex("-", base, trunc, dmax=dmax)
    if which == "Tplus":
        return t_complex("+", base, trunc, dmax=dmax)
    raise ValueError("unknown operator %r" % (which,))


# ---------------------------------------------------------------------------
# Tensor product of complexes (left factor applied last)


def tensor_complexes(C, D):
    """Total complex of the composite functor C after D.

    Summand words concatenate as C-word + D-word and degrees add.  The
    right factor's components are rebuilt inside the ambient word via
    the stored edge recipes; in the untwisted flavor they are scaled by
    (-1)^(left degree), while in the twisted flavor the sign emerges
    from sliding the odd edge past the odd prefix, which is exactly
    what makes the cross terms of d^2 cancel.
    """
    mid_level = D.output_level()
    assert C.twisted == D.twisted
    assert mid_level is None or C.base == mid_level, \
        "left factor must live at the right factor's output level"
    base, trunc, twisted = D.base, D.trunc, D.twisted
    if mid_level is None or not C.degrees():
        return zero_complex(base, trunc, twisted)
    for (deg, i, j) in C.diff:
        assert (deg, i, j) in C.recipes, "left factor lost its edge recipes"
    for (deg, i, j) in D.diff:
        assert (deg, i, j) in D.recipes, "right factor lost its edge recipes"
    terms = {}
    pos = {}
    for p in C.degrees():
        for q in D.degrees():
            for ci, (wc, sc) in enumerate(C.terms[p]):
                if word_levels(wc, mid_level) is None:
                    continue
                for di, (wd, sd) in enumerate(D.terms[q]):
                    lst = terms.setdefault(p + q, [])
                    pos[(p, ci, q, di)] = len(lst)
                    lst.append((wc + wd, sc + sd))
    diff = {}
    recipes = {}
    for (p, ci, cj), f in C.diff.items():
        rec = C.recipes[(p, ci, cj)]
        for q in D.degrees():
            for di, (wd, sd) in enumerate(D.terms[q]):
                src = (p, ci, q, di)
                tgt = (p + 1, cj, q, di)
                if src not in pos or tgt not in pos:
                    continue
                g = rec((), wd, base)
                key = (p + q, pos[src], pos[tgt])
                diff[key] = g
                recipes[key] = _suffix_recipe(rec, wd)
    for (q, di, dj), f in D.diff.items():
        rec = D.recipes[(q, di, dj)]
        for p in C.degrees():
            sign = Fraction(1) if twisted else Fraction((-1) ** (p & 1))
            for ci, (wc, sc) in enumerate(C.terms[p]):
                src = (p, ci, q, di)
                tgt = (p, ci, q + 1, dj)
                if src not in pos or tgt not in pos:
                    continue
                g = rec(wc, (), base)
                if sign != 1:
                    g = mor_scale(g, sign)
                key = (p + q, pos[src], pos[tgt])
                diff[key] = g
                recipes[key] = _prefix_recipe(rec, wc, sign)
    return Complex(base, trunc, twisted, terms, diff, recipes=recipes)


def _suffix_recipe(rec, wd):
    return lambda prefix, suffix, base: rec(prefix, wd + suffix, base)


def _prefix_recipe(rec, wc, sign):
    if sign == 1:
        return lambda prefix, suffix, base: rec(prefix + wc, suffix, base)
    return lambda prefix, suffix, base: mor_scale(
        rec(prefix + wc, suffix, base), sign)


def tensor_many(factors):
    out = factors[0]
    for f in factors[1:]:
        out = tensor_complexes(out, f)
    return out


# ---------------------------------------------------------------------------
# Chain maps and cones


class ChainMap:
    """Degreewise components between two complexes over one base.

    comps maps (degree, src index, tgt index) -> Mor, where the source
    summand sits in ``src`` at that degree and the target in ``tgt``.
    Commutation with both differentials is asserted exactly.
    """

    def __init__(self, src, tgt, comps, check=True):
        assert src.base == tgt.base and src.twisted == tgt.twisted
        assert src.trunc == tgt.trunc
        self.src = src
        self.tgt = tgt
        self.comps = {k: f for k, f in comps.items() if not f.is_zero()}
        if check:
            self.validate()

    def validate(self):
        for (deg, i, j), f in self.comps.items():
            word, s = self.src.terms[deg][i]
            word2, s2 = self.tgt.terms[deg][j]
            assert f.src_word == word and f.tgt_word == word2
            want = (s + s2) & 1 if self.src.twisted else 0
            assert f.parity == want
        # d_tgt f = f d_src, checked per (source summand, target summand)
        for deg in set(self.src.terms) | set(self.tgt.terms):
            for i in range(len(self.src.summands(deg))):
                for j in range(len(self.tgt.summands(deg + 1))):
                    pieces = []
                    for k in range(len(self.tgt.summands(deg))):
                        f = self.comps.get((deg, i, k))
                        d = self.tgt.diff.get((deg, k, j))
                        if f is not None and d is not None:
                            pieces.append((compose(d, f), 1))
                    for k in range(len(self.src.summands(deg + 1))):
                        d = self.src.diff.get((deg, i, k))
                        f = self.comps.get((deg + 1, k, j))
                        if f is not None and d is not None:
                            pieces.append((compose(f, d), -1))
                    if pieces:
                        assert mor_sum(pieces).is_zero(), \
                            "components do not commute with the differentials"


def cone(f):
    """Cone(f: A -> B): A shifted left one step on top of B."""
    A, B = f.src, f.tgt
    base, trunc, twisted = A.base, A.trunc, A.twisted
    terms = {}
    where = {}
    for deg in A.degrees():
        lst = terms.setdefault(deg - 1, [])
        for i, (w, s) in enumerate(A.terms[deg]):
            where[("A", deg, i)] = len(lst)
            lst.append((w, s))
    for deg in B.degrees():
        lst = terms.setdefault(deg, [])
        for i, (w, s) in enumerate(B.terms[deg]):
            where[("B", deg, i)] = len(lst)
            lst.append((w, s))
    diff = {}
    for (deg, i, j), g in A.diff.items():
        key = (deg - 1, where[("A", deg, i)], where[("A", deg + 1, j)])
        diff[key] = mor_scale(g, -1)
    for (deg, i, j), g in B.diff.items():
        key = (deg, where[("B", deg, i)], where[("B", deg + 1, j)])
        diff[key] = g
    for (deg, i, j), g in f.comps.items():
        key = (deg - 1, where[("A", deg, i)], where[("B", deg, j)])
        diff[key] = g
    return Complex(base, trunc, twisted, terms, diff)


# ---------------------------------------------------------------------------
# Gaussian elimination down to the additive minimal form
#
# The working state keeps every summand as a slice: an explicit basis of
# a subbimodule of one word's stage, with parity-homogeneous vectors.
# Differential components are sparse coordinate matrices between slice
# bases, mat[src index] = {tgt index: coeff}.  A cancellation move picks
# a component, splits off its invertible part with an equivariant
# von Neumann inverse, cancels that part, and corrects the parallel
# components; the kept kernels stay action stable, so the state is a
# complex of subbimodules throughout.


def _mcompose(B, A):
    out = {}
    for p, col in A.items():
        acc = {}
        for k, c in col.items():
            vec_iadd(acc, B.get(k, {}), c)
        if acc:
            out[p] = acc
    return out


def _mat_clean(F):
    return {p: col for p, col in ((p, vec_clean(c)) for p, c in F.items())
            if col}


def _mat_rank(F):
    return rank_of(list(F.values()))


class Slice:
    """A summand of the working complex: a based subbimodule of a word's
    stage together with the super shift it carries."""

    __slots__ = ("word", "sshift", "st", "basis", "pars", "_solver", "_acts")

    def __init__(self, word, sshift, st, basis=None):
        self.word = word
        self.sshift = sshift
        self.st = st
        if basis is None:
            basis = [{lab: ONE} for lab in st.labels]
        self.basis = basis
        self.pars = []
        for v in basis:
            ps = {st.parity(lab) for lab in v}
            assert len(ps) == 1, "slice basis vector mixes parities"
            self.pars.append(ps.pop())
        self._solver = None
        self._acts = None

    @property
    def dim(self):
        return len(self.basis)

    @property
    def full(self):
        return self.dim == self.st.dim

    def graded(self):
        even = self.pars.count(0)
        return (even, self.dim - even)

    def solver(self):
        if self._solver is None:
            self._solver = SpanSolver()
            for v in self.basis:
                self._solver.add(v)
            assert self._solver.rank == self.dim, "slice basis is dependent"
        return self._solver

    def actions(self):
        """Coordinate matrices (odd flag, matrix) of the algebra
        generators, left then right, in a fixed shared order."""
        if self._acts is not None:
            return self._acts
        st = self.st
        gens = [("L", g) for g in left_generators(st.level, st.twisted)]
        gens += [("R", g) for g in left_generators(st.base_level, st.twisted)]
        solver = self.solver()
        acts = []
        for side, g in gens:
            odd = popcount(g[0]) & 1 if side == "L" else 0
            cols = {}
            for p, v in enumerate(self.basis):
                w = {}
                for lab, c in v.items():
                    img = (st.left_term(g, lab) if side == "L"
                           else st.right_term(lab, g))
                    vec_iadd(w, img, c)
                coeffs = solver.express(w)
                assert coeffs is not None, "slice is not action stable"
                coeffs = vec_clean(coeffs)
                if coeffs:
                    cols[p] = coeffs
            acts.append((odd, cols))
        self._acts = acts
        return acts

    def sub(self, vectors):
        """The slice spanned by coordinate vectors over this basis."""
        basis = []
        for cv in vectors:
            v = {}
            for p, c in cv.items():
                vec_iadd(v, self.basis[p], c)
            basis.append(v)
        return Slice(self.word, self.sshift, self.st, basis)

    def label(self):
        tag = format_word(self.word, self.sshift)
        if not self.full:
            tag = "%s|%d" % (tag, self.dim)
        return tag


def _hom_rows(S, T, eps):
    """Linear constraints for matrices G: S -> T with
    G(a m b) = (-1)^(eps|a|) a G(m) b, over unknown keys (p, r) in the
    parity sector T.pars[r] == S.pars[p] xor eps."""

    def ok(p, r):
        return T.pars[r] == S.pars[p] ^ eps

    keys = [(p, r) for p in range(S.dim) for r in range(T.dim) if ok(p, r)]
    rows = []
    for (oddS, AS), (oddT, AT) in zip(S.actions(), T.actions()):
        sgn = -1 if eps and oddS else 1
        ATrow = {}
        for r2, col in AT.items():
            for r, c in col.items():
                ATrow.setdefault(r, {})[r2] = c
        for p in range(S.dim):
            for r in range(T.dim):
                if T.pars[r] != S.pars[p] ^ oddS ^ eps:
                    continue
                eq = {}
                for p2, c in AS.get(p, {}).items():
                    eq[(p2, r)] = eq.get((p2, r), ZERO) + c
                for r2, c in ATrow.get(r, {}).items():
                    eq[(p, r2)] = eq.get((p, r2), ZERO) - sgn * c
                eq = vec_clean(eq)
                if eq:
                    rows.append(eq)
        assert oddS == oddT
    return keys, rows


def slice_hom_dims(S, T):
    """(even, odd) dimensions of the morphism space S -> T, the super
    shifts of the two slices folded in."""
    out = []
    for eps in (0, 1):
        keys, rows = _hom_rows(S, T, eps)
        out.append(len(keys) - rank_of(rows))
    if (S.sshift + T.sshift) % 2:
        out.reverse()
    return tuple(out)


def _von_neumann(M, N, F, pg):
    """An equivariant G: N -> M with F G F = F, as a coordinate matrix.

    Unknowns are the entries of G in the parity-pg sector; the linear
    system couples the intertwining law with F G F = F, and a solution
    exists because the bimodule category is semisimple.
    """
    keys, eqs = _hom_rows(N, M, pg)
    keyset = set(keys)
    eqs = list(eqs)
    rhs = [ZERO] * len(eqs)
    # (F G F)[c][r] = sum_{q,p} F[c][q] F[p][r] G[q][p]
    for c in range(M.dim):
        Fc = F.get(c, {})
        if not Fc:
            continue
        for r in range(N.dim):
            eq = {}
            for q, cq in Fc.items():
                for p in range(M.dim):
                    c2 = F.get(p, {}).get(r)
                    if c2 and (q, p) in keyset:
                        eq[(q, p)] = eq.get((q, p), ZERO) + cq * c2
            eq = vec_clean(eq)
            b = Fc.get(r, ZERO)
            if eq or b:
                eqs.append(eq)
                rhs.append(b)
    sol = solve_linear(eqs, rhs)
    assert sol is not None, "no equivariant splitting found"
    G = {}
    for (q, p), c in sol.items():
        if c:
            G.setdefault(q, {})[p] = Fraction(c)
    return G


def _matrix_kernel(F, dim_src):
    """Coordinate kernel basis of F, unconstrained columns included."""
    eqs = {}
    seen = set()
    for p, col in F.items():
        seen.add(p)
        for r, c in col.items():
            eqs.setdefault(r, {})[p] = c
    sols = kernel_basis(list(eqs.values()))
    out = [vec_clean(s) for s in sols]
    for p in range(dim_src):
        if p not in seen:
            out.append({p: ONE})
    return out


def _column_space(F, dim_src):
    """Pivot columns p and their images, in column order."""
    sp = SpanSolver()
    cols = []
    for p in range(dim_src):
        col = F.get(p, {})
        if col and sp.add(col):
            cols.append((p, dict(col)))
    return cols


def _coord_inverse(F, dim):
    """Inverse of an invertible coordinate matrix, same convention."""
    rows = list(range(dim))
    mat = {r: {} for r in rows}
    for p, col in F.items():
        for r, c in col.items():
            mat[r][p] = c
    inv = invert_matrix(mat, rows, rows)
    out = {}
    for p, row in inv.items():
        for q, c in row.items():
            if c:
                out.setdefault(q, {})[p] = c
    return out


def _express_maker(vectors, dim):
    """Coefficient extractor over a full coordinate basis ``vectors``."""
    mat = {r: {} for r in range(dim)}
    for k, v in enumerate(vectors):
        for r, c in v.items():
            mat[r][k] = c
    inv = invert_matrix(mat, list(range(dim)), list(range(dim)))

    def express(v):
        out = {}
        for k, row in inv.items():
            s = sum((c * v[r] for r, c in row.items() if r in v), ZERO)
            if s:
                out[k] = s
        return out

    return express


class _State:
    """Mutable elimination state of one complex."""

    def __init__(self, C):
        self.base = C.base
        self.trunc = C.trunc
        self.twisted = C.twisted
        self.terms = {}
        for deg in C.degrees():
            lst = []
            for word, s in C.terms[deg]:
                lst.append(Slice(word, s, stage(word, C.base, C.twisted)))
            self.terms[deg] = lst
        self.comps = {}
        for (deg, i, j), m in C.diff.items():
            src = self.terms[deg][i]
            tgt = self.terms[deg + 1][j]
            sidx = {lab: p for p, lab in enumerate(src.st.labels)}
            tidx = {lab: r for r, lab in enumerate(tgt.st.labels)}
            mat = {}
            for lab, row in m.mat.items():
                col = {tidx[lab2]: c for lab2, c in row.items() if c}
                if col:
                    mat[sidx[lab]] = col
            if mat:
                self.comps[(deg, i, j)] = mat
        self.journal = []

    def degrees(self):
        return sorted(d for d in self.terms if self.terms[d])

    def dims(self):
        return {d: [(s.dim, s.label()) for s in self.terms[d]]
                for d in self.degrees()}

    def pretty(self):
        degs = self.degrees()
        if not degs:
            return "0"
        bits = []
        for d in degs:
            bits.append("(+)".join("%s[%d]" % (s.label(), s.dim)
                                   for s in self.terms[d]) + "@%d" % d)
        return "[" + " -> ".join(bits) + "]"

    def check_d2(self):
        acc = {}
        for (deg, i, j), F in self.comps.items():
            for (deg2, j2, k), G in self.comps.items():
                if deg2 == deg + 1 and j2 == j:
                    acc.setdefault((deg, i, k), []).append(_mcompose(G, F))
        for key, mats in acc.items():
            tot = {}
            for m in mats:
                for p, col in m.items():
                    vec_iadd(tot.setdefault(p, {}), col)
            assert not _mat_clean(tot), "differential lost d^2 = 0"

    def find_pivot(self):
        """(key, invertible) per the fixed order: plain cancellations by
        (degree, source dimension, indices), then any nonzero component
        in the same order for a deep move."""
        plain = []
        deep = []
        for key in sorted(self.comps):
            deg, i, j = key
            F = self.comps[key]
            if not F:
                continue
            M = self.terms[deg][i]
            N = self.terms[deg + 1][j]
            order = (deg, M.dim, i, j)
            if M.dim == N.dim and _mat_rank(F) == M.dim:
                plain.append((order, key))
            else:
                deep.append((order, key))
        if plain:
            return min(plain)[1], True
        if deep:
            return min(deep)[1], False
        return None, None

    def move(self, key, invertible):
        deg, i, j = key
        F = self.comps.pop(key)
        M = self.terms[deg][i]
        N = self.terms[deg + 1][j]
        pg = (M.sshift + N.sshift) & 1 if self.twisted else 0
        if invertible:
            # whole pair cancels: phi is F itself in the standard bases
            im_m = [{p: ONE} for p in range(M.dim)]
            ker_m, ker_n = [], []
            phi_inv = _coord_inverse(F, M.dim)
            express_m = None
            express_n = dict
            rank = M.dim
        else:
            G = _von_neumann(M, N, F, pg)
            e1 = _mat_clean(_mcompose(G, F))
            e2 = _mat_clean(_mcompose(F, G))
            im_m = [col for _, col in _column_space(e1, M.dim)]
            im_n = [col for _, col in _column_space(e2, N.dim)]
            ker_m = _matrix_kernel(e1, M.dim)
            ker_n = _matrix_kernel(e2, N.dim)
            rank = len(im_m)
            assert rank == len(im_n) == _mat_rank(F)
            assert rank + len(ker_m) == M.dim
            assert rank + len(ker_n) == N.dim
            express_m = _express_maker(im_m + ker_m, M.dim)
            express_n = _express_maker(im_n + ker_n, N.dim)
            # phi = F restricted to the image summands, in their bases
            phi = {}
            for k, v in enumerate(im_m):
                w = {}
                for p, c in v.items():
                    vec_iadd(w, F.get(p, {}), c)
                coeffs = express_n(w)
                assert all(kk < rank for kk in coeffs), \
                    "pivot block is not aligned with the splitting"
                if coeffs:
                    phi[k] = coeffs
            phi_inv = _coord_inverse(phi, rank)
            for v in ker_m:
                w = {}
                for p, c in v.items():
                    vec_iadd(w, F.get(p, {}), c)
                assert not vec_clean(w), "component acts on its kernel"

        def im_rows(mat):
            out = {}
            for p, col in mat.items():
                cf = express_n(col)
                red = {k: c for k, c in cf.items() if k < rank}
                if red:
                    out[p] = red
            return out

        def ker_rows(mat, express, r):
            out = {}
            for p, col in mat.items():
                cf = express(col)
                red = {k - r: c for k, c in cf.items() if k >= r}
                if red:
                    out[p] = red
            return out

        M2 = M.sub(ker_m) if ker_m else None
        N2 = N.sub(ker_n) if ker_n else None
        new_comps = {}
        corrections = {}
        for okey in sorted(self.comps):
            d2, i2, j2 = okey
            C = self.comps[okey]
            if d2 == deg and j2 == j:
                # X -> N: keep the kernel rows, correct with the image rows
                if N2 is not None:
                    kr = ker_rows(C, express_n, rank)
                    if kr:
                        new_comps[(d2, i2, ("N2",))] = kr
                a1 = im_rows(C)
                if a1:
                    corrections.setdefault("a", {})[i2] = a1
            elif d2 == deg + 1 and i2 == j:
                # N -> Z: restrict to the kernel summand
                if N2 is None:
                    continue
                cols = {}
                for k, v in enumerate(ker_n):
                    w = {}
                    for q, c in v.items():
                        vec_iadd(w, C.get(q, {}), c)
                    w = vec_clean(w)
                    if w:
                        cols[k] = w
                if cols:
                    new_comps[(d2, ("N2",), j2)] = cols
            elif d2 == deg and i2 == i:
                # M -> Y: kernel columns kept, image columns correct
                b1 = {}
                for k, v in enumerate(im_m):
                    w = {}
                    for p, c in v.items():
                        vec_iadd(w, C.get(p, {}), c)
                    w = vec_clean(w)
                    if w:
                        b1[k] = w
                if b1:
                    corrections.setdefault("b", {})[j2] = b1
                if M2 is not None:
                    cols = {}
                    for k, v in enumerate(ker_m):
                        w = {}
                        for p, c in v.items():
                            vec_iadd(w, C.get(p, {}), c)
                        w = vec_clean(w)
                        if w:
                            cols[k] = w
                    if cols:
                        new_comps[(d2, ("M2",), j2)] = cols
            elif d2 == deg - 1 and j2 == i:
                # W -> M: keep the kernel rows
                if M2 is not None:
                    kr = ker_rows(C, express_m, rank)
                    if kr:
                        new_comps[(d2, i2, ("M2",))] = kr
            else:
                new_comps[okey] = C
        for i2, a1 in corrections.get("a", {}).items():
            for j2, b1 in corrections.get("b", {}).items():
                delta = _mcompose(b1, _mcompose(phi_inv, a1))
                cur = dict(new_comps.get((deg, i2, j2), {}))
                for p, col in delta.items():
                    vec_iadd(cur.setdefault(p, {}), col, Fraction(-1))
                cur = _mat_clean(cur)
                if cur:
                    new_comps[(deg, i2, j2)] = cur
                else:
                    new_comps.pop((deg, i2, j2), None)
        # reindex the two touched degrees
        remap_src = {}
        lst = []
        for i2, s in enumerate(self.terms[deg]):
            if i2 == i:
                if M2 is not None:
                    remap_src[("M2",)] = len(lst)
                    lst.append(M2)
            else:
                remap_src[i2] = len(lst)
                lst.append(s)
        self.terms[deg] = lst
        remap_tgt = {}
        lst = []
        for j2, s in enumerate(self.terms[deg + 1]):
            if j2 == j:
                if N2 is not None:
                    remap_tgt[("N2",)] = len(lst)
                    lst.append(N2)
            else:
                remap_tgt[j2] = len(lst)
                lst.append(s)
        self.terms[deg + 1] = lst
        final = {}
        for (d2, i2, j2), C in new_comps.items():
            if d2 == deg:
                i2 = remap_src[i2]
            if d2 == deg - 1:
                j2 = remap_src[j2]
            if d2 == deg + 1:
                i2 = remap_tgt[i2]
            if d2 == deg:
                j2 = remap_tgt[j2]
            final[(d2, i2, j2)] = C
        self.comps = final
        self.journal.append({
            "kind": "plain" if invertible else "deep",
            "degree": deg,
            "source": M.label(),
            "target": N.label(),
            "rank": rank,
            "dims": (M.dim, N.dim),
            "state": self.pretty(),
        })


class Minimal:
    """Zero-differential representative of a complex, with the move
    journal that produced it."""

    def __init__(self, base, trunc, twisted, terms, journal, source=None):
        self.base = base
        self.trunc = trunc
        self.twisted = twisted
        self.terms = {d: lst for d, lst in terms.items() if lst}
        self.journal = journal
        self.source = source

    def degrees(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def graded_dims(self):
        """{degree: (even, odd)} with the super shifts folded in."""
        out = {}
        for d, lst in self.terms.items():
            e = o = 0
            for s in lst:
                se, so = s.graded()
                if s.sshift % 2:
                    se, so = so, se
                e += se
                o += so
            out[d] = (e, o)
        return out

    def pretty(self):
        if self.is_zero():
            return "0"
        bits = []
        for d in self.degrees():
            names = []
            for s in self.terms[d]:
                names.append(classify_slice(s) or
                             "%s[%d]" % (s.label(), s.dim))
            bits.append("(+)".join(names) + "@%d" % d)
        return "[" + " -> ".join(bits) + "]"


def gaussian_eliminate(C, check=True):
    """Cancel invertible pieces of the differential until none remain.

    The pivot order is fixed: lowest cohomological degree first, then
    smallest source dimension, whole invertible components before
    partial ones.  Every move preserves d^2 = 0, checked when asked.
    """
    st = _State(C)
    if check:
        st.check_d2()
    while True:
        key, invertible = st.find_pivot()
        if key is None:
            break
        st.move(key, invertible)
        if check:
            st.check_d2()
    assert not st.comps, "elimination left a nonzero differential"
    return Minimal(st.base, st.trunc, st.twisted,
                   {d: lst for d, lst in st.terms.items()},
                   st.journal, source=C)


def minimize(X, check=True):
    if isinstance(X, Minimal):
        return X
    return gaussian_eliminate(X, check=check)


def homology_dims(C):
    """Total homology dimension per degree, straight from the ranks."""
    st = C if isinstance(C, _State) else _State(C)
    dims = {d: sum(s.dim for s in st.terms[d]) for d in st.terms}
    stacked = {}
    for (deg, i, j), F in st.comps.items():
        for p, col in F.items():
            v = stacked.setdefault(deg, {}).setdefault((i, p), {})
            for r, c in col.items():
                v[(j, r)] = c
    ranks = {d: rank_of(list(cols.values())) for d, cols in stacked.items()}
    out = {}
    for d, n in dims.items():
        h = n - ranks.get(d, 0) - ranks.get(d - 1, 0)
        if h:
            out[d] = h
    return out


def _full_slice(word, sshift, base, twisted):
    st = stage(word, base, twisted)
    assert st is not None and st.dim
    return Slice(word, sshift, st)


def _degree_isomorphic(SA, SB):
    """Whether two lists of slices have isomorphic direct sums.

    Graded dimensions must agree, and the morphism-space dimensions
    hom(A, A), hom(A, B), hom(B, B) must agree as (even, odd) pairs;
    in a semisimple category that pins the class of the sum exactly.
    """

    def folded(lst):
        e = o = 0
        for s in lst:
            se, so = s.graded()
            if s.sshift % 2:
                se, so = so, se
            e += se
            o += so
        return (e, o)

    if folded(SA) != folded(SB):
        return False
    if not SA:
        return True
    lvl = {s.st.level for s in SA} | {s.st.level for s in SB}
    if len(lvl) != 1:
        return False

    def pairsum(L1, L2):
        e = o = 0
        for s1 in L1:
            for s2 in L2:
                he, ho = slice_hom_dims(s1, s2)
                e += he
                o += ho
        return (e, o)

    haa = pairsum(SA, SA)
    hab = pairsum(SA, SB)
    if haa != hab:
        return False
    return hab == pairsum(SB, SB)


def homotopy_equivalent(A, B, check=True):
    """Minimize both sides and compare them degree by degree."""
    MA, MB = minimize(A, check=check), minimize(B, check=check)
    assert MA.base == MB.base and MA.twisted == MB.twisted
    for d in sorted(set(MA.degrees()) | set(MB.degrees())):
        if not _degree_isomorphic(MA.terms.get(d, []), MB.terms.get(d, [])):
            return False
    return True


def _classify_candidates(level, base, twisted):
    """Small named words with the right output level."""
    cands = []
    k = level - base
    if k == 0:
        cands.append(())
    if k > 0:
        cands.append((p_letter((k,)),))
        if k >= 2:
            cands.append((p_letter((1,) * k),))
    if k < 0:
        cands.append((q_letter((-k,)),))
        if k <= -2:
            cands.append((q_letter((1,) * (-k)),))
    for a in range(1, 4):
        b = a - k
        if b < 1 or a + b > 6:
            continue
        for psh in ((a,), (1,) * a):
            for qsh in ((b,), (1,) * b):
                w = normalize_word((p_letter(psh), q_letter(qsh)))
                if summand_alive(w, base):
                    cands.append(w)
    seen = []
    for w in cands:
        if w not in seen:
            seen.append(w)
    return seen


def classify_slice(S, candidates=None):
    """Display name of a slice when it matches a named word (with a
    super shift), else None."""
    base = S.st.base_level
    twisted = S.st.twisted
    if candidates is None:
        candidates = _classify_candidates(S.st.level, base, twisted)
    shifts = (0, 1) if twisted else (0,)
    for w in candidates:
        st = stage(w, base, twisted)
        if st is None or st.dim != S.dim:
            continue
        for t in shifts:
            T = Slice(w, t, st)
            if _degree_isomorphic([S], [T]):
                return format_word(w, t)
    return None
