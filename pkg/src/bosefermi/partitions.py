"""Integer partitions and related combinatorics.

Partitions are tuples of weakly decreasing positive integers; the empty
partition is ().
"""

from math import factorial


def check_partition(lam):
    lam = tuple(lam)
    assert all(isinstance(a, int) and a > 0 for a in lam), f"bad parts: {lam}"
    assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)), f"not sorted: {lam}"
    return lam


def partitions(n, max_part=None):
    """Yield all partitions of n in reverse lexicographic order."""
    assert n >= 0
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n):
    """Yield partitions of n with all parts distinct."""

    def rec(n, max_part):
        if n == 0:
            yield ()
            return
        for first in range(min(n, max_part), 0, -1):
            for rest in rec(n - first, first - 1):
                yield (first,) + rest

    yield from rec(n, n)


def odd_partitions(n):
    """Yield partitions of n with all parts odd."""
    for lam in partitions(n):
        if all(a % 2 == 1 for a in lam):
            yield lam


def is_strict(lam):
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


def conjugate(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a > i) for i in range(lam[0]))


def z_factor(lam):
    """Size of the centralizer in S_n of a permutation of cycle type lam."""
    mult = {}
    for a in lam:
        mult[a] = mult.get(a, 0) + 1
    z = 1
    for a, m in mult.items():
        z *= a**m * factorial(m)
    return z


def hooks(lam):
    lam = check_partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def dim_irrep(lam):
    """Dimension of the irreducible S_n representation labelled by lam."""
    n = sum(lam)
    prod = 1
    for h in hooks(lam):
        prod *= h
    d, r = divmod(factorial(n), prod)
    assert r == 0
    return d


def contains(mu, lam):
    """Whether the diagram of mu contains the diagram of lam."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if len(lam) > len(mu):
        return False
    return all(m >= l for m, l in zip(mu, lam))


def is_horizontal_strip(mu, lam):
    """mu/lam is a horizontal strip: at most one box added in each column."""
    if not contains(mu, lam):
        return False
    lam_p = lam + (0,) * (len(mu) - len(lam))
    return all(lam_p[i] >= mu[i + 1] for i in range(len(mu) - 1))


def is_vertical_strip(mu, lam):
    """mu/lam is a vertical strip: at most one box added in each row."""
    if not contains(mu, lam):
        return False
    return is_horizontal_strip(conjugate(mu), conjugate(lam) if lam else ())


def add_horizontal_strip(lam, k):
    lam = check_partition(lam)
    return [mu for mu in partitions(sum(lam) + k) if is_horizontal_strip(mu, lam)]


def add_vertical_strip(lam, k):
    lam = check_partition(lam)
    return [mu for mu in partitions(sum(lam) + k) if is_vertical_strip(mu, lam)]


def remove_horizontal_strip(lam, k):
    lam = check_partition(lam)
    if k > sum(lam):
        return []
    return [mu for mu in partitions(sum(lam) - k) if is_horizontal_strip(lam, mu)]


def remove_vertical_strip(lam, k):
    lam = check_partition(lam)
    if k > sum(lam):
        return []
    return [mu for mu in partitions(sum(lam) - k) if is_vertical_strip(lam, mu)]


def removable_rows(lam):
    """0-based row indices whose last box can be removed leaving a partition."""
    lam = check_partition(lam)
    return tuple(r for r in range(len(lam))
                 if r == len(lam) - 1 or lam[r] > lam[r + 1])


def remove_box(lam, row):
    lam = check_partition(lam)
    assert row in removable_rows(lam)
    return tuple(a for a in (lam[:row] + (lam[row] - 1,) + lam[row + 1:]) if a)
