from fractions import Fraction

from bosefermi.linalg import (
    SpanSolver,
    invert_matrix,
    kernel_basis,
    rank_of,
    solve_linear,
    vec_iadd,
)


def test_vec_iadd_drops_zeros():
    a = {"x": Fraction(1)}
    vec_iadd(a, {"x": Fraction(-1), "y": Fraction(2)})
    assert a == {"y": Fraction(2)}


def test_span_solver_express():
    sp = SpanSolver()
    assert sp.add({"a": 1, "b": 1})
    assert sp.add({"b": 1})
    assert not sp.add({"a": 2, "b": 3})  # dependent on the first two
    combo = sp.express({"a": 3, "b": 5})
    assert combo == {0: Fraction(3), 1: Fraction(2)}
    assert sp.express({"c": 1}) is None
    assert sp.rank == 2


def test_span_solver_reduce_canonical():
    sp = SpanSolver()
    sp.add({"a": 1, "b": 2})
    r1 = sp.reduce({"a": 2, "b": 1})
    r2 = sp.reduce({"b": -3})
    # both differ from the span by the same coset
    assert r1 == r2


def test_rank_of():
    vs = [{"x": 1, "y": 1}, {"y": 1, "z": 1}, {"x": 1, "z": -1}]
    assert rank_of(vs) == 2


def test_kernel_basis():
    # x + y + z = 0, x - y = 0
    eqs = [{"x": 1, "y": 1, "z": 1}, {"x": 1, "y": -1}]
    basis = kernel_basis(eqs)
    assert len(basis) == 1
    sol = basis[0]
    for eq in eqs:
        assert sum(eq.get(k, 0) * v for k, v in sol.items()) == 0


def test_solve_linear():
    eqs = [{"x": 1, "y": 1}, {"x": 1, "y": -1}]
    sol = solve_linear(eqs, [4, 2])
    assert sol == {"x": Fraction(3), "y": Fraction(1)}
    assert solve_linear([{"x": 1}, {"x": 1}], [1, 2]) is None


def test_invert_matrix():
    mat = {"r1": {"c1": 1, "c2": 1}, "r2": {"c1": 0, "c2": 2}}
    inv = invert_matrix(mat, ["r1", "r2"], ["c1", "c2"])
    # c1 = r1 - (1/2) r2, c2 = (1/2) r2
    assert inv["c1"] == {"r1": Fraction(1), "r2": Fraction(-1, 2)}
    assert inv["c2"] == {"r2": Fraction(1, 2)}
