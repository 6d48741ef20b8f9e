import itertools

from hypothesis import given, settings, strategies as st

from eqloc.intlin import column_hermite, solve_integer

small = st.integers(-6, 6)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(n))


matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                           min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_hermite_transform(A):
    H, U, pivots = column_hermite(A)
    assert matmul(A, U) == H
    assert abs(det(U)) == 1
    rows = [i for i, _ in pivots]
    cols = [j for _, j in pivots]
    assert cols == list(range(len(cols)))
    assert rows == sorted(set(rows))
    for (i, p) in pivots:
        assert H[i][p] > 0
        assert all(H[k][p] == 0 for k in range(i))
        assert all(H[i][q] == 0 for q in range(p + 1, len(A[0])))


@settings(max_examples=200, deadline=None)
@given(matrices, st.data())
def test_solvable_systems_are_solved(A, data):
    x = data.draw(st.lists(small, min_size=len(A[0]), max_size=len(A[0])))
    b = matvec(A, x)
    y = solve_integer(A, b)
    assert y is not None and matvec(A, y) == b


@settings(max_examples=150, deadline=None)
@given(matrices, st.data())
def test_none_agrees_with_box_search(A, data):
    n = len(A[0])
    b = data.draw(st.lists(st.integers(-8, 8), min_size=len(A), max_size=len(A)))
    y = solve_integer(A, b)
    if y is not None:
        assert matvec(A, y) == b
        return
    if n <= 3:
        for x in itertools.product(range(-12, 13), repeat=n):
            assert matvec(A, x) != b


def test_examples():
    assert solve_integer([[2]], [4]) == [2]
    assert solve_integer([[2]], [3]) is None
    assert solve_integer([[2, 3]], [1]) is not None
    assert solve_integer([[0, 0]], [0]) == [0, 0]
    assert solve_integer([[0, 0]], [1]) is None
    assert solve_integer([], []) == []
