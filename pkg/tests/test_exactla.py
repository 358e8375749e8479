from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfrob.exactla import (
    GF,
    QQ,
    DimensionError,
    FieldMismatchError,
    FpElement,
    Matrix,
    StructuralError,
    Subspace,
    field_from_descriptor,
    image_basis,
    invert,
    kernel_basis,
    kron,
    quotient,
    rank,
    solve_affine,
)

small = st.integers(min_value=-3, max_value=3)
FIELDS = [QQ, GF(5)]


def matrices(rows, cols, field=QQ):
    return st.lists(small, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(field, rows, cols, xs)
    )


shapes = st.tuples(st.integers(1, 4), st.integers(1, 4))


@st.composite
def any_matrix(draw, field=QQ):
    r, c = draw(shapes)
    return draw(matrices(r, c, field))


# -- fields -----------------------------------------------------------------


def test_parse_exact_scalars():
    assert QQ.parse("3") == 3
    assert QQ.parse("-2/6") == Fraction(-1, 3)
    assert GF(7).parse("1/3") == FpElement(5, 7)


@pytest.mark.parametrize("text", ["1/0", "x", "1.5", "", "1/2/3"])
def test_parse_rejects_malformed(text):
    with pytest.raises(StructuralError):
        QQ.parse(text)


def test_fp_rejects_denominator_divisible_by_p():
    with pytest.raises(StructuralError):
        GF(3).parse("1/3")


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        QQ(FpElement(1, 3))
    with pytest.raises(FieldMismatchError):
        GF(5)(FpElement(1, 3))


def test_field_descriptors_round_trip():
    for F in FIELDS:
        assert field_from_descriptor(F.descriptor()) == F
    with pytest.raises(StructuralError):
        field_from_descriptor({"kind": "Fp", "p": 4})


@given(st.integers(0, 6), st.integers(1, 6))
def test_fp_inverse(a, b):
    F = GF(7)
    x, y = F(a), F(b)
    assert (x / y) * y == x
    assert y * y.inverse() == F.one


@given(st.integers(-50, 50), st.integers(1, 20))
def test_format_reparses_to_itself(a, b):
    for F in FIELDS:
        if F.characteristic and b % F.characteristic == 0:
            continue
        s = F.format(F.parse(f"{a}/{b}"))
        assert F.format(F.parse(s)) == s


# -- matrices ---------------------------------------------------------------


def test_shape_errors():
    A = Matrix.identity(QQ, 2)
    with pytest.raises(DimensionError):
        A @ Matrix.identity(QQ, 3)
    with pytest.raises(DimensionError):
        Matrix.from_rows(QQ, [[1, 2], [3]])


def test_kron_index_convention():
    A = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    B = Matrix.from_rows(QQ, [[0, 5], [6, 7]])
    K = kron(A, B)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert K[i * 2 + k, j * 2 + l] == A[i, j] * B[k, l]


@given(any_matrix())
def test_transpose_involution_and_sparse_views(A):
    assert A.T.T == A
    assert Matrix.from_sparse(QQ, A.rows, A.cols, A.sparse_rows()) == A
    assert [A.col_list(j) for j in range(A.cols)] == A.T.to_rows()


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_rank_nullity(field, data):
    A = data.draw(any_matrix(field))
    K = kernel_basis(A)
    assert rank(A) + K.dim == A.cols
    for v in K.vectors():
        assert not any(A.apply(v))
    assert image_basis(A).dim == rank(A)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
def test_invert(field, data):
    n = data.draw(st.integers(1, 4))
    A = data.draw(matrices(n, n, field))
    inv = invert(A)
    if rank(A) < n:
        assert inv is None
    else:
        assert A @ inv == Matrix.identity(field, n)
        assert inv @ A == Matrix.identity(field, n)


@given(matrices(2, 3), matrices(2, 2), matrices(3, 2), matrices(2, 1))
def test_kron_mixed_product(A, B, C, D):
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_matmul_associative(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)


@given(any_matrix(), st.data())
def test_solve_affine(A, data):
    b = data.draw(st.lists(small, min_size=A.rows, max_size=A.rows))
    sol = solve_affine(A, b)
    consistent = rank(A) == rank(Matrix.from_rows(QQ, [r + [x] for r, x in zip(A.to_rows(), b)]))
    if not consistent:
        assert sol is None
        return
    assert A.apply(sol.particular) == [QQ(x) for x in b]
    assert sol.kernel.dim == A.cols - rank(A)


# -- subspaces and quotients ------------------------------------------------


vectors4 = st.lists(st.lists(small, min_size=4, max_size=4), max_size=4)


@given(vectors4, vectors4)
def test_sum_intersection_dimension_formula(xs, ys):
    U = Subspace.span(QQ, 4, xs)
    W = Subspace.span(QQ, 4, ys)
    assert (U + W).dim + U.intersection(W).dim == U.dim + W.dim
    for v in U.intersection(W).vectors():
        assert v in U and v in W


@given(vectors4, st.lists(small, min_size=4, max_size=4))
def test_coordinates_reconstruct(xs, v):
    U = Subspace.span(QQ, 4, xs)
    coords = U.coordinates(v)
    if coords is None:
        assert (U + Subspace.span(QQ, 4, [v])).dim == U.dim + 1
    else:
        assert U.combine(coords) == [QQ(x) for x in v]


@given(vectors4, st.lists(small, min_size=4, max_size=4))
def test_quotient_projection_and_section(xs, v):
    U = Subspace.span(QQ, 4, xs)
    Q = quotient(U)
    assert Q.dim == 4 - U.dim
    assert Q.projection @ Q.section == Matrix.identity(QQ, Q.dim)
    for u in U.vectors():
        assert not any(Q.project(u))
    # v and its lifted class differ by an element of U
    diff = [a - b for a, b in zip(map(QQ, v), Q.lift(Q.project(v)))]
    assert diff in U


def test_canonical_form_is_unique():
    U = Subspace.span(QQ, 3, [[1, 2, 3], [0, 1, 1]])
    W = Subspace.span(QQ, 3, [[1, 3, 4], [2, 4, 6]])
    assert U == W
    assert U.vectors() == W.vectors()
