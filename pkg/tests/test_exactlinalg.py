import pytest
from hypothesis import given
from hypothesis import strategies as st

from oneideal import IntMatrix, cokernel_invariants, smith_normal_form


def snf_contract_holds(m: IntMatrix) -> None:
    snf = smith_normal_form(m)
    assert snf.U @ m @ snf.V == snf.S
    assert abs(snf.U.determinant()) == 1
    assert abs(snf.V.determinant()) == 1
    diag = snf.S.diagonal()
    # off-diagonal zero
    for i in range(snf.S.rows):
        for j in range(snf.S.cols):
            if i != j:
                assert snf.S.at(i, j) == 0
    # non-negative, divisibility chain, zeros trailing
    for d in diag:
        assert d >= 0
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0


def test_identity_is_fixed():
    m = IntMatrix.identity(3)
    snf = smith_normal_form(m)
    assert snf.S == m
    assert snf.U == IntMatrix.identity(3)
    assert snf.V == IntMatrix.identity(3)


def test_zero_one_by_one():
    m = IntMatrix.from_rows([[0]])
    assert smith_normal_form(m).S == m


def test_diag_2_3_becomes_1_6():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    snf = smith_normal_form(m)
    assert snf.S.diagonal() == (1, 6)
    snf_contract_holds(m)


@pytest.mark.parametrize(
    "rows",
    [
        [[0, 0], [0, 0]],
        [[1, 2], [3, 4]],
        [[4, 6], [6, 9]],
        [[-3], [12]],
        [[2, 4, 4], [-6, 6, 12], [10, 4, 16]],
        [[5]],
    ],
)
def test_snf_contract_on_fixed_cases(rows):
    snf_contract_holds(IntMatrix.from_rows(rows))


def test_snf_empty_shapes():
    for rows, cols in [(0, 0), (0, 3), (3, 0)]:
        m = IntMatrix.zeros(rows, cols)
        snf = smith_normal_form(m)
        assert snf.S.rows == rows and snf.S.cols == cols
        assert snf.U @ m @ snf.V == snf.S


@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.data(),
)
def test_snf_contract_random(rows, cols, data):
    entries = data.draw(
        st.lists(
            st.integers(min_value=-20, max_value=20),
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    snf_contract_holds(IntMatrix(rows, cols, tuple(entries)))


def test_cokernel_no_relations():
    assert cokernel_invariants(IntMatrix(2, 0, ())) == (2, [])


def test_cokernel_unimodular_relation():
    assert cokernel_invariants(IntMatrix.from_rows([[1], [0]])) == (1, [])


def test_cokernel_single_column_3_12():
    # Z^2 / <(3,12)> has invariant factor gcd(3,12) = 3 on one generator
    assert cokernel_invariants(IntMatrix.from_rows([[3], [12]])) == (1, [3])


def test_cokernel_drops_unit_factors():
    free, torsion = cokernel_invariants(IntMatrix.from_rows([[1, 0], [0, 4]]))
    assert (free, torsion) == (0, [4])


@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
    st.data(),
)
def test_cokernel_invariant_under_column_permutation_and_zero_columns(rows, cols, data):
    entries = data.draw(
        st.lists(
            st.integers(min_value=-15, max_value=15),
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    m = IntMatrix(rows, cols, tuple(entries))
    base = cokernel_invariants(m)

    perm = data.draw(st.permutations(range(cols)))
    permuted = IntMatrix.from_rows(
        [[m.at(i, p) for p in perm] for i in range(rows)]
    )
    assert cokernel_invariants(permuted) == base

    padded = IntMatrix.from_rows([list(m.row(i)) + [0, 0] for i in range(rows)])
    assert cokernel_invariants(padded) == base
