"""Code construction: parameters, rank, encoding, cyclicity, the
message-space shift matrix, and the export schema."""

import numpy as np
import pytest

from hermicode import linalg
from hermicode.agcode import (
    LinearCode,
    build_code,
    check_cyclic,
    encode,
    shift,
    shift_diagonal,
    shift_message_matrix,
    _assert_full_rank,
)
from hermicode.curve import orbit_of
from hermicode.gf import field_for_q
from hermicode.rrspace import basis, evaluate, monomials

GRID = [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (7, 3), (8, 3)]


@pytest.mark.parametrize("q,m", GRID)
def test_code_parameters_and_rank(q, m):
    code = build_code(field_for_q(q), m)
    assert code.n == q * q - 1
    assert code.k == m * (m - 1) // 2 + 1
    assert linalg.rank(code.field, code.rows()) == code.k


def test_full_dimension_grid():
    for q in (3, 4, 5, 7, 8):
        f = field_for_q(q)
        for m in range(2, q):
            code = build_code(f, m)
            assert linalg.rank(f, code.rows()) == m * (m - 1) // 2 + 1


def test_columns_are_basis_evaluations():
    f = field_for_q(4)
    code = build_code(f, 3)
    funcs = basis(f, 3)
    points = orbit_of(code.spec)
    assert points == code.points
    for r, fn in enumerate(funcs):
        for i, pt in enumerate(points):
            assert int(code.gen[r, i]) == evaluate(fn, pt)


def test_encode_zero_and_constant_row():
    f = field_for_q(5)
    code = build_code(f, 3)
    zero = encode(code, [0] * code.k)
    assert zero.weight == 0 and set(zero.symbols) == {0}
    ones = encode(code, [1] + [0] * (code.k - 1))
    assert ones.weight == code.n and set(ones.symbols) == {1}


def test_encode_is_linear_in_scalars():
    f = field_for_q(4)
    code = build_code(f, 3)
    rng = np.random.default_rng(11)
    for _ in range(25):
        msg = [int(x) for x in rng.integers(0, f.order, code.k)]
        w = encode(code, msg)
        for c in f.nonzero():
            scaled = encode(code, [f.mul(c, x) for x in msg])
            assert scaled.symbols == tuple(f.mul(c, s) for s in w.symbols)
            assert scaled.weight == w.weight


def test_encode_length_check():
    code = build_code(field_for_q(3), 2)
    with pytest.raises(ValueError):
        encode(code, [1, 2, 3])


@pytest.mark.parametrize("q,m", GRID)
def test_cyclic(q, m):
    assert check_cyclic(build_code(field_for_q(q), m))


def test_swapped_columns_not_cyclic():
    f = field_for_q(3)
    code = build_code(f, 2)
    perturbed = code.gen.copy()
    perturbed[:, [0, 1]] = perturbed[:, [1, 0]]
    fixture = LinearCode(f, 2, code.spec, perturbed, code.points)
    assert not check_cyclic(fixture)


def test_all_ones_row_is_shift_closed():
    f = field_for_q(3)
    code = build_code(f, 2)
    ones = np.ones((1, code.n), dtype=np.int16)
    fixture = LinearCode(f, 2, code.spec, ones, code.points)
    assert check_cyclic(fixture)


@pytest.mark.parametrize("q,m", GRID)
def test_shift_of_codeword_is_codeword(q, m):
    f = field_for_q(q)
    code = build_code(f, m)
    s_mat = shift_message_matrix(code)
    rng = np.random.default_rng(101)
    for _ in range(100):
        msg = [int(x) for x in rng.integers(0, f.order, code.k)]
        word = encode(code, msg)
        shifted_msg = linalg.mat_vec(
            f, [[s_mat[r][t] for r in range(code.k)] for t in range(code.k)], msg
        )
        assert encode(code, shifted_msg).symbols == shift(word.symbols)
        assert encode(code, shifted_msg).weight == word.weight


@pytest.mark.parametrize("q,m", GRID)
def test_shift_matrix_is_diagonal_with_scaling_eigenvalues(q, m):
    f = field_for_q(q)
    code = build_code(f, m)
    diag = shift_diagonal(code)
    assert diag is not None
    n = f.order - 1
    expected = [1] + [
        f.omega_pow((i + (q + 1) * (j + 1) - m) % n) for (i, j) in monomials(m)
    ]
    assert diag == expected


def test_rank_deficiency_aborts():
    f = field_for_q(3)
    rows = [[1, 2, 3], [1, 2, 3]]
    with pytest.raises(RuntimeError):
        _assert_full_rank(f, rows, "fixture")


def test_export_schema():
    f = field_for_q(3)
    code = build_code(f, 2)
    payload = code.export_dict()
    assert set(payload) == {
        "q", "p", "k_ext", "m", "n", "k", "irreducible", "omega",
        "base_point", "tau", "rows",
    }
    assert payload["q"] == 3 and payload["p"] == 3 and payload["k_ext"] == 1
    assert payload["n"] == 8 and payload["k"] == 2
    assert payload["base_point"] == [code.spec.u, code.spec.v]
    assert payload["rows"] == code.rows()
    assert all(isinstance(x, int) for row in payload["rows"] for x in row)


def test_build_is_deterministic():
    a = build_code(field_for_q(4), 3)
    b = build_code(field_for_q(4), 3)
    assert a.export_dict() == b.export_dict()


def test_build_rejects_bad_m():
    with pytest.raises(ValueError):
        build_code(field_for_q(3), 1)
    with pytest.raises(ValueError):
        build_code(field_for_q(3), 3)
