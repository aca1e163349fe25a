"""Julia operator, defect pair, positive/skew split, flip, Halmos, column switch."""

import math

import numpy as np
import pytest

from conftest import stream
from dilatekit import (
    GeneratorSpec,
    NotAContractionError,
    ShapeError,
    adjoint,
    contraction,
    dc_split,
    defect_pair,
    flip,
    frobenius,
    gen_contraction,
    halmos,
    intertwining_residual,
    intertwining_residual_from_split,
    julia,
    julia_column_switched,
    multiply,
    scaled_tol,
    verify_julia,
)

ROOT3_OVER_2 = math.sqrt(3.0) / 2.0


def random_contraction(kind, dim_h, dim_k, seed):
    return gen_contraction(GeneratorSpec(dim_h=dim_h, dim_k=dim_k, kind=kind, seed=seed))


def test_contraction_admission():
    a = contraction(np.zeros((2, 3)))
    assert (a.dim_h, a.dim_k) == (2, 3)
    assert contraction([[0.0, 1.0], [0.0, 0.0]]).norm == pytest.approx(1.0, abs=1e-14)


def test_contraction_rejection_carries_norm():
    with pytest.raises(NotAContractionError) as err:
        contraction([[2.0]])
    assert err.value.norm == pytest.approx(2.0, abs=1e-12)
    assert "2" in str(err.value)


def test_defect_pair_examples():
    pair = defect_pair(contraction(np.zeros((2, 2))))
    assert np.array_equal(pair.s, np.eye(2))
    assert np.array_equal(pair.t, np.eye(2))
    scalar = defect_pair(contraction([[0.5]]))
    assert scalar.s[0, 0] == pytest.approx(ROOT3_OVER_2, abs=1e-15)
    assert scalar.t[0, 0] == pytest.approx(ROOT3_OVER_2, abs=1e-15)


def test_defect_pair_of_unitary_vanishes():
    a = random_contraction("unitary", 5, 5, seed=11)
    pair = defect_pair(a)
    assert not pair.s.any()
    assert not pair.t.any()


def test_defect_pair_invariants():
    s = stream(12)
    for kind in ("generic", "strict", "rank_deficient"):
        a = random_contraction(kind, 6, 4, seed=s.next_uint64())
        pair = defect_pair(a)
        m = a.matrix
        s_sq = np.eye(6) - m @ adjoint(m)
        t_sq = np.eye(4) - adjoint(m) @ m
        assert frobenius(pair.s @ pair.s - s_sq) <= scaled_tol(6, frobenius(s_sq))
        assert frobenius(pair.t @ pair.t - t_sq) <= scaled_tol(4, frobenius(t_sq))
        assert np.array_equal(pair.s, adjoint(pair.s))
        assert np.array_equal(pair.t, adjoint(pair.t))


def test_julia_scalar_is_plane_rotation():
    j = julia(contraction([[0.5]])).to_matrix()
    rotation = np.array([[ROOT3_OVER_2, 0.5], [-0.5, ROOT3_OVER_2]])
    assert np.max(np.abs(j - rotation)) <= 1e-14


def test_julia_of_zero_is_identity_blocks():
    j = julia(contraction(np.zeros((3, 3))))
    assert np.array_equal(j.to_matrix(), np.eye(6))


def test_julia_of_unitary_has_zero_defect_corners():
    a = random_contraction("unitary", 4, 4, seed=13)
    j = julia(a)
    assert not j.tl.any()
    assert not j.br.any()
    assert np.array_equal(j.tr, a.matrix)
    assert np.array_equal(j.bl, -adjoint(a.matrix))


def test_dc_split_scalar_example():
    split = dc_split(contraction([[0.5]]))
    assert np.allclose(split.d, np.diag([ROOT3_OVER_2, ROOT3_OVER_2]), atol=1e-15)
    assert np.array_equal(split.c, np.array([[0.0, 0.5], [-0.5, 0.0]]))


def test_dc_split_of_zero():
    split = dc_split(contraction(np.zeros((2, 2))))
    assert np.array_equal(split.d, np.eye(4))
    assert not split.c.any()


def test_dc_split_sums_to_julia_bit_exactly():
    s = stream(14)
    for kind in ("generic", "strict", "isometry", "rank_deficient"):
        a = random_contraction(kind, 5, 3, seed=s.next_uint64())
        split = dc_split(a)
        assert np.array_equal(split.d + split.c, julia(a).to_matrix())
        # c is skew-adjoint and d Hermitian, both exactly by construction
        assert np.array_equal(split.c, -adjoint(split.c))
        assert np.array_equal(split.d, adjoint(split.d))


def test_verify_julia_scalar():
    report = verify_julia(contraction([[0.5]]))
    assert {c.name for c in report.checks} == {
        "isometry", "coisometry", "split_commutator", "split_squares"
    }
    for check in report.checks:
        assert check.residual <= 1e-12


def test_verify_julia_isometric_column():
    # singular defect: I - A*A is the zero operator here
    report = verify_julia(contraction([[1.0], [0.0]]))
    assert report.passed


def test_verify_julia_random_rectangular():
    a = random_contraction("generic", 8, 5, seed=77)
    report = verify_julia(a)
    assert report.passed
    tol = scaled_tol(13, frobenius(a.matrix))
    assert report.max_residual <= tol


def test_verify_julia_across_kinds():
    s = stream(15)
    cases = [("generic", 7, 2), ("strict", 3, 6), ("unitary", 4, 4),
             ("isometry", 6, 3), ("coisometry", 2, 5), ("rank_deficient", 4, 4)]
    for kind, h, k in cases:
        report = verify_julia(random_contraction(kind, h, k, seed=s.next_uint64()))
        assert report.passed, (kind, h, k)


def test_intertwining_scalar_and_shift():
    assert intertwining_residual(contraction([[0.5]])) <= 1e-15
    # S A = diag(0,1) A = 0 and A T = A diag(1,0) = 0, exactly
    assert intertwining_residual(contraction([[0.0, 1.0], [0.0, 0.0]])) == 0.0


def test_intertwining_random_and_path_agreement():
    s = stream(16)
    a = random_contraction("generic", 12, 7, seed=19)
    assert intertwining_residual(a) <= 19 * 1e-10
    for kind in ("generic", "strict", "isometry", "coisometry"):
        h, k = (9, 4) if kind in ("generic", "strict", "isometry") else (4, 9)
        b = random_contraction(kind, h, k, seed=s.next_uint64())
        direct = intertwining_residual(b)
        via_split = intertwining_residual_from_split(b)
        assert abs(direct - via_split) <= 1e-13
        split = dc_split(b)
        comm = split.d @ split.c - split.c @ split.d
        block = comm[: b.dim_h, b.dim_h:]
        direct_matrix = b.defects.s @ b.matrix - b.matrix @ b.defects.t
        assert frobenius(direct_matrix - block) <= 1e-13


def test_flip_examples():
    assert np.array_equal(flip(1, 1).to_matrix(), np.array([[0.0, 1.0], [1.0, 0.0]]))
    f22 = flip(2, 2).to_matrix()
    assert np.array_equal(f22 @ f22, np.eye(4))
    assert np.array_equal(flip(2, 3).to_matrix() @ flip(3, 2).to_matrix(), np.eye(5))


def test_halmos_scalar_example():
    h = halmos(contraction([[0.5]])).to_matrix()
    expected = np.array([[0.5, ROOT3_OVER_2], [ROOT3_OVER_2, -0.5]])
    assert np.max(np.abs(h - expected)) <= 1e-15


def test_halmos_of_zero_is_flip():
    h = halmos(contraction(np.zeros((3, 3))))
    assert np.array_equal(h.to_matrix(), flip(3, 3).to_matrix())


def test_halmos_of_unitary_is_block_diagonal():
    a = random_contraction("unitary", 3, 3, seed=23)
    h = halmos(a)
    assert np.array_equal(h.tl, a.matrix)
    assert np.array_equal(h.br, -adjoint(a.matrix))
    assert not h.tr.any() and not h.bl.any()


def test_halmos_rejects_rectangular():
    with pytest.raises(ShapeError):
        halmos(contraction(np.zeros((2, 3))))


def test_halmos_factorization_bit_exact():
    s = stream(17)
    for _ in range(50):
        n = s.uniform_int(1, 8)
        a = random_contraction("generic", n, n, seed=s.next_uint64())
        product = multiply(julia(a).to_matrix(), flip(n, n).to_matrix())
        assert np.array_equal(halmos(a).to_matrix(), product)


def test_halmos_factorization_across_instances():
    # independently validated copies recompute their own defect pairs
    a1 = random_contraction("strict", 5, 5, seed=29)
    a2 = contraction(a1.matrix)
    product = multiply(julia(a2).to_matrix(), flip(5, 5).to_matrix())
    assert np.max(np.abs(halmos(a1).to_matrix() - product)) <= 1e-14


def test_column_switched_scalar_matches_halmos():
    a = contraction([[0.5]])
    assert np.array_equal(
        julia_column_switched(a).to_matrix(), halmos(a).to_matrix()
    )


def test_column_switched_zero_rectangular():
    j = julia_column_switched(contraction(np.zeros((2, 3))))
    m = j.to_matrix()
    assert m.shape == (5, 5)
    expected = np.zeros((5, 5))
    expected[:2, 3:] = np.eye(2)
    expected[2:, :3] = np.eye(3)
    assert np.array_equal(m, expected)


def test_column_switched_unitary_and_factorization():
    s = stream(18)
    for h, k in ((4, 6), (6, 4), (1, 5)):
        a = random_contraction("generic", h, k, seed=s.next_uint64())
        m = julia_column_switched(a).to_matrix()
        n = h + k
        assert frobenius(adjoint(m) @ m - np.eye(n)) <= scaled_tol(n, frobenius(a.matrix))
        factor = multiply(julia(a).to_matrix(), flip(h, k).to_matrix())
        assert np.max(np.abs(m - factor)) <= 1e-14
