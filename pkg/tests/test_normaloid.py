import numpy as np
import pytest

from numrange import NotNormaloid, ZeroLambda, ZeroOperator, ZeroSet
from numrange.boundary import boundary_sweep
from numrange.linalg import spectral_norm, translate_norms
from numrange.normaloid import (
    additivity_defect,
    additivity_holds,
    bb_condition,
    classify,
    corollary_sup,
    lemma_translate,
    sup_modulus,
    theorem_witness,
)


def _rng(seed):
    return np.random.default_rng(seed)


def _random_points(rng, size):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def _random_normal_matrix(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, _ = np.linalg.qr(g)
    eigs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return (q * eigs[None, :]) @ np.conj(q.T)


def test_sup_modulus_basic():
    assert sup_modulus([1.0, -2.0, 1j]) == 2.0


def test_lemma_translate_matches_brute_force():
    rng = _rng(40)
    for _ in range(50):
        pts = _random_points(rng, int(rng.integers(1, 20)))
        s = lemma_translate(pts)
        moduli = np.abs(pts)
        k = int(np.argmax(moduli))
        assert s == complex(pts[k])
        lhs = np.max(np.abs(pts + s))
        rhs = sup_modulus(pts) + abs(s)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, rhs)


def test_lemma_translate_tie_break_is_first_index():
    pts = [1.0, -1.0, 1j]
    assert lemma_translate(pts) == 1.0 + 0j


def test_lemma_translate_zero_set_raises():
    with pytest.raises(ZeroSet):
        lemma_translate([0.0, 0.0])


def test_lemma_translate_empty_raises():
    with pytest.raises(ValueError):
        lemma_translate([])


def test_additivity_defect_nonnegative():
    rng = _rng(41)
    for _ in range(20):
        n = int(rng.integers(1, 10))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        lams = _random_points(rng, 32)
        assert np.all(additivity_defect(a, lams) >= -1e-9 * max(1.0, spectral_norm(a)))


def test_additivity_holds_on_normal_ray():
    # for a normal matrix, additivity holds along the ray through a maximal eigenvalue
    rng = _rng(42)
    for _ in range(10):
        a = _random_normal_matrix(rng, int(rng.integers(2, 8)))
        eigs = np.linalg.eigvals(a)
        lam0 = eigs[int(np.argmax(np.abs(eigs)))]
        for t in (0.5, 1.0, 2.0):
            assert additivity_holds(a, t * lam0, 1e-8)


def test_additivity_fails_off_witness_for_shifted_jordan():
    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    for lam in (1.0, -2.0, 1j, 0.3 - 0.4j):
        assert not additivity_holds(a, lam, 1e-9)


def test_additivity_holds_rejects_zero_lambda():
    with pytest.raises(ZeroLambda):
        additivity_holds(np.eye(2), 0.0, 1e-8)


def test_additivity_holds_rejects_bad_tol():
    with pytest.raises(ValueError):
        additivity_holds(np.eye(2), 1.0, -1e-8)


def test_theorem_witness_for_unitary_diagonal():
    a = np.diag([1.0, 1j, -1.0]).astype(complex)
    lam = theorem_witness(a)
    got = translate_norms(a, [lam])[0]
    assert abs(got - (spectral_norm(a) + abs(lam))) < 1e-10


def test_theorem_witness_additivity_on_normal_draws():
    rng = _rng(43)
    for _ in range(15):
        a = _random_normal_matrix(rng, int(rng.integers(2, 9)))
        lam = theorem_witness(a)
        nrm = spectral_norm(a)
        defect = nrm + abs(lam) - translate_norms(a, [lam])[0]
        assert defect <= 1e-7 * max(1.0, nrm)


def test_theorem_witness_rejects_nilpotent():
    with pytest.raises(NotNormaloid):
        theorem_witness(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_theorem_witness_rejects_zero():
    with pytest.raises(ZeroOperator):
        theorem_witness(np.zeros((2, 2)))


def test_corollary_anchor_diag():
    got = corollary_sup(np.diag([1.0, -1.0]).astype(complex))
    assert abs(got - 2.0) < 1e-6


def test_corollary_anchor_jordan():
    # closed form: max over |lam| = 1/2 of the top singular value of J2 + lam
    want = np.sqrt((1.5 + np.sqrt(2.0)) / 2.0)
    got = corollary_sup(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))
    assert abs(got - want) < 1e-6
    assert got < 2.0 - 1e-3


def test_corollary_sup_bounded_by_twice_norm():
    rng = _rng(44)
    for _ in range(15):
        n = int(rng.integers(1, 9))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        nrm = spectral_norm(a)
        sup = corollary_sup(a)
        assert sup <= 2.0 * nrm + 1e-7 * max(1.0, nrm)
        assert sup >= nrm - 1e-9 * max(1.0, nrm)


def test_classify_hermitian_is_normaloid():
    rng = _rng(45)
    for _ in range(10):
        n = int(rng.integers(2, 10))
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = 0.5 * (g + np.conj(g.T))
        report = classify(a)
        assert report.is_normaloid
        assert abs(report.ratio - 1.0) < 1e-8
        assert report.witness is not None
        assert abs(report.corollary_sup - 2.0 * report.norm) < 1e-6 * max(1.0, report.norm)


def test_classify_witness_certifies_additivity():
    rng = _rng(46)
    for _ in range(10):
        a = _random_normal_matrix(rng, int(rng.integers(2, 8)))
        report = classify(a)
        assert report.is_normaloid
        got = translate_norms(a, [report.witness])[0]
        assert abs(got - (report.norm + abs(report.witness))) < 1e-7 * max(1.0, report.norm)


def test_classify_jordan_not_normaloid():
    report = classify(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))
    assert not report.is_normaloid
    assert report.witness is None
    assert abs(report.ratio - 0.5) < 1e-9
    assert report.defect > 0.5


def test_classify_zero_matrix():
    report = classify(np.zeros((3, 3)))
    assert report.norm == 0.0
    assert report.ratio == 1.0
    assert report.is_normaloid
    assert report.witness is None
    assert report.corollary_sup == 0.0
    assert report.defect == 0.0


def test_classify_rejects_bad_tol():
    with pytest.raises(ValueError):
        classify(np.eye(2), tol=0.0)


def test_bb_condition_on_witnesses():
    # additivity at lambda forces norm * lambda/|lambda| into cl W(A)
    rng = _rng(47)
    for _ in range(10):
        a = _random_normal_matrix(rng, int(rng.integers(2, 8)))
        lam = theorem_witness(a)
        assert bb_condition(a, lam)


def test_bb_condition_false_away_from_range():
    # J2 range is the disk of radius 1/2 but the norm is 1, so no direction passes
    a = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    profile = boundary_sweep(a)
    for phi in np.linspace(0.0, 2 * np.pi, 9):
        assert not bb_condition(a, np.exp(1j * phi), profile=profile)


def test_bb_condition_rejects_zero_lambda():
    with pytest.raises(ZeroLambda):
        bb_condition(np.eye(2), 0.0)
