"""Normaloid operators: classification, the finite-compact-set translation
lemma, the norm-additivity characterization and its corollary supremum.

A matrix is normaloid when its numerical radius equals its spectral norm.
Equivalently there is a nonzero scalar with ||A + lambda|| = ||A|| + |lambda|;
the witness constructed here is the maximal-modulus point of cl W(A).
"""

from dataclasses import dataclass

import numpy as np

from .boundary import DEFAULT_SAMPLES, MEMBERSHIP_RTOL, boundary_sweep, membership, membership_mask
from .errors import NotNormaloid, ZeroLambda, ZeroOperator, ZeroSet
from .linalg import as_matrix, spectral_norm, translate_norms

DEFAULT_TOL = 1e-8
LATTICE_DIVISIONS = 32
_ZERO_BAND = 1e-12


@dataclass(frozen=True)
class NormaloidReport:
    """Classification record: norms, verdict, witness and corollary supremum.

    defect is 2*norm - corollary_sup, nonnegative up to rounding and zero
    exactly when the corollary identity holds.
    """

    norm: float
    radius: float
    ratio: float
    is_normaloid: bool
    witness: complex | None
    corollary_sup: float
    defect: float


def as_point_set(points):
    """Validate a nonempty finite set of complex points as a 1-D array."""
    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size == 0:
        raise ValueError("point set must be nonempty")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    return pts


def sup_modulus(points):
    """Supremum modulus |K| = max of |k| over the set."""
    return float(np.max(np.abs(as_point_set(points))))


def lemma_translate(points):
    """A maximal-modulus element s of K, which satisfies |K+s| = |K| + |s|.

    The additivity is an identity by construction (2s lies in K+s).  Ties on
    the maximal modulus resolve to the first element in enumeration order.
    Raises ZeroSet for K = {0}.
    """
    pts = as_point_set(points)
    moduli = np.abs(pts)
    k = int(np.argmax(moduli))
    if moduli[k] == 0.0:
        raise ZeroSet("the translation lemma excludes K = {0}")
    return complex(pts[k])


def additivity_defect(a, lams):
    """||A|| + |lambda| - ||A + lambda*I|| for each lambda, batched.

    Nonnegative by the triangle inequality; zero exactly on additivity
    witnesses.
    """
    a = as_matrix(a)
    lams = np.asarray(lams, dtype=np.complex128).ravel()
    return spectral_norm(a) + np.abs(lams) - translate_norms(a, lams)


def additivity_holds(a, lam, tol):
    """True iff ||A + lambda*I|| >= ||A|| + |lambda| - tol * max(1, ||A||)."""
    lam = complex(lam)
    if lam == 0:
        raise ZeroLambda("additivity quantifies over nonzero scalars")
    tol = float(tol)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a = as_matrix(a)
    norm = spectral_norm(a)
    defect = norm + abs(lam) - spectral_norm(a + lam * np.eye(a.shape[0]))
    return bool(defect <= tol * max(1.0, norm))


def theorem_witness(a, tol=DEFAULT_TOL, samples=DEFAULT_SAMPLES):
    """The additivity witness for a normaloid matrix: the extremal point of cl W(A).

    Raises ZeroOperator for the zero matrix and NotNormaloid when the radius
    falls short of the norm beyond tol * max(1, norm).
    """
    a = as_matrix(a)
    norm = spectral_norm(a)
    profile = boundary_sweep(a, samples)
    scale = max(1.0, norm)
    if profile.radius <= _ZERO_BAND * scale:
        raise ZeroOperator("zero operator admits no nonzero witness")
    if norm - profile.radius > float(tol) * scale:
        raise NotNormaloid(f"radius {profile.radius:.12g} < norm {norm:.12g}")
    return profile.extremal_point


def _interior_lattice(radius):
    # triangular lattice at spacing radius/32 covering the disk |z| <= radius
    if radius <= 0.0:
        return np.empty(0, dtype=np.complex128)
    spacing = radius / LATTICE_DIVISIONS
    dy = spacing * np.sqrt(3.0) / 2.0
    rows = int(np.floor(radius / dy))
    blocks = []
    for i in range(-rows, rows + 1):
        y = i * dy
        offset = 0.0 if i % 2 == 0 else spacing / 2.0
        half = np.sqrt(max(radius * radius - y * y, 0.0))
        j_lo = int(np.ceil((-half - offset) / spacing))
        j_hi = int(np.floor((half - offset) / spacing))
        if j_hi < j_lo:
            continue
        xs = offset + spacing * np.arange(j_lo, j_hi + 1)
        blocks.append(xs + 1j * y)
    if not blocks:
        return np.empty(0, dtype=np.complex128)
    return np.concatenate(blocks)


def _corollary_sup(a, profile, norm):
    candidates = [profile.points, np.array([profile.extremal_point])]
    lattice = _interior_lattice(profile.radius)
    if lattice.size:
        keep = membership_mask(profile, lattice, MEMBERSHIP_RTOL * max(1.0, norm))
        candidates.append(lattice[keep])
    zs = np.concatenate(candidates)
    return float(np.max(translate_norms(a, zs)))


def corollary_sup(a, samples=DEFAULT_SAMPLES):
    """max of ||A + lambda*I|| over sampled cl W(A).

    Candidates are the swept boundary points, the extremal point and a
    membership-filtered triangular lattice filling the interior; all have
    modulus at most w(A) <= ||A||, so the constrained and unconstrained
    suprema coincide.  Equals 2*||A|| exactly when A is normaloid.
    """
    a = as_matrix(a)
    return _corollary_sup(a, boundary_sweep(a, samples), spectral_norm(a))


def classify(a, tol=DEFAULT_TOL, samples=DEFAULT_SAMPLES):
    """Normaloid report for A: verdict at tol * max(1, norm), witness, corollary sup.

    The zero matrix classifies normaloid with no witness (the characterization
    quantifies over nonzero scalars).
    """
    a = as_matrix(a)
    tol = float(tol)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    norm = spectral_norm(a)
    profile = boundary_sweep(a, samples)
    scale = max(1.0, norm)
    verdict = bool(norm - profile.radius <= tol * scale)
    witness = None
    if verdict and profile.radius > _ZERO_BAND * scale:
        witness = profile.extremal_point
    sup = _corollary_sup(a, profile, norm)
    ratio = 1.0 if norm == 0.0 else profile.radius / norm
    return NormaloidReport(
        norm=norm,
        radius=profile.radius,
        ratio=ratio,
        is_normaloid=verdict,
        witness=witness,
        corollary_sup=sup,
        defect=2.0 * norm - sup,
    )


def bb_condition(a, lam, profile=None, samples=DEFAULT_SAMPLES):
    """Necessary condition for additivity at lambda: ||A|| * lambda/|lambda| in cl W(A)."""
    lam = complex(lam)
    if lam == 0:
        raise ZeroLambda("condition is defined for nonzero scalars")
    a = as_matrix(a)
    norm = spectral_norm(a)
    target = norm * lam / abs(lam)
    return membership(a, target, MEMBERSHIP_RTOL * max(1.0, norm), profile=profile, samples=samples)
