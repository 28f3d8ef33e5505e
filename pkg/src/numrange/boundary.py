"""Numerical range of a matrix: support function, boundary sweep, numerical
radius, extremal point and membership test.

The boundary is traced with the standard rotation device: for each angle theta
the largest eigenvalue of the rotated Hermitian part H_theta gives the support
value h(theta), and the corresponding top eigenvector v gives the boundary
point <Av, v>.  The radius max_theta h(theta) is sharpened by a local
golden-section search around the coarse argmax.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ZeroOperator
from .linalg import _CHUNK_ELEMS, as_matrix, eig_hermitian, rotated_hermitian_part, spectral_norm

DEFAULT_SAMPLES = 512
MEMBERSHIP_RTOL = 1e-7
REFINE_XTOL = 1e-10
_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SupportSample:
    """One direction of the support sweep.

    support_value is h(theta) = lambda_max(H_theta); boundary_point is the
    quadratic form <Av, v> at a unit top eigenvector v, a point of W(A) on the
    supporting line.
    """

    theta: float
    support_value: float
    boundary_point: complex


@dataclass(frozen=True)
class NumericalRangeProfile:
    """Sampled support function plus the refined radius and extremal point."""

    thetas: np.ndarray
    supports: np.ndarray
    points: np.ndarray
    radius: float
    theta_star: float
    extremal_point: complex

    @property
    def samples(self):
        return [
            SupportSample(float(t), float(h), complex(p))
            for t, h, p in zip(self.thetas, self.supports, self.points)
        ]


def _rotated_stack(a, thetas):
    phases = np.exp(-1j * np.asarray(thetas, dtype=float))
    b = phases[:, None, None] * a
    return 0.5 * (b + np.conj(np.swapaxes(b, -1, -2)))


def support_values(a, thetas):
    """h(theta) for an array of angles, batched over the eigensolver."""
    a = as_matrix(a)
    thetas = np.asarray(thetas, dtype=float).ravel()
    n = a.shape[0]
    out = np.empty(thetas.size)
    chunk = max(1, _CHUNK_ELEMS // (n * n))
    for start in range(0, thetas.size, chunk):
        block = _rotated_stack(a, thetas[start:start + chunk])
        out[start:start + block.shape[0]] = np.linalg.eigvalsh(block)[..., -1]
    return out


def _phase_fixed(v):
    # first non-negligible component made real positive, for reproducibility
    idx = np.flatnonzero(np.abs(v) > 1e-12)
    k = int(idx[0]) if idx.size else 0
    mod = abs(v[k])
    if mod == 0.0:
        return v
    return v * np.conj(v[k] / mod)


def support_function(a, theta):
    """Support sample of W(A) in direction theta."""
    a = as_matrix(a)
    eig = eig_hermitian(rotated_hermitian_part(a, theta))
    v = _phase_fixed(eig.vectors[:, -1])
    point = complex(np.vdot(v, a @ v))
    return SupportSample(theta=float(theta), support_value=float(eig.values[-1]), boundary_point=point)


def _golden_refine(a, theta0, h0, halfwidth):
    """Maximize h over [theta0 - halfwidth, theta0 + halfwidth].

    Tracks the best point ever evaluated (including theta0), so the result
    never falls below the coarse sweep value even off unimodal brackets.
    """
    def f(t):
        return float(support_values(a, [t])[0])

    lo, hi = theta0 - halfwidth, theta0 + halfwidth
    best_t, best_h = theta0, h0
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    if fc > best_h:
        best_t, best_h = c, fc
    if fd > best_h:
        best_t, best_h = d, fd
    while hi - lo > REFINE_XTOL:
        if fc >= fd:
            hi = d
            d, fd = c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
            if fc > best_h:
                best_t, best_h = c, fc
        else:
            lo = c
            c, fc = d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
            if fd > best_h:
                best_t, best_h = d, fd
    return best_t % _TWO_PI, best_h


def boundary_sweep(a, samples=DEFAULT_SAMPLES):
    """Sweep m uniform angles, then refine the radius around the coarse argmax.

    Ties between equal support maxima resolve to the smallest theta (first
    index).  The extremal point is recomputed at the refined theta_star.
    """
    a = as_matrix(a)
    samples = int(samples)
    if samples < 8:
        raise ValueError("boundary sweep needs at least 8 samples")
    n = a.shape[0]
    thetas = np.arange(samples) * (_TWO_PI / samples)
    supports = np.empty(samples)
    points = np.empty(samples, dtype=np.complex128)
    chunk = max(1, _CHUNK_ELEMS // (n * n))
    for start in range(0, samples, chunk):
        block = _rotated_stack(a, thetas[start:start + chunk])
        vals, vecs = np.linalg.eigh(block)
        top = vecs[:, :, -1]
        av = np.einsum("ij,kj->ki", a, top)
        supports[start:start + block.shape[0]] = vals[:, -1]
        points[start:start + block.shape[0]] = np.einsum("ki,ki->k", np.conj(top), av)
    j = int(np.argmax(supports))
    theta_star, radius = _golden_refine(a, float(thetas[j]), float(supports[j]), _TWO_PI / samples)
    extremal = support_function(a, theta_star).boundary_point
    return NumericalRangeProfile(
        thetas=thetas,
        supports=supports,
        points=points,
        radius=radius,
        theta_star=theta_star,
        extremal_point=extremal,
    )


def numerical_radius(a, samples=DEFAULT_SAMPLES):
    """w(A) = sup of |z| over W(A), computed as max_theta h(theta)."""
    return boundary_sweep(a, samples).radius


def extremal_point(a, samples=DEFAULT_SAMPLES):
    """A point of cl W(A) of maximal modulus w(A).

    Raises ZeroOperator when the radius sits in the zero band
    (<= 1e-12 * max(1, norm)), mirroring the lemma's exclusion of K = {0}.
    """
    a = as_matrix(a)
    profile = boundary_sweep(a, samples)
    if profile.radius <= 1e-12 * max(1.0, spectral_norm(a)):
        raise ZeroOperator("numerical radius is zero; no extremal point")
    return profile.extremal_point


def membership_mask(profile, zs, tol):
    """Vectorized membership of points zs in cl W(A) against a swept profile."""
    zs = np.asarray(zs, dtype=np.complex128).ravel()
    proj = np.real(np.exp(-1j * profile.thetas)[:, None] * zs[None, :])
    return np.all(proj <= profile.supports[:, None] + tol, axis=0)


def membership(a, z, tol=None, profile=None, samples=DEFAULT_SAMPLES):
    """True iff Re(e^(-i*theta) z) <= h(theta) + tol for every swept theta.

    tol defaults to the scale-aware 1e-7 * max(1, norm); a precomputed profile
    can be passed to amortize the sweep across many queries.
    """
    a = as_matrix(a)
    if profile is None:
        profile = boundary_sweep(a, samples)
    if tol is None:
        tol = MEMBERSHIP_RTOL * max(1.0, spectral_norm(a))
    tol = float(tol)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    return bool(membership_mask(profile, [z], tol)[0])
