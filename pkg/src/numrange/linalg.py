"""Dense complex matrix primitives: adjoint, rotated Hermitian part, Hermitian
eigendecomposition and spectral norm.

Everything in this module is a pure function of its inputs; arrays handed in
are never mutated.
"""

import math
from typing import NamedTuple

import numpy as np

from .errors import DimensionTooLarge, NonHermitianInput

MAX_DIM = 256
HERMITIAN_ATOL = 1e-12

# cap on complex128 elements per batched LAPACK call (~64 MB)
_CHUNK_ELEMS = 1 << 22


class HermitianEigen(NamedTuple):
    """Eigenvalues in ascending order; vectors[:, k] pairs with values[k]."""

    values: np.ndarray
    vectors: np.ndarray


def as_matrix(a):
    """Validate a square complex matrix and return it as an (n, n) complex128 array.

    Raises ValueError for non-square or non-finite input and DimensionTooLarge
    above the supported cap of 256.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"expected a square matrix with n >= 1, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise DimensionTooLarge(f"dimension {m.shape[0]} exceeds the supported cap {MAX_DIM}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def adjoint(a):
    """Conjugate transpose A*."""
    return np.conj(as_matrix(a).T)


def rotated_hermitian_part(a, theta):
    """Hermitian part of e^(-i*theta)*A, i.e. (e^(-i*theta)A + e^(i*theta)A*)/2.

    The result is exactly Hermitian in floating point, so it can be fed to
    eig_hermitian without defensive slack.
    """
    a = as_matrix(a)
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    b = np.exp(-1j * theta) * a
    return 0.5 * (b + np.conj(b.T))


def eig_hermitian(h):
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Input must be Hermitian to within 1e-12 entrywise; smaller asymmetry is
    absorbed by symmetrizing, larger raises NonHermitianInput.
    """
    h = as_matrix(h)
    asym = np.max(np.abs(h - np.conj(h.T)))
    if asym > HERMITIAN_ATOL:
        raise NonHermitianInput(f"asymmetry {asym:.3e} exceeds tolerance {HERMITIAN_ATOL:.0e}")
    sym = 0.5 * (h + np.conj(h.T))
    values, vectors = np.linalg.eigh(sym)
    return HermitianEigen(values=values, vectors=vectors)


def spectral_norm(a):
    """Operator norm of A: the largest singular value, via sqrt(lambda_max(A*A))."""
    a = as_matrix(a)
    gram = np.conj(a.T) @ a
    top = np.linalg.eigvalsh(gram)[-1]
    return float(np.sqrt(max(float(top), 0.0)))


def translate_norms(a, shifts):
    """Spectral norms of A + lambda*I for a 1-D array of shifts, batched.

    Evaluation is chunked so the stacked Gram matrices stay within a fixed
    memory budget; results are identical to per-shift spectral_norm calls up
    to LAPACK rounding.
    """
    a = as_matrix(a)
    shifts = np.asarray(shifts, dtype=np.complex128).ravel()
    n = a.shape[0]
    eye = np.eye(n)
    out = np.empty(shifts.size)
    chunk = max(1, _CHUNK_ELEMS // (n * n))
    for start in range(0, shifts.size, chunk):
        lam = shifts[start:start + chunk]
        stack = a[None, :, :] + lam[:, None, None] * eye[None, :, :]
        gram = np.conj(np.swapaxes(stack, -1, -2)) @ stack
        top = np.linalg.eigvalsh(gram)[..., -1]
        out[start:start + lam.size] = np.sqrt(np.maximum(top, 0.0))
    return out
