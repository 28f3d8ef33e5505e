"""Finite truncations of bounded complex sequences, their diagonal operators,
and the double-supremum identity sup_{|lambda|<=M} sup_n |x_n + lambda| = 2M.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge, LambdaOutOfDisk

MAX_TERMS = 256
GRID_ANGLES = 64
GRID_RADII = 16
_HOLDS_RTOL = 1e-9
_DISK_SLACK = 1e-12


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of the double-supremum check.

    sup_value is the maximum of sup_n |x_n + lambda| over the polar grid and
    the analytic witness; holds iff |sup_value - 2*m_x| <= 1e-9 * max(1, m_x).
    """

    m_x: float
    sup_value: float
    witness_lambda: complex
    gap: float
    holds: bool


def as_sequence(terms):
    """Validate a nonempty finite complex sequence as a 1-D array."""
    x = np.asarray(terms, dtype=np.complex128).ravel()
    if x.size == 0:
        raise ValueError("sequence must be nonempty")
    if not np.all(np.isfinite(x)):
        raise ValueError("sequence terms must be finite")
    return x


def sup_modulus(terms):
    """M_x = max of |x_n| over the truncation."""
    return float(np.max(np.abs(as_sequence(terms))))


def diagonal_operator(terms):
    """diag(x_1, ..., x_N); normaloid with norm and radius both M_x."""
    x = as_sequence(terms)
    if x.size > MAX_TERMS:
        raise DimensionTooLarge(f"sequence length {x.size} exceeds the supported cap {MAX_TERMS}")
    return np.diag(x)


def translated_sup(terms, lam):
    """sup_n |x_n + lambda|, which equals ||diag(x) + lambda*I||."""
    x = as_sequence(terms)
    return float(np.max(np.abs(x + complex(lam))))


def inequality_check(terms, lam):
    """Check sup_n |x_n + lambda| <= 2*M_x for |lambda| <= M_x.

    Raises LambdaOutOfDisk when lambda leaves the closed disk (slack 1e-12).
    """
    x = as_sequence(terms)
    lam = complex(lam)
    m = sup_modulus(x)
    if abs(lam) > m + _DISK_SLACK:
        raise LambdaOutOfDisk(f"|lambda| = {abs(lam):.12g} exceeds M_x = {m:.12g}")
    return bool(translated_sup(x, lam) <= 2.0 * m + 1e-12)


def verify_main_theorem(terms, angles=GRID_ANGLES, radii=GRID_RADII):
    """Evaluate the double supremum over a polar grid plus the analytic witness.

    The witness is lambda = x_{n*} at the first index attaining M_x; it yields
    sup_n |x_n + lambda| = 2*M_x exactly, so the grid only exercises the
    inequality side.  A zero sequence verifies trivially with sup 0.
    """
    x = as_sequence(terms)
    angles = int(angles)
    radii = int(radii)
    if angles < 1 or radii < 1:
        raise ValueError("polar grid needs at least one angle and one radius")
    m = sup_modulus(x)
    n_star = int(np.argmax(np.abs(x)))
    best_lam = complex(x[n_star])
    best = translated_sup(x, best_lam)
    if m > 0.0:
        r = m * np.arange(1, radii + 1) / radii
        phi = 2.0 * np.pi * np.arange(angles) / angles
        lams = (r[:, None] * np.exp(1j * phi)[None, :]).ravel()
        vals = np.abs(x[None, :] + lams[:, None]).max(axis=1)
        k = int(np.argmax(vals))
        if vals[k] > best:
            best, best_lam = float(vals[k]), complex(lams[k])
    gap = abs(best - 2.0 * m)
    return TheoremVerdict(
        m_x=m,
        sup_value=best,
        witness_lambda=best_lam,
        gap=gap,
        holds=bool(gap <= _HOLDS_RTOL * max(1.0, m)),
    )
