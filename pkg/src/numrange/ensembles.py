"""Seeded matrix and sequence generators used by property tests and the CLI.

Reproducibility contract: all randomness comes from the Philox4x64-10 counter
stream keyed by the seed (counter starting at zero), consumed through three
fixed transforms:

* uniforms  u = (raw >> 11) * 2^-53, one double per 64-bit word,
* standard normals by Box-Muller pairs, g1 = sqrt(-2 ln(1-u1)) cos(2 pi u2)
  and g2 = sqrt(-2 ln(1-u1)) sin(2 pi u2),
* complex standard normals (g1 + i g2)/sqrt(2),
* uniform disk draws radius*sqrt(u1) * exp(2 pi i u2).

Draw order per kind is documented on generate(); given the same spec the
raw entries are bit-identical across platforms.  QR factors used for the
unitary and normal kinds come from LAPACK and are deterministic per platform.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec

MAX_DIM = 256
KINDS = (
    "ginibre",
    "normal",
    "hermitian",
    "nilpotent_jordan",
    "diagonal",
    "unitary",
    "near_normaloid",
)
_NEAR_NORMALOID_EPS = 1e-6


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    dim: int
    seed: int
    scale: float = 1.0


class PhiloxStream:
    """Philox4x64-10 raw stream with the fixed transforms above."""

    def __init__(self, seed):
        self._bitgen = np.random.Philox(key=seed)

    def uniforms(self, count):
        raw = self._bitgen.random_raw(count)
        return (raw >> np.uint64(11)) * (2.0 ** -53)

    def normals(self, count):
        half = (count + 1) // 2
        u1 = self.uniforms(half)
        u2 = self.uniforms(half)
        r = np.sqrt(-2.0 * np.log1p(-u1))
        g = np.empty(2 * half)
        g[0::2] = r * np.cos(2.0 * np.pi * u2)
        g[1::2] = r * np.sin(2.0 * np.pi * u2)
        return g[:count]

    def complex_normals(self, count):
        g = self.normals(2 * count)
        return (g[0::2] + 1j * g[1::2]) / np.sqrt(2.0)

    def disk(self, count, radius):
        u1 = self.uniforms(count)
        u2 = self.uniforms(count)
        return radius * np.sqrt(u1) * np.exp(2j * np.pi * u2)


def _validate(spec):
    if spec.kind not in KINDS:
        raise InvalidSpec(f"unknown ensemble kind {spec.kind!r}; expected one of {KINDS}")
    _validate_common(spec.dim, spec.seed, spec.scale)


def _validate_common(dim, seed, scale):
    if not isinstance(dim, (int, np.integer)) or isinstance(dim, bool):
        raise InvalidSpec("dim must be an integer")
    if dim < 1 or dim > MAX_DIM:
        raise InvalidSpec(f"dim must lie in [1, {MAX_DIM}], got {dim}")
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise InvalidSpec("seed must be an integer")
    if seed < 0 or seed >= 2 ** 64:
        raise InvalidSpec("seed must be a 64-bit unsigned integer")
    scale = float(scale)
    if not np.isfinite(scale) or scale <= 0.0:
        raise InvalidSpec(f"scale must be positive and finite, got {scale}")


def _phase_fixed_qr(g):
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    mods = np.abs(d)
    safe = np.where(mods > 0.0, mods, 1.0)
    phases = np.where(mods > 0.0, d / safe, 1.0)
    return q * phases[None, :]


def generate(spec):
    """Draw one matrix for the spec; deterministic per (kind, dim, seed, scale).

    Draw order: ginibre consumes dim^2 complex normals; hermitian one ginibre
    block; normal first a ginibre block (unitary factor via phase-fixed QR)
    then dim disk eigenvalues; diagonal dim disk entries; unitary one
    unscaled ginibre block; near_normaloid a normal draw then a ginibre
    perturbation at 1e-6 * scale.  nilpotent_jordan consumes no randomness.
    The unitary kind ignores scale so that U*U = I holds exactly.
    """
    _validate(spec)
    n = int(spec.dim)
    scale = float(spec.scale)
    stream = PhiloxStream(int(spec.seed))
    if spec.kind == "ginibre":
        return scale * stream.complex_normals(n * n).reshape(n, n)
    if spec.kind == "hermitian":
        g = scale * stream.complex_normals(n * n).reshape(n, n)
        return 0.5 * (g + np.conj(g.T))
    if spec.kind == "normal":
        return _normal_draw(stream, n, scale)
    if spec.kind == "nilpotent_jordan":
        j = np.zeros((n, n), dtype=np.complex128)
        idx = np.arange(n - 1)
        j[idx, idx + 1] = scale
        return j
    if spec.kind == "diagonal":
        return np.diag(stream.disk(n, scale))
    if spec.kind == "unitary":
        g = stream.complex_normals(n * n).reshape(n, n)
        return _phase_fixed_qr(g)
    # near_normaloid
    base = _normal_draw(stream, n, scale)
    bump = stream.complex_normals(n * n).reshape(n, n)
    return base + _NEAR_NORMALOID_EPS * scale * bump


def _normal_draw(stream, n, scale):
    g = stream.complex_normals(n * n).reshape(n, n)
    u = _phase_fixed_qr(g)
    z = stream.disk(n, scale)
    return (u * z[None, :]) @ np.conj(u.T)


def generate_sequence(dim, seed, scale=1.0):
    """dim i.i.d. draws from the closed disk of radius scale; deterministic."""
    _validate_common(dim, seed, scale)
    return PhiloxStream(int(seed)).disk(int(dim), float(scale))
