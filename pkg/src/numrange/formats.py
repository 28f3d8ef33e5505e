"""Wire formats: matrix/sequence/points JSON, report and verdict JSON, and the
boundary CSV.

All floats are emitted with 17 significant digits, so values round-trip
exactly and repeated runs produce byte-identical output.  Parsers raise
ValueError on any malformed structure.
"""

import json

import numpy as np

from .linalg import as_matrix
from .normaloid import as_point_set
from .sequences import as_sequence


def fmt(x):
    """17-significant-digit decimal rendering of a float."""
    return format(float(x), ".17g")


def emit_json(value):
    """Render a JSON value with fmt() applied to every float."""
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return fmt(value)
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{emit_json(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(emit_json(v) for v in value) + "]"
    raise TypeError(f"cannot emit {type(value).__name__} as JSON")


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


def _pairs_to_complex(raw, what):
    if not isinstance(raw, list) or not raw:
        raise ValueError(f"{what} must be a nonempty list of [re, im] pairs")
    out = np.empty(len(raw), dtype=np.complex128)
    for i, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in item)
        ):
            raise ValueError(f"{what}[{i}] must be a [re, im] pair of numbers")
        out[i] = complex(float(item[0]), float(item[1]))
    if not np.all(np.isfinite(out)):
        raise ValueError(f"{what} entries must be finite")
    return out


def parse_matrix(obj):
    """Matrix from {"dim": n, "entries": [[re, im], ...]} row-major."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError("matrix dim must be a positive integer")
    entries = _pairs_to_complex(obj.get("entries"), "entries")
    if entries.size != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for dim {dim}, got {entries.size}")
    return as_matrix(entries.reshape(dim, dim))


def dumps_matrix(a):
    a = as_matrix(a)
    obj = {"dim": a.shape[0], "entries": [_pair(z) for z in a.ravel()]}
    return emit_json(obj) + "\n"


def parse_sequence(obj):
    """Sequence from {"terms": [[re, im], ...]}."""
    if not isinstance(obj, dict):
        raise ValueError("sequence JSON must be an object")
    return as_sequence(_pairs_to_complex(obj.get("terms"), "terms"))


def dumps_sequence(terms):
    x = as_sequence(terms)
    return emit_json({"terms": [_pair(z) for z in x]}) + "\n"


def parse_points(obj):
    """Point set from {"points": [[re, im], ...]}."""
    if not isinstance(obj, dict):
        raise ValueError("points JSON must be an object")
    return as_point_set(_pairs_to_complex(obj.get("points"), "points"))


def dumps_report(report):
    obj = {
        "norm": report.norm,
        "radius": report.radius,
        "ratio": report.ratio,
        "is_normaloid": report.is_normaloid,
        "witness": None if report.witness is None else _pair(report.witness),
        "corollary_sup": report.corollary_sup,
        "defect": report.defect,
    }
    return emit_json(obj) + "\n"


def dumps_verdict(verdict):
    obj = {
        "m_x": verdict.m_x,
        "sup_value": verdict.sup_value,
        "witness_lambda": _pair(verdict.witness_lambda),
        "gap": verdict.gap,
        "holds": verdict.holds,
    }
    return emit_json(obj) + "\n"


def dumps_lemma(s, lhs, rhs):
    return emit_json({"s": _pair(s), "lhs": float(lhs), "rhs": float(rhs)}) + "\n"


def boundary_csv(profile):
    """CSV of the sweep: theta, support value, boundary point, one row per sample."""
    lines = ["theta,support,re,im"]
    for t, h, p in zip(profile.thetas, profile.supports, profile.points):
        lines.append(f"{fmt(t)},{fmt(h)},{fmt(p.real)},{fmt(p.imag)}")
    return "\n".join(lines) + "\n"
