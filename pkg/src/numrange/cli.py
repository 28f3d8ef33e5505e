"""Command-line frontend.

Subcommands: range, radius, norm, analyze, verify-sequence, lemma, gen.
Exit codes: 0 success (or verified property holds), 1 verified-property
failure, 2 malformed input.  Every flag can also be supplied through an
optional --config JSON file; explicit flags win over config values.
"""

import argparse
import json
import sys

import numpy as np

from . import ensembles, formats, plotting
from .boundary import DEFAULT_SAMPLES, boundary_sweep, numerical_radius
from .errors import NumRangeError
from .linalg import spectral_norm
from .normaloid import DEFAULT_TOL, classify, lemma_translate, sup_modulus
from .sequences import GRID_ANGLES, GRID_RADII, verify_main_theorem

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

_DEFAULTS = {
    "out": None,
    "svg": None,
    "samples": DEFAULT_SAMPLES,
    "tol": DEFAULT_TOL,
    "grid_angles": GRID_ANGLES,
    "grid_radii": GRID_RADII,
    "seed": 0,
    "dim": 2,
    "scale": 1.0,
}


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


class _Options:
    """Flag resolution: explicit CLI value, then config file, then default."""

    def __init__(self, args):
        self.args = args
        self.config = _read_json(args.config) if getattr(args, "config", None) else {}
        if not isinstance(self.config, dict):
            raise ValueError("--config must contain a JSON object")

    def get(self, name):
        explicit = getattr(self.args, name, None)
        if explicit is not None:
            return explicit
        for key in (name, name.replace("_", "-")):
            if key in self.config:
                return self.config[key]
        return _DEFAULTS.get(name)

    def require(self, name):
        value = self.get(name)
        if value is None:
            raise ValueError(f"missing required option --{name.replace('_', '-')}")
        return value

    def get_int(self, name):
        value = self.get(name)
        out = int(value)
        if out != value:
            raise ValueError(f"--{name.replace('_', '-')} must be an integer")
        return out

    def get_float(self, name):
        return float(self.get(name))


def _load_matrix(opts):
    return formats.parse_matrix(_read_json(opts.require("input")))


def _cmd_range(args):
    opts = _Options(args)
    a = _load_matrix(opts)
    profile = boundary_sweep(a, opts.get_int("samples"))
    _write(formats.boundary_csv(profile), opts.get("out"))
    svg = opts.get("svg")
    if svg is not None:
        plotting.save_boundary_figure(profile, spectral_norm(a), svg)
    return EXIT_OK


def _cmd_radius(args):
    opts = _Options(args)
    a = _load_matrix(opts)
    value = numerical_radius(a, opts.get_int("samples"))
    _write(formats.fmt(value) + "\n", opts.get("out"))
    return EXIT_OK


def _cmd_norm(args):
    opts = _Options(args)
    a = _load_matrix(opts)
    _write(formats.fmt(spectral_norm(a)) + "\n", opts.get("out"))
    return EXIT_OK


def _cmd_analyze(args):
    opts = _Options(args)
    a = _load_matrix(opts)
    report = classify(a, tol=opts.get_float("tol"), samples=opts.get_int("samples"))
    _write(formats.dumps_report(report), opts.get("out"))
    return EXIT_OK


def _cmd_verify_sequence(args):
    opts = _Options(args)
    x = formats.parse_sequence(_read_json(opts.require("input")))
    verdict = verify_main_theorem(x, angles=opts.get_int("grid_angles"), radii=opts.get_int("grid_radii"))
    _write(formats.dumps_verdict(verdict), opts.get("out"))
    return EXIT_OK if verdict.holds else EXIT_VIOLATION


def _cmd_lemma(args):
    opts = _Options(args)
    pts = formats.parse_points(_read_json(opts.require("input")))
    s = lemma_translate(pts)
    lhs = float(np.max(np.abs(pts + s)))
    rhs = sup_modulus(pts) + abs(s)
    _write(formats.dumps_lemma(s, lhs, rhs), opts.get("out"))
    return EXIT_OK if abs(lhs - rhs) <= 1e-12 else EXIT_VIOLATION


def _cmd_gen(args):
    opts = _Options(args)
    kind = opts.require("ensemble")
    dim = opts.get_int("dim")
    seed = opts.get_int("seed")
    scale = opts.get_float("scale")
    if kind == "sequence":
        text = formats.dumps_sequence(ensembles.generate_sequence(dim, seed, scale))
    else:
        spec = ensembles.EnsembleSpec(kind=kind, dim=dim, seed=seed, scale=scale)
        text = formats.dumps_matrix(ensembles.generate(spec))
    _write(text, opts.get("out"))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="numrange",
                                     description="numerical range, radius and normaloid toolkit")
    sub = parser.add_subparsers(dest="cmd")

    def add(name, func, flags):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        p.add_argument("--config", help="JSON file mirroring the flags")
        for flag in flags:
            if flag == "input":
                p.add_argument("--input", help="input JSON path")
            elif flag == "out":
                p.add_argument("--out", help="output path (default: stdout)")
            elif flag == "svg":
                p.add_argument("--svg", help="also render the boundary figure to this file")
            elif flag == "samples":
                p.add_argument("--samples", type=int, help="sweep sample count (default 512)")
            elif flag == "tol":
                p.add_argument("--tol", type=float, help="classification tolerance (default 1e-8)")
            elif flag == "grid_angles":
                p.add_argument("--grid-angles", dest="grid_angles", type=int,
                               help="polar grid angle count (default 64)")
            elif flag == "grid_radii":
                p.add_argument("--grid-radii", dest="grid_radii", type=int,
                               help="polar grid radius count (default 16)")
            elif flag == "ensemble":
                p.add_argument("--ensemble", help="ensemble kind, or 'sequence'")
            elif flag == "dim":
                p.add_argument("--dim", type=int, help="dimension (default 2)")
            elif flag == "seed":
                p.add_argument("--seed", type=int, help="64-bit unsigned seed (default 0)")
            elif flag == "scale":
                p.add_argument("--scale", type=float, help="scale factor (default 1)")
        return p

    add("range", _cmd_range, ["input", "out", "svg", "samples"])
    add("radius", _cmd_radius, ["input", "out", "samples"])
    add("norm", _cmd_norm, ["input", "out"])
    add("analyze", _cmd_analyze, ["input", "out", "samples", "tol"])
    add("verify-sequence", _cmd_verify_sequence, ["input", "out", "grid_angles", "grid_radii"])
    add("lemma", _cmd_lemma, ["input", "out"])
    add("gen", _cmd_gen, ["ensemble", "dim", "seed", "scale", "out"])
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "cmd", None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except np.linalg.LinAlgError as exc:
        print(f"numrange: solver failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (NumRangeError, ValueError, OSError) as exc:
        print(f"numrange: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
