"""Command-line interface: CSV/SVG exports of Gaussian profiles, Wigner maps,
oscillator spectra, revival analyses and the identity-check suite.

Subcommands: gaussian, wigner, spectrum, verify, revival, kravchuk-table,
frame-check.  Configuration precedence is flags > FINOSC_* environment
variables > defaults.  Exit codes: 0 success, 1 computation or verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import checks, frames, kravchuk, oscillators
from .wigner import wigner as wigner_map
from .gaussians import Family, gaussian, normalized_gaussian
from .grid import GridDim, GridFunction, eigendecompose_hermitian, inner_product
from .oscillators import evolve_spectral

__all__ = ["main"]

_KINDS = (
    "fourier",
    "harper",
    "kravchuk",
    "frame",
    "gramschmidt",
    "deformed-fourier",
    "deformed-harper",
)


class UsageError(ValueError):
    """Invalid configuration; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    dim: GridDim
    family: Family | None = None
    kappa: float | None = None
    kind: str | None = None
    alpha: float | None = None
    state: str = "random"
    seed: int = 0
    samples: int = 200
    tol: float = 1e-10
    min_len: int = 3
    out: Path | None = None
    fmt: str = "csv"


def _env_float(name: str) -> float | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} is not a number: {raw!r}") from None


def _build_config(args: argparse.Namespace) -> RunConfig:
    d = args.dim
    if d is None:
        raise UsageError("--dim is required")
    if d < 3 or d % 2 == 0:
        raise UsageError("dimension must be odd and >= 3")
    dim = GridDim.from_size(d)

    family = Family.from_label(args.family) if getattr(args, "family", None) else None
    kappa = getattr(args, "kappa", None)
    if kappa is not None:
        if kappa <= 0:
            raise UsageError("kappa must be positive")
        if family is not None and not family.has_kappa:
            raise UsageError(f"family {family.value} takes no kappa")

    tol = args.tol if getattr(args, "tol", None) is not None else _env_float("FINOSC_TOL")
    if tol is None:
        tol = 1e-10
    if tol <= 0:
        raise UsageError("tolerance must be positive")

    kind = getattr(args, "kind", None)
    alpha = getattr(args, "alpha", None)
    if kind in ("frame", "gramschmidt") and family is None:
        raise UsageError(f"--kind {kind} requires --family")
    if kind in ("deformed-fourier", "deformed-harper"):
        if alpha is None:
            raise UsageError(f"--kind {kind} requires --alpha")
        if not 0.0 < alpha < 2.0:
            raise UsageError("deformation alpha must lie in (0, 2)")

    min_len = getattr(args, "min_len", 3)
    if min_len < 3:
        raise UsageError("--min-len must be at least 3")

    out = getattr(args, "out", None)
    if out is None:
        out_dir = os.environ.get("FINOSC_OUT_DIR")
        if out_dir:
            out = Path(out_dir) / f"{args.command.replace('-', '_')}.csv"
    else:
        out = Path(out)

    return RunConfig(
        command=args.command,
        dim=dim,
        family=family,
        kappa=kappa,
        kind=kind,
        alpha=alpha,
        state=getattr(args, "state", "random"),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", 200),
        tol=tol,
        min_len=min_len,
        out=out,
        fmt=args.format,
    )


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, float) and x == int(x) and abs(x) < 1e16:
        return f"{x:.17g}"
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _write_csv(cfg: RunConfig, header: list[str], rows) -> None:
    def emit(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])

    if cfg.out is None:
        emit(sys.stdout)
    else:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        with open(cfg.out, "w", newline="") as fh:
            emit(fh)


def _write_text(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(text)


# --- minimal deterministic SVG renderers -------------------------------------


def _svg_document(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _svg_stem(ns, values) -> str:
    w, h, pad = 480, 320, 30.0
    vmax = max(max(abs(v) for v in values), 1e-300)
    x0, x1 = min(ns), max(ns)
    sx = (w - 2 * pad) / max(x1 - x0, 1)
    base = h - pad
    scale = (h - 2 * pad) / (1.1 * vmax)
    body = [f'<line x1="{pad}" y1="{base}" x2="{w - pad}" y2="{base}" stroke="black"/>']
    for n, v in zip(ns, values):
        x = pad + (n - x0) * sx
        y = base - v * scale
        body.append(f'<line x1="{x:.2f}" y1="{base}" x2="{x:.2f}" y2="{y:.2f}" stroke="steelblue"/>')
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="steelblue"/>')
    return _svg_document(w, h, body)


def _svg_heatmap(matrix: np.ndarray) -> str:
    d = matrix.shape[0]
    cell = max(4, 320 // d)
    w = h = cell * d
    lo, hi = float(matrix.min()), float(matrix.max())
    span = max(hi - lo, 1e-300)
    body = []
    for r in range(d):
        for c in range(d):
            t = (matrix[r, c] - lo) / span
            shade = int(255 * (1 - t))
            body.append(
                f'<rect x="{c * cell}" y="{(d - 1 - r) * cell}" width="{cell}" height="{cell}" '
                f'fill="rgb({shade},{shade},255)"/>'
            )
    return _svg_document(w, h, body)


def _svg_levels(eigenvalues) -> str:
    w, h, pad = 240, 400, 30.0
    lo, hi = min(eigenvalues), max(eigenvalues)
    span = max(hi - lo, 1e-300)
    body = []
    for e in eigenvalues:
        y = h - pad - (e - lo) / span * (h - 2 * pad)
        body.append(f'<line x1="60" y1="{y:.2f}" x2="180" y2="{y:.2f}" stroke="black"/>')
    return _svg_document(w, h, body)


def _svg_line(ts, values) -> str:
    w, h, pad = 480, 320, 30.0
    tmax = max(max(ts), 1e-300)
    vmax = max(max(values), 1e-300)
    pts = " ".join(
        f"{pad + t / tmax * (w - 2 * pad):.2f},{h - pad - v / vmax * (h - 2 * pad):.2f}"
        for t, v in zip(ts, values)
    )
    return _svg_document(w, h, [f'<polyline points="{pts}" fill="none" stroke="steelblue"/>'])


# --- subcommand implementations -----------------------------------------------


def _pick_state(cfg: RunConfig) -> GridFunction:
    if cfg.state == "delta0":
        return GridFunction.delta(cfg.dim, 0)
    if cfg.state == "gaussian":
        return normalized_gaussian(cfg.dim, cfg.family or Family.G1, cfg.kappa)
    rng = np.random.default_rng(cfg.seed)
    v = rng.normal(size=cfg.dim.d) + 1j * rng.normal(size=cfg.dim.d)
    psi = GridFunction(cfg.dim, v)
    return psi / psi.norm()


def _cmd_gaussian(cfg: RunConfig) -> int:
    if cfg.family is None:
        raise UsageError("gaussian requires --family")
    g = normalized_gaussian(cfg.dim, cfg.family, cfg.kappa)
    ns = cfg.dim.indices()
    vals = g.values.real
    if cfg.fmt == "svg":
        _write_text(cfg, _svg_stem(ns, vals))
    else:
        _write_csv(cfg, ["n", "value", "prob"], [(int(n), float(v), float(v * v)) for n, v in zip(ns, vals)])
    return 0


def _cmd_wigner(cfg: RunConfig) -> int:
    if cfg.state == "delta0":
        psi = GridFunction.delta(cfg.dim, 0)
    elif cfg.family is not None:
        psi = normalized_gaussian(cfg.dim, cfg.family, cfg.kappa)
    else:
        raise UsageError("wigner requires --family or --state delta0")
    W = wigner_map(psi)
    if cfg.fmt == "svg":
        _write_text(cfg, _svg_heatmap(W.values))
        return 0
    ns = cfg.dim.indices()
    rows = [
        (int(n), int(m), W.value(int(n), int(m)))
        for n in ns
        for m in ns
    ]
    _write_csv(cfg, ["n", "m", "w"], rows)
    return 0


def _spectrum(cfg: RunConfig) -> np.ndarray:
    H = oscillators.hamiltonian(cfg.dim, cfg.kind, family=cfg.family, alpha=cfg.alpha)
    return eigendecompose_hermitian(H).eigenvalues


def _cmd_spectrum(cfg: RunConfig) -> int:
    if cfg.kind is None:
        raise UsageError("spectrum requires --kind")
    eigs = _spectrum(cfg)
    if cfg.fmt == "svg":
        _write_text(cfg, _svg_levels(eigs))
    else:
        _write_csv(cfg, ["index", "eigenvalue"], [(k, float(e)) for k, e in enumerate(eigs)])
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    results = checks.run_checks(cfg.dim)
    lines = []
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if r.skipped:
            status = "SKIP"
        lines.append(f"{status}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
        failed += 0 if r.passed else 1
    lines.append(f"{len(results) - failed}/{len(results)} checks passed at d={cfg.dim.d}")
    _write_text(cfg, "\n".join(lines) + "\n")
    return 0 if failed == 0 else 1


def _cmd_revival(cfg: RunConfig) -> int:
    if cfg.kind is None:
        raise UsageError("revival requires --kind")
    H = oscillators.hamiltonian(cfg.dim, cfg.kind, family=cfg.family, alpha=cfg.alpha)
    dec = eigendecompose_hermitian(H)
    report = oscillators.detect_revivals(dec, min_len=cfg.min_len, tol=cfg.tol)
    if report.progressions:
        longest = max(report.progressions, key=lambda p: p.length)
        horizon = 2.0 * longest.period
    else:
        horizon = 4.0 * math.pi
    psi = _pick_state(cfg)
    ts = np.linspace(0.0, horizon, cfg.samples)
    fidelity = [abs(inner_product(psi, evolve_spectral(dec, psi, float(t)))) for t in ts]
    if cfg.fmt == "svg":
        _write_text(cfg, _svg_line(list(ts), fidelity))
        return 0
    rows = [
        ("progression", p.start, p.length, p.gap, p.period, "", "")
        for p in report.progressions
    ]
    rows += [("fidelity", "", "", "", "", float(t), float(f)) for t, f in zip(ts, fidelity)]
    _write_csv(cfg, ["record", "start", "length", "gap", "period", "t", "fidelity"], rows)
    return 0


def _cmd_kravchuk_table(cfg: RunConfig) -> int:
    table = kravchuk.kravchuk_table(cfg.dim)
    ns = cfg.dim.indices()
    rows = [
        (int(m), int(n), table.polynomial(int(m), int(n)), table.function(int(m), int(n)))
        for m in ns
        for n in ns
    ]
    _write_csv(cfg, ["m", "n", "poly", "func"], rows)
    return 0


def _cmd_frame_check(cfg: RunConfig) -> int:
    if cfg.family is None:
        raise UsageError("frame-check requires --family")
    family = frames.coherent_family(cfg.dim, cfg.family)
    scale = 1.0 / math.sqrt(cfg.dim.d)
    vectors = [
        family.state(int(a), int(b)) * scale
        for a in cfg.dim.indices()
        for b in cfg.dim.indices()
    ]
    diag = frames.frame_analyze(vectors, tol=cfg.tol)
    weight_sum = float(diag.frame.weights.sum()) if diag.frame is not None else float("nan")
    _write_csv(
        cfg,
        ["lower", "upper", "spread", "weight_sum", "tight"],
        [(diag.lower, diag.upper, diag.upper - diag.lower, weight_sum, int(diag.is_tight))],
    )
    return 0 if diag.is_tight and diag.frame is not None else 1


_COMMANDS = {
    "gaussian": _cmd_gaussian,
    "wigner": _cmd_wigner,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "revival": _cmd_revival,
    "kravchuk-table": _cmd_kravchuk_table,
    "frame-check": _cmd_frame_check,
}


def _add_common(p: argparse.ArgumentParser, svg_ok: bool = True) -> None:
    p.add_argument("--dim", type=int, required=True, help="odd grid size d >= 3")
    p.add_argument("--out", type=str, default=None, help="output path (default: stdout or FINOSC_OUT_DIR)")
    p.add_argument(
        "--format",
        choices=("csv", "svg") if svg_ok else ("csv",),
        default="csv",
        dest="format",
    )
    p.add_argument("--tol", type=float, default=None, help="tolerance (default FINOSC_TOL or 1e-10)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="finosc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gaussian", help="normalized Gaussian profile as n,value,prob")
    _add_common(p)
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--kappa", type=float, default=None)

    p = sub.add_parser("wigner", help="Wigner map as n,m,w")
    _add_common(p)
    p.add_argument("--family", choices=[f.value for f in Family], default=None)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--state", choices=("delta0",), default=None)

    p = sub.add_parser("spectrum", help="ascending oscillator eigenvalues")
    _add_common(p)
    p.add_argument("--kind", choices=_KINDS, required=True)
    p.add_argument("--family", choices=[f.value for f in Family], default=None)
    p.add_argument("--alpha", type=float, default=None)

    p = sub.add_parser("verify", help="run the identity-check suite")
    _add_common(p, svg_ok=False)

    p = sub.add_parser("revival", help="equal-gap progressions and a fidelity trace")
    _add_common(p)
    p.add_argument("--kind", choices=_KINDS, required=True)
    p.add_argument("--family", choices=[f.value for f in Family], default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--min-len", type=int, default=3, dest="min_len")
    p.add_argument("--state", choices=("random", "delta0", "gaussian"), default="random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)

    p = sub.add_parser("kravchuk-table", help="polynomial and function tables as m,n,poly,func")
    _add_common(p, svg_ok=False)

    p = sub.add_parser("frame-check", help="frame bounds of the scaled coherent family")
    _add_common(p, svg_ok=False)
    p.add_argument("--family", choices=[f.value for f in Family], required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _build_config(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
