"""Command-line front end: ``gcifc <command> [--config file.json] [flags]``.

Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import export
from .achievable import (
    any_dpc_region,
    achievable_region,
    lambda_costa_1,
    lambda_costa_2,
    lambda_samples,
    lambda_sweep,
    perfect_dpc_region,
    point_d,
    _alphas_for,
)
from .core import ChannelParams, DomainError, RateRegion, SchemeParams, hull_vertices
from .gap import corner_points, gap_certificate, gap_condition_region
from .lambda_opt import sum_rate_optimal_region, sum_rate_root_matrix
from .outer import DEFAULT_ALPHA_GRID, FIGURE_ALPHA_GRID, outer_corner, outer_region
from .regimes import classify, q_alpha, regime_map, very_strong_lhs
from .verify import run_verification

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_VERIFY = 0, 2, 3, 4
FORMATS = ("csv", "json", "svg")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class Grids:
    alpha: int = 501
    lam: int = 201
    lambda_span: float = 2.0
    map_resolution: int = 401


@dataclass(frozen=True)
class Outputs:
    format: str = "csv"
    path: str = "out"


@dataclass(frozen=True)
class ScenarioConfig:
    channel: ChannelParams = field(default_factory=lambda: ChannelParams(-1.0, 2.0, 10.0, 10.0))
    grids: Grids = field(default_factory=Grids)
    outputs: Outputs = field(default_factory=Outputs)
    alpha: float = 0.5
    a_range: tuple = (-5.0, 5.0)
    b_range: tuple = (0.0, 5.0)
    powers: tuple = (1.0, 10.0, 100.0)

    def validate(self):
        g = self.grids
        if min(g.alpha, g.lam, g.map_resolution) < 2:
            raise ConfigError("grid sizes must be >= 2")
        # spans below 1 only make sense for a lambda sweep; region commands check >= 1
        if not g.lambda_span >= 0:
            raise ConfigError("lambda_span must be nonnegative")
        if self.outputs.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if not 0 <= self.alpha <= 1:
            raise ConfigError("alpha must lie in [0, 1]")
        if any(not p > 0 for p in self.powers):
            raise ConfigError("powers must be positive")
        return self


def _pair(v, name):
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise ConfigError(f"{name} must be a two-element list")
    return (float(v[0]), float(v[1]))


def load_config(path: str | None, args: argparse.Namespace | None = None,
                alpha_grid_default: int = DEFAULT_ALPHA_GRID) -> ScenarioConfig:
    """JSON file (optional) with flat command-line flags applied on top."""
    raw: dict = {}
    if path:
        try:
            raw = json.loads(Path(path).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON in {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
    try:
        cfg = ScenarioConfig()
        chd = dict(cfg.channel.to_dict(), **raw.get("channel", {}))
        gd = raw.get("grids", {})
        od = raw.get("outputs", {})
        grids = Grids(int(gd.get("alpha", alpha_grid_default)), int(gd.get("lambda", 201)),
                      float(gd.get("lambda_span", 2.0)), int(gd.get("map_resolution", 401)))
        outputs = Outputs(str(od.get("format", "csv")), str(od.get("path", "out")))
        cfg = ScenarioConfig(ChannelParams.from_dict(chd), grids, outputs,
                             float(raw.get("alpha", 0.5)),
                             _pair(raw.get("a_range", (-5.0, 5.0)), "a_range"),
                             _pair(raw.get("b_range", (0.0, 5.0)), "b_range"),
                             tuple(float(p) for p in raw.get("powers", (1.0, 10.0, 100.0))))
        if args is not None:
            cfg = _apply_flags(cfg, chd, args)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid configuration: {exc}") from exc
    return cfg.validate()


def _apply_flags(cfg: ScenarioConfig, chd: dict, args) -> ScenarioConfig:
    for key, flag in (("a_re", "a_re"), ("a_im", "a_im"), ("b_mag", "b_mag"), ("P1", "P1"), ("P2", "P2")):
        if getattr(args, flag, None) is not None:
            chd[key] = getattr(args, flag)
    g = cfg.grids
    g = replace(g,
                alpha=args.alpha_grid if args.alpha_grid is not None else g.alpha,
                lam=args.lambda_grid if args.lambda_grid is not None else g.lam,
                lambda_span=args.lambda_span if args.lambda_span is not None else g.lambda_span,
                map_resolution=args.resolution if args.resolution is not None else g.map_resolution)
    o = replace(cfg.outputs,
                format=args.format if args.format is not None else cfg.outputs.format,
                path=args.out if args.out is not None else cfg.outputs.path)
    return replace(cfg, channel=ChannelParams.from_dict(chd), grids=g, outputs=o,
                   alpha=args.alpha if args.alpha is not None else cfg.alpha,
                   a_range=tuple(args.a_range) if args.a_range else cfg.a_range,
                   b_range=tuple(args.b_range) if args.b_range else cfg.b_range,
                   powers=tuple(args.powers) if args.powers else cfg.powers)


def _outdir(cfg: ScenarioConfig) -> Path:
    out = Path(cfg.outputs.path)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _emit_region(out: Path, stem: str, region, fmt: str) -> list[Path]:
    if fmt == "json":
        return [export.write_region_json(out / f"{stem}.json", region)]
    return [export.write_region_csv(out / f"{stem}.csv", region)]


def cmd_classify(cfg: ScenarioConfig, stream=None):
    stream = stream or sys.stdout
    ch = cfg.channel
    label = classify(ch)
    info = {
        "channel": ch.to_dict(),
        "flags": label.flags(),
        "Q0": q_alpha(ch, 0.0),
        "Q1": q_alpha(ch, 1.0),
        "very_strong_lhs": very_strong_lhs(ch),
    }
    if cfg.outputs.format == "json":
        stream.write(json.dumps(info, sort_keys=True) + "\n")
    else:
        stream.write("flags: " + (" ".join(info["flags"]) or "none") + "\n")
        for k in ("Q0", "Q1", "very_strong_lhs"):
            stream.write(f"{k}: {info[k]!r}\n")
    return label


def cmd_region(cfg: ScenarioConfig, stream=None) -> list[Path]:
    stream = stream or sys.stdout
    ch, g, fmt = cfg.channel, cfg.grids, cfg.outputs.format
    out = _outdir(cfg)
    if g.lambda_span < 1:
        raise ConfigError("region commands need lambda_span >= 1")
    span, lam_grid = g.lambda_span, g.lam
    regions = {
        "outer_region": outer_region(ch, g.alpha),
        "inner_region": achievable_region(ch, g.alpha, lam_grid, span),
        "perfect_dpc": perfect_dpc_region(ch, g.alpha),
        "any_dpc": any_dpc_region(ch, g.alpha, lam_grid, span),
    }
    written: list[Path] = []
    points = {}
    if ch.b_mag > 1 and ch.P1 > 0:
        alphas = _alphas_for(ch, g.alpha)
        try:
            regions["sum_rate_optimal"] = sum_rate_optimal_region(ch, g.alpha)
            written.append(export.write_roots_csv(out / "sum_rate_roots.csv", alphas,
                                                  sum_rate_root_matrix(ch, alphas)))
        except DomainError:
            pass  # very strong: no sum-rate-optimal lambda
        pts = corner_points(ch)
        cert = gap_certificate(ch)
        points = {"A": pts.A, "B": pts.B, "C": pts.C}
        written.append(export.write_json(out / "corners.json", {
            "A": list(pts.A), "B": list(pts.B), "C": list(pts.C),
            "gap_certificate": {
                "applicable": cert.applicable,
                "additive_ok": cert.additive_ok,
                "multiplicative_ok": cert.multiplicative_ok,
                "additive_gap": None if math.isnan(cert.additive_gap) else cert.additive_gap,
            },
        }))
    for stem, reg in regions.items():
        written += _emit_region(out, stem, reg, fmt)
    if fmt == "svg":
        written.append(export.svg_regions(out / "regions.svg", regions,
                                          {k: tuple(v) for k, v in points.items()}))
    for p in written:
        stream.write(f"wrote {p}\n")
    return written


def cmd_map(cfg: ScenarioConfig, stream=None) -> list[Path]:
    stream = stream or sys.stdout
    ch, res = cfg.channel, cfg.grids.map_resolution
    out = _outdir(cfg)
    grid = regime_map(ch.P1, ch.P2, cfg.a_range, cfg.b_range, res)
    written = [export.write_regime_csv(out / "regime_map.csv", grid)]
    for P in cfg.powers:
        a, b, cond = gap_condition_region(P, cfg.a_range, cfg.b_range, res)
        written.append(export.write_gap_csv(out / f"gap_condition_P{P:g}.csv", P, a, b, cond))
        if cfg.outputs.format == "svg":
            written.append(export.svg_raster(out / f"gap_condition_P{P:g}.svg", a, b,
                                             {f"condition P={P:g}": cond}))
    if cfg.outputs.format == "svg":
        layers = {k: grid.flags[k] for k in ("weak", "very_strong", "pdc")}
        written.append(export.svg_raster(out / "regime_map.svg", grid.a, grid.b_mag, layers))
    for p in written:
        stream.write(f"wrote {p}\n")
    return written


def _cplx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def cmd_lambda_sweep(cfg: ScenarioConfig, stream=None) -> list[Path]:
    stream = stream or sys.stdout
    ch, g, al = cfg.channel, cfg.grids, cfg.alpha
    out = _outdir(cfg)
    lams = lambda_samples(ch, al, g.lam, g.lambda_span)
    sweep = lambda_sweep(ch, al, lams=lams)
    written = [export.write_sweep_csv(out / "lambda_sweep.csv", sweep)]
    dpts = [point_d(ch, SchemeParams(al, lam)) for lam in sweep["lam"]]
    written.append(export.write_d_csv(out / "point_d.csv", sweep["lam"], dpts))
    corner = outer_corner(ch, al)
    written.append(export.write_json(out / "sweep_info.json", {
        "alpha": al,
        "outer_corner_C": list(corner),
        "lambda_costa_1": _cplx(lambda_costa_1(ch, al)),
        "lambda_costa_2": _cplx(lambda_costa_2(ch, al)),
    }))
    if cfg.outputs.format == "svg":
        traj = np.array([[p.r1, p.r2] for p in dpts])
        hull = RateRegion(hull_vertices(np.vstack([[0.0, 0.0], traj]), down_closed=True))
        written.append(export.svg_regions(out / "point_d.svg", {"hull of D(lambda)": hull},
                                          {"C": tuple(corner)}))
    for p in written:
        stream.write(f"wrote {p}\n")
    return written


def cmd_gap(cfg: ScenarioConfig, stream=None):
    stream = stream or sys.stdout
    ch = cfg.channel
    cert = gap_certificate(ch)
    info = {"applicable": cert.applicable, "additive_ok": cert.additive_ok,
            "multiplicative_ok": cert.multiplicative_ok}
    if ch.b_mag > 1:
        pts = corner_points(ch)
        info.update(A=list(pts.A), B=list(pts.B), C=list(pts.C), additive_gap=cert.additive_gap
                    if cert.applicable else None)
    stream.write(json.dumps(info, sort_keys=True) + "\n")
    return cert


def cmd_verify(seed: int, num_channels: int, tolerance: float | None = None,
               stream=None) -> int:
    stream = stream or sys.stdout
    report = run_verification(seed, num_channels, tolerance)
    stream.write(report.text())
    return EXIT_OK if report.ok else EXIT_VERIFY


FIGURES = {
    "fig2": dict(kind="map", channel=ChannelParams(0, 0, 10, 10), powers=()),
    "fig3": dict(kind="sweep", channel=ChannelParams(math.sqrt(0.3), math.sqrt(2), 6, 6), alpha=0.5),
    "fig4": dict(kind="map", channel=ChannelParams(0, 0, 10, 10), powers=()),
    "fig5": dict(kind="region", channel=ChannelParams(-1, 2, 10, 10)),
    "fig6": dict(kind="map", channel=ChannelParams(0, 0, 10, 10), powers=(1.0, 10.0, 100.0)),
    "fig7": dict(kind="sweep", channel=ChannelParams(math.sqrt(0.3), math.sqrt(2), 6, 6), alpha=0.5),
    "fig8": dict(kind="region", channel=ChannelParams(2, 3, 6, 6)),
}


def cmd_figures(cfg: ScenarioConfig, stream=None) -> list[Path]:
    stream = stream or sys.stdout
    base = Path(cfg.outputs.path)
    written: list[Path] = []
    runners = {"map": cmd_map, "sweep": cmd_lambda_sweep, "region": cmd_region}
    for name, fx in FIGURES.items():
        sub = replace(cfg, channel=fx["channel"], alpha=fx.get("alpha", cfg.alpha),
                      powers=fx.get("powers", cfg.powers),
                      a_range=(-5.0, 5.0), b_range=(0.0, 5.0),
                      outputs=replace(cfg.outputs, path=str(base / name)))
        written += runners[fx["kind"]](sub, stream)
    return written


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="scenario JSON file")
    common.add_argument("--out", help="output directory")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--alpha-grid", type=int)
    common.add_argument("--lambda-grid", type=int)
    common.add_argument("--lambda-span", type=float)
    common.add_argument("--resolution", type=int)
    common.add_argument("--alpha", type=float, help="power split for lambda sweeps")
    common.add_argument("--a-re", type=float)
    common.add_argument("--a-im", type=float)
    common.add_argument("--b-mag", type=float)
    common.add_argument("--P1", type=float)
    common.add_argument("--P2", type=float)
    common.add_argument("--a-range", type=float, nargs=2)
    common.add_argument("--b-range", type=float, nargs=2)
    common.add_argument("--powers", type=float, nargs="+")
    common.add_argument("--num-channels", type=int, default=500)
    common.add_argument("--tolerance", type=float,
                        help="override every verification tolerance (negative forces failure)")

    parser = argparse.ArgumentParser(prog="gcifc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "region", "map", "lambda-sweep", "gap", "verify", "figures"):
        sub.add_parser(name, parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.seed, args.num_channels, args.tolerance)
        default = FIGURE_ALPHA_GRID if args.command == "figures" else DEFAULT_ALPHA_GRID
        cfg = load_config(args.config, args, default)
        commands = {
            "classify": cmd_classify,
            "region": cmd_region,
            "map": cmd_map,
            "lambda-sweep": cmd_lambda_sweep,
            "gap": cmd_gap,
            "figures": cmd_figures,
        }
        commands[args.command](cfg)
    except (ConfigError, DomainError) as exc:
        print(f"gcifc: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"gcifc: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
