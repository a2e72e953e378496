"""Command-line front end: ``bicliff {tower,verify,table,demo}``.

Exit codes: 0 when everything selected passes, 1 on a verification or demo
failure (including undecomposable tables and poles on the grid), 2 on usage
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from bicliff import demos, lie
from bicliff.errors import GridTooSmall, NoMatch, PoleOnGrid
from bicliff.kernels import BACKEND
from bicliff.tensors import render_table, vocabulary
from bicliff.tower import DESCRIPTIONS, level as tower_level

SUITES = ("metric", "spin", "lorentz", "conformal", "reduced", "involutions")
DEFAULT_MAX_LEVEL = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    level: int = 2
    max_level: int = DEFAULT_MAX_LEVEL
    format: str = "text"
    tolerance: float = 1e-9
    seed: int = 0
    word_cap: Optional[int] = None
    timing: bool = True
    mode: Optional[str] = None

    def cap_for(self, index: int) -> int:
        if self.word_cap is not None:
            return self.word_cap
        if self.mode == "unrolled":
            # a product of every primitive may be needed
            return len(vocabulary(index, "unrolled"))
        return 4


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--level", type=int, default=2, help="tower level (default 2)")
    parser.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL,
                        help="largest level accepted (default 4)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="floating-point tolerance for numeric demos")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    parser.add_argument("--word-cap", type=int, default=None,
                        help="longest unit word tried when decomposing")
    parser.add_argument("--no-timing", action="store_true",
                        help="emit null timings so reports are byte-stable")
    parser.add_argument("--mode", choices=("generators", "lifted", "unrolled"), default=None,
                        help="unit-word vocabulary (default depends on level)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicliff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tower", help="describe one level of the tower")
    _common(p)

    p = sub.add_parser("verify", help="run exact verification suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    _common(p)

    p = sub.add_parser("table", help="render the spin tensor as unit words")
    _common(p)

    p = sub.add_parser("demo", help="numeric demonstrations")
    p.add_argument("name", choices=("harmonic", "massratio"))
    p.add_argument("--h", type=float, default=0.01, help="grid spacing for the harmonic demo")
    p.add_argument("--origin", type=float, nargs=2, default=(0.5, 0.5), metavar=("X", "Y"))
    p.add_argument("--extent", type=float, default=1.0, help="side length of the grid")
    _common(p)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        level=args.level,
        max_level=args.max_level,
        format=args.format,
        tolerance=args.tolerance,
        seed=args.seed,
        word_cap=args.word_cap,
        timing=not args.no_timing,
        mode=args.mode,
    )


def _validate(parser: argparse.ArgumentParser, cfg: RunConfig) -> None:
    if cfg.level < 0:
        parser.error("--level must be non-negative")
    if cfg.level > cfg.max_level:
        parser.error(f"--level {cfg.level} exceeds --max-level {cfg.max_level}")
    if not cfg.tolerance > 0:
        parser.error("--tolerance must be positive")
    if cfg.word_cap is not None and cfg.word_cap < 1:
        parser.error("--word-cap must be at least 1")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ------------------------------------------------------------------ commands


def cmd_tower(cfg: RunConfig) -> int:
    lvl = tower_level(cfg.level)
    info = {
        "level": lvl.index,
        "n": lvl.n,
        "matrix_dim": lvl.dim,
        "signature": list(lvl.signature),
        "generator_squares": list(lvl.generator_squares()),
        "clifford_label": lvl.clifford_label,
        "note": DESCRIPTIONS.get(lvl.index, ""),
    }
    if cfg.format == "json":
        _emit(json.dumps(info, ensure_ascii=False))
        return 0
    lines = [
        f"level {lvl.index}: Clifford algebra {lvl.clifford_label}",
        f"  paravector dimension n = {lvl.n} ({lvl.dim}x{lvl.dim} bicomplex matrices)",
        f"  signature (p, q) = {lvl.signature}",
        "  generator squares: " + " ".join(f"{s:+d}" for s in lvl.generator_squares()),
    ]
    if info["note"]:
        lines.append(f"  {info['note']}")
    _emit("\n".join(lines))
    return 0


def _run_suite(name: str, cfg: RunConfig) -> List[lie.VerificationReport]:
    L = cfg.level
    if name == "metric":
        return [lie.verify_metric(L)]
    if name == "spin":
        return [lie.verify_spin(L)]
    if name == "lorentz":
        return [lie.verify_lorentz(L)]
    if name == "conformal":
        return [lie.verify_conformal(L), lie.verify_closed_forms(L)]
    if name == "reduced":
        return [lie.reduced_spin(L)]
    if name == "involutions":
        return [lie.verify_involutions(L, seed=cfg.seed)]
    raise ValueError(name)


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    names = SUITES if suite == "all" else (suite,)
    reports = [r for name in names for r in _run_suite(name, cfg)]
    ok = all(r.passed for r in reports)
    if cfg.format == "json":
        doc = {
            "level": cfg.level,
            "suites": [r.to_dict(cfg.timing) for r in reports],
            "pass": ok,
        }
        _emit(json.dumps(doc, ensure_ascii=False))
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            timing = f" in {r.ms:.1f} ms" if cfg.timing else ""
            lines.append(f"{status} {r.suite}: {r.checks} checks, {len(r.failures)} failures{timing}")
            for f in r.failures[:5]:
                lines.append(f"    {f['relation']} at {tuple(f['index'])}: "
                             f"expected {f['expected']}, got {f['actual']}")
        lines.append(f"{'PASS' if ok else 'FAIL'} (level {cfg.level}, {BACKEND} kernels)")
        _emit("\n".join(lines))
    return 0 if ok else 1


def cmd_table(cfg: RunConfig) -> int:
    _emit(render_table(cfg.level, cfg.format, cfg.mode, cfg.cap_for(cfg.level)))
    return 0


def cmd_demo(cfg: RunConfig, args: argparse.Namespace) -> int:
    if args.name == "massratio":
        predicted, deviation = demos.mass_ratio_deviation()
        doc = {
            "demo": "massratio",
            "predicted": predicted,
            "experimental": demos.EXPERIMENTAL_MASS_RATIO,
            "deviation_percent": deviation,
            "pass": True,
        }
        text = (f"sqrt(4 pi e^(4 pi)) = {predicted:.6f}\n"
                f"experimental m_p/m_e = {demos.EXPERIMENTAL_MASS_RATIO}\n"
                f"deviation = {deviation:.3f}%")
    else:
        report = demos.harmonic_report(args.h, tuple(args.origin), args.extent)
        # second-order convergence is the demo's pass condition
        doc = {"demo": "harmonic", **report, "pass": report["second_order"]}
        text = "\n".join([
            f"grid {report['grid'][0]}x{report['grid'][1]}, h = {report['h']}, origin {tuple(report['origin'])}",
            f"identity-map max |lap| = {report['identity_max_laplacian']:.3e}",
            f"1/z pullback max |lap| = {report['pullback_max_laplacian']:.3e}",
            f"within 4x identity baseline: {report['within_4x_baseline']}",
            f"convergence ratio (2h vs h) = {report['convergence_ratio']:.4f}",
            f"{'PASS' if doc['pass'] else 'FAIL'} second-order convergence",
        ])
    _emit(json.dumps(doc) if cfg.format == "json" else text)
    return 0 if doc["pass"] else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    _validate(parser, cfg)
    try:
        if cfg.command == "tower":
            return cmd_tower(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg, args.suite)
        if cfg.command == "table":
            return cmd_table(cfg)
        return cmd_demo(cfg, args)
    except (NoMatch, PoleOnGrid, GridTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
