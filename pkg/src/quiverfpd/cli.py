"""Command line entry point ``fpd``.

Exit codes: 0 success, 2 invalid input, 1 internal error. ``fpd verify``
exits 1 when any criterion fails.
"""
from __future__ import annotations

import argparse
import json
import sys
import traceback
from dataclasses import dataclass
from pathlib import Path

from .fpd import FpdConfig, fpd, fpd_family
from .quiver import FamilyKind, FamilySpec, QuiverFormatError, parse_quiver
from .report import to_json, to_text
from .roots import NotDynkinError
from .spectral import DEFAULT_TOL
from .verify import run_battery

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: str | None = None
    family: FamilySpec | None = None
    mode: str = "thin"
    max_total_dim: int | None = None
    field_order: int | None = None
    tol: float = DEFAULT_TOL
    output_format: str = "text"
    output_path: str | None = None

    def __post_init__(self):
        if self.command in ("compute", "family") and (self.input_path is None) == (self.family is None):
            raise UsageError("exactly one of an input file or family parameters is required")
        if self.mode == "thin" and (self.max_total_dim is not None or self.field_order is not None):
            raise UsageError("--max-dim and --field require --mode oracle")

    def fpd_config(self) -> FpdConfig:
        if self.mode == "oracle":
            return FpdConfig("oracle", self.max_total_dim, self.field_order or 2, self.tol)
        return FpdConfig("thin", tol=self.tol)


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("thin", "oracle"), default="thin")
    p.add_argument("--max-dim", type=int, dest="max_dim", help="oracle: bound on total dimension")
    p.add_argument("--field", type=int, help="oracle: field order (2 or 3)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fpd", description="Frobenius-Perron dimension of kQ/(>=2)-mod")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="run the pipeline on a quiver file")
    p.add_argument("file")
    _add_pipeline_flags(p)

    p = sub.add_parser("family", help="run the pipeline on a named family")
    p.add_argument("--type", required=True, choices=[k.value for k in FamilyKind], dest="kind")
    p.add_argument("--n", type=int)
    p.add_argument("--loops", required=True, help="comma-separated loop counts")
    _add_pipeline_flags(p)

    p = sub.add_parser("verify", help="run the reproduction battery")
    level = p.add_mutually_exclusive_group()
    level.add_argument("--quick", action="store_true")
    level.add_argument("--full", action="store_true")
    level.add_argument("--oracle", action="store_true", help="also run the finite-field oracle checks")
    p.add_argument("--json", action="store_true")
    return parser


def _parse_loops(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--loops must be comma-separated integers, got {text!r}") from None


def _family_from_args(args) -> FamilySpec:
    loops = _parse_loops(args.loops)
    kind = FamilyKind(args.kind)
    n = args.n if args.n is not None else len(loops)
    if kind in (FamilyKind.QNM, FamilyKind.A3_REVERSED):
        n = 2 if kind is FamilyKind.QNM else 3
    return FamilySpec(kind, n, loops)


def config_from_args(args) -> CliConfig:
    common = dict(
        mode=args.mode,
        max_total_dim=args.max_dim,
        field_order=args.field,
        tol=args.tol,
        output_format="json" if args.json else "text",
        output_path=args.output,
    )
    if args.command == "compute":
        return CliConfig("compute", input_path=args.file, **common)
    return CliConfig("family", family=_family_from_args(args), **common)


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_compute(config: CliConfig) -> int:
    try:
        text = Path(config.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {config.input_path}: {exc.strerror}") from None
    report = fpd(parse_quiver(text), config.fpd_config())
    _emit(to_json(report) if config.output_format == "json" else to_text(report), config.output_path)
    return EXIT_OK


def cmd_family(config: CliConfig) -> int:
    report = fpd_family(config.family, config.fpd_config())
    _emit(to_json(report) if config.output_format == "json" else to_text(report), config.output_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_battery(quick=args.quick, oracle=args.oracle)
    if args.json:
        sys.stdout.write(json.dumps([r.as_dict() for r in results], indent=2) + "\n")
    else:
        for r in results:
            print(r.line())
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        config = config_from_args(args)
        if config.command == "compute":
            return cmd_compute(config)
        return cmd_family(config)
    except QuiverFormatError as exc:
        print(f"fpd: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotDynkinError as exc:
        print(f"fpd: thin mode needs a Dynkin or two-cycle base ({exc}); try --mode oracle", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, ValueError) as exc:
        print(f"fpd: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
