"""Command-line frontend: segment, batch, synth, eval.

Exit codes are a stable contract:

* 0  success
* 2  I/O or decode failure (also argparse usage errors)
* 3  invalid configuration (even median kernel, strip too thick, bad spec)
* 4  mask dimension mismatch
* 5  batch completed but at least one image failed

Reports are JSON with records sorted by input path; ``--deterministic``
zeroes the wall-time fields so reruns are byte-identical. ``HUESEG_THREADS``
caps the batch worker count (0 or unset means one worker per CPU).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .bordermodel import BorderSpec
from .errors import ConfigError, DimensionMismatchError, FormatError, HuesegError
from .evalkit import Disk, Rectangle, SynthSpec, score, synth_scene
from .imgio import read_mask, read_ppm, write_mask, write_ppm
from .segment import SegConfig, segment_image

EXIT_OK = 0
EXIT_IO = 2
EXIT_CONFIG = 3
EXIT_DIMENSION = 4
EXIT_PARTIAL = 5


def _fail(code: int, message: str) -> int:
    print(f"hueseg: error: {message}", file=sys.stderr)
    return code


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--border",
        default="auto",
        help="border strip thickness in pixels, or 'auto' for 2%% of the "
        "shorter side (default: auto)",
    )
    p.add_argument(
        "--threshold",
        type=int,
        default=5,
        help="per-strip histogram count a bin must exceed to be background (default: 5)",
    )
    p.add_argument(
        "--tolerance",
        type=int,
        default=0,
        help="circular hue-bin tolerance when matching the background set (default: 0)",
    )
    p.add_argument(
        "--median",
        type=int,
        default=3,
        metavar="K",
        help="median filter kernel size, odd (default: 3)",
    )
    p.add_argument(
        "--passes",
        type=int,
        default=1,
        help="median filter passes, 0 disables filtering (default: 1)",
    )
    p.add_argument(
        "--fill",
        default="0,0,0",
        metavar="R,G,B",
        help="composite color for removed background pixels (default: 0,0,0)",
    )


def _parse_fill(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"--fill expects R,G,B, got {text!r}")
    try:
        r, g, b = (int(p) for p in parts)
    except ValueError:
        raise ConfigError(f"--fill expects three integers, got {text!r}") from None
    return r, g, b


def _config_from_args(args: argparse.Namespace) -> SegConfig:
    if args.border == "auto":
        border = None
    else:
        try:
            border = BorderSpec(int(args.border))
        except ValueError:
            raise ConfigError(f"--border expects an integer or 'auto', got {args.border!r}") from None
    return SegConfig(
        border=border,
        threshold=args.threshold,
        tolerance=args.tolerance,
        median_kernel=args.median,
        median_passes=args.passes,
        fill=_parse_fill(args.fill),
    )


def _config_dict(cfg: SegConfig) -> dict:
    return {
        "border": cfg.border.thickness if cfg.border is not None else "auto",
        "threshold": cfg.threshold,
        "tolerance": cfg.tolerance,
        "median_kernel": cfg.median_kernel,
        "median_passes": cfg.median_passes,
        "fill": list(cfg.fill),
    }


def _worker_count() -> int:
    raw = os.environ.get("HUESEG_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def _process_image(
    label: str,
    input_path: Path,
    outputs: dict[str, tuple[Path, str]],
    cfg: SegConfig,
    gt_path: Path | None,
    deterministic: bool,
) -> dict:
    """Segment one image, write requested outputs, return its report record.

    ``outputs`` maps kind ('composite', 'mask', 'raw_mask') to a filesystem
    path plus the label recorded in the report; batch runs label outputs
    relative to the output directory so reports stay machine-independent.
    """
    started = time.perf_counter()
    img = read_ppm(input_path.read_bytes())
    result = segment_image(img, cfg)

    payloads = {
        "composite": lambda: write_ppm(result.composite),
        "mask": lambda: write_mask(result.filtered_mask),
        "raw_mask": lambda: write_mask(result.raw_mask),
    }
    recorded: dict = {}
    for kind in ("composite", "mask", "raw_mask"):
        if kind in outputs:
            path, out_label = outputs[kind]
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(payloads[kind]())
            recorded[kind] = out_label

    metrics = None
    if gt_path is not None:
        gt = read_mask(gt_path.read_bytes())
        metrics = score(result.filtered_mask, gt).to_dict()

    elapsed_ms = 0.0 if deterministic else (time.perf_counter() - started) * 1000.0
    return {
        "input": label,
        "outputs": recorded,
        "config": _config_dict(cfg),
        "background": {
            "bins": sorted(result.background.bins),
            "achromatic_is_background": result.background.achromatic_is_background,
        },
        "pixels": {
            "foreground": result.filtered_mask.foreground_count(),
            "background": result.filtered_mask.background_count(),
        },
        "metrics": metrics,
        "wall_time_ms": elapsed_ms,
        "error": None,
    }


def _failure_record(label: str, cfg: SegConfig, message: str) -> dict:
    return {
        "input": label,
        "outputs": {},
        "config": _config_dict(cfg),
        "background": None,
        "pixels": None,
        "metrics": None,
        "wall_time_ms": 0.0,
        "error": message,
    }


def _report_json(records: list[dict]) -> str:
    report = {"tool_version": __version__, "images": records}
    return json.dumps(report, indent=2) + "\n"


def _write_report(path: Path, records: list[dict]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_report_json(records), encoding="utf-8")


def cmd_segment(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
    except ConfigError as e:
        return _fail(EXIT_CONFIG, str(e))
    input_path = Path(args.input)
    outputs: dict[str, tuple[Path, str]] = {"composite": (Path(args.output), args.output)}
    if args.mask:
        outputs["mask"] = (Path(args.mask), args.mask)
    if args.raw_mask:
        outputs["raw_mask"] = (Path(args.raw_mask), args.raw_mask)
    try:
        record = _process_image(
            label=str(input_path),
            input_path=input_path,
            outputs=outputs,
            cfg=cfg,
            gt_path=Path(args.gt) if args.gt else None,
            deterministic=args.deterministic,
        )
    except ConfigError as e:
        return _fail(EXIT_CONFIG, str(e))
    except DimensionMismatchError as e:
        return _fail(EXIT_DIMENSION, str(e))
    except (FormatError, OSError) as e:
        return _fail(EXIT_IO, str(e))
    if args.report:
        _write_report(Path(args.report), [record])
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        cfg = _config_from_args(args)
    except ConfigError as e:
        return _fail(EXIT_CONFIG, str(e))
    in_dir = Path(args.input_dir)
    out_dir = Path(args.output_dir)
    masks_dir = Path(args.masks_dir) if args.masks_dir else None
    if not in_dir.is_dir():
        return _fail(EXIT_IO, f"input directory {in_dir} does not exist or is unreadable")

    rels = sorted(
        (p.relative_to(in_dir) for p in in_dir.rglob("*.ppm")),
        key=lambda p: p.as_posix(),
    )

    def run_one(rel: Path) -> dict:
        label = rel.as_posix()
        gt_path = None
        if masks_dir is not None:
            candidate = (masks_dir / rel).with_suffix(".pgm")
            if candidate.is_file():
                gt_path = candidate
        mask_rel = rel.with_suffix(".mask.pgm")
        try:
            return _process_image(
                label=label,
                input_path=in_dir / rel,
                outputs={
                    "composite": (out_dir / rel, rel.as_posix()),
                    "mask": (out_dir / mask_rel, mask_rel.as_posix()),
                },
                cfg=cfg,
                gt_path=gt_path,
                deterministic=args.deterministic,
            )
        except (HuesegError, OSError) as e:
            return _failure_record(label, cfg, str(e))

    workers = _worker_count()
    if workers > 1 and len(rels) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_one, rels))
    else:
        records = [run_one(rel) for rel in rels]

    records.sort(key=lambda r: r["input"])
    if args.report:
        _write_report(Path(args.report), records)
    if any(r["error"] is not None for r in records):
        return EXIT_PARTIAL
    return EXIT_OK


def _parse_size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise ConfigError(f"--size expects WxH, got {text!r}") from None


def _parse_ints(text: str, n: int, flag: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != n:
        raise ConfigError(f"{flag} expects {n} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ConfigError(f"{flag} expects integers, got {text!r}") from None


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        width, height = _parse_size(args.size)
        if args.rect is not None:
            x, y, w, h = _parse_ints(args.rect, 4, "--rect")
            shape = Rectangle(x, y, w, h)
        else:
            cx, cy, r = _parse_ints(args.disk, 3, "--disk")
            shape = Disk(cx, cy, r)
        spec = SynthSpec(
            width=width,
            height=height,
            bg_bin=args.bg_bin,
            fg_bin=args.fg_bin,
            shape=shape,
            noise_fraction=args.noise,
            seed=args.seed,
        )
    except ConfigError as e:
        return _fail(EXIT_CONFIG, str(e))
    img, gt = synth_scene(spec)
    try:
        out = Path(args.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(write_ppm(img))
        gt_path = Path(args.gt)
        gt_path.parent.mkdir(parents=True, exist_ok=True)
        gt_path.write_bytes(write_mask(gt))
    except OSError as e:
        return _fail(EXIT_IO, str(e))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        pred = read_mask(Path(args.pred).read_bytes())
        gt = read_mask(Path(args.gt).read_bytes())
    except (FormatError, OSError) as e:
        return _fail(EXIT_IO, str(e))
    try:
        metrics = score(pred, gt)
    except DimensionMismatchError as e:
        return _fail(EXIT_DIMENSION, str(e))
    print(json.dumps(metrics.to_dict(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hueseg",
        description="Remove near-uniform background from images by thresholding "
        "border hue histograms.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment a single PPM image")
    p.add_argument("input", help="input P6 PPM file")
    p.add_argument("-o", "--output", required=True, help="composite output PPM")
    p.add_argument("--mask", help="write the filtered foreground mask (P5 PGM)")
    p.add_argument("--raw-mask", dest="raw_mask", help="write the pre-filter mask (P5 PGM)")
    p.add_argument("--gt", help="reference mask to score the result against")
    p.add_argument("--report", help="write a JSON report for this image")
    p.add_argument("--deterministic", action="store_true", help="zero timing fields in the report")
    _add_config_flags(p)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("batch", help="segment every .ppm under a directory")
    p.add_argument("input_dir")
    p.add_argument("output_dir")
    p.add_argument(
        "--masks-dir",
        dest="masks_dir",
        help="directory of same-stem .pgm reference masks for scoring",
    )
    p.add_argument("--report", help="write one JSON report for the whole run")
    p.add_argument("--deterministic", action="store_true", help="zero timing fields in the report")
    _add_config_flags(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("synth", help="generate a synthetic scene with ground truth")
    p.add_argument("--size", required=True, help="scene size as WxH")
    p.add_argument("--bg-bin", dest="bg_bin", type=int, required=True, help="background hue bin")
    p.add_argument("--fg-bin", dest="fg_bin", type=int, required=True, help="foreground hue bin")
    shape = p.add_mutually_exclusive_group(required=True)
    shape.add_argument("--rect", help="foreground rectangle as x,y,w,h")
    shape.add_argument("--disk", help="foreground disk as cx,cy,r")
    p.add_argument("--noise", type=float, default=0.0, help="background noise fraction (default: 0)")
    p.add_argument("--seed", type=int, default=0, help="noise RNG seed (default: 0)")
    p.add_argument("-o", "--output", required=True, help="scene output PPM")
    p.add_argument("--gt", required=True, help="ground-truth mask output PGM")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("eval", help="score a predicted mask against a reference mask")
    p.add_argument("pred", help="predicted mask (P5 PGM)")
    p.add_argument("gt", help="reference mask (P5 PGM)")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
