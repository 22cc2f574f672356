"""Command line entry point.

Subcommands: ``serve`` (live engine with websocket output), ``replay``
(deterministic transcript from an image sequence), ``bench`` (stage and
kernel timings), ``eval`` (detection report from box files).

Exit codes: 0 success, 1 configuration or input error, 2 runtime fault.
"""

from __future__ import annotations

import argparse
import logging
import sys
import threading
from pathlib import Path
from typing import NoReturn

from .config import ConfigError, load_config
from .engine import Engine, KEY_ALIASES, parse_key_list, run_replay
from .evalkit import (
    format_report_tsv,
    load_records,
    map_summary,
    records_from_dirs,
)
from .evalkit.bench import format_stage_table, kernel_bench, run_fixture_bench
from .transport import EngineServer

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # Bad flags are configuration errors; argparse's default exit code is
    # reserved here for runtime faults.
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scenereader", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--log-level",
        default="info",
        choices=("debug", "info", "warning", "error"),
        help="logging verbosity (default: info)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the live engine")
    serve.add_argument("--config", required=True, help="engine config file (YAML)")

    replay = sub.add_parser("replay", help="deterministic offline transcript")
    replay.add_argument("--frames", required=True, help="directory of images")
    replay.add_argument("--script", required=True, help="annotation file driving fixtures")
    replay.add_argument("--out", required=True, help="transcript path, or - for stdout")
    replay.add_argument(
        "--keys",
        default="cc,ss,aa",
        help="per-frame keypress cycle: cc, ss, aa, or - (default: cc,ss,aa)",
    )
    replay.add_argument("--fps", type=float, default=10.0, help="virtual frame rate")
    replay.add_argument("--scene", default=None, help="scene name for tone mapping")
    replay.add_argument("--conf", type=float, default=0.25, help="confidence threshold")
    replay.add_argument("--fixtures", default=None, help="service fixture directory")

    bench = sub.add_parser("bench", help="time pipeline stages on fixtures")
    bench.add_argument("--iterations", type=int, default=100)
    bench.add_argument("--dispatches", type=int, default=60)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument(
        "--kernels", action="store_true", help="also compare compiled and fallback kernels"
    )
    bench.add_argument("--out", default="-", help="report path, or - for stdout")

    evalp = sub.add_parser("eval", help="detection AP report")
    evalp.add_argument("--index", help="TSV index of images (id, app, gt, pred)")
    evalp.add_argument("--gt", help="directory of ground-truth box files")
    evalp.add_argument("--pred", help="directory of prediction box files")
    evalp.add_argument("--out", default="-", help="report path, or - for stdout")
    return parser


def _write_output(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)


def _require_dir(value: str, flag: str) -> Path:
    path = Path(value)
    if not path.is_dir():
        raise ConfigError(f"{flag}: directory {path} does not exist")
    return path


def _require_file(value: str, flag: str) -> Path:
    path = Path(value)
    if not path.is_file():
        raise ConfigError(f"{flag}: file {path} does not exist")
    return path


def cmd_serve(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    engine = Engine(config)
    server = EngineServer(
        engine.dispatch, host=config.transport.host, port=config.transport.port
    )
    server.start()
    engine.add_sink(server.send)
    engine.start()
    log.info(
        "serving on ws://%s:%d/vrsight/v1; stdin accepts cc, ss, aa, quit",
        config.transport.host,
        server.port,
    )
    stop = threading.Event()

    def stdin_loop() -> None:
        for line in sys.stdin:
            token = line.strip().lower()
            if token in KEY_ALIASES:
                engine.dispatch(KEY_ALIASES[token])
            elif token in ("quit", "exit"):
                stop.set()
                return
            elif token:
                print(f"unknown command {token!r}; expected cc, ss, aa, quit", file=sys.stderr)
        # stdin closed: keep serving websocket clients.

    threading.Thread(target=stdin_loop, name="stdin", daemon=True).start()
    try:
        while not stop.wait(0.5):
            pass
    except KeyboardInterrupt:
        log.info("interrupted; shutting down")
    finally:
        engine.stop()
        server.stop()
    return EXIT_OK


def cmd_replay(args: argparse.Namespace) -> int:
    frames = _require_dir(args.frames, "--frames")
    script = _require_file(args.script, "--script")
    if args.fps <= 0:
        raise ConfigError("--fps: must be positive")
    try:
        keys = parse_key_list(args.keys)
    except ValueError as exc:
        raise ConfigError(f"--keys: {exc}") from None
    if args.fixtures is not None:
        _require_dir(args.fixtures, "--fixtures")
    transcript = run_replay(
        frames,
        script,
        keys=keys,
        fps=args.fps,
        scene_name=args.scene,
        conf_threshold=args.conf,
        fixture_dir=args.fixtures,
    )
    _write_output(transcript, args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    report = run_fixture_bench(
        iterations=args.iterations, dispatches=args.dispatches, seed=args.seed
    )
    text = report.format_table()
    if args.kernels:
        text += "\n" + format_stage_table(kernel_bench(seed=args.seed))
    _write_output(text, args.out)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    if args.index and (args.gt or args.pred):
        raise ConfigError("give either --index or --gt/--pred, not both")
    if args.index:
        records = load_records(_require_file(args.index, "--index"))
    elif args.gt and args.pred:
        gt_dir = _require_dir(args.gt, "--gt")
        pred_dir = _require_dir(args.pred, "--pred")
        try:
            records = records_from_dirs(gt_dir, pred_dir)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    else:
        raise ConfigError("eval needs --index, or both --gt and --pred")
    _write_output(format_report_tsv(map_summary(records)), args.out)
    return EXIT_OK


_COMMANDS = {
    "serve": cmd_serve,
    "replay": cmd_replay,
    "bench": cmd_bench,
    "eval": cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(
        level=getattr(logging, args.log_level.upper()),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        # Input files that parse but fail validation (bad class ids, malformed
        # box rows) are configuration errors too.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except KeyboardInterrupt:
        return EXIT_OK
    except Exception:
        log.exception("runtime fault")
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
