"""Out-of-process perception backends speaking a line protocol.

A real detector or depth model runs as a child process.  For each frame the
engine writes ``FRAME <seq>`` to the child's stdin; the child answers on
stdout with the same record format used by annotation files (7-field
detections and depth scripts), bracketed by ``FRAME <seq>`` and
``END <seq>``.  Records for a sequence the engine never asked about are
stored anyway, so free-running adapters that push results unprompted also
work.
"""

from __future__ import annotations

import subprocess
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..model import Detection, Frame
from .backends import (
    BackendUnavailable,
    DEFAULT_CONF_THRESHOLD,
    DepthScript,
    depth_from_script,
    parse_record,
    sort_detections,
)
from .letterbox import MODEL_INPUT_SIZE, bbox_to_original, letterbox_transform


@dataclass
class _Block:
    detections: list[Detection] = field(default_factory=list)
    depth_script: DepthScript | None = None


class AdapterProcess:
    """Owns the child process and the stdout reader thread.

    Completed blocks are kept per sequence number; only the most recent
    ``keep`` blocks survive so a fast producer cannot grow memory unbounded.
    """

    def __init__(
        self,
        cmd: list[str],
        *,
        cwd: str | Path | None = None,
        timeout_s: float = 2.0,
        keep: int = 8,
    ) -> None:
        self._timeout_s = timeout_s
        self._keep = keep
        self._base_dir = Path(cwd) if cwd is not None else Path.cwd()
        self._lock = threading.Lock()
        self._ready = threading.Condition(self._lock)
        self._blocks: dict[int, _Block] = {}
        self._dead = False
        self._dead_reason = ""
        try:
            self._proc = subprocess.Popen(
                cmd,
                cwd=cwd,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise BackendUnavailable(f"cannot start adapter {cmd[0]!r}: {exc}") from exc
        self._reader = threading.Thread(
            target=self._read_loop, name="adapter-reader", daemon=True
        )
        self._reader.start()

    def _read_loop(self) -> None:
        assert self._proc.stdout is not None
        current_seq: int | None = None
        current = _Block()
        reason = "adapter closed stdout"
        try:
            for raw in self._proc.stdout:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                head = line.split()
                if head[0] == "FRAME":
                    current_seq = int(head[1])
                    current = _Block()
                    continue
                if head[0] == "END":
                    if current_seq is not None and int(head[1]) == current_seq:
                        self._store(current_seq, current)
                    current_seq = None
                    continue
                if current_seq is None:
                    continue
                _, record = parse_record(line, self._base_dir)
                if isinstance(record, DepthScript):
                    current.depth_script = record
                else:
                    current.detections.append(record)
        except (ValueError, OSError) as exc:
            reason = f"adapter protocol error: {exc}"
        with self._ready:
            self._dead = True
            self._dead_reason = reason
            self._ready.notify_all()

    def _store(self, seq: int, block: _Block) -> None:
        with self._ready:
            self._blocks[seq] = block
            while len(self._blocks) > self._keep:
                del self._blocks[min(self._blocks)]
            self._ready.notify_all()

    def request(self, seq: int) -> _Block:
        """Announce ``seq`` to the child and wait for its block."""
        with self._ready:
            if seq in self._blocks:
                return self._blocks[seq]
            if self._dead:
                raise BackendUnavailable(self._dead_reason)
        try:
            assert self._proc.stdin is not None
            self._proc.stdin.write(f"FRAME {seq}\n")
            self._proc.stdin.flush()
        except (OSError, ValueError) as exc:
            raise BackendUnavailable(f"adapter stdin closed: {exc}") from exc
        with self._ready:
            got = self._ready.wait_for(
                lambda: seq in self._blocks or self._dead, timeout=self._timeout_s
            )
            if seq in self._blocks:
                return self._blocks[seq]
            if self._dead:
                raise BackendUnavailable(self._dead_reason)
            if not got:
                raise BackendUnavailable(
                    f"adapter gave no answer for seq {seq} within {self._timeout_s}s"
                )
            raise BackendUnavailable(f"adapter dropped seq {seq}")

    def close(self) -> None:
        if self._proc.poll() is None:
            try:
                if self._proc.stdin is not None:
                    self._proc.stdin.close()
            except OSError:
                pass
            self._proc.terminate()
            try:
                self._proc.wait(timeout=2.0)
            except subprocess.TimeoutExpired:
                self._proc.kill()
                self._proc.wait()

    def __enter__(self) -> AdapterProcess:
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()


class AdapterDetectorBackend:
    """Detections from an adapter child, mapped back to frame coordinates.

    ``letterboxed`` means the child reports boxes in the square model input
    space and they must be unmapped to the original frame.
    """

    def __init__(
        self,
        process: AdapterProcess,
        *,
        conf_threshold: float = DEFAULT_CONF_THRESHOLD,
        letterboxed: bool = False,
        model_size: int = MODEL_INPUT_SIZE,
    ) -> None:
        self.conf_threshold = conf_threshold
        self._process = process
        self._letterboxed = letterboxed
        self._model_size = model_size

    def detect(self, frame: Frame) -> list[Detection]:
        block = self._process.request(frame.seq)
        out: list[Detection] = []
        transform = None
        if self._letterboxed:
            transform = letterbox_transform(
                frame.width, frame.height, self._model_size
            )
        for det in block.detections:
            if det.confidence < self.conf_threshold:
                continue
            box = det.bbox
            if transform is not None:
                box = bbox_to_original(box, transform, frame.width, frame.height)
            else:
                box = box.clamped(frame.width, frame.height)
            out.append(Detection(cls=det.cls, bbox=box, confidence=det.confidence))
        return sort_detections(out)


class AdapterDepthBackend:
    """Depth maps produced from the adapter's per-frame depth script."""

    def __init__(self, process: AdapterProcess) -> None:
        self._process = process

    def estimate_depth(self, frame: Frame):
        block = self._process.request(frame.seq)
        if block.depth_script is None:
            raise BackendUnavailable(f"adapter sent no depth for seq {frame.seq}")
        return depth_from_script(block.depth_script, frame.width, frame.height)
