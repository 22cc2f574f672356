"""Bit-exact binary packet protocol over websockets, plus the engine server.

Frame layout (all integers little-endian):

    magic   4 bytes  "VRSA"
    version u8       (= 1)
    kind    u8       0 Hello, 1 CueBatch, 2 CancelBatch, 3 Keypress,
                     4 Ping, 5 Pong
    length  u32      body byte length
    body    ...      kind-specific, layouts below

Hello body: role u8 (0 client, 1 engine), major u8, minor u8, ident utf-8
to end of body.  CueBatch body: batch_id u32, tone u8, count u16, then per
cue: order_index u16, start_ms u32, azimuth f32, gain f32, distance f32,
payload_kind u8 (0 speech-pcm, 1 effect-id), payload_len u32, payload.
CancelBatch body: batch_id u32.  Keypress body: key u8.  Ping and Pong
carry empty bodies.

Speech ships as pre-synthesized PCM so clients need no TTS credentials;
effects ship as small ids resolved against the client's bundled sounds.
"""

from __future__ import annotations

import asyncio
import enum
import http
import logging
import math
import struct
import threading
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .orchestrator import CancelBatch, CueBatch, InteractionKey
from .model import SceneTone, Speech

log = logging.getLogger("scenereader.transport")

PROTOCOL_MAGIC = b"VRSA"
PROTOCOL_VERSION = 1
PROTOCOL_MAJOR = 1
PROTOCOL_MINOR = 0
ENDPOINT_PATH = "/vrsight/v1"
DEFAULT_PORT = 8765
HEADER_LEN = 10

ROLE_CLIENT = 0
ROLE_ENGINE = 1

_U8_MAX = 0xFF
_U16_MAX = 0xFFFF
_U32_MAX = 0xFFFFFFFF


class ProtocolError(Exception):
    """Base for all wire-format violations."""


class BadMagic(ProtocolError):
    pass


class BadVersion(ProtocolError):
    pass


class Truncated(ProtocolError):
    pass


class UnknownKind(ProtocolError):
    pass


class TrailingGarbage(ProtocolError):
    pass


class Malformed(ProtocolError):
    """Body bytes inconsistent with the declared layout."""


class PacketKind(enum.IntEnum):
    HELLO = 0
    CUE_BATCH = 1
    CANCEL_BATCH = 2
    KEYPRESS = 3
    PING = 4
    PONG = 5


class PayloadKind(enum.IntEnum):
    SPEECH_PCM = 0
    EFFECT_ID = 1


TONE_CODES: Mapping[SceneTone, int] = {tone: i for i, tone in enumerate(SceneTone)}
_CODE_TONES: Mapping[int, SceneTone] = {i: tone for tone, i in TONE_CODES.items()}

KEY_CODE_TO_INTERACTION: Mapping[int, InteractionKey] = {
    0: InteractionKey.CONTEXT_COMPASS,
    1: InteractionKey.SCENE_SWEEP,
    2: InteractionKey.AIM_ASSIST,
}


def _f32(value: float) -> float:
    """Round to the nearest float32 so encode/decode is an exact identity."""
    coerced = struct.unpack("<f", struct.pack("<f", value))[0]
    if not math.isfinite(coerced):
        raise ValueError(f"float field must be finite, got {value!r}")
    return coerced


def _check_uint(value: int, bound: int, name: str) -> int:
    if not 0 <= value <= bound:
        raise ValueError(f"{name} {value} outside [0, {bound}]")
    return value


@dataclass(frozen=True, slots=True)
class HelloPacket:
    role: int
    major: int = PROTOCOL_MAJOR
    minor: int = PROTOCOL_MINOR
    ident: str = ""

    def __post_init__(self) -> None:
        _check_uint(self.role, _U8_MAX, "role")
        _check_uint(self.major, _U8_MAX, "major")
        _check_uint(self.minor, _U8_MAX, "minor")


@dataclass(frozen=True, slots=True)
class WireCue:
    order_index: int
    start_ms: int
    azimuth: float
    gain: float
    distance: float
    payload_kind: PayloadKind
    payload: bytes

    def __post_init__(self) -> None:
        _check_uint(self.order_index, _U16_MAX, "order_index")
        _check_uint(self.start_ms, _U32_MAX, "start_ms")
        _check_uint(len(self.payload), _U32_MAX, "payload length")
        object.__setattr__(self, "azimuth", _f32(self.azimuth))
        object.__setattr__(self, "gain", _f32(self.gain))
        object.__setattr__(self, "distance", _f32(self.distance))
        if not 0.0 <= self.gain <= 1.0:
            raise ValueError(f"gain {self.gain} outside [0, 1]")
        object.__setattr__(self, "payload_kind", PayloadKind(self.payload_kind))


@dataclass(frozen=True, slots=True)
class CueBatchPacket:
    batch_id: int
    tone: SceneTone
    cues: tuple[WireCue, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        _check_uint(self.batch_id, _U32_MAX, "batch_id")
        _check_uint(len(self.cues), _U16_MAX, "cue count")
        order = [c.order_index for c in self.cues]
        if order != sorted(order):
            raise ValueError("cues must be sorted by order_index")


@dataclass(frozen=True, slots=True)
class CancelBatchPacket:
    batch_id: int

    def __post_init__(self) -> None:
        _check_uint(self.batch_id, _U32_MAX, "batch_id")


@dataclass(frozen=True, slots=True)
class KeypressPacket:
    key: int

    def __post_init__(self) -> None:
        _check_uint(self.key, _U8_MAX, "key")


@dataclass(frozen=True, slots=True)
class PingPacket:
    pass


@dataclass(frozen=True, slots=True)
class PongPacket:
    pass


Packet = Union[
    HelloPacket, CueBatchPacket, CancelBatchPacket, KeypressPacket, PingPacket, PongPacket
]


# --------------------------------------------------------------------------
# Encoding


def _frame(kind: PacketKind, body: bytes) -> bytes:
    return (
        PROTOCOL_MAGIC
        + struct.pack("<BBI", PROTOCOL_VERSION, int(kind), len(body))
        + body
    )


def encode_packet(packet: Packet) -> bytes:
    if isinstance(packet, HelloPacket):
        body = (
            struct.pack("<BBB", packet.role, packet.major, packet.minor)
            + packet.ident.encode("utf-8")
        )
        return _frame(PacketKind.HELLO, body)
    if isinstance(packet, CueBatchPacket):
        parts = [
            struct.pack(
                "<IBH", packet.batch_id, TONE_CODES[packet.tone], len(packet.cues)
            )
        ]
        for cue in packet.cues:
            parts.append(
                struct.pack(
                    "<HIfffBI",
                    cue.order_index,
                    cue.start_ms,
                    cue.azimuth,
                    cue.gain,
                    cue.distance,
                    int(cue.payload_kind),
                    len(cue.payload),
                )
            )
            parts.append(cue.payload)
        return _frame(PacketKind.CUE_BATCH, b"".join(parts))
    if isinstance(packet, CancelBatchPacket):
        return _frame(PacketKind.CANCEL_BATCH, struct.pack("<I", packet.batch_id))
    if isinstance(packet, KeypressPacket):
        return _frame(PacketKind.KEYPRESS, struct.pack("<B", packet.key))
    if isinstance(packet, PingPacket):
        return _frame(PacketKind.PING, b"")
    if isinstance(packet, PongPacket):
        return _frame(PacketKind.PONG, b"")
    raise TypeError(f"not a packet: {packet!r}")


# --------------------------------------------------------------------------
# Decoding


class _Cursor:
    def __init__(self, body: bytes) -> None:
        self._body = body
        self._pos = 0

    def take(self, fmt: str) -> tuple:
        size = struct.calcsize(fmt)
        if self._pos + size > len(self._body):
            raise Malformed("body ends inside a fixed field")
        out = struct.unpack_from(fmt, self._body, self._pos)
        self._pos += size
        return out

    def take_bytes(self, n: int) -> bytes:
        if self._pos + n > len(self._body):
            raise Malformed("body ends inside a variable field")
        out = self._body[self._pos : self._pos + n]
        self._pos += n
        return out

    def rest(self) -> bytes:
        out = self._body[self._pos :]
        self._pos = len(self._body)
        return out

    def finish(self) -> None:
        if self._pos != len(self._body):
            raise Malformed(f"{len(self._body) - self._pos} unread bytes in body")


def decode_packet(data: bytes) -> Packet:
    if len(data) < HEADER_LEN:
        raise Truncated(f"frame is {len(data)} bytes, header needs {HEADER_LEN}")
    if data[:4] != PROTOCOL_MAGIC:
        raise BadMagic(f"magic {data[:4]!r}")
    version, kind_code, length = struct.unpack_from("<BBI", data, 4)
    if version != PROTOCOL_VERSION:
        raise BadVersion(f"version {version}, expected {PROTOCOL_VERSION}")
    if len(data) < HEADER_LEN + length:
        raise Truncated(
            f"header declares {length} body bytes, {len(data) - HEADER_LEN} present"
        )
    if len(data) > HEADER_LEN + length:
        raise TrailingGarbage(f"{len(data) - HEADER_LEN - length} bytes after body")
    try:
        kind = PacketKind(kind_code)
    except ValueError:
        raise UnknownKind(f"kind {kind_code}") from None
    body = data[HEADER_LEN : HEADER_LEN + length]
    cur = _Cursor(body)
    try:
        if kind is PacketKind.HELLO:
            role, major, minor = cur.take("<BBB")
            ident = cur.rest().decode("utf-8", errors="replace")
            return HelloPacket(role=role, major=major, minor=minor, ident=ident)
        if kind is PacketKind.CUE_BATCH:
            batch_id, tone_code, count = cur.take("<IBH")
            tone = _CODE_TONES.get(tone_code)
            if tone is None:
                raise Malformed(f"unknown tone code {tone_code}")
            cues = []
            for _ in range(count):
                order_index, start_ms, azimuth, gain, distance, pk, plen = cur.take(
                    "<HIfffBI"
                )
                payload = cur.take_bytes(plen)
                if pk not in (0, 1):
                    raise Malformed(f"unknown payload kind {pk}")
                cues.append(
                    WireCue(
                        order_index=order_index,
                        start_ms=start_ms,
                        azimuth=azimuth,
                        gain=gain,
                        distance=distance,
                        payload_kind=PayloadKind(pk),
                        payload=payload,
                    )
                )
            cur.finish()
            return CueBatchPacket(batch_id=batch_id, tone=tone, cues=tuple(cues))
        if kind is PacketKind.CANCEL_BATCH:
            (batch_id,) = cur.take("<I")
            cur.finish()
            return CancelBatchPacket(batch_id=batch_id)
        if kind is PacketKind.KEYPRESS:
            (key,) = cur.take("<B")
            cur.finish()
            return KeypressPacket(key=key)
        if kind is PacketKind.PING:
            cur.finish()
            return PingPacket()
        cur.finish()
        return PongPacket()
    except ValueError as exc:
        raise Malformed(str(exc)) from exc


# --------------------------------------------------------------------------
# Orchestrator event -> wire packet


def batch_to_packet(batch: CueBatch) -> CueBatchPacket:
    cues = []
    for placed in batch.cues:
        if placed.clip is not None:
            payload_kind = PayloadKind.SPEECH_PCM
            payload = placed.clip.pcm
        else:
            payload_kind = PayloadKind.EFFECT_ID
            payload_id = (
                placed.cue.payload.effect_id
                if not isinstance(placed.cue.payload, Speech)
                else "beep"
            )
            payload = payload_id.encode("utf-8")
        cues.append(
            WireCue(
                order_index=placed.cue.order_index,
                start_ms=placed.start_ms,
                azimuth=placed.cue.azimuth,
                gain=placed.cue.gain,
                distance=placed.cue.distance,
                payload_kind=payload_kind,
                payload=payload,
            )
        )
    return CueBatchPacket(batch_id=batch.batch_id, tone=batch.tone, cues=tuple(cues))


def event_to_packet(event: CueBatch | CancelBatch) -> Packet:
    if isinstance(event, CueBatch):
        return batch_to_packet(event)
    return CancelBatchPacket(batch_id=event.batch_id)


# --------------------------------------------------------------------------
# Engine-side websocket server

CLOSE_HANDSHAKE_TIMEOUT = 4000
CLOSE_VERSION_MISMATCH = 4001
CLOSE_PROTOCOL_VIOLATION = 4002

HANDSHAKE_TIMEOUT_S = 5.0


class EngineServer:
    """Serves ``/vrsight/v1``: handshake, keypress upstream, cues downstream.

    The asyncio loop runs on a private thread; ``send`` may be called from
    any thread.  Each connection gets one writer task draining a queue, so a
    slow client never blocks the others or the engine.
    """

    def __init__(
        self,
        dispatch: Callable[[InteractionKey], object],
        *,
        host: str = "127.0.0.1",
        port: int = DEFAULT_PORT,
        handshake_timeout_s: float = HANDSHAKE_TIMEOUT_S,
        ident: str = "scenereader-engine",
    ) -> None:
        self._dispatch = dispatch
        self._host = host
        self._requested_port = port
        self._handshake_timeout_s = handshake_timeout_s
        self._ident = ident
        self._loop: asyncio.AbstractEventLoop | None = None
        self._thread: threading.Thread | None = None
        self._started = threading.Event()
        self._stop: asyncio.Event | None = None
        self._queues: set[asyncio.Queue] = set()
        self.port: int | None = None
        self._start_error: BaseException | None = None

    # -- lifecycle --

    def start(self, timeout_s: float = 10.0) -> None:
        self._thread = threading.Thread(
            target=self._run, name="engine-server", daemon=True
        )
        self._thread.start()
        if not self._started.wait(timeout_s):
            raise RuntimeError("websocket server did not start in time")
        if self._start_error is not None:
            raise RuntimeError(f"websocket server failed: {self._start_error}")

    def stop(self) -> None:
        loop, stop = self._loop, self._stop
        if loop is not None and stop is not None:
            loop.call_soon_threadsafe(stop.set)
        if self._thread is not None:
            self._thread.join(timeout=10.0)

    def send(self, event: CueBatch | CancelBatch) -> None:
        """Broadcast an orchestrator event to every established client."""
        data = encode_packet(event_to_packet(event))
        loop = self._loop
        if loop is None:
            return
        loop.call_soon_threadsafe(self._enqueue_all, data)

    # -- loop side --

    def _enqueue_all(self, data: bytes) -> None:
        for queue in self._queues:
            queue.put_nowait(data)

    def _run(self) -> None:
        try:
            asyncio.run(self._main())
        except BaseException as exc:  # surface bind errors to start()
            self._start_error = exc
            self._started.set()

    async def _main(self) -> None:
        from websockets.asyncio.server import serve

        self._stop = asyncio.Event()
        async with serve(
            self._handle,
            self._host,
            self._requested_port,
            process_request=self._process_request,
        ) as server:
            self._loop = asyncio.get_running_loop()
            sockets = server.sockets or []
            if sockets:
                self.port = sockets[0].getsockname()[1]
            self._started.set()
            await self._stop.wait()

    @staticmethod
    def _process_request(connection, request):
        path = request.path.split("?")[0]
        if path != ENDPOINT_PATH:
            return connection.respond(http.HTTPStatus.NOT_FOUND, "unknown endpoint\n")
        return None

    async def _handle(self, conn) -> None:
        from websockets.exceptions import ConnectionClosed

        try:
            raw = await asyncio.wait_for(conn.recv(), timeout=self._handshake_timeout_s)
        except (TimeoutError, asyncio.TimeoutError):
            await conn.close(CLOSE_HANDSHAKE_TIMEOUT, "handshake timeout")
            return
        except ConnectionClosed:
            return
        hello = self._parse_hello(raw)
        if hello is None:
            await conn.close(CLOSE_PROTOCOL_VIOLATION, "expected a valid hello")
            return
        if hello.major != PROTOCOL_MAJOR:
            await conn.close(
                CLOSE_VERSION_MISMATCH,
                f"protocol major {hello.major} unsupported, engine speaks {PROTOCOL_MAJOR}",
            )
            return
        await conn.send(
            encode_packet(
                HelloPacket(
                    role=ROLE_ENGINE,
                    major=PROTOCOL_MAJOR,
                    minor=PROTOCOL_MINOR,
                    ident=self._ident,
                )
            )
        )
        queue: asyncio.Queue = asyncio.Queue()
        self._queues.add(queue)
        writer = asyncio.create_task(self._writer(conn, queue))
        try:
            await self._reader(conn, queue)
        finally:
            self._queues.discard(queue)
            writer.cancel()

    @staticmethod
    def _parse_hello(raw: object) -> HelloPacket | None:
        if not isinstance(raw, (bytes, bytearray)):
            return None
        try:
            packet = decode_packet(bytes(raw))
        except ProtocolError:
            return None
        return packet if isinstance(packet, HelloPacket) else None

    async def _reader(self, conn, queue: asyncio.Queue) -> None:
        from websockets.exceptions import ConnectionClosed

        loop = asyncio.get_running_loop()
        try:
            async for raw in conn:
                if not isinstance(raw, (bytes, bytearray)):
                    await conn.close(CLOSE_PROTOCOL_VIOLATION, "binary frames only")
                    return
                try:
                    packet = decode_packet(bytes(raw))
                except ProtocolError as exc:
                    await conn.close(CLOSE_PROTOCOL_VIOLATION, f"bad packet: {exc}")
                    return
                if isinstance(packet, KeypressPacket):
                    interaction = KEY_CODE_TO_INTERACTION.get(packet.key)
                    if interaction is None:
                        log.warning("ignoring unknown keypress code %d", packet.key)
                        continue
                    await loop.run_in_executor(None, self._dispatch, interaction)
                elif isinstance(packet, PingPacket):
                    queue.put_nowait(encode_packet(PongPacket()))
                else:
                    log.warning(
                        "ignoring unexpected %s from client", type(packet).__name__
                    )
        except ConnectionClosed:
            return

    @staticmethod
    async def _writer(conn, queue: asyncio.Queue) -> None:
        from websockets.exceptions import ConnectionClosed

        try:
            while True:
                data = await queue.get()
                await conn.send(data)
        except (ConnectionClosed, asyncio.CancelledError):
            return
