import math
import random
import struct

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scenereader.model import Effect, SceneTone, SpatialCue, Speech
from scenereader.orchestrator import CancelBatch, CueBatch, PlacedCue
from scenereader.services import AudioClip
from scenereader.transport import (
    DEFAULT_PORT,
    ENDPOINT_PATH,
    HEADER_LEN,
    PROTOCOL_MAGIC,
    PROTOCOL_VERSION,
    TONE_CODES,
    BadMagic,
    BadVersion,
    CancelBatchPacket,
    CueBatchPacket,
    HelloPacket,
    KeypressPacket,
    Malformed,
    PacketKind,
    PayloadKind,
    PingPacket,
    PongPacket,
    ProtocolError,
    TrailingGarbage,
    Truncated,
    UnknownKind,
    WireCue,
    batch_to_packet,
    decode_packet,
    encode_packet,
    event_to_packet,
)

from oracles import cue_batch_body_size

TONES = list(SceneTone)


def make_cue(order_index=0, payload=b"x", **kw) -> WireCue:
    defaults = dict(
        order_index=order_index,
        start_ms=0,
        azimuth=0.0,
        gain=1.0,
        distance=0.0,
        payload_kind=PayloadKind.EFFECT_ID,
        payload=payload,
    )
    defaults.update(kw)
    return WireCue(**defaults)


def random_packet(rng: random.Random):
    kind = rng.randrange(6)
    if kind == 0:
        ident = "".join(rng.choice("abcdefg-09 é世") for _ in range(rng.randrange(12)))
        return HelloPacket(
            role=rng.randrange(256),
            major=rng.randrange(256),
            minor=rng.randrange(256),
            ident=ident,
        )
    if kind == 1:
        cues = []
        order = 0
        for _ in range(rng.randrange(4)):
            order += rng.randrange(3)
            cues.append(
                WireCue(
                    order_index=order,
                    start_ms=rng.randrange(1 << 32),
                    azimuth=rng.uniform(-math.pi, math.pi),
                    gain=rng.uniform(0.0, 1.0),
                    distance=rng.uniform(0.0, 1.0),
                    payload_kind=PayloadKind(rng.randrange(2)),
                    payload=rng.randbytes(rng.randrange(40)),
                )
            )
        return CueBatchPacket(
            batch_id=rng.randrange(1 << 32), tone=rng.choice(TONES), cues=tuple(cues)
        )
    if kind == 2:
        return CancelBatchPacket(batch_id=rng.randrange(1 << 32))
    if kind == 3:
        return KeypressPacket(key=rng.randrange(256))
    return PingPacket() if kind == 4 else PongPacket()


class TestFrozenFrames:
    def test_ping_is_ten_bytes(self):
        data = encode_packet(PingPacket())
        assert data == b"VRSA\x01\x04\x00\x00\x00\x00"
        assert len(data) == HEADER_LEN

    def test_keypress_frame_bytes(self):
        assert encode_packet(KeypressPacket(key=2)) == b"VRSA\x01\x03\x01\x00\x00\x00\x02"

    def test_hello_frame_bytes(self):
        data = encode_packet(HelloPacket(role=0, major=1, minor=0, ident="c"))
        assert data == b"VRSA\x01\x00\x04\x00\x00\x00\x00\x01\x00c"

    def test_header_constants(self):
        assert PROTOCOL_MAGIC == b"VRSA"
        assert PROTOCOL_VERSION == 1
        assert HEADER_LEN == 10
        assert ENDPOINT_PATH == "/vrsight/v1"
        assert DEFAULT_PORT == 8765

    def test_cue_batch_size_matches_oracle(self):
        cues = (make_cue(0, b"0" * 10), make_cue(1, b"1" * 20))
        data = encode_packet(
            CueBatchPacket(batch_id=7, tone=SceneTone.NEUTRAL, cues=cues)
        )
        assert len(data) == HEADER_LEN + cue_batch_body_size([10, 20])
        assert len(data) == 10 + 83

    def test_tone_codes_cover_all_tones(self):
        assert sorted(TONE_CODES.values()) == list(range(len(TONES)))


class TestRoundTrip:
    def test_seeded_fuzz(self):
        rng = random.Random(2024)
        for _ in range(2_000):
            packet = random_packet(rng)
            assert decode_packet(encode_packet(packet)) == packet

    def test_empty_cue_batch(self):
        packet = CueBatchPacket(batch_id=0, tone=SceneTone.URGENT, cues=())
        assert decode_packet(encode_packet(packet)) == packet

    def test_every_tone_survives(self):
        for tone in TONES:
            packet = CueBatchPacket(batch_id=1, tone=tone, cues=(make_cue(),))
            assert decode_packet(encode_packet(packet)).tone is tone

    def test_unicode_ident(self):
        packet = HelloPacket(role=0, ident="klient-über-世界")
        assert decode_packet(encode_packet(packet)) == packet

    def test_floats_coerced_to_f32_on_construction(self):
        cue = make_cue(azimuth=math.pi, distance=1 / 3)
        f32 = lambda v: struct.unpack("<f", struct.pack("<f", v))[0]  # noqa: E731
        assert cue.azimuth == f32(math.pi)
        assert cue.distance == f32(1 / 3)
        packet = CueBatchPacket(batch_id=1, tone=SceneTone.NEUTRAL, cues=(cue,))
        decoded = decode_packet(encode_packet(packet))
        assert decoded.cues[0].azimuth == cue.azimuth

    @given(
        azimuth=st.floats(allow_nan=False, allow_infinity=False, width=32),
        gain=st.floats(min_value=0.0, max_value=1.0, width=32),
        distance=st.floats(allow_nan=False, allow_infinity=False, width=32),
        payload=st.binary(max_size=64),
        start_ms=st.integers(min_value=0, max_value=0xFFFFFFFF),
    )
    def test_cue_round_trip_property(self, azimuth, gain, distance, payload, start_ms):
        cue = WireCue(
            order_index=0,
            start_ms=start_ms,
            azimuth=azimuth,
            gain=gain,
            distance=distance,
            payload_kind=PayloadKind.SPEECH_PCM,
            payload=payload,
        )
        packet = CueBatchPacket(batch_id=9, tone=SceneTone.SAD, cues=(cue,))
        assert decode_packet(encode_packet(packet)) == packet

    @given(st.text(max_size=40), st.integers(0, 255), st.integers(0, 255))
    def test_hello_round_trip_property(self, ident, major, minor):
        packet = HelloPacket(role=1, major=major, minor=minor, ident=ident)
        assert decode_packet(encode_packet(packet)) == packet


class TestDecodeErrors:
    def test_short_frame_truncated(self):
        with pytest.raises(Truncated):
            decode_packet(b"VRSA\x01\x04")

    def test_declared_body_missing_truncated(self):
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 3, 5) + b"\x00"
        with pytest.raises(Truncated, match="declares 5"):
            decode_packet(data)

    def test_bad_magic(self):
        data = b"XXSA" + encode_packet(PingPacket())[4:]
        with pytest.raises(BadMagic):
            decode_packet(data)

    def test_bad_version(self):
        data = bytearray(encode_packet(PingPacket()))
        data[4] = 2
        with pytest.raises(BadVersion, match="version 2"):
            decode_packet(bytes(data))

    def test_unknown_kind(self):
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 9, 0)
        with pytest.raises(UnknownKind, match="kind 9"):
            decode_packet(data)

    def test_trailing_garbage(self):
        with pytest.raises(TrailingGarbage):
            decode_packet(encode_packet(PingPacket()) + b"\x00")

    def test_cue_count_overruns_body(self):
        body = struct.pack("<IBH", 1, 0, 1)  # one cue promised, none present
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 1, len(body)) + body
        with pytest.raises(Malformed):
            decode_packet(data)

    def test_unknown_tone_code(self):
        body = struct.pack("<IBH", 1, 250, 0)
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 1, len(body)) + body
        with pytest.raises(Malformed, match="tone"):
            decode_packet(data)

    def test_unknown_payload_kind(self):
        body = struct.pack("<IBH", 1, 0, 1) + struct.pack(
            "<HIfffBI", 0, 0, 0.0, 1.0, 0.0, 7, 0
        )
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 1, len(body)) + body
        with pytest.raises(Malformed, match="payload kind"):
            decode_packet(data)

    def test_unread_body_bytes(self):
        body = struct.pack("<I", 1) + b"\x00"
        data = PROTOCOL_MAGIC + struct.pack("<BBI", 1, 2, len(body)) + body
        with pytest.raises(Malformed, match="unread"):
            decode_packet(data)

    def test_all_errors_are_protocol_errors(self):
        for exc in (BadMagic, BadVersion, Truncated, UnknownKind, TrailingGarbage, Malformed):
            assert issubclass(exc, ProtocolError)


class TestFieldValidation:
    def test_gain_bounds(self):
        with pytest.raises(ValueError, match="gain"):
            make_cue(gain=1.01)
        with pytest.raises(ValueError, match="gain"):
            make_cue(gain=-0.01)

    def test_non_finite_floats_rejected(self):
        with pytest.raises(ValueError):
            make_cue(azimuth=math.nan)
        with pytest.raises(ValueError):
            make_cue(distance=math.inf)

    def test_uint_bounds(self):
        with pytest.raises(ValueError):
            make_cue(order_index=1 << 16)
        with pytest.raises(ValueError):
            make_cue(start_ms=-1)
        with pytest.raises(ValueError):
            CancelBatchPacket(batch_id=1 << 32)
        with pytest.raises(ValueError):
            KeypressPacket(key=256)
        with pytest.raises(ValueError):
            HelloPacket(role=300)

    def test_cues_must_be_sorted(self):
        with pytest.raises(ValueError, match="sorted"):
            CueBatchPacket(
                batch_id=1,
                tone=SceneTone.NEUTRAL,
                cues=(make_cue(order_index=2), make_cue(order_index=1)),
            )

    def test_kind_codes(self):
        assert [int(k) for k in PacketKind] == [0, 1, 2, 3, 4, 5]
        assert int(PayloadKind.SPEECH_PCM) == 0
        assert int(PayloadKind.EFFECT_ID) == 1


class TestEventConversion:
    def placed_speech(self, text="hi", start=0, order=0):
        clip = AudioClip.silence(60)
        cue = SpatialCue(
            azimuth=0.25, gain=0.8, distance=0.3, payload=Speech(text), order_index=order
        )
        return PlacedCue(start_ms=start, cue=cue, clip=clip)

    def test_speech_cue_ships_pcm(self):
        placed = self.placed_speech()
        batch = CueBatch(batch_id=3, tone=SceneTone.NEUTRAL, cues=(placed,))
        packet = batch_to_packet(batch)
        wire = packet.cues[0]
        assert wire.payload_kind is PayloadKind.SPEECH_PCM
        assert wire.payload == placed.clip.pcm
        assert wire.start_ms == 0

    def test_effect_cue_ships_id(self):
        cue = SpatialCue(
            azimuth=0.0, gain=1.0, distance=0.0, payload=Effect("boundary-warning"),
            order_index=0,
        )
        batch = CueBatch(
            batch_id=4, tone=SceneTone.URGENT, cues=(PlacedCue(start_ms=0, cue=cue),)
        )
        wire = batch_to_packet(batch).cues[0]
        assert wire.payload_kind is PayloadKind.EFFECT_ID
        assert wire.payload == b"boundary-warning"

    def test_speech_without_clip_falls_back_to_beep(self):
        cue = SpatialCue(
            azimuth=0.0, gain=1.0, distance=0.0, payload=Speech("lost"), order_index=0
        )
        batch = CueBatch(
            batch_id=5, tone=SceneTone.NEUTRAL, cues=(PlacedCue(start_ms=0, cue=cue),)
        )
        wire = batch_to_packet(batch).cues[0]
        assert wire.payload_kind is PayloadKind.EFFECT_ID
        assert wire.payload == b"beep"

    def test_cancel_event(self):
        packet = event_to_packet(CancelBatch(batch_id=12))
        assert packet == CancelBatchPacket(batch_id=12)

    def test_f32_coercion_applied_to_orchestrator_floats(self):
        cue = SpatialCue(
            azimuth=-0.43625, gain=0.575, distance=0.5, payload=Speech("x"), order_index=0
        )
        placed = PlacedCue(start_ms=0, cue=cue, clip=AudioClip.silence(60))
        wire = batch_to_packet(
            CueBatch(batch_id=1, tone=SceneTone.NEUTRAL, cues=(placed,))
        ).cues[0]
        f32 = lambda v: struct.unpack("<f", struct.pack("<f", v))[0]  # noqa: E731
        assert wire.azimuth == f32(-0.43625)
        assert wire.gain == f32(0.575)
