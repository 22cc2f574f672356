import sys
import textwrap
import time

import numpy as np
import pytest
import cv2

from scenereader.clock import VirtualClock
from scenereader.config import load_config
from scenereader.engine import (
    KEY_ALIASES,
    TRANSCRIPT_HEADER,
    Engine,
    TranscriptRecorder,
    build_perception,
    build_services,
    parse_key_list,
)
from scenereader.model import Effect, SceneTone, SpatialCue, Speech
from scenereader.orchestrator import CancelBatch, CueBatch, InteractionKey, PlacedCue
from scenereader.perception import (
    AdapterDepthBackend,
    AdapterDetectorBackend,
    FixtureDepthBackend,
    FixtureDetectorBackend,
)
from scenereader.services import AudioClip, FixtureServices, HttpServices


class TestParseKeyList:
    def test_aliases_and_rest(self):
        assert parse_key_list("cc,ss,aa,-") == [
            InteractionKey.CONTEXT_COMPASS,
            InteractionKey.SCENE_SWEEP,
            InteractionKey.AIM_ASSIST,
            None,
        ]

    def test_whitespace_and_case_tolerated(self):
        assert parse_key_list(" CC , aa ") == [
            InteractionKey.CONTEXT_COMPASS,
            InteractionKey.AIM_ASSIST,
        ]

    def test_unknown_token(self):
        with pytest.raises(ValueError, match="unknown key 'sweep'"):
            parse_key_list("cc,sweep")

    def test_empty_spec(self):
        with pytest.raises(ValueError, match="unknown key"):
            parse_key_list("")

    def test_alias_table_is_total(self):
        assert set(KEY_ALIASES.values()) == set(InteractionKey)


def speech_batch(batch_id, text, *, start_ms=0, azimuth=0.25, gain=0.5):
    cue = SpatialCue(azimuth=azimuth, gain=gain, distance=1.0, payload=Speech(text))
    clip = AudioClip(pcm=b"\0" * 960, duration_ms=10)
    return CueBatch(
        batch_id=batch_id,
        tone=SceneTone.NEUTRAL,
        cues=(PlacedCue(start_ms=start_ms, cue=cue, clip=clip),),
    )


class TestTranscriptRecorder:
    def test_speech_row_shape(self):
        clock = VirtualClock(start_ms=1000.0)
        rec = TranscriptRecorder(clock)
        rec(speech_batch(1, "Hello   there", start_ms=40))
        lines = rec.text().splitlines()
        assert lines[0] == TRANSCRIPT_HEADER
        assert lines[1] == "1040\tspeech\t0.2500\t0.5000\tHello there"

    def test_effect_and_cancel_rows(self):
        clock = VirtualClock()
        rec = TranscriptRecorder(clock)
        cue = SpatialCue(
            azimuth=-0.5, gain=1.0, distance=0.0, payload=Effect("boundary-warning")
        )
        rec(CueBatch(batch_id=7, tone=SceneTone.URGENT, cues=(PlacedCue(0, cue),)))
        clock.advance_ms(250.0)
        rec(CancelBatch(batch_id=7))
        lines = rec.text().splitlines()
        assert lines[1] == "0\teffect\t-0.5000\t1.0000\tboundary-warning"
        assert lines[2] == "250\tcancel\t-\t-\tbatch 7"

    def test_blank_speech_marked_empty(self):
        rec = TranscriptRecorder(VirtualClock())
        rec(speech_batch(1, "   "))
        assert rec.text().splitlines()[1].endswith("\t(empty)")

    def test_rows_keep_emission_order(self):
        clock = VirtualClock()
        rec = TranscriptRecorder(clock)
        rec(speech_batch(1, "first", start_ms=500))
        rec(speech_batch(2, "second", start_ms=0))
        rows = rec.text().splitlines()[1:]
        assert [r.split("\t")[4] for r in rows] == ["first", "second"]

    def test_write_round_trips(self, tmp_path):
        rec = TranscriptRecorder(VirtualClock())
        rec(speech_batch(3, "saved"))
        out = tmp_path / "transcript.tsv"
        rec.write(out)
        assert out.read_text(encoding="utf-8") == rec.text()


@pytest.fixture
def workspace(tmp_path):
    frames = tmp_path / "frames"
    frames.mkdir()
    for i in range(3):
        img = np.full((120, 160, 3), 90, dtype=np.uint8)
        assert cv2.imwrite(str(frames / f"frame_{i:03d}.png"), img)
    ann = tmp_path / "scene.ann"
    ann.write_text(
        textwrap.dedent(
            """\
            0 0 0.90 10 30 50 90
            0 15 0.80 100 30 150 90
            0 20 0.95 120 10 160 110
            0 constant 0.3
            1 0 0.90 10 30 50 90
            1 constant 0.3
            2 0 0.90 10 30 50 90
            2 constant 0.3
            """
        )
    )
    cfg = tmp_path / "engine.yaml"
    cfg.write_text(
        "ingestion:\n  mode: image-dir\n  path: frames\n  fps: 60\n"
        "perception:\n  annotations: scene.ann\n"
    )
    return tmp_path


class TestBuilders:
    def test_fixture_services_default(self, workspace):
        cfg = load_config(workspace / "engine.yaml")
        client = build_services(cfg.services, VirtualClock())
        assert isinstance(client._backend, FixtureServices)

    def test_http_services(self, workspace):
        body = (workspace / "engine.yaml").read_text() + (
            "services:\n  mode: http\n  endpoint: http://127.0.0.1:1/v1\n  model: tiny\n"
        )
        (workspace / "engine.yaml").write_text(body)
        cfg = load_config(workspace / "engine.yaml")
        client = build_services(cfg.services, VirtualClock())
        assert isinstance(client._backend, HttpServices)
        assert client._backend._config.model == "tiny"

    def test_fixture_perception(self, workspace):
        cfg = load_config(workspace / "engine.yaml")
        detector, depther, process = build_perception(cfg.perception)
        assert isinstance(detector, FixtureDetectorBackend)
        assert isinstance(depther, FixtureDepthBackend)
        assert process is None

    def test_adapter_perception_owns_process(self, workspace):
        body = (
            "ingestion:\n  mode: image-dir\n  path: frames\n"
            "perception:\n"
            "  detector: adapter\n"
            "  depth: adapter\n"
            f"  adapter_cmd: [{sys.executable}, -c, 'import sys; sys.stdin.read()']\n"
        )
        (workspace / "engine.yaml").write_text(body)
        cfg = load_config(workspace / "engine.yaml")
        detector, depther, process = build_perception(cfg.perception)
        try:
            assert isinstance(detector, AdapterDetectorBackend)
            assert isinstance(depther, AdapterDepthBackend)
            assert process is not None
        finally:
            process.close()


def wait_until(predicate, *, timeout_s=5.0, interval_s=0.01):
    deadline = time.monotonic() + timeout_s
    while time.monotonic() < deadline:
        if predicate():
            return True
        time.sleep(interval_s)
    return False


class TestEngineLive:
    @pytest.fixture
    def engine(self, workspace):
        config = load_config(workspace / "engine.yaml")
        events = []
        eng = Engine(config, extra_sinks=[events.append])
        eng.events = events
        yield eng
        eng.stop()

    def test_pipeline_feeds_dispatch(self, engine):
        engine.start()
        assert wait_until(
            lambda: engine.orchestrator.channels.detections.read() is not None
        )
        engine.dispatch(InteractionKey.SCENE_SWEEP)
        batches = [e for e in engine.events if isinstance(e, CueBatch)]
        texts = [
            p.cue.payload.text
            for b in batches
            for p in b.cues
            if isinstance(p.cue.payload, Speech)
        ]
        assert "Reading all objects" in texts
        assert any("avatar" in t for t in texts)

    def test_safeguard_fires_from_detection_worker(self, engine):
        engine.start()
        found = wait_until(
            lambda: any(
                isinstance(p.cue.payload, Effect)
                and p.cue.payload.effect_id == "boundary-warning"
                for e in engine.events
                if isinstance(e, CueBatch)
                for p in e.cues
            )
        )
        assert found

    def test_stop_joins_threads(self, engine):
        engine.start()
        assert wait_until(
            lambda: engine.orchestrator.channels.frame.read() is not None
        )
        engine.stop()
        assert all(not t.is_alive() for t in engine._threads)

    def test_dispatch_failure_is_contained(self, engine, monkeypatch, caplog):
        def boom(key):
            raise RuntimeError("synthetic")

        monkeypatch.setattr(engine.orchestrator, "dispatch", boom)
        with caplog.at_level("ERROR"):
            engine.dispatch(InteractionKey.CONTEXT_COMPASS)
        assert "dispatch ContextCompass failed" in caplog.text
        assert "synthetic" in caplog.text
