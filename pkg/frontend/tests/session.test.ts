import { afterEach, describe, expect, it, vi } from "vitest";

import {
  PayloadKind,
  decodePacket,
  encodePacket,
  type Packet,
  type ToneName,
  type WireCue,
} from "../src/protocol.js";
import { ClientSession, type SessionOverlay } from "../src/session.js";
import { FakeAudio, FakeSocket, fakeSocketFactory, hexToBytes } from "./helpers.js";

class RecordingOverlay implements SessionOverlay {
  statuses: string[] = [];
  tones: ToneName[] = [];
  batches: { azimuth: number; gain: number }[][] = [];
  latencies: number[] = [];
  notices: string[] = [];

  setStatus(status: "connecting" | "connected" | "disconnected"): void {
    this.statuses.push(status);
  }
  setTone(tone: ToneName): void {
    this.tones.push(tone);
  }
  setBatch(cues: { azimuth: number; gain: number }[]): void {
    this.batches.push(cues);
  }
  setRealizedLatency(ms: number): void {
    this.latencies.push(ms);
  }
  showNotice(text: string): void {
    this.notices.push(text);
  }
}

const ENGINE_HELLO: Packet = {
  kind: "hello",
  role: 1,
  major: 1,
  minor: 0,
  ident: "scenereader-engine",
};

interface Rig {
  session: ClientSession;
  socket: FakeSocket;
  audio: FakeAudio;
  overlay: RecordingOverlay;
  sockets: FakeSocket[];
}

function connectedRig(): Rig {
  const { sockets, factory } = fakeSocketFactory();
  const audio = new FakeAudio();
  const overlay = new RecordingOverlay();
  const session = new ClientSession({
    url: "ws://127.0.0.1:8765/vrsight/v1",
    socketFactory: factory,
    audio,
    overlay,
    reconnect: false,
  });
  session.connect();
  const socket = sockets[0]!;
  socket.open();
  socket.deliver(ENGINE_HELLO);
  return { session, socket, audio, overlay, sockets };
}

function speechCue(overrides: Partial<WireCue>): WireCue {
  return {
    orderIndex: 0,
    startMs: 0,
    azimuth: 0,
    gain: 1,
    distance: 0.5,
    payloadKind: PayloadKind.SpeechPcm,
    payload: new Uint8Array(96000), // one second of silent 16-bit PCM
    ...overrides,
  };
}

function effectCue(effectId: string, overrides: Partial<WireCue> = {}): WireCue {
  return {
    orderIndex: 0,
    startMs: 0,
    azimuth: 0,
    gain: 1,
    distance: 0.5,
    payloadKind: PayloadKind.EffectId,
    payload: new TextEncoder().encode(effectId),
    ...overrides,
  };
}

function batchOf(batchId: number, cues: WireCue[], tone: ToneName = "neutral"): Packet {
  return { kind: "cue-batch", batchId, tone, cues };
}

afterEach(() => {
  vi.restoreAllMocks();
});

describe("handshake", () => {
  it("sends a client hello on open and accepts the engine hello", () => {
    const { session, socket } = connectedRig();
    const first = decodePacket(socket.sent[0]!);
    expect(first).toEqual({
      kind: "hello",
      role: 0,
      major: 1,
      minor: 0,
      ident: "browser-client",
    });
    expect(session.state).toBe("connected");
    expect(session.engine).toBe("scenereader-engine");
  });

  it("answers ping with pong", () => {
    const { socket } = connectedRig();
    socket.deliver({ kind: "ping" });
    const last = decodePacket(socket.sent.at(-1)!);
    expect(last.kind).toBe("pong");
  });

  it("closes the socket on a garbled frame", () => {
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const { socket } = connectedRig();
    socket.deliverRaw(hexToBytes("58525341010400000000")); // wrong magic
    expect(socket.closed?.code).toBe(4002);
    expect(warn).toHaveBeenCalled();
  });
});

describe("cue playback", () => {
  // Spatialization comes off the wire: pan must equal sin(azimuth) of the
  // transmitted float and gain must pass through untouched, both to 1e-3.
  it("renders pan as sin(azimuth) and gain verbatim", () => {
    const { socket, audio } = connectedRig();
    const azimuths = [-0.5453, 0.0, 0.87266, -1.5707963, 0.25];
    const gains = [1.0, 0.15, 0.5775, 0.33, 0.9];
    socket.deliver(
      batchOf(
        7,
        azimuths.map((az, i) =>
          speechCue({ orderIndex: i, startMs: i * 100, azimuth: az, gain: gains[i]! }),
        ),
      ),
    );
    expect(audio.plays).toHaveLength(5);
    for (let i = 0; i < azimuths.length; i++) {
      const wire = Math.fround(azimuths[i]!);
      expect(Math.abs(audio.plays[i]!.pan - Math.sin(wire))).toBeLessThanOrEqual(1e-3);
      expect(Math.abs(audio.plays[i]!.gain - Math.fround(gains[i]!))).toBeLessThanOrEqual(1e-3);
    }
  });

  it("pans hard left at azimuth -pi/2 and dead center at 0", () => {
    const { socket, audio } = connectedRig();
    socket.deliver(
      batchOf(1, [
        speechCue({ orderIndex: 0, azimuth: -Math.PI / 2 }),
        speechCue({ orderIndex: 1, azimuth: 0 }),
      ]),
    );
    expect(audio.plays[0]!.pan).toBeCloseTo(-1, 6);
    expect(audio.plays[1]!.pan).toBe(0);
  });

  it("schedules each cue start_ms after batch receipt", () => {
    const { socket, audio } = connectedRig();
    audio.t = 12345; // arbitrary receipt time on the audio clock
    const starts = [0, 750, 1500];
    socket.deliver(
      batchOf(
        3,
        starts.map((startMs, i) => speechCue({ orderIndex: i, startMs })),
      ),
    );
    // Expected onsets are pure arithmetic: receipt plus the wire offset.
    const expected = starts.map((s) => 12345 + s);
    const actual = audio.plays.map((p) => p.whenMs);
    for (let i = 0; i < expected.length; i++) {
      expect(Math.abs(actual[i]! - expected[i]!)).toBeLessThanOrEqual(30);
    }
    for (let i = 1; i < actual.length; i++) {
      expect(actual[i]!).toBeGreaterThan(actual[i - 1]!);
    }
  });

  it("decodes speech payloads as 16-bit little-endian PCM", () => {
    const { socket, audio } = connectedRig();
    const payload = hexToBytes("001000800034ff7f"); // 4096, -32768, 13312, 32767
    socket.deliver(batchOf(2, [speechCue({ payload })]));
    const samples = audio.plays[0]!.samples;
    expect(samples).toHaveLength(4);
    expect(samples[0]).toBeCloseTo(4096 / 32768, 7);
    expect(samples[1]).toBeCloseTo(-1.0, 7);
    expect(samples[2]).toBeCloseTo(13312 / 32768, 7);
    expect(samples[3]).toBeCloseTo(32767 / 32768, 7);
    expect(audio.plays[0]!.sampleRate).toBe(48000);
  });

  it("resolves bundled effect ids", () => {
    const { socket, audio } = connectedRig();
    socket.deliver(batchOf(3, [effectCue("boundary-warning")]));
    expect(audio.plays).toHaveLength(1);
    expect(audio.plays[0]!.samples.length).toBe(9600); // 200 ms at 48 kHz
    expect(audio.plays[0]!.sampleRate).toBe(48000);
  });

  it("falls back to the click and warns for unknown effect ids", () => {
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const { socket, audio } = connectedRig();
    socket.deliver(batchOf(4, [effectCue("laser-zap")]));
    expect(audio.plays).toHaveLength(1);
    expect(audio.plays[0]!.samples.length).toBe(1200); // the bundled click
    expect(warn).toHaveBeenCalledWith(expect.stringContaining('unknown effect id "laser-zap"'));
  });

  it("keeps at most one batch active, silencing the old one", () => {
    const { session, socket, audio } = connectedRig();
    socket.deliver(batchOf(10, [speechCue({}), speechCue({ orderIndex: 1, startMs: 900 })]));
    expect(session.activeBatchId).toBe(10);
    audio.t = 300;
    socket.deliver(batchOf(11, [speechCue({})]));
    expect(session.activeBatchId).toBe(11);
    expect(audio.plays[0]!.stopped).toBe(true);
    expect(audio.plays[1]!.stopped).toBe(true);
    expect(audio.plays[2]!.stopped).toBe(false);
  });

  it("reports tone and cue geometry to the overlay", () => {
    const { socket, overlay } = connectedRig();
    socket.deliver(batchOf(5, [speechCue({ azimuth: -0.87, gain: 0.6 })], "fearful"));
    expect(overlay.tones.at(-1)).toBe("fearful");
    const cues = overlay.batches.at(-1)!;
    expect(cues).toHaveLength(1);
    expect(cues[0]!.azimuth).toBeCloseTo(-0.87, 5);
    expect(cues[0]!.gain).toBeCloseTo(0.6, 5);
  });
});

describe("cancel", () => {
  it("stops every scheduled cue within 50 ms of the cancel frame", () => {
    const { session, socket, audio } = connectedRig();
    audio.t = 1000;
    socket.deliver(
      batchOf(21, [
        speechCue({ orderIndex: 0, startMs: 0 }),
        speechCue({ orderIndex: 1, startMs: 750 }),
        speechCue({ orderIndex: 2, startMs: 1500 }),
      ]),
    );
    audio.t = 1200; // mid-playback, two cues still pending
    const cancelReceiptMs = audio.t;
    socket.deliver({ kind: "cancel-batch", batchId: 21 });
    for (const play of audio.plays) {
      expect(play.stopped).toBe(true);
      expect(play.stoppedAtMs! - cancelReceiptMs).toBeLessThanOrEqual(50);
    }
    expect(session.activeBatchId).toBeNull();
  });

  it("clears the overlay bars and survives a cancel with nothing active", () => {
    const { socket, overlay } = connectedRig();
    socket.deliver({ kind: "cancel-batch", batchId: 99 });
    expect(overlay.batches.at(-1)).toEqual([]);
  });
});

describe("key handling", () => {
  it("maps keys 1, 2, 3 to interaction codes 0, 1, 2", () => {
    const { session, socket } = connectedRig();
    const baseline = socket.sent.length;
    session.sendKey("1");
    session.sendKey("2");
    session.sendKey("3");
    const keys = socket.sent.slice(baseline).map((frame) => {
      const packet = decodePacket(frame);
      expect(packet.kind).toBe("keypress");
      return packet.kind === "keypress" ? packet.key : -1;
    });
    expect(keys).toEqual([0, 1, 2]);
  });

  it("sends the packet within 10 ms of the key event", () => {
    const { session, socket } = connectedRig();
    const eventAt = performance.now();
    session.sendKey("1");
    expect(socket.sentAt.at(-1)! - eventAt).toBeLessThanOrEqual(10);
  });

  it("ignores unbound keys", () => {
    const { session, socket } = connectedRig();
    const baseline = socket.sent.length;
    session.sendKey("5");
    session.sendKey("Escape");
    session.sendKey("a");
    expect(socket.sent.length).toBe(baseline);
  });

  it("raises an on-screen and audible notice when pressed while disconnected", () => {
    const { session, socket, audio, overlay } = connectedRig();
    socket.drop();
    expect(session.state).toBe("disconnected");
    const baseline = audio.plays.length;
    session.sendKey("1");
    expect(overlay.notices).toContain("disconnected");
    expect(overlay.statuses.at(-1)).toBe("disconnected");
    // The audible part is the bundled warning sound, played centered.
    expect(audio.plays.length).toBe(baseline + 1);
    expect(audio.plays.at(-1)!.samples.length).toBe(9600);
    expect(audio.plays.at(-1)!.pan).toBe(0);
  });
});

describe("realized latency estimate", () => {
  it("reports arrival minus keypress minus preamble duration", () => {
    const { session, socket, audio, overlay } = connectedRig();
    audio.t = 1000;
    session.sendKey("2");
    // Preamble: one second of speech starting immediately.
    audio.t = 1500;
    socket.deliver(batchOf(30, [speechCue({})]));
    expect(overlay.latencies).toHaveLength(0);
    // Content arrives 2501 ms after the keypress; preamble audio was 1000 ms.
    audio.t = 3501;
    socket.deliver(batchOf(31, [speechCue({})]));
    expect(overlay.latencies).toEqual([3501 - 1000 - 1000]);
  });

  it("ignores unprompted batches", () => {
    const { socket, audio, overlay } = connectedRig();
    audio.t = 50;
    socket.deliver(batchOf(40, [effectCue("boundary-warning")]));
    expect(overlay.latencies).toHaveLength(0);
  });
});

describe("disconnect", () => {
  it("silences playback when the socket drops", () => {
    const { session, socket, audio } = connectedRig();
    socket.deliver(batchOf(50, [speechCue({}), speechCue({ orderIndex: 1, startMs: 500 })]));
    socket.drop();
    expect(audio.plays.every((p) => p.stopped)).toBe(true);
    expect(session.state).toBe("disconnected");
    expect(session.activeBatchId).toBeNull();
  });

  it("close() drops the socket and stays closed", () => {
    const { session, socket, sockets } = connectedRig();
    session.close();
    expect(socket.closed?.code).toBe(1000);
    session.connect(); // no-op once closed
    expect(sockets).toHaveLength(1);
  });
});
