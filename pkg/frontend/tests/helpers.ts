/** Shared test doubles: wire-free socket, recording audio sink, seeded RNG. */

import type { AudioSink, ScheduledHandle } from "../src/audio.js";
import { encodePacket, type Packet } from "../src/protocol.js";
import type { SocketFactory, SocketHooks, WireSocket } from "../src/session.js";

export function hexToBytes(hex: string): Uint8Array {
  const out = new Uint8Array(hex.length / 2);
  for (let i = 0; i < out.length; i++) {
    out[i] = parseInt(hex.slice(i * 2, i * 2 + 2), 16);
  }
  return out;
}

export function bytesToHex(bytes: Uint8Array): string {
  return Array.from(bytes, (b) => b.toString(16).padStart(2, "0")).join("");
}

export class FakeSocket implements WireSocket {
  sent: Uint8Array[] = [];
  sentAt: number[] = [];
  closed: { code?: number; reason?: string } | null = null;

  constructor(public hooks: SocketHooks) {}

  send(data: Uint8Array): void {
    this.sent.push(data);
    this.sentAt.push(performance.now());
  }

  close(code?: number, reason?: string): void {
    this.closed = { code, reason };
  }

  // Test-side controls.
  open(): void {
    this.hooks.onOpen();
  }

  deliver(packet: Packet): void {
    this.hooks.onFrame(encodePacket(packet));
  }

  deliverRaw(data: Uint8Array): void {
    this.hooks.onFrame(data);
  }

  drop(): void {
    this.hooks.onClose();
  }
}

export function fakeSocketFactory(): { sockets: FakeSocket[]; factory: SocketFactory } {
  const sockets: FakeSocket[] = [];
  const factory: SocketFactory = (_url, hooks) => {
    const socket = new FakeSocket(hooks);
    sockets.push(socket);
    return socket;
  };
  return { sockets, factory };
}

export interface PlayRecord {
  samples: Float32Array;
  sampleRate: number;
  whenMs: number;
  pan: number;
  gain: number;
  stopped: boolean;
  stoppedAtMs: number | null;
}

/** Records every scheduled cue; time is a plain counter the test advances. */
export class FakeAudio implements AudioSink {
  t = 0;
  plays: PlayRecord[] = [];

  nowMs(): number {
    return this.t;
  }

  play(
    samples: Float32Array,
    sampleRate: number,
    whenMs: number,
    pan: number,
    gain: number,
  ): ScheduledHandle {
    const record: PlayRecord = {
      samples,
      sampleRate,
      whenMs,
      pan,
      gain,
      stopped: false,
      stoppedAtMs: null,
    };
    this.plays.push(record);
    return {
      stop: () => {
        if (!record.stopped) {
          record.stopped = true;
          record.stoppedAtMs = this.t;
        }
      },
    };
  }
}

/** mulberry32: tiny deterministic PRNG so property tests are replayable. */
export function seededRng(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let z = state;
    z = Math.imul(z ^ (z >>> 15), z | 1);
    z ^= z + Math.imul(z ^ (z >>> 7), z | 61);
    return ((z ^ (z >>> 14)) >>> 0) / 4294967296;
  };
}
