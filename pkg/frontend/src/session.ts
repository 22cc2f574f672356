/**
 * Client session: one websocket to the engine, one active cue batch, and
 * the key bindings that fire interactions.
 *
 * Everything runs on the page's single event loop.  The only clock that
 * matters for playback is the audio sink's own clock: cue onsets are
 * computed once, at batch receipt, as receipt time plus the cue's start
 * offset, and handed to the sink to realize.  The session never recomputes
 * spatial math; pan is sin(azimuth) of the wire field and the wire gain is
 * used as the output level verbatim.
 */

import {
  decodePacket,
  encodePacket,
  CLOSE_PROTOCOL_VIOLATION,
  PROTOCOL_MAJOR,
  PROTOCOL_MINOR,
  PayloadKind,
  ProtocolError,
  ROLE_CLIENT,
  ROLE_ENGINE,
  type CueBatchPacket,
  type Packet,
  type ToneName,
} from "./protocol.js";
import {
  durationMs,
  panForAzimuth,
  pcmToFloat32,
  type AudioSink,
  type ScheduledHandle,
} from "./audio.js";
import { EFFECT_SAMPLE_RATE, fallbackClick, resolveEffect } from "./effects.js";

/** What the session tells the overlay; DebugOverlay implements this. */
export interface SessionOverlay {
  setStatus(status: "connecting" | "connected" | "disconnected"): void;
  setTone(tone: ToneName): void;
  setBatch(cues: { azimuth: number; gain: number }[]): void;
  setRealizedLatency(ms: number): void;
  showNotice(text: string): void;
}

/** DOM key values bound to engine interaction codes. */
export const KEY_BINDINGS: Readonly<Record<string, number>> = {
  "1": 0, // ContextCompass
  "2": 1, // SceneSweep
  "3": 2, // AimAssist
};

/** Reconnect delays; the last entry repeats until a handshake succeeds. */
export const RECONNECT_LADDER_MS = [500, 1000, 2000, 5000] as const;

export type SessionState = "connecting" | "connected" | "disconnected";

/** Transport-agnostic socket surface so tests can substitute the wire. */
export interface WireSocket {
  send(data: Uint8Array): void;
  close(code?: number, reason?: string): void;
}

export interface SocketHooks {
  onOpen(): void;
  onFrame(data: Uint8Array): void;
  onClose(): void;
}

export type SocketFactory = (url: string, hooks: SocketHooks) => WireSocket;

export interface SessionOptions {
  url: string;
  socketFactory: SocketFactory;
  audio: AudioSink;
  overlay?: SessionOverlay;
  ident?: string;
  /** Disable to manage reconnection externally (tests, one-shot drives). */
  reconnect?: boolean;
}

interface ActiveCue {
  handle: ScheduledHandle;
  azimuth: number;
  gain: number;
}

export class ClientSession {
  private socket: WireSocket | null = null;
  private stateValue: SessionState = "disconnected";
  private activeBatch: number | null = null;
  private playQueue: ActiveCue[] = [];
  private reconnectAttempt = 0;
  private reconnectTimer: ReturnType<typeof setTimeout> | null = null;
  private closed = false;
  private engineIdent: string | null = null;

  // Realized-latency estimate for the overlay.  The wire carries no engine
  // ledger, so measure the same quantity from this side: content-batch
  // arrival minus keypress send minus the preamble batch's audio length.
  private keySentAtMs: number | null = null;
  private preambleDurMs = 0;
  private latencyPhase: 0 | 1 | 2 = 0;

  constructor(private opts: SessionOptions) {}

  get state(): SessionState {
    return this.stateValue;
  }

  get activeBatchId(): number | null {
    return this.activeBatch;
  }

  get engine(): string | null {
    return this.engineIdent;
  }

  connect(): void {
    if (this.closed) {
      return;
    }
    this.stateValue = "connecting";
    this.opts.overlay?.setStatus("connecting");
    this.socket = this.opts.socketFactory(this.opts.url, {
      onOpen: () => this.handleOpen(),
      onFrame: (data) => this.handleFrame(data),
      onClose: () => this.handleClose(),
    });
  }

  /** Stop playback, drop the socket, and give up on reconnecting. */
  close(): void {
    this.closed = true;
    if (this.reconnectTimer !== null) {
      clearTimeout(this.reconnectTimer);
      this.reconnectTimer = null;
    }
    this.silenceAll();
    this.socket?.close(1000, "client going away");
    this.socket = null;
    this.stateValue = "disconnected";
  }

  /**
   * Handle a DOM key value.  Unbound keys do nothing; bound keys become a
   * Keypress packet sent immediately, on this same tick.
   */
  sendKey(domKey: string): void {
    const code = KEY_BINDINGS[domKey];
    if (code === undefined) {
      return;
    }
    if (this.stateValue !== "connected" || this.socket === null) {
      this.notifyDisconnected();
      return;
    }
    this.keySentAtMs = this.opts.audio.nowMs();
    this.latencyPhase = 1;
    this.socket.send(encodePacket({ kind: "keypress", key: code }));
  }

  // -- socket callbacks ----------------------------------------------------

  private handleOpen(): void {
    this.socket?.send(
      encodePacket({
        kind: "hello",
        role: ROLE_CLIENT,
        major: PROTOCOL_MAJOR,
        minor: PROTOCOL_MINOR,
        ident: this.opts.ident ?? "browser-client",
      }),
    );
  }

  private handleFrame(data: Uint8Array): void {
    let packet: Packet;
    try {
      packet = decodePacket(data);
    } catch (err) {
      if (err instanceof ProtocolError) {
        console.warn(`dropping engine frame: ${err.message}`);
        this.socket?.close(CLOSE_PROTOCOL_VIOLATION, err.name);
        return;
      }
      throw err;
    }
    switch (packet.kind) {
      case "hello":
        if (packet.role === ROLE_ENGINE) {
          this.engineIdent = packet.ident;
          this.stateValue = "connected";
          this.reconnectAttempt = 0; // handshake done, backoff starts over
          this.opts.overlay?.setStatus("connected");
        }
        break;
      case "cue-batch":
        this.playBatch(packet);
        break;
      case "cancel-batch":
        this.silenceAll();
        this.opts.overlay?.setBatch([]);
        break;
      case "ping":
        this.socket?.send(encodePacket({ kind: "pong" }));
        break;
      case "pong":
      case "keypress":
        break; // engine-bound kinds, nothing to do client-side
    }
  }

  private handleClose(): void {
    this.socket = null;
    this.silenceAll();
    this.stateValue = "disconnected";
    this.opts.overlay?.setStatus("disconnected");
    this.opts.overlay?.setBatch([]);
    if (this.closed || this.opts.reconnect === false) {
      return;
    }
    const ladder = RECONNECT_LADDER_MS;
    const delay = ladder[Math.min(this.reconnectAttempt, ladder.length - 1)] as number;
    this.reconnectAttempt += 1;
    this.reconnectTimer = setTimeout(() => {
      this.reconnectTimer = null;
      this.connect();
    }, delay);
  }

  // -- playback ------------------------------------------------------------

  private playBatch(batch: CueBatchPacket): void {
    this.silenceAll(); // at most one active batch
    const receiptMs = this.opts.audio.nowMs();
    let batchEndMs = 0;
    for (const cue of batch.cues) {
      let samples: Float32Array;
      let rate: number;
      if (cue.payloadKind === PayloadKind.SpeechPcm) {
        samples = pcmToFloat32(cue.payload);
        rate = 48000;
      } else {
        const effectId = new TextDecoder().decode(cue.payload);
        const effect = resolveEffect(effectId);
        if (effect === null) {
          console.warn(`unknown effect id "${effectId}", playing click instead`);
          const click = fallbackClick();
          samples = click.samples;
          rate = click.sampleRate;
        } else {
          samples = effect.samples;
          rate = effect.sampleRate;
        }
      }
      const handle = this.opts.audio.play(
        samples,
        rate,
        receiptMs + cue.startMs,
        panForAzimuth(cue.azimuth),
        cue.gain,
      );
      this.playQueue.push({ handle, azimuth: cue.azimuth, gain: cue.gain });
      batchEndMs = Math.max(batchEndMs, cue.startMs + durationMs(samples, rate));
    }
    this.activeBatch = batch.batchId;
    this.opts.overlay?.setTone(batch.tone);
    this.opts.overlay?.setBatch(
      this.playQueue.map((c) => ({ azimuth: c.azimuth, gain: c.gain })),
    );
    this.updateLatencyEstimate(receiptMs, batchEndMs);
  }

  private updateLatencyEstimate(receiptMs: number, batchEndMs: number): void {
    if (this.latencyPhase === 1) {
      // First batch after a keypress is the preamble.
      this.preambleDurMs = batchEndMs;
      this.latencyPhase = 2;
    } else if (this.latencyPhase === 2 && this.keySentAtMs !== null) {
      const realized = Math.max(0, receiptMs - this.keySentAtMs - this.preambleDurMs);
      this.opts.overlay?.setRealizedLatency(realized);
      this.latencyPhase = 0;
    }
  }

  private silenceAll(): void {
    for (const cue of this.playQueue) {
      cue.handle.stop();
    }
    this.playQueue = [];
    this.activeBatch = null;
  }

  private notifyDisconnected(): void {
    this.opts.overlay?.showNotice("disconnected");
    const warning = resolveEffect("warning");
    if (warning !== null) {
      this.opts.audio.play(
        warning.samples,
        EFFECT_SAMPLE_RATE,
        this.opts.audio.nowMs(),
        0,
        1,
      );
    }
  }
}
