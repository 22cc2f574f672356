/**
 * Audio output layer.  The session schedules cues through the `AudioSink`
 * interface; tests inject a recording fake, the page injects `WebAudioSink`.
 *
 * Spatialization is intentionally simple: stereo pan follows sin(azimuth)
 * with no head tracking, and the output level is the gain the engine put on
 * the wire.  The client never recomputes spatial math, it only renders the
 * fields it was handed.
 */

export interface ScheduledHandle {
  /** Stop this cue now, whether it is pending or already sounding. */
  stop(): void;
}

export interface AudioSink {
  /** Current time on the platform audio clock, in milliseconds. */
  nowMs(): number;
  /**
   * Schedule mono samples to start at `whenMs` on the sink's own clock.
   * `pan` is -1 hard left to +1 hard right, `gain` a 0..1 level.
   */
  play(samples: Float32Array, sampleRate: number, whenMs: number, pan: number, gain: number): ScheduledHandle;
}

/** Stereo pan law: equal left/right energy at azimuth 0, hard left at -pi/2. */
export function panForAzimuth(azimuth: number): number {
  return Math.sin(azimuth);
}

/** Wire speech payloads are 16-bit little-endian mono PCM. */
export function pcmToFloat32(payload: Uint8Array): Float32Array {
  const frames = Math.floor(payload.length / 2);
  const view = new DataView(payload.buffer, payload.byteOffset, payload.byteLength);
  const out = new Float32Array(frames);
  for (let i = 0; i < frames; i++) {
    out[i] = view.getInt16(i * 2, true) / 32768;
  }
  return out;
}

export function durationMs(samples: Float32Array, sampleRate: number): number {
  return (samples.length / sampleRate) * 1000;
}

/** Web Audio implementation; only constructed on a real page. */
export class WebAudioSink implements AudioSink {
  constructor(private ctx: AudioContext) {}

  nowMs(): number {
    return this.ctx.currentTime * 1000;
  }

  play(
    samples: Float32Array,
    sampleRate: number,
    whenMs: number,
    pan: number,
    gain: number,
  ): ScheduledHandle {
    const buffer = this.ctx.createBuffer(1, samples.length, sampleRate);
    buffer.copyToChannel(samples, 0);
    const source = this.ctx.createBufferSource();
    source.buffer = buffer;
    const panner = new StereoPannerNode(this.ctx, { pan });
    const level = new GainNode(this.ctx, { gain });
    source.connect(panner).connect(level).connect(this.ctx.destination);
    source.start(Math.max(whenMs, this.nowMs()) / 1000);
    let stopped = false;
    return {
      stop: () => {
        if (stopped) {
          return;
        }
        stopped = true;
        try {
          source.stop();
        } catch {
          // stopping an already-finished source throws on some engines
        }
        source.disconnect();
      },
    };
  }
}
