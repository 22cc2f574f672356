/**
 * Binary packet codec for the engine websocket feed.
 *
 * Frame layout (all integers little-endian):
 *
 *     magic   4 bytes  "VRSA"
 *     version u8       (= 1)
 *     kind    u8       0 Hello, 1 CueBatch, 2 CancelBatch, 3 Keypress,
 *                      4 Ping, 5 Pong
 *     length  u32      body byte length
 *     body    ...      kind-specific, layouts below
 *
 * Hello body: role u8 (0 client, 1 engine), major u8, minor u8, ident
 * utf-8 to end of body.  CueBatch body: batch_id u32, tone u8, count u16,
 * then per cue: order_index u16, start_ms u32, azimuth f32, gain f32,
 * distance f32, payload_kind u8 (0 speech-pcm, 1 effect-id), payload_len
 * u32, payload.  CancelBatch body: batch_id u32.  Keypress body: key u8.
 * Ping and Pong carry empty bodies.
 *
 * The engine's encoder is the reference implementation; the test suite
 * pins frames captured from it so both sides stay byte-identical.
 */

export const PROTOCOL_MAGIC = new Uint8Array([0x56, 0x52, 0x53, 0x41]); // "VRSA"
export const PROTOCOL_VERSION = 1;
export const PROTOCOL_MAJOR = 1;
export const PROTOCOL_MINOR = 0;
export const ENDPOINT_PATH = "/vrsight/v1";
export const DEFAULT_PORT = 8765;
export const HEADER_LEN = 10;

export const ROLE_CLIENT = 0;
export const ROLE_ENGINE = 1;

export const CLOSE_HANDSHAKE_TIMEOUT = 4000;
export const CLOSE_VERSION_MISMATCH = 4001;
export const CLOSE_PROTOCOL_VIOLATION = 4002;

export enum PacketKind {
  Hello = 0,
  CueBatch = 1,
  CancelBatch = 2,
  Keypress = 3,
  Ping = 4,
  Pong = 5,
}

export enum PayloadKind {
  SpeechPcm = 0,
  EffectId = 1,
}

/** Tone codes 0..4 in wire order. */
export const TONE_NAMES = ["neutral", "cheerful", "sad", "fearful", "urgent"] as const;
export type ToneName = (typeof TONE_NAMES)[number];

export class ProtocolError extends Error {
  constructor(message: string) {
    super(message);
    this.name = new.target.name;
  }
}
export class BadMagic extends ProtocolError {}
export class BadVersion extends ProtocolError {}
export class Truncated extends ProtocolError {}
export class UnknownKind extends ProtocolError {}
export class TrailingGarbage extends ProtocolError {}
export class Malformed extends ProtocolError {}

export interface HelloPacket {
  kind: "hello";
  role: number;
  major: number;
  minor: number;
  ident: string;
}

export interface WireCue {
  orderIndex: number;
  startMs: number;
  /** Radians, already float32-rounded on decode. */
  azimuth: number;
  gain: number;
  distance: number;
  payloadKind: PayloadKind;
  payload: Uint8Array;
}

export interface CueBatchPacket {
  kind: "cue-batch";
  batchId: number;
  tone: ToneName;
  cues: WireCue[];
}

export interface CancelBatchPacket {
  kind: "cancel-batch";
  batchId: number;
}

export interface KeypressPacket {
  kind: "keypress";
  key: number;
}

export interface PingPacket {
  kind: "ping";
}

export interface PongPacket {
  kind: "pong";
}

export type Packet =
  | HelloPacket
  | CueBatchPacket
  | CancelBatchPacket
  | KeypressPacket
  | PingPacket
  | PongPacket;

const U8_MAX = 0xff;
const U16_MAX = 0xffff;
const U32_MAX = 0xffffffff;

function checkUint(value: number, bound: number, name: string): number {
  if (!Number.isInteger(value) || value < 0 || value > bound) {
    throw new RangeError(`${name} ${value} outside [0, ${bound}]`);
  }
  return value;
}

function checkFloat(value: number, name: string): number {
  // Round to float32 up front so validation sees the value the wire carries.
  const coerced = Math.fround(value);
  if (!Number.isFinite(coerced)) {
    throw new RangeError(`${name} must be finite, got ${value}`);
  }
  return coerced;
}

// ---------------------------------------------------------------------------
// Encoding

class Writer {
  private chunks: Uint8Array[] = [];
  private scratch = new DataView(new ArrayBuffer(8));

  u8(value: number): void {
    this.chunks.push(new Uint8Array([value & 0xff]));
  }

  u16(value: number): void {
    this.scratch.setUint16(0, value, true);
    this.chunks.push(new Uint8Array(this.scratch.buffer.slice(0, 2)));
  }

  u32(value: number): void {
    this.scratch.setUint32(0, value, true);
    this.chunks.push(new Uint8Array(this.scratch.buffer.slice(0, 4)));
  }

  f32(value: number): void {
    this.scratch.setFloat32(0, value, true);
    this.chunks.push(new Uint8Array(this.scratch.buffer.slice(0, 4)));
  }

  bytes(value: Uint8Array): void {
    this.chunks.push(value);
  }

  concat(): Uint8Array {
    const total = this.chunks.reduce((n, c) => n + c.length, 0);
    const out = new Uint8Array(total);
    let pos = 0;
    for (const chunk of this.chunks) {
      out.set(chunk, pos);
      pos += chunk.length;
    }
    return out;
  }
}

function frame(kind: PacketKind, body: Uint8Array): Uint8Array {
  const out = new Uint8Array(HEADER_LEN + body.length);
  out.set(PROTOCOL_MAGIC, 0);
  out[4] = PROTOCOL_VERSION;
  out[5] = kind;
  new DataView(out.buffer).setUint32(6, body.length, true);
  out.set(body, HEADER_LEN);
  return out;
}

const utf8Encoder = new TextEncoder();
const utf8Decoder = new TextDecoder("utf-8");

export function encodePacket(packet: Packet): Uint8Array {
  switch (packet.kind) {
    case "hello": {
      const w = new Writer();
      w.u8(checkUint(packet.role, U8_MAX, "role"));
      w.u8(checkUint(packet.major, U8_MAX, "major"));
      w.u8(checkUint(packet.minor, U8_MAX, "minor"));
      w.bytes(utf8Encoder.encode(packet.ident));
      return frame(PacketKind.Hello, w.concat());
    }
    case "cue-batch": {
      const toneCode = TONE_NAMES.indexOf(packet.tone);
      if (toneCode < 0) {
        throw new RangeError(`unknown tone ${packet.tone}`);
      }
      const w = new Writer();
      w.u32(checkUint(packet.batchId, U32_MAX, "batch_id"));
      w.u8(toneCode);
      w.u16(checkUint(packet.cues.length, U16_MAX, "cue count"));
      let lastOrder = -1;
      for (const cue of packet.cues) {
        checkUint(cue.orderIndex, U16_MAX, "order_index");
        if (cue.orderIndex < lastOrder) {
          throw new RangeError("cues must be sorted by order_index");
        }
        lastOrder = cue.orderIndex;
        const gain = checkFloat(cue.gain, "gain");
        if (gain < 0 || gain > 1) {
          throw new RangeError(`gain ${gain} outside [0, 1]`);
        }
        w.u16(cue.orderIndex);
        w.u32(checkUint(cue.startMs, U32_MAX, "start_ms"));
        w.f32(checkFloat(cue.azimuth, "azimuth"));
        w.f32(gain);
        w.f32(checkFloat(cue.distance, "distance"));
        w.u8(cue.payloadKind);
        w.u32(checkUint(cue.payload.length, U32_MAX, "payload length"));
        w.bytes(cue.payload);
      }
      return frame(PacketKind.CueBatch, w.concat());
    }
    case "cancel-batch": {
      const w = new Writer();
      w.u32(checkUint(packet.batchId, U32_MAX, "batch_id"));
      return frame(PacketKind.CancelBatch, w.concat());
    }
    case "keypress": {
      const w = new Writer();
      w.u8(checkUint(packet.key, U8_MAX, "key"));
      return frame(PacketKind.Keypress, w.concat());
    }
    case "ping":
      return frame(PacketKind.Ping, new Uint8Array(0));
    case "pong":
      return frame(PacketKind.Pong, new Uint8Array(0));
  }
}

// ---------------------------------------------------------------------------
// Decoding

class Cursor {
  private pos = 0;
  private view: DataView;

  constructor(private body: Uint8Array) {
    this.view = new DataView(body.buffer, body.byteOffset, body.byteLength);
  }

  private need(n: number, what: string): void {
    if (this.pos + n > this.body.length) {
      throw new Malformed(`body ends inside a ${what} field`);
    }
  }

  u8(): number {
    this.need(1, "fixed");
    return this.view.getUint8(this.pos++);
  }

  u16(): number {
    this.need(2, "fixed");
    const out = this.view.getUint16(this.pos, true);
    this.pos += 2;
    return out;
  }

  u32(): number {
    this.need(4, "fixed");
    const out = this.view.getUint32(this.pos, true);
    this.pos += 4;
    return out;
  }

  f32(): number {
    this.need(4, "fixed");
    const out = this.view.getFloat32(this.pos, true);
    this.pos += 4;
    return out;
  }

  bytes(n: number): Uint8Array {
    this.need(n, "variable");
    const out = this.body.slice(this.pos, this.pos + n);
    this.pos += n;
    return out;
  }

  rest(): Uint8Array {
    const out = this.body.slice(this.pos);
    this.pos = this.body.length;
    return out;
  }

  finish(): void {
    if (this.pos !== this.body.length) {
      throw new Malformed(`${this.body.length - this.pos} unread bytes in body`);
    }
  }
}

export function decodePacket(data: Uint8Array): Packet {
  if (data.length < HEADER_LEN) {
    throw new Truncated(`frame is ${data.length} bytes, header needs ${HEADER_LEN}`);
  }
  for (let i = 0; i < 4; i++) {
    if (data[i] !== PROTOCOL_MAGIC[i]) {
      throw new BadMagic(`magic ${String.fromCharCode(...data.slice(0, 4))}`);
    }
  }
  const head = new DataView(data.buffer, data.byteOffset, data.byteLength);
  const version = head.getUint8(4);
  if (version !== PROTOCOL_VERSION) {
    throw new BadVersion(`version ${version}, expected ${PROTOCOL_VERSION}`);
  }
  const kindCode = head.getUint8(5);
  const length = head.getUint32(6, true);
  if (data.length < HEADER_LEN + length) {
    throw new Truncated(
      `header declares ${length} body bytes, ${data.length - HEADER_LEN} present`,
    );
  }
  if (data.length > HEADER_LEN + length) {
    throw new TrailingGarbage(`${data.length - HEADER_LEN - length} bytes after body`);
  }
  if (!(kindCode in PacketKind)) {
    throw new UnknownKind(`kind ${kindCode}`);
  }
  const cur = new Cursor(data.slice(HEADER_LEN));
  switch (kindCode as PacketKind) {
    case PacketKind.Hello: {
      const role = cur.u8();
      const major = cur.u8();
      const minor = cur.u8();
      const ident = utf8Decoder.decode(cur.rest());
      return { kind: "hello", role, major, minor, ident };
    }
    case PacketKind.CueBatch: {
      const batchId = cur.u32();
      const toneCode = cur.u8();
      const count = cur.u16();
      const tone = TONE_NAMES[toneCode];
      if (tone === undefined) {
        throw new Malformed(`unknown tone code ${toneCode}`);
      }
      const cues: WireCue[] = [];
      for (let i = 0; i < count; i++) {
        const orderIndex = cur.u16();
        const startMs = cur.u32();
        const azimuth = cur.f32();
        const gain = cur.f32();
        const distance = cur.f32();
        const payloadKind = cur.u8();
        const payloadLen = cur.u32();
        const payload = cur.bytes(payloadLen);
        if (payloadKind !== PayloadKind.SpeechPcm && payloadKind !== PayloadKind.EffectId) {
          throw new Malformed(`unknown payload kind ${payloadKind}`);
        }
        cues.push({ orderIndex, startMs, azimuth, gain, distance, payloadKind, payload });
      }
      cur.finish();
      return { kind: "cue-batch", batchId, tone, cues };
    }
    case PacketKind.CancelBatch: {
      const batchId = cur.u32();
      cur.finish();
      return { kind: "cancel-batch", batchId };
    }
    case PacketKind.Keypress: {
      const key = cur.u8();
      cur.finish();
      return { kind: "keypress", key };
    }
    case PacketKind.Ping:
      cur.finish();
      return { kind: "ping" };
    case PacketKind.Pong:
      cur.finish();
      return { kind: "pong" };
    default:
      throw new UnknownKind(`kind ${kindCode}`);
  }
}

/** Capitalized label for the overlay, e.g. "fearful" to "Fearful". */
export function toneLabel(tone: ToneName): string {
  return tone.charAt(0).toUpperCase() + tone.slice(1);
}
