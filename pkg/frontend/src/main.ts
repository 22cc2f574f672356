/**
 * Page entry: wires the session to a real WebSocket, Web Audio, and the
 * keyboard.  Keys 1, 2, 3 fire the engine interactions; everything audible
 * comes back over the socket as cue batches.
 */

import { DEFAULT_PORT, ENDPOINT_PATH } from "./protocol.js";
import { WebAudioSink } from "./audio.js";
import { DebugOverlay } from "./overlay.js";
import { ClientSession, type SocketFactory } from "./session.js";

function engineUrl(): string {
  const params = new URLSearchParams(window.location.search);
  const host = params.get("engine") ?? `${window.location.hostname || "127.0.0.1"}:${DEFAULT_PORT}`;
  return `ws://${host}${ENDPOINT_PATH}`;
}

const browserSocketFactory: SocketFactory = (url, hooks) => {
  const ws = new WebSocket(url);
  ws.binaryType = "arraybuffer";
  ws.onopen = () => hooks.onOpen();
  ws.onmessage = (ev) => {
    if (ev.data instanceof ArrayBuffer) {
      hooks.onFrame(new Uint8Array(ev.data));
    }
  };
  ws.onclose = () => hooks.onClose();
  return {
    send: (data) => ws.send(data),
    close: (code, reason) => ws.close(code, reason),
  };
};

function boot(): void {
  const root = document.getElementById("overlay");
  if (root === null) {
    throw new Error("missing #overlay element");
  }
  const overlay = new DebugOverlay(root);

  // Browsers refuse to start an AudioContext before a user gesture, so the
  // session only comes up on the first key press or click.
  let session: ClientSession | null = null;
  const start = (): ClientSession => {
    if (session === null) {
      const ctx = new AudioContext({ sampleRate: 48000 });
      session = new ClientSession({
        url: engineUrl(),
        socketFactory: browserSocketFactory,
        audio: new WebAudioSink(ctx),
        overlay,
      });
      session.connect();
    }
    return session;
  };

  window.addEventListener("click", () => {
    start();
  });
  window.addEventListener("keydown", (ev) => {
    start().sendKey(ev.key);
  });
}

boot();
