/**
 * Debug overlay: a small DOM panel showing connection status, the tone of
 * the last batch, one azimuth/gain bar per active cue, and the last
 * realized-latency estimate.  Purely informational, there is no other
 * visual output.
 */

import { toneLabel, type ToneName } from "./protocol.js";

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export interface OverlayCue {
  azimuth: number;
  gain: number;
}

const STATUS_COLORS: Record<ConnectionStatus, string> = {
  connecting: "#b58900",
  connected: "#2aa198",
  disconnected: "#dc322f",
};

// Bars map azimuth linearly onto the track, center = straight ahead.
// The engine field of view never exceeds a half-turn, so clamp at +/- pi/2.
export function azimuthToPercent(azimuth: number): number {
  const half = Math.PI / 2;
  const clamped = Math.max(-half, Math.min(half, azimuth));
  return 50 + 50 * (clamped / half);
}

export class DebugOverlay {
  private statusEl: HTMLElement;
  private toneEl: HTMLElement;
  private latencyEl: HTMLElement;
  private noticeEl: HTMLElement;
  private cuesEl: HTMLElement;

  constructor(private root: HTMLElement) {
    const doc = root.ownerDocument;
    const make = (cls: string): HTMLElement => {
      const el = doc.createElement("div");
      el.className = cls;
      root.appendChild(el);
      return el;
    };
    this.statusEl = make("sr-status");
    this.toneEl = make("sr-tone");
    this.latencyEl = make("sr-latency");
    this.noticeEl = make("sr-notice");
    this.cuesEl = make("sr-cues");
    this.setStatus("connecting");
    this.toneEl.textContent = "Tone: -";
    this.latencyEl.textContent = "Realized latency: -";
  }

  setStatus(status: ConnectionStatus): void {
    this.statusEl.textContent = status;
    this.statusEl.style.color = STATUS_COLORS[status];
    this.statusEl.classList.toggle("sr-disconnected", status === "disconnected");
    if (status === "connected") {
      this.noticeEl.textContent = "";
    }
  }

  setTone(tone: ToneName): void {
    this.toneEl.textContent = `Tone: ${toneLabel(tone)}`;
  }

  setRealizedLatency(ms: number): void {
    this.latencyEl.textContent = `Realized latency: ${Math.round(ms)} ms`;
  }

  showNotice(text: string): void {
    this.noticeEl.textContent = text;
  }

  /** Replace the per-cue bars; pass an empty list when playback stops. */
  setBatch(cues: OverlayCue[]): void {
    const doc = this.root.ownerDocument;
    this.cuesEl.textContent = "";
    for (const cue of cues) {
      const row = doc.createElement("div");
      row.className = "sr-cue";

      const track = doc.createElement("div");
      track.className = "sr-az-track";
      const marker = doc.createElement("div");
      marker.className = "sr-az-marker";
      marker.style.left = `${azimuthToPercent(cue.azimuth).toFixed(1)}%`;
      track.appendChild(marker);

      const gainBar = doc.createElement("div");
      gainBar.className = "sr-gain-bar";
      gainBar.style.width = `${(cue.gain * 100).toFixed(1)}%`;

      const label = doc.createElement("span");
      label.className = "sr-cue-label";
      label.textContent = `az ${cue.azimuth.toFixed(2)} gain ${cue.gain.toFixed(2)}`;

      row.appendChild(track);
      row.appendChild(gainBar);
      row.appendChild(label);
      this.cuesEl.appendChild(row);
    }
  }
}
