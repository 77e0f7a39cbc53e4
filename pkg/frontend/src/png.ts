/**
 * Minimal deterministic PNG writer plus a small raster canvas.
 *
 * The encoder emits 8-bit RGBA with filter 0 on every scanline and a
 * fixed-level deflate, so identical pixels give identical bytes. The
 * canvas draws what the figure model needs: filled rectangles, thick
 * polylines and bitmap-font tick labels (full text stays in the SVG).
 */

import { deflateSync } from "zlib";

import { FigureModel } from "./figure.js";
import { GLYPHS, GLYPH_H, GLYPH_W, textWidth } from "./font.js";

// --- CRC32 (PNG polynomial) ---

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let i = 0; i < 256; i++) {
    let c = i;
    for (let k = 0; k < 8; k++) {
      c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    }
    table[i] = c >>> 0;
  }
  return table;
})();

function crc32(buf: Buffer): number {
  let c = 0xffffffff;
  for (let i = 0; i < buf.length; i++) {
    c = CRC_TABLE[(c ^ buf[i]!) & 0xff]! ^ (c >>> 8);
  }
  return (c ^ 0xffffffff) >>> 0;
}

function chunk(type: string, data: Buffer): Buffer {
  const head = Buffer.alloc(4);
  head.writeUInt32BE(data.length, 0);
  const body = Buffer.concat([Buffer.from(type, "ascii"), data]);
  const crc = Buffer.alloc(4);
  crc.writeUInt32BE(crc32(body), 0);
  return Buffer.concat([head, body, crc]);
}

export function encodePng(width: number, height: number, rgba: Uint8Array): Buffer {
  const ihdr = Buffer.alloc(13);
  ihdr.writeUInt32BE(width, 0);
  ihdr.writeUInt32BE(height, 4);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 6;   // RGBA
  ihdr[10] = 0;
  ihdr[11] = 0;
  ihdr[12] = 0;
  const stride = width * 4;
  const raw = Buffer.alloc((stride + 1) * height);
  for (let y = 0; y < height; y++) {
    raw[y * (stride + 1)] = 0; // filter 0
    raw.set(rgba.subarray(y * stride, (y + 1) * stride), y * (stride + 1) + 1);
  }
  return Buffer.concat([
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
    chunk("IHDR", ihdr),
    chunk("IDAT", deflateSync(raw, { level: 9 })),
    chunk("IEND", Buffer.alloc(0)),
  ]);
}

// --- canvas ---

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4).fill(255);
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.data[i] = rgb[0];
    this.data[i + 1] = rgb[1];
    this.data[i + 2] = rgb[2];
    this.data[i + 3] = 255;
  }

  fillRect(x0: number, y0: number, w: number, h: number,
           rgb: [number, number, number]): void {
    for (let y = Math.round(y0); y < Math.round(y0 + h); y++) {
      for (let x = Math.round(x0); x < Math.round(x0 + w); x++) {
        this.set(x, y, rgb);
      }
    }
  }

  /** Bresenham with a square pen of the given half width. */
  line(x0: number, y0: number, x1: number, y1: number,
       rgb: [number, number, number], thickness = 2): void {
    let xa = Math.round(x0);
    let ya = Math.round(y0);
    const xb = Math.round(x1);
    const yb = Math.round(y1);
    const dx = Math.abs(xb - xa);
    const dy = -Math.abs(yb - ya);
    const sx = xa < xb ? 1 : -1;
    const sy = ya < yb ? 1 : -1;
    let err = dx + dy;
    const r = Math.floor(thickness / 2);
    for (;;) {
      for (let oy = -r; oy <= r; oy++) {
        for (let ox = -r; ox <= r; ox++) {
          this.set(xa + ox, ya + oy, rgb);
        }
      }
      if (xa === xb && ya === yb) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        xa += sx;
      }
      if (e2 <= dx) {
        err += dx;
        ya += sy;
      }
    }
  }

  text(x: number, y: number, s: string, rgb: [number, number, number]): void {
    let cx = Math.round(x);
    const cy = Math.round(y);
    for (const ch of s) {
      const glyph = GLYPHS[ch] ?? GLYPHS[" "]!;
      for (let row = 0; row < GLYPH_H; row++) {
        for (let col = 0; col < GLYPH_W; col++) {
          if (glyph[row]! & (1 << (GLYPH_W - 1 - col))) {
            this.set(cx + col, cy + row, rgb);
          }
        }
      }
      cx += GLYPH_W + 1;
    }
  }
}

function hexRgb(color: string): [number, number, number] {
  return [
    parseInt(color.slice(1, 3), 16),
    parseInt(color.slice(3, 5), 16),
    parseInt(color.slice(5, 7), 16),
  ];
}

const BLACK: [number, number, number] = [0, 0, 0];
const GRID: [number, number, number] = [221, 221, 221];

export function renderPng(fig: FigureModel): Buffer {
  const cv = new Canvas(fig.width, fig.height);
  const { plot } = fig;

  for (const t of fig.xTicks) {
    cv.line(t.px, plot.y0, t.px, plot.y1, GRID, 1);
    cv.line(t.px, plot.y1, t.px, plot.y1 + 5, BLACK, 1);
    cv.text(t.px - textWidth(t.label) / 2, plot.y1 + 9, t.label, BLACK);
  }
  for (const t of fig.yTicks) {
    cv.line(plot.x0, t.px, plot.x1, t.px, GRID, 1);
    cv.line(plot.x0 - 5, t.px, plot.x0, t.px, BLACK, 1);
    cv.text(plot.x0 - 8 - textWidth(t.label), t.px - 3, t.label, BLACK);
  }

  cv.line(plot.x0, plot.y0, plot.x1, plot.y0, BLACK, 1);
  cv.line(plot.x0, plot.y1, plot.x1, plot.y1, BLACK, 1);
  cv.line(plot.x0, plot.y0, plot.x0, plot.y1, BLACK, 1);
  cv.line(plot.x1, plot.y0, plot.x1, plot.y1, BLACK, 1);

  for (const c of fig.curves) {
    const rgb = hexRgb(c.color);
    for (const seg of c.segments) {
      if (seg.length === 1) {
        cv.fillRect(seg[0]!.x - 2, seg[0]!.y - 2, 4, 4, rgb);
        continue;
      }
      for (let i = 1; i < seg.length; i++) {
        cv.line(seg[i - 1]!.x, seg[i - 1]!.y, seg[i]!.x, seg[i]!.y, rgb, 2);
      }
    }
  }

  // legend swatches (labels may contain characters outside the tiny font,
  // so the PNG carries swatches only; full legend text lives in the SVG)
  let ly = plot.y0 + 8;
  for (const c of fig.curves) {
    cv.fillRect(plot.x0 + 12, ly, 28, 3, hexRgb(c.color));
    ly += 16;
  }

  return encodePng(fig.width, fig.height, cv.data);
}
