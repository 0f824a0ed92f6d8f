/**
 * Canvas <-> image coordinate mapping.
 *
 * The canvas backing store always matches the image 1:1; zooming scales the
 * element with CSS. A client offset inside the element therefore maps to the
 * pixel whose scaled box contains it.
 */

export function clientToPixel(
  offsetX: number,
  offsetY: number,
  zoom: number,
): { x: number; y: number } {
  return { x: Math.floor(offsetX / zoom), y: Math.floor(offsetY / zoom) };
}

/** The client-space box a pixel occupies at the given zoom. */
export function pixelBox(
  x: number,
  y: number,
  zoom: number,
): { left: number; top: number; size: number } {
  return { left: x * zoom, top: y * zoom, size: zoom };
}

export function inBounds(x: number, y: number, width: number, height: number): boolean {
  return x >= 0 && y >= 0 && x < width && y < height;
}

export const ZOOM_LEVELS = [1, 2, 3, 4, 6, 8] as const;

export function nextZoom(current: number, direction: 1 | -1): number {
  const index = ZOOM_LEVELS.indexOf(current as (typeof ZOOM_LEVELS)[number]);
  const next = Math.min(Math.max(index + direction, 0), ZOOM_LEVELS.length - 1);
  return ZOOM_LEVELS[next];
}
