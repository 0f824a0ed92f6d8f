/**
 * Canvas <-> image coordinate mapping.
 *
 * The canvas backing store always matches the image 1:1; zooming scales the
 * element with CSS. A client offset inside the element therefore maps to the
 * pixel whose scaled box contains it.
 */
export function clientToPixel(offsetX, offsetY, zoom) {
    return { x: Math.floor(offsetX / zoom), y: Math.floor(offsetY / zoom) };
}
/** The client-space box a pixel occupies at the given zoom. */
export function pixelBox(x, y, zoom) {
    return { left: x * zoom, top: y * zoom, size: zoom };
}
export function inBounds(x, y, width, height) {
    return x >= 0 && y >= 0 && x < width && y < height;
}
export const ZOOM_LEVELS = [1, 2, 3, 4, 6, 8];
export function nextZoom(current, direction) {
    const index = ZOOM_LEVELS.indexOf(current);
    const next = Math.min(Math.max(index + direction, 0), ZOOM_LEVELS.length - 1);
    return ZOOM_LEVELS[next];
}
