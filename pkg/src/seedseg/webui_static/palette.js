/** Fixed high-contrast overlay palette, cycled per segment. */
export const OVERLAY_ALPHA = 0.5;
export const PALETTE = [
    "#e6194b",
    "#3cb44b",
    "#ffe119",
    "#4363d8",
    "#f58231",
    "#911eb4",
    "#42d4f4",
    "#f032e6",
];
export function paletteColor(index) {
    return PALETTE[((index % PALETTE.length) + PALETTE.length) % PALETTE.length];
}
export function hexToRgb(hex) {
    const match = /^#([0-9a-f]{6})$/i.exec(hex);
    if (!match)
        throw new Error(`not a #rrggbb color: "${hex}"`);
    const value = parseInt(match[1], 16);
    return { r: (value >> 16) & 0xff, g: (value >> 8) & 0xff, b: value & 0xff };
}
