#!/usr/bin/env python3
"""Regenerates the sample images under data/.

Photos come from scikit-image's bundled public-domain / CC0 samples. The
paintings are procedural stand-ins: layered oriented brush dabs with bristle
striations, in three idioms (short dabs, swirling long strokes, dots).
"""
import argparse
import pathlib

import numpy as np
from PIL import Image
from skimage import data


def stroke_painting(rng, size, palette, n_strokes, length, width, angle_fn, bristle):
    h = w = size
    yy, xx = np.mgrid[0:h, 0:w]
    # Underpainting: smooth blend of palette colours.
    base = np.zeros((h, w, 3))
    weights = np.zeros((h, w))
    for _ in range(6):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        col = palette[rng.integers(len(palette))]
        g = np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * (size / 3) ** 2))
        base += g[..., None] * col
        weights += g
    canvas = base / weights[..., None]

    for _ in range(n_strokes):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        theta = angle_fn(cy, cx) + rng.normal(0, 0.15)
        half_len = length * rng.uniform(0.6, 1.2) / 2
        half_w = width * rng.uniform(0.7, 1.3) / 2
        r = int(np.ceil(half_len + half_w)) + 1
        y0, y1 = max(0, int(cy) - r), min(h, int(cy) + r + 1)
        x0, x1 = max(0, int(cx) - r), min(w, int(cx) + r + 1)
        if y0 >= y1 or x0 >= x1:
            continue
        ly, lx = yy[y0:y1, x0:x1] - cy, xx[y0:y1, x0:x1] - cx
        along = lx * np.cos(theta) + ly * np.sin(theta)
        across = -lx * np.sin(theta) + ly * np.cos(theta)
        mask = (np.abs(along) <= half_len) & (np.abs(across) <= half_w)
        if not mask.any():
            continue
        local = canvas[y0:y1, x0:x1]
        col = np.clip(local[mask].mean(axis=0) * 0.4 + palette[rng.integers(len(palette))] * 0.6
                      + rng.normal(0, 12, 3), 0, 255)
        stripes = 1.0 + bristle * np.sin(across * 2.2 + rng.uniform(0, 6.3))
        local[mask] = np.clip(col[None, :] * stripes[mask][:, None], 0, 255)
    return canvas.astype(np.uint8)


def dot_painting(rng, size, palette, n_dots, radius):
    h = w = size
    canvas = np.full((h, w, 3), 235.0)
    yy, xx = np.mgrid[0:h, 0:w]
    for _ in range(n_dots):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        region = (cy / h) + 0.3 * np.sin(cx / w * 6.0)
        col = palette[int(np.clip(region * len(palette), 0, len(palette) - 1))]
        col = np.clip(col + rng.normal(0, 20, 3), 0, 255)
        rad = radius * rng.uniform(0.7, 1.3)
        y0, y1 = max(0, int(cy - rad)), min(h, int(cy + rad) + 1)
        x0, x1 = max(0, int(cx - rad)), min(w, int(cx + rad) + 1)
        mask = (yy[y0:y1, x0:x1] - cy) ** 2 + (xx[y0:y1, x0:x1] - cx) ** 2 <= rad * rad
        canvas[y0:y1, x0:x1][mask] = col
    return canvas.astype(np.uint8)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(1872)
    size = 512

    Image.fromarray(data.astronaut()).save(out / "photo_astronaut.png")
    coffee = data.coffee()
    top, left = (coffee.shape[0] - 400) // 2, (coffee.shape[1] - 400) // 2
    Image.fromarray(coffee[top:top + 400, left:left + 400]).save(out / "photo_coffee.png")

    harbour = np.array([[70, 110, 160], [230, 150, 90], [120, 140, 170], [200, 190, 170], [60, 80, 110]], float)
    dabs = stroke_painting(rng, size, harbour, 9000, 18, 6, lambda y, x: 0.2, 0.18)
    Image.fromarray(dabs).save(out / "painting_dabs.png")

    night = np.array([[25, 45, 110], [60, 95, 170], [230, 210, 90], [30, 70, 60], [150, 170, 200]], float)
    centre = size / 2

    def swirl(y, x):
        return np.arctan2(y - centre, x - centre) + np.pi / 2

    swirls = stroke_painting(rng, size, night, 11000, 30, 5, swirl, 0.3)
    Image.fromarray(swirls).save(out / "painting_swirls.png")

    park = np.array([[90, 140, 80], [60, 100, 60], [200, 190, 120], [120, 150, 190], [220, 120, 80]], float)
    dots = dot_painting(rng, size, park, 60000, 2.5)
    Image.fromarray(dots).save(out / "painting_dots.png")


if __name__ == "__main__":
    main()
