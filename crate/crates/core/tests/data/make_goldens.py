"""Regenerates the synthetic test image, its regions and the golden masks.

Independent of the Rust code: pixel classification is done here with numpy.
Run from this directory: python3 make_goldens.py
"""
import json

import numpy as np
from PIL import Image

W, H = 48, 32
SKIN, RED = (254, 224, 198), (208, 35, 37)
# two near-target distractors, two far ones
PALETTE = [SKIN, (250, 220, 190), RED, (230, 60, 60), (0, 128, 255), (120, 120, 120)]
TARGETS = np.array([SKIN, RED], dtype=float)
ETA = 60.0

img = np.zeros((H, W, 3), dtype=np.uint8)
for y in range(H):
    for x in range(W):
        img[y, x] = PALETTE[(x // 8 + (y // 16) * 3) % len(PALETTE)]
Image.fromarray(img, "RGB").save("synthetic.png")

# axis-aligned rectangles; integer corners, boundary inclusive
RECT_A = (2, 2, 30, 22)
RECT_B = (18, 10, 45, 29)


def rect_region(r):
    x0, y0, x1, y1 = r
    return {"polygon": {"vertices": [[x0, y0], [x1, y0], [x1, y1], [x0, y1]]}}


def rect_mask(r):
    x0, y0, x1, y1 = r
    m = np.zeros((H, W), dtype=bool)
    m[y0 : y1 + 1, x0 : x1 + 1] = True
    return m


for name, r in (("region_a.json", RECT_A), ("region_b.json", RECT_B)):
    with open(name, "w") as f:
        json.dump(rect_region(r), f)
        f.write("\n")

a, b = rect_mask(RECT_A), rect_mask(RECT_B)
dist = np.sqrt(((img[:, :, None, :].astype(float) - TARGETS[None, None]) ** 2).sum(-1)).min(-1)
hit = dist <= ETA

goldens = {
    "restrictive-discriminatory": a & b & hit,
    "nonrestrictive-discriminatory": (a | b) & hit,
    "restrictive-nondiscriminatory": a & b,
    "nonrestrictive-nondiscriminatory": a | b,
}
for name, m in goldens.items():
    out = np.where(m[:, :, None], 255, 0).astype(np.uint8).repeat(3, axis=2)
    Image.fromarray(out, "RGB").save(f"golden_{name}.png")
    print(f"{name}: {int(m.sum())} pixels")
