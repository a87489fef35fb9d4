"""Deterministic synthetic face corpus.

Every image is a procedural cartoon face rendered with hard-edged numpy
rasterization, so a fixed spec regenerates bit-identical files. Age drives
three visible cues (wrinkle strokes in fixed cheek slots, slight face
elongation, hair desaturation) and each schema attribute drives exactly one
region overlay, which keeps labels exact by construction and lets a plain
region/color test read every bit back.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ConfigError
from .images import save_png
from .manifest import write_age_labels, write_attribute_manifest
from .records import AttributeVector, DatasetRecord, SYNTHETIC_SCHEMA

# Normalized geometry (fractions of the image side). The layout keeps every
# attribute overlay, the wrinkle slots and the detector boxes disjoint.
FACE_CENTER = (0.5, 0.55)
FACE_RX = 0.26
FACE_RY_BASE = 0.31
FACE_RY_AGE_GAIN = 0.03
HAIR_CENTER = (0.5, 0.40)
HAIR_R = 0.34
EYE_Y = 0.47
EYE_R = 0.030
BROW_Y = (0.425, 0.437)
GLASS_Y = (0.445, 0.528)
GLASS_HALF_W = 0.06
BRIDGE_Y = (0.476, 0.492)
NOSE_Y = (0.50, 0.60)
MOUTH_CY = 0.705
MOUTH_RY = 0.030
MUSTACHE_X = (0.42, 0.58)
MUSTACHE_Y = (0.630, 0.662)
BANGS_X = (0.40, 0.60)
BANGS_Y = (0.30, 0.38)
WRINKLE_BANDS_X = ((0.30, 0.39), (0.61, 0.70))
WRINKLE_ROW0_Y = 0.555
WRINKLE_ROW_STEP = 0.03
MAX_WRINKLES = 8

# Base palette. Hair desaturation moves each channel toward the color's own
# mean, so hair brightness separates blond/brown at every age.
SKIN_TAN = (172, 134, 108)
SKIN_PALE = (231, 205, 185)
HAIR_BROWN = (70, 50, 36)
HAIR_BLOND = (220, 180, 104)
BACKGROUND = (210, 215, 220)
EYE_COLOR = (35, 28, 24)
BROW_COLOR = (50, 35, 28)
GLASS_COLOR = (25, 25, 28)
NOSE_COLOR = (120, 88, 70)
MOUTH_OPEN_COLOR = (120, 35, 35)
MOUTH_LINE_COLOR = (165, 95, 90)
MUSTACHE_COLOR = (40, 28, 22)
WRINKLE_COLOR = (95, 62, 48)

# Detector boxes (x0, x1, y0, y1), all interior to a single solid fill.
HAIR_BOX = (0.42, 0.58, 0.10, 0.20)
SKIN_BOX = (0.47, 0.53, 0.78, 0.83)
BANGS_PROBE_X = (0.44, 0.56)
MOUTH_PROBE_Y = (MOUTH_CY - 0.008, MOUTH_CY + 0.008)
# Bridge x narrowed to its extent under the smallest eye spacing.
BRIDGE_PROBE_X = (0.47, 0.53)
# Everything glasses rendering may touch; used by the "glasses only change
# the eye region" construction test.
GLASSES_EXTENT = (0.29, 0.71, 0.435, 0.54)

AGE_RANGES = {
    "C0_30": (20, 30),
    "C31_40": (31, 40),
    "C41_50": (41, 50),
    "C51_PLUS": (51, 75),
}


@dataclass(frozen=True)
class SyntheticCorpusSpec:
    count: int
    seed: int
    resolution: int = 64
    identity_count: int = 24
    schema: tuple[str, ...] = tuple(SYNTHETIC_SCHEMA)

    def validate(self):
        if self.count <= 0:
            raise ConfigError(f"corpus count must be > 0, got {self.count}")
        if self.identity_count <= 0:
            raise ConfigError(f"identity_count must be > 0, got {self.identity_count}")
        if self.resolution < 32:
            raise ConfigError(f"resolution must be >= 32, got {self.resolution}")
        unknown = set(self.schema) - set(SYNTHETIC_SCHEMA)
        if unknown:
            raise ConfigError(f"synthetic renderer has no overlay for {sorted(unknown)}")


@dataclass(frozen=True)
class IdentityParams:
    face_width: float
    eye_dx: float
    eye_ry: float
    mouth_half_w: float
    skin_jitter: tuple[int, int, int]
    hair_jitter: tuple[int, int, int]
    background_jitter: tuple[int, int, int]


def wrinkle_count_for_age(age_years: int) -> int:
    """Stroke count rendered for an age; flat at zero through the young bucket."""
    if age_years <= 30:
        return 0
    return min(MAX_WRINKLES, 1 + (age_years - 31) // 6)


def hair_desaturation(age_years: int) -> float:
    return 0.6 * float(np.clip((age_years - 28) / 47.0, 0.0, 1.0))


def identity_params(rng: np.random.RandomState) -> IdentityParams:
    return IdentityParams(
        face_width=rng.uniform(0.95, 1.05),
        eye_dx=rng.uniform(0.10, 0.13),
        eye_ry=rng.uniform(0.024, 0.034),
        mouth_half_w=rng.uniform(0.07, 0.09),
        skin_jitter=tuple(rng.randint(-10, 11, size=3)),
        hair_jitter=tuple(rng.randint(-8, 9, size=3)),
        background_jitter=tuple(rng.randint(-6, 7, size=3)),
    )


def render_face(resolution: int, ident: IdentityParams, age_years: int, attrs: AttributeVector) -> np.ndarray:
    """Render one face to a [-1, 1] buffer. Pure in all arguments."""
    img = np.zeros((resolution, resolution, 3), dtype=np.uint8)
    img[:, :] = _jitter(BACKGROUND, ident.background_jitter)

    bit = lambda name: name in attrs.schema and attrs.get(name) >= 0.5

    hair_base = HAIR_BLOND if bit("Blond_Hair") else HAIR_BROWN
    hair = _desaturate(_jitter(hair_base, ident.hair_jitter), hair_desaturation(age_years))
    skin = _jitter(SKIN_PALE if bit("Pale_Skin") else SKIN_TAN, ident.skin_jitter)

    _ellipse(img, HAIR_CENTER, HAIR_R, HAIR_R, hair)
    face_ry = FACE_RY_BASE + FACE_RY_AGE_GAIN * float(np.clip((age_years - 20) / 55.0, 0.0, 1.0))
    face_rx = FACE_RX * ident.face_width
    _ellipse(img, FACE_CENTER, face_rx, face_ry, skin)

    if bit("Bangs"):
        _rect(img, BANGS_X, BANGS_Y, hair)

    for side in (-1, 1):
        ex = 0.5 + side * ident.eye_dx
        _rect(img, (ex - 0.04, ex + 0.04), BROW_Y, BROW_COLOR)
        _ellipse(img, (ex, EYE_Y), EYE_R, ident.eye_ry, EYE_COLOR)

    if bit("Eyeglasses"):
        t = max(1, round(resolution / 64))
        for side in (-1, 1):
            ex = 0.5 + side * ident.eye_dx
            _frame(img, (ex - GLASS_HALF_W, ex + GLASS_HALF_W), GLASS_Y, t, GLASS_COLOR)
        _rect(img, (0.5 - ident.eye_dx + GLASS_HALF_W, 0.5 + ident.eye_dx - GLASS_HALF_W),
              BRIDGE_Y, GLASS_COLOR)

    _rect(img, (0.494, 0.506), NOSE_Y, NOSE_COLOR)

    stroke_h = max(1, round(resolution / 64)) / resolution
    for slot in range(wrinkle_count_for_age(age_years)):
        band = WRINKLE_BANDS_X[slot % 2]
        y = WRINKLE_ROW0_Y + WRINKLE_ROW_STEP * (slot // 2)
        _rect(img, band, (y, y + stroke_h), WRINKLE_COLOR)

    if bit("Mustache"):
        _rect(img, MUSTACHE_X, MUSTACHE_Y, MUSTACHE_COLOR)

    if bit("Mouth_Open"):
        _ellipse(img, (0.5, MOUTH_CY), ident.mouth_half_w, MOUTH_RY, MOUTH_OPEN_COLOR)
    else:
        line_h = max(1, round(resolution / 64)) / resolution
        _rect(img, (0.5 - ident.mouth_half_w, 0.5 + ident.mouth_half_w),
              (MOUTH_CY, MOUTH_CY + line_h), MOUTH_LINE_COLOR)

    return (img.astype(np.float32) / 127.5) - 1.0


def generate_synthetic_corpus(spec: SyntheticCorpusSpec, out_dir: str) -> list[DatasetRecord]:
    """Render the corpus to out_dir and return its records.

    Emits images/ PNGs plus the attribute manifest (attributes.txt) and the
    age label file (ages.csv) in the same conventions real datasets use.
    """
    spec.validate()
    rng = np.random.RandomState(spec.seed)
    identities = [identity_params(rng) for _ in range(spec.identity_count)]
    schema = list(spec.schema)
    clusters = list(AGE_RANGES.values())

    images_dir = os.path.join(out_dir, "images")
    os.makedirs(images_dir, exist_ok=True)

    records = []
    for i in range(spec.count):
        ident_idx = int(rng.randint(0, spec.identity_count))
        lo, hi = clusters[int(rng.randint(0, len(clusters)))]
        age = int(rng.randint(lo, hi + 1))
        values = [float(b) for b in rng.randint(0, 2, size=len(schema))]
        attrs = AttributeVector(values, schema)

        filename = f"img_{i:05d}.png"
        path = os.path.join(images_dir, filename)
        save_png(render_face(spec.resolution, identities[ident_idx], age, attrs), path)
        records.append(
            DatasetRecord(
                image_path=path,
                attributes=attrs,
                age_years=age,
                identity_id=f"id{ident_idx:04d}",
            )
        )

    write_attribute_manifest(os.path.join(out_dir, "attributes.txt"), records, schema)
    write_age_labels(os.path.join(out_dir, "ages.csv"), records)
    return records


# --- trivially coded readback (region/color tests) ---

def detect_attributes(buffer: np.ndarray, schema: list[str] | None = None) -> dict[str, int]:
    """Recover attribute bits from a rendered face by region color tests."""
    schema = list(SYNTHETIC_SCHEMA) if schema is None else schema
    u8 = ((buffer + 1.0) * 127.5).round().clip(0, 255)
    hair = _box_mean(u8, HAIR_BOX)
    skin = _box_mean(u8, SKIN_BOX)
    forehead = _exact_rect_pixels(u8, BANGS_PROBE_X, BANGS_Y).reshape(-1, 3).mean(axis=0)
    out = {}
    for name in schema:
        if name == "Blond_Hair":
            out[name] = int(hair.mean() > 110)
        elif name == "Pale_Skin":
            out[name] = int(skin.mean() > 170)
        elif name == "Bangs":
            to_hair = np.abs(forehead - hair).sum()
            to_skin = np.abs(forehead - skin).sum()
            out[name] = int(to_hair < to_skin)
        elif name == "Eyeglasses":
            bridge = _exact_rect_pixels(u8, BRIDGE_PROBE_X, BRIDGE_Y)
            out[name] = int(bridge.mean() < 90)
        elif name == "Mustache":
            bar = _exact_rect_pixels(u8, (0.45, 0.55), MUSTACHE_Y)
            out[name] = int(bar.mean() < 90)
        elif name == "Mouth_Open":
            lips = _exact_rect_pixels(u8, (0.47, 0.53), MOUTH_PROBE_Y)
            out[name] = int(lips.mean() < 90)
        else:
            raise ConfigError(f"no detector for synthetic attribute {name!r}")
    return out


def count_wrinkle_strokes(buffer: np.ndarray) -> int:
    """Count rendered wrinkle strokes by probing the fixed cheek slots."""
    u8 = ((buffer + 1.0) * 127.5).round().clip(0, 255)
    res = u8.shape[0]
    stroke_h = max(1, round(res / 64)) / res
    n = 0
    for slot in range(MAX_WRINKLES):
        x0, x1 = WRINKLE_BANDS_X[slot % 2]
        y = WRINKLE_ROW0_Y + WRINKLE_ROW_STEP * (slot // 2)
        box = _exact_rect_pixels(u8, (x0 + 0.01, x1 - 0.01), (y, y + stroke_h))
        if box.size and box.reshape(-1, 3).mean(axis=1).min() < 100:
            n += 1
    return n


def _jitter(color, jitter):
    return tuple(int(np.clip(c + j, 0, 255)) for c, j in zip(color, jitter))


def _desaturate(color, amount):
    mean = sum(color) / 3.0
    return tuple(int(round(c + amount * (mean - c))) for c in color)


def _ellipse(img, center, rx, ry, color):
    res = img.shape[0]
    ys, xs = np.mgrid[0:res, 0:res]
    cx, cy = center[0] * res, center[1] * res
    mask = ((xs + 0.5 - cx) / (rx * res)) ** 2 + ((ys + 0.5 - cy) / (ry * res)) ** 2 <= 1.0
    img[mask] = color


def _rect_bounds(res, x_range, y_range):
    """Pixel bounds a rectangle rasterizes to; shared by renderer and probes."""
    x0, x1 = int(round(x_range[0] * res)), int(round(x_range[1] * res))
    y0, y1 = int(round(y_range[0] * res)), int(round(y_range[1] * res))
    return max(x0, 0), max(x1, 0), max(y0, 0), max(y1, 0)


def _rect(img, x_range, y_range, color):
    x0, x1, y0, y1 = _rect_bounds(img.shape[0], x_range, y_range)
    img[y0:y1, x0:x1] = color


def _exact_rect_pixels(u8, x_range, y_range):
    x0, x1, y0, y1 = _rect_bounds(u8.shape[0], x_range, y_range)
    return u8[y0:y1, x0:x1]


def _frame(img, x_range, y_range, thickness, color):
    res = img.shape[0]
    x0, x1 = int(round(x_range[0] * res)), int(round(x_range[1] * res))
    y0, y1 = int(round(y_range[0] * res)), int(round(y_range[1] * res))
    t = thickness
    img[y0 : y0 + t, x0:x1] = color
    img[y1 - t : y1, x0:x1] = color
    img[y0:y1, x0 : x0 + t] = color
    img[y0:y1, x1 - t : x1] = color


def _box_pixels(u8, box):
    res = u8.shape[0]
    x0, x1, y0, y1 = box
    return u8[int(y0 * res) : int(y1 * res), int(x0 * res) : int(x1 * res)]


def _box_mean(u8, box):
    return _box_pixels(u8, box).reshape(-1, 3).mean(axis=0)
