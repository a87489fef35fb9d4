"""Image loading and the [-1, 1] pixel convention.

An "image buffer" throughout the package is an H x W x 3 float32 numpy array
with values in [-1, 1]. PNG bytes are the interchange format at the edges
(service payloads, corpus files, grids).
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image

from ..exceptions import ShapeError


def load_image(path: str, resolution: int) -> np.ndarray:
    """Load an 8-bit RGB image, center-crop to square, resize, normalize.

    Pixel values map linearly from [0, 255] to [-1, 1] via v / 127.5 - 1.
    """
    try:
        with Image.open(path) as img:
            img = img.convert("RGB")
            pixels = _crop_resize(img, resolution)
    except (OSError, SyntaxError) as exc:
        raise OSError(f"cannot read image {path!r}: {exc}") from exc
    return normalize_u8(pixels)


def decode_png(data: bytes, resolution: int | None = None) -> np.ndarray:
    """Decode PNG/JPEG bytes to a buffer, optionally crop+resize first."""
    try:
        with Image.open(io.BytesIO(data)) as img:
            img = img.convert("RGB")
            if resolution is not None:
                pixels = _crop_resize(img, resolution)
            else:
                pixels = np.asarray(img, dtype=np.uint8)
    except (OSError, SyntaxError) as exc:
        raise OSError(f"cannot decode image bytes: {exc}") from exc
    return normalize_u8(pixels)


def encode_png(buffer: np.ndarray) -> bytes:
    """Encode a [-1, 1] buffer as deterministic PNG bytes."""
    img = Image.fromarray(quantize_u8(buffer), mode="RGB")
    out = io.BytesIO()
    img.save(out, format="PNG")
    return out.getvalue()


def save_png(buffer: np.ndarray, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(encode_png(buffer))


def normalize_u8(pixels: np.ndarray) -> np.ndarray:
    return (pixels.astype(np.float32) / 127.5) - 1.0


def quantize_u8(buffer: np.ndarray) -> np.ndarray:
    """Map [-1, 1] back to rounded uint8; inverse of normalize_u8 up to +/-1."""
    check_buffer(buffer)
    scaled = np.clip((buffer + 1.0) * 127.5, 0.0, 255.0)
    return np.round(scaled).astype(np.uint8)


def check_buffer(buffer: np.ndarray, resolution: int | None = None) -> None:
    if buffer.ndim != 3 or buffer.shape[2] != 3:
        raise ShapeError(f"expected H x W x 3 buffer, got shape {tuple(buffer.shape)}")
    if resolution is not None and buffer.shape[:2] != (resolution, resolution):
        raise ShapeError(
            f"expected {resolution}x{resolution} buffer, got {buffer.shape[0]}x{buffer.shape[1]}"
        )


def _crop_resize(img: Image.Image, resolution: int) -> np.ndarray:
    w, h = img.size
    side = min(w, h)
    left = (w - side) // 2
    top = (h - side) // 2
    img = img.crop((left, top, left + side, top + side))
    if side != resolution:
        img = img.resize((resolution, resolution), Image.BILINEAR)
    return np.asarray(img, dtype=np.uint8)
