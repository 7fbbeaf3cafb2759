"""Raster primitives: binary page images, connected components, height statistics."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from PIL import Image
from scipy import ndimage

# 8-connectivity: handwriting strokes touch diagonally.
STRUCTURE_8 = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class BinaryImage:
    """Binarized page raster. ``bits`` is a bool matrix, True = ink (foreground)."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=bool)
        if bits.ndim != 2 or bits.shape[0] < 1 or bits.shape[1] < 1:
            raise ValueError(f"image must be a non-empty 2-D raster, got shape {bits.shape}")
        object.__setattr__(self, "bits", bits)

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    def foreground_count(self) -> int:
        return int(self.bits.sum())


@dataclass(frozen=True)
class ConnectedComponent:
    id: int
    pixels: np.ndarray  # (N, 2) int array of (row, col)
    bbox: tuple[int, int, int, int]  # (top, left, bottom, right), inclusive
    centroid: tuple[float, float] = field(init=False)  # (row, col)

    def __post_init__(self):
        if len(self.pixels) == 0:
            raise ValueError("connected component must have at least one pixel")
        object.__setattr__(
            self, "centroid",
            (float(self.pixels[:, 0].mean()), float(self.pixels[:, 1].mean())),
        )

    @property
    def height(self) -> int:
        return self.bbox[2] - self.bbox[0] + 1

    @property
    def width(self) -> int:
        return self.bbox[3] - self.bbox[1] + 1


@dataclass(frozen=True)
class HeightStats:
    """Mean and population standard deviation of component bbox heights."""

    mu: float
    sigma: float

    def __post_init__(self):
        if self.mu <= 0:
            raise ValueError(f"mu must be positive, got {self.mu}")
        if self.sigma < 0:
            raise ValueError(f"sigma must be non-negative, got {self.sigma}")


def load_binary_image(path: str | os.PathLike, fg_polarity: str = "dark-is-fg") -> BinaryImage:
    """Load a PNG/PGM raster and threshold it at mid-range into ink/background.

    ``fg_polarity`` is ``dark-is-fg`` (default: ink is dark) or ``light-is-fg``.
    """
    if fg_polarity not in ("dark-is-fg", "light-is-fg"):
        raise ValueError(f"unknown fg_polarity {fg_polarity!r}")
    try:
        with Image.open(path) as im:
            gray = np.asarray(im.convert("L"))
    except FileNotFoundError:
        raise
    except OSError as exc:
        raise OSError(f"cannot decode image {path}: {exc}") from exc
    if gray.ndim != 2 or gray.shape[0] < 1 or gray.shape[1] < 1:
        raise ValueError(f"image {path} has degenerate shape {gray.shape}")
    if fg_polarity == "dark-is-fg":
        bits = gray < 128
    else:
        bits = gray >= 128
    return BinaryImage(bits)


def save_binary_image(img: BinaryImage, path: str | os.PathLike, fg_polarity: str = "dark-is-fg") -> None:
    """Write a binary image as 8-bit gray PNG, ink rendered per ``fg_polarity``."""
    if fg_polarity == "dark-is-fg":
        gray = np.where(img.bits, 0, 255).astype(np.uint8)
    else:
        gray = np.where(img.bits, 255, 0).astype(np.uint8)
    Image.fromarray(gray).save(path)


def connected_components(img: BinaryImage) -> list[ConnectedComponent]:
    """8-connected foreground components, ids 1..N in raster-scan order of first pixel."""
    labels, n = ndimage.label(img.bits, structure=STRUCTURE_8)
    comps = []
    for i, sl in enumerate(ndimage.find_objects(labels), start=1):
        if sl is None:
            continue
        rows, cols = np.nonzero(labels[sl] == i)
        top, left = sl[0].start, sl[1].start
        pixels = np.column_stack((rows + top, cols + left)).astype(np.int64)
        bbox = (top, left, sl[0].stop - 1, sl[1].stop - 1)
        comps.append(ConnectedComponent(id=i, pixels=pixels, bbox=bbox))
    return comps


def component_height_stats(components: list[ConnectedComponent]) -> HeightStats:
    if not components:
        raise ValueError("height stats need at least one component")
    heights = np.array([c.height for c in components], dtype=float)
    return HeightStats(mu=float(heights.mean()), sigma=float(heights.std()))
