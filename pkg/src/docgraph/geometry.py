"""Pairwise spatial features between 2D-positioned tokens.

Token interaction is purely relative: per-pair offsets, Euclidean distance,
and heading angle. Features are quantized into integer bins and expanded
into sinusoidal embeddings that feed the encoder's relative vectors.

Coordinate convention: image coordinates, y increases downward. Angles are
atan2(dy, dx) in [-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Point:
    x: float
    y: float


@dataclass(frozen=True)
class TokenBox:
    """Quadrilateral token outline, corners clockwise from top-left."""

    corners: tuple[Point, Point, Point, Point]

    @property
    def center(self) -> Point:
        cx = sum(c.x for c in self.corners) / 4.0
        cy = sum(c.y for c in self.corners) / 4.0
        return Point(cx, cy)

    @classmethod
    def from_rect(cls, x: float, y: float, w: float, h: float) -> "TokenBox":
        return cls(
            (Point(x, y), Point(x + w, y), Point(x + w, y + h), Point(x, y + h))
        )

    def corner_array(self) -> np.ndarray:
        return np.array([[c.x, c.y] for c in self.corners], dtype=np.float64)


@dataclass(frozen=True)
class RelPairFeature:
    """Geometry of token j relative to token i."""

    dx: float
    dy: float
    dist: float
    angle: float


@dataclass(frozen=True)
class QuantizedRelFeature:
    qx: int
    qy: int
    qdist: int
    qangle: int


@dataclass(frozen=True)
class QuantizationConfig:
    """Bin sizes for turning continuous pair features into integer bins.

    ``xy_bin``/``dist_bin`` default to 1/100 of a typical page width so that
    receipt-sized documents stay inside the unclamped range.
    """

    xy_bin: float = 10.0
    dist_bin: float = 10.0
    max_bin: int = 120
    n_angle_bins: int = 60

    def __post_init__(self):
        if self.xy_bin <= 0 or self.dist_bin <= 0:
            raise ValueError("bin sizes must be positive")
        if self.max_bin <= 0 or self.n_angle_bins <= 0:
            raise ValueError("bin counts must be positive")

    @classmethod
    def for_width(cls, width: float, max_bin: int = 120, n_angle_bins: int = 60) -> "QuantizationConfig":
        return cls(
            xy_bin=width / 100.0,
            dist_bin=width / 100.0,
            max_bin=max_bin,
            n_angle_bins=n_angle_bins,
        )

    def to_dict(self) -> dict:
        return {
            "xy_bin": self.xy_bin,
            "dist_bin": self.dist_bin,
            "max_bin": self.max_bin,
            "n_angle_bins": self.n_angle_bins,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuantizationConfig":
        return cls(**d)


@dataclass(frozen=True)
class PairFeatures:
    """Dense n x n pair features; entry (i, j) describes j relative to i."""

    dx: np.ndarray
    dy: np.ndarray
    dist: np.ndarray
    angle: np.ndarray

    @property
    def n(self) -> int:
        return self.dx.shape[0]

    def at(self, i: int, j: int) -> RelPairFeature:
        return RelPairFeature(
            dx=float(self.dx[i, j]),
            dy=float(self.dy[i, j]),
            dist=float(self.dist[i, j]),
            angle=float(self.angle[i, j]),
        )


@dataclass(frozen=True)
class QuantizedFeatures:
    """Integer-binned counterpart of :class:`PairFeatures`."""

    qx: np.ndarray
    qy: np.ndarray
    qdist: np.ndarray
    qangle: np.ndarray

    @property
    def n(self) -> int:
        return self.qx.shape[0]

    def at(self, i: int, j: int) -> QuantizedRelFeature:
        return QuantizedRelFeature(
            qx=int(self.qx[i, j]),
            qy=int(self.qy[i, j]),
            qdist=int(self.qdist[i, j]),
            qangle=int(self.qangle[i, j]),
        )


def relative_offset(a: Point, b: Point) -> tuple[float, float]:
    """Offset of ``b`` with respect to ``a``."""
    return (b.x - a.x, b.y - a.y)


def pair_features(centers) -> PairFeatures:
    """All-pairs relative features for a sequence of token centers.

    Accepts a sequence of :class:`Point` or an (n, 2) array. Diagonal
    entries are identically zero (atan2(0, 0) = 0).
    """
    if len(centers) == 0:
        raise ValueError("need at least one center")
    if isinstance(centers, np.ndarray):
        xy = np.asarray(centers, dtype=np.float64)
    else:
        xy = np.array([[c.x, c.y] for c in centers], dtype=np.float64)
    x = xy[:, 0]
    y = xy[:, 1]
    dx = x[None, :] - x[:, None]
    dy = y[None, :] - y[:, None]
    dist = np.hypot(dx, dy)
    angle = np.arctan2(dy, dx)
    return PairFeatures(dx=dx, dy=dy, dist=dist, angle=angle)


def _bin_signed(values: np.ndarray, bin_size: float, max_bin: int) -> np.ndarray:
    return np.clip(np.rint(values / bin_size), -max_bin, max_bin).astype(np.int64)


def _bin_nonneg(values: np.ndarray, bin_size: float, max_bin: int) -> np.ndarray:
    return np.clip(np.rint(values / bin_size), 0, max_bin).astype(np.int64)


def _bin_angle(values: np.ndarray, n_bins: int) -> np.ndarray:
    # uniform sectors over [-pi, pi); the angle == pi edge folds into the
    # last sector
    sector = 2.0 * math.pi / n_bins
    idx = np.floor((values + math.pi) / sector).astype(np.int64)
    return np.clip(idx, 0, n_bins - 1)


def quantize_features(f: RelPairFeature, cfg: QuantizationConfig) -> QuantizedRelFeature:
    """Quantize a single pair feature; matches :func:`quantize` bit-for-bit."""
    qx = _bin_signed(np.float64(f.dx), cfg.xy_bin, cfg.max_bin)
    qy = _bin_signed(np.float64(f.dy), cfg.xy_bin, cfg.max_bin)
    qd = _bin_nonneg(np.float64(f.dist), cfg.dist_bin, cfg.max_bin)
    qa = _bin_angle(np.float64(f.angle), cfg.n_angle_bins)
    return QuantizedRelFeature(qx=int(qx), qy=int(qy), qdist=int(qd), qangle=int(qa))


def quantize(features: PairFeatures, cfg: QuantizationConfig) -> QuantizedFeatures:
    """Quantize dense pair features into integer bins."""
    return QuantizedFeatures(
        qx=_bin_signed(features.dx, cfg.xy_bin, cfg.max_bin),
        qy=_bin_signed(features.dy, cfg.xy_bin, cfg.max_bin),
        qdist=_bin_nonneg(features.dist, cfg.dist_bin, cfg.max_bin),
        qangle=_bin_angle(features.angle, cfg.n_angle_bins),
    )


def sincos_embed(k: int, dim: int) -> np.ndarray:
    """Sinusoidal embedding of an integer bin.

    Component 2m is sin(k / 10000^(2m/dim)) and component 2m+1 is
    cos(k / 10000^(2m/dim)).
    """
    if dim <= 0 or dim % 2 != 0:
        raise ValueError(f"embedding dim must be positive and even, got {dim}")
    return sincos_table(np.asarray(k, dtype=np.float64), dim)


def sincos_table(bins: np.ndarray, dim: int) -> np.ndarray:
    """Vectorized :func:`sincos_embed` over an arbitrary-shape bin array."""
    if dim <= 0 or dim % 2 != 0:
        raise ValueError(f"embedding dim must be positive and even, got {dim}")
    k = np.asarray(bins, dtype=np.float64)[..., None]
    exponent = np.arange(0, dim, 2, dtype=np.float64) / dim
    inv_freq = 1.0 / np.power(10000.0, exponent)
    phase = k * inv_freq
    out = np.empty(k.shape[:-1] + (dim,), dtype=np.float64)
    out[..., 0::2] = np.sin(phase)
    out[..., 1::2] = np.cos(phase)
    return out


def relative_embedding_base(q: QuantizedFeatures, component_dim: int) -> np.ndarray:
    """Concatenated sinusoidal embeddings of (qx, qy, qdist, qangle).

    Returns an (n, n, 4 * component_dim) array shared by every encoder
    layer; layers apply their own linear projection on top.
    """
    parts = [
        sincos_table(q.qx, component_dim),
        sincos_table(q.qy, component_dim),
        sincos_table(q.qdist, component_dim),
        sincos_table(q.qangle, component_dim),
    ]
    return np.concatenate(parts, axis=-1)
