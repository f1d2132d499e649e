"""FMAT: the binary container for per-frame feature matrices.

Layout (little-endian throughout):
    bytes 0..7   magic "FMAT1\\x00\\x00\\x00"
    bytes 8..11  u32 rows (frames)
    bytes 12..15 u32 cols (feature dims)
    bytes 16..23 f64 hop in seconds per frame
    bytes 24..   rows*cols f32, row-major

x-vectors are stored as a 1-row FMAT; posteriorgrams as frames x phone-classes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FmatError

MAGIC = b"FMAT1\x00\x00\x00"
_HEADER = struct.Struct("<8sIId")


@dataclass(frozen=True)
class FrameMatrix:
    """T x D matrix of per-frame feature vectors plus the frame hop in seconds."""

    data: np.ndarray
    frame_hop_s: float

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError("data must be a T x D matrix with T, D >= 1")
        if not np.all(np.isfinite(data)):
            raise ValueError("feature values must be finite")
        if not self.frame_hop_s > 0.0:
            raise ValueError("frame_hop_s must be positive")
        object.__setattr__(self, "data", data)

    @property
    def n_frames(self) -> int:
        return self.data.shape[0]

    @property
    def n_dims(self) -> int:
        return self.data.shape[1]

    @property
    def duration_seconds(self) -> float:
        return self.n_frames * self.frame_hop_s


def write_fmat(path: str | Path, matrix: FrameMatrix) -> None:
    rows, cols = matrix.data.shape
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, rows, cols, matrix.frame_hop_s))
        fh.write(np.ascontiguousarray(matrix.data, dtype="<f4").tobytes())


def read_fmat(path: str | Path) -> FrameMatrix:
    path = Path(path)
    blob = path.read_bytes()
    if len(blob) < _HEADER.size:
        raise FmatError(f"{path}: truncated header")
    magic, rows, cols, hop_s = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise FmatError(f"{path}: bad magic {magic!r}")
    expected = _HEADER.size + rows * cols * 4
    if len(blob) != expected:
        raise FmatError(f"{path}: expected {expected} bytes, found {len(blob)}")
    if rows < 1 or cols < 1 or not hop_s > 0.0:
        raise FmatError(f"{path}: invalid shape {rows}x{cols} or hop {hop_s}")
    data = np.frombuffer(blob, dtype="<f4", offset=_HEADER.size).reshape(rows, cols)
    try:
        return FrameMatrix(data.astype(np.float64), hop_s)
    except ValueError as exc:
        raise FmatError(f"{path}: {exc}") from exc
