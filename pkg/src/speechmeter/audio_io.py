"""Audio loading, resampling, energy normalization, and short-time energy.

All functions are pure; buffers are treated as immutable once built.
Input contract is RIFF/WAVE, 16-bit PCM, mono. Internally samples live in
float64 scaled to [-1, 1].
"""

from __future__ import annotations

import wave
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    NotWavError,
    SilentInputError,
    TooShortError,
    UnsupportedEncodingError,
)

SILENCE_FLOOR_DB = -120.0
DEFAULT_FRAME_MS = 20.0
DEFAULT_HOP_MS = 10.0

_RESAMPLE_TAPS = 64      # input samples contributing to each output sample
_RESAMPLE_BETA = 8.0     # Kaiser window shape
_RESAMPLE_CHUNK = 1 << 16


@dataclass(frozen=True)
class AudioBuffer:
    """Mono PCM signal: float samples in [-1, 1] plus a sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        if int(self.sample_rate) <= 0:
            raise ValueError("sample_rate must be positive")
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    @property
    def duration_seconds(self) -> float:
        return len(self.samples) / self.sample_rate

    @property
    def peak(self) -> float:
        return float(np.max(np.abs(self.samples))) if len(self.samples) else 0.0

    def rms(self) -> float:
        if len(self.samples) == 0:
            return 0.0
        return float(np.sqrt(np.mean(self.samples ** 2)))


@dataclass(frozen=True)
class EnergyTrack:
    """Per-frame RMS levels in dBFS with the framing that produced them."""

    frame_db: np.ndarray
    frame_ms: float
    hop_ms: float

    def __post_init__(self):
        object.__setattr__(self, "frame_db", np.asarray(self.frame_db, dtype=np.float64))

    def __len__(self) -> int:
        return len(self.frame_db)


def load_wav(path: str | Path) -> AudioBuffer:
    """Read a RIFF/WAVE PCM16 mono file, scaling samples by 1/32768.

    Raises NotWavError for non-WAV containers, UnsupportedEncodingError for
    stereo or non-16-bit content, and OSError for plain I/O failures.
    """
    path = Path(path)
    with open(path, "rb") as fh:
        head = fh.read(12)
    if len(head) < 12 or head[:4] != b"RIFF" or head[8:12] != b"WAVE":
        raise NotWavError(f"{path}: not a RIFF/WAVE file")
    try:
        with wave.open(str(path), "rb") as wav:
            n_channels = wav.getnchannels()
            sampwidth = wav.getsampwidth()
            rate = wav.getframerate()
            n_frames = wav.getnframes()
            raw = wav.readframes(n_frames)
    except wave.Error as exc:
        raise UnsupportedEncodingError(f"{path}: {exc}") from exc
    if n_channels != 1:
        raise UnsupportedEncodingError(f"{path}: expected mono, got {n_channels} channels")
    if sampwidth != 2:
        raise UnsupportedEncodingError(f"{path}: expected 16-bit PCM, got {8 * sampwidth}-bit")
    pcm = np.frombuffer(raw, dtype="<i2")
    return AudioBuffer(pcm.astype(np.float64) / 32768.0, rate)


def _sinc_kernel(t: np.ndarray, cutoff: float) -> np.ndarray:
    # windowed sinc: Kaiser window over the full tap span, unity DC gain
    half = _RESAMPLE_TAPS // 2
    arg = np.maximum(1.0 - (t / half) ** 2, 0.0)
    window = np.i0(_RESAMPLE_BETA * np.sqrt(arg)) / np.i0(_RESAMPLE_BETA)
    return cutoff * np.sinc(cutoff * t) * window


def resample(buf: AudioBuffer, target_rate: int) -> AudioBuffer:
    """Band-limited resampling with a 64-tap Kaiser windowed sinc.

    Each output sample is a normalized dot product of 64 input samples
    against a sinc kernel whose cutoff sits at the lower of the two Nyquist
    frequencies. Output duration matches input within one sample period.
    """
    if target_rate <= 0:
        raise ValueError("target_rate must be positive")
    if target_rate == buf.sample_rate:
        return AudioBuffer(buf.samples.copy(), buf.sample_rate)

    x = buf.samples
    ratio = target_rate / buf.sample_rate
    n_out = int(round(len(x) * ratio))
    half = _RESAMPLE_TAPS // 2
    cutoff = min(1.0, ratio)
    offsets = np.arange(-half + 1, half + 1)
    padded = np.concatenate([np.zeros(_RESAMPLE_TAPS), x, np.zeros(_RESAMPLE_TAPS)])

    out = np.empty(n_out, dtype=np.float64)
    for start in range(0, n_out, _RESAMPLE_CHUNK):
        stop = min(start + _RESAMPLE_CHUNK, n_out)
        pos = np.arange(start, stop) / ratio
        base = np.floor(pos).astype(np.int64)
        idx = base[:, None] + offsets[None, :]
        taps = _sinc_kernel(pos[:, None] - idx, cutoff)
        taps /= taps.sum(axis=1, keepdims=True)
        out[start:stop] = np.einsum("ij,ij->i", padded[idx + _RESAMPLE_TAPS], taps)
    return AudioBuffer(out, target_rate)


def normalize_energy(buf: AudioBuffer, target_dbfs: float = -10.0) -> AudioBuffer:
    """Apply a single positive gain so the RMS level equals target_dbfs.

    Raises SilentInputError on an all-zero buffer. If the gain pushes any
    sample beyond [-1, 1] a UserWarning is emitted; samples are never clipped.
    """
    rms = buf.rms()
    if rms == 0.0:
        raise SilentInputError("cannot normalize an all-zero buffer")
    gain = 10.0 ** (target_dbfs / 20.0) / rms
    out = AudioBuffer(buf.samples * gain, buf.sample_rate)
    if out.peak > 1.0:
        warnings.warn(
            f"normalization to {target_dbfs} dBFS drives peak to {out.peak:.3f} (> 1.0); "
            "samples left unclipped",
            UserWarning,
            stacklevel=2,
        )
    return out


def frame_rms_db(
    buf: AudioBuffer,
    frame_ms: float = DEFAULT_FRAME_MS,
    hop_ms: float = DEFAULT_HOP_MS,
) -> EnergyTrack:
    """Short-time RMS level per frame in dBFS.

    Frames are rectangular, frame_ms long with hop_ms hop; all-zero frames
    get the -120 dBFS silence floor instead of -inf.
    """
    if not frame_ms >= hop_ms > 0:
        raise ValueError("need frame_ms >= hop_ms > 0")
    frame_len = int(round(buf.sample_rate * frame_ms / 1000.0))
    hop_len = int(round(buf.sample_rate * hop_ms / 1000.0))
    if frame_len < 1 or hop_len < 1:
        raise ValueError("frame and hop must span at least one sample")
    if len(buf.samples) < frame_len:
        raise TooShortError(
            f"buffer of {len(buf.samples)} samples shorter than one {frame_len}-sample frame"
        )
    windows = np.lib.stride_tricks.sliding_window_view(buf.samples, frame_len)[::hop_len]
    mean_sq = np.mean(windows ** 2, axis=1)
    frame_db = np.full(len(mean_sq), SILENCE_FLOOR_DB)
    live = mean_sq > 0.0
    frame_db[live] = 10.0 * np.log10(mean_sq[live])
    return EnergyTrack(frame_db, frame_ms=frame_ms, hop_ms=hop_ms)
