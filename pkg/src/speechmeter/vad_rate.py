"""Energy-threshold voice activity detection and the two word-rate measures.

The speech rate divides the transcript word count by total duration; the
articulation rate divides by speech time only, where speech frames are those
within a fixed dB window below the loudest frame (default 20 dB).
Both rates are reported in words per second.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .audio_io import EnergyTrack
from .errors import EmptyTrackError, NoSpeechDetectedError, ZeroDurationError

DEFAULT_VAD_THRESHOLD_DB = 20.0


@dataclass(frozen=True)
class SpeechMask:
    """Per-frame speech flags aligned with the energy track that produced them."""

    flags: np.ndarray
    hop_ms: float

    def __post_init__(self):
        object.__setattr__(self, "flags", np.asarray(self.flags, dtype=bool))

    def __len__(self) -> int:
        return len(self.flags)

    @property
    def speech_duration(self) -> float:
        """Total flagged time in seconds (frame count times hop)."""
        return float(np.count_nonzero(self.flags)) * self.hop_ms / 1000.0


def detect_speech(track: EnergyTrack, threshold_db: float = DEFAULT_VAD_THRESHOLD_DB) -> SpeechMask:
    """Flag frames whose level is within threshold_db of the peak frame.

    Gain-invariant by construction: a global gain shifts every frame and the
    peak by the same dB amount.
    """
    if len(track) == 0:
        raise EmptyTrackError("energy track has no frames")
    peak = float(np.max(track.frame_db))
    flags = track.frame_db > (peak - threshold_db)
    return SpeechMask(flags, hop_ms=track.hop_ms)


def speech_rate(word_count: int, total_duration: float) -> float:
    """Words per second over the whole recording, pauses included."""
    if word_count < 0:
        raise ValueError("word_count must be nonnegative")
    if total_duration <= 0.0:
        raise ZeroDurationError("total_duration must be positive")
    return word_count / total_duration


def articulation_rate(word_count: int, mask: SpeechMask) -> float:
    """Words per second over detected speech time only."""
    if word_count < 0:
        raise ValueError("word_count must be nonnegative")
    duration = mask.speech_duration
    if duration <= 0.0:
        raise NoSpeechDetectedError("mask contains no speech frames")
    return word_count / duration
