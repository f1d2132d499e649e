"""Acoustic distance between feature sequences: per-word DTW against a pool.

A target utterance is cut into word segments using aligned word intervals,
each segment is compared by dynamic time warping against every occurrence of
the same word from other speakers, and the per-word means are averaged into
an utterance score. Features themselves (e.g. transformer layer activations)
are produced elsewhere and ingested as FMAT files.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.spatial.distance import cdist

from .errors import (
    DimensionMismatchError,
    EmptyUtteranceError,
    IntervalOutOfRangeError,
    NoReferenceError,
    ParseError,
)
from .fmat import FrameMatrix
from .tokens import normalize_token

METRICS = ("cosine", "euclidean")

# frame index of a time boundary, with a snap tolerance for exact-tiling
# boundaries that float division would push across the integer
_SNAP = 1e-6


@dataclass(frozen=True)
class WordInterval:
    word: str
    start_s: float
    end_s: float

    def __post_init__(self):
        if not (0.0 <= self.start_s < self.end_s):
            raise ValueError(f"need 0 <= start < end, got [{self.start_s}, {self.end_s})")


@dataclass
class SegmentationResult:
    segments: list[tuple[str, FrameMatrix]]
    dropped: list[str] = field(default_factory=list)


def read_word_intervals(path: str | Path) -> list[WordInterval]:
    """Parse a `word,start_s,end_s` CSV (header required)."""
    path = Path(path)
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["word", "start_s", "end_s"]:
            raise ParseError(f"{path}: expected header 'word,start_s,end_s'")
        for lineno, row in enumerate(reader, start=2):
            try:
                out.append(WordInterval(row["word"], float(row["start_s"]), float(row["end_s"])))
            except (TypeError, ValueError) as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return out


def _frame_index(t: float, hop: float) -> float:
    q = t / hop
    r = round(q)
    return float(r) if abs(q - r) < _SNAP else q


def segment_words(utt: FrameMatrix, intervals: list[WordInterval]) -> SegmentationResult:
    """Slice an utterance matrix into per-word matrices.

    A word covers frames [floor(start/hop), ceil(end/hop)); intervals may
    overshoot the utterance by at most one frame. Slices that come out empty
    after clipping are dropped and recorded.
    """
    hop = utt.frame_hop_s
    duration = utt.duration_seconds
    result = SegmentationResult(segments=[])
    for iv in intervals:
        if iv.start_s > duration + hop or iv.end_s > duration + hop:
            raise IntervalOutOfRangeError(
                f"interval [{iv.start_s}, {iv.end_s}) outside utterance of {duration:.3f}s (+1 frame)"
            )
        lo = max(0, math.floor(_frame_index(iv.start_s, hop)))
        hi = min(utt.n_frames, math.ceil(_frame_index(iv.end_s, hop)))
        if hi <= lo:
            result.dropped.append(iv.word)
            continue
        result.segments.append((iv.word, FrameMatrix(utt.data[lo:hi], hop)))
    return result


def _row_index(matrix: np.ndarray) -> dict[bytes, list[int]]:
    index: dict[bytes, list[int]] = {}
    for i, row in enumerate(matrix):
        index.setdefault(row.tobytes(), []).append(i)
    return index


def local_cost_matrix(a: FrameMatrix, b: FrameMatrix, metric: str = "cosine") -> np.ndarray:
    """Pairwise frame costs; bitwise-identical frames always cost exactly 0.

    Cosine cost is 1 - cosine similarity; frames with zero norm cost 0
    against another zero frame and 1 against anything else.
    """
    if a.n_dims != b.n_dims:
        raise DimensionMismatchError(f"feature dims differ: {a.n_dims} vs {b.n_dims}")
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")
    A, B = a.data, b.data
    if metric == "euclidean":
        cost = cdist(A, B, "euclidean")
    else:
        na = np.linalg.norm(A, axis=1)
        nb = np.linalg.norm(B, axis=1)
        denom = np.outer(na, nb)
        with np.errstate(invalid="ignore", divide="ignore"):
            sim = (A @ B.T) / denom
        cost = 1.0 - np.clip(sim, -1.0, 1.0)
        zero_a = na == 0.0
        zero_b = nb == 0.0
        if zero_a.any() or zero_b.any():
            cost[zero_a, :] = 1.0
            cost[:, zero_b] = 1.0
            cost[np.ix_(zero_a, zero_b)] = 0.0
        np.maximum(cost, 0.0, out=cost)
    # repair float noise on exactly-equal frames so self-distance is 0
    index_b = _row_index(B)
    for i, row in enumerate(A):
        hits = index_b.get(row.tobytes())
        if hits:
            cost[i, hits] = 0.0
    return cost


def dtw_distance(a: FrameMatrix, b: FrameMatrix, metric: str = "cosine") -> float:
    """Dynamic time warping cost normalized by alignment path length.

    Steps are (1,0), (0,1), (1,1); ties in the recursion prefer the diagonal,
    then the step consuming `a`, so results are deterministic.
    """
    cost = local_cost_matrix(a, b, metric)
    m, n = cost.shape
    INF = np.inf
    acc = np.full((m + 1, n + 1), INF)
    steps = np.zeros((m + 1, n + 1), dtype=np.int8)  # 1=diag, 2=up, 3=left
    acc[0, 0] = 0.0
    for i in range(1, m + 1):
        ci = cost[i - 1]
        for j in range(1, n + 1):
            diag = acc[i - 1, j - 1]
            up = acc[i - 1, j]
            left = acc[i, j - 1]
            if diag <= up and diag <= left:
                best, step = diag, 1
            elif up <= left:
                best, step = up, 2
            else:
                best, step = left, 3
            acc[i, j] = best + ci[j - 1]
            steps[i, j] = step
    # walk back to count the alignment path length
    i, j = m, n
    length = 0
    while i > 0 or j > 0:
        length += 1
        step = steps[i, j]
        if step == 1:
            i, j = i - 1, j - 1
        elif step == 2:
            i -= 1
        else:
            j -= 1
    return float(acc[m, n]) / length


class ReferencePool:
    """Word-keyed store of feature segments from many speakers.

    Built once, then read-only; keys are normalized word tokens.
    """

    def __init__(self):
        self._occurrences: dict[str, list[tuple[str, FrameMatrix]]] = {}

    def add(self, word: str, speaker_id: str, segment: FrameMatrix) -> None:
        key = normalize_token(word)
        if not key:
            return
        self._occurrences.setdefault(key, []).append((speaker_id, segment))

    def words(self) -> list[str]:
        return list(self._occurrences)

    def occurrences(self, word: str) -> list[tuple[str, FrameMatrix]]:
        return self._occurrences.get(normalize_token(word), [])

    def __len__(self) -> int:
        return sum(len(v) for v in self._occurrences.values())


def nad_word(
    target: FrameMatrix,
    word: str,
    pool: ReferencePool,
    exclude_speaker: str,
    metric: str = "cosine",
) -> float:
    """Mean DTW distance from a target word segment to all other speakers' occurrences."""
    refs = [fm for spk, fm in pool.occurrences(word) if spk != exclude_speaker]
    if not refs:
        raise NoReferenceError(f"no reference for word {normalize_token(word)!r} outside speaker {exclude_speaker!r}")
    return float(np.mean([dtw_distance(target, ref, metric) for ref in refs]))


def nad_utterance(word_scores: list[float]) -> float:
    """Arithmetic mean of per-word distances within one utterance."""
    if not word_scores:
        raise EmptyUtteranceError("no word scores to average")
    return float(np.mean(word_scores))
