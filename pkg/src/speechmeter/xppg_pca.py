"""Severity scoring from speaker embeddings and phone posteriorgrams.

Per utterance, a fixed-size speaker vector and the time-averaged posteriorgram
are concatenated, z-scored with statistics from a training corpus, and
projected onto the first principal component of that corpus. The projection
is the severity score; its orientation is fixed by a deterministic sign rule
and any directional meaning is applied downstream.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import AllConstantError, DimensionMismatchError, InsufficientDataError, ParseError
from .fmat import FrameMatrix

STD_FLOOR = 1e-8


@dataclass(frozen=True)
class UtteranceEmbedding:
    """Fixed-dim speaker vector plus mean posteriorgram for one utterance."""

    xvec: np.ndarray
    ppg_mean: np.ndarray

    def __post_init__(self):
        xvec = np.asarray(self.xvec, dtype=np.float64).ravel()
        ppg = np.asarray(self.ppg_mean, dtype=np.float64).ravel()
        if not (np.all(np.isfinite(xvec)) and np.all(np.isfinite(ppg))):
            raise ValueError("embedding values must be finite")
        object.__setattr__(self, "xvec", xvec)
        object.__setattr__(self, "ppg_mean", ppg)

    def concat(self) -> np.ndarray:
        return np.concatenate([self.xvec, self.ppg_mean])


@dataclass(frozen=True)
class PcaModel:
    mean: np.ndarray
    scale: np.ndarray
    pc1: np.ndarray
    explained_var_ratio: float


def time_average_ppg(ppg: FrameMatrix) -> np.ndarray:
    """Per-dimension mean over frames."""
    return ppg.data.mean(axis=0)


def pca_fit(train: list[UtteranceEmbedding]) -> PcaModel:
    """Fit mean/scale and the first principal direction on training embeddings.

    Embeddings are concatenated, centered, and z-scored per dimension
    (population std, floored at 1e-8 so constant dims survive); pc1 is the
    top right-singular vector with its largest-|loading| entry made positive.
    """
    if len(train) < 2:
        raise InsufficientDataError(f"need >= 2 training utterances, got {len(train)}")
    X = np.stack([emb.concat() for emb in train])
    if X.shape[1] < 1:
        raise InsufficientDataError("embeddings have zero dimensions")
    mean = X.mean(axis=0)
    std = X.std(axis=0)
    if np.all(std == 0.0):
        raise AllConstantError("every dimension is constant; no principal direction")
    scale = np.maximum(std, STD_FLOOR)
    Z = (X - mean) / scale
    _, s, vt = np.linalg.svd(Z, full_matrices=False)
    pc1 = vt[0]
    if pc1[int(np.argmax(np.abs(pc1)))] < 0.0:
        pc1 = -pc1
    evr = float(s[0] ** 2 / np.sum(s ** 2))
    return PcaModel(mean=mean, scale=scale, pc1=pc1, explained_var_ratio=evr)


def pcx_score(model: PcaModel, emb: UtteranceEmbedding) -> float:
    """Project one utterance onto pc1 in the model's z-scored space."""
    v = emb.concat()
    if v.shape != model.mean.shape:
        raise DimensionMismatchError(f"embedding dim {v.shape[0]} != model dim {model.mean.shape[0]}")
    return float(np.dot(model.pc1, (v - model.mean) / model.scale))


def save_pca_model(path: str | Path, model: PcaModel) -> None:
    """Persist as auditable CSV rows: (field, index, value)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["field", "index", "value"])
        writer.writerow(["meta", "explained_var_ratio", repr(model.explained_var_ratio)])
        writer.writerow(["meta", "dims", str(len(model.mean))])
        for name, vec in (("mean", model.mean), ("scale", model.scale), ("pc1", model.pc1)):
            for i, v in enumerate(vec):
                writer.writerow([name, str(i), repr(float(v))])


def load_pca_model(path: str | Path) -> PcaModel:
    path = Path(path)
    vecs: dict[str, dict[int, float]] = {"mean": {}, "scale": {}, "pc1": {}}
    meta: dict[str, str] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["field", "index", "value"]:
            raise ParseError(f"{path}: expected header 'field,index,value'")
        for row in reader:
            if len(row) != 3:
                raise ParseError(f"{path}: malformed row {row!r}")
            field, idx, value = row
            if field == "meta":
                meta[idx] = value
            elif field in vecs:
                vecs[field][int(idx)] = float(value)
            else:
                raise ParseError(f"{path}: unknown field {field!r}")
    try:
        dims = int(meta["dims"])
        evr = float(meta["explained_var_ratio"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"{path}: missing or bad metadata") from exc
    arrays = {}
    for name, entries in vecs.items():
        if sorted(entries) != list(range(dims)):
            raise ParseError(f"{path}: block {name!r} does not cover 0..{dims - 1}")
        arrays[name] = np.array([entries[i] for i in range(dims)])
    return PcaModel(mean=arrays["mean"], scale=arrays["scale"], pc1=arrays["pc1"], explained_var_ratio=evr)
