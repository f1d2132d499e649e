"""Phoneme error rate: Levenshtein alignment of phoneme token sequences.

Tokens come from external recognizers/phonemizers and are taken as-is apart
from Unicode NFC normalization; no phone-set reinterpretation happens here.
"""

from __future__ import annotations

import unicodedata
from pathlib import Path
from typing import NamedTuple, Sequence

from .errors import EmptyReferenceError, ParseError


class EditOps(NamedTuple):
    substitutions: int
    deletions: int
    insertions: int

    @property
    def total(self) -> int:
        return self.substitutions + self.deletions + self.insertions


def edit_ops(ref: Sequence[str], hyp: Sequence[str]) -> EditOps:
    """Minimal-edit alignment counts between reference and hypothesis.

    Unit costs; when several operations tie, the backtrace prefers
    substitution over deletion over insertion, so counts are deterministic.
    """
    if len(ref) == 0:
        raise EmptyReferenceError("reference phoneme sequence is empty")
    m, n = len(ref), len(hyp)
    dist = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        dist[i][0] = i
    for j in range(1, n + 1):
        dist[0][j] = j
    for i in range(1, m + 1):
        row = dist[i]
        prev = dist[i - 1]
        ri = ref[i - 1]
        for j in range(1, n + 1):
            sub = prev[j - 1] + (0 if ri == hyp[j - 1] else 1)
            dele = prev[j] + 1
            ins = row[j - 1] + 1
            row[j] = sub if sub <= dele and sub <= ins else (dele if dele <= ins else ins)

    subs = dels = inss = 0
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dist[i][j] == dist[i - 1][j - 1] + (0 if ref[i - 1] == hyp[j - 1] else 1):
            if ref[i - 1] != hyp[j - 1]:
                subs += 1
            i, j = i - 1, j - 1
        elif i > 0 and dist[i][j] == dist[i - 1][j] + 1:
            dels += 1
            i -= 1
        else:
            inss += 1
            j -= 1
    return EditOps(subs, dels, inss)


def per(ref: Sequence[str], hyp: Sequence[str]) -> float:
    """(S + D + I) / len(ref); unclamped, so values above 1.0 are possible."""
    ops = edit_ops(ref, hyp)
    return ops.total / len(ref)


def read_phoneme_file(path: str | Path) -> dict[str, tuple[str, ...]]:
    """Parse an utterance-per-line phoneme file.

    Each line is `<utterance id>\\t<space-separated phoneme tokens>`; tokens
    are NFC-normalized. Blank lines are skipped.
    """
    table: dict[str, tuple[str, ...]] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if "\t" not in line:
            raise ParseError(f"{path}:{lineno}: expected '<utt id>\\t<tokens>'")
        utt_id, rest = line.split("\t", 1)
        utt_id = utt_id.strip()
        if not utt_id:
            raise ParseError(f"{path}:{lineno}: empty utterance id")
        if utt_id in table:
            raise ParseError(f"{path}:{lineno}: duplicate utterance id {utt_id!r}")
        tokens = tuple(unicodedata.normalize("NFC", tok) for tok in rest.split())
        table[utt_id] = tokens
    return table
