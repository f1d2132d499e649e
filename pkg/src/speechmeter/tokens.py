"""Orthographic token normalization shared by the rate and distance measures.

One rule everywhere: NFC-normalize, lowercase, strip all Unicode punctuation,
split on whitespace. Hyphenated forms therefore collapse into a single token
("voice-over" -> "voiceover"); this is a documented convention, not a claim
about the right tokenization.
"""

from __future__ import annotations

import unicodedata


def normalize_token(token: str) -> str:
    """Lowercased, punctuation-free form of a single token ('' if nothing left)."""
    token = unicodedata.normalize("NFC", token).lower()
    return "".join(c for c in token if not unicodedata.category(c).startswith("P"))


def tokenize(text: str) -> list[str]:
    """Whitespace-split a transcript into normalized word tokens."""
    out = []
    for raw in text.split():
        tok = normalize_token(raw)
        if tok:
            out.append(tok)
    return out


def count_words(text: str) -> int:
    return len(tokenize(text))
