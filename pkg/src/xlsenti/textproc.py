"""Language-aware tokenization, normalization, stemming and n-gram extraction.

Supports exactly two languages: English and Arabic. English gets a small
rule-based suffix normalizer; Arabic gets diacritic/letter-form normalization
followed by a light (affix-stripping) stemmer. All functions are pure.
"""

from __future__ import annotations

import unicodedata
from collections import Counter
from enum import Enum
from typing import Iterable, Sequence

VALID_NGRAM_ORDERS = frozenset({1, 2, 3})


class Language(Enum):
    ENGLISH = "english"
    ARABIC = "arabic"

    @classmethod
    def parse(cls, code: str) -> "Language":
        try:
            return cls(code)
        except ValueError:
            raise ValueError(
                f"unknown language {code!r}; expected 'english' or 'arabic'"
            ) from None


def _strippable(ch: str) -> bool:
    # punctuation and symbols are stripped at token edges; letters, marks
    # (Arabic diacritics) and digits are kept
    return unicodedata.category(ch)[0] in "PS"


def tokenize(text: str, lang: Language) -> list[str]:
    """Split on whitespace, trim edge punctuation, lowercase.

    Intra-word hyphens and apostrophes survive ("don't", "e-mail"); a chunk
    that is punctuation-only disappears. Arabic diacritics are retained here
    (removal happens in normalize_arabic).
    """
    tokens = []
    for chunk in text.split():
        start, end = 0, len(chunk)
        while start < end and _strippable(chunk[start]):
            start += 1
        while end > start and _strippable(chunk[end - 1]):
            end -= 1
        tok = chunk[start:end]
        if tok:
            tokens.append(tok.lower())
    return tokens


# Arabic normalization: harakat + superscript alef + tatweel removed,
# alef variants folded, final-form letters canonicalized.
_HARAKAT = {cp: None for cp in range(0x064B, 0x0660)}
_HARAKAT[0x0670] = None  # superscript alef
_HARAKAT[0x0640] = None  # tatweel
_AR_FOLD = {0x0622: "ا", 0x0623: "ا", 0x0625: "ا", 0x0649: "ي", 0x0629: "ه"}
_AR_TABLE = {**_HARAKAT, **{k: v for k, v in _AR_FOLD.items()}}


def normalize_arabic(token: str) -> str:
    """Remove diacritics/tatweel; fold alef variants, final ya and ta marbuta."""
    return token.translate(_AR_TABLE)


_AR_PREFIXES = ("وال", "بال", "كال", "فال", "لل", "ال", "و")
_AR_SUFFIXES = ("ها", "ان", "ات", "ون", "ين", "يه", "ية", "ه", "ي")


def light_stem_arabic(token: str) -> str:
    """Single-pass light stemmer: at most one prefix, then at most one suffix.

    Longest affix wins; stripping never leaves fewer than 2 characters.
    Expects an already-normalized token.
    """
    stem = token
    for pre in _AR_PREFIXES:
        if stem.startswith(pre) and len(stem) - len(pre) >= 2:
            stem = stem[len(pre):]
            break
    for suf in _AR_SUFFIXES:
        if stem.endswith(suf) and len(stem) - len(suf) >= 2:
            stem = stem[: -len(suf)]
            break
    return stem


_EN_EXCEPTIONS = {
    "men": "man",
    "women": "woman",
    "children": "child",
    "feet": "foot",
    "teeth": "tooth",
    "mice": "mouse",
    "geese": "goose",
}

_VOWELS = set("aeiou")


def _undouble(stem: str) -> str:
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    return stem


def stem_english(token: str) -> str:
    """Rule-based English suffix normalizer (expects a lowercased token)."""
    if token in _EN_EXCEPTIONS:
        return _EN_EXCEPTIONS[token]
    if token.endswith("sses"):
        return token[:-2]
    if token.endswith("ies") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith("ing") and len(token) > 5:
        return _undouble(token[:-3])
    if token.endswith("ed") and len(token) > 4:
        return _undouble(token[:-2])
    if token.endswith("s") and not token.endswith(("ss", "us")) and len(token) > 3:
        return token[:-1]
    return token


def stem(token: str, lang: Language) -> str:
    """Apply the language's full stemming pipeline to a single token."""
    if lang is Language.ARABIC:
        return light_stem_arabic(normalize_arabic(token))
    return stem_english(token)


def feature_tokens(text: str, lang: Language) -> list[str]:
    """Token sequence used for classifier features: tokenize, plus Arabic
    orthographic normalization. No stemming (n-gram features stay surface-level)."""
    tokens = tokenize(text, lang)
    if lang is Language.ARABIC:
        tokens = [normalize_arabic(t) for t in tokens]
    return tokens


def extract_ngrams(
    tokens: Sequence[str], orders: Iterable[int]
) -> Counter[tuple[str, ...]]:
    """All contiguous n-grams of the requested orders, with multiplicities."""
    orders = set(orders)
    bad = orders - VALID_NGRAM_ORDERS
    if bad:
        raise ValueError(f"unsupported n-gram orders: {sorted(bad)}")
    grams: Counter[tuple[str, ...]] = Counter()
    for n in orders:
        for i in range(len(tokens) - n + 1):
            grams[tuple(tokens[i : i + n])] += 1
    return grams


def bag_of_words(text: str, lang: Language) -> set[str]:
    """Deduplicated stem set: tokenize -> (normalize if Arabic) -> stem."""
    return {stem(tok, lang) for tok in tokenize(text, lang)}
