"""Six-emotion lexicon: loading, text tagging, and evaluation.

A lexicon maps synset entries (groups of synonym words) to one of the six
basic emotions. Tagging is stem-level string matching over a bag of words:
the same stemmer runs on lexicon entries and on text, so matching is
consistent by construction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator, Sequence

from .errors import EmptyLexicon, MalformedRow
from .textproc import Language, bag_of_words, stem


class Emotion(Enum):
    ANGER = "anger"
    DISGUST = "disgust"
    FEAR = "fear"
    JOY = "joy"
    SADNESS = "sadness"
    SURPRISE = "surprise"

    @classmethod
    def parse(cls, value: str) -> "Emotion":
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown emotion {value!r}") from None


@dataclass(frozen=True)
class EmotionVector:
    """Presence/absence of each of the six emotions in a text."""

    emotions: frozenset[Emotion]

    def __contains__(self, emotion: Emotion) -> bool:
        return emotion in self.emotions

    def as_dict(self) -> dict[Emotion, bool]:
        return {e: e in self.emotions for e in Emotion}

    @classmethod
    def of(cls, *emotions: Emotion) -> "EmotionVector":
        return cls(frozenset(emotions))

    @classmethod
    def from_names(cls, names) -> "EmotionVector":
        return cls(frozenset(Emotion.parse(n) for n in names))


@dataclass(frozen=True)
class LexiconEntry:
    synset_id: str
    emotion: Emotion
    lang: Language
    words: frozenset[str]

    def __post_init__(self):
        if not self.words or any(not w for w in self.words):
            raise ValueError(f"synset {self.synset_id!r}: words must be non-empty")


@dataclass(frozen=True)
class EmotionLexicon:
    lang: Language
    entries: tuple[LexiconEntry, ...]
    stem_index: dict[str, frozenset[Emotion]]


def _parse_rows(path) -> Iterator[tuple[int, LexiconEntry]]:
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise MalformedRow(line_no, f"expected 4 tab-separated fields, got {len(fields)}")
            synset_id, emotion_s, lang_s, words_s = fields
            try:
                emotion = Emotion.parse(emotion_s)
                lang = Language.parse(lang_s)
            except ValueError as exc:
                raise MalformedRow(line_no, str(exc)) from None
            words = frozenset(words_s.split())
            try:
                entry = LexiconEntry(synset_id, emotion, lang, words)
            except ValueError as exc:
                raise MalformedRow(line_no, str(exc)) from None
            yield line_no, entry


def load_lexicon(path, lang: Language) -> EmotionLexicon:
    """Load the rows for one language and build the stem index.

    A stem reached from words of several emotions keeps all of them (union
    semantics; tagging has no word sense disambiguation).
    """
    entries = tuple(e for _, e in _parse_rows(path) if e.lang is lang)
    if not entries:
        raise EmptyLexicon(f"no {lang.value} entries in {path}")
    index: dict[str, set[Emotion]] = defaultdict(set)
    for entry in entries:
        for word in entry.words:
            index[stem(word.lower(), lang)].add(entry.emotion)
    stem_index = {s: frozenset(ems) for s, ems in index.items()}
    return EmotionLexicon(lang=lang, entries=entries, stem_index=stem_index)


def tag_emotions(text: str, lexicon: EmotionLexicon) -> EmotionVector:
    """Mark every emotion whose lexicon stems intersect the text's bag of words."""
    found: set[Emotion] = set()
    for s in bag_of_words(text, lexicon.lang):
        found.update(lexicon.stem_index.get(s, ()))
    return EmotionVector(frozenset(found))


@dataclass(frozen=True)
class EmotionMetrics:
    accuracy: float
    precision: float
    recall: float
    f1: float
    undefined: bool = False  # precision or recall had a zero denominator


def evaluate_lexicon(
    gold: Sequence[tuple[str, EmotionVector]], lexicon: EmotionLexicon
) -> dict[Emotion, EmotionMetrics]:
    """Per-emotion binary metrics of lexicon tagging against gold vectors."""
    if not gold:
        raise ValueError("gold set must be non-empty")
    predicted = [tag_emotions(text, lexicon) for text, _ in gold]
    results = {}
    for emotion in Emotion:
        tp = fp = fn = tn = 0
        for pred, (_, gold_vec) in zip(predicted, gold):
            p, g = emotion in pred, emotion in gold_vec
            if p and g:
                tp += 1
            elif p:
                fp += 1
            elif g:
                fn += 1
            else:
                tn += 1
        undefined = False
        if tp + fp == 0:
            precision, undefined = 0.0, True
        else:
            precision = tp / (tp + fp)
        if tp + fn == 0:
            recall, undefined = 0.0, True
        else:
            recall = tp / (tp + fn)
        f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
        results[emotion] = EmotionMetrics(
            accuracy=(tp + tn) / len(gold),
            precision=precision,
            recall=recall,
            f1=f1,
            undefined=undefined,
        )
    return results


def lexicon_accounting(path) -> dict:
    """Per-emotion synset and word counts for a bilingual lexicon file.

    Synsets are distinct ids per emotion across both languages; word counts
    are per language. Mirrors the summary-table style bookkeeping used when
    documenting a lexicon.
    """
    synsets: dict[Emotion, set[str]] = {e: set() for e in Emotion}
    words: dict[Emotion, dict[Language, int]] = {
        e: {lang: 0 for lang in Language} for e in Emotion
    }
    saw_any = False
    for _, entry in _parse_rows(path):
        saw_any = True
        synsets[entry.emotion].add(entry.synset_id)
        words[entry.emotion][entry.lang] += len(entry.words)
    if not saw_any:
        raise EmptyLexicon(f"no entries in {path}")
    per_emotion = {
        e.value: {
            "synsets": len(synsets[e]),
            "english_words": words[e][Language.ENGLISH],
            "arabic_words": words[e][Language.ARABIC],
        }
        for e in Emotion
    }
    totals = {
        "synsets": len(set().union(*synsets.values())),
        "english_words": sum(v["english_words"] for v in per_emotion.values()),
        "arabic_words": sum(v["arabic_words"] for v in per_emotion.values()),
    }
    return {"per_emotion": per_emotion, "total": totals}
