"""Data model and JSONL I/O for bilingual corpora (plain and annotated).

A corpus is a sequence of aligned document pairs. Parallel corpora hold
sentence-level translation pairs; comparable corpora hold topic-aligned
documents. Both share one record format; the kind is metadata.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import DuplicateId, EmptyCorpus, LanguageMismatch, MalformedRecord
from .textproc import Language, tokenize


class CorpusKind(Enum):
    PARALLEL = "parallel"
    COMPARABLE = "comparable"


class SentimentLabel(Enum):
    SUBJECTIVE = "subjective"
    OBJECTIVE = "objective"

    @classmethod
    def parse(cls, value: str) -> "SentimentLabel":
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown sentiment label {value!r}") from None


@dataclass(frozen=True)
class Document:
    id: str
    lang: Language
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")
        if not self.text.strip():
            raise ValueError(f"document {self.id!r}: text must be non-empty")


@dataclass(frozen=True)
class DocumentPair:
    pair_id: str
    source: Document
    target: Document

    def __post_init__(self):
        if not self.pair_id:
            raise ValueError("pair_id must be non-empty")
        if self.source.lang is self.target.lang:
            raise LanguageMismatch(
                f"pair {self.pair_id!r}: source and target share language "
                f"{self.source.lang.value!r}"
            )


@dataclass(frozen=True)
class Corpus:
    name: str
    kind: CorpusKind
    pairs: tuple[DocumentPair, ...]

    @property
    def source_lang(self) -> Language:
        return self.pairs[0].source.lang

    @property
    def target_lang(self) -> Language:
        return self.pairs[0].target.lang


@dataclass(frozen=True)
class LabeledDocument:
    doc: Document
    label: SentimentLabel
    score: float = 0.0  # log-posterior margin; 0.0 sentinel for projected labels

    def __post_init__(self):
        if not math.isfinite(self.score):
            raise ValueError("score must be finite")


@dataclass(frozen=True)
class AnnotatedPair:
    """A document pair plus whatever annotations have been attached so far."""

    pair: DocumentPair
    source_label: SentimentLabel | None = None
    target_label: SentimentLabel | None = None
    source_emotions: tuple[str, ...] | None = None
    target_emotions: tuple[str, ...] | None = None


@dataclass(frozen=True)
class AnnotatedCorpus:
    name: str
    kind: CorpusKind
    pairs: tuple[AnnotatedPair, ...]

    def plain(self) -> Corpus:
        return Corpus(self.name, self.kind, tuple(p.pair for p in self.pairs))


@dataclass(frozen=True)
class CorpusStats:
    pair_count: int
    source_word_count: int
    target_word_count: int
    source_vocab_size: int
    target_vocab_size: int


def _doc_from_obj(obj, line_no: int, role: str) -> Document:
    if not isinstance(obj, dict):
        raise MalformedRecord(line_no, f"{role} must be an object")
    for field in ("id", "lang", "text"):
        if field not in obj:
            raise MalformedRecord(line_no, f"{role} missing field {field!r}")
    try:
        lang = Language.parse(obj["lang"])
    except ValueError as exc:
        raise MalformedRecord(line_no, str(exc)) from None
    try:
        return Document(id=str(obj["id"]), lang=lang, text=obj["text"])
    except ValueError as exc:
        raise MalformedRecord(line_no, str(exc)) from None


def _parse_record(line: str, line_no: int) -> tuple[DocumentPair, AnnotatedPair]:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(line_no, f"invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise MalformedRecord(line_no, "record must be a JSON object")
    if "pair_id" not in obj or "source" not in obj or "target" not in obj:
        raise MalformedRecord(line_no, "record needs pair_id, source, target")
    source = _doc_from_obj(obj["source"], line_no, "source")
    target = _doc_from_obj(obj["target"], line_no, "target")
    try:
        pair = DocumentPair(pair_id=str(obj["pair_id"]), source=source, target=target)
    except (ValueError, LanguageMismatch) as exc:
        raise MalformedRecord(line_no, str(exc)) from None

    def _label(key):
        if key not in obj or obj[key] is None:
            return None
        try:
            return SentimentLabel.parse(obj[key])
        except ValueError as exc:
            raise MalformedRecord(line_no, str(exc)) from None

    def _emotions(key):
        if key not in obj or obj[key] is None:
            return None
        if not isinstance(obj[key], list):
            raise MalformedRecord(line_no, f"{key} must be an array")
        return tuple(str(e) for e in obj[key])

    annotated = AnnotatedPair(
        pair=pair,
        source_label=_label("source_label"),
        target_label=_label("target_label"),
        source_emotions=_emotions("source_emotions"),
        target_emotions=_emotions("target_emotions"),
    )
    return pair, annotated


def _read_pairs(path) -> list[AnnotatedPair]:
    path = Path(path)
    annotated = []
    seen_ids = set()
    lang_pair = None
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            pair, ann = _parse_record(line, line_no)
            if pair.pair_id in seen_ids:
                raise DuplicateId(f"duplicate pair_id {pair.pair_id!r}")
            seen_ids.add(pair.pair_id)
            this_pair = (pair.source.lang, pair.target.lang)
            if lang_pair is None:
                lang_pair = this_pair
            elif this_pair != lang_pair:
                raise LanguageMismatch(
                    f"line {line_no}: language ordering {this_pair} differs "
                    f"from first record {lang_pair}"
                )
            annotated.append(ann)
    if not annotated:
        raise EmptyCorpus(f"no records in {path}")
    return annotated


def load_corpus(path, kind: CorpusKind) -> Corpus:
    """Load a JSONL corpus, validating ids, languages and record shape."""
    annotated = _read_pairs(path)
    return Corpus(
        name=Path(path).stem,
        kind=kind,
        pairs=tuple(a.pair for a in annotated),
    )


def load_annotated_corpus(path, kind: CorpusKind) -> AnnotatedCorpus:
    """Like load_corpus but keeps label/emotion annotations from the records."""
    annotated = _read_pairs(path)
    return AnnotatedCorpus(name=Path(path).stem, kind=kind, pairs=tuple(annotated))


def _doc_to_obj(doc: Document) -> dict:
    return {"id": doc.id, "lang": doc.lang.value, "text": doc.text}


def pair_to_record(ann: AnnotatedPair) -> dict:
    obj = {
        "pair_id": ann.pair.pair_id,
        "source": _doc_to_obj(ann.pair.source),
        "target": _doc_to_obj(ann.pair.target),
    }
    if ann.source_label is not None:
        obj["source_label"] = ann.source_label.value
    if ann.target_label is not None:
        obj["target_label"] = ann.target_label.value
    if ann.source_emotions is not None:
        obj["source_emotions"] = list(ann.source_emotions)
    if ann.target_emotions is not None:
        obj["target_emotions"] = list(ann.target_emotions)
    return obj


def save_corpus(corpus: Corpus | AnnotatedCorpus, path) -> None:
    """Write JSONL, one pair per line, UTF-8, deterministic key order."""
    if isinstance(corpus, Corpus):
        anns: Iterable[AnnotatedPair] = (AnnotatedPair(pair=p) for p in corpus.pairs)
    else:
        anns = corpus.pairs
    with Path(path).open("w", encoding="utf-8") as fh:
        for ann in anns:
            fh.write(json.dumps(pair_to_record(ann), ensure_ascii=False))
            fh.write("\n")


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Token and vocabulary accounting per side."""
    src_total = tgt_total = 0
    src_vocab: set[str] = set()
    tgt_vocab: set[str] = set()
    for pair in corpus.pairs:
        src_toks = tokenize(pair.source.text, pair.source.lang)
        tgt_toks = tokenize(pair.target.text, pair.target.lang)
        src_total += len(src_toks)
        tgt_total += len(tgt_toks)
        src_vocab.update(src_toks)
        tgt_vocab.update(tgt_toks)
    return CorpusStats(
        pair_count=len(corpus.pairs),
        source_word_count=src_total,
        target_word_count=tgt_total,
        source_vocab_size=len(src_vocab),
        target_vocab_size=len(tgt_vocab),
    )


def split_corpus(corpus: Corpus, fraction: float, seed: int) -> tuple[Corpus, Corpus]:
    """Seeded shuffle, then split so the first part has round(fraction * N) pairs."""
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    if len(corpus.pairs) < 2:
        raise ValueError("corpus must have at least 2 pairs to split")
    pairs = list(corpus.pairs)
    random.Random(seed).shuffle(pairs)
    n_first = int(math.floor(fraction * len(pairs) + 0.5))
    first = Corpus(f"{corpus.name}-a", corpus.kind, tuple(pairs[:n_first]))
    second = Corpus(f"{corpus.name}-b", corpus.kind, tuple(pairs[n_first:]))
    return first, second
