"""Bernoulli Naive Bayes subjectivity classifier over n-gram presence features.

Features are binary (n-gram occurs in the document or not); scoring is
full-vocabulary, so the absence of a feature is informative too. Smoothing is
add-one with denominator +2 (two outcomes: present/absent).
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .corpus import Document, LabeledDocument, SentimentLabel
from .errors import LanguageMismatch, MissingClass, SchemaError
from .textproc import Language, extract_ngrams, feature_tokens, VALID_NGRAM_ORDERS

NGram = tuple[str, ...]

# separator for serializing n-gram terms as a single JSON key
_KEY_SEP = "␟"

_FORMAT = "xlsenti-nbayes"
_VERSION = 1

# deterministic tie-break: news text is majority-objective
_TIE_BREAK = SentimentLabel.OBJECTIVE


@dataclass(frozen=True)
class FeatureConfig:
    lang: Language
    orders: frozenset[int] = frozenset({1, 2, 3})
    min_count: int = 2

    def __post_init__(self):
        if not self.orders:
            raise ValueError("orders must be non-empty")
        if not set(self.orders) <= VALID_NGRAM_ORDERS:
            raise ValueError(f"orders must be a subset of {{1,2,3}}, got {self.orders}")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")


@dataclass(frozen=True)
class Prediction:
    label: SentimentLabel
    log_posterior: dict[SentimentLabel, float]


@dataclass(frozen=True)
class NaiveBayesModel:
    config: FeatureConfig
    class_log_prior: dict[SentimentLabel, float]
    # feature -> label -> (log p(present), log p(absent))
    feature_log_prob: dict[NGram, dict[SentimentLabel, tuple[float, float]]]
    trained_on: str = ""
    # per-class sum of log p(absent) over the whole vocabulary, for O(|doc|) scoring
    _absent_base: dict[SentimentLabel, float] = field(default=None, repr=False)

    def __post_init__(self):
        if self._absent_base is None:
            base = {
                label: sum(probs[label][1] for probs in self.feature_log_prob.values())
                for label in self.class_log_prior
            }
            object.__setattr__(self, "_absent_base", base)

    @property
    def vocabulary(self) -> frozenset[NGram]:
        return frozenset(self.feature_log_prob)


def document_features(doc: Document, config: FeatureConfig) -> set[NGram]:
    """The set of n-grams present in a document under the given config."""
    tokens = feature_tokens(doc.text, config.lang)
    return set(extract_ngrams(tokens, config.orders))


def build_vocabulary(
    docs: Sequence[Document], config: FeatureConfig
) -> frozenset[NGram]:
    """Keep n-grams whose total occurrence count over all docs >= min_count."""
    counts: Counter[NGram] = Counter()
    for doc in docs:
        tokens = feature_tokens(doc.text, config.lang)
        counts.update(extract_ngrams(tokens, config.orders))
    return frozenset(g for g, c in counts.items() if c >= config.min_count)


def train(
    labeled: Sequence[LabeledDocument], config: FeatureConfig, trained_on: str = ""
) -> NaiveBayesModel:
    """Fit priors and per-feature Bernoulli likelihoods with Laplace smoothing."""
    class_counts = Counter(ld.label for ld in labeled)
    for label in SentimentLabel:
        if class_counts[label] == 0:
            raise MissingClass(f"no training documents with label {label.value!r}")

    vocab = build_vocabulary([ld.doc for ld in labeled], config)

    # document frequency of each feature within each class
    df: dict[SentimentLabel, Counter[NGram]] = {l: Counter() for l in SentimentLabel}
    for ld in labeled:
        present = document_features(ld.doc, config) & vocab
        df[ld.label].update(present)

    total = len(labeled)
    class_log_prior = {
        label: math.log(class_counts[label] / total) for label in SentimentLabel
    }
    feature_log_prob: dict[NGram, dict[SentimentLabel, tuple[float, float]]] = {}
    for gram in vocab:
        per_label = {}
        for label in SentimentLabel:
            p_present = (df[label][gram] + 1) / (class_counts[label] + 2)
            per_label[label] = (math.log(p_present), math.log(1.0 - p_present))
        feature_log_prob[gram] = per_label

    return NaiveBayesModel(
        config=config,
        class_log_prior=class_log_prior,
        feature_log_prob=feature_log_prob,
        trained_on=trained_on,
    )


def predict(model: NaiveBayesModel, doc: Document) -> Prediction:
    """Full-vocabulary Bernoulli log-posterior; argmax with deterministic ties."""
    if doc.lang is not model.config.lang:
        raise LanguageMismatch(
            f"model is {model.config.lang.value}, document {doc.id!r} is {doc.lang.value}"
        )
    present = document_features(doc, model.config)
    log_posterior = {}
    for label, prior in model.class_log_prior.items():
        score = prior + model._absent_base[label]
        for gram in present:
            probs = model.feature_log_prob.get(gram)
            if probs is not None:
                lp, la = probs[label]
                score += lp - la
        log_posterior[label] = score
    best = max(log_posterior.values())
    if log_posterior[_TIE_BREAK] == best:
        label = _TIE_BREAK
    else:
        label = max(log_posterior, key=log_posterior.get)
    return Prediction(label=label, log_posterior=log_posterior)


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int
    undefined: bool = False  # a denominator was zero; metric reported as 0.0


@dataclass(frozen=True)
class EvalMetrics:
    accuracy: float
    per_class: dict[SentimentLabel, ClassMetrics]


def _prf(tp: int, fp: int, fn: int, support: int) -> ClassMetrics:
    undefined = False
    if tp + fp == 0:
        precision, undefined = 0.0, True
    else:
        precision = tp / (tp + fp)
    if tp + fn == 0:
        recall, undefined = 0.0, True
    else:
        recall = tp / (tp + fn)
    if precision + recall == 0:
        f1 = 0.0
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return ClassMetrics(precision, recall, f1, support, undefined)


def evaluate(model: NaiveBayesModel, gold: Sequence[LabeledDocument]) -> EvalMetrics:
    """Accuracy plus per-class precision/recall/F1 against gold labels."""
    if not gold:
        raise ValueError("gold set must be non-empty")
    predictions = [predict(model, ld.doc).label for ld in gold]
    correct = sum(1 for p, ld in zip(predictions, gold) if p is ld.label)
    per_class = {}
    for label in SentimentLabel:
        tp = sum(1 for p, ld in zip(predictions, gold) if p is label and ld.label is label)
        fp = sum(1 for p, ld in zip(predictions, gold) if p is label and ld.label is not label)
        fn = sum(1 for p, ld in zip(predictions, gold) if p is not label and ld.label is label)
        support = sum(1 for ld in gold if ld.label is label)
        per_class[label] = _prf(tp, fp, fn, support)
    return EvalMetrics(accuracy=correct / len(gold), per_class=per_class)


def save_model(model: NaiveBayesModel, path) -> None:
    obj = {
        "format": _FORMAT,
        "version": _VERSION,
        "config": {
            "lang": model.config.lang.value,
            "orders": sorted(model.config.orders),
            "min_count": model.config.min_count,
        },
        "trained_on": model.trained_on,
        "class_log_prior": {
            label.value: prior for label, prior in sorted(
                model.class_log_prior.items(), key=lambda kv: kv[0].value
            )
        },
        "features": {
            _KEY_SEP.join(gram): {
                label.value: list(pair) for label, pair in probs.items()
            }
            for gram, probs in sorted(model.feature_log_prob.items())
        },
    }
    with Path(path).open("w", encoding="utf-8") as fh:
        json.dump(obj, fh, ensure_ascii=False)
        fh.write("\n")


def load_model(path) -> NaiveBayesModel:
    try:
        with Path(path).open(encoding="utf-8") as fh:
            obj = json.load(fh)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(f"not a valid model file: {exc}") from None
    if not isinstance(obj, dict) or obj.get("format") != _FORMAT:
        raise SchemaError("unrecognized model file format")
    if obj.get("version") != _VERSION:
        raise SchemaError(f"unsupported model version {obj.get('version')!r}")
    try:
        cfg = obj["config"]
        config = FeatureConfig(
            lang=Language.parse(cfg["lang"]),
            orders=frozenset(cfg["orders"]),
            min_count=cfg["min_count"],
        )
        class_log_prior = {
            SentimentLabel.parse(k): float(v)
            for k, v in obj["class_log_prior"].items()
        }
        feature_log_prob = {
            tuple(key.split(_KEY_SEP)): {
                SentimentLabel.parse(lbl): (float(pair[0]), float(pair[1]))
                for lbl, pair in probs.items()
            }
            for key, probs in obj["features"].items()
        }
        trained_on = obj["trained_on"]
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        raise SchemaError(f"malformed model file: {exc}") from None
    if set(class_log_prior) != set(SentimentLabel):
        raise SchemaError("model must carry priors for both sentiment classes")
    return NaiveBayesModel(
        config=config,
        class_log_prior=class_log_prior,
        feature_log_prob=feature_log_prob,
        trained_on=trained_on,
    )
