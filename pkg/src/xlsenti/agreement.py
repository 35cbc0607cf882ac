"""Cohen's Kappa agreement between two annotators over binary categories.

Covers the chance-corrected statistic itself, sentiment- and per-emotion
agreement wrappers, and the qualitative interpretation scales.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Hashable, Sequence

from .corpus import SentimentLabel
from .emolex import Emotion, EmotionVector
from .errors import LengthMismatch, UnknownCategory


@dataclass(frozen=True)
class ContingencyTable:
    """2x2 joint label counts for two annotators over the same items."""

    labels: tuple[Hashable, Hashable]
    counts: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        if len(self.labels) != 2 or self.labels[0] == self.labels[1]:
            raise ValueError("labels must be two distinct categories")
        if any(c < 0 for row in self.counts for c in row):
            raise ValueError("counts must be non-negative")
        if self.n < 1:
            raise ValueError("table must contain at least one item")

    @property
    def n(self) -> int:
        return sum(c for row in self.counts for c in row)


@dataclass(frozen=True)
class KappaResult:
    observed: float
    expected: float
    kappa: float
    degenerate: bool = False


def build_table(
    labels_a: Sequence[Hashable],
    labels_b: Sequence[Hashable],
    categories: tuple[Hashable, Hashable],
) -> ContingencyTable:
    """Tally the 2x2 co-occurrence counts of two equal-length label sequences."""
    if len(labels_a) != len(labels_b):
        raise LengthMismatch(
            f"annotator sequences differ in length: {len(labels_a)} vs {len(labels_b)}"
        )
    if not labels_a:
        raise LengthMismatch("annotator sequences must be non-empty")
    index = {categories[0]: 0, categories[1]: 1}
    counts = [[0, 0], [0, 0]]
    for a, b in zip(labels_a, labels_b):
        if a not in index or b not in index:
            bad = a if a not in index else b
            raise UnknownCategory(f"label {bad!r} not in categories {categories}")
        counts[index[a]][index[b]] += 1
    return ContingencyTable(
        labels=categories,
        counts=(tuple(counts[0]), tuple(counts[1])),
    )


def kappa(table: ContingencyTable) -> KappaResult:
    """Chance-corrected agreement: k = (A_o - A_e) / (1 - A_e).

    A_e comes from the annotators' marginal label proportions. When both
    annotators are constant on the same label A_e = 1 and the formula is
    undefined; by convention that case yields 1.0 on full observed agreement
    and 0.0 otherwise, flagged as degenerate.

    Counts are integers, so the statistic is computed in exact rational
    arithmetic and only converted to float at the end; clean ratios come out
    bit-exact (e.g. a table with 70% diagonal mass and even marginals gives
    kappa 0.4, not 0.39999...).
    """
    n = table.n
    (c00, c01), (c10, c11) = table.counts
    observed = Fraction(c00 + c11, n)
    p_a = (Fraction(c00 + c01, n), Fraction(c10 + c11, n))  # annotator 1 marginals
    p_b = (Fraction(c00 + c10, n), Fraction(c01 + c11, n))  # annotator 2 marginals
    expected = p_a[0] * p_b[0] + p_a[1] * p_b[1]
    if expected == 1:
        return KappaResult(
            observed=float(observed),
            expected=float(expected),
            kappa=1.0 if observed == 1 else 0.0,
            degenerate=True,
        )
    return KappaResult(
        observed=float(observed),
        expected=float(expected),
        kappa=float((observed - expected) / (1 - expected)),
    )


def sentiment_agreement(
    annotated: Sequence[tuple[SentimentLabel, SentimentLabel]]
) -> KappaResult:
    """Corpus-level Kappa between the two sides' sentiment labelings."""
    labels_a = [a for a, _ in annotated]
    labels_b = [b for _, b in annotated]
    table = build_table(
        labels_a, labels_b, (SentimentLabel.SUBJECTIVE, SentimentLabel.OBJECTIVE)
    )
    return kappa(table)


def emotion_agreement(
    annotated: Sequence[tuple[EmotionVector, EmotionVector]]
) -> dict[Emotion, KappaResult]:
    """Six independent presence/absence Kappas, one per emotion category."""
    results = {}
    for emotion in Emotion:
        flags_a = [emotion in va for va, _ in annotated]
        flags_b = [emotion in vb for _, vb in annotated]
        results[emotion] = kappa(build_table(flags_a, flags_b, (True, False)))
    return results


class Scheme(Enum):
    LANDIS_KOCH = "landis_koch"
    KRIPPENDORFF = "krippendorff"
    GREEN_FLEISS = "green_fleiss"


@dataclass(frozen=True)
class ScaleBand:
    scheme: Scheme
    band: str


# (lower bound inclusive, band name); a value below every bound gets the floor band
_SCALES = {
    Scheme.LANDIS_KOCH: (
        "none",
        [(0.0, "slight"), (0.2, "fair"), (0.4, "moderate"),
         (0.6, "substantial"), (0.8, "perfect")],
    ),
    Scheme.KRIPPENDORFF: (
        "discard",
        [(0.67, "tentative"), (0.8, "good")],
    ),
    Scheme.GREEN_FLEISS: (
        "low/poor",
        [(0.4, "fair/good"), (0.75, "high/excellent")],
    ),
}


def interpret(k: float, scheme: Scheme) -> ScaleBand:
    """Map a Kappa value onto a qualitative band; bounds are left-closed."""
    if not -1.0 <= k <= 1.0:
        raise ValueError(f"kappa must lie in [-1, 1], got {k}")
    band, thresholds = _SCALES[scheme]
    for lower, name in thresholds:
        if k >= lower:
            band = name
    return ScaleBand(scheme=scheme, band=band)


def interpret_all(k: float) -> dict[Scheme, ScaleBand]:
    return {scheme: interpret(k, scheme) for scheme in Scheme}


@dataclass(frozen=True)
class AgreementReport:
    corpus_name: str
    n_pairs: int
    sentiment: KappaResult
    per_emotion: dict[Emotion, KappaResult]

    def rows(self) -> list[dict]:
        """Flat rows (sentiment first, then the six emotions) with all scales."""
        out = []
        entries = [("sentiment", self.sentiment)]
        entries += [(e.value, r) for e, r in self.per_emotion.items()]
        for category, result in entries:
            row = {
                "corpus": self.corpus_name,
                "category": category,
                "n": self.n_pairs,
                "observed": result.observed,
                "expected": result.expected,
                "kappa": result.kappa,
                "degenerate": result.degenerate,
            }
            for scheme in Scheme:
                row[scheme.value] = interpret(result.kappa, scheme).band
            out.append(row)
        return out

    def to_json(self) -> str:
        obj = {
            "corpus": self.corpus_name,
            "n_pairs": self.n_pairs,
            "results": self.rows(),
        }
        return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"

    def to_csv(self) -> str:
        rows = self.rows()
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
