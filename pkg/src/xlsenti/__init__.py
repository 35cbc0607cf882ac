"""Cross-lingual (English-Arabic) subjectivity and emotion annotation toolkit.

Annotates aligned bilingual document pairs with subjective/objective labels
(bootstrapped Naive Bayes) and six-emotion tags (lexicon matching), then
measures cross-lingual agreement with Cohen's Kappa.
"""

from .corpus import (
    AnnotatedCorpus,
    AnnotatedPair,
    Corpus,
    CorpusKind,
    Document,
    DocumentPair,
    LabeledDocument,
    SentimentLabel,
)
from .textproc import Language

__all__ = [
    "AnnotatedCorpus",
    "AnnotatedPair",
    "Corpus",
    "CorpusKind",
    "Document",
    "DocumentPair",
    "LabeledDocument",
    "Language",
    "SentimentLabel",
]

__version__ = "0.1.0"
