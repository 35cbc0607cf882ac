import itertools
from importlib import resources
from pathlib import Path

import pytest

from xlsenti import nbayes, projection
from xlsenti.corpus import (
    CorpusKind,
    Document,
    LabeledDocument,
    SentimentLabel,
    load_annotated_corpus,
    load_corpus,
)
from xlsenti.textproc import Language

FIXTURES = Path(__file__).parent / "fixtures"
SEED_LABELED = FIXTURES / "seed_labeled.jsonl"
PARALLEL_NEWS = FIXTURES / "parallel_news.jsonl"
LEXICON_TSV = Path(str(resources.files("xlsenti") / "data" / "emotion_lexicon.tsv"))

_ids = itertools.count()


def doc(text, lang=Language.ENGLISH, doc_id=None):
    return Document(id=doc_id or f"d{next(_ids)}", lang=lang, text=text)


def labeled(text, label, lang=Language.ENGLISH):
    if isinstance(label, str):
        label = SentimentLabel(label)
    return LabeledDocument(doc=doc(text, lang), label=label)


@pytest.fixture(scope="session")
def seed_annotated():
    return load_annotated_corpus(SEED_LABELED, CorpusKind.PARALLEL)


@pytest.fixture(scope="session")
def seed_model(seed_annotated):
    gold = [
        LabeledDocument(doc=ann.pair.source, label=ann.source_label)
        for ann in seed_annotated.pairs
    ]
    config = nbayes.FeatureConfig(lang=Language.ENGLISH)
    return nbayes.train(gold, config, trained_on=seed_annotated.name)


@pytest.fixture(scope="session")
def parallel_corpus():
    return load_corpus(PARALLEL_NEWS, CorpusKind.PARALLEL)


@pytest.fixture(scope="session")
def target_model(parallel_corpus, seed_model):
    config = nbayes.FeatureConfig(lang=Language.ARABIC)
    return projection.bootstrap_target(parallel_corpus, seed_model, config)
