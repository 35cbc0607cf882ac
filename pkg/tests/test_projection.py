import random

import pytest

from xlsenti.agreement import sentiment_agreement
from xlsenti.corpus import Corpus, CorpusKind, DocumentPair, SentimentLabel
from xlsenti.errors import AlignmentError, LanguageMismatch, MissingClass
from xlsenti.nbayes import FeatureConfig, predict, train
from xlsenti.projection import (
    Side,
    annotate_side,
    bootstrap_target,
    project_labels,
    transfer_check,
)
from xlsenti.textproc import Language

from conftest import labeled

SUBJ = SentimentLabel.SUBJECTIVE
OBJ = SentimentLabel.OBJECTIVE


class TestAnnotateSide:
    def test_order_and_count(self, seed_model, parallel_corpus):
        labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        assert len(labels) == len(parallel_corpus.pairs)
        for ld, pair in zip(labels, parallel_corpus.pairs):
            assert ld.doc.id == pair.source.id

    def test_language_mismatch(self, seed_model, parallel_corpus):
        with pytest.raises(LanguageMismatch):
            annotate_side(seed_model, parallel_corpus, Side.TARGET)

    def test_elementwise_equals_predict(self, seed_model, parallel_corpus):
        labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        for ld, pair in zip(labels, parallel_corpus.pairs):
            assert ld.label is predict(seed_model, pair.source).label


class TestProjectLabels:
    def test_label_transfer(self, seed_model, parallel_corpus):
        source_labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        projected = project_labels(parallel_corpus, source_labels)
        for src, tgt, pair in zip(source_labels, projected, parallel_corpus.pairs):
            assert tgt.label is src.label
            assert tgt.doc.id == pair.target.id
            assert tgt.score == 0.0  # scores are source-model quantities

    def test_length_mismatch(self, seed_model, parallel_corpus):
        source_labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        with pytest.raises(AlignmentError):
            project_labels(parallel_corpus, source_labels[:-1])

    def test_id_mismatch(self, seed_model, parallel_corpus):
        source_labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        shuffled = list(reversed(source_labels))
        with pytest.raises(AlignmentError):
            project_labels(parallel_corpus, shuffled)

    def test_label_multiset_preserved(self, seed_model, parallel_corpus):
        from collections import Counter

        source_labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        projected = project_labels(parallel_corpus, source_labels)
        assert Counter(l.label for l in source_labels) == Counter(
            l.label for l in projected
        )


class TestBootstrapTarget:
    def test_separable_fixture_transfers_perfectly(
        self, parallel_corpus, seed_model, target_model
    ):
        # the fixture is constructed separable, so the bootstrapped model
        # should classify held-out target docs from the same vocabulary
        from conftest import doc

        subj_probe = doc("رائع جميل ممتع", lang=Language.ARABIC)
        obj_probe = doc("حكومة تقرير بيانات", lang=Language.ARABIC)
        assert predict(target_model, subj_probe).label is SUBJ
        assert predict(target_model, obj_probe).label is OBJ

    def test_single_class_source_model_raises(self, parallel_corpus):
        # a model trained on disjoint vocabulary labels everything the same
        # way (tie-break -> objective), so projection has one class only
        biased = train(
            [labeled("qq qq", SUBJ), labeled("zz zz", OBJ)],
            FeatureConfig(lang=Language.ENGLISH, orders=frozenset({1}), min_count=1),
        )
        with pytest.raises(MissingClass):
            bootstrap_target(
                parallel_corpus,
                biased,
                FeatureConfig(lang=Language.ARABIC),
            )

    def test_requires_parallel_kind(self, parallel_corpus, seed_model):
        comparable = Corpus(
            parallel_corpus.name, CorpusKind.COMPARABLE, parallel_corpus.pairs
        )
        with pytest.raises(ValueError):
            bootstrap_target(
                comparable, seed_model, FeatureConfig(lang=Language.ARABIC)
            )

    def test_equals_manual_composition(self, parallel_corpus, seed_model):
        config = FeatureConfig(lang=Language.ARABIC)
        via_pipeline = bootstrap_target(parallel_corpus, seed_model, config)
        source_labels = annotate_side(seed_model, parallel_corpus, Side.SOURCE)
        projected = project_labels(parallel_corpus, source_labels)
        manual = train(projected, config)
        assert via_pipeline.class_log_prior == manual.class_log_prior
        assert via_pipeline.feature_log_prob == manual.feature_log_prob

    def test_deterministic(self, parallel_corpus, seed_model):
        config = FeatureConfig(lang=Language.ARABIC)
        a = bootstrap_target(parallel_corpus, seed_model, config)
        b = bootstrap_target(parallel_corpus, seed_model, config)
        assert a.feature_log_prob == b.feature_log_prob


class TestTransferCheck:
    def test_high_kappa_on_fixture(self, parallel_corpus, seed_model, target_model):
        pairs = transfer_check(parallel_corpus, seed_model, target_model)
        assert sentiment_agreement(pairs).kappa >= 0.8

    def test_identical_labelings_give_one(self, parallel_corpus, seed_model, target_model):
        pairs = transfer_check(parallel_corpus, seed_model, target_model)
        same = [(a, a) for a, _ in pairs]
        assert sentiment_agreement(same).kappa in (1.0,)

    def test_opposite_constant_classifiers(self):
        pairs = [(SUBJ, OBJ)] * 20
        assert sentiment_agreement(pairs).kappa <= 0

    def test_projection_beats_misalignment(
        self, parallel_corpus, seed_model, target_model
    ):
        aligned = transfer_check(parallel_corpus, seed_model, target_model)
        aligned_kappa = sentiment_agreement(aligned).kappa

        rng = random.Random(31)
        shuffled_targets = list(parallel_corpus.pairs)
        rng.shuffle(shuffled_targets)
        permuted = Corpus(
            "permuted",
            CorpusKind.PARALLEL,
            tuple(
                DocumentPair(p.pair_id, p.source, q.target)
                for p, q in zip(parallel_corpus.pairs, shuffled_targets)
            ),
        )
        permuted_kappa = sentiment_agreement(
            transfer_check(permuted, seed_model, target_model)
        ).kappa
        assert aligned_kappa > permuted_kappa
        assert permuted_kappa < 0.2
