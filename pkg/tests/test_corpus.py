import json

import pytest
from hypothesis import given, strategies as st

from xlsenti.corpus import (
    Corpus,
    CorpusKind,
    Document,
    DocumentPair,
    SentimentLabel,
    corpus_stats,
    load_annotated_corpus,
    load_corpus,
    save_corpus,
    split_corpus,
)
from xlsenti.errors import DuplicateId, EmptyCorpus, LanguageMismatch, MalformedRecord
from xlsenti.textproc import Language

from conftest import PARALLEL_NEWS, SEED_LABELED


def record(pair_id, src_text="hello world", tgt_text="مرحبا بالعالم", **extra):
    obj = {
        "pair_id": pair_id,
        "source": {"id": f"{pair_id}-en", "lang": "english", "text": src_text},
        "target": {"id": f"{pair_id}-ar", "lang": "arabic", "text": tgt_text},
    }
    obj.update(extra)
    return obj


def write_jsonl(path, records):
    path.write_text(
        "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records),
        encoding="utf-8",
    )
    return path


class TestLoadCorpus:
    def test_well_formed(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", [record(f"p{i}") for i in range(3)])
        c = load_corpus(path, CorpusKind.PARALLEL)
        assert len(c.pairs) == 3
        assert c.name == "c"
        assert c.source_lang is Language.ENGLISH

    def test_duplicate_pair_id(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", [record("p1"), record("p1")])
        with pytest.raises(DuplicateId):
            load_corpus(path, CorpusKind.PARALLEL)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text("", encoding="utf-8")
        with pytest.raises(EmptyCorpus):
            load_corpus(path, CorpusKind.PARALLEL)

    def test_bad_json_reports_line(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(
            json.dumps(record("p1")) + "\n{not json\n", encoding="utf-8"
        )
        with pytest.raises(MalformedRecord) as err:
            load_corpus(path, CorpusKind.PARALLEL)
        assert err.value.line_no == 2

    def test_missing_field(self, tmp_path):
        rec = record("p1")
        del rec["source"]["text"]
        path = write_jsonl(tmp_path / "c.jsonl", [rec])
        with pytest.raises(MalformedRecord):
            load_corpus(path, CorpusKind.PARALLEL)

    def test_same_language_pair_rejected(self, tmp_path):
        rec = record("p1")
        rec["target"]["lang"] = "english"
        path = write_jsonl(tmp_path / "c.jsonl", [rec])
        with pytest.raises(MalformedRecord):
            load_corpus(path, CorpusKind.PARALLEL)

    def test_inconsistent_language_ordering(self, tmp_path):
        flipped = record("p2")
        flipped["source"], flipped["target"] = flipped["target"], flipped["source"]
        path = write_jsonl(tmp_path / "c.jsonl", [record("p1"), flipped])
        with pytest.raises(LanguageMismatch):
            load_corpus(path, CorpusKind.PARALLEL)

    def test_unknown_language(self, tmp_path):
        rec = record("p1")
        rec["source"]["lang"] = "german"
        path = write_jsonl(tmp_path / "c.jsonl", [rec])
        with pytest.raises(MalformedRecord):
            load_corpus(path, CorpusKind.PARALLEL)


class TestAnnotatedCorpus:
    def test_labels_and_emotions_parsed(self, tmp_path):
        rec = record(
            "p1",
            source_label="subjective",
            target_label="objective",
            source_emotions=["joy"],
            target_emotions=[],
        )
        path = write_jsonl(tmp_path / "c.jsonl", [rec])
        ac = load_annotated_corpus(path, CorpusKind.COMPARABLE)
        ann = ac.pairs[0]
        assert ann.source_label is SentimentLabel.SUBJECTIVE
        assert ann.target_label is SentimentLabel.OBJECTIVE
        assert ann.source_emotions == ("joy",)
        assert ann.target_emotions == ()

    def test_bad_label_rejected(self, tmp_path):
        path = write_jsonl(
            tmp_path / "c.jsonl", [record("p1", source_label="positive")]
        )
        with pytest.raises(MalformedRecord):
            load_annotated_corpus(path, CorpusKind.COMPARABLE)

    def test_plain_load_ignores_annotations(self, tmp_path):
        path = write_jsonl(
            tmp_path / "c.jsonl", [record("p1", source_label="subjective")]
        )
        c = load_corpus(path, CorpusKind.COMPARABLE)
        assert len(c.pairs) == 1


class TestRoundTrip:
    def test_save_load_save_is_bit_exact(self, tmp_path):
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        c = load_corpus(PARALLEL_NEWS, CorpusKind.PARALLEL)
        save_corpus(c, first)
        save_corpus(load_corpus(first, CorpusKind.PARALLEL), second)
        assert first.read_bytes() == second.read_bytes()

    def test_annotated_round_trip(self, tmp_path):
        first = tmp_path / "a.jsonl"
        second = tmp_path / "b.jsonl"
        ac = load_annotated_corpus(SEED_LABELED, CorpusKind.PARALLEL)
        save_corpus(ac, first)
        save_corpus(load_annotated_corpus(first, CorpusKind.PARALLEL), second)
        assert first.read_bytes() == second.read_bytes()


class TestCorpusStats:
    def test_tiny(self):
        pair = DocumentPair(
            "p1",
            Document("e1", Language.ENGLISH, "a b a"),
            Document("a1", Language.ARABIC, "كتاب"),
        )
        stats = corpus_stats(Corpus("t", CorpusKind.PARALLEL, (pair,)))
        assert stats.source_word_count == 3
        assert stats.source_vocab_size == 2
        assert stats.target_word_count == 1

    def test_duplicated_pairs_double_counts_not_vocab(self):
        def mk(i):
            return DocumentPair(
                f"p{i}",
                Document(f"e{i}", Language.ENGLISH, "a b a"),
                Document(f"a{i}", Language.ARABIC, "كتاب"),
            )

        one = corpus_stats(Corpus("t", CorpusKind.PARALLEL, (mk(1),)))
        two = corpus_stats(Corpus("t", CorpusKind.PARALLEL, (mk(1), mk(2))))
        assert two.source_word_count == 2 * one.source_word_count
        assert two.source_vocab_size == one.source_vocab_size

    def test_fixture_against_independent_count(self, parallel_corpus):
        # oracle: fixture texts are plain space-separated words, so a bare
        # split() recount is an independent tally
        src_words, tgt_words = [], []
        for pair in parallel_corpus.pairs:
            src_words += pair.source.text.split()
            tgt_words += pair.target.text.split()
        stats = corpus_stats(parallel_corpus)
        assert stats.pair_count == len(parallel_corpus.pairs)
        assert stats.source_word_count == len(src_words)
        assert stats.target_word_count == len(tgt_words)
        assert stats.source_vocab_size == len(set(src_words))
        assert stats.target_vocab_size == len(set(tgt_words))


class TestSplitCorpus:
    def test_sizes(self, parallel_corpus):
        first, second = split_corpus(parallel_corpus, 0.1, seed=7)
        assert len(first.pairs) == 12
        assert len(second.pairs) == 108

    def test_deterministic(self, parallel_corpus):
        a = split_corpus(parallel_corpus, 0.3, seed=42)
        b = split_corpus(parallel_corpus, 0.3, seed=42)
        assert [p.pair_id for p in a[0].pairs] == [p.pair_id for p in b[0].pairs]

    @given(fraction=st.floats(0.05, 0.95), seed=st.integers(0, 1000))
    def test_partition(self, fraction, seed):
        pairs = tuple(
            DocumentPair(
                f"p{i}",
                Document(f"e{i}", Language.ENGLISH, "x"),
                Document(f"a{i}", Language.ARABIC, "ي"),
            )
            for i in range(10)
        )
        c = Corpus("t", CorpusKind.PARALLEL, pairs)
        first, second = split_corpus(c, fraction, seed)
        ids = {p.pair_id for p in first.pairs} | {p.pair_id for p in second.pairs}
        assert ids == {p.pair_id for p in pairs}
        assert len(first.pairs) + len(second.pairs) == 10
        assert len(first.pairs) == int(fraction * 10 + 0.5)

    def test_rejects_bad_fraction(self, parallel_corpus):
        with pytest.raises(ValueError):
            split_corpus(parallel_corpus, 1.0, seed=1)
        with pytest.raises(ValueError):
            split_corpus(parallel_corpus, 0.0, seed=1)


def test_document_validation():
    with pytest.raises(ValueError):
        Document("", Language.ENGLISH, "text")
    with pytest.raises(ValueError):
        Document("d1", Language.ENGLISH, "   ")
