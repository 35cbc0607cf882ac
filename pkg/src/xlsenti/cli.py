"""Command-line driver: train | project | annotate | eval | agree | stats.

Wires the library modules into the two-step comparison pipeline: annotate
both sides of a bilingual corpus with sentiment (and optionally emotions),
then report cross-lingual agreement as Kappa with scale interpretations.

Exit codes: 0 success, 2 I/O failure, 3 validation/domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import agreement, corpus, emolex, nbayes, projection
from .corpus import CorpusKind
from .errors import XlsentiError
from .textproc import Language

EXIT_IO = 2
EXIT_VALIDATION = 3


def _parse_orders(value: str) -> frozenset[int]:
    try:
        return frozenset(int(p) for p in value.split(","))
    except ValueError:
        raise ValueError(f"bad --orders value {value!r}; expected e.g. '1,2,3'") from None


def _add_common(parser):
    parser.add_argument("--config", help="TOML config file; flags override it")
    parser.add_argument("--seed", type=int, default=None, help="RNG seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xlsenti",
        description="Cross-lingual sentiment/emotion annotation and agreement",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="corpus token/vocabulary statistics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--out", default=None)
    _add_common(p)

    p = sub.add_parser("train", help="train a sentiment classifier on a labeled corpus")
    p.add_argument("--corpus", required=True, help="annotated JSONL with gold labels")
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--side", choices=["source", "target"], default=None)
    p.add_argument("--orders", default=None, help="n-gram orders, e.g. 1,2,3")
    p.add_argument("--min-count", type=int, default=None)
    p.add_argument("--out", required=True, help="model JSON output path")
    _add_common(p)

    p = sub.add_parser("project", help="bootstrap a target-language classifier")
    p.add_argument("--corpus", required=True, help="parallel corpus JSONL")
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--model", required=True, help="source-language model")
    p.add_argument("--orders", default=None)
    p.add_argument("--min-count", type=int, default=None)
    p.add_argument("--out", required=True, help="target model output path")
    _add_common(p)

    p = sub.add_parser("annotate", help="label both sides of a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--model", required=True, help="source-side model")
    p.add_argument("--target-model", required=True)
    p.add_argument("--lexicon-en", default=None, help="enable emotion tagging (English)")
    p.add_argument("--lexicon-ar", default=None, help="enable emotion tagging (Arabic)")
    p.add_argument("--out", required=True)
    _add_common(p)

    p = sub.add_parser("agree", help="agreement report for an annotated corpus")
    p.add_argument("--corpus", required=True, help="annotated JSONL")
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--out", default=None, help="report path prefix (.json/.csv added)")
    p.add_argument("--format", choices=["json", "csv"], default=None)
    _add_common(p)

    p = sub.add_parser("eval", help="evaluate a model or lexicon against gold")
    p.add_argument("--corpus", required=True, help="gold annotated JSONL")
    p.add_argument("--kind", choices=["parallel", "comparable"], default=None)
    p.add_argument("--model", default=None)
    p.add_argument("--lexicon-en", default=None)
    p.add_argument("--lexicon-ar", default=None)
    p.add_argument("--side", choices=["source", "target"], default=None)
    _add_common(p)

    return parser


_CONFIG_DEFAULTS = {
    "kind": "parallel",
    "side": "source",
    "orders": "1,2,3",
    "min_count": 2,
    "seed": 0,
    "format": "json",
    "fraction": 0.1,
}


def _resolve(args) -> argparse.Namespace:
    """Fill unset options from the TOML config file, then from defaults."""
    config = {}
    if getattr(args, "config", None):
        with open(args.config, "rb") as fh:
            config = tomllib.load(fh)
    for key, default in _CONFIG_DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))
    return args


def _corpus_kind(args) -> CorpusKind:
    return CorpusKind(args.kind)


def _feature_config(args, lang: Language) -> nbayes.FeatureConfig:
    return nbayes.FeatureConfig(
        lang=lang,
        orders=_parse_orders(args.orders) if isinstance(args.orders, str)
        else frozenset(args.orders),
        min_count=args.min_count,
    )


def cmd_stats(args) -> int:
    c = corpus.load_corpus(args.corpus, _corpus_kind(args))
    stats = corpus.corpus_stats(c)
    obj = {
        "corpus": c.name,
        "kind": c.kind.value,
        "pairs": stats.pair_count,
        "source": {"words": stats.source_word_count, "vocab": stats.source_vocab_size},
        "target": {"words": stats.target_word_count, "vocab": stats.target_vocab_size},
    }
    text = json.dumps(obj, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return 0


def _gold_side(annotated: corpus.AnnotatedCorpus, side: str) -> list[corpus.LabeledDocument]:
    docs = []
    for ann in annotated.pairs:
        label = ann.source_label if side == "source" else ann.target_label
        doc = ann.pair.source if side == "source" else ann.pair.target
        if label is None:
            raise XlsentiError(
                f"pair {ann.pair.pair_id!r} has no {side}_label; "
                "a labeled corpus is required"
            )
        docs.append(corpus.LabeledDocument(doc=doc, label=label))
    return docs


def cmd_train(args) -> int:
    annotated = corpus.load_annotated_corpus(args.corpus, _corpus_kind(args))
    labeled = _gold_side(annotated, args.side)
    config = _feature_config(args, labeled[0].doc.lang)
    model = nbayes.train(labeled, config, trained_on=annotated.name)
    nbayes.save_model(model, args.out)
    counts = Counter(ld.label.value for ld in labeled)
    print(f"trained on {annotated.name} ({args.side} side, {config.lang.value})")
    print(f"class counts: {dict(sorted(counts.items()))}")
    print(f"vocabulary size: {len(model.vocabulary)}")
    print(f"model written to {args.out}")
    return 0


def cmd_project(args) -> int:
    c = corpus.load_corpus(args.corpus, _corpus_kind(args))
    source_model = nbayes.load_model(args.model)
    target_config = _feature_config(args, c.target_lang)
    target_model = projection.bootstrap_target(c, source_model, target_config)
    nbayes.save_model(target_model, args.out)
    print(f"bootstrapped {target_config.lang.value} model from {c.name}")
    print(f"vocabulary size: {len(target_model.vocabulary)}")
    print(f"model written to {args.out}")
    return 0


def cmd_annotate(args) -> int:
    c = corpus.load_corpus(args.corpus, _corpus_kind(args))
    source_model = nbayes.load_model(args.model)
    target_model = nbayes.load_model(args.target_model)
    source_labels = projection.annotate_side(source_model, c, projection.Side.SOURCE)
    target_labels = projection.annotate_side(target_model, c, projection.Side.TARGET)

    lexicons = {}
    if args.lexicon_en or args.lexicon_ar:
        if not (args.lexicon_en and args.lexicon_ar):
            raise XlsentiError("emotion tagging needs both --lexicon-en and --lexicon-ar")
        lexicons[Language.ENGLISH] = emolex.load_lexicon(args.lexicon_en, Language.ENGLISH)
        lexicons[Language.ARABIC] = emolex.load_lexicon(args.lexicon_ar, Language.ARABIC)

    def _emotions(doc):
        if not lexicons:
            return None
        vec = emolex.tag_emotions(doc.text, lexicons[doc.lang])
        return tuple(sorted(e.value for e in vec.emotions))

    annotated = []
    for pair, s_lab, t_lab in zip(c.pairs, source_labels, target_labels):
        annotated.append(
            corpus.AnnotatedPair(
                pair=pair,
                source_label=s_lab.label,
                target_label=t_lab.label,
                source_emotions=_emotions(pair.source),
                target_emotions=_emotions(pair.target),
            )
        )
    out = corpus.AnnotatedCorpus(name=c.name, kind=c.kind, pairs=tuple(annotated))
    corpus.save_corpus(out, args.out)
    print(f"annotated {len(annotated)} pairs -> {args.out}")
    return 0


def cmd_agree(args) -> int:
    annotated = corpus.load_annotated_corpus(args.corpus, _corpus_kind(args))
    label_pairs = []
    for ann in annotated.pairs:
        if ann.source_label is None or ann.target_label is None:
            raise XlsentiError(
                f"pair {ann.pair.pair_id!r} lacks sentiment labels on both sides"
            )
        label_pairs.append((ann.source_label, ann.target_label))
    sentiment = agreement.sentiment_agreement(label_pairs)

    per_emotion = {}
    if all(
        ann.source_emotions is not None and ann.target_emotions is not None
        for ann in annotated.pairs
    ):
        vec_pairs = [
            (
                emolex.EmotionVector.from_names(ann.source_emotions),
                emolex.EmotionVector.from_names(ann.target_emotions),
            )
            for ann in annotated.pairs
        ]
        per_emotion = agreement.emotion_agreement(vec_pairs)

    report = agreement.AgreementReport(
        corpus_name=annotated.name,
        n_pairs=len(annotated.pairs),
        sentiment=sentiment,
        per_emotion=per_emotion,
    )
    if args.out:
        Path(args.out).with_suffix(".json").write_text(report.to_json(), encoding="utf-8")
        Path(args.out).with_suffix(".csv").write_text(report.to_csv(), encoding="utf-8")
        print(f"report written to {Path(args.out).with_suffix('.json')} and .csv")
    print(report.to_csv() if args.format == "csv" else report.to_json(), end="")
    return 0


def cmd_eval(args) -> int:
    annotated = corpus.load_annotated_corpus(args.corpus, _corpus_kind(args))
    if args.model:
        model = nbayes.load_model(args.model)
        gold = _gold_side(annotated, args.side)
        metrics = nbayes.evaluate(model, gold)
        print(f"accuracy: {metrics.accuracy:.4f}")
        print(f"{'class':<12} {'precision':>9} {'recall':>9} {'f1':>9} {'support':>8}")
        for label, m in metrics.per_class.items():
            print(
                f"{label.value:<12} {m.precision:>9.4f} {m.recall:>9.4f} "
                f"{m.f1:>9.4f} {m.support:>8}"
            )
        return 0
    if args.lexicon_en or args.lexicon_ar:
        side = args.side
        lang = Language.ENGLISH if args.lexicon_en else Language.ARABIC
        lexicon = emolex.load_lexicon(args.lexicon_en or args.lexicon_ar, lang)
        gold = []
        for ann in annotated.pairs:
            emotions = ann.source_emotions if side == "source" else ann.target_emotions
            doc = ann.pair.source if side == "source" else ann.pair.target
            if emotions is None:
                raise XlsentiError(
                    f"pair {ann.pair.pair_id!r} has no {side}_emotions gold annotation"
                )
            if doc.lang is not lang:
                raise XlsentiError(
                    f"{side} side is {doc.lang.value} but lexicon is {lang.value}"
                )
            gold.append((doc.text, emolex.EmotionVector.from_names(emotions)))
        results = emolex.evaluate_lexicon(gold, lexicon)
        print(f"{'emotion':<10} {'accuracy':>9} {'precision':>9} {'recall':>9} {'f1':>9}")
        for emotion, m in results.items():
            print(
                f"{emotion.value:<10} {m.accuracy:>9.4f} {m.precision:>9.4f} "
                f"{m.recall:>9.4f} {m.f1:>9.4f}"
            )
        return 0
    raise XlsentiError("eval needs --model or a lexicon flag")


_COMMANDS = {
    "stats": cmd_stats,
    "train": cmd_train,
    "project": cmd_project,
    "annotate": cmd_annotate,
    "agree": cmd_agree,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args = _resolve(args)
        return _COMMANDS[args.command](args)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (XlsentiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
