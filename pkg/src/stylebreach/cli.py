"""Command line interface.

Subcommands: train, predict, locate, evaluate, synthesize, baseline.
Every option can also be supplied through --config FILE (key=value
lines, # comments); explicit flags override the file. Commands that
consume randomness pick and print a seed when none is given. Result
summaries are always written twice, as JSON lines and as an aligned
text table.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import corpus as corpus_io
from .features import DEFAULT_ACTIVE_GROUPS, GROUPS
from .locator import DEFAULT_MIN_SENTENCES, DEFAULT_THRESHOLD, LocatorConfig, locate_breaches
from .metrics import (
    BASELINE_EQ,
    BASELINE_RND,
    EvalReport,
    Segmentation,
    baseline_eq,
    baseline_rnd,
    baseline_rows,
    evaluate_segmentations,
)
from .preprocess import load_lexicon
from .stacking import StackConfig, load_model, predict_change, save_model, train_stack
from .tfidf import DEFAULT_MIN_DF

PREDICT_THRESHOLD = 0.5


def _parse_config_file(path):
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SystemExit(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        try:
            values[key] = json.loads(value)
        except json.JSONDecodeError:
            values[key] = value
    return values


def _write_text(path, text):
    tmp = Path(f"{path}.tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)


def _format_table(headers, rows):
    rows = [[str(c) for c in row] for row in rows]
    widths = [
        max(len(headers[c]), *(len(r[c]) for r in rows)) if rows else len(headers[c])
        for c in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[c]) for c, h in enumerate(headers)),
        "  ".join("-" * widths[c] for c in range(len(headers))),
    ]
    for r in rows:
        lines.append("  ".join(r[c].ljust(widths[c]) for c in range(len(headers))))
    return "\n".join(lines) + "\n"


def _emit(out_dir, stem, json_records, headers, table_rows):
    """Write stem.jsonl and stem.txt under out_dir, return the table."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    payload = "".join(json.dumps(r, sort_keys=True) + "\n" for r in json_records)
    _write_text(out / f"{stem}.jsonl", payload)
    table = _format_table(headers, table_rows)
    _write_text(out / f"{stem}.txt", table)
    return table


def _resolve_seed(seed):
    if seed is not None:
        return int(seed)
    chosen = int.from_bytes(os.urandom(4), "little")
    print(f"seed: {chosen}")
    return chosen


def _parse_groups(value):
    if value is None:
        return None
    groups = tuple(g.strip() for g in value.split(",") if g.strip())
    bad = [g for g in groups if g not in GROUPS]
    if bad:
        raise SystemExit(
            f"unknown feature groups {bad}; known: {', '.join(GROUPS)}"
        )
    return groups


def cmd_train(args):
    seed = _resolve_seed(args.seed)
    lexicon = load_lexicon()
    docs, labels, borders = corpus_io.load_training_corpus(
        args.corpus, border_format=args.border_format
    )
    groups = _parse_groups(args.groups) or DEFAULT_ACTIVE_GROUPS
    attach = _parse_groups(args.attach_groups) or ()
    groups = groups + tuple(g for g in attach if g not in groups)
    if all(b is None for b in borders):
        borders = None
    config = StackConfig(
        active_groups=groups,
        transductive_idf=args.transductive_idf,
        fragment_augmentation=args.fragment_augmentation,
        min_df=args.min_df,
    )
    extra = None
    if args.transductive_idf and args.idf_corpus:
        extra = [d.text for d in corpus_io.load_documents(args.idf_corpus)]
    model = train_stack(
        docs, labels, lexicon, seed=seed, config=config,
        borders=borders, extra_texts_for_idf=extra,
    )
    save_model(model, args.model)

    records, rows = [], []
    for group in model.config.active_groups:
        accs = model.holdout_accuracy[group]
        weights = model.weights[group]
        records.append(
            {
                "group": group,
                "holdout_accuracy": [float(a) for a in accs],
                "weights": [float(w) for w in weights],
            }
        )
        rows.append(
            (
                group,
                " ".join(f"{a:.3f}" for a in accs),
                " ".join(f"{w:.3f}" for w in weights),
            )
        )
    table = _emit(
        args.out_dir, "training",
        records, ("group", "holdout_accuracy", "weights"), rows,
    )
    print(table, end="")
    print(f"model written to {args.model}")
    return 0


def _predict_chunk(model, docs):
    return list(predict_change(model, docs))


def _locate_chunk(model, docs, config):
    return [locate_breaches(model, doc, config) for doc in docs]


def _chunked(items, jobs):
    n = max(1, (len(items) + jobs - 1) // jobs)
    return [items[i:i + n] for i in range(0, len(items), n)]


def cmd_predict(args):
    model = load_model(args.model)
    docs = corpus_io.load_documents(args.corpus)
    if args.jobs > 1 and len(docs) > 1:
        chunks = _chunked(docs, args.jobs)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            parts = pool.map(_predict_chunk, [model] * len(chunks), chunks)
        probs = [p for part in parts for p in part]
    else:
        probs = _predict_chunk(model, docs)
    records = [
        {
            "id": doc.doc_id,
            "p_changed": float(p),
            "changed": bool(p >= PREDICT_THRESHOLD),
        }
        for doc, p in zip(docs, probs)
    ]
    table = _emit(
        args.out_dir, "predictions",
        records, ("id", "p_changed", "changed"),
        [(r["id"], f"{r['p_changed']:.4f}", r["changed"]) for r in records],
    )
    print(table, end="")
    return 0


def cmd_locate(args):
    model = load_model(args.model)
    docs = corpus_io.load_documents(args.corpus)
    config = LocatorConfig(
        threshold=args.threshold,
        min_sentences=args.min_sentences,
        paper_exact=args.paper_exact,
    )
    if args.jobs > 1 and len(docs) > 1:
        chunks = _chunked(docs, args.jobs)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            parts = pool.map(
                _locate_chunk, [model] * len(chunks), chunks,
                [config] * len(chunks),
            )
        borders = [b for part in parts for b in part]
    else:
        borders = _locate_chunk(model, docs, config)

    corpus_io.write_corpus(
        [
            (doc, {"changes": bool(b), "borders": b})
            for doc, b in zip(docs, borders)
        ],
        args.out_dir,
        border_format=args.border_format,
    )
    records = [
        {"id": doc.doc_id, "n_sentences": doc.n_sentences, "borders": b}
        for doc, b in zip(docs, borders)
    ]
    table = _emit(
        args.out_dir, "borders",
        records, ("id", "n_sentences", "borders"),
        [
            (r["id"], r["n_sentences"], " ".join(map(str, r["borders"])) or "-")
            for r in records
        ],
    )
    print(table, end="")
    return 0


def cmd_evaluate(args):
    if bool(args.model) == bool(args.hypothesis):
        raise SystemExit("need exactly one of --model or --hypothesis")
    seeds = tuple(int(s) for s in args.baseline_seeds.split(","))
    ref_pairs = corpus_io.load_breach_corpus(
        args.corpus, border_format=args.border_format
    )
    refs = [Segmentation(doc.n_sentences, tuple(b)) for doc, b in ref_pairs]

    if args.model:
        model = load_model(args.model)
        config = LocatorConfig(
            threshold=args.threshold,
            min_sentences=args.min_sentences,
            paper_exact=args.paper_exact,
        )
        hyp_borders = [locate_breaches(model, doc, config) for doc, _ in ref_pairs]
        row_name = "model"
    else:
        hyp_pairs = corpus_io.load_breach_corpus(
            args.hypothesis, border_format=args.border_format
        )
        by_id = {doc.doc_id: b for doc, b in hyp_pairs}
        missing = [doc.doc_id for doc, _ in ref_pairs if doc.doc_id not in by_id]
        if missing:
            raise SystemExit(f"hypothesis corpus lacks documents: {missing}")
        hyp_borders = [by_id[doc.doc_id] for doc, _ in ref_pairs]
        row_name = "hypothesis"

    hyps = []
    for (doc, _), b in zip(ref_pairs, hyp_borders):
        hyps.append(Segmentation(doc.n_sentences, tuple(b)))

    rows = []
    if args.with_baselines:
        rows.extend(baseline_rows(refs, seeds=seeds))
    rows.append(evaluate_segmentations(row_name, refs, hyps))
    report = EvalReport(rows=tuple(rows))

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    _write_text(out / "evaluation.jsonl", report.to_json_lines())
    _write_text(out / "evaluation.txt", report.to_table())
    print(report.to_table(), end="")
    return 0


def cmd_synthesize(args):
    seed = _resolve_seed(args.seed)
    source_files = sorted(Path(args.sources).glob("*.txt"))
    if len(source_files) < 2:
        raise SystemExit(f"need at least 2 source .txt files in {args.sources}")
    pools = corpus_io.build_sentence_pools(
        [p.read_text(encoding="utf-8") for p in source_files]
    )
    cursors = [0] * len(pools)
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0]))

    n_changed = round(args.n_docs * args.change_fraction)
    flags = np.array([1] * n_changed + [0] * (args.n_docs - n_changed))
    flags = flags[rng.permutation(args.n_docs)]

    entries, records, rows = [], [], []
    for i, flag in enumerate(flags, 1):
        n_changes = int(rng.integers(args.min_changes, args.max_changes + 1)) if flag else 0
        doc_seed = np.random.SeedSequence([seed, 1, i])
        try:
            doc, borders, changed = corpus_io.synthesize_document(
                pools, n_changes, args.min_segment_sentences, doc_seed,
                max_segment_sentences=args.max_segment_sentences,
                doc_id=f"problem-{i}", cursors=cursors,
            )
        except ValueError as exc:
            raise SystemExit(f"synthesis stopped at document {i}: {exc}")
        entries.append((doc, {"changes": changed, "borders": borders}))
        records.append(
            {"id": doc.doc_id, "changes": changed, "borders": borders,
             "n_sentences": doc.n_sentences}
        )
        rows.append(
            (doc.doc_id, changed, doc.n_sentences,
             " ".join(map(str, borders)) or "-")
        )
    corpus_io.write_corpus(entries, args.out_dir, border_format=args.border_format)
    table = _emit(
        args.out_dir, "synthesis",
        records, ("id", "changes", "n_sentences", "borders"), rows,
    )
    print(table, end="")
    return 0


def cmd_baseline(args):
    seed = _resolve_seed(args.seed)
    docs = corpus_io.load_documents(args.corpus)
    fn = baseline_rnd if args.kind == "rnd" else baseline_eq
    tag = 0 if args.kind == "rnd" else 1
    rng = np.random.default_rng(np.random.SeedSequence([tag, seed]))
    segs = [fn(doc.n_sentences, rng) for doc in docs]
    corpus_io.write_corpus(
        [
            (doc, {"changes": bool(seg.borders), "borders": list(seg.borders)})
            for doc, seg in zip(docs, segs)
        ],
        args.out_dir,
        border_format=args.border_format,
    )
    name = BASELINE_RND if args.kind == "rnd" else BASELINE_EQ
    records = [
        {"id": doc.doc_id, "baseline": name, "borders": list(seg.borders)}
        for doc, seg in zip(docs, segs)
    ]
    table = _emit(
        args.out_dir, "borders",
        records, ("id", "baseline", "borders"),
        [
            (r["id"], name, " ".join(map(str, r["borders"])) or "-")
            for r in records
        ],
    )
    print(table, end="")
    return 0


def _add_common(sp):
    sp.add_argument("--config", metavar="FILE",
                    help="key=value option file; flags override it")
    sp.add_argument("--seed", type=int, default=None,
                    help="RNG seed (default: random, printed)")
    sp.add_argument("--jobs", type=int, default=1,
                    help="worker processes for per-document work (default 1)")


def _add_border_format(sp):
    sp.add_argument("--border-format", choices=("char", "sentence"), default="char",
                    help="truth border encoding: character offsets or "
                         "sentence indices (default char)")


def _add_locator_flags(sp):
    sp.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD,
                    help=f"change-probability cutoff (default {DEFAULT_THRESHOLD})")
    sp.add_argument("--min-sentences", type=int, default=DEFAULT_MIN_SENTENCES,
                    help="smallest fragment that still gets split "
                         f"(default {DEFAULT_MIN_SENTENCES})")
    sp.add_argument("--paper-exact", action="store_true",
                    help="always emit the middle of a sub-minimum fragment "
                         "reached through a split instead of testing it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stylebreach",
        description="Style change detection and style breach localization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers = []

    p = sub.add_parser("train", help="train a stacked change detector")
    p.add_argument("--corpus", required=True, help="problem/truth directory")
    p.add_argument("--model", required=True, help="output model file")
    p.add_argument("--out-dir", default=".", help="summary output directory")
    p.add_argument("--groups", default=None,
                   help="comma-separated feature groups "
                        f"(default {','.join(DEFAULT_ACTIVE_GROUPS)})")
    p.add_argument("--attach-groups", default=None,
                   help="extra groups appended to the active set "
                        "(e.g. statement_boundary,named_entity_spelling)")
    p.add_argument("--transductive-idf", action="store_true",
                   help="fold --idf-corpus texts into idf statistics")
    p.add_argument("--idf-corpus", default=None,
                   help="unlabeled documents for --transductive-idf")
    p.add_argument("--fragment-augmentation", action="store_true",
                   help="also train on random half and quarter fragments")
    p.add_argument("--min-df", type=int, default=DEFAULT_MIN_DF,
                   help=f"minimum document frequency for TF.IDF vocabulary "
                        f"(default {DEFAULT_MIN_DF})")
    _add_border_format(p)
    _add_common(p)
    p.set_defaults(func=cmd_train)
    subparsers.append(p)

    p = sub.add_parser("predict", help="per-document change probabilities")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out-dir", default=".",
                   help="where predictions.jsonl/.txt go (default .)")
    _add_common(p)
    p.set_defaults(func=cmd_predict)
    subparsers.append(p)

    p = sub.add_parser("locate", help="style breach borders per document")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out-dir", required=True,
                   help="gets problem/truth files plus borders.jsonl/.txt")
    _add_locator_flags(p)
    _add_border_format(p)
    _add_common(p)
    p.set_defaults(func=cmd_locate)
    subparsers.append(p)

    p = sub.add_parser("evaluate", help="segmentation metrics against truth")
    p.add_argument("--corpus", required=True, help="reference problem/truth directory")
    p.add_argument("--model", default=None, help="locate with this model")
    p.add_argument("--hypothesis", default=None,
                   help="pre-computed problem/truth directory to score instead")
    p.add_argument("--with-baselines", action="store_true",
                   help="add BASELINE-rnd and BASELINE-eq rows")
    p.add_argument("--baseline-seeds", default="0,1,2,3,4",
                   help="comma-separated seeds averaged for baseline rows "
                        "(default 0,1,2,3,4)")
    p.add_argument("--out-dir", default=".",
                   help="where evaluation.jsonl/.txt go (default .)")
    _add_locator_flags(p)
    _add_border_format(p)
    _add_common(p)
    p.set_defaults(func=cmd_evaluate)
    subparsers.append(p)

    p = sub.add_parser("synthesize", help="build a corpus from source texts")
    p.add_argument("--sources", required=True,
                   help="directory of one .txt per source author")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--n-docs", type=int, default=100)
    p.add_argument("--change-fraction", type=float, default=0.5,
                   help="share of documents containing a change (default 0.5)")
    p.add_argument("--min-changes", type=int, default=1,
                   help="fewest borders in a changed document (default 1)")
    p.add_argument("--max-changes", type=int, default=3,
                   help="most borders in a changed document (default 3)")
    p.add_argument("--min-segment-sentences", type=int, default=5,
                   help="shortest single-author block (default 5)")
    p.add_argument("--max-segment-sentences", type=int, default=None,
                   help="longest single-author block (default: same as min)")
    _add_border_format(p)
    _add_common(p)
    p.set_defaults(func=cmd_synthesize)
    subparsers.append(p)

    p = sub.add_parser("baseline", help="baseline border predictions")
    p.add_argument("--corpus", required=True)
    p.add_argument("--kind", choices=("rnd", "eq"), required=True,
                   help="rnd: random positions; eq: evenly spaced")
    p.add_argument("--out-dir", required=True)
    _add_border_format(p)
    _add_common(p)
    p.set_defaults(func=cmd_baseline)
    subparsers.append(p)

    return parser, subparsers


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subparsers = build_parser()

    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        values = _parse_config_file(known.config)
        dests = set()
        for sp in subparsers:
            dests.update(a.dest for a in sp._actions)
        unknown = sorted(set(values) - dests)
        if unknown:
            raise SystemExit(f"unknown config keys: {', '.join(unknown)}")
        for sp in subparsers:
            sp_dests = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in values.items() if k in sp_dests})

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
