#!/usr/bin/env python3
"""Export the pipeline contract consumed by the web client.

The web client re-implements tokenization, stopword filtering, stemming,
and query scoring so it can run entirely offline against bundle.json.
Drift between the two implementations would silently corrupt client-side
scores, so this script freezes the pipeline's behavior into generated
files the client builds and tests against:

* pipeline-contract.json - test vectors: stem table for every word the
  synthetic corpus can produce plus a bank of classic suffixed forms,
  tokenization examples covering the edge rules, and a real miniature
  bundle with expected query scores for replay.
* normalizer-data.ts - the stopword list and version tag as a TypeScript
  module, so the runtime needs no JSON loader for them.

    python3 scripts/export_contract_fixture.py \
        --out-dir frontend/src/generated
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from scholar_atlas import synth
from scholar_atlas.bundle import (
    all_variant_configs,
    build_bundle,
    bundle_to_dict,
    variant_query,
)
from scholar_atlas.query import top_k
from scholar_atlas.stemming import stem
from scholar_atlas.stopwords import STOPWORD_LIST_VERSION, STOPWORDS
from scholar_atlas.textproc import normalize, tokenize

# classic suffix families that exercise every stemmer rule bucket
EXTRA_WORDS = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing
filing happy sky relational conditional rational valenci hesitanci
digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness
callousness formaliti sensitiviti sensibiliti archaeologi triplicate
formative formalize electriciti electrical hopeful goodness revival
allowance inference airliner gyroscopic adjustable defensible irritant
replacement adjustment dependent adoption homologou communism activate
angulariti homologous effective bowdlerize probate rate cease controll
roll science sciences learning learner graphs graphing algorithms
clustering clusters embedding embeddings visualization visualizations
researches researchers queried queries querying possibli sameness
networking networks optimization optimizing optimized
""".split()

TOKENIZE_EXAMPLES = [
    "Deep Learning for Graphs!",
    "the of and or",
    "数据 Science données",
    "graph graphs graphing",
    "sameness",
    "ies",
    "a I xy",
    "Self-supervised learning: a survey (2020)",
    "was isn't won't doesn't",
    "Čech complexes für topologie",
]

QUERY_TEXTS = [
    "algorithms",
    "graph learning",
    "machine learning optimization",
    "robot motion planning",
    "the of and or",
    "zzyzzx blorptex",
    "données algorithms",
]

FIXTURE_SEED = 2024


def word_pool() -> list[str]:
    pool = set(EXTRA_WORDS)
    for area in synth.AREAS.values():
        pool.update(area["words"].split())
        for phrase in area["keywords"]:
            pool.update(phrase.replace("-", " ").split())
    pool.update(synth._FILLER)
    pool.update(synth._GLUE)
    return sorted(pool)


def scoring_block() -> dict:
    """A real bundle plus expected scores for every (variant, query)."""
    profiles = synth.make_profile_set(
        9, pubs_per_researcher=5, seed=FIXTURE_SEED, n_empty=1,
        source_label="contract-fixture")
    bundle = build_bundle(profiles, seed=FIXTURE_SEED)
    queries = []
    for cfg in all_variant_configs():
        for text in QUERY_TEXTS:
            result = variant_query(bundle, cfg.variant_id, text)
            queries.append({
                "variant_id": cfg.variant_id,
                "text": text,
                "raw_scores": [float(s) for s in result.raw_scores],
                "display_scores": [float(s)
                                   for s in result.display_scores],
                "ranking": [rid for rid, _ in top_k(
                    result, len(result.researcher_ids))],
                "matched": list(result.matched_terms),
                "unmatched": list(result.unmatched_terms),
            })
    return {"bundle": bundle_to_dict(bundle), "queries": queries}


def normalizer_module(stopwords: list[str]) -> str:
    words = ",\n".join(f'  "{w}"' for w in stopwords)
    return (
        "// GENERATED by scripts/export_contract_fixture.py - do not edit.\n"
        "// The stopword list must byte-match the pipeline's embedded "
        "list;\n// regenerate instead of patching.\n\n"
        f'export const NORMALIZER_VERSION = "{STOPWORD_LIST_VERSION}";\n\n'
        "export const STOPWORDS: ReadonlySet<string> = new Set([\n"
        f"{words},\n]);\n"
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="frontend/src/generated")
    args = parser.parse_args()

    words = word_pool()
    stopwords = sorted(STOPWORDS)
    fixture = {
        "normalizer_version": STOPWORD_LIST_VERSION,
        "stopwords": stopwords,
        "stem_vectors": {word: stem(word) for word in words},
        "tokenize_examples": [
            {"text": text, "stems": dict(normalize(text).counts),
             "order": tokenize(text)}
            for text in TOKENIZE_EXAMPLES
        ],
        "scoring": scoring_block(),
    }

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    contract_path = out_dir / "pipeline-contract.json"
    contract_path.write_text(
        json.dumps(fixture, ensure_ascii=False, indent=1, sort_keys=True)
        + "\n",
        encoding="utf-8",
    )
    module_path = out_dir / "normalizer-data.ts"
    module_path.write_text(normalizer_module(stopwords), encoding="utf-8")

    print(f"wrote {contract_path}: {len(words)} stem vectors, "
          f"{len(stopwords)} stopwords, "
          f"{len(TOKENIZE_EXAMPLES)} tokenize examples, "
          f"{len(fixture['scoring']['queries'])} query vectors")
    print(f"wrote {module_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
