"""Assemble, serialize, load and validate the static map bundle.

The bundle is the only interface between the pipeline and the browser UI:
one JSON document holding researcher metadata, the merged vocabulary and
six precomputed variants (keywords emphasis x publication set), each with
its 2D layout, clusterings for every usable K, and a query index. The
serialized form is canonical: UTF-8, sorted keys, compact separators,
shortest-round-trip float formatting, no timestamps. Building twice from
the same inputs and seed yields identical bytes, which CI checks by hash.

docs/bundle-schema.md documents the schema field by field with a worked
miniature example; ``load_bundle`` here enforces every structural rule it
states.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import embed, gmm, pca, query, textproc
from .errors import (
    InvariantViolation,
    IoError,
    MalformedFile,
    SchemaVersionMismatch,
)
from .profiles import ProfileSet, PublicationMode, PublicationSetMode, select_publications
from .stopwords import STOPWORD_LIST_VERSION
from .textproc import EmphasisLevel

SCHEMA_VERSION = 1
K_MIN = 2
K_MAX = 10
PUBLICATION_LIMIT = 50

BUNDLE_CONSTANTS = {
    "emphasis_weights": {level.value: level.weight for level in EmphasisLevel},
    "publication_limit": PUBLICATION_LIMIT,
    "k_min": K_MIN,
    "k_max": K_MAX,
    "ellipse_radius": gmm.DEFAULT_ELLIPSE_RADIUS,
    "normalizer_version": STOPWORD_LIST_VERSION,
}


@dataclass(frozen=True)
class VariantConfig:
    """One Control Panel state the pipeline precomputes."""

    emphasis: EmphasisLevel
    pubset: PublicationSetMode

    @property
    def variant_id(self) -> str:
        return f"{self.emphasis.value}-{self.pubset.mode.value}"


def all_variant_configs() -> tuple[VariantConfig, ...]:
    """The full cross product, in canonical build order."""
    return tuple(
        VariantConfig(emphasis=emph, pubset=PublicationSetMode(mode=mode, limit=PUBLICATION_LIMIT))
        for emph in (EmphasisLevel.NONE, EmphasisLevel.NORMAL, EmphasisLevel.HIGH)
        for mode in (PublicationMode.MOST_CITED, PublicationMode.MOST_RECENT)
    )


@dataclass
class AtlasBundle:
    """In-memory form of the serialized bundle: plain JSON-compatible data,
    so structural equality is exactly serialized equality."""

    schema_version: int
    source_label: str
    constants: dict
    researchers: list[dict]
    vocabulary: list[str]
    variants: dict[str, dict]


# -- building -----------------------------------------------------------------


def _named(exc: Exception, variant_id: str) -> Exception:
    return type(exc)(f"variant '{variant_id}': {exc}")


def build_bundle(profiles: ProfileSet, seed: int, verbose: bool = False) -> AtlasBundle:
    """Run the full pipeline for all six variants.

    Deterministic for fixed (profiles, seed): the only randomness is the
    clustering initialization, which draws from a seeded SplitMix64 stream.
    EmptyCorpus and DegenerateInput from any stage are re-raised with the
    offending variant named.
    """
    configs = all_variant_configs()
    researchers = profiles.researchers
    n = len(researchers)
    ids = list(profiles.ids())

    # documents decompose into per-pubset publication text and keywords;
    # tokenize each once, merge per variant
    pub_bags: dict[PublicationMode, list[textproc.TokenBag]] = {}
    for mode in (PublicationMode.MOST_CITED, PublicationMode.MOST_RECENT):
        pubset = PublicationSetMode(mode=mode, limit=PUBLICATION_LIMIT)
        pub_bags[mode] = [
            textproc.publication_bag(select_publications(r, pubset)) for r in researchers
        ]
    kw_bags = [textproc.keyword_bag(r) for r in researchers]

    variant_payloads: dict[str, dict] = {}
    variant_terms: dict[str, list[str]] = {}
    insufficient_by_variant: dict[str, list[int]] = {}

    for cfg in configs:
        vid = cfg.variant_id
        weight = cfg.emphasis.weight
        bags = [
            pub_bags[cfg.pubset.mode][i].merged(kw_bags[i].scaled(weight)) for i in range(n)
        ]
        try:
            vocab = embed.build_vocabulary(bags)
            model = embed.compute_tfidf(bags, vocab)
            pca_model, layout = pca.fit_pca(model)

            usable = [i for i in range(n) if i not in set(layout.insufficient)]
            usable_points = layout.coords[usable]
            k_top = min(K_MAX, len(usable))
            clusterings = []
            for k in range(K_MIN, k_top + 1):
                fit = gmm.fit_gmm(usable_points, k, seed, verbose=verbose)
                labels = np.full(n, -1, dtype=int)
                labels[usable] = fit.labels
                clusterings.append(
                    {
                        "k": k,
                        "labels": [int(v) for v in labels],
                        "log_likelihood": float(fit.log_likelihood),
                        "n_iterations": int(fit.n_iterations),
                        "converged": bool(fit.converged),
                        "components": [
                            {
                                "weight": float(c.weight),
                                "mean": [float(c.mean[0]), float(c.mean[1])],
                                "covariance": [
                                    [float(c.covariance[0, 0]), float(c.covariance[0, 1])],
                                    [float(c.covariance[1, 0]), float(c.covariance[1, 1])],
                                ],
                            }
                            for c in fit.components
                        ],
                        "ellipses": [
                            _ellipse_dict(gmm.ellipse_params(c)) for c in fit.components
                        ],
                    }
                )
        except Exception as exc:
            raise _named(exc, vid) from exc

        index = query.build_query_index(model, researcher_ids=ids)
        variant_payloads[vid] = {
            "emphasis": cfg.emphasis.value,
            "pubset": cfg.pubset.mode.value,
            "coords": [[float(x), float(y)] for x, y in layout.coords],
            "explained_variance": [float(v) for v in pca_model.explained_variance_ratio],
            "insufficient": sorted(int(i) for i in layout.insufficient),
            "clusterings": clusterings,
            "query_index": _serialize_index(index),
        }
        variant_terms[vid] = list(vocab.terms)
        insufficient_by_variant[vid] = list(layout.insufficient)

    merged_vocabulary = sorted(set().union(*[set(t) for t in variant_terms.values()]))
    union_index = {t: i for i, t in enumerate(merged_vocabulary)}
    for vid, terms in variant_terms.items():
        variant_payloads[vid]["query_index"]["term_ids"] = [union_index[t] for t in terms]

    researcher_records = []
    for i, r in enumerate(researchers):
        flagged = all(i in insufficient_by_variant[cfg.variant_id] for cfg in configs)
        researcher_records.append(
            {
                "id": r.id,
                "name": r.name,
                "affiliation": r.affiliation,
                "position": r.position,
                "total_citations": int(r.total_citations),
                "scholar_url": r.scholar_url,
                "keywords": list(r.keywords),
                "insufficient_data": flagged,
            }
        )

    return AtlasBundle(
        schema_version=SCHEMA_VERSION,
        source_label=profiles.source_label,
        constants=json.loads(canonical_json(BUNDLE_CONSTANTS)),
        researchers=researcher_records,
        vocabulary=merged_vocabulary,
        variants=variant_payloads,
    )


def _ellipse_dict(ellipse: gmm.Ellipse) -> dict:
    return {
        "center": [float(ellipse.center[0]), float(ellipse.center[1])],
        "semi_axes": [float(ellipse.semi_axes[0]), float(ellipse.semi_axes[1])],
        "angle": float(ellipse.angle),
    }


def _serialize_index(index: query.QueryIndex) -> dict:
    """Columns as parallel arrays of local term positions and weights.
    Local positions index into the variant's term_ids array."""
    matrix = index.columns.tocsc()
    matrix.sort_indices()
    columns = []
    for i in range(len(index.researcher_ids)):
        start, end = matrix.indptr[i], matrix.indptr[i + 1]
        columns.append(
            {
                "ids": [int(r) for r in matrix.indices[start:end]],
                "weights": [float(v) for v in matrix.data[start:end]],
            }
        )
    return {
        "term_ids": [],  # filled in after the merged vocabulary exists
        "idf": [float(v) for v in index.idf],
        "columns": columns,
    }


# -- serialization ------------------------------------------------------------


def canonical_json(data) -> str:
    """The one true serialization: sorted keys, compact, UTF-8 text,
    shortest-round-trip floats, NaN/Infinity rejected."""
    return json.dumps(
        data, ensure_ascii=False, allow_nan=False, sort_keys=True, separators=(",", ":")
    )


def bundle_to_dict(bundle: AtlasBundle) -> dict:
    return {
        "schema_version": bundle.schema_version,
        "source_label": bundle.source_label,
        "constants": bundle.constants,
        "researchers": bundle.researchers,
        "vocabulary": bundle.vocabulary,
        "variants": bundle.variants,
    }


def save_bundle(bundle: AtlasBundle, path) -> None:
    """Write the canonical serialization. Two saves of one bundle are
    byte-identical; there is nothing time- or host-dependent to leak in."""
    payload = canonical_json(bundle_to_dict(bundle)).encode("utf-8")
    try:
        Path(path).write_bytes(payload)
    except OSError as exc:
        raise IoError(f"cannot write bundle to {path}: {exc}") from exc


def _reject_constant(token: str):
    raise ValueError(f"non-finite number {token!r} is not valid bundle JSON")


def load_bundle(path) -> AtlasBundle:
    """Read, parse and fully validate a serialized bundle."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedFile(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise MalformedFile(f"{path} is not valid UTF-8: {exc}") from exc
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except ValueError as exc:  # JSONDecodeError is a ValueError
        raise MalformedFile(f"{path} is not valid JSON: {exc}") from exc
    return bundle_from_dict(data)


def bundle_from_dict(data) -> AtlasBundle:
    if not isinstance(data, dict):
        raise InvariantViolation(f"bundle root must be an object, got {type(data).__name__}")
    version = data.get("schema_version")
    if not isinstance(version, int) or isinstance(version, bool):
        raise InvariantViolation("schema_version missing or not an integer")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"bundle schema_version {version} is not supported (expected {SCHEMA_VERSION})"
        )
    bundle = AtlasBundle(
        schema_version=version,
        source_label=_check_str(data, "source_label"),
        constants=_check_type(data, "constants", dict),
        researchers=_check_type(data, "researchers", list),
        vocabulary=_check_type(data, "vocabulary", list),
        variants=_check_type(data, "variants", dict),
    )
    validate_bundle(bundle)
    return bundle


def _check_type(data: dict, key: str, kind):
    value = data.get(key)
    if not isinstance(value, kind):
        raise InvariantViolation(f"'{key}' missing or not {kind.__name__}")
    return value


def _check_str(data: dict, key: str) -> str:
    return _check_type(data, key, str)


# -- validation ---------------------------------------------------------------

_TOL = 1e-9


def _fail(where: str, message: str):
    raise InvariantViolation(f"{where}: {message}")


def _is_num(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_bundle(bundle: AtlasBundle) -> None:
    """Enforce every structural invariant of the schema. Raises
    InvariantViolation naming the offending variant and field."""
    n = len(bundle.researchers)
    if n < 2:
        _fail("researchers", f"need at least 2 records, got {n}")
    for i, rec in enumerate(bundle.researchers):
        where = f"researchers[{i}]"
        if not isinstance(rec, dict):
            _fail(where, "not an object")
        for key in ("id", "name", "affiliation", "position", "scholar_url"):
            if not isinstance(rec.get(key), str):
                _fail(where, f"'{key}' missing or not a string")
        if not _is_int(rec.get("total_citations")) or rec["total_citations"] < 0:
            _fail(where, "'total_citations' missing or negative")
        if not isinstance(rec.get("keywords"), list) or not all(
            isinstance(k, str) for k in rec["keywords"]
        ):
            _fail(where, "'keywords' missing or not a string array")
        if not isinstance(rec.get("insufficient_data"), bool):
            _fail(where, "'insufficient_data' missing or not a boolean")
    ids = [rec["id"] for rec in bundle.researchers]
    if len(set(ids)) != n:
        _fail("researchers", "duplicate researcher ids")
    flagged = {i for i, rec in enumerate(bundle.researchers) if rec["insufficient_data"]}

    vocab = bundle.vocabulary
    if not all(isinstance(t, str) for t in vocab):
        _fail("vocabulary", "terms must be strings")
    if sorted(set(vocab)) != vocab:
        _fail("vocabulary", "terms must be sorted and unique")

    expected_ids = {cfg.variant_id for cfg in all_variant_configs()}
    if set(bundle.variants) != expected_ids:
        _fail("variants", f"expected exactly {sorted(expected_ids)}, got {sorted(bundle.variants)}")

    for key in ("emphasis_weights", "publication_limit", "k_min", "k_max", "ellipse_radius"):
        if key not in bundle.constants:
            _fail("constants", f"missing '{key}'")
    if bundle.constants != BUNDLE_CONSTANTS:
        _fail("constants", f"schema version {SCHEMA_VERSION} pins constants to {BUNDLE_CONSTANTS}")

    for vid in sorted(bundle.variants):
        _validate_variant(vid, bundle.variants[vid], n, len(vocab), flagged)


def _validate_variant(vid: str, variant, n: int, vocab_size: int, flagged: set):
    where = f"variants['{vid}']"
    if not isinstance(variant, dict):
        _fail(where, "not an object")
    emphasis, _, pubset = vid.partition("-")
    if variant.get("emphasis") != emphasis or variant.get("pubset") != pubset:
        _fail(where, f"emphasis/pubset fields do not match the variant id '{vid}'")

    coords = variant.get("coords")
    if not isinstance(coords, list) or len(coords) != n:
        _fail(where, f"coords must be an array of {n} [x, y] pairs")
    for i, pair in enumerate(coords):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(_is_num(v) for v in pair)
        ):
            _fail(where, f"coords[{i}] is not a finite [x, y] pair")

    ev = variant.get("explained_variance")
    if not isinstance(ev, list) or len(ev) != 2 or not all(_is_num(v) for v in ev):
        _fail(where, "explained_variance must be two finite numbers")
    if not (-_TOL <= ev[0] <= 1 + _TOL and -_TOL <= ev[1] <= 1 + _TOL):
        _fail(where, f"explained_variance {ev} outside [0, 1]")
    if ev[0] + ev[1] > 1 + _TOL:
        _fail(where, f"explained_variance {ev} sums past 1")
    if ev[1] > ev[0] + _TOL:
        _fail(where, f"explained_variance {ev} not sorted descending")

    insufficient = variant.get("insufficient")
    if not isinstance(insufficient, list) or not all(_is_int(i) for i in insufficient):
        _fail(where, "insufficient must be an integer array")
    if sorted(set(insufficient)) != insufficient:
        _fail(where, "insufficient must be sorted and unique")
    if insufficient and not (0 <= insufficient[0] and insufficient[-1] < n):
        _fail(where, f"insufficient indices outside [0, {n})")
    insufficient_set = set(insufficient)
    missing_flags = flagged - insufficient_set
    if missing_flags:
        _fail(where, f"researchers {sorted(missing_flags)} are flagged insufficient_data "
                     f"but missing from this variant's insufficient list")

    usable = [i for i in range(n) if i not in insufficient_set]
    if len(usable) < 2:
        _fail(where, f"fewer than 2 usable researchers ({len(usable)})")
    if insufficient:
        cx = sum(coords[i][0] for i in usable) / len(usable)
        cy = sum(coords[i][1] for i in usable) / len(usable)
        for i in insufficient:
            if abs(coords[i][0] - cx) > _TOL or abs(coords[i][1] - cy) > _TOL:
                _fail(where, f"coords[{i}] must sit at the usable centroid [{cx}, {cy}]")

    expected_ks = list(range(K_MIN, min(K_MAX, len(usable)) + 1))
    clusterings = variant.get("clusterings")
    if not isinstance(clusterings, list):
        _fail(where, "clusterings must be an array")
    got_ks = [c.get("k") if isinstance(c, dict) else None for c in clusterings]
    if got_ks != expected_ks:
        _fail(where, f"clustering K list {got_ks} differs from required {expected_ks}")
    for clustering in clusterings:
        _validate_clustering(where, clustering, n, insufficient_set)

    _validate_query_index(where, variant.get("query_index"), n, vocab_size, insufficient_set)


def _validate_clustering(where: str, clustering: dict, n: int, insufficient: set):
    k = clustering["k"]
    where = f"{where}.clusterings[k={k}]"
    labels = clustering.get("labels")
    if not isinstance(labels, list) or len(labels) != n or not all(_is_int(v) for v in labels):
        _fail(where, f"labels must be an integer array of length {n}")
    for i, label in enumerate(labels):
        if i in insufficient:
            if label != -1:
                _fail(where, f"labels[{i}] must be -1 for an insufficient researcher")
        elif not 0 <= label < k:
            _fail(where, f"labels[{i}]={label} outside [0, {k})")

    if not _is_num(clustering.get("log_likelihood")):
        _fail(where, "log_likelihood missing or not finite")
    if not _is_int(clustering.get("n_iterations")) or clustering["n_iterations"] < 1:
        _fail(where, "n_iterations missing or < 1")
    if not isinstance(clustering.get("converged"), bool):
        _fail(where, "converged missing or not a boolean")

    components = clustering.get("components")
    if not isinstance(components, list) or len(components) != k:
        _fail(where, f"components must be an array of {k} records")
    weight_sum = 0.0
    parsed = []
    for j, comp in enumerate(components):
        cw = f"{where}.components[{j}]"
        if not isinstance(comp, dict):
            _fail(cw, "not an object")
        weight = comp.get("weight")
        if not _is_num(weight) or weight < -_TOL:
            _fail(cw, f"weight {weight} missing or negative")
        weight_sum += weight
        mean = comp.get("mean")
        if not isinstance(mean, list) or len(mean) != 2 or not all(_is_num(v) for v in mean):
            _fail(cw, "mean must be a finite [x, y] pair")
        cov = comp.get("covariance")
        if (
            not isinstance(cov, list)
            or len(cov) != 2
            or any(not isinstance(row, list) or len(row) != 2 for row in cov)
            or any(not _is_num(v) for row in cov for v in row)
        ):
            _fail(cw, "covariance must be a finite 2x2 matrix")
        if abs(cov[0][1] - cov[1][0]) > _TOL * max(1.0, abs(cov[0][0]), abs(cov[1][1])):
            _fail(cw, "covariance must be symmetric")
        parsed.append(comp)
    if abs(weight_sum - 1.0) > _TOL:
        _fail(where, f"component weights sum to {weight_sum}, expected 1")

    ellipses = clustering.get("ellipses")
    if not isinstance(ellipses, list) or len(ellipses) != k:
        _fail(where, f"ellipses must be an array of {k} records")
    for j, (ellipse, comp) in enumerate(zip(ellipses, parsed)):
        ew = f"{where}.ellipses[{j}]"
        if not isinstance(ellipse, dict):
            _fail(ew, "not an object")
        center = ellipse.get("center")
        axes = ellipse.get("semi_axes")
        angle = ellipse.get("angle")
        if not isinstance(center, list) or len(center) != 2 or not all(_is_num(v) for v in center):
            _fail(ew, "center must be a finite [x, y] pair")
        if not isinstance(axes, list) or len(axes) != 2 or not all(_is_num(v) for v in axes):
            _fail(ew, "semi_axes must be two finite numbers")
        if not (axes[0] >= axes[1] > 0):
            _fail(ew, f"semi_axes {axes} must be positive, major axis first")
        if not _is_num(angle) or not 0 <= angle < math.pi:
            _fail(ew, f"angle {angle} outside [0, pi)")
        try:
            expected = gmm.ellipse_params(
                gmm.GmmComponent(
                    weight=comp["weight"],
                    mean=np.asarray(comp["mean"], dtype=float),
                    covariance=np.asarray(comp["covariance"], dtype=float),
                )
            )
        except Exception as exc:
            _fail(ew, f"covariance does not define an ellipse: {exc}")
        if (
            abs(center[0] - expected.center[0]) > _TOL
            or abs(center[1] - expected.center[1]) > _TOL
            or abs(axes[0] - expected.semi_axes[0]) > _TOL
            or abs(axes[1] - expected.semi_axes[1]) > _TOL
            or abs(angle - expected.angle) > _TOL
        ):
            _fail(ew, "ellipse does not match its component covariance")


def _validate_query_index(where: str, index, n: int, vocab_size: int, insufficient: set):
    where = f"{where}.query_index"
    if not isinstance(index, dict):
        _fail(where, "missing or not an object")
    term_ids = index.get("term_ids")
    if not isinstance(term_ids, list) or not all(_is_int(t) for t in term_ids):
        _fail(where, "term_ids must be an integer array")
    if sorted(set(term_ids)) != term_ids:
        _fail(where, "term_ids must be sorted and unique")
    if term_ids and not (0 <= term_ids[0] and term_ids[-1] < vocab_size):
        _fail(where, f"term_ids outside [0, {vocab_size})")
    idf = index.get("idf")
    if not isinstance(idf, list) or len(idf) != len(term_ids):
        _fail(where, "idf must align with term_ids")
    if not all(_is_num(v) and v > 0 for v in idf):
        _fail(where, "idf values must be finite and positive")
    columns = index.get("columns")
    if not isinstance(columns, list) or len(columns) != n:
        _fail(where, f"columns must be an array of {n} records")
    for i, col in enumerate(columns):
        cw = f"{where}.columns[{i}]"
        if not isinstance(col, dict):
            _fail(cw, "not an object")
        ids = col.get("ids")
        weights = col.get("weights")
        if not isinstance(ids, list) or not all(_is_int(v) for v in ids):
            _fail(cw, "ids must be an integer array")
        if sorted(set(ids)) != ids:
            _fail(cw, "ids must be sorted and unique")
        if ids and not (0 <= ids[0] and ids[-1] < len(term_ids)):
            _fail(cw, f"ids outside [0, {len(term_ids)})")
        if not isinstance(weights, list) or len(weights) != len(ids):
            _fail(cw, "weights must align with ids")
        if not all(_is_num(v) and v != 0 for v in weights):
            _fail(cw, "weights must be finite and nonzero (zeros are pruned)")
        norm = math.sqrt(sum(v * v for v in weights))
        if i in insufficient:
            if ids:
                _fail(cw, "insufficient researchers must have empty columns")
        elif abs(norm - 1.0) > _TOL:
            _fail(cw, f"column norm {norm} differs from 1")


# -- querying a loaded bundle -------------------------------------------------


def variant_query(bundle: AtlasBundle, variant_id: str, text: str) -> query.QueryResult:
    """Score a query against one variant's serialized index.

    Implemented directly over the serialized arrays (not the in-memory
    TfidfModel), so it doubles as the reference consumer of the schema:
    the UI performs exactly these steps. Results agree with the pipeline's
    in-memory scores within 1e-9.
    """
    if variant_id not in bundle.variants:
        raise KeyError(variant_id)
    variant = bundle.variants[variant_id]
    index = variant["query_index"]
    term_ids = index["term_ids"]
    idf = index["idf"]
    local = {bundle.vocabulary[gid]: pos for pos, gid in enumerate(term_ids)}

    counts: dict[str, int] = {}
    for token in textproc.tokenize(text):
        counts[token] = counts.get(token, 0) + 1

    matched: list[str] = []
    unmatched: list[str] = []
    weights: dict[int, float] = {}
    for term in sorted(counts):
        pos = local.get(term)
        if pos is None:
            unmatched.append(term)
        else:
            matched.append(term)
            weights[pos] = counts[term] * idf[pos]

    norm = math.sqrt(sum(v * v for v in weights.values()))
    n = len(bundle.researchers)
    raw = np.zeros(n)
    if norm > 0.0:
        for i, col in enumerate(index["columns"]):
            score = 0.0
            for pos, w in zip(col["ids"], col["weights"]):
                q = weights.get(pos)
                if q is not None:
                    score += w * (q / norm)
            raw[i] = min(max(score, 0.0), 1.0)

    return query.QueryResult(
        researcher_ids=tuple(rec["id"] for rec in bundle.researchers),
        raw_scores=raw,
        display_scores=query.rescale_scores(raw),
        matched_terms=tuple(matched),
        unmatched_terms=tuple(unmatched),
    )
