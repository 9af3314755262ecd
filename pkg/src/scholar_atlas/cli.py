"""Command-line entry points: build bundles, query them, preview the UI.

Exit codes are honest: 0 only when the documented postcondition happened,
1 with a diagnostic on stderr naming the failing stage (and variant, when
one is implicated) otherwise.
"""

from __future__ import annotations

import argparse
import errno
import http.server
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bundle as bundle_mod
from .errors import (
    AtlasError,
    DegenerateInput,
    DuplicateId,
    EmptyCorpus,
    IndexOutOfRange,
    InvalidK,
    IoError,
    MalformedFile,
    NonPositiveDefinite,
    SchemaViolation,
    UnknownTerm,
)
from .profiles import load_profiles
from .query import top_k

DEFAULT_SEED = 42
DEFAULT_PORT = 8080
DEFAULT_TOP = 10

_STAGE_BY_ERROR = {
    MalformedFile: "profiles",
    SchemaViolation: "profiles",
    DuplicateId: "profiles",
    EmptyCorpus: "embed",
    UnknownTerm: "embed",
    IndexOutOfRange: "embed",
    DegenerateInput: "pca",
    InvalidK: "gmm",
    NonPositiveDefinite: "gmm",
    IoError: "save",
}


@dataclass
class CliConfig:
    """Validated knob set shared by the subcommands."""

    input_path: str = ""
    output_path: str = ""
    seed: int = DEFAULT_SEED
    verbose: bool = False
    serve_port: int | None = None

    def __post_init__(self):
        if self.serve_port is not None and not 1 <= self.serve_port <= 65535:
            raise ValueError(f"port {self.serve_port} outside [1, 65535]")


def _stage_of(exc: Exception) -> str:
    for kind, stage in _STAGE_BY_ERROR.items():
        if isinstance(exc, kind):
            return stage
    return "pipeline"


def cmd_build(args) -> int:
    config = CliConfig(
        input_path=args.input, output_path=args.output, seed=args.seed, verbose=args.verbose
    )
    if not config.input_path or not config.output_path:
        print("error: --input and --output must be non-empty", file=sys.stderr)
        return 1
    try:
        profiles = load_profiles(config.input_path)
    except AtlasError as exc:
        print(f"error: build failed at stage 'profiles': {exc}", file=sys.stderr)
        return 1
    try:
        built = bundle_mod.build_bundle(profiles, config.seed, verbose=config.verbose)
        bundle_mod.save_bundle(built, config.output_path)
    except AtlasError as exc:
        print(f"error: build failed at stage '{_stage_of(exc)}': {exc}", file=sys.stderr)
        return 1

    n = len(built.researchers)
    print(f"seed={config.seed} input={config.input_path} output={config.output_path} researchers={n}")
    for cfg in bundle_mod.all_variant_configs():
        variant = built.variants[cfg.variant_id]
        clusterings = variant["clusterings"]
        converged = sum(1 for c in clusterings if c["converged"])
        ks = [c["k"] for c in clusterings]
        ev = variant["explained_variance"]
        usable = n - len(variant["insufficient"])
        print(
            f"variant={cfg.variant_id} researchers={n} usable={usable} "
            f"vocab={len(variant['query_index']['term_ids'])} "
            f"explained_variance={ev[0]:.4f},{ev[1]:.4f} "
            f"k={ks[0]}..{ks[-1]} converged={converged}/{len(clusterings)}"
        )
    return 0


def cmd_query(args) -> int:
    if args.top < 1:
        print(f"error: --top must be >= 1, got {args.top}", file=sys.stderr)
        return 1
    try:
        loaded = bundle_mod.load_bundle(args.bundle)
    except AtlasError as exc:
        print(f"error: cannot load bundle: {exc}", file=sys.stderr)
        return 1
    if args.variant not in loaded.variants:
        available = ", ".join(sorted(loaded.variants))
        print(f"error: unknown variant '{args.variant}' (available: {available})", file=sys.stderr)
        return 1

    result = bundle_mod.variant_query(loaded, args.variant, args.text)
    ranked = top_k(result, args.top)
    names = {rec["id"]: rec["name"] for rec in loaded.researchers}

    id_width = max([len("id")] + [len(rid) for rid, _ in ranked])
    name_width = max([len("name")] + [len(names[rid]) for rid, _ in ranked])
    print(f"{'rank':>4}  {'id':<{id_width}}  {'name':<{name_width}}  {'score':>6}")
    for rank, (rid, score) in enumerate(ranked, start=1):
        print(f"{rank:>4}  {rid:<{id_width}}  {names[rid]:<{name_width}}  {score:6.4f}")

    if result.unmatched_terms:
        print(f"note: unmatched stems: {', '.join(result.unmatched_terms)}")
    if not result.matched_terms or float(result.raw_scores.max(initial=0.0)) == 0.0:
        print("note: no vocabulary match; all scores are zero")
    return 0


class _BundleHandler(http.server.SimpleHTTPRequestHandler):
    """Static file server plus one pinned path: /bundle.json serves the
    exact bundle bytes read at startup, so concurrent clients always see
    identical content."""

    bundle_bytes: bytes = b""

    def do_GET(self):
        if self.path.split("?", 1)[0] == "/bundle.json":
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(self.bundle_bytes)))
            self.end_headers()
            self.wfile.write(self.bundle_bytes)
            return
        super().do_GET()

    def log_message(self, format, *args):  # quiet by default
        pass


def make_server(bundle_path, ui_dir, port: int) -> http.server.ThreadingHTTPServer:
    """Build (but do not start) the preview server; tests bind port 0."""
    payload = Path(bundle_path).read_bytes()

    class Handler(_BundleHandler):
        bundle_bytes = payload

        def __init__(self, *h_args, **h_kwargs):
            super().__init__(*h_args, directory=str(ui_dir), **h_kwargs)

    return http.server.ThreadingHTTPServer(("127.0.0.1", port), Handler)


def cmd_serve(args) -> int:
    try:
        CliConfig(serve_port=args.port)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not Path(args.bundle).is_file():
        print(f"error: bundle {args.bundle} does not exist", file=sys.stderr)
        return 1
    if not Path(args.ui).is_dir():
        print(f"error: ui directory {args.ui} does not exist", file=sys.stderr)
        return 1
    try:
        server = make_server(args.bundle, args.ui, args.port)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            print(f"error: cannot bind port {args.port}: {exc}", file=sys.stderr)
            return 1
        raise
    print(f"serving {args.ui} and bundle {args.bundle} at http://127.0.0.1:{args.port}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scholar-atlas",
        description="Build, query and preview researcher map bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the full pipeline and write a bundle")
    p_build.add_argument("--input", required=True, help="researcher profiles JSON")
    p_build.add_argument("--output", required=True, help="bundle JSON to write")
    p_build.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_build.add_argument("--verbose", action="store_true", help="print per-iteration fit traces")
    p_build.set_defaults(func=cmd_build)

    p_query = sub.add_parser("query", help="rank researchers for a topic")
    p_query.add_argument("--bundle", required=True)
    p_query.add_argument("--variant", required=True, help="e.g. normal-most_cited")
    p_query.add_argument("--text", required=True)
    p_query.add_argument("--top", type=int, default=DEFAULT_TOP)
    p_query.set_defaults(func=cmd_query)

    p_serve = sub.add_parser("serve", help="preview the static UI locally")
    p_serve.add_argument("--bundle", required=True)
    p_serve.add_argument("--ui", required=True, help="directory with the static UI files")
    p_serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
