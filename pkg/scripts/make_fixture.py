#!/usr/bin/env python3
"""Generate a synthetic researcher-profile fixture.

The default settings reproduce the deployment-scale fixture used by the
acceptance suite: 83 researchers with about 100 publications each.

    python3 scripts/make_fixture.py --out profiles.json
    python3 scripts/make_fixture.py --researchers 12 --pubs 8 --empty 2 \
        --seed 7 --out small.json
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from scholar_atlas.profiles import save_profiles
from scholar_atlas.synth import make_profile_set


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--researchers", type=int, default=83)
    parser.add_argument("--pubs", type=int, default=100,
                        help="publications per researcher")
    parser.add_argument("--empty", type=int, default=0,
                        help="extra researchers with no text at all")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--label", default="synthetic-fixture")
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    profiles = make_profile_set(
        args.researchers,
        pubs_per_researcher=args.pubs,
        seed=args.seed,
        source_label=args.label,
        n_empty=args.empty,
    )
    save_profiles(profiles, args.out)
    total_pubs = sum(len(r.publications) for r in profiles.researchers)
    print(f"wrote {args.out}: {len(profiles.researchers)} researchers, "
          f"{total_pubs} publications, seed={args.seed}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
