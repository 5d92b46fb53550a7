"""Run the SKT and Kahler metric searches on every catalog structure.

Prints one line per (entry, structure, kind) with the outcome, the kernel
dimension of the linear system and the number of PD attempts used.
"""

from __future__ import annotations

import argparse
import json
import sys

from sktlie.catalog import catalog_entry, catalog_list
from sktlie.search import metric_search


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=512)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="emit one JSON object per line")
    ap.add_argument("names", nargs="*", help="entries to run (default: all)")
    args = ap.parse_args(argv)

    for name in args.names or catalog_list():
        e = catalog_entry(name)
        for s in e.structures:
            for kind in ("skt", "kahler"):
                out = metric_search(e.algebra, s.J, kind, budget=args.budget, seed=args.seed)
                if args.json:
                    print(json.dumps({"name": name, "label": s.label, **out.to_json()}))
                else:
                    print(
                        f"{name:16s} {s.label:3s} {kind:6s} {out.status.value:12s} "
                        f"kernel={out.kernel_dim:<3d} attempts={out.attempts}"
                    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
