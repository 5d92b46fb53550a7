"""Check every catalog entry and export it as DSL + Hermitian JSON.

    python scripts/reproduce_catalog.py --out-dir build/catalog
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from sktlie.catalog import catalog_check_all, catalog_entry


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("build/catalog"))
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args(argv)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    results = catalog_check_all(workers=args.workers)
    summary = []
    for r in results:
        entry = catalog_entry(r.name)
        (args.out_dir / f"{r.name}.dsl").write_text(entry.to_dsl(), encoding="utf-8")
        (args.out_dir / f"{r.name}.json").write_text(
            json.dumps(entry.hermitian_json(), indent=2) + "\n", encoding="utf-8"
        )
        (args.out_dir / f"{r.name}.report.json").write_text(
            json.dumps(r.to_json(), indent=2) + "\n", encoding="utf-8"
        )
        summary.append({"name": r.name, "ok": r.ok, "mismatches": len(r.mismatches)})
        print(f"{'ok  ' if r.ok else 'FAIL'} {r.name}")
    (args.out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return 0 if all(s["ok"] for s in summary) else 1


if __name__ == "__main__":
    sys.exit(main())
