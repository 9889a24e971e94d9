"""Recompute every catalog fixture and compare with its recorded expectation.

    python3 scripts/reproduce_examples.py [--out results.json]
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from atq.catalog import CATALOG, build
from atq.diagram import ClosedBase, Diagram
from atq.quantization import kaehler_dimension_k3, quantize, quantize_closed, quantize_semitoric


@dataclass
class Config:
    out: str | None = None


def run_one(name: str) -> dict:
    spec = CATALOG[name]
    start = time.perf_counter()
    obj = build(name)
    row = {"name": name}
    if isinstance(obj, ClosedBase):
        q = quantize_closed(obj)
        row["kaehler_dimension"] = kaehler_dimension_k3(obj) if obj.tag == "K3" else None
    elif isinstance(obj, Diagram):
        q = quantize(obj)
    else:
        r = quantize_semitoric(obj.region, obj.nodes, obj.window)
        q = r.total
        row["truncated"] = r.truncated
    row["graded"] = q.to_json()
    row["matches"] = spec.expected is None or q == spec.expected
    row["seconds"] = round(time.perf_counter() - start, 4)
    return row


def main(cfg: Config) -> int:
    rows = [run_one(name) for name in CATALOG]
    for r in rows:
        flag = "ok " if r["matches"] else "BAD"
        print(f"{flag} {r['name']:<18} {json.dumps(r['graded'])}  {r['seconds']:.3f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(rows, fh, indent=2)
    return 0 if all(r["matches"] for r in rows) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out")
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
