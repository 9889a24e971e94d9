"""Write SVG drawings of the diagram fixtures into a directory."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from atq.catalog import build
from atq.render import render

DEFAULT = ["cp2", "cp2_blowup3", "cp2_blowup9", "k3_half", "k3", "s2xs2_traded", "s2xs2_slid"]


@dataclass
class Config:
    outdir: Path = Path("figures")
    names: list[str] = field(default_factory=lambda: list(DEFAULT))


def main(cfg: Config) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for name in cfg.names:
        path = cfg.outdir / f"{name}.svg"
        path.write_text(render(build(name)))
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("figures"))
    ap.add_argument("names", nargs="*", default=DEFAULT)
    main(Config(**vars(ap.parse_args())))
