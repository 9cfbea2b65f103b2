#!/usr/bin/env python3
"""Print graded character tables of irreducible highest weight modules
side by side across field characteristics, flagging rows where a prime
characteristic drops below the characteristic-zero dimension.

Examples:
    python3 scripts/character_tables.py --h 0 --max 10
    python3 scripts/character_tables.py --ising --chars 0,3,5,7,11,13
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from virfock.scalars import GF, QQ
from virfock.singular import irreducible_dims
from virfock.verma import verma_module

ISING_WEIGHTS = ("0", "1/2", "1/16")


@dataclass
class TableConfig:
    c: str = "1/2"
    h: str = "0"
    chars: Tuple[int, ...] = (0, 3, 5, 7, 11, 13)
    max_degree: int = 10
    weights: Tuple[str, ...] = field(default_factory=tuple)

    def weight_list(self) -> Tuple[str, ...]:
        return self.weights or (self.h,)


def dims_for(cfg: TableConfig, h: str, char: int) -> List[int]:
    ring = QQ if char == 0 else GF(char)
    mod = verma_module(ring.parse(cfg.c), ring.parse(h), ring)
    return irreducible_dims(mod, cfg.max_degree).irreducible()


def render_table(cfg: TableConfig, h: str) -> str:
    columns = {char: dims_for(cfg, h, char) for char in cfg.chars}
    base = columns.get(0)
    lines = [f"c = {cfg.c}   h = {h}   irreducible graded dimensions"]
    header = f"{'degree':>6}" + "".join(f"{f'char {p}':>10}" for p in cfg.chars)
    lines.append(header)
    for degree in range(cfg.max_degree + 1):
        cells = []
        for char in cfg.chars:
            dim = columns[char][degree]
            mark = " DIFF" if base is not None and char != 0 and dim != base[degree] else ""
            cells.append(f"{f'{dim}{mark}':>10}")
        lines.append(f"{degree:>6}" + "".join(cells))
    return "\n".join(lines)


def parse_chars(text: str) -> Tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip() != "")


def parse_args(argv: Sequence[str] | None = None) -> TableConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--c", default="1/2", help="central charge (exact string)")
    parser.add_argument("--h", default="0", help="highest weight (exact string)")
    parser.add_argument(
        "--chars",
        type=parse_chars,
        default=(0, 3, 5, 7, 11, 13),
        help="comma-separated characteristics, e.g. 0,3,5,7",
    )
    parser.add_argument("--max", dest="max_degree", type=int, default=10)
    parser.add_argument(
        "--ising",
        action="store_true",
        help="tabulate all three c = 1/2 weights 0, 1/2, 1/16",
    )
    args = parser.parse_args(argv)
    weights = ISING_WEIGHTS if args.ising else ()
    return TableConfig(
        c=args.c,
        h=args.h,
        chars=args.chars,
        max_degree=args.max_degree,
        weights=weights,
    )


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(argv)
    blocks = [render_table(cfg, h) for h in cfg.weight_list()]
    print("\n\n".join(blocks))
    return 0


if __name__ == "__main__":
    sys.exit(main())
