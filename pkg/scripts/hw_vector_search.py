#!/usr/bin/env python3
"""Scan Fock sector slices for Virasoro highest weight vectors across
field characteristics.

For every (sector, parity, weight, characteristic) cell the script counts
the vectors killed by L(1) and L(2), prints them in exact form, and marks
weights where a prime characteristic admits a vector absent over the
rationals.

Examples:
    python3 scripts/hw_vector_search.py --max 8 --chars 0,7
    python3 scripts/hw_vector_search.py --sectors R --parities 0 --max 4
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from virfock.fock import NS, RAMOND, fock_hw_vectors, monomial_str
from virfock.scalars import GF, QQ, scalar_to_str


@dataclass
class ScanConfig:
    sectors: Tuple[str, ...] = (NS, RAMOND)
    parities: Tuple[int, ...] = (0, 1)
    max_degree: int = 8
    chars: Tuple[int, ...] = (0, 3, 5, 7, 11, 13)
    show_empty: bool = False


def weight_of(sector: str, parity: int, degree: int) -> Fraction:
    if sector == NS and parity == 1:
        return degree + Fraction(1, 2)
    return Fraction(degree)


def display(vec) -> str:
    return " + ".join(
        f"({scalar_to_str(cv)})*{monomial_str(t)}" for t, cv in vec.items()
    ) or "0"


def scan_cell(sector: str, parity: int, weight: Fraction, char: int) -> List[str]:
    ring = QQ if char == 0 else GF(char)
    return [display(v) for v in fock_hw_vectors(sector, parity, weight, ring)]


def run_scan(cfg: ScanConfig) -> List[str]:
    lines: List[str] = []
    for sector in cfg.sectors:
        for parity in cfg.parities:
            lines.append(f"sector {sector}  parity {parity}")
            for degree in range(cfg.max_degree + 1):
                weight = weight_of(sector, parity, degree)
                found = {char: scan_cell(sector, parity, weight, char) for char in cfg.chars}
                base = found.get(0, [])
                any_hit = any(found.values())
                if not any_hit and not cfg.show_empty:
                    continue
                lines.append(f"  weight {weight}")
                for char in cfg.chars:
                    vecs = found[char]
                    new = " NEW" if char != 0 and vecs and not base else ""
                    lines.append(f"    char {char}: {len(vecs)} vector(s){new}")
                    for text in vecs:
                        lines.append(f"      {text}")
    return lines


def parse_list(cast):
    def parse(text: str):
        return tuple(cast(x.strip()) for x in text.split(",") if x.strip() != "")

    return parse


def parse_sector(text: str) -> str:
    key = text.strip().upper()
    if key in ("NS", "N"):
        return NS
    if key in ("R", "RAMOND"):
        return RAMOND
    raise argparse.ArgumentTypeError(f"unknown sector {text!r} (use NS or R)")


def parse_args(argv: Sequence[str] | None = None) -> ScanConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sectors",
        type=parse_list(parse_sector),
        default=(NS, RAMOND),
        help="comma-separated sectors, e.g. NS,R",
    )
    parser.add_argument(
        "--parities",
        type=parse_list(int),
        default=(0, 1),
        help="comma-separated parities from {0,1}",
    )
    parser.add_argument("--max", dest="max_degree", type=int, default=8)
    parser.add_argument(
        "--chars",
        type=parse_list(int),
        default=(0, 3, 5, 7, 11, 13),
        help="comma-separated characteristics, e.g. 0,3,5,7",
    )
    parser.add_argument(
        "--show-empty",
        action="store_true",
        help="also print weights where no characteristic has a vector",
    )
    args = parser.parse_args(argv)
    return ScanConfig(
        sectors=args.sectors,
        parities=args.parities,
        max_degree=args.max_degree,
        chars=args.chars,
        show_empty=args.show_empty,
    )


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(argv)
    print("\n".join(run_scan(cfg)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
