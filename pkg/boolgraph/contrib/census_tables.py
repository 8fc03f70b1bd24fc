import argparse
import logging
from pathlib import Path

import pandas as pd

from boolgraph.classification import FunctionClass, enumerate_class, paired_census
from boolgraph.function import BooleanFunction


def census_tables(args: argparse.Namespace) -> None:
    """
    Writes one CSV per function class with the members of every arity in
    [min_arity, max_arity]. Signed classes are written complement-paired
    (positive member, negative member per row); the nested canalizing class is
    written as plain (arity, decimal, bitstring) rows.
    """
    save_dir = Path(args.save_dir)
    save_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    for name, function_class in (
        ("only_edges", FunctionClass.ONLY_POSITIVE),
        ("complete_edges", FunctionClass.COMPLETE_POSITIVE),
        ("nested_canalizing", FunctionClass.NESTED_CANALIZING),
    ):
        frames = []
        for arity in range(args.min_arity, args.max_arity + 1):
            if function_class is FunctionClass.NESTED_CANALIZING:
                members = enumerate_class(arity, function_class, workers=args.workers)
                frame = pd.DataFrame({
                    "arity": arity,
                    "decimal": members,
                    "bitstring": [_bits(arity, v) for v in members],
                })
            else:
                rows = paired_census(arity, function_class, workers=args.workers)
                frame = pd.DataFrame({
                    "arity": arity,
                    "pbf": [_bits(arity, p) for p, _ in rows],
                    "pbf_decimal": [p for p, _ in rows],
                    "nbf": [_bits(arity, q) for _, q in rows],
                    "nbf_decimal": [q for _, q in rows],
                })
            summary.append({"table": name, "arity": arity, "count": len(frame)})
            frames.append(frame)
        path = save_dir / f"{name}.csv"
        pd.concat(frames, ignore_index=True).to_csv(path, index=False, lineterminator="\n")
        logging.info(f"saved {sum(len(f) for f in frames)} rows to {path}")
    pd.DataFrame(summary).to_csv(save_dir / "counts.csv", index=False, lineterminator="\n")
    logging.info(f"saved counts to {save_dir / 'counts.csv'}")


def _bits(arity: int, value: int) -> str:
    return BooleanFunction.from_decimal(arity, value).render()


logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)-8s %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)


def main():
    parser = argparse.ArgumentParser(
        description="Writes the census tables of the signed and nested canalizing function classes to CSV."
    )
    parser.add_argument("save_dir", type=str, help="Directory to save the CSV files in.")
    parser.add_argument("--min-arity", type=int, default=2, help="Smallest arity to scan.")
    parser.add_argument("--max-arity", type=int, default=4, help="Largest arity to scan (at most 4).")
    parser.add_argument("--workers", type=int, default=1, help="Threads scanning disjoint decimal ranges.")
    args = parser.parse_args()
    if args.min_arity < 1 or args.max_arity < args.min_arity:
        parser.error("need 1 <= min-arity <= max-arity")
    census_tables(args)


if __name__ == "__main__":
    main()
