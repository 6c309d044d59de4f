#!/usr/bin/env python3
"""Regenerate the reference tables and figure grids as CSV files.

Writes break-even summaries, the index-page tabulation and benefit/cost
grids, the device metrics trio, and the interval-vs-page-size curve into
an output directory (default ./out).
"""
import argparse
import io
import pathlib

from storage_rules.cli import main as cli_main


def run(argv, path: pathlib.Path) -> None:
    buf = io.StringIO()
    code = cli_main(argv, out=buf)
    if code != 0:
        raise SystemExit(f"{' '.join(argv)} exited {code}")
    path.write_text(buf.getvalue(), encoding="utf-8")
    print(f"wrote {path}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out")
    args = parser.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    run(["presets", "--format", "csv"], out / "presets.csv")
    run(["breakeven", "--device", "dell_tpcc_1997", "--format", "csv"],
        out / "breakeven_dell_1997.csv")
    run(["breakeven", "--device", "table8_tape_robot", "--page-bytes", "8192",
         "--format", "csv"], out / "breakeven_tape_8k.csv")
    run(["seqrule", "--transfer-bytes", "65536", "--bandwidth-bps", str(5 * 2**20),
         "--format", "csv"], out / "sequential_64k.csv")
    run(["seqrule", "--curve", "--bandwidth-bps", str(10 * 2**20),
         "--latency-s", "0.01", "--format", "csv"],
        out / "interval_vs_page_size.csv")
    run(["sortplan", "--file-bytes", "1e14", "--format", "csv"],
        out / "sortplan_100tb.csv")
    run(["indexsize", "--table6", "--format", "csv"], out / "table6.csv")
    run(["indexsize", "--figure7", "--format", "csv"], out / "figure7.csv")
    run(["metrics", "--table8", "--format", "csv"], out / "table8.csv")


if __name__ == "__main__":
    main()
