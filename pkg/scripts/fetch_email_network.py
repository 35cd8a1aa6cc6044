#!/usr/bin/env python3
"""Fetch the 1,133-node university email network and convert it.

The dataset (Guimera et al.'s email interchange network, mirrored by
KONECT as "arenas-email") is not bundled; this script downloads the
KONECT edge list and rewrites it in the package's own format: a node
count line followed by 0-based "u v" pairs, deduplicated, self loops
dropped. Expected output: 1133 nodes, 5453 edges.

Usage:
    python3 scripts/fetch_email_network.py --out email.txt
    python3 scripts/fetch_email_network.py --from-file out.arenas-email --out email.txt

Conversion is pure (see `convert_konect`), so it is testable offline.
"""

from __future__ import annotations

import argparse
import io
import sys
import tarfile
import urllib.request

URL = "http://konect.cc/files/download.tsv.arenas-email.tar.bz2"


def convert_konect(text: str) -> str:
    """KONECT edge list (1-based, %-comments, optional weight columns)
    to the package format (node-count header, 0-based pairs)."""
    edges: set[tuple[int, int]] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("%", "#")):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected at least two columns, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints must be integers, got {raw!r}") from None
        if u < 1 or v < 1:
            raise ValueError(f"line {lineno}: ids must be 1-based positive, got {raw!r}")
        n = max(n, u, v)
        if u == v:
            continue
        u, v = u - 1, v - 1
        edges.add((u, v) if u < v else (v, u))
    if n == 0:
        raise ValueError("no edges found in input")
    lines = [str(n)]
    lines.extend(f"{u} {v}" for u, v in sorted(edges))
    return "\n".join(lines) + "\n"


def _extract_edge_text(blob: bytes) -> str:
    """Pull the edge-list member out of a KONECT .tar.bz2 download."""
    with tarfile.open(fileobj=io.BytesIO(blob), mode="r:bz2") as tar:
        for member in tar.getmembers():
            if member.isfile() and "out." in member.name:
                fh = tar.extractfile(member)
                assert fh is not None
                return fh.read().decode("utf-8", errors="replace")
    raise ValueError("archive holds no out.* edge list member")


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--url", default=URL)
    ap.add_argument("--from-file", default=None,
                    help="convert a local KONECT edge list instead of downloading")
    ap.add_argument("--out", required=True)
    args = ap.parse_args(argv)

    if args.from_file is not None:
        with open(args.from_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        print(f"downloading {args.url} ...", file=sys.stderr)
        blob = urllib.request.urlopen(args.url, timeout=60).read()
        text = _extract_edge_text(blob) if args.url.endswith((".tar.bz2", ".tar.gz")) else blob.decode("utf-8")

    converted = convert_konect(text)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(converted)
    header, *edge_lines = converted.splitlines()
    print(f"wrote {args.out}: {header} nodes, {len(edge_lines)} edges", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
