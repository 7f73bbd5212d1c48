#!/usr/bin/env python3
"""Regenerate src/rmqc/_lulc_constants.py from the plain-text fixture.

Re-parses data/lulc_constants.txt, recomputes the checksum, and rewrites the
generated module.  Run from the repository root after any fixture edit:

    python3 tools/regen_lulc_constants.py
"""

from __future__ import annotations

import hashlib
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SRC = ROOT / "src"
sys.path.insert(0, str(SRC))

FIXTURE = SRC / "rmqc" / "data" / "lulc_constants.txt"
TARGET = SRC / "rmqc" / "_lulc_constants.py"


def parse_fixture(text: str):
    fields = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, rest = line.partition(":")
        fields[name.strip()] = rest.strip()
    xi = tuple(
        tuple(int(v) for v in fields[f"xi{i}"].split()) for i in range(1, 7)
    )
    quad = tuple(
        tuple(int(v) for v in pair.split(",")) for pair in fields["quad"].split()
    )
    # fixture sites are 1-based; the package indexes from 0
    quad0 = tuple((a - 1, b - 1) for a, b in quad)
    e = tuple(int(v) for v in fields["e"].split())
    k1 = tuple(int(v) for v in fields["k1"].split())
    k2 = tuple(int(v) for v in fields["k2"].split())
    return xi, quad0, e, k1, k2


def main() -> None:
    from rmqc.lulc import canonical_blob

    xi, quad, e, k1, k2 = parse_fixture(FIXTURE.read_text())
    digest = hashlib.sha256(canonical_blob(xi, quad, e, k1, k2)).hexdigest()

    def fmt_rows(rows, indent="    "):
        return "\n".join(f"{indent}{row!r}," for row in rows)

    body = f'''"""Embedded constants of the 35-qubit pair.  GENERATED FILE.

Regenerate from the plain-text fixture with tools/regen_lulc_constants.py;
do not edit by hand.
"""

XI = (
{fmt_rows(xi)}
)

QUAD_PAIRS = {quad!r}

E = {e!r}

K1 = {k1!r}

K2 = {k2!r}

SHA256 = "{digest}"
'''
    TARGET.write_text(body)
    print(f"wrote {TARGET} (sha256 {digest})")


if __name__ == "__main__":
    main()
