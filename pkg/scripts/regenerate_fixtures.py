"""Regenerate every golden report in tests/fixtures from its config."""
from __future__ import annotations

import json
import sys
from pathlib import Path

from monoidkit.cli import emit_fixture, run

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main():
    for cfg in sorted(FIXTURES.glob("*.config.json")):
        report = run(json.loads(cfg.read_text()))
        out = cfg.with_name(cfg.name.replace(".config.json", ".report.json"))
        emit_fixture(report, out)
        print(f"{out.name}: {'ok' if report.ok else 'FAILED'}")
        if not report.ok:
            sys.exit(2)


if __name__ == "__main__":
    main()
