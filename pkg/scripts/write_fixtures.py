#!/usr/bin/env python3
"""Regenerate the bundled algebra files from the in-code fixtures."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from nhomlie.fixtures import FIXTURES  # noqa: E402
from nhomlie.io import serialize_algebra  # noqa: E402


def main() -> int:
    data_dir = pathlib.Path(__file__).resolve().parents[1] / "src" / "nhomlie" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        path = data_dir / f"{name}.json"
        path.write_text(serialize_algebra(build()), encoding="utf-8")
        print("wrote", path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
