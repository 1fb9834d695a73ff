"""Regenerate the frozen CLI outputs from manifest.json.

Run after an intentional output-format change, then review the diff:

    python3 tests/goldens/regen.py
"""

import contextlib
import io
import json
import pathlib

from cubicext.cli import main

HERE = pathlib.Path(__file__).parent


def run():
    manifest = json.loads((HERE / "manifest.json").read_text())
    for entry in manifest:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(entry["argv"])
        if code != 0:
            raise SystemExit(f"{entry['argv']} exited {code}")
        (HERE / entry["file"]).write_text(buf.getvalue())
        print(f"wrote {entry['file']}")


if __name__ == "__main__":
    run()
