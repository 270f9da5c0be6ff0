#!/usr/bin/env python3
"""Regenerate the algebra files bundled with the package.

Writes canonical JSON for a few named fixtures into src/kantor/data/ so
they can be used as CLI inputs without invoking the constructors.  A test
asserts the bundled files stay in sync with the constructors.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kantor import zoo
from kantor.storage import dumps_algebra

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "kantor" / "data"

BUNDLED = ("m7", "wn2", "w2sym", "s2", "nilpotent4", "slc2")


def main():
    DATA.mkdir(exist_ok=True)
    for name in BUNDLED:
        path = DATA / f"{name}.json"
        path.write_text(dumps_algebra(zoo.fixture(name)))
        print(f"wrote {path}")
    comm, bracket = zoo.truncated_poisson_pair()
    pair_path = DATA / "truncated_poisson.json"
    pair_path.write_text(dumps_algebra(comm, bracket=bracket))
    print(f"wrote {pair_path}")
    sigma = zoo.transpose_involution_2x2()
    inv_path = DATA / "involution_transpose_2x2.json"
    doc = {
        "dim": 4,
        "matrix": [[str(sigma[i, j]) for j in range(4)] for i in range(4)],
    }
    inv_path.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {inv_path}")


if __name__ == "__main__":
    main()
