#!/usr/bin/env python3
"""Regenerate the bundled corpus group files under src/commgraph/data/.

The corpus covers every verdict branch: Frobenius (odd dihedrals, A4, S3,
C5:C4, C7:C3), 2-Frobenius (S4), centre (even dihedrals, D8, Q8), insoluble
(A5) and connected (S3 x S3).
"""

import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "commgraph" / "data"


def perm_file(degree, generators):
    return {"type": "permutation", "degree": degree, "generators": generators}


def dihedral(n):
    rot = list(range(1, n)) + [0]
    refl = [(-i) % n for i in range(n)]
    return perm_file(n, [rot, refl])


def cycle_gen(n, mult):
    # x -> mult*x mod n as an image array
    return [(mult * i) % n for i in range(n)]


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    files = {
        "sym3": perm_file(3, [[1, 0, 2], [1, 2, 0]]),
        "sym4": perm_file(4, [[1, 0, 2, 3], [1, 2, 3, 0]]),
        "alt4": perm_file(4, [[1, 2, 0, 3], [0, 2, 3, 1]]),
        "alt5": perm_file(5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]]),
        "c5c4": perm_file(5, [list(range(1, 5)) + [0], cycle_gen(5, 2)]),
        "c7c3": perm_file(7, [list(range(1, 7)) + [0], cycle_gen(7, 2)]),
        "s3xs3": perm_file(
            6,
            [
                [1, 0, 2, 3, 4, 5],
                [1, 2, 0, 3, 4, 5],
                [0, 1, 2, 4, 3, 5],
                [0, 1, 2, 4, 5, 3],
            ],
        ),
        "q8": {
            "type": "matrix",
            "field": {"p": 3, "k": 1, "modulus": [0, 1]},
            "dim": 2,
            "aut_order": 1,
            "generators": [
                {"twist": 0, "matrix": [[[0], [2]], [[1], [0]]]},
                {"twist": 0, "matrix": [[[1], [1]], [[1], [2]]]},
            ],
        },
    }
    for n in range(3, 21):
        files[f"d{2 * n:02d}"] = dihedral(n)

    for name, payload in sorted(files.items()):
        path = DATA / f"{name}.json"
        path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
