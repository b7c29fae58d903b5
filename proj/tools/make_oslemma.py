#!/usr/bin/env python3
"""Regenerate the triangle instances under data/oslemma/.

Skein families come from the built CLI (``khcube triangle --emit-family``).
The rest are written by hand here. Every file carries "expect": "pass" or "fail".

usage: make_oslemma.py path/to/khcube
"""
import copy
import json
import os
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "data", "oslemma")

SKEIN = [
    ("skein_kink", "PD[X[1,2,2,1]]", 1),
    ("skein_trefoil_c2", "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", 2),
    ("skein_hopf_c1", "PD[X[4,1,3,2],X[2,3,1,4]]", 1),
]


def emit_family(cli, pd, crossing):
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "family.json")
        subprocess.run([cli, "triangle", pd, "--crossing", str(crossing), "--emit-family", path],
                       check=True, stdout=subprocess.DEVNULL)
        with open(path) as f:
            return json.load(f)


def point_triangle(j0):
    """C_0 = C_1 = Q, C_2 = 0, f_1 = id and j_0 as given."""
    return {
        "ring": "Q",
        "complexes": [{"degrees": [0], "d": []}, {"degrees": [0], "d": []}, {"dim": 0, "d": []}],
        "f": [[], [[0, 0, 1]], []],
        "j": [j0, [], []],
    }


def main():
    cli = sys.argv[1]
    os.makedirs(OUT, exist_ok=True)
    instances = {}
    for name, pd, crossing in SKEIN:
        fam = emit_family(cli, pd, crossing)
        fam["source"] = f"{pd} at crossing {crossing}"
        instances[name] = (fam, "pass")
        broken = copy.deepcopy(fam)
        # Dropping one homotopy breaks d j + j d + f f = 0.
        victim = max(range(3), key=lambda i: len(broken["j"][i] or []))
        broken["j"][victim] = []
        broken["source"] = fam["source"] + f", j[{victim}] zeroed"
        instances[name + "_no_homotopy"] = (broken, "fail")

    instances["identity_triangle"] = (point_triangle([[0, 0, 1]]), "pass")
    instances["identity_triangle_no_quasi_iso"] = (point_triangle([]), "fail")

    # f_1 : z -> x in C_0 = (x -> y) is not an anti-chain map: d f (z) = y.
    not_anti = {
        "ring": "Q",
        "complexes": [{"degrees": [0, 1], "d": [[1, 0, 1]]}, {"degrees": [0], "d": []}, {"dim": 0, "d": []}],
        "f": [[], [[0, 0, 1]], []],
        "j": [[], [], []],
    }
    instances["not_anti_chain"] = (not_anti, "fail")

    for name, (doc, expect) in sorted(instances.items()):
        doc = dict(doc)
        doc["expect"] = expect
        with open(os.path.join(OUT, name + ".json"), "w") as f:
            json.dump(doc, f, indent=1, sort_keys=True)
            f.write("\n")
        print(name, expect)


if __name__ == "__main__":
    main()
