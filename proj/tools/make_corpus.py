#!/usr/bin/env python3
"""Regenerate the bundled diagram corpus under data/.

Prime knots come from the KnotInfo table (pip package ``database_knotinfo``);
unknot diagrams and Reidemeister-related pairs are built from braid closures.
PD tuples list edges counterclockwise starting at the incoming under-strand.
"""
import csv
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def braid_closure_pd(strands, word):
    """PD tuples for the closure of a braid word (generators are +-i, 1-based)."""
    edge = 0
    position = []
    for _ in range(strands):
        edge += 1
        position.append(edge)
    bottom = list(position)
    raw = []
    for g in word:
        i = abs(g) - 1
        bl, br = position[i], position[i + 1]
        edge += 1
        tl = edge
        edge += 1
        tr = edge
        # strand bl -> tr, strand br -> tl
        if g > 0:
            # bl -> tr passes under
            raw.append([bl, br, tr, tl])
        else:
            raw.append([br, tr, tl, bl])
        position[i], position[i + 1] = tl, tr
    # close up: identify top position k with bottom position k
    alias = {}
    for k in range(strands):
        alias[position[k]] = bottom[k]

    def res(e):
        while e in alias and alias[e] != e:
            e = alias[e]
        return e

    crossings = [[res(e) for e in x] for x in raw]
    return relabel(crossings)


def relabel(crossings):
    """Renumber edges 1..2N consecutively along each oriented component."""
    slots = {}
    for ci, x in enumerate(crossings):
        for p, e in enumerate(x):
            slots.setdefault(e, []).append((ci, p))
    # orientation: under strand goes slot 0 -> slot 2
    head = {}  # edge -> slot where it ends
    for ci, x in enumerate(crossings):
        head[x[0]] = (ci, 0)
    # propagate through over strands
    nxt = {}
    changed = True
    while changed:
        changed = False
        for e, ss in slots.items():
            if e in head:
                h = head[e]
                other = [s for s in ss if s != h] or [h]
                tail = other[0]
                ci, p = h
                out_edge = crossings[ci][(p + 2) % 4]
                nxt[e] = out_edge
                if out_edge not in head:
                    # out_edge leaves slot (ci,(p+2)%4); its head is its other slot
                    oss = slots[out_edge]
                    o = [s for s in oss if s != (ci, (p + 2) % 4)]
                    head[out_edge] = o[0] if o else (ci, (p + 2) % 4)
                    changed = True
        if not changed:
            for e in sorted(slots):
                if e not in head:
                    head[e] = slots[e][0]
                    changed = True
                    break
    labels = {}
    n = 0
    for start in sorted(slots):
        if start in labels:
            continue
        e = start
        while e not in labels:
            n += 1
            labels[e] = n
            e = nxt[e]
    out = []
    for ci, x in enumerate(crossings):
        y = [labels[e] for e in x]
        out.append(y)
    return out


def pd_string(crossings):
    if not crossings:
        return "U1"
    return "PD[" + ",".join("X[%s]" % ",".join(map(str, x)) for x in crossings) + "]"


def knotinfo_rows():
    try:
        import database_knotinfo  # noqa: F401
        base = os.path.dirname(database_knotinfo.__file__)
    except ImportError:
        base = os.environ.get("KNOTINFO_DIR")
        if not base:
            sys.exit("database_knotinfo not installed; set KNOTINFO_DIR")
    path = os.path.join(base, "csv_data", "knotinfo_data_complete.csv")
    csv.field_size_limit(10 ** 9)
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh, delimiter="|"))
    return rows[1:]


def parse_list(s):
    import json
    return json.loads(s)


def main():
    rows = knotinfo_rows()
    by_name = {r["name"]: r for r in rows}
    os.makedirs(os.path.join(DATA, "reference"), exist_ok=True)

    with open(os.path.join(DATA, "knots9.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "pd", "alternating"])
        w.writerow(["0_1", "U1", "Y"])
        for r in rows:
            c = r["crossing_number"]
            if not c.isdigit() or not (3 <= int(c) <= 9):
                continue
            pd = parse_list(r["pd_notation"])
            w.writerow([r["name"], pd_string(pd), r["alternating"]])

    with open(os.path.join(DATA, "knots12.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "pd", "alternating"])
        for name in ["12a_1", "12n_1", "12a_1188"]:
            r = by_name[name]
            w.writerow([name, pd_string(parse_list(r["pd_notation"])), r["alternating"]])

    with open(os.path.join(DATA, "reference", "knotinfo_invariants.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "determinant", "alexander", "kh_integral", "khr_rational"])
        for r in rows:
            c = r["crossing_number"]
            if not c.isdigit() or not (3 <= int(c) <= 9) and r["name"] not in ("12a_1", "12n_1"):
                continue
            w.writerow([r["name"], r["determinant"], r["alexander_polynomial"],
                        r["khovanov_unreduced_integral_polynomial"],
                        r["khovanov_reduced_rational_polynomial"]])

    # Unknot diagrams: closures of stabilized trivial braids, optionally with
    # cancelling generator pairs inserted.
    unknots = [
        ("unknot_0", 1, []),
        ("unknot_kink_pos", 2, [1]),
        ("unknot_kink_neg", 2, [-1]),
        ("unknot_2a", 3, [1, 2]),
        ("unknot_2b", 3, [1, -2]),
        ("unknot_3a", 4, [1, 2, 3]),
        ("unknot_3b", 4, [2, -1, 3]),
        ("unknot_3c", 2, [1, 1, -1]),
        ("unknot_3d", 2, [-1, -1, 1]),
        ("unknot_4a", 5, [1, -2, 3, -4]),
        ("unknot_4b", 3, [1, 2, 1, -1]),
        ("unknot_4c", 3, [2, 1, -2, -2]),
        ("unknot_5a", 6, [3, 1, -5, 2, -4]),
        ("unknot_5b", 4, [1, 2, -2, 2, 3]),
        ("unknot_5c", 4, [1, 2, 3, 2, -2]),
        ("unknot_6a", 7, [1, -2, 3, -4, 5, -6]),
        ("unknot_6b", 3, [1, 2, -1, 1, -2, 2]),
        ("unknot_6c", 3, [1, 2, 1, -2, -1, -1]),
        ("unknot_6d", 3, [2, 1, 1, 2, -1, -2]),
    ]
    with open(os.path.join(DATA, "unknots.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "pd"])
        for name, strands, word in unknots:
            if not word:
                w.writerow([name, "U1"])
                continue
            w.writerow([name, pd_string(braid_closure_pd(strands, word))])

    pairs = [
        ("trefoil_stab", (2, [1, 1, 1]), (3, [1, 1, 1, 2])),
        ("trefoil_r2", (2, [1, 1, 1]), (2, [1, 1, -1, 1, 1])),
        ("trefoil_conj", (3, [1, 1, 1, 2]), (3, [2, 1, 1, 1])),
        ("fig8_stab", (3, [1, -2, 1, -2]), (4, [1, -2, 1, -2, -3])),
        ("fig8_r2", (3, [1, -2, 1, -2]), (3, [1, -2, 2, -2, 1, -2])),
        ("cinquefoil_stab", (2, [1, 1, 1, 1, 1]), (3, [1, 1, 1, 1, 1, -2])),
        ("hopf_r2", (2, [1, 1]), (2, [1, -1, 1, 1])),
        ("torus_r3", (3, [1, 2, 1, 2]), (3, [2, 1, 2, 2])),
        ("knot_r3", (3, [1, 2, 1, -2, 1, 1]), (3, [2, 1, 2, -2, 1, 1])),
    ]
    with open(os.path.join(DATA, "reidemeister_pairs.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "pd_a", "pd_b"])
        for name, (sa, wa), (sb, wb) in pairs:
            w.writerow([name, pd_string(braid_closure_pd(sa, wa)), pd_string(braid_closure_pd(sb, wb))])


if __name__ == "__main__":
    main()
