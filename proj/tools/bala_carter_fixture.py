#!/usr/bin/env python3
"""Generate data/bala_carter.json.

Classical-type counts are computed here from the partition combinatorics:
  A_n : nilpotent orbits <-> partitions of n+1; one distinguished (regular).
  B_n : partitions of 2n+1 with even parts of even multiplicity;
        distinguished <-> all parts odd and distinct.
  C_n : partitions of 2n with odd parts of even multiplicity;
        distinguished <-> all parts even and distinct.
  D_n : partitions of 2n with even parts of even multiplicity, the very even
        partitions (all parts even) counted twice;
        distinguished <-> all parts odd and distinct.
Exceptional-type counts are the standard classification totals.
"""

import json
import pathlib
from collections import Counter


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def even_parts_even_mult(part):
    return all(m % 2 == 0 for v, m in Counter(part).items() if v % 2 == 0)


def odd_parts_even_mult(part):
    return all(m % 2 == 0 for v, m in Counter(part).items() if v % 2 == 1)


def distinct_odd(part):
    return all(v % 2 == 1 for v in part) and len(set(part)) == len(part)


def distinct_even(part):
    return all(v % 2 == 0 for v in part) and len(set(part)) == len(part)


def count_A(n):
    total = sum(1 for _ in partitions(n + 1))
    return 1, total


def count_B(n):
    parts = [p for p in partitions(2 * n + 1) if even_parts_even_mult(p)]
    return sum(1 for p in parts if distinct_odd(p)), len(parts)


def count_C(n):
    parts = [p for p in partitions(2 * n) if odd_parts_even_mult(p)]
    return sum(1 for p in parts if distinct_even(p)), len(parts)


def count_D(n):
    parts = [p for p in partitions(2 * n) if even_parts_even_mult(p)]
    very_even = sum(1 for p in parts if all(v % 2 == 0 for v in p))
    return sum(1 for p in parts if distinct_odd(p)), len(parts) + very_even


EXCEPTIONAL = {
    "G2": (2, 5),
    "F4": (4, 16),
    "E6": (3, 21),
    "E7": (6, 45),
    "E8": (11, 70),
}

CLASSICAL_SOURCES = {
    "A": "partitions of n+1; distinguished = regular only",
    "B": "partitions of 2n+1, even parts with even multiplicity; "
         "distinguished = distinct odd parts",
    "C": "partitions of 2n, odd parts with even multiplicity; "
         "distinguished = distinct even parts",
    "D": "partitions of 2n, even parts with even multiplicity, very even "
         "doubled; distinguished = distinct odd parts",
}


def main():
    out = {}
    for n in range(1, 9):
        d, t = count_A(n)
        out[f"A{n}"] = {"distinguished": d, "nilpotent": t,
                        "source": CLASSICAL_SOURCES["A"]}
    for n in range(2, 9):
        d, t = count_B(n)
        out[f"B{n}"] = {"distinguished": d, "nilpotent": t,
                        "source": CLASSICAL_SOURCES["B"]}
        d, t = count_C(n)
        out[f"C{n}"] = {"distinguished": d, "nilpotent": t,
                        "source": CLASSICAL_SOURCES["C"]}
    for n in range(4, 9):
        d, t = count_D(n)
        out[f"D{n}"] = {"distinguished": d, "nilpotent": t,
                        "source": CLASSICAL_SOURCES["D"]}
    for label, (d, t) in EXCEPTIONAL.items():
        out[label] = {"distinguished": d, "nilpotent": t,
                      "source": "standard nilpotent orbit classification totals"}

    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "bala_carter.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path} ({len(out)} types)")


if __name__ == "__main__":
    main()
