"""Enumerate matroids on at most N elements up to isomorphism.

Every matroid on [n] either has n as a coloop, or deleting n leaves a matroid
of the same rank whose bases are exactly the bases avoiding n.  So all
matroids on [n] come from those on [n-1] by adding a coloop, or by adding a
set of new bases through n and keeping the ones that pass basis exchange.

    python scripts/enumerate_matroids.py --max-n 6 --out tests/data/matroids.json
"""

import argparse
import itertools
import json
import time


def bits(mask, n):
    return [i + 1 for i in range(n) if mask >> i & 1]


def exchange_ok(bases):
    bset = set(bases)
    for b1 in bases:
        for b2 in bases:
            diff = b1 & ~b2
            while diff:
                v = diff & -diff
                diff ^= v
                rest = b1 ^ v
                cand = b2 & ~b1
                ok = False
                while cand:
                    w = cand & -cand
                    cand ^= w
                    if rest | w in bset:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def canonical(bases, n, perms):
    best = None
    for p in perms:
        key = []
        for b in bases:
            img = 0
            for i in range(n):
                if b >> i & 1:
                    img |= 1 << p[i]
            key.append(img)
        key = tuple(sorted(key))
        if best is None or key < best:
            best = key
    return best


def extend(classes_prev, n):
    perms = list(itertools.permutations(range(n)))
    new = 1 << (n - 1)
    found = {}
    for bases in classes_prev:
        bases = list(bases)
        rank = bin(bases[0]).count("1")
        candidates = [sum(1 << i for i in T) | new
                      for T in itertools.combinations(range(n - 1), rank - 1)] if rank else []
        # n is a coloop
        options = [[b | new for b in bases]]
        for k in range(len(candidates) + 1):
            for extra in itertools.combinations(candidates, k):
                options.append(bases + list(extra))
        for opt in options:
            if exchange_ok(opt):
                key = canonical(opt, n, perms)
                found.setdefault(key, key)
    return sorted(found)


def enumerate_matroids(max_n):
    levels = {0: [(0,)]}
    for n in range(1, max_n + 1):
        levels[n] = extend(levels[n - 1], n)
    return levels


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--out", default="tests/data/matroids.json")
    args = ap.parse_args()
    t0 = time.time()
    levels = enumerate_matroids(args.max_n)
    out = []
    for n, classes in levels.items():
        print(f"n={n}: {len(classes)} matroids up to isomorphism")
        for bases in classes:
            out.append({"ground_set": n, "bases": [bits(b, n) for b in bases]})
    with open(args.out, "w") as fh:
        json.dump(out, fh)
        fh.write("\n")
    print(f"wrote {len(out)} matroids to {args.out} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
