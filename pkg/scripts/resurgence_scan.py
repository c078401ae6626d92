"""Best observed m/r over every matroid complex in the enumerated zoo.

    python scripts/resurgence_scan.py --max-n 5 --m-max 10 --r-max 10 --workers 4

For each complex prints the ground set size s, height c, support size n, k, whether it is peaked,
the c-1 bound when it applies and the best failing ratio found.  Rows where
the bound applies but is reached are flagged.
"""

import argparse
import json
import sys
from pathlib import Path

from matroidal import SimplicialComplex
from matroidal.ideals import cover_ideal
from matroidal.resurgence import BoundContext, resurgence_search, upper_bound

DEFAULT_ZOO = Path(__file__).resolve().parent.parent / "tests" / "data" / "matroids.json"


def load(path, max_n):
    for e in json.loads(Path(path).read_text()):
        if 0 < e["ground_set"] <= max_n and e["bases"][0]:
            yield SimplicialComplex(e["ground_set"], frozenset(frozenset(B) for B in e["bases"]))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--zoo", default=str(DEFAULT_ZOO))
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=10)
    ap.add_argument("--r-max", type=int, default=10)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    violations = 0
    print("s  c  n  k  peaked  bound  best    facets")
    for d in load(args.zoo, args.max_n):
        ctx = BoundContext.from_complex(d)
        bound, _ = upper_bound(ctx)
        est = resurgence_search(cover_ideal(d), args.m_max, args.r_max, workers=args.workers)
        best = est.best_ratio
        flag = ""
        if bound is not None and best is not None and best >= bound:
            flag, violations = "  <-- reaches c-1", violations + 1
        print(f"{d.ground_set}  {ctx.c}  {ctx.n}  {ctx.k}  {'yes' if ctx.peaked else 'no ':<6}  "
              f"{bound if bound is not None else '-':<5}  {str(best) if best else '-':<6}  "
              f"{' '.join(''.join(map(str, F)) for F in d.sorted_facets())}{flag}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
