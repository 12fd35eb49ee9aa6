"""Pure-Python Weisfeiler-Leman refinement round.

Reference implementation of the hot kernel; arcschemes._refine_cy is the
compiled drop-in.  Both must produce bit-identical output: new color ids
are assigned by first appearance in a row-major scan of the pair matrix,
and the signature of a pair (u, v) is its old color together with the
sorted multiset of (color(u, w), color(w, v)) over all w, encoded as
color(u, w) * rank + color(w, v).
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def refine_step(colors, rank: int):
    """One refinement round.  Returns (new color matrix, new rank).

    Signatures are grouped through a dict: hashing gives speed, and the
    dict's key comparison confirms equality on the full signature, so a
    hash collision can never merge two distinct signatures.
    """
    rows = [list(r) for r in np.asarray(colors)]
    n = len(rows)
    cols = [tuple(rows[w][v] for w in range(n)) for v in range(n)]
    ids: dict[tuple, int] = {}
    nxt = 0
    out = []
    rng = range(n)
    for u in rng:
        ru = rows[u]
        out_row = []
        for v in rng:
            cv = cols[v]
            sig = sorted(ru[w] * rank + cv[w] for w in rng)
            key = (ru[v], tuple(sig))
            val = ids.get(key)
            if val is None:
                val = nxt
                ids[key] = nxt
                nxt += 1
            out_row.append(val)
        out.append(out_row)
    return np.array(out, dtype=np.int64), nxt
