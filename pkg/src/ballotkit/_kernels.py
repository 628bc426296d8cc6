"""Hot enumeration kernels: plain-Python source, optionally numba-compiled.

Every kernel is written once as a loop over numpy int64 arrays.  When numba
is importable and the environment variable BALLOTKIT_NUMBA is not set to
0/false/off, the public names are the ``@njit``-compiled versions; otherwise
they are the same functions run by the interpreter.  Both variants stay
importable (``*_py`` / ``*_jit``) so the benchmark can compare them.

Kernels only understand pattern sets in which every pattern has length 3,
encoded as a 6-bit mask over the lexicographic pattern order
123, 132, 213, 231, 312, 321.  Callers route other sets to the generic
pure-Python paths in ``enumeration``.

There are three kernels:

- ``pruned_fill``: depth-first search over value choices, emitting complete
  permutations in lexicographic order.  A prefix is abandoned as soon as it
  has more descents than ascents (when the ballot flag is set) or a new
  element completes a forbidden triple; both conditions are monotone, so no
  valid permutation is lost.
- ``pruned_count``: tally-only search over *standardized* prefixes (value
  ranks rather than concrete values).  Distinct value choices with the same
  relative order are explored once, which removes a binomial factor from the
  tree and makes counts at n = 20 cheap.
- ``oracle_fill``: filter every permutation of 1..n in lexicographic order.
  Deliberately free of pruning; this is the independent reference the pruned
  paths are validated against.
"""
from __future__ import annotations

import os

import numpy as np


def _pruned_fill_impl(n, mask, ballot_req, first):
    """Members of the class at length n as an (m, n) int64 array, lex order.

    ``first`` > 0 restricts position 0 to that value (search-tree partition).
    """
    cap = 256
    out = np.empty((cap, n), dtype=np.int64)
    total = 0
    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n + 1, dtype=np.bool_)
    asc = np.zeros(n + 1, dtype=np.int64)
    desc = np.zeros(n + 1, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    depth = 0
    cand[0] = first if first > 0 else 1
    hi0 = first if first > 0 else n
    while depth >= 0:
        v = cand[depth]
        cand[depth] += 1
        if v > n or (depth == 0 and v > hi0):
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = False
            continue
        if used[v]:
            continue
        a = asc[depth]
        d = desc[depth]
        if depth > 0:
            if perm[depth - 1] < v:
                a += 1
            else:
                d += 1
            if ballot_req and d > a:
                continue
        if mask != 0 and depth >= 2:
            bad = False
            for j in range(depth - 1, 0, -1):
                y = perm[j]
                for i in range(j - 1, -1, -1):
                    x = perm[i]
                    if x < y:
                        if y < v:
                            idx = 0  # 123
                        elif v < x:
                            idx = 3  # 231
                        else:
                            idx = 1  # 132
                    else:
                        if v > x:
                            idx = 2  # 213
                        elif v < y:
                            idx = 5  # 321
                        else:
                            idx = 4  # 312
                    if (mask >> idx) & 1:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue
        perm[depth] = v
        if depth == n - 1:
            if total == cap:
                newcap = cap * 2
                grown = np.empty((newcap, n), dtype=np.int64)
                grown[:cap] = out
                out = grown
                cap = newcap
            out[total, :] = perm
            total += 1
            continue
        used[v] = True
        asc[depth + 1] = a
        desc[depth + 1] = d
        depth += 1
        cand[depth] = 1
    return out[:total]


def _pruned_count_impl(n, mask, ballot_req):
    """|class at length n| by DFS over standardized prefixes (rank insertions)."""
    if n == 0:
        return 1
    pre = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    asc = np.zeros(n + 1, dtype=np.int64)
    desc = np.zeros(n + 1, dtype=np.int64)
    total = 0
    depth = 0
    cand[0] = 1
    while depth >= 0:
        r = cand[depth]
        cand[depth] += 1
        if r > depth + 1:
            depth -= 1
            if depth >= 0:
                # undo the insertion made when this depth was entered
                rr = pre[depth]
                for i in range(depth):
                    if pre[i] > rr:
                        pre[i] -= 1
            continue
        a = asc[depth]
        d = desc[depth]
        if depth > 0:
            if pre[depth - 1] < r:
                a += 1
            else:
                d += 1
            if ballot_req and d > a:
                continue
        if mask != 0 and depth >= 2:
            # classify (x, y, r) against the post-insertion values: an entry
            # >= r sits above the new element once shifted, < r below it
            bad = False
            for j in range(depth - 1, 0, -1):
                y = pre[j]
                y_hi = y >= r
                for i in range(j - 1, -1, -1):
                    x = pre[i]
                    x_hi = x >= r
                    if not x_hi and not y_hi:
                        idx = 0 if x < y else 2   # 123 / 213
                    elif x_hi and y_hi:
                        idx = 3 if x < y else 5   # 231 / 321
                    elif y_hi:
                        idx = 1                   # 132
                    else:
                        idx = 4                   # 312
                    if (mask >> idx) & 1:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue
        if depth == n - 1:
            total += 1
            continue
        for i in range(depth):
            if pre[i] >= r:
                pre[i] += 1
        pre[depth] = r
        asc[depth + 1] = a
        desc[depth + 1] = d
        depth += 1
        cand[depth] = 1
    return total


def _oracle_fill_impl(n, mask, ballot_req, first):
    """Filter all n! permutations (or the (n-1)! block starting with ``first``)."""
    cap = 256
    out = np.empty((cap, n), dtype=np.int64)
    total = 0
    perm = np.empty(n, dtype=np.int64)
    if first > 0:
        perm[0] = first
        k = 1
        for v in range(1, n + 1):
            if v != first:
                perm[k] = v
                k += 1
        lo = 1
    else:
        for i in range(n):
            perm[i] = i + 1
        lo = 0
    while True:
        ok = True
        if ballot_req:
            a = 0
            d = 0
            for i in range(n - 1):
                if perm[i] < perm[i + 1]:
                    a += 1
                else:
                    d += 1
                if d > a:
                    ok = False
                    break
        if ok and mask != 0:
            for k in range(2, n):
                v = perm[k]
                for j in range(k - 1, 0, -1):
                    y = perm[j]
                    for i in range(j - 1, -1, -1):
                        x = perm[i]
                        if x < y:
                            if y < v:
                                idx = 0
                            elif v < x:
                                idx = 3
                            else:
                                idx = 1
                        else:
                            if v > x:
                                idx = 2
                            elif v < y:
                                idx = 5
                            else:
                                idx = 4
                        if (mask >> idx) & 1:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            if total == cap:
                newcap = cap * 2
                grown = np.empty((newcap, n), dtype=np.int64)
                grown[:cap] = out
                out = grown
                cap = newcap
            out[total, :] = perm
            total += 1
        # next permutation of perm[lo:], in place
        i = n - 2
        while i >= lo and perm[i] >= perm[i + 1]:
            i -= 1
        if i < lo:
            break
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        left = i + 1
        right = n - 1
        while left < right:
            perm[left], perm[right] = perm[right], perm[left]
            left += 1
            right -= 1
    return out[:total]


pruned_fill_py = _pruned_fill_impl
pruned_count_py = _pruned_count_impl
oracle_fill_py = _oracle_fill_impl

_env = os.environ.get("BALLOTKIT_NUMBA", "").strip().lower()
_disabled = _env in ("0", "false", "off", "no")

try:
    if _disabled:
        raise ImportError("numba disabled via BALLOTKIT_NUMBA")
    from numba import njit

    pruned_fill_jit = njit(cache=True, nogil=True)(_pruned_fill_impl)
    pruned_count_jit = njit(cache=True, nogil=True)(_pruned_count_impl)
    oracle_fill_jit = njit(cache=True, nogil=True)(_oracle_fill_impl)
    NUMBA_ENABLED = True
except ImportError:
    pruned_fill_jit = None
    pruned_count_jit = None
    oracle_fill_jit = None
    NUMBA_ENABLED = False

if NUMBA_ENABLED:
    pruned_fill = pruned_fill_jit
    pruned_count = pruned_count_jit
    oracle_fill = oracle_fill_jit
else:
    pruned_fill = pruned_fill_py
    pruned_count = pruned_count_py
    oracle_fill = oracle_fill_py


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"
