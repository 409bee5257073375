"""Hot numeric kernels: exact coloring, partition counting, canonical forms.

All kernels take dense uint8 adjacency matrices.  By default each function
is compiled with numba's @njit (cache=True); setting CRIT_LAB_BACKEND=numpy
skips compilation and runs the identical code as plain Python over numpy
arrays.  The two paths share this one source, so they cannot drift.

Canonical codes pack the upper-triangle bits in graph6 column order,
big-endian, so a code is also the integer value of the graph6 bit stream.
Codes are int64, which caps canonical-form support at 11 vertices; the
generator never needs more.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

_requested = os.environ.get("CRIT_LAB_BACKEND", "numba").strip().lower() or "numba"
if _requested not in ("numba", "numpy"):
    raise ValueError(f"CRIT_LAB_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

JIT_ENABLED = False
if _requested == "numba":
    try:
        from numba import njit as _njit

        JIT_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        warnings.warn("numba unavailable; falling back to the pure-numpy backend")

BACKEND = "numba" if JIT_ENABLED else "numpy"


def _hot(fn):
    if JIT_ENABLED:
        return _njit(fn, cache=True)
    return fn


_NO_COLORS = np.zeros(0, dtype=np.int8)


@_hot
def pack_code(mat, n):
    """Upper-triangle bits of mat as one integer (graph6 bit order)."""
    acc = np.int64(0)
    for j in range(1, n):
        for i in range(j):
            acc = acc * 2 + mat[i, j]
    return acc


@_hot
def color_decision(mat, n, k):
    """First proper k-coloring in DSATUR order, or an empty array.

    Vertex selection: highest saturation, then highest degree, then lowest
    index.  Colors are tried ascending, capped at one above the highest
    color already in use (sound by color-symmetry).
    """
    if n == 0:
        return np.zeros(0, dtype=np.int8)
    if k <= 0:
        return _NO_COLORS
    k_eff = min(k, n)

    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        s = 0
        for u in range(n):
            s += mat[v, u]
        deg[v] = s

    colors = np.zeros(n, dtype=np.int8)
    cnt = np.zeros((n, k_eff + 1), dtype=np.int16)
    sat = np.zeros(n, dtype=np.int16)
    order = np.full(n, -1, dtype=np.int64)
    maxused = np.zeros(n + 1, dtype=np.int64)

    depth = 0
    while True:
        if depth == n:
            return colors.copy()
        v = order[depth]
        if v < 0:
            best = -1
            best_sat = np.int16(-1)
            best_deg = np.int64(-1)
            for w in range(n):
                if colors[w] == 0:
                    if (
                        sat[w] > best_sat
                        or (sat[w] == best_sat and deg[w] > best_deg)
                    ):
                        best = w
                        best_sat = sat[w]
                        best_deg = deg[w]
            order[depth] = best
            v = best
        c = colors[v]
        if c > 0:
            for u in range(n):
                if mat[v, u]:
                    cnt[u, c] -= 1
                    if cnt[u, c] == 0:
                        sat[u] -= 1
        cap = maxused[depth] + 1
        if cap > k_eff:
            cap = k_eff
        nxt = 0
        for cand in range(c + 1, cap + 1):
            if cnt[v, cand] == 0:
                nxt = cand
                break
        if nxt > 0:
            colors[v] = nxt
            for u in range(n):
                if mat[v, u]:
                    if cnt[u, nxt] == 0:
                        sat[u] += 1
                    cnt[u, nxt] += 1
            if nxt > maxused[depth]:
                maxused[depth + 1] = nxt
            else:
                maxused[depth + 1] = maxused[depth]
            depth += 1
        else:
            colors[v] = 0
            order[depth] = -1
            depth -= 1
            if depth < 0:
                return _NO_COLORS


@_hot
def greedy_clique(mat, n):
    """Greedy clique size over the degree-descending vertex order."""
    if n == 0:
        return 0
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        s = 0
        for u in range(n):
            s += mat[v, u]
        deg[v] = s
    # degree-descending order, ties by index (selection sort keeps it simple)
    order = np.zeros(n, dtype=np.int64)
    taken = np.zeros(n, dtype=np.uint8)
    for idx in range(n):
        best = -1
        best_deg = np.int64(-1)
        for v in range(n):
            if taken[v] == 0 and deg[v] > best_deg:
                best = v
                best_deg = deg[v]
        taken[best] = 1
        order[idx] = best
    clique = np.zeros(n, dtype=np.int64)
    size = 0
    for idx in range(n):
        v = order[idx]
        ok = True
        for i in range(size):
            if mat[v, clique[i]] == 0:
                ok = False
                break
        if ok:
            clique[size] = v
            size += 1
    return size


@_hot
def dsatur_greedy(mat, n):
    """Number of colors used by the greedy DSATUR pass (upper bound)."""
    if n == 0:
        return 0
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        s = 0
        for u in range(n):
            s += mat[v, u]
        deg[v] = s
    colors = np.zeros(n, dtype=np.int64)
    cnt = np.zeros((n, n + 1), dtype=np.int16)
    sat = np.zeros(n, dtype=np.int16)
    used = 0
    for _ in range(n):
        best = -1
        best_sat = np.int16(-1)
        best_deg = np.int64(-1)
        for w in range(n):
            if colors[w] == 0:
                if sat[w] > best_sat or (sat[w] == best_sat and deg[w] > best_deg):
                    best = w
                    best_sat = sat[w]
                    best_deg = deg[w]
        c = 1
        while cnt[best, c] > 0:
            c += 1
        colors[best] = c
        if c > used:
            used = c
        for u in range(n):
            if mat[best, u]:
                if cnt[u, c] == 0:
                    sat[u] += 1
                cnt[u, c] += 1
    return used


@_hot
def chromatic(mat, n):
    """Exact chromatic number: clique bound, DSATUR bound, then bisection."""
    if n == 0:
        return 0
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            e += mat[i, j]
    if e == 0:
        return 1
    lb = greedy_clique(mat, n)
    if lb < 2:
        lb = 2
    ub = dsatur_greedy(mat, n)
    while lb < ub:
        mid = (lb + ub) // 2
        if color_decision(mat, n, mid).shape[0] > 0:
            ub = mid
        else:
            lb = mid + 1
    return lb


@_hot
def count_partitions(mat, n, k, limit):
    """Distinct color partitions reachable with at most k colors.

    Backtracks over vertices in index order; each new color is introduced
    in first-seen order, so every partition is counted exactly once.
    Stops once `limit` partitions are found.
    """
    if n == 0:
        return np.int64(1)
    if k <= 0 or limit <= 0:
        return np.int64(0)
    colors = np.zeros(n, dtype=np.int8)
    maxused = np.zeros(n + 1, dtype=np.int64)
    count = np.int64(0)
    depth = 0
    while True:
        if depth == n:
            count += 1
            if count >= limit:
                return count
            depth -= 1
            continue
        v = depth
        cap = maxused[depth] + 1
        if cap > k:
            cap = k
        found = 0
        for cand in range(colors[v] + 1, cap + 1):
            ok = True
            for u in range(v):
                if mat[v, u] and colors[u] == cand:
                    ok = False
                    break
            if ok:
                found = cand
                break
        if found > 0:
            colors[v] = found
            if found > maxused[depth]:
                maxused[depth + 1] = found
            else:
                maxused[depth + 1] = maxused[depth]
            depth += 1
        else:
            colors[v] = 0
            depth -= 1
            if depth < 0:
                return count


@_hot
def list_partitions(mat, n, k, limit):
    """Like count_partitions but materializes the assignments found."""
    out = np.zeros((limit, n), dtype=np.int8)
    if n == 0 or k <= 0 or limit <= 0:
        return np.int64(0), out
    colors = np.zeros(n, dtype=np.int8)
    maxused = np.zeros(n + 1, dtype=np.int64)
    count = np.int64(0)
    depth = 0
    while True:
        if depth == n:
            for i in range(n):
                out[count, i] = colors[i]
            count += 1
            if count >= limit:
                return count, out
            depth -= 1
            continue
        v = depth
        cap = maxused[depth] + 1
        if cap > k:
            cap = k
        found = 0
        for cand in range(colors[v] + 1, cap + 1):
            ok = True
            for u in range(v):
                if mat[v, u] and colors[u] == cand:
                    ok = False
                    break
            if ok:
                found = cand
                break
        if found > 0:
            colors[v] = found
            if found > maxused[depth]:
                maxused[depth + 1] = found
            else:
                maxused[depth + 1] = maxused[depth]
            depth += 1
        else:
            colors[v] = 0
            depth -= 1
            if depth < 0:
                return count, out


@_hot
def _refine(mat, n, colors):
    """Equitable refinement of an ordered partition, in place.

    Cell order is stable: cells split by neighbour-count signature, with
    the old cell index as the leading key, so isomorphic inputs refine to
    correspondingly ordered partitions.
    """
    keys = np.zeros(n, dtype=np.int64)
    while True:
        ncells = 0
        for v in range(n):
            if colors[v] >= ncells:
                ncells = colors[v] + 1
        for v in range(n):
            key = np.int64(colors[v])
            for c in range(n):
                cnt = 0
                for u in range(n):
                    if mat[v, u] and colors[u] == c:
                        cnt += 1
                key = key * 16 + cnt
            keys[v] = key
        sorted_keys = np.sort(keys.copy())
        new_ncells = 1
        for i in range(1, n):
            if sorted_keys[i] != sorted_keys[i - 1]:
                new_ncells += 1
        for v in range(n):
            # dense rank of keys[v] among the distinct sorted keys
            r = 0
            prev = sorted_keys[0]
            for i in range(1, n):
                if prev == keys[v]:
                    break
                if sorted_keys[i] != prev:
                    r += 1
                    prev = sorted_keys[i]
            colors[v] = r
        if new_ncells == ncells:
            return


@_hot
def canonical_code(mat, n):
    """Canonical form as a packed upper-triangle integer (n <= 11).

    Individualization-refinement search minimizing the packed adjacency
    over all leaf labelings.  Complete and edgeless graphs short-circuit
    (their leaf count would otherwise be n!).
    """
    if n <= 1:
        return np.int64(0)
    nbits = n * (n - 1) // 2
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            e += mat[i, j]
    if e == 0:
        return np.int64(0)
    if e == nbits:
        return (np.int64(1) << nbits) - 1

    colors = np.zeros(n, dtype=np.int8)
    _refine(mat, n, colors)

    st_colors = np.zeros((n + 1, n), dtype=np.int8)
    st_members = np.zeros((n + 1, n), dtype=np.int8)
    st_mcount = np.zeros(n + 1, dtype=np.int64)
    st_mpos = np.zeros(n + 1, dtype=np.int64)
    ptv = np.zeros(n, dtype=np.int64)
    work = np.zeros(n, dtype=np.int8)

    best = np.int64(0x7FFFFFFFFFFFFFFF)

    # seed the stack; a discrete refinement is already a leaf
    ncells = 0
    for v in range(n):
        if colors[v] >= ncells:
            ncells = colors[v] + 1
    if ncells == n:
        for v in range(n):
            ptv[colors[v]] = v
        code = np.int64(0)
        for j in range(1, n):
            for i in range(j):
                code = code * 2 + mat[ptv[i], ptv[j]]
        return code

    depth = 0
    for v in range(n):
        st_colors[0, v] = colors[v]
    target = -1
    for c in range(n):
        sz = 0
        for v in range(n):
            if colors[v] == c:
                sz += 1
        if sz >= 2:
            target = c
            break
    cnt = 0
    for v in range(n):
        if colors[v] == target:
            st_members[0, cnt] = v
            cnt += 1
    st_mcount[0] = cnt
    st_mpos[0] = 0

    while depth >= 0:
        if st_mpos[depth] >= st_mcount[depth]:
            depth -= 1
            continue
        u = st_members[depth, st_mpos[depth]]
        st_mpos[depth] += 1
        cc = st_colors[depth, u]
        for w in range(n):
            base = st_colors[depth, w]
            if base > cc or (base == cc and w != u):
                work[w] = base + 1
            else:
                work[w] = base
        _refine(mat, n, work)
        ncells = 0
        for v in range(n):
            if work[v] >= ncells:
                ncells = work[v] + 1
        if ncells == n:
            for v in range(n):
                ptv[work[v]] = v
            code = np.int64(0)
            for j in range(1, n):
                for i in range(j):
                    code = code * 2 + mat[ptv[i], ptv[j]]
            if code < best:
                best = code
        else:
            depth += 1
            for v in range(n):
                st_colors[depth, v] = work[v]
            target = -1
            for c in range(n):
                sz = 0
                for v in range(n):
                    if work[v] == c:
                        sz += 1
                if sz >= 2:
                    target = c
                    break
            cnt = 0
            for v in range(n):
                if work[v] == target:
                    st_members[depth, cnt] = v
                    cnt += 1
            st_mcount[depth] = cnt
            st_mpos[depth] = 0
    return best


@_hot
def _noncut(mat, n, skip):
    """True when the graph minus vertex `skip` is connected and nonempty."""
    if n <= 1:
        return False
    start = 0 if skip != 0 else 1
    seen = np.zeros(n, dtype=np.uint8)
    stack = np.zeros(n, dtype=np.int64)
    seen[skip] = 1
    seen[start] = 1
    stack[0] = start
    top = 1
    reached = 1
    while top > 0:
        top -= 1
        v = stack[top]
        for u in range(n):
            if mat[v, u] and seen[u] == 0:
                seen[u] = 1
                reached += 1
                stack[top] = u
                top += 1
    return reached == n - 1


@_hot
def _packed_degseq(degs, m):
    """Ascending degree sequence packed 6 bits per entry (m <= 10)."""
    tmp = np.zeros(m, dtype=np.int64)
    for i in range(m):
        tmp[i] = degs[i]
    tmp = np.sort(tmp)
    acc = np.int64(0)
    for i in range(m):
        acc = acc * 64 + tmp[i]
    return acc


@_hot
def children_codes(pmat, np_):
    """Canonical codes of the connected children of one parent graph.

    The parent must be connected and canonically labelled.  A child (parent
    plus a new last vertex joined to a nonempty subset) is accepted exactly
    when no non-cut vertex deletion yields a (degree-sequence, canonical
    code) pair strictly below the parent's own, i.e. when deleting the new
    vertex is the canonical way to shrink the child.  Duplicates arising
    from different subsets of the same parent are removed locally.
    """
    n = np_ + 1
    parent_code = pack_code(pmat, np_)
    pdeg = np.zeros(np_, dtype=np.int64)
    for v in range(np_):
        s = 0
        for u in range(np_):
            s += pmat[v, u]
        pdeg[v] = s
    parent_ds = _packed_degseq(pdeg, np_)

    cm = np.zeros((n, n), dtype=np.uint8)
    for i in range(np_):
        for j in range(np_):
            cm[i, j] = pmat[i, j]
    sub = np.zeros((np_, np_), dtype=np.uint8)
    degc = np.zeros(n, dtype=np.int64)
    dtmp = np.zeros(np_, dtype=np.int64)

    out = np.zeros(1 << np_, dtype=np.int64)
    count = 0
    for s_bits in range(1, 1 << np_):
        ssize = 0
        for u in range(np_):
            b = (s_bits >> u) & 1
            cm[u, np_] = b
            cm[np_, u] = b
            degc[u] = pdeg[u] + b
            ssize += b
        degc[np_] = ssize

        accept = True
        for v in range(np_):
            # degree sequence of child minus v
            idx = 0
            for u in range(n):
                if u != v:
                    dtmp[idx] = degc[u] - cm[u, v]
                    idx += 1
            ds = _packed_degseq(dtmp, np_)
            if ds > parent_ds:
                continue
            if not _noncut(cm, n, v):
                continue
            if ds < parent_ds:
                accept = False
                break
            # tie on degree sequence: full canonical comparison
            ii = 0
            for i in range(n):
                if i == v:
                    continue
                jj = 0
                for j in range(n):
                    if j == v:
                        continue
                    sub[ii, jj] = cm[i, j]
                    jj += 1
                ii += 1
            if canonical_code(sub, np_) < parent_code:
                accept = False
                break
        if accept:
            code = canonical_code(cm, n)
            dup = False
            for i in range(count):
                if out[i] == code:
                    dup = True
                    break
            if not dup:
                out[count] = code
                count += 1
    return count, out
