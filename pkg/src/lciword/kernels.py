"""Hot numeric kernels, in numba and pure-numpy flavors.

Every kernel has a scalar-loop implementation (jitted when numba is on)
and a vectorized numpy implementation computing the identical result.
``IMPLS`` maps kernel name -> {flavor -> callable}; the module-level
names dispatch to the active backend (see _backend.BACKEND).

Conventions shared by the word kernels:
  * letters are integers 1..m stored in int32 arrays;
  * occurrence tables ``occ``/``off`` hold the 1-based positions of each
    letter r in ``occ[off[r]:off[r+1]]``;
  * count tables ``cnt`` have shape (m+1, n+1) with cnt[r, p] = number of
    occurrences of letter r among the first p positions.
"""

import numpy as np

from ._backend import BACKEND, HAVE_NUMBA, njit

# ---------------------------------------------------------------------------
# longest common weakly/strictly increasing subsequence, full DP
#
# Suffix recursion over thresholds a = 1..m (row a-1); row m is an all-zero
# sentinel standing for the unreachable threshold m+1 in strict mode.


def _lci_full_py(x, y, m, strict):
    n1 = x.shape[0]
    n2 = y.shape[0]
    old = np.zeros((m + 1, n2 + 1), np.int32)
    new = np.zeros((m + 1, n2 + 1), np.int32)
    for i in range(n1 - 1, -1, -1):
        c = x[i]
        brow = c if strict else c - 1
        for a0 in range(m):
            allow = (a0 + 1) <= c
            run = np.int32(0)
            for t in range(n2 - 1, -1, -1):
                v = old[a0, t]
                if allow and y[t] == c:
                    b = np.int32(1) + old[brow, t + 1]
                    if b > v:
                        v = b
                if run > v:
                    v = run
                run = v
                new[a0, t] = v
        tmp = old
        old = new
        new = tmp
    return int(old[0, 0])


def _lci_full_np(x, y, m, strict):
    n1 = x.shape[0]
    n2 = y.shape[0]
    old = np.zeros((m + 1, n2 + 1), np.int32)
    y = np.asarray(y)
    for i in range(n1 - 1, -1, -1):
        c = int(x[i])
        brow = c if strict else c - 1
        bon = np.where(y == c, old[brow, 1:] + 1, 0).astype(np.int32)
        new = np.zeros_like(old)
        for a0 in range(m):
            cand = old[a0, :n2]
            if a0 + 1 <= c:
                cand = np.maximum(cand, bon)
            new[a0, :n2] = np.maximum.accumulate(cand[::-1])[::-1]
        old = new
    return int(old[0, 0])


# ---------------------------------------------------------------------------
# banded variant: only cells with |i - j| <= band are computed; the result is
# a lower bound of the full DP, exact whenever the optimal alignment stays
# inside the band.  Band coordinate t = j - i + band in [0, 2*band].
#
# Returns (value, hit): hit is 1 when every optimal decision chain passes a
# cell whose recursion was truncated at the band edge, i.e. when the band
# plausibly binds.  Cells carry the augmented value V = 2*value - flag, so a
# plain max over candidates propagates both the value and the
# "some optimal chain avoids the edge" bit (unflagged wins ties); edge cells
# get V decremented to odd where the omitted neighbor is a real state.


def _lci_banded_py(x, y, m, band, strict):
    n1 = x.shape[0]
    n2 = y.shape[0]
    if n1 == 0 or n2 == 0:
        return 0, np.uint8(0)
    W = 2 * band + 1
    old = np.zeros((m + 1, W), np.int32)
    new = np.zeros((m + 1, W), np.int32)
    for i in range(n1 - 1, -1, -1):
        c = x[i]
        brow = c if strict else c - 1
        lo = i - band
        tlo = max(0, -lo)
        thi = min(W - 1, n2 - 1 - lo)
        seed_top = thi == W - 1 and lo + W < n2
        seed_bot = tlo == 0 and i + 1 < n1
        for a0 in range(m):
            if tlo > thi:
                # the whole band window misses the second word's range
                for t in range(W):
                    new[a0, t] = 0
                continue
            allow = (a0 + 1) <= c
            for t in range(W - 1, thi, -1):
                new[a0, t] = 0
            run = np.int32(0)
            for t in range(thi, tlo - 1, -1):
                j = lo + t
                v = np.int32(0)
                if t >= 1:
                    u = old[a0, t - 1]
                    if u > v:
                        v = u
                if allow and y[j] == c:
                    b = np.int32(2) + old[brow, t]
                    if b > v:
                        v = b
                if run > v:
                    v = run
                if (t == 0 and seed_bot) or (t == W - 1 and seed_top):
                    if (v & 1) == 0:
                        v -= 1
                run = v
                new[a0, t] = v
            for t in range(tlo - 1, -1, -1):
                new[a0, t] = 0
        tmp = old
        old = new
        new = tmp
    V = old[0, band]
    return int((V + (V & 1)) >> 1), np.uint8(V & 1)


def _lci_banded_np(x, y, m, band, strict):
    n1 = x.shape[0]
    n2 = y.shape[0]
    if n1 == 0 or n2 == 0:
        return 0, np.uint8(0)
    W = 2 * band + 1
    old = np.zeros((m + 1, W), np.int32)
    y = np.asarray(y)
    for i in range(n1 - 1, -1, -1):
        c = int(x[i])
        brow = c if strict else c - 1
        lo = i - band
        tlo = max(0, -lo)
        thi = min(W - 1, n2 - 1 - lo)
        seed_top = thi == W - 1 and lo + W < n2
        seed_bot = tlo == 0 and i + 1 < n1
        new = np.zeros((m + 1, W), np.int32)
        if tlo <= thi:
            ts = np.arange(tlo, thi + 1)
            js = lo + ts
            bm = np.where(y[js] == c, old[brow, tlo:thi + 1] + 2, 0).astype(np.int32)
            sx = np.zeros(ts.shape[0], np.int32)
            inner = ts >= 1
            for a0 in range(m):
                sx[inner] = old[a0, ts[inner] - 1]
                cand = np.maximum(sx, bm) if a0 + 1 <= c else sx.copy()
                np.maximum(cand, 0, out=cand)
                if seed_top and (cand[-1] & 1) == 0:
                    cand[-1] -= 1
                v = np.maximum.accumulate(cand[::-1])[::-1]
                if seed_bot and (v[0] & 1) == 0:
                    v[0] -= 1
                new[a0, tlo:thi + 1] = v
        old = new
    V = int(old[0, band])
    return (V + (V & 1)) >> 1, np.uint8(V & 1)


# ---------------------------------------------------------------------------
# max/min representation scan: depth-first enumeration of nested-feasible
# pick vectors (k_1, ..., k_{m-1}) with O(1) incremental extension via the
# occurrence and count tables.  Returns (best value, lexicographically
# smallest maximizer).


def _repr_scan_py(ox, oxo, cx, oy, oyo, cy, m):
    nX = cx.shape[1] - 1
    nY = cy.shape[1] - 1
    mm1 = m - 1
    k = np.zeros(mm1 + 1, np.int64)
    bnd = np.zeros(mm1 + 1, np.int64)
    epx = np.zeros(mm1 + 1, np.int64)
    epy = np.zeros(mm1 + 1, np.int64)
    nsx = np.zeros(mm1 + 1, np.int64)
    nsy = np.zeros(mm1 + 1, np.int64)
    su = np.zeros(mm1 + 1, np.int64)
    bestk = np.zeros(mm1, np.int64)
    best = np.int64(-1)
    NxM = np.int64(cx[m, nX])
    NyM = np.int64(cy[m, nY])
    s = 1
    epx[1] = 0
    epy[1] = 0
    nsx[1] = np.int64(cx[1, 0])
    nsy[1] = np.int64(cy[1, 0])
    b1 = np.int64(cx[1, nX]) - nsx[1]
    b2 = np.int64(cy[1, nY]) - nsy[1]
    bnd[1] = b1 if b1 < b2 else b2
    k[1] = -1
    while s >= 1:
        k[s] += 1
        if k[s] > bnd[s]:
            s -= 1
            continue
        if k[s] == 0:
            qx = epx[s]
            qy = epy[s]
        else:
            qx = np.int64(ox[oxo[s] + nsx[s] + k[s] - 1])
            qy = np.int64(oy[oyo[s] + nsy[s] + k[s] - 1])
        su[s] = su[s - 1] + k[s]
        if s == mm1:
            tx = NxM - np.int64(cx[m, qx])
            ty = NyM - np.int64(cy[m, qy])
            t = tx if tx < ty else ty
            obj = su[s] + t
            if obj > best:
                best = obj
                for q in range(mm1):
                    bestk[q] = k[q + 1]
        else:
            s += 1
            epx[s] = qx
            epy[s] = qy
            nsx[s] = np.int64(cx[s, qx])
            nsy[s] = np.int64(cy[s, qy])
            b1 = np.int64(cx[s, nX]) - nsx[s]
            b2 = np.int64(cy[s, nY]) - nsy[s]
            bnd[s] = b1 if b1 < b2 else b2
            k[s] = -1
    return best, bestk


def _repr_scan_np(ox, oxo, cx, oy, oyo, cy, m):
    nX = cx.shape[1] - 1
    nY = cy.shape[1] - 1
    mm1 = m - 1
    tailx = int(cx[m, nX]) - cx[m].astype(np.int64)
    taily = int(cy[m, nY]) - cy[m].astype(np.int64)
    best = -1
    bestk = np.zeros(mm1, np.int64)
    kcur = np.zeros(mm1, np.int64)

    def stage(s, px, py, acc):
        nonlocal best, bestk
        ns_x = int(cx[s, px])
        ns_y = int(cy[s, py])
        bound = min(int(cx[s, nX]) - ns_x, int(cy[s, nY]) - ns_y)
        if s == mm1:
            posx = np.empty(bound + 1, np.int64)
            posx[0] = px
            posx[1:] = ox[oxo[s] + ns_x:oxo[s] + ns_x + bound]
            posy = np.empty(bound + 1, np.int64)
            posy[0] = py
            posy[1:] = oy[oyo[s] + ns_y:oyo[s] + ns_y + bound]
            obj = acc + np.arange(bound + 1) + np.minimum(tailx[posx], taily[posy])
            j = int(np.argmax(obj))
            if obj[j] > best:
                best = int(obj[j])
                kcur[s - 1] = j
                bestk = kcur.copy()
            return
        for ki in range(bound + 1):
            if ki == 0:
                qx, qy = px, py
            else:
                qx = int(ox[oxo[s] + ns_x + ki - 1])
                qy = int(oy[oyo[s] + ns_y + ki - 1])
            kcur[s - 1] = ki
            stage(s + 1, qx, qy, acc + ki)

    stage(1, 0, 0, 0)
    return np.int64(best), bestk


# ---------------------------------------------------------------------------
# last-passage times
#
# lpp_unit2: corner-to-corner over a dense 2D array with unit North/East
# steps; every visited cell contributes its weight.


def _lpp_unit2_py(w):
    n1, n2 = w.shape
    if n1 == 0 or n2 == 0:
        return 0.0
    prev = np.zeros(n2, np.float64)
    cur = np.zeros(n2, np.float64)
    for i in range(n1):
        for j in range(n2):
            if i == 0 and j == 0:
                base = 0.0
            elif i == 0:
                base = cur[j - 1]
            elif j == 0:
                base = prev[j]
            else:
                base = prev[j] if prev[j] > cur[j - 1] else cur[j - 1]
            cur[j] = w[i, j] + base
        tmp = prev
        prev = cur
        cur = tmp
    return float(prev[n2 - 1])


def _lpp_unit2_np(w):
    n1, n2 = w.shape
    if n1 == 0 or n2 == 0:
        return 0.0
    T = np.zeros((n1, n2))
    for d in range(n1 + n2 - 1):
        i0 = max(0, d - n2 + 1)
        i1 = min(n1 - 1, d)
        ii = np.arange(i0, i1 + 1)
        jj = d - ii
        up = np.where(ii > 0, T[np.maximum(ii - 1, 0), jj], -np.inf)
        lf = np.where(jj > 0, T[ii, np.maximum(jj - 1, 0)], -np.inf)
        base = np.maximum(up, lf)
        if d == 0:
            base = np.zeros(1)
        T[ii, jj] = w[ii, jj] + base
    return float(T[n1 - 1, n2 - 1])


# level/jump semantics: paths climb one level at a time or jump horizontally
# with every horizontal coordinate strictly increasing; the start column
# (0,...,0,level) is a free entry point and the endpoint is free (for p >= 2
# a fixed far-corner endpoint would be unreachable from matches on the far
# faces, since jumps must advance every coordinate).  Weights at the start
# column are never read.  lpp_jumpP takes an array of shape
# (n_1+1, ..., n_p+1, m) and returns the best path weight over all cells.


def _lpp_jump1_py(w):
    n1 = w.shape[0] - 1
    m = w.shape[1]
    if m == 0:
        return 0.0
    if n1 == 0:
        return 0.0
    best = 0.0
    below = np.zeros(n1 + 1, np.float64)
    cur = np.zeros(n1 + 1, np.float64)
    for k in range(m):
        run = 0.0
        for i in range(1, n1 + 1):
            b = below[i]
            if run > b:
                b = run
            v = w[i, k] + b
            cur[i] = v
            if v > run:
                run = v
        if run > best:
            best = run
        tmp = below
        below = cur
        cur = tmp
    return float(best)


def _lpp_jump1_np(w):
    n1 = w.shape[0] - 1
    m = w.shape[1]
    if m == 0 or n1 == 0:
        return 0.0
    best = 0.0
    below = np.zeros(n1 + 1)
    for k in range(m):
        # the strict prefix maximum is a sequential scan along the single
        # horizontal axis; levels are cheap so the python loop stays here
        cur = np.zeros(n1 + 1)
        run = 0.0
        vals = w[1:, k]
        for i in range(1, n1 + 1):
            base = below[i] if below[i] > run else run
            v = vals[i - 1] + base
            cur[i] = v
            if v > run:
                run = v
        best = max(best, run)
        below = cur
    return float(best)


def _lpp_jump2_py(w):
    n1 = w.shape[0] - 1
    n2 = w.shape[1] - 1
    m = w.shape[2]
    if m == 0 or n1 == 0 or n2 == 0:
        return 0.0
    best = 0.0
    below = np.zeros((n1 + 1, n2 + 1), np.float64)
    cur = np.zeros((n1 + 1, n2 + 1), np.float64)
    pm = np.zeros(n2 + 1, np.float64)
    for k in range(m):
        for j in range(n2 + 1):
            pm[j] = 0.0
        for i in range(1, n1 + 1):
            for j in range(1, n2 + 1):
                b = below[i, j]
                if pm[j - 1] > b:
                    b = pm[j - 1]
                cur[i, j] = w[i, j, k] + b
            # fold row i into the strict prefix maxima
            run = 0.0
            for j in range(1, n2 + 1):
                if cur[i, j] > run:
                    run = cur[i, j]
                if run > pm[j]:
                    pm[j] = run
        if pm[n2] > best:
            best = pm[n2]
        tmp = below
        below = cur
        cur = tmp
    return float(best)


def _lpp_jump2_np(w):
    n1 = w.shape[0] - 1
    n2 = w.shape[1] - 1
    m = w.shape[2]
    if m == 0 or n1 == 0 or n2 == 0:
        return 0.0
    best = 0.0
    below = np.zeros((n1 + 1, n2 + 1))
    for k in range(m):
        cur = np.zeros((n1 + 1, n2 + 1))
        pm = np.zeros(n2 + 1)
        for i in range(1, n1 + 1):
            cur[i, 1:] = w[i, 1:, k] + np.maximum(below[i, 1:], pm[:-1])
            np.maximum(pm[1:], np.maximum.accumulate(cur[i, 1:]), out=pm[1:])
        best = max(best, float(pm[n2]))
        below = cur
    return float(best)


def _lpp_jump3_py(w):
    n1 = w.shape[0] - 1
    n2 = w.shape[1] - 1
    n3 = w.shape[2] - 1
    m = w.shape[3]
    if m == 0 or n1 == 0 or n2 == 0 or n3 == 0:
        return 0.0
    best = 0.0
    below = np.zeros((n1 + 1, n2 + 1, n3 + 1), np.float64)
    cur = np.zeros((n1 + 1, n2 + 1, n3 + 1), np.float64)
    pm = np.zeros((n2 + 1, n3 + 1), np.float64)
    for k in range(m):
        for a in range(n2 + 1):
            for b in range(n3 + 1):
                pm[a, b] = 0.0
        for i1 in range(1, n1 + 1):
            for i2 in range(1, n2 + 1):
                for i3 in range(1, n3 + 1):
                    b = below[i1, i2, i3]
                    if pm[i2 - 1, i3 - 1] > b:
                        b = pm[i2 - 1, i3 - 1]
                    cur[i1, i2, i3] = w[i1, i2, i3, k] + b
            # fold slab i1 into pm with a 2D cumulative maximum
            for i2 in range(1, n2 + 1):
                run = 0.0
                for i3 in range(1, n3 + 1):
                    if cur[i1, i2, i3] > run:
                        run = cur[i1, i2, i3]
                    v = pm[i2 - 1, i3]
                    if run > v:
                        v = run
                    if v > pm[i2, i3]:
                        pm[i2, i3] = v
        if pm[n2, n3] > best:
            best = pm[n2, n3]
        tmp = below
        below = cur
        cur = tmp
    return float(best)


def _lpp_jump3_np(w):
    n1 = w.shape[0] - 1
    n2 = w.shape[1] - 1
    n3 = w.shape[2] - 1
    m = w.shape[3]
    if m == 0 or n1 == 0 or n2 == 0 or n3 == 0:
        return 0.0
    best = 0.0
    below = np.zeros((n1 + 1, n2 + 1, n3 + 1))
    for k in range(m):
        cur = np.zeros((n1 + 1, n2 + 1, n3 + 1))
        pm = np.zeros((n2 + 1, n3 + 1))
        for i1 in range(1, n1 + 1):
            cur[i1, 1:, 1:] = w[i1, 1:, 1:, k] + np.maximum(below[i1, 1:, 1:], pm[:-1, :-1])
            slab = np.maximum.accumulate(np.maximum.accumulate(cur[i1, 1:, 1:], axis=0), axis=1)
            np.maximum(pm[1:, 1:], slab, out=pm[1:, 1:])
        best = max(best, float(pm[n2, n3]))
        below = cur
    return float(best)


# ---------------------------------------------------------------------------
# chamber maximization: max over 0 <= g_1 <= ... <= g_d <= G of
# min_j (c_j + sum_i D_j[i, g_i]), the discretized max/min functional.


def _chamber_max_py(c0, c1, D0, D1):
    d = D0.shape[0]
    G = D0.shape[1] - 1
    if d == 0:
        return c0 if c0 < c1 else c1
    g = np.zeros(d + 1, np.int64)
    p0 = np.zeros(d + 1, np.float64)
    p1 = np.zeros(d + 1, np.float64)
    p0[0] = c0
    p1[0] = c1
    best = -1e300
    s = 1
    g[1] = -1
    while s >= 1:
        g[s] += 1
        if g[s] > G:
            s -= 1
            continue
        p0[s] = p0[s - 1] + D0[s - 1, g[s]]
        p1[s] = p1[s - 1] + D1[s - 1, g[s]]
        if s == d:
            v = p0[s] if p0[s] < p1[s] else p1[s]
            if v > best:
                best = v
        else:
            s += 1
            g[s] = g[s - 1] - 1
    return best


def _chamber_max_np(c0, c1, D0, D1):
    d = D0.shape[0]
    G = D0.shape[1] - 1
    if d == 0:
        return float(min(c0, c1))
    best = -np.inf

    def stage(s, gprev, a0, a1):
        nonlocal best
        if s == d:
            v = np.minimum(a0 + D0[s - 1, gprev:], a1 + D1[s - 1, gprev:]).max()
            if v > best:
                best = v
            return
        for gi in range(gprev, G + 1):
            stage(s + 1, gi, a0 + D0[s - 1, gi], a1 + D1[s - 1, gi])

    stage(1, 0, float(c0), float(c1))
    return float(best)


# ---------------------------------------------------------------------------
# batched sequential letter collection (star counts) over a matrix of words


def _star_batch_py(words, k, m):
    B, n = words.shape
    mm1 = m - 1
    nstar = np.zeros((B, mm1), np.int64)
    R = np.zeros(B, np.int64)
    feas = np.ones(B, np.bool_)
    seen = np.zeros(m + 1, np.int64)
    for b in range(B):
        for r in range(m + 1):
            seen[r] = 0
        pos = 0
        ok = True
        for i in range(1, m):
            nstar[b, i - 1] = seen[i]
            ki = k[i - 1]
            if ki > 0:
                got = 0
                while got < ki and pos < n:
                    c = words[b, pos]
                    seen[c] += 1
                    if c == i:
                        got += 1
                    pos += 1
                if got < ki:
                    ok = False
                    break
        if ok:
            R[b] = seen[m]
        feas[b] = ok
    return nstar, R, feas


def _star_batch_np(words, k, m):
    B, n = words.shape
    mm1 = m - 1
    nstar = np.zeros((B, mm1), np.int64)
    Rv = np.zeros(B, np.int64)
    alive = np.ones(B, np.bool_)
    pos = np.zeros(B, np.int64)
    cum = {}
    for r in range(1, m + 1):
        c = np.zeros((B, n + 1), np.int64)
        np.cumsum(words == r, axis=1, dtype=np.int64, out=c[:, 1:])
        cum[r] = c
    rows = np.arange(B)
    for i in range(1, m):
        ns = cum[i][rows, pos]
        nstar[alive, i - 1] = ns[alive]
        ki = int(k[i - 1])
        if ki == 0:
            continue
        target = ns + ki
        have = cum[i][:, n] >= target
        newalive = alive & have
        newpos = np.argmax(cum[i] >= target[:, None], axis=1)
        pos = np.where(newalive, newpos, pos)
        alive = newalive
    Rv[alive] = cum[m][rows, pos][alive]
    return nstar, Rv, alive


# ---------------------------------------------------------------------------
# backend registry and dispatch

IMPLS = {
    "lci_full": {"numpy": _lci_full_np},
    "lci_banded": {"numpy": _lci_banded_np},
    "repr_scan": {"numpy": _repr_scan_np},
    "lpp_unit2": {"numpy": _lpp_unit2_np},
    "lpp_jump1": {"numpy": _lpp_jump1_np},
    "lpp_jump2": {"numpy": _lpp_jump2_np},
    "lpp_jump3": {"numpy": _lpp_jump3_np},
    "chamber_max": {"numpy": _chamber_max_np},
    "star_batch": {"numpy": _star_batch_np},
}

if HAVE_NUMBA:
    IMPLS["lci_full"]["numba"] = njit(cache=True)(_lci_full_py)
    IMPLS["lci_banded"]["numba"] = njit(cache=True)(_lci_banded_py)
    IMPLS["repr_scan"]["numba"] = njit(cache=True)(_repr_scan_py)
    IMPLS["lpp_unit2"]["numba"] = njit(cache=True)(_lpp_unit2_py)
    IMPLS["lpp_jump1"]["numba"] = njit(cache=True)(_lpp_jump1_py)
    IMPLS["lpp_jump2"]["numba"] = njit(cache=True)(_lpp_jump2_py)
    IMPLS["lpp_jump3"]["numba"] = njit(cache=True)(_lpp_jump3_py)
    IMPLS["chamber_max"]["numba"] = njit(cache=True)(_chamber_max_py)
    IMPLS["star_batch"]["numba"] = njit(cache=True)(_star_batch_py)

lci_full = IMPLS["lci_full"][BACKEND]
lci_banded = IMPLS["lci_banded"][BACKEND]
repr_scan = IMPLS["repr_scan"][BACKEND]
lpp_unit2 = IMPLS["lpp_unit2"][BACKEND]
lpp_jump1 = IMPLS["lpp_jump1"][BACKEND]
lpp_jump2 = IMPLS["lpp_jump2"][BACKEND]
lpp_jump3 = IMPLS["lpp_jump3"][BACKEND]
chamber_max = IMPLS["chamber_max"][BACKEND]
star_batch = IMPLS["star_batch"][BACKEND]
