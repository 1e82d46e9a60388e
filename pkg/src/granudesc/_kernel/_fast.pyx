# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for contexts up to 64 objects and 64 attributes.

Mirrors ``_pure`` exactly: same algorithms, same output order.  The
dispatch layer guarantees every mask fits in one machine word.
"""

from libc.stdint cimport uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t v) nogil:
    return __builtin_popcountll(v)


cdef inline int _lowest_bit(uint64_t v) nogil:
    cdef int i = 0
    while not (v >> i) & 1:
        i += 1
    return i


def formal_concepts(cols, int n_objects):
    """All (extent mask, intent mask) pairs, closed sets in lectic order."""
    cdef int n = len(cols)
    cdef uint64_t c_cols[64]
    cdef int j, i
    for j in range(n):
        c_cols[j] = cols[j]
    cdef uint64_t full_ext = ~(<uint64_t>0) if n_objects >= 64 else ((<uint64_t>1 << n_objects) - 1)
    out = []
    if n == 0:
        out.append((full_ext, 0))
        return out
    cdef uint64_t full_int = ~(<uint64_t>0) if n >= 64 else ((<uint64_t>1 << n) - 1)

    cdef uint64_t cur = 0, ext, nxt, bit, rest
    for j in range(n):
        if full_ext & ~c_cols[j] == 0:
            cur |= <uint64_t>1 << j
    out.append((full_ext, cur))
    while cur != full_int:
        for i in range(n - 1, -1, -1):
            bit = <uint64_t>1 << i
            if cur & bit:
                cur &= ~bit
            else:
                ext = full_ext
                rest = cur | bit
                while rest:
                    ext &= c_cols[_lowest_bit(rest)]
                    rest &= rest - 1
                nxt = 0
                for j in range(n):
                    if ext & ~c_cols[j] == 0:
                        nxt |= <uint64_t>1 << j
                if (nxt & ~cur) & (bit - 1) == 0:
                    out.append((ext, nxt))
                    cur = nxt
                    break
        else:
            raise RuntimeError("closure enumeration failed to advance")
    return out


cdef void _rec_cover(uint64_t pu, uint64_t* avail, int n_avail,
                     uint64_t target, list found):
    cdef uint64_t rem = target & ~pu
    cdef uint64_t reach, low
    cdef uint64_t nxt[64]
    cdef int k, m, u, best_u, best_cnt, cnt, pos
    if rem == 0:
        found.append(pu)
        return
    reach = pu
    for k in range(n_avail):
        reach |= avail[k]
    if rem & ~reach:
        return
    best_u = -1
    best_cnt = n_avail + 1
    while rem:
        low = rem & (~rem + 1)
        u = _lowest_bit(low)
        cnt = 0
        for k in range(n_avail):
            if (avail[k] >> u) & 1:
                cnt += 1
        if cnt < best_cnt:
            best_cnt = cnt
            best_u = u
        rem ^= low
    # branch over the covers of best_u; earlier covers are excluded from
    # later branches so no union is explored twice
    for pos in range(n_avail):
        if not (avail[pos] >> best_u) & 1:
            continue
        m = 0
        for k in range(n_avail):
            if k == pos:
                continue
            if k < pos and (avail[k] >> best_u) & 1:
                continue
            nxt[m] = avail[k]
            m += 1
        _rec_cover(pu | avail[pos], nxt, m, target, found)


def minimal_cover_unions(cands, target, bint strict=False):
    """Masks of all inclusion-minimal candidate unions covering target."""
    cdef uint64_t c_target = target
    cdef uint64_t pool[64]
    cdef int n = 0
    cdef uint64_t total = 0, extra, low
    for c in cands:
        if c:
            pool[n] = c
            n += 1
            total |= <uint64_t>c
    found = []
    if not strict:
        if c_target == 0:
            found.append(0)
        elif c_target & ~total == 0:
            _rec_cover(0, pool, n, c_target, found)
    else:
        extra = total & ~c_target
        while extra:
            low = extra & (~extra + 1)
            _rec_cover(0, pool, n, c_target | low, found)
            extra ^= low
    uniq = sorted(set(found), key=_sort_key)
    kept = []
    for m in uniq:
        if not any((k & ~m) == 0 for k in kept):
            kept.append(m)
    return kept


def _sort_key(m):
    return (_popcount(m), m)
