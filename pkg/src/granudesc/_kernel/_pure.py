"""Portable bitset kernels.

Reference implementations of the two inner loops the package spends its
time in: closure enumeration over a binary relation and inclusion-minimal
union covers.  Masks are plain Python integers, so any context size works;
the compiled twin in ``_fast`` handles the <=64x64 case.
"""

from __future__ import annotations

from collections.abc import Sequence


def formal_concepts(cols: Sequence[int], n_objects: int) -> list[tuple[int, int]]:
    """All (extent mask, intent mask) pairs of the relation given by columns.

    ``cols[j]`` is the object mask of attribute j.  Closed attribute sets
    are enumerated in lectic order, which visits every closure exactly once.
    """
    n = len(cols)
    full_ext = (1 << n_objects) - 1
    if n == 0:
        return [(full_ext, 0)]
    full_int = (1 << n) - 1

    def extent_of(attrs: int) -> int:
        e = full_ext
        a = attrs
        while a:
            low = a & -a
            e &= cols[low.bit_length() - 1]
            a ^= low
        return e

    def intent_of(ext: int) -> int:
        m = 0
        for j in range(n):
            if ext & ~cols[j] == 0:
                m |= 1 << j
        return m

    out: list[tuple[int, int]] = []
    cur = intent_of(full_ext)
    out.append((full_ext, cur))
    while cur != full_int:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if cur & bit:
                cur &= ~bit
            else:
                ext = extent_of(cur | bit)
                nxt = intent_of(ext)
                # lectic successor test: no attribute below i may be new
                if (nxt & ~cur) & (bit - 1) == 0:
                    out.append((ext, nxt))
                    cur = nxt
                    break
        else:  # pragma: no cover - the full attribute set is always closed
            raise RuntimeError("closure enumeration failed to advance")
    return out


def minimal_cover_unions(cands: Sequence[int], target: int, strict: bool = False) -> list[int]:
    """Masks of all inclusion-minimal unions of candidates covering target.

    A union qualifies when it contains ``target``; with ``strict`` it must
    contain it properly.  Result is duplicate-free, sorted by (popcount,
    mask value).  Empty candidates never change a union and are ignored.
    """
    pool = [c for c in cands if c]
    if not strict:
        found = _covering_unions(pool, target)
    else:
        total = 0
        for c in pool:
            total |= c
        found = []
        extra = total & ~target
        while extra:
            low = extra & -extra
            found.extend(_covering_unions(pool, target | low))
            extra ^= low
    return _minimal_antichain(found)


def _covering_unions(pool: list[int], target: int) -> list[int]:
    """All candidate unions containing target that no branch can shrink."""
    if target == 0:
        return [0]
    total = 0
    for c in pool:
        total |= c
    if target & ~total:
        return []
    found: list[int] = []

    def rec(pu: int, avail: list[int]) -> None:
        rem = target & ~pu
        if rem == 0:
            found.append(pu)
            return
        reach = pu
        for c in avail:
            reach |= c
        if rem & ~reach:
            return
        # branch on the uncovered object with the fewest remaining covers
        best_u = -1
        best_cnt = len(avail) + 1
        r = rem
        while r:
            low = r & -r
            u = low.bit_length() - 1
            cnt = 0
            for c in avail:
                if c >> u & 1:
                    cnt += 1
            if cnt < best_cnt:
                best_cnt = cnt
                best_u = u
            r ^= low
        covers = [k for k, c in enumerate(avail) if c >> best_u & 1]
        for pos, k in enumerate(covers):
            # skipping earlier covers of the same object avoids revisits
            banned = set(covers[:pos])
            banned.add(k)
            rec(pu | avail[k], [c for j, c in enumerate(avail) if j not in banned])

    rec(0, pool)
    return found


def _minimal_antichain(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept
