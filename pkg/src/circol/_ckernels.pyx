# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; mirrors ``circol._pykernels`` exactly."""

from libc.stdlib cimport malloc, calloc, free

NAME = "cython"


cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


cdef struct Work:
    int *on_path
    int *mark
    int *disc
    int *low
    int *parent
    int *blk
    int *size
    int *vstack
    int *fv
    int *fi
    int epoch


cdef int alloc_work(Work *w, int n) except -1:
    w.on_path = <int *>calloc(n + 1, sizeof(int))
    w.mark = <int *>calloc(n + 1, sizeof(int))
    w.disc = <int *>calloc(n + 1, sizeof(int))
    w.low = <int *>calloc(n + 1, sizeof(int))
    w.parent = <int *>calloc(n + 1, sizeof(int))
    w.blk = <int *>calloc(n + 1, sizeof(int))
    w.size = <int *>calloc(n + 2, sizeof(int))
    w.vstack = <int *>calloc(n + 1, sizeof(int))
    w.fv = <int *>calloc(n + 1, sizeof(int))
    w.fi = <int *>calloc(n + 1, sizeof(int))
    w.epoch = 0
    if (not w.on_path or not w.mark or not w.disc or not w.low or not w.parent
            or not w.blk or not w.size or not w.vstack or not w.fv or not w.fi):
        free_work(w)
        raise MemoryError()
    return 0


cdef void free_work(Work *w) noexcept:
    free(w.on_path)
    free(w.mark)
    free(w.disc)
    free(w.low)
    free(w.parent)
    free(w.blk)
    free(w.size)
    free(w.vstack)
    free(w.fv)
    free(w.fi)


cdef int block_bound(int s, int u, const int[::1] indptr, const int[::1] indices,
                     Work *wk) noexcept nogil:
    cdef int epoch = wk.epoch
    cdef int counter = 0, nblocks = 0, top = 0, sp = 0
    cdef int v, i, end, x, p, popped, total, count, last, b, pushed
    wk.mark[s] = epoch
    wk.disc[s] = 0
    wk.low[s] = 0
    wk.parent[s] = -1
    wk.vstack[sp] = s
    sp += 1
    wk.fv[0] = s
    wk.fi[0] = indptr[s]
    top = 1
    while top > 0:
        v = wk.fv[top - 1]
        i = wk.fi[top - 1]
        end = indptr[v + 1]
        pushed = 0
        while i < end:
            x = indices[i]
            i += 1
            if x != u and x != s and (x < s or wk.on_path[x]):
                continue
            if wk.mark[x] != epoch:
                wk.fi[top - 1] = i
                counter += 1
                wk.mark[x] = epoch
                wk.disc[x] = counter
                wk.low[x] = counter
                wk.parent[x] = v
                wk.vstack[sp] = x
                sp += 1
                wk.fv[top] = x
                wk.fi[top] = indptr[x]
                top += 1
                pushed = 1
                break
            if x != wk.parent[v] and wk.disc[x] < wk.low[v]:
                wk.low[v] = wk.disc[x]
        if pushed:
            continue
        top -= 1
        p = wk.parent[v]
        if p < 0:
            break
        if wk.low[v] < wk.low[p]:
            wk.low[p] = wk.low[v]
        if wk.low[v] >= wk.disc[p]:
            popped = 0
            while True:
                sp -= 1
                x = wk.vstack[sp]
                wk.blk[x] = nblocks
                popped += 1
                if x == v:
                    break
            wk.size[nblocks] = popped + 1
            nblocks += 1
    if wk.mark[u] != epoch:
        return -1
    total = 0
    count = 0
    last = -1
    x = u
    while x != s:
        b = wk.blk[x]
        if b != last:
            total += wk.size[b]
            count += 1
            last = b
        x = wk.parent[x]
    return total - (count - 1)


def longest_cycle(int n, const int[::1] indptr, const int[::1] indices, int target=0,
                  int anchors=-1):
    """Longest (or first ``>= target``) canonical cycle; see the Python twin."""
    cdef Work wk
    cdef int *path
    cdef int *ptrs
    cdef int *best
    cdef int best_len = 0, depth, s, u, i, x, length, reach, most, prune, found = 0
    cdef int last_anchor = n if anchors < 0 or anchors > n else anchors
    if n <= 0:
        return None
    alloc_work(&wk, n)
    path = <int *>malloc((n + 1) * sizeof(int))
    ptrs = <int *>malloc((n + 1) * sizeof(int))
    best = <int *>malloc((n + 1) * sizeof(int))
    if not path or not ptrs or not best:
        free(path)
        free(ptrs)
        free(best)
        free_work(&wk)
        raise MemoryError()
    try:
        with nogil:
            for s in range(last_anchor):
                if target:
                    if n - s < target:
                        break
                elif n - s <= best_len:
                    break
                path[0] = s
                ptrs[0] = indptr[s]
                depth = 1
                wk.on_path[s] = 1
                while depth > 0:
                    u = path[depth - 1]
                    i = ptrs[depth - 1]
                    if i == indptr[u + 1]:
                        depth -= 1
                        wk.on_path[u] = 0
                        continue
                    x = indices[i]
                    ptrs[depth - 1] = i + 1
                    if x == s:
                        length = depth
                        if length >= 3 and path[1] < u:
                            if target:
                                if length >= target:
                                    for i in range(length):
                                        best[i] = path[i]
                                    best_len = length
                                    found = 1
                                    break
                            elif length > best_len:
                                for i in range(length):
                                    best[i] = path[i]
                                best_len = length
                                if length == n - s:
                                    found = 1
                                    break
                        continue
                    if x < s or wk.on_path[x]:
                        continue
                    path[depth] = x
                    depth += 1
                    wk.on_path[x] = 1
                    wk.epoch += 1
                    reach = block_bound(s, x, indptr, indices, &wk)
                    most = depth + reach - 2
                    if target:
                        prune = reach < 0 or most < target
                    else:
                        prune = reach < 0 or most <= best_len
                    if prune:
                        depth -= 1
                        wk.on_path[x] = 0
                        continue
                    ptrs[depth - 1] = indptr[x]
                if found:
                    break
                wk.on_path[s] = 0
        if best_len == 0:
            return None
        return [best[i] for i in range(best_len)]
    finally:
        free(path)
        free(ptrs)
        free(best)
        free_work(&wk)


def longest_path_order(int n, const int[::1] indptr, const int[::1] indices):
    """Maximum number of vertices on a simple path."""
    cdef int *comp
    cdef int *comp_size
    cdef int *queue
    cdef int *seen
    cdef int *on_path
    cdef int *path
    cdef int *ptrs
    cdef int ncomp = 0, r, head, tail, v, j, w, best = 1, largest = 0
    cdef int s, depth, u, i, epoch = 0
    if n <= 0:
        return 0
    comp = <int *>malloc(n * sizeof(int))
    comp_size = <int *>malloc(n * sizeof(int))
    queue = <int *>malloc(n * sizeof(int))
    seen = <int *>calloc(n, sizeof(int))
    on_path = <int *>calloc(n, sizeof(int))
    path = <int *>malloc(n * sizeof(int))
    ptrs = <int *>malloc(n * sizeof(int))
    try:
        if (not comp or not comp_size or not queue or not seen or not on_path
                or not path or not ptrs):
            raise MemoryError()
        with nogil:
            for r in range(n):
                comp[r] = -1
            for r in range(n):
                if comp[r] >= 0:
                    continue
                comp[r] = ncomp
                queue[0] = r
                head = 0
                tail = 1
                while head < tail:
                    v = queue[head]
                    head += 1
                    for j in range(indptr[v], indptr[v + 1]):
                        w = indices[j]
                        if comp[w] < 0:
                            comp[w] = ncomp
                            queue[tail] = w
                            tail += 1
                comp_size[ncomp] = tail
                if tail > largest:
                    largest = tail
                ncomp += 1
            for s in range(n):
                if comp_size[comp[s]] <= best:
                    continue
                path[0] = s
                ptrs[0] = indptr[s]
                depth = 1
                on_path[s] = 1
                while depth > 0:
                    u = path[depth - 1]
                    i = ptrs[depth - 1]
                    if i == indptr[u + 1]:
                        depth -= 1
                        on_path[u] = 0
                        continue
                    w = indices[i]
                    ptrs[depth - 1] = i + 1
                    if on_path[w]:
                        continue
                    path[depth] = w
                    depth += 1
                    on_path[w] = 1
                    if depth > best:
                        best = depth
                    epoch += 1
                    seen[w] = epoch
                    queue[0] = w
                    head = 0
                    tail = 1
                    while head < tail:
                        v = queue[head]
                        head += 1
                        for j in range(indptr[v], indptr[v + 1]):
                            r = indices[j]
                            if seen[r] != epoch and not on_path[r]:
                                seen[r] = epoch
                                queue[tail] = r
                                tail += 1
                    if depth + tail - 1 <= best:
                        depth -= 1
                        on_path[w] = 0
                        continue
                    ptrs[depth - 1] = indptr[w]
                on_path[s] = 0
                if best == largest:
                    break
        return best
    finally:
        free(comp)
        free(comp_size)
        free(queue)
        free(seen)
        free(on_path)
        free(path)
        free(ptrs)


def circumference_subset_dp(int n, masks):
    """Circumference by subset DP; ``n <= 20``."""
    cdef unsigned int *ends
    cdef unsigned int *nb
    cdef unsigned int full, mask, e, vb, lowbit, above, ext, wb
    cdef int v, size, best = 0
    cdef unsigned int total
    if n > 20:
        raise ValueError("subset DP supports at most 20 vertices")
    if n <= 0:
        return 2
    total = 1u << n
    full = total - 1
    ends = <unsigned int *>calloc(total, sizeof(unsigned int))
    nb = <unsigned int *>malloc(n * sizeof(unsigned int))
    if not ends or not nb:
        free(ends)
        free(nb)
        raise MemoryError()
    try:
        for v in range(n):
            nb[v] = <unsigned int>masks[v]
            ends[1u << v] = 1u << v
        with nogil:
            for mask in range(1, total):
                e = ends[mask]
                if not e:
                    continue
                lowbit = mask & (~mask + 1)
                above = full & ~((lowbit << 1) - 1) & ~mask
                size = __builtin_popcount(mask)
                while e:
                    vb = e & (~e + 1)
                    e ^= vb
                    v = __builtin_ctz(vb)
                    if size >= 3 and size > best and (nb[v] & lowbit):
                        best = size
                    ext = nb[v] & above
                    while ext:
                        wb = ext & (~ext + 1)
                        ext ^= wb
                        ends[mask | wb] |= wb
        return best if best else 2
    finally:
        free(ends)
        free(nb)


cdef inline int _assign(int v, int c, int *col, int *mdeg, const int[::1] indptr,
                        const int[::1] indices, int d) noexcept nogil:
    cdef int j, w, ok = 1
    col[v] = c
    for j in range(indptr[v], indptr[v + 1]):
        w = indices[j]
        if col[w] == c and w != v:
            mdeg[w] += 1
            mdeg[v] += 1
            if mdeg[w] >= d:
                ok = 0
    return ok and mdeg[v] < d


cdef inline void _unassign(int v, int *col, int *mdeg, const int[::1] indptr,
                           const int[::1] indices) noexcept nogil:
    cdef int j, w, c = col[v]
    for j in range(indptr[v], indptr[v + 1]):
        w = indices[j]
        if col[w] == c and w != v:
            mdeg[w] -= 1
            mdeg[v] -= 1
    col[v] = -1


def low_degree_colouring(int n, const int[::1] indptr, const int[::1] indices,
                         int k, int d, fixed):
    """First colouring (lexicographic over free vertices) with all mono degrees < d."""
    cdef int *col
    cdef int *mdeg
    cdef int *free_v
    cdef int *nxt
    cdef int nfree = 0, v, j, w, c, depth, ok, result = 0
    if d <= 0:
        return None
    col = <int *>malloc((n + 1) * sizeof(int))
    mdeg = <int *>calloc(n + 1, sizeof(int))
    free_v = <int *>malloc((n + 1) * sizeof(int))
    nxt = <int *>calloc(n + 2, sizeof(int))
    try:
        if not col or not mdeg or not free_v or not nxt:
            raise MemoryError()
        for v in range(n):
            col[v] = -1
        for v in range(n):
            c = fixed[v]
            if c >= 0:
                if not _assign(v, c, col, mdeg, indptr, indices, d):
                    return None
            else:
                free_v[nfree] = v
                nfree += 1
        with nogil:
            depth = 0
            while True:
                if depth == nfree:
                    result = 1
                    break
                v = free_v[depth]
                if col[v] >= 0:
                    _unassign(v, col, mdeg, indptr, indices)
                c = nxt[depth]
                if c == k:
                    nxt[depth] = 0
                    if depth == 0:
                        break
                    depth -= 1
                    continue
                nxt[depth] = c + 1
                if _assign(v, c, col, mdeg, indptr, indices, d):
                    depth += 1
                    nxt[depth] = 0
        if result:
            return [col[v] for v in range(n)]
        return None
    finally:
        free(col)
        free(mdeg)
        free(free_v)
        free(nxt)
