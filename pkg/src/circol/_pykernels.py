"""Pure-Python search kernels.

Same signatures and results as the compiled ``_ckernels`` module, which is
preferred when it was built. All kernels take the graph in CSR form
(``indptr``, ``indices``) with ascending neighbour lists.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"


def _block_bound(s, u, n, indptr, indices, on_path, mark, disc, low, parent, blk, size, epoch):
    """Most vertices a u-s path can have inside the unused part of the graph.

    Runs a low-point DFS from ``s`` over ``{v > s, v unused} | {u, s}`` and
    sums the block sizes along the block-cut path from ``u`` to ``s``.
    Returns -1 when ``u`` cannot reach ``s``.
    """
    counter = 0
    nblocks = 0
    mark[s] = epoch
    disc[s] = low[s] = 0
    parent[s] = -1
    vstack = [s]
    frames = [(s, indptr[s])]
    while frames:
        v, i = frames[-1]
        end = indptr[v + 1]
        pushed = False
        while i < end:
            w = indices[i]
            i += 1
            if w != u and w != s and (w < s or on_path[w]):
                continue
            if mark[w] != epoch:
                frames[-1] = (v, i)
                counter += 1
                mark[w] = epoch
                disc[w] = low[w] = counter
                parent[w] = v
                vstack.append(w)
                frames.append((w, indptr[w]))
                pushed = True
                break
            if w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        if pushed:
            continue
        frames.pop()
        p = parent[v]
        if p < 0:
            break
        if low[v] < low[p]:
            low[p] = low[v]
        if low[v] >= disc[p]:
            popped = 0
            while True:
                x = vstack.pop()
                blk[x] = nblocks
                popped += 1
                if x == v:
                    break
            size[nblocks] = popped + 1
            nblocks += 1
    if mark[u] != epoch:
        return -1
    total = 0
    count = 0
    last = -1
    x = u
    while x != s:
        b = blk[x]
        if b != last:
            total += size[b]
            count += 1
            last = b
        x = parent[x]
    return total - (count - 1)


def longest_cycle(n: int, indptr: Sequence[int], indices: Sequence[int], target: int = 0,
                  anchors: int = -1):
    """Longest cycle as a canonical vertex list, or ``None`` if acyclic.

    Cycles are anchored at their minimum vertex and reported starting there,
    oriented toward the smaller neighbour. With ``target == 0`` the
    lexicographically first maximum cycle is returned; with ``target >= 3``
    the search stops at the first cycle of length at least ``target`` and
    returns ``None`` if there is none. ``anchors >= 0`` restricts the search
    to cycles whose least vertex is below ``anchors``.
    """
    best: list[int] = []
    on_path = [0] * n
    mark = [0] * n
    disc = [0] * n
    low = [0] * n
    parent = [0] * n
    blk = [0] * n
    size = [0] * (n + 1)
    epoch = 0
    last_anchor = n if anchors < 0 else min(anchors, n)
    for s in range(last_anchor):
        if target:
            if n - s < target:
                break
        elif n - s <= len(best):
            break
        path = [s]
        ptrs = [indptr[s]]
        on_path[s] = 1
        while path:
            u = path[-1]
            i = ptrs[-1]
            if i == indptr[u + 1]:
                path.pop()
                ptrs.pop()
                on_path[u] = 0
                continue
            w = indices[i]
            ptrs[-1] = i + 1
            if w == s:
                length = len(path)
                if length >= 3 and path[1] < u:
                    if target:
                        if length >= target:
                            return list(path)
                    elif length > len(best):
                        best = list(path)
                        if length == n - s:
                            return best
                continue
            if w < s or on_path[w]:
                continue
            path.append(w)
            on_path[w] = 1
            epoch += 1
            reach = _block_bound(s, w, n, indptr, indices, on_path, mark, disc, low,
                                 parent, blk, size, epoch)
            most = len(path) + reach - 2
            if reach < 0 or (most < target if target else most <= len(best)):
                path.pop()
                on_path[w] = 0
                continue
            ptrs.append(indptr[w])
        on_path[s] = 0
    return best or None


def longest_path_order(n: int, indptr: Sequence[int], indices: Sequence[int]) -> int:
    """Maximum number of vertices on a simple path (0 for the empty graph)."""
    if n == 0:
        return 0
    comp = [-1] * n
    comp_size = []
    for r in range(n):
        if comp[r] >= 0:
            continue
        cid = len(comp_size)
        comp[r] = cid
        queue = [r]
        for v in queue:
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if comp[w] < 0:
                    comp[w] = cid
                    queue.append(w)
        comp_size.append(len(queue))

    best = 1
    largest = max(comp_size)
    on_path = [0] * n
    seen = [0] * n
    epoch = 0
    for s in range(n):
        if comp_size[comp[s]] <= best:
            continue
        path = [s]
        ptrs = [indptr[s]]
        on_path[s] = 1
        while path:
            u = path[-1]
            i = ptrs[-1]
            if i == indptr[u + 1]:
                path.pop()
                ptrs.pop()
                on_path[u] = 0
                continue
            w = indices[i]
            ptrs[-1] = i + 1
            if on_path[w]:
                continue
            path.append(w)
            on_path[w] = 1
            if len(path) > best:
                best = len(path)
            # vertices still reachable from w through unused vertices
            epoch += 1
            seen[w] = epoch
            queue = [w]
            for v in queue:
                for j in range(indptr[v], indptr[v + 1]):
                    x = indices[j]
                    if seen[x] != epoch and not on_path[x]:
                        seen[x] = epoch
                        queue.append(x)
            if len(path) + len(queue) - 1 <= best:
                path.pop()
                on_path[w] = 0
                continue
            ptrs.append(indptr[w])
        on_path[s] = 0
        if best == largest:
            break
    return best


def circumference_subset_dp(n: int, masks: Sequence[int]) -> int:
    """Circumference by DP over (vertex subset, path end) states.

    ``masks[v]`` is the neighbourhood of ``v`` as a bitmask. A state records
    that some path from the lowest vertex of the subset to ``v`` visits
    exactly the subset. Returns 2 when there is no cycle.
    """
    full = (1 << n) - 1
    ends = [0] * (1 << n)
    for s in range(n):
        ends[1 << s] = 1 << s
    best = 0
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        lowbit = mask & -mask
        above = full & ~((lowbit << 1) - 1) & ~mask
        size = bin(mask).count("1")
        while e:
            vb = e & -e
            e ^= vb
            nb = masks[vb.bit_length() - 1]
            if size >= 3 and size > best and nb & lowbit:
                best = size
            ext = nb & above
            while ext:
                wb = ext & -ext
                ext ^= wb
                ends[mask | wb] |= wb
    return best if best else 2


def low_degree_colouring(n: int, indptr: Sequence[int], indices: Sequence[int],
                         k: int, d: int, fixed: Sequence[int]):
    """First colouring with every monochromatic degree below ``d``.

    ``fixed[v] >= 0`` pins a colour. Free vertices are enumerated in
    ascending id with colours ``0..k-1``, so the result is the
    lexicographically first such colouring, or ``None`` if none exists.
    """
    col = [-1] * n
    mdeg = [0] * n

    def assign(v, c):
        col[v] = c
        ok = True
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if col[w] == c and w != v:
                mdeg[w] += 1
                mdeg[v] += 1
                if mdeg[w] >= d:
                    ok = False
        return ok and mdeg[v] < d

    def unassign(v):
        c = col[v]
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if col[w] == c and w != v:
                mdeg[w] -= 1
                mdeg[v] -= 1
        col[v] = -1

    if d <= 0:
        return None
    for v in range(n):
        if fixed[v] >= 0 and not assign(v, fixed[v]):
            return None
    free = [v for v in range(n) if fixed[v] < 0]
    depth = 0
    nxt = [0] * (len(free) + 1)
    while True:
        if depth == len(free):
            return list(col)
        v = free[depth]
        if col[v] >= 0:
            unassign(v)
        c = nxt[depth]
        if c == k:
            nxt[depth] = 0
            if depth == 0:
                return None
            depth -= 1
            continue
        nxt[depth] = c + 1
        if assign(v, c):
            depth += 1
            nxt[depth] = 0
