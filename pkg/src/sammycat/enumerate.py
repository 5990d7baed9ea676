"""Exhaustive enumeration of small finite categories up to isomorphism."""

from __future__ import annotations

from itertools import permutations

from .fincat import FinCat
from .iso import canonical_key


def _hom_matrices(n_obj: int, max_mor: int):
    """Hom-set size matrices (diagonal >= 1) up to simultaneous permutation."""
    cells = [(a, b) for a in range(n_obj) for b in range(n_obj)]
    seen = set()
    budget = max_mor

    def go(i, left, acc):
        if i == len(cells):
            m = tuple(acc)
            key = min(tuple(m[p[a] * n_obj + p[b]] for a in range(n_obj) for b in range(n_obj))
                      for p in permutations(range(n_obj)))
            if key not in seen:
                seen.add(key)
                yield m
            return
        a, b = cells[i]
        lo = 1 if a == b else 0
        for k in range(lo, left + 1):
            acc.append(k)
            yield from go(i + 1, left - k, acc)
            acc.pop()

    if n_obj <= budget:
        yield from go(0, budget, [])


def _tables(n_obj: int, sizes):
    """Every category with exactly these hom-set sizes (labelled)."""
    src, tgt, ident = [], [], [0] * n_obj
    homs = {}
    for a in range(n_obj):
        for b in range(n_obj):
            ms = []
            for k in range(sizes[a * n_obj + b]):
                m = len(src)
                if a == b and k == 0:
                    ident[a] = m
                src.append(a)
                tgt.append(b)
                ms.append(m)
            homs[a, b] = ms
    n = len(src)
    is_id = [False] * n
    for m in ident:
        is_id[m] = True
    comp = [-1] * (n * n)
    for f in range(n):
        comp[ident[tgt[f]] * n + f] = f
        comp[f * n + ident[src[f]]] = f
    cells = [(g, f) for g in range(n) for f in range(n)
             if tgt[f] == src[g] and not is_id[g] and not is_id[f]]
    for g, f in cells:
        if not homs[src[f], tgt[g]]:
            return
    pairs_into = [[] for _ in range(n)]   # assigned cells (y, z) with y.z == index

    def ok(g, f, v):
        # every associativity instance touching the cell (g, f) whose entries are known
        for z in range(n):
            if src[f] == tgt[z]:
                vz, b = comp[v * n + z], comp[f * n + z]
                if vz >= 0 and b >= 0:
                    gb = comp[g * n + b]
                    if gb >= 0 and gb != vz:
                        return False
        for x in range(n):
            if src[x] == tgt[g]:
                a, xv = comp[x * n + g], comp[x * n + v]
                if a >= 0 and xv >= 0:
                    af = comp[a * n + f]
                    if af >= 0 and af != xv:
                        return False
        for x, y in pairs_into[g]:
            yf = comp[y * n + f]
            if yf >= 0:
                r = comp[x * n + yf]
                if r >= 0 and r != v:
                    return False
        for y, z in pairs_into[f]:
            gy = comp[g * n + y]
            if gy >= 0:
                r = comp[gy * n + z]
                if r >= 0 and r != v:
                    return False
        return True

    def go(i):
        if i == len(cells):
            yield FinCat(n_obj, src, tgt, ident, comp)
            return
        g, f = cells[i]
        for v in homs[src[f], tgt[g]]:
            comp[g * n + f] = v
            pairs_into[v].append((g, f))
            if ok(g, f, v):
                yield from go(i + 1)
            pairs_into[v].pop()
            comp[g * n + f] = -1

    yield from go(0)


def small_categories(max_objects: int, max_morphisms: int, min_objects: int = 0):
    """One representative per isomorphism class, in a fixed order."""
    out = {}
    for n_obj in range(min_objects, max_objects + 1):
        for sizes in _hom_matrices(n_obj, max_morphisms):
            for c in _tables(n_obj, sizes):
                k = canonical_key(c)
                if k not in out:
                    out[k] = k
    return list(out.values())


__all__ = ["small_categories"]
