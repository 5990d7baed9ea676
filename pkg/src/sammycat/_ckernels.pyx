# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of :mod:`sammycat._purekernels`."""

from libc.stdint cimport int64_t, uint64_t


cdef inline uint64_t mix(uint64_t a, uint64_t b) nogil:
    cdef uint64_t z = a * 0x9E3779B97F4A7C15ULL + b * 0xC2B2AE3D27D4EB4FULL + 0x165667B19E3779F9ULL
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def check_laws(Py_ssize_t n_obj, src_in, tgt_in, ident_in, comp_in):
    cdef Py_ssize_t n = len(src_in)
    if len(tgt_in) != n or len(ident_in) != n_obj or len(comp_in) != n * n:
        return [("shape", (n_obj, n))]
    cdef int64_t[:] src = _arr(src_in)
    cdef int64_t[:] tgt = _arr(tgt_in)
    cdef int64_t[:] ident = _arr(ident_in)
    cdef int64_t[:] comp = _arr(comp_in)
    cdef Py_ssize_t m, o, g, f, k
    cdef int64_t h, i, kg, gf, left, right
    out = []
    for m in range(n):
        if not (0 <= src[m] < n_obj and 0 <= tgt[m] < n_obj):
            out.append(("object-range", (m,)))
    for o in range(n_obj):
        i = ident[o]
        if not 0 <= i < n:
            out.append(("identity-range", (o,)))
        elif src[i] != o or tgt[i] != o:
            out.append(("identity-endpoints", (o,)))
    if out:
        return out
    for g in range(n):
        for f in range(n):
            h = comp[g * n + f]
            if src[g] != tgt[f]:
                if h != -1:
                    out.append(("composable-domain", (g, f)))
                continue
            if h < 0 or h >= n:
                out.append(("composable-domain", (g, f)))
                continue
            if g == ident[tgt[f]]:
                if h != f:
                    out.append(("right-identity", (g, f)))
                continue
            if f == ident[src[g]]:
                if h != g:
                    out.append(("left-identity", (g, f)))
                continue
            if src[h] != src[f] or tgt[h] != tgt[g]:
                out.append(("composite-endpoints", (g, f)))
    for k in range(n):
        for g in range(n):
            kg = comp[k * n + g]
            if kg < 0 or kg >= n:
                continue
            for f in range(n):
                gf = comp[g * n + f]
                if gf < 0 or gf >= n:
                    continue
                left = comp[k * n + gf]
                right = comp[kg * n + f]
                if left >= 0 and right >= 0 and left != right:
                    out.append(("associativity", (k, g, f)))
    return out


def refine_signatures(colors_in, src_in, tgt_in, comp_in):
    cdef Py_ssize_t n = len(src_in)
    cdef int64_t[:] colors = _arr(colors_in)
    cdef int64_t[:] comp = _arr(comp_in)
    cdef uint64_t[:] outgoing = _zeros(n)
    cdef uint64_t[:] incoming = _zeros(n)
    cdef Py_ssize_t g, f, row
    cdef int64_t h
    cdef uint64_t cg, ch
    with nogil:
        for g in range(n):
            cg = <uint64_t>colors[g]
            row = g * n
            for f in range(n):
                h = comp[row + f]
                if h >= 0:
                    ch = <uint64_t>colors[h]
                    outgoing[f] += mix(cg, ch)
                    incoming[g] += mix(<uint64_t>(colors[f] + n + 1), ch)
    return list(outgoing), list(incoming)


cdef _arr(seq):
    import array
    return array.array("q", seq)


cdef _zeros(Py_ssize_t n):
    import array
    return array.array("Q", bytes(8 * n))
