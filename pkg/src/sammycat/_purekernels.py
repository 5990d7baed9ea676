"""Reference implementations of the hot loops.

``_ckernels.pyx`` mirrors these line for line; both must return identical
results (the colour hashes in particular), which the test suite checks.
"""

MASK = 0xFFFFFFFFFFFFFFFF


def mix(a, b):
    """splitmix64 finaliser applied to an ordered pair of small ints."""
    z = (a * 0x9E3779B97F4A7C15 + b * 0xC2B2AE3D27D4EB4F + 0x165667B19E3779F9) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def check_laws(n_obj, src, tgt, ident, comp):
    n = len(src)
    if len(tgt) != n or len(ident) != n_obj or len(comp) != n * n:
        return [("shape", (n_obj, n))]
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


def refine_signatures(colors, src, tgt, comp):
    """One round of colour refinement on morphisms.

    Returns ``(outgoing, incoming)`` hash lists: for each morphism ``m`` the
    commutative hash of ``(colour g, colour g.m)`` over all ``g`` after ``m``
    and of ``(colour f, colour m.f)`` over all ``f`` before ``m``.
    """
    n = len(src)
    outgoing = [0] * n
    incoming = [0] * n
    for g in range(n):
        cg = colors[g]
        row = g * n
        for f in range(n):
            h = comp[row + f]
            if h >= 0:
                ch = colors[h]
                outgoing[f] = (outgoing[f] + mix(cg, ch)) & MASK
                incoming[g] = (incoming[g] + mix(colors[f] + n + 1, ch)) & MASK
    return outgoing, incoming
