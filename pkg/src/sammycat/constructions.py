"""Category-building operations: sums, products, functor categories, pullbacks,
comma categories, coequalizers, (co)limits, Kan extensions and liftings.

Where a construction is only defined up to isomorphism the first valid answer
in enumeration order is returned, so results are reproducible tables.
"""

from __future__ import annotations

from collections import namedtuple

from .errors import NoUniversal, SammyError, SammyTypeError, SizeBound
from .fincat import (ONE, TWO, FinCat, FunctorData, NatTransData, arrow, compose_functors,
                     identity_functor, opposite, point)
from .functors import (enumerate_functors, enumerate_nat_trans, whisker_left,
                       whisker_right)

KanResult = namedtuple("KanResult", "extension unit_or_counit")
DiagramBound = namedtuple("DiagramBound", "apex legs")

DEFAULT_MAX_MORPHISMS = 512


# -- sums and products ----------------------------------------------------------

def coproduct(a: FinCat, b: FinCat):
    """Disjoint union with its two injections."""
    na, nb = a.n_mor, b.n_mor
    arrows = [(a.src[m], a.tgt[m]) for m in a.morphisms]
    arrows += [(b.src[m] + a.n_obj, b.tgt[m] + a.n_obj) for m in b.morphisms]
    ident = list(a.ident) + [i + na for i in b.ident]
    table = {}
    for g in a.morphisms:
        for f in a.morphisms:
            h = a.comp[g * na + f]
            if h >= 0:
                table[(g, f)] = h
    for g in b.morphisms:
        for f in b.morphisms:
            h = b.comp[g * nb + f]
            if h >= 0:
                table[(g + na, f + na)] = h + na
    c = FinCat.build(a.n_obj + b.n_obj, arrows, ident, table)
    inl = FunctorData(a, c, range(a.n_obj), range(na))
    inr = FunctorData(b, c, range(a.n_obj, a.n_obj + b.n_obj), range(na, na + nb))
    return c, inl, inr


def copair(f: FunctorData, g: FunctorData) -> FunctorData:
    """The functor ``dom f + dom g -> X`` induced by ``f`` and ``g`` into the same ``X``."""
    if f.cod != g.cod:
        raise SammyTypeError("copairing needs functors with a common target")
    c, _, _ = coproduct(f.dom, g.dom)
    return FunctorData(c, f.cod, f.obj_map + g.obj_map, f.mor_map + g.mor_map)


def product(a: FinCat, b: FinCat):
    """Componentwise product with its projections."""
    nb_o, na, nb = b.n_obj, a.n_mor, b.n_mor
    arrows = [(a.src[m] * nb_o + b.src[n], a.tgt[m] * nb_o + b.tgt[n])
              for m in a.morphisms for n in b.morphisms]
    ident = [a.ident[x] * nb + b.ident[y] for x in a.objects for y in b.objects]
    table = {}
    for g in a.morphisms:
        for f in a.morphisms:
            h = a.comp[g * na + f]
            if h < 0:
                continue
            for g2 in b.morphisms:
                for f2 in b.morphisms:
                    h2 = b.comp[g2 * nb + f2]
                    if h2 >= 0:
                        table[(g * nb + g2, f * nb + f2)] = h * nb + h2
    c = FinCat.build(a.n_obj * nb_o, arrows, ident, table)
    pl = FunctorData(c, a, [x for x in a.objects for _ in b.objects],
                     [m for m in a.morphisms for _ in b.morphisms])
    pr = FunctorData(c, b, [y for _ in a.objects for y in b.objects],
                     [n for _ in a.morphisms for n in b.morphisms])
    return c, pl, pr


# -- functor categories -------------------------------------------------------

class FunctorCategory(namedtuple("FunctorCategory", "cat functors nats fun_index nat_index")):
    """``cat`` with its objects realised as ``functors`` and morphisms as ``nats``."""


_pow_cache: dict = {}


def functor_category(a: FinCat, b: FinCat, max_objects: int | None = None,
                     max_morphisms: int | None = None) -> FunctorCategory:
    key = (a, b)
    hit = _pow_cache.get(key)
    if hit is not None:
        if ((max_objects is not None and hit.cat.n_obj > max_objects)
                or (max_morphisms is not None and hit.cat.n_mor > max_morphisms)):
            raise SizeBound("functor category exceeds the size bound", max_morphisms)
        return hit
    funcs = list(enumerate_functors(a, b, limit=max_objects))
    fun_index = {F: i for i, F in enumerate(funcs)}
    nats = []
    for F in funcs:
        for G in funcs:
            remaining = None if max_morphisms is None else max_morphisms - len(nats)
            nats.extend(enumerate_nat_trans(F, G, limit=remaining))
    nat_index = {x: i for i, x in enumerate(nats)}
    arrows = [(fun_index[x.src_fun], fun_index[x.tgt_fun]) for x in nats]
    ident = [nat_index[NatTransData(F, F, [b.ident[y] for y in F.obj_map])] for F in funcs]
    nb = b.n_mor
    by_src: dict = {}
    for i, x in enumerate(nats):
        by_src.setdefault(arrows[i][0], []).append(i)
    table = {}
    for i, x in enumerate(nats):
        for j in by_src.get(arrows[i][1], ()):
            y = nats[j]
            comps = [b.comp[q * nb + p] for p, q in zip(x.components, y.components)]
            table[(j, i)] = nat_index[NatTransData(x.src_fun, y.tgt_fun, comps)]
    cat = FinCat.build(len(funcs), arrows, ident, table)
    out = FunctorCategory(cat, funcs, nats, fun_index, nat_index)
    if len(_pow_cache) > 2000:
        _pow_cache.clear()
    _pow_cache[key] = out
    return out


def pow(a: FinCat, b: FinCat, max_objects=None, max_morphisms=None) -> FinCat:
    """The category of functors ``a -> b`` and natural transformations."""
    return functor_category(a, b, max_objects, max_morphisms).cat


def precompose(F: FunctorData, c: FinCat, **bounds) -> FunctorData:
    """``c^F : c^B -> c^A`` for ``F: A -> B`` (restriction along ``F``)."""
    big = functor_category(F.cod, c, **bounds)
    small = functor_category(F.dom, c, **bounds)
    obj = [small.fun_index[compose_functors(H, F)] for H in big.functors]
    mor = [small.nat_index[whisker_right(x, F)] for x in big.nats]
    return FunctorData(big.cat, small.cat, obj, mor)


def postcompose(a: FinCat, G: FunctorData, **bounds) -> FunctorData:
    """``G^a : B^a -> B'^a`` for ``G: B -> B'``."""
    before = functor_category(a, G.dom, **bounds)
    after = functor_category(a, G.cod, **bounds)
    obj = [after.fun_index[compose_functors(G, H)] for H in before.functors]
    mor = [after.nat_index[whisker_left(G, x)] for x in before.nats]
    return FunctorData(before.cat, after.cat, obj, mor)


def evaluation(c: FinCat) -> FunctorData:
    """The isomorphism ``c^1 -> c`` evaluating at the single object."""
    fc = functor_category(ONE, c)
    return FunctorData(fc.cat, c, [H.obj_map[0] for H in fc.functors],
                       [x.components[0] for x in fc.nats])


# -- pullbacks and comma categories ---------------------------------------------

def pullback(f: FunctorData, g: FunctorData):
    """Strict pullback in Cat: pairs that agree in the common target."""
    if f.cod != g.cod:
        raise SammyTypeError("pullback needs functors with a common target")
    A, B = f.dom, g.dom
    objs = [(x, y) for x in A.objects for y in B.objects if f.obj_map[x] == g.obj_map[y]]
    mors = [(m, n) for m in A.morphisms for n in B.morphisms if f.mor_map[m] == g.mor_map[n]]
    oi = {p: i for i, p in enumerate(objs)}
    mi = {p: i for i, p in enumerate(mors)}
    arrows = [(oi[(A.src[m], B.src[n])], oi[(A.tgt[m], B.tgt[n])]) for m, n in mors]
    ident = [mi[(A.ident[x], B.ident[y])] for x, y in objs]
    by_src: dict = {}
    for i, (s, _) in enumerate(arrows):
        by_src.setdefault(s, []).append(i)
    table = {}
    for i, (m, n) in enumerate(mors):
        for j in by_src.get(arrows[i][1], ()):
            m2, n2 = mors[j]
            table[(j, i)] = mi[(A.comp[m2 * A.n_mor + m], B.comp[n2 * B.n_mor + n])]
    P = FinCat.build(len(objs), arrows, ident, table)
    left = FunctorData(P, A, [x for x, _ in objs], [m for m, _ in mors])
    right = FunctorData(P, B, [y for _, y in objs], [n for _, n in mors])
    return P, left, right


def arrow_endpoints(c: FinCat, **bounds):
    """``(c^s, c^t)`` as functors ``c^2 -> c`` (through the evaluation iso)."""
    ev = evaluation(c)
    cs = compose_functors(ev, precompose(point(TWO, 0), c, **bounds))
    ct = compose_functors(ev, precompose(point(TWO, 1), c, **bounds))
    return cs, ct


def comma(l: FunctorData, r: FunctorData, **bounds):
    """``l | r`` assembled from three strict pullbacks over ``C^2``.

    Returns the category and its projections to ``dom l`` and ``dom r``.
    """
    if l.cod != r.cod:
        raise SammyTypeError("comma needs functors with a common target")
    cs, ct = arrow_endpoints(l.cod, **bounds)
    left_cat, to_a, left_arrow = pullback(l, cs)
    right_cat, right_arrow, to_b = pullback(ct, r)
    P, p1, p2 = pullback(left_arrow, right_arrow)
    return P, compose_functors(to_a, p1), compose_functors(to_b, p2)


def comma_direct(l: FunctorData, r: FunctorData) -> FinCat:
    """Textbook comma category: objects ``(a, b, h: l a -> r b)``, commuting squares."""
    A, B, C = l.dom, r.dom, l.cod
    nc = C.n_mor
    objs = [(a, b, h) for a in A.objects for b in B.objects
            for h in C.hom(l.obj_map[a], r.obj_map[b])]
    oi = {o: i for i, o in enumerate(objs)}
    mors = []
    for (a, b, h) in objs:
        for (a2, b2, h2) in objs:
            for u in A.hom(a, a2):
                for v in B.hom(b, b2):
                    if C.comp[r.mor_map[v] * nc + h] == C.comp[h2 * nc + l.mor_map[u]]:
                        mors.append((oi[(a, b, h)], oi[(a2, b2, h2)], u, v))
    mi = {(s, t, u, v): i for i, (s, t, u, v) in enumerate(mors)}
    arrows = [(s, t) for s, t, _, _ in mors]
    ident = [mi[(i, i, A.ident[a], B.ident[b])] for i, (a, b, _) in enumerate(objs)]
    table = {}
    for i, (s, t, u, v) in enumerate(mors):
        for j, (s2, t2, u2, v2) in enumerate(mors):
            if s2 == t:
                table[(j, i)] = mi[(s, t2, A.comp[u2 * A.n_mor + u], B.comp[v2 * B.n_mor + v])]
    return FinCat.build(len(objs), arrows, ident, table)


def full_subcategory(c: FinCat, objs):
    objs = list(objs)
    oi = {o: i for i, o in enumerate(objs)}
    mors = [m for m in c.morphisms if c.src[m] in oi and c.tgt[m] in oi]
    mi = {m: i for i, m in enumerate(mors)}
    arrows = [(oi[c.src[m]], oi[c.tgt[m]]) for m in mors]
    table = {}
    for g in mors:
        for f in mors:
            h = c.comp[g * c.n_mor + f]
            if h >= 0:
                table[(mi[g], mi[f])] = mi[h]
    S = FinCat.build(len(objs), arrows, [mi[c.ident[o]] for o in objs], table)
    return S, FunctorData(S, c, objs, mors)


def skeleton(c: FinCat):
    """One object per isomorphism class, with the retraction ``q: c -> skeleton``."""
    inv = c.inverses
    rep = list(c.objects)
    to_rep = [c.ident[o] for o in c.objects]
    for o in c.objects:
        for r in range(o):
            if rep[r] == r:
                isos = [m for m in c.hom(o, r) if inv[m] >= 0]
                if isos:
                    rep[o], to_rep[o] = r, isos[0]
                    break
    reps = [o for o in c.objects if rep[o] == o]
    S, inc = full_subcategory(c, reps)
    oi = {o: i for i, o in enumerate(reps)}
    mi = {m: i for i, m in enumerate(inc.mor_map)}
    n = c.n_mor
    mor_map = []
    for m in c.morphisms:
        x, y = c.src[m], c.tgt[m]
        k = c.comp[c.comp[to_rep[y] * n + m] * n + inv[to_rep[x]]]
        mor_map.append(mi[k])
    q = FunctorData(c, S, [oi[rep[o]] for o in c.objects], mor_map)
    return S, q


# -- coequalizers -----------------------------------------------------------------

def coequalizer_cat(f: FunctorData, g: FunctorData, max_morphisms: int = DEFAULT_MAX_MORPHISMS):
    """Coequalizer in Cat of parallel functors, by coset enumeration on paths.

    Objects of the target are identified along ``f(x) ~ g(x)``; morphisms are
    paths of non-identity generators modulo the target's composition table and
    ``f(m) ~ g(m)``.  Raises :class:`SizeBound` when more than ``max_morphisms``
    classes are needed, which is how an infinite coequalizer shows up.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise SammyTypeError("coequalizer needs parallel functors")
    A, B = f.dom, f.cod
    parent = list(B.objects)

    def ofind(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in A.objects:
        a, b = ofind(f.obj_map[x]), ofind(g.obj_map[x])
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({ofind(x) for x in B.objects})
    qobj_of_root = {r: i for i, r in enumerate(roots)}
    qobj = [qobj_of_root[ofind(x)] for x in B.objects]
    nq = len(roots)

    def word(m):
        return () if B.is_identity(m) else (m,)

    gens_from: dict = {o: [] for o in range(nq)}
    for m in B.morphisms:
        if not B.is_identity(m):
            gens_from[qobj[B.src[m]]].append(m)
    relations: dict = {o: [] for o in range(nq)}
    for m in A.morphisms:
        u, v = word(f.mor_map[m]), word(g.mor_map[m])
        if u != v:
            relations[qobj[B.src[f.mor_map[m]]]].append((u, v))
    nb = B.n_mor
    for y in B.morphisms:
        if B.is_identity(y):
            continue
        for x in B.morphisms:
            h = B.comp[y * nb + x]
            if h >= 0 and not B.is_identity(x):
                relations[qobj[B.src[x]]].append(((x, y), word(h)))

    cparent: list = []
    trans: list = []
    start: list = []
    end: list = []
    words: list = []
    live = 0
    hard_cap = 20 * max_morphisms + 1000

    def new_class(s, e, w):
        nonlocal live
        if live >= 4 * max_morphisms or len(cparent) >= hard_cap:
            raise SizeBound(f"coequalizer exceeds {max_morphisms} morphisms "
                            "(possibly infinite)", max_morphisms)
        cparent.append(len(cparent))
        trans.append({})
        start.append(s)
        end.append(e)
        words.append(w)
        live += 1
        return len(cparent) - 1

    def find(c):
        while cparent[c] != c:
            cparent[c] = cparent[cparent[c]]
            c = cparent[c]
        return c

    def step(c, x):
        c = find(c)
        d = trans[c].get(x)
        if d is None:
            d = new_class(start[c], qobj[B.tgt[x]], words[c] + (x,))
            trans[c][x] = d
        return find(d)

    def trace(c, w):
        for x in w:
            c = step(c, x)
        return find(c)

    def coincide(a, b):
        nonlocal live
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            cparent[b] = a
            live -= 1
            if (len(words[b]), words[b]) < (len(words[a]), words[a]):
                words[a] = words[b]
            for x, d in trans[b].items():
                e = trans[a].get(x)
                if e is None:
                    trans[a][x] = d
                else:
                    pending.append((e, d))
            trans[b] = {}

    identity_class = [new_class(o, o, ()) for o in range(nq)]
    i = 0
    while i < len(cparent):
        c = i
        i += 1
        if find(c) != c:
            continue
        for u, v in relations[end[c]]:
            coincide(trace(c, u), trace(c, v))
            if find(c) != c:
                break
        if find(c) != c:
            continue
        for x in gens_from[end[c]]:
            step(c, x)

    classes = sorted({find(c) for c in range(len(cparent))},
                     key=lambda c: (start[c], end[c], len(words[c]), words[c]))
    if len(classes) > max_morphisms:
        raise SizeBound(f"coequalizer exceeds {max_morphisms} morphisms", max_morphisms)
    index = {c: k for k, c in enumerate(classes)}
    n = len(classes)
    arrows = [(start[c], end[c]) for c in classes]
    ident = [index[find(e)] for e in identity_class]
    table = {}
    for k, c in enumerate(classes):
        for j, d in enumerate(classes):
            if start[d] == end[c]:
                table[(j, k)] = index[trace(c, words[d])]
    Q = FinCat.build(nq, arrows, ident, table)
    mor_map = [index[trace(identity_class[qobj[B.src[m]]], word(m))] for m in B.morphisms]
    if len(classes) != n:
        raise SammyError("internal: coequalizer table changed while reading")
    return Q, FunctorData(B, Q, qobj, mor_map)


# -- limits and colimits ------------------------------------------------------------

def cones(d: FunctorData, apex: int):
    """All cones over ``d: J -> C`` with the given apex, lexicographic in the legs."""
    J, C = d.dom, d.cod
    nc = C.n_mor
    checks = {j: [] for j in J.objects}
    for u in J.morphisms:
        if not J.is_identity(u):
            a, b = J.src[u], J.tgt[u]
            checks[max(a, b)].append((u, a, b))
    legs = [0] * J.n_obj

    def go(j):
        if j == J.n_obj:
            yield tuple(legs)
            return
        for cand in C.hom(apex, d.obj_map[j]):
            legs[j] = cand
            if all(C.comp[d.mor_map[u] * nc + legs[a]] == legs[b] for u, a, b in checks[j]):
                yield from go(j + 1)

    yield from go(0)


def _mediators(C: FinCat, cone: DiagramBound, other: DiagramBound):
    nc = C.n_mor
    return [m for m in C.hom(other.apex, cone.apex)
            if all(C.comp[l * nc + m] == k for l, k in zip(cone.legs, other.legs))]


def limit(d: FunctorData) -> DiagramBound:
    """The first terminal cone over ``d`` in enumeration order."""
    C = d.cod
    every = [DiagramBound(c, legs) for c in C.objects for legs in cones(d, c)]
    for cand in every:
        if all(len(_mediators(C, cand, other)) == 1 for other in every):
            return cand
    raise NoUniversal("diagram has no limit in the target category")


def colimit(d: FunctorData) -> DiagramBound:
    """Dual of :func:`limit`; legs run from the diagram into the apex."""
    return limit(opposite(d))


def mediate(C: FinCat, universal: DiagramBound, other: DiagramBound) -> int:
    ms = _mediators(C, universal, other)
    if len(ms) != 1:
        raise SammyError("internal: mediating morphism is not unique")
    return ms[0]


# -- Kan extensions -------------------------------------------------------------------

def _under(b: int, g: FunctorData):
    """The comma category ``b | G`` as a FinCat plus its object/morphism labels."""
    A, B = g.dom, g.cod
    nbm = B.n_mor
    objs = [(a, h) for a in A.objects for h in B.hom(b, g.obj_map[a])]
    oi = {o: i for i, o in enumerate(objs)}
    mors = [(i, u) for i, (a, h) in enumerate(objs) for u in A.morphisms if A.src[u] == a]
    arrows = []
    for i, u in mors:
        a, h = objs[i]
        arrows.append((i, oi[(A.tgt[u], B.comp[g.mor_map[u] * nbm + h])]))
    mi = {m: k for k, m in enumerate(mors)}
    ident = [mi[(i, A.ident[a])] for i, (a, _) in enumerate(objs)]
    table = {}
    for k, (i, u) in enumerate(mors):
        t = arrows[k][1]
        for k2, (i2, u2) in enumerate(mors):
            if i2 == t:
                table[(k2, k)] = mi[(i, A.comp[u2 * A.n_mor + u])]
    return FinCat.build(len(objs), arrows, ident, table), objs, [u for _, u in mors]


def _right_kan(g: FunctorData, f: FunctorData) -> KanResult:
    A, B, C = g.dom, g.cod, f.cod
    nbm = B.n_mor
    limits = []
    shapes = []
    for b in B.objects:
        J, objs, labels = _under(b, g)
        d = FunctorData(J, C, [f.obj_map[a] for a, _ in objs], [f.mor_map[u] for u in labels])
        limits.append(limit(d))
        shapes.append({o: i for i, o in enumerate(objs)})
    obj_map = [lim.apex for lim in limits]
    mor_map = []
    for v in B.morphisms:
        b, b2 = B.src[v], B.tgt[v]
        legs = tuple(limits[b].legs[shapes[b][(a, B.comp[h2 * nbm + v])]]
                     for (a, h2) in shapes[b2])
        mor_map.append(mediate(C, limits[b2], DiagramBound(obj_map[b], legs)))
    R = FunctorData(B, C, obj_map, mor_map)
    alpha = [limits[g.obj_map[a]].legs[shapes[g.obj_map[a]][(a, B.ident[g.obj_map[a]])]]
             for a in A.objects]
    return KanResult(R, NatTransData(compose_functors(R, g), f, alpha))


def kan_extension(side: str, g: FunctorData, f: FunctorData) -> KanResult:
    """Pointwise Kan extension of ``f: A -> C`` along ``g: A -> B``.

    Right: ``(R, alpha: R.g => f)``, ``R b = lim_{b | g} f``.
    Left:  ``(L, alpha: f => L.g)``, ``L b = colim_{g | b} f``, computed as the
    opposite of the right extension between opposite categories.
    """
    if g.dom != f.dom:
        raise SammyTypeError("Kan extension needs functors with a common source")
    if side == "right":
        return _right_kan(g, f)
    if side == "left":
        R, a = _right_kan(opposite(g), opposite(f))
        return KanResult(opposite(R), opposite(a))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def kan_induced(kr: KanResult, g: FunctorData, h: FunctorData, beta: NatTransData,
                side: str = "right") -> NatTransData:
    """The unique ``gamma`` factoring ``beta`` through the Kan extension ``kr`` along ``g``.

    Right: ``gamma: h => R`` with ``alpha . (gamma g) = beta``.
    Left:  ``gamma: L => h`` with ``(gamma g) . alpha = beta``.
    """
    R, alpha = kr
    C = R.cod
    nc = C.n_mor
    objs = g.dom.objects
    if side == "right":
        cands = [x for x in enumerate_nat_trans(h, R)
                 if all(C.comp[alpha.components[a] * nc + x.components[g.obj_map[a]]]
                        == beta.components[a] for a in objs)]
    elif side == "left":
        cands = [x for x in enumerate_nat_trans(R, h)
                 if all(C.comp[x.components[g.obj_map[a]] * nc + alpha.components[a]]
                        == beta.components[a] for a in objs)]
    else:
        raise ValueError(side)
    if len(cands) != 1:
        raise SammyError(f"internal: {len(cands)} induced transformations (expected exactly one)")
    return cands[0]


def check_kan_universal(kr: KanResult, g: FunctorData, f: FunctorData, side: str = "right",
                        limit_functors: int = 10_000):
    """Exhaustively count ``gamma`` for every competitor ``(h, beta)``.

    Returns ``(competitors, failures)``; ``failures`` lists competitors with zero
    or several factorisations.
    """
    R, alpha = kr
    B, C = g.cod, f.cod
    nc = C.n_mor
    competitors = 0
    failures = []
    for h in enumerate_functors(B, C, limit=limit_functors):
        hg = compose_functors(h, g)
        betas = enumerate_nat_trans(hg, f) if side == "right" else enumerate_nat_trans(f, hg)
        for beta in betas:
            competitors += 1
            if side == "right":
                n = sum(1 for x in enumerate_nat_trans(h, R)
                        if all(C.comp[alpha.components[a] * nc + x.components[g.obj_map[a]]]
                               == beta.components[a] for a in g.dom.objects))
            else:
                n = sum(1 for x in enumerate_nat_trans(R, h)
                        if all(C.comp[x.components[g.obj_map[a]] * nc + alpha.components[a]]
                               == beta.components[a] for a in g.dom.objects))
            if n != 1:
                failures.append((h, beta, n))
    return competitors, failures


def kan_lifting(g: FunctorData, f: FunctorData, limit_functors: int = 10_000) -> KanResult:
    """Right Kan lifting of ``f: A -> B`` through ``g: C -> B``.

    ``(R: A -> C, alpha: g.R => f)`` such that every ``(h, beta: g.h => f)``
    factors as ``beta = alpha . (g gamma)`` for exactly one ``gamma: h => R``.
    Found by exhaustive search over candidates in enumeration order.
    """
    if g.cod != f.cod:
        raise SammyTypeError("Kan lifting needs functors with a common target")
    A, Cc, B = f.dom, g.dom, f.cod
    nb = B.n_mor
    pairs = []
    for h in enumerate_functors(A, Cc, limit=limit_functors):
        for beta in enumerate_nat_trans(compose_functors(g, h), f):
            pairs.append((h, beta))
    for R, alpha in pairs:
        ok = True
        for h, beta in pairs:
            n = 0
            for x in enumerate_nat_trans(h, R):
                if all(B.comp[alpha.components[a] * nb + g.mor_map[x.components[a]]] == beta.components[a]
                       for a in A.objects):
                    n += 1
                    if n > 1:
                        break
            if n != 1:
                ok = False
                break
        if ok:
            return KanResult(R, alpha)
    raise NoUniversal("no Kan lifting exists")


# -- composability ------------------------------------------------------------------------

def composable_functor(c: FinCat, **bounds) -> FunctorData:
    """The composition map ``C^2 x_{C^1} C^2 -> C^2`` on composable pairs ``(g, f)``."""
    arrows = functor_category(TWO, c, **bounds)
    c_s = precompose(point(TWO, 0), c, **bounds)
    c_t = precompose(point(TWO, 1), c, **bounds)
    P, first, second = pullback(c_s, c_t)
    nc = c.n_mor
    obj_map = []
    for k in P.objects:
        G = arrows.functors[first.obj_map[k]]
        F = arrows.functors[second.obj_map[k]]
        obj_map.append(arrows.fun_index[arrow(c, c.comp[G.mor_map[1] * nc + F.mor_map[1]])])
    mor_map = []
    for k in P.morphisms:
        beta = arrows.nats[first.mor_map[k]]
        alpha = arrows.nats[second.mor_map[k]]
        src_obj, tgt_obj = obj_map[P.src[k]], obj_map[P.tgt[k]]
        x = NatTransData(arrows.functors[src_obj], arrows.functors[tgt_obj],
                         (alpha.components[0], beta.components[1]))
        mor_map.append(arrows.nat_index[x])
    return FunctorData(P, arrows.cat, obj_map, mor_map)


def product_via_kan(c: FinCat, x: int, y: int):
    """Binary product of objects ``x, y`` as the right Kan extension along ``1+1 -> 1``."""
    two_points, _, _ = coproduct(ONE, ONE)
    pair = FunctorData(two_points, c, (x, y), (c.ident[x], c.ident[y]))
    bang = FunctorData(two_points, ONE, (0, 0), (0, 0))
    return kan_extension("right", bang, pair)


__all__ = [
    "KanResult", "DiagramBound", "coproduct", "copair", "product", "pow", "functor_category",
    "precompose", "postcompose", "evaluation", "pullback", "comma", "comma_direct",
    "full_subcategory", "skeleton", "coequalizer_cat", "cones", "limit", "colimit", "mediate",
    "kan_extension", "kan_induced", "check_kan_universal", "kan_lifting", "composable_functor",
    "product_via_kan", "identity_functor",
]
