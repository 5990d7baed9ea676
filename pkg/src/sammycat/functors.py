"""Enumeration of functors and natural transformations, and 2-cell algebra."""

from __future__ import annotations

from .errors import SammyTypeError, SizeBound
from .fincat import (FinCat, FunctorData, MorRef, NatTransData, ObjRef,
                     compose_functors, determine, identity_functor, identity_nat)


def _constraints(A: FinCat, position):
    """Composition constraints keyed by the last-assigned morphism position."""
    n = A.n_mor
    by_pos = {}
    for g in A.morphisms:
        for f in A.morphisms:
            h = A.comp[g * n + f]
            if h >= 0 and not (A.is_identity(g) or A.is_identity(f)):
                key = max(position[g], position[f], position[h])
                by_pos.setdefault(key, []).append((g, f, h))
    return by_pos


def enumerate_functors(A: FinCat, B: FinCat, limit: int | None = None):
    """Yield every functor ``A -> B`` in lexicographic order of (obj_map, mor_map)."""
    nonid = [m for m in A.morphisms if not A.is_identity(m)]
    position = {m: -1 for m in A.morphisms}
    for k, m in enumerate(nonid):
        position[m] = k
    by_pos = _constraints(A, position)
    # object-level pruning: an arrow a -> b needs a nonempty hom(F a, F b)
    needs = {o: [] for o in A.objects}
    for m in nonid:
        a, b = A.src[m], A.tgt[m]
        needs[max(a, b)].append((a, b))
    nb = B.n_mor
    obj_map = [0] * A.n_obj
    mor_map = [0] * A.n_mor
    count = 0

    def assign_objects(o):
        if o == A.n_obj:
            for x in A.objects:
                mor_map[A.ident[x]] = B.ident[obj_map[x]]
            yield from assign_morphisms(0)
            return
        for y in range(B.n_obj):
            obj_map[o] = y
            if all(B.hom(obj_map[a], obj_map[b]) for a, b in needs[o]):
                yield from assign_objects(o + 1)

    def assign_morphisms(k):
        nonlocal count
        if k == len(nonid):
            count += 1
            if limit is not None and count > limit:
                raise SizeBound(f"more than {limit} functors", limit)
            yield FunctorData(A, B, obj_map, mor_map)
            return
        m = nonid[k]
        checks = by_pos.get(k, ())
        for cand in B.hom(obj_map[A.src[m]], obj_map[A.tgt[m]]):
            mor_map[m] = cand
            if all(B.comp[mor_map[g] * nb + mor_map[f]] == mor_map[h] for g, f, h in checks):
                yield from assign_morphisms(k + 1)

    yield from assign_objects(0)


def enumerate_nat_trans(F: FunctorData, G: FunctorData, limit: int | None = None):
    """Yield every natural transformation ``F => G`` in lexicographic component order."""
    if F.dom != G.dom or F.cod != G.cod:
        raise SammyTypeError("functors are not parallel")
    A, B = F.dom, F.cod
    nb = B.n_mor
    # naturality squares checked once both endpoint components are chosen
    squares = {o: [] for o in A.objects}
    for m in A.morphisms:
        if not A.is_identity(m):
            a, b = A.src[m], A.tgt[m]
            squares[max(a, b)].append((m, a, b))
    comps = [0] * A.n_obj
    count = 0

    def go(o):
        nonlocal count
        if o == A.n_obj:
            count += 1
            if limit is not None and count > limit:
                raise SizeBound(f"more than {limit} natural transformations", limit)
            yield NatTransData(F, G, comps)
            return
        for cand in B.hom(F.obj_map[o], G.obj_map[o]):
            comps[o] = cand
            if all(B.comp[G.mor_map[m] * nb + comps[a]] == B.comp[comps[b] * nb + F.mor_map[m]]
                   for m, a, b in squares[o]):
                yield from go(o + 1)

    yield from go(0)


# -- 2-cells --------------------------------------------------------------------

def as_nat(x) -> NatTransData:
    """Promote categories and functors to identity natural transformations."""
    if isinstance(x, NatTransData):
        return x
    if isinstance(x, FunctorData):
        return identity_nat(x)
    if isinstance(x, FinCat):
        return identity_nat(identity_functor(x))
    if isinstance(x, (ObjRef, MorRef)):
        return identity_nat(determine(None, x))
    raise SammyTypeError(f"cannot view {type(x).__name__} as a natural transformation")


def vcomp(b: NatTransData, a: NatTransData) -> NatTransData:
    """Vertical composite ``b . a`` for ``a: F => G`` and ``b: G => H``."""
    if a.tgt_fun != b.src_fun:
        raise SammyTypeError("Vcomp: target of the first is not the source of the second")
    C = a.cod
    n = C.n_mor
    return NatTransData(a.src_fun, b.tgt_fun,
                        [C.comp[y * n + x] for x, y in zip(a.components, b.components)])


def hcomp(b: NatTransData, a: NatTransData) -> NatTransData:
    """Horizontal composite ``b * a`` for ``a: F => G : A -> B`` and ``b: H => K : B -> C``.

    Component at ``x`` is ``K(a_x) . b_{F x}``.
    """
    if a.cod != b.dom:
        raise SammyTypeError("Hcomp: natural transformations are not composable")
    F, G = a.src_fun, a.tgt_fun
    H, K = b.src_fun, b.tgt_fun
    C = b.cod
    n = C.n_mor
    comps = [C.comp[K.mor_map[a.components[x]] * n + b.components[F.obj_map[x]]]
             for x in a.dom.objects]
    return NatTransData(compose_functors(H, F), compose_functors(K, G), comps)


def whisker_right(a: NatTransData, H: FunctorData) -> NatTransData:
    """``a H``: components ``a_{H x}``."""
    return NatTransData(compose_functors(a.src_fun, H), compose_functors(a.tgt_fun, H),
                        [a.components[H.obj_map[x]] for x in H.dom.objects])


def whisker_left(K: FunctorData, a: NatTransData) -> NatTransData:
    """``K a``: components ``K(a_x)``."""
    return NatTransData(compose_functors(K, a.src_fun), compose_functors(K, a.tgt_fun),
                        [K.mor_map[c] for c in a.components])


def is_iso_nat(a: NatTransData) -> bool:
    inv = a.cod.inverses
    return all(inv[c] >= 0 for c in a.components)


def inverse_nat(a: NatTransData) -> NatTransData:
    inv = a.cod.inverses
    if any(inv[c] < 0 for c in a.components):
        raise SammyTypeError("natural transformation is not invertible")
    return NatTransData(a.tgt_fun, a.src_fun, [inv[c] for c in a.components])


def is_iso_functor(F: FunctorData) -> bool:
    return (sorted(F.obj_map) == list(range(F.cod.n_obj)) and F.dom.n_obj == F.cod.n_obj
            and sorted(F.mor_map) == list(range(F.cod.n_mor)) and F.dom.n_mor == F.cod.n_mor)


def inverse_functor(F: FunctorData) -> FunctorData:
    if not is_iso_functor(F):
        raise SammyTypeError("functor is not an isomorphism")
    obj = [0] * F.cod.n_obj
    mor = [0] * F.cod.n_mor
    for x, y in enumerate(F.obj_map):
        obj[y] = x
    for m, k in enumerate(F.mor_map):
        mor[k] = m
    return FunctorData(F.cod, F.dom, obj, mor)
