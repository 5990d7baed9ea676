"""Canonical forms, isomorphism, equivalence, automorphism counts and entropy.

Canonical labelling is individualization-refinement over morphisms: colour
refinement (the compiled kernel) splits morphisms by how they compose, the
search individualizes one morphism of the first non-singleton cell at a time,
and automorphisms discovered between equivalent leaves prune sibling branches.
"""

from __future__ import annotations

import math
from collections import namedtuple
from itertools import product as cartesian

from . import kernels
from .errors import SizeBound
from .fincat import FinCat, FunctorData, NatTransData, relabel

CanonicalForm = namedtuple("CanonicalForm", "table obj_perm mor_perm")

_CACHE_LIMIT = 50_000
_search_cache: dict = {}


def _ranks(keys):
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(c: FinCat, colors):
    ncolors = len(set(colors))
    while True:
        out, inc = kernels.refine_signatures(colors, c.src, c.tgt, c.comp)
        new = _ranks(list(zip(colors, out, inc)))
        k = max(new) + 1 if new else 0
        if k == ncolors:
            return new
        colors, ncolors = new, k


def _encode(c: FinCat, colors):
    obj_perm = [colors[i] for i in c.ident]
    t = relabel(c, obj_perm, colors)
    return (t.src, t.tgt, t.ident, t.comp), obj_perm


class _Search:
    """One complete canonical-labelling search over a category."""

    def __init__(self, c: FinCat):
        self.c = c
        self.gens: list[tuple] = []
        self.first = None          # (colors, encoding, prefix)
        self.best = None           # (colors, encoding)
        n = c.n_mor
        if n == 0:
            self.first = self.best = ([], ((), (), (), ()), [])
            return
        root = _refine(c, [0 if c.is_identity(m) else 1 for m in range(n)])
        self._node(root, [])

    def _automorphism(self, lab_a, lab_b):
        # sigma(m) = the m' with lab_b[m'] == lab_a[m]
        inv_b = [0] * len(lab_b)
        for m, k in enumerate(lab_b):
            inv_b[k] = m
        return tuple(inv_b[k] for k in lab_a)

    def _orbit(self, seeds, prefix):
        gens = [g for g in self.gens if all(g[p] == p for p in prefix)]
        seen = set(seeds)
        todo = list(seeds)
        while todo:
            x = todo.pop()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    def _node(self, colors, prefix):
        n = len(colors)
        counts = {}
        for col in colors:
            counts[col] = counts.get(col, 0) + 1
        if len(counts) == n:
            enc, _ = _encode(self.c, colors)
            if self.first is None:
                self.first = (colors, enc, list(prefix))
                self.best = (colors, enc)
                return
            if enc == self.first[1]:
                self.gens.append(self._automorphism(self.first[0], colors))
            elif enc == self.best[1]:
                self.gens.append(self._automorphism(self.best[0], colors))
            elif enc < self.best[1]:
                self.best = (colors, enc)
            return
        cell = min(col for col, k in counts.items() if k > 1)
        members = [m for m in range(n) if colors[m] == cell]
        explored = []
        for e in members:
            if explored and e in self._orbit(explored, prefix):
                continue
            explored.append(e)
            child = _ranks([(colors[x], 0 if x == e else 1) for x in range(n)])
            self._node(_refine(self.c, child), prefix + [e])

    def automorphism_count(self) -> int:
        prefix = self.first[2]
        total = 1
        for i, e in enumerate(prefix):
            total *= len(self._orbit([e], prefix[:i]))
        return total


def _search(c: FinCat) -> _Search:
    s = _search_cache.get(c)
    if s is None:
        s = _Search(c)
        if len(_search_cache) >= _CACHE_LIMIT:
            _search_cache.clear()
        _search_cache[c] = s
    return s


def canonical(c: FinCat) -> CanonicalForm:
    """Canonically relabelled table; equal tables iff isomorphic categories."""
    s = _search(c)
    colors = s.best[0]
    if c.n_mor == 0:
        return CanonicalForm(FinCat(c.n_obj, (), (), (), ()), tuple(range(c.n_obj)), ())
    enc, obj_perm = _encode(c, colors)
    return CanonicalForm(FinCat(c.n_obj, *enc), tuple(obj_perm), tuple(colors))


def canonical_key(c: FinCat) -> FinCat:
    return canonical(c).table


def isomorphic(a: FinCat, b: FinCat) -> FunctorData | None:
    """An isomorphism ``a -> b`` or ``None``."""
    if (a.n_obj, a.n_mor) != (b.n_obj, b.n_mor):
        return None
    ca, cb = canonical(a), canonical(b)
    if ca.table != cb.table:
        return None
    inv_obj = [0] * b.n_obj
    for o, k in enumerate(cb.obj_perm):
        inv_obj[k] = o
    inv_mor = [0] * b.n_mor
    for m, k in enumerate(cb.mor_perm):
        inv_mor[k] = m
    return FunctorData(a, b, [inv_obj[k] for k in ca.obj_perm], [inv_mor[k] for k in ca.mor_perm])


def automorphisms(c: FinCat) -> int:
    """Number of invertible functors ``c -> c``."""
    if c.n_mor == 0:
        return 1
    return _search(c).automorphism_count()


def entropy(c: FinCat) -> float:
    """Hartley entropy: base-2 log of the automorphism count."""
    return math.log2(automorphisms(c))


def automorphism_group(c: FinCat, limit: int = 50_000) -> list[tuple]:
    """All automorphisms as morphism permutations (closure of the found generators)."""
    s = _search(c)
    ident = tuple(range(c.n_mor))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in s.gens:
                q = tuple(g[x] for x in p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
                    if len(group) > limit:
                        raise SizeBound(f"automorphism group larger than {limit}", limit)
        frontier = nxt
    return sorted(group)


def equivalent(a: FinCat, b: FinCat) -> bool:
    from .constructions import skeleton
    return canonical_key(skeleton(a)[0]) == canonical_key(skeleton(b)[0])


# -- structure keys for functors and natural transformations ------------------

def _obj_action(c: FinCat, mor_perm):
    return [c.tgt[mor_perm[c.ident[o]]] for o in range(c.n_obj)]


def _frames(c: FinCat):
    """Canonical table of ``c`` plus every (obj, mor) relabelling onto it."""
    cf = canonical(c)
    out = []
    for aut in automorphism_group(cf.table):
        mor = tuple(aut[k] for k in cf.mor_perm)
        obj = tuple(cf.table.tgt[aut[cf.table.ident[k]]] for k in cf.obj_perm)
        out.append((obj, mor))
    return cf.table, out


def functor_key(F: FunctorData, limit: int = 200_000):
    """Invariant of ``F`` up to isomorphisms of its domain and codomain."""
    ta, fa = _frames(F.dom)
    tb, fb = _frames(F.cod)
    if len(fa) * len(fb) > limit:
        raise SizeBound("too many relabellings to canonicalise functor", limit)
    best = None
    for (oa, ma), (ob, mb) in cartesian(fa, fb):
        obj = [0] * F.dom.n_obj
        mor = [0] * F.dom.n_mor
        for x in range(F.dom.n_obj):
            obj[oa[x]] = ob[F.obj_map[x]]
        for m in range(F.dom.n_mor):
            mor[ma[m]] = mb[F.mor_map[m]]
        cand = (tuple(obj), tuple(mor))
        if best is None or cand < best:
            best = cand
    return ("functor", ta, tb, best)


def nat_key(a: NatTransData, limit: int = 200_000):
    ta, fa = _frames(a.dom)
    tb, fb = _frames(a.cod)
    if len(fa) * len(fb) > limit:
        raise SizeBound("too many relabellings to canonicalise transformation", limit)
    F, G = a.src_fun, a.tgt_fun
    best = None
    for (oa, ma), (ob, mb) in cartesian(fa, fb):
        def moved(H):
            obj = [0] * H.dom.n_obj
            mor = [0] * H.dom.n_mor
            for x in range(H.dom.n_obj):
                obj[oa[x]] = ob[H.obj_map[x]]
            for m in range(H.dom.n_mor):
                mor[ma[m]] = mb[H.mor_map[m]]
            return tuple(obj), tuple(mor)
        comps = [0] * a.dom.n_obj
        for x in range(a.dom.n_obj):
            comps[oa[x]] = mb[a.components[x]]
        cand = (moved(F), moved(G), tuple(comps))
        if best is None or cand < best:
            best = cand
    return ("nat", ta, tb, best)


def structure_key(x):
    """Isomorphism-invariant key for any runtime value."""
    if isinstance(x, FinCat):
        return ("cat", canonical_key(x))
    if isinstance(x, FunctorData):
        return functor_key(x)
    if isinstance(x, NatTransData):
        return nat_key(x)
    if isinstance(x, tuple) and hasattr(x, "cat"):
        # object or morphism reference: key by the pointing functor
        from .fincat import determine
        return ("ref", type(x).__name__, functor_key(determine(None, x)))
    raise TypeError(f"no structure key for {type(x).__name__}")
