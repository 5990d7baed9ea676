"""Finite categories, functors and natural transformations as explicit tables.

Objects and morphisms are dense integers ``0..n-1`` scoped to one category.
Composition is a flat table ``comp[g * n_mor + f]`` holding ``g . f`` or -1
when the pair is not composable.  All values are immutable and hashable;
equality is table equality (isomorphic but reordered tables are unequal).
"""

from __future__ import annotations

from collections import namedtuple
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import SammyTypeError

Violation = namedtuple("Violation", "law witness")


class FinCat:
    __slots__ = ("n_obj", "src", "tgt", "ident", "comp", "_hash", "__dict__")

    def __init__(self, n_obj: int, src: Sequence[int], tgt: Sequence[int],
                 ident: Sequence[int], comp: Sequence[int]):
        self.n_obj = int(n_obj)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.ident = tuple(ident)
        self.comp = tuple(comp)
        self._hash = hash((self.n_obj, self.src, self.tgt, self.ident, self.comp))

    @classmethod
    def build(cls, n_obj: int, arrows: Sequence[tuple[int, int]],
              ident: Sequence[int], table: Mapping[tuple[int, int], int] | Iterable):
        """Assemble from ``(src, tgt)`` pairs and a ``{(g, f): gf}`` map."""
        n = len(arrows)
        comp = [-1] * (n * n)
        items = table.items() if isinstance(table, Mapping) else (((g, f), h) for g, f, h in table)
        for (g, f), h in items:
            comp[g * n + f] = h
        return cls(n_obj, [a for a, _ in arrows], [b for _, b in arrows], ident, comp)

    @property
    def n_mor(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_obj)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def compose(self, g: int, f: int) -> int:
        h = self.comp[g * len(self.src) + f]
        if h < 0:
            raise SammyTypeError(f"morphisms {g} and {f} are not composable")
        return h

    def is_identity(self, m: int) -> bool:
        return self.ident[self.src[m]] == m

    @cached_property
    def homs(self) -> dict:
        table = {}
        for m in range(len(self.src)):
            table.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {k: tuple(v) for k, v in table.items()}

    def hom(self, a: int, b: int) -> tuple:
        return self.homs.get((a, b), ())

    @cached_property
    def inverses(self) -> tuple:
        """``inverses[m]`` is the inverse of ``m`` or -1."""
        out = [-1] * self.n_mor
        for m in range(self.n_mor):
            a, b = self.src[m], self.tgt[m]
            for k in self.hom(b, a):
                if (self.comp[k * self.n_mor + m] == self.ident[a]
                        and self.comp[m * self.n_mor + k] == self.ident[b]):
                    out[m] = k
                    break
        return tuple(out)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat) or self._hash != other._hash:
            return False
        return (self.n_obj == other.n_obj and self.src == other.src and self.tgt == other.tgt
                and self.ident == other.ident and self.comp == other.comp)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinCat(objects={self.n_obj}, morphisms={self.n_mor})"

    def __reduce__(self):
        return (FinCat, (self.n_obj, self.src, self.tgt, self.ident, self.comp))


class FunctorData:
    __slots__ = ("dom", "cod", "obj_map", "mor_map", "_hash")

    def __init__(self, dom: FinCat, cod: FinCat, obj_map: Sequence[int], mor_map: Sequence[int]):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self._hash = hash((dom, cod, self.obj_map, self.mor_map))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FunctorData) and self._hash == other._hash
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FunctorData(obj_map={list(self.obj_map)}, mor_map={list(self.mor_map)})"

    def __reduce__(self):
        return (FunctorData, (self.dom, self.cod, self.obj_map, self.mor_map))


class NatTransData:
    __slots__ = ("src_fun", "tgt_fun", "components", "_hash")

    def __init__(self, src_fun: FunctorData, tgt_fun: FunctorData, components: Sequence[int]):
        if src_fun.dom != tgt_fun.dom or src_fun.cod != tgt_fun.cod:
            raise SammyTypeError("natural transformation between non-parallel functors")
        self.src_fun = src_fun
        self.tgt_fun = tgt_fun
        self.components = tuple(components)
        self._hash = hash((src_fun, tgt_fun, self.components))

    @property
    def dom(self) -> FinCat:
        return self.src_fun.dom

    @property
    def cod(self) -> FinCat:
        return self.src_fun.cod

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, NatTransData) and self._hash == other._hash
                and self.components == other.components
                and self.src_fun == other.src_fun and self.tgt_fun == other.tgt_fun)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NatTransData(components={list(self.components)})"

    def __reduce__(self):
        return (NatTransData, (self.src_fun, self.tgt_fun, self.components))


class _Ref:
    # plain tuple equality would make an object and a morphism with the same id equal
    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, tuple.__hash__(self)))


class ObjRef(_Ref, namedtuple("ObjRef", "cat id")):
    """An object together with the category it lives in."""

    __slots__ = ()


class MorRef(_Ref, namedtuple("MorRef", "cat id")):
    """A morphism together with the category it lives in."""

    __slots__ = ()


# -- validation ---------------------------------------------------------------

def validate_category(c: FinCat) -> list[Violation]:
    """Return every law violation of ``c``; an empty list means ``c`` is a category."""
    return [Violation(law, w) for law, w in
            kernels.check_laws(c.n_obj, c.src, c.tgt, c.ident, c.comp)]


def functor_violations(f: FunctorData) -> list[Violation]:
    A, B = f.dom, f.cod
    out = []
    if len(f.obj_map) != A.n_obj or len(f.mor_map) != A.n_mor:
        return [Violation("shape", (len(f.obj_map), len(f.mor_map)))]
    if any(not 0 <= x < B.n_obj for x in f.obj_map) or any(not 0 <= m < B.n_mor for m in f.mor_map):
        return [Violation("range", ())]
    for m in A.morphisms:
        fm = f.mor_map[m]
        if B.src[fm] != f.obj_map[A.src[m]] or B.tgt[fm] != f.obj_map[A.tgt[m]]:
            out.append(Violation("endpoints", (m,)))
    for o in A.objects:
        if f.mor_map[A.ident[o]] != B.ident[f.obj_map[o]]:
            out.append(Violation("identity", (o,)))
    n = A.n_mor
    for g in A.morphisms:
        for h in A.morphisms:
            gh = A.comp[g * n + h]
            if gh >= 0 and B.comp[f.mor_map[g] * B.n_mor + f.mor_map[h]] != f.mor_map[gh]:
                out.append(Violation("composition", (g, h)))
    return out


def nattrans_violations(a: NatTransData) -> list[Violation]:
    F, G = a.src_fun, a.tgt_fun
    A, B = F.dom, F.cod
    if len(a.components) != A.n_obj:
        return [Violation("shape", (len(a.components),))]
    out = []
    for o in A.objects:
        c = a.components[o]
        if not 0 <= c < B.n_mor or B.src[c] != F.obj_map[o] or B.tgt[c] != G.obj_map[o]:
            out.append(Violation("component", (o,)))
    if out:
        return out
    nb = B.n_mor
    for m in A.morphisms:
        x, y = A.src[m], A.tgt[m]
        if B.comp[G.mor_map[m] * nb + a.components[x]] != B.comp[a.components[y] * nb + F.mor_map[m]]:
            out.append(Violation("naturality", (m,)))
    return out


# -- constants ----------------------------------------------------------------

def chain(n: int) -> FinCat:
    """The total order ``0 -> 1 -> ... -> n-1``, morphisms sorted by (src, tgt)."""
    arrows = [(i, j) for i in range(n) for j in range(i, n)]
    index = {a: k for k, a in enumerate(arrows)}
    table = {(index[(j, k)], index[(i, j)]): index[(i, k)]
             for (i, j) in arrows for k in range(j, n)}
    return FinCat.build(n, arrows, [index[(i, i)] for i in range(n)], table)


def discrete(n: int) -> FinCat:
    return FinCat.build(n, [(i, i) for i in range(n)], list(range(n)), {(i, i): i for i in range(n)})


def indiscrete(n: int) -> FinCat:
    """``n`` objects, exactly one morphism between any two (all invertible)."""
    arrows = [(i, j) for i in range(n) for j in range(n)]
    index = {a: k for k, a in enumerate(arrows)}
    table = {(index[(j, k)], index[(i, j)]): index[(i, k)]
             for (i, j) in arrows for k in range(n)}
    return FinCat.build(n, arrows, [index[(i, i)] for i in range(n)], table)


ZERO = chain(0)
ONE = chain(1)
TWO = chain(2)
ISO_TWO = indiscrete(2)

_CONSTANTS = {"Zero": ZERO, "One": ONE, "Two": TWO, "IsoTwo": ISO_TWO}


def constant(name: str) -> FinCat:
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise ValueError(f"unknown constant category {name!r}") from None


def point(c: FinCat, o: int) -> FunctorData:
    """The functor ``1 -> c`` picking object ``o``."""
    return FunctorData(ONE, c, (o,), (c.ident[o],))


def arrow(c: FinCat, m: int) -> FunctorData:
    """The functor ``2 -> c`` picking morphism ``m``."""
    a, b = c.src[m], c.tgt[m]
    return FunctorData(TWO, c, (a, b), (c.ident[a], m, c.ident[b]))


def bang(a: FinCat, b: FinCat) -> FunctorData:
    """The unique functor ``a -> b``; defined when ``a`` is empty or ``b`` is terminal."""
    if a.n_obj == 0:
        return FunctorData(a, b, (), ())
    if b.n_obj == 1 and b.n_mor == 1:
        return FunctorData(a, b, (0,) * a.n_obj, (0,) * a.n_mor)
    raise SammyTypeError("Bang needs an empty source or a terminal target")


def constant_functor(name: str) -> FunctorData:
    table = {
        "s": lambda: point(TWO, 0),
        "t": lambda: point(TWO, 1),
        "bang_0_1": lambda: bang(ZERO, ONE),
        "bang_0_2": lambda: bang(ZERO, TWO),
        "bang_2_1": lambda: bang(TWO, ONE),
        "src_of": lambda: point(TWO, 0),
        "tgt_of": lambda: point(TWO, 1),
    }
    try:
        return table[name]()
    except KeyError:
        raise ValueError(f"unknown constant functor {name!r}") from None


# -- elementary operations ------------------------------------------------------

def identity_functor(c: FinCat) -> FunctorData:
    return FunctorData(c, c, range(c.n_obj), range(c.n_mor))


def identity_nat(f: FunctorData) -> NatTransData:
    return NatTransData(f, f, [f.cod.ident[x] for x in f.obj_map])


def source(f: FunctorData) -> FinCat:
    return f.dom


def target(f: FunctorData) -> FinCat:
    return f.cod


def opposite(x):
    """Reverse every arrow.  Acts on categories, functors and natural transformations."""
    if isinstance(x, FinCat):
        n = x.n_mor
        comp = [x.comp[f * n + g] for g in range(n) for f in range(n)]
        return FinCat(x.n_obj, x.tgt, x.src, x.ident, comp)
    if isinstance(x, FunctorData):
        return FunctorData(opposite(x.dom), opposite(x.cod), x.obj_map, x.mor_map)
    if isinstance(x, NatTransData):
        # a: F => G becomes a^op: G^op => F^op
        return NatTransData(opposite(x.tgt_fun), opposite(x.src_fun), x.components)
    raise SammyTypeError(f"Op is undefined on {type(x).__name__}")


def pick(f: FunctorData):
    if f.dom == ONE:
        return ObjRef(f.cod, f.obj_map[0])
    if f.dom == TWO:
        return MorRef(f.cod, f.mor_map[1])
    raise SammyTypeError("Pick needs a functor out of One or Two")


def determine(c: FinCat | None, x) -> FunctorData:
    """Inverse of :func:`pick`: the functor out of One or Two naming ``x``."""
    if not isinstance(x, (ObjRef, MorRef)):
        raise SammyTypeError("Determine needs an object or morphism reference")
    if c is not None and c != x.cat:
        raise SammyTypeError("reference does not belong to the given category")
    if isinstance(x, ObjRef):
        return point(x.cat, x.id)
    return arrow(x.cat, x.id)


def hom_set(c: FinCat, a: int, b: int) -> list[int]:
    if not (0 <= a < c.n_obj and 0 <= b < c.n_obj):
        raise KeyError(f"unknown object in hom({a}, {b})")
    return list(c.hom(a, b))


def compose_functors(g: FunctorData, f: FunctorData) -> FunctorData:
    """``g . f``."""
    if f.cod != g.dom:
        raise SammyTypeError("functors are not composable")
    return FunctorData(f.dom, g.cod, [g.obj_map[x] for x in f.obj_map],
                       [g.mor_map[m] for m in f.mor_map])


def relabel(c: FinCat, obj_perm: Sequence[int], mor_perm: Sequence[int]) -> FinCat:
    """Rename object ``o`` to ``obj_perm[o]`` and morphism ``m`` to ``mor_perm[m]``."""
    n = c.n_mor
    src = [0] * n
    tgt = [0] * n
    for m in range(n):
        src[mor_perm[m]] = obj_perm[c.src[m]]
        tgt[mor_perm[m]] = obj_perm[c.tgt[m]]
    ident = [0] * c.n_obj
    for o in range(c.n_obj):
        ident[obj_perm[o]] = mor_perm[c.ident[o]]
    comp = [-1] * (n * n)
    for g in range(n):
        for f in range(n):
            h = c.comp[g * n + f]
            if h >= 0:
                comp[mor_perm[g] * n + mor_perm[f]] = mor_perm[h]
    return FinCat(c.n_obj, src, tgt, ident, comp)
