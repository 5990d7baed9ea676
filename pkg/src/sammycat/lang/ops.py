"""Operation table shared by the interpreter and the complexity search."""

from __future__ import annotations

from dataclasses import dataclass

from .. import constructions as K
from ..errors import SammyTypeError, SizeBound
from ..fincat import (FinCat, FunctorData, MorRef, NatTransData, ObjRef, ISO_TWO, ONE,
                      TWO, ZERO, arrow, bang, compose_functors, determine,
                      identity_functor, identity_nat, opposite, pick, point)
from ..functors import as_nat, hcomp, vcomp


@dataclass(frozen=True)
class Limits:
    max_steps: int = 10_000
    max_objects: int = 512
    max_morphisms: int = 512
    max_functors: int = 10_000     # candidate bound for exhaustive lifting search


_CONSTANTS = {
    "Zero": ZERO, "One": ONE, "Two": TWO, "IsoTwo": ISO_TWO,
    "S": point(TWO, 0), "T": point(TWO, 1),
}


def _cat(x, op) -> FinCat:
    if not isinstance(x, FinCat):
        raise SammyTypeError(f"{op} expects a category, got {kind_of(x)}")
    return x


def _fun(x, op) -> FunctorData:
    if isinstance(x, FunctorData):
        return x
    if isinstance(x, FinCat):
        return identity_functor(x)
    if isinstance(x, (ObjRef, MorRef)):
        return determine(None, x)
    raise SammyTypeError(f"{op} expects a functor, got {kind_of(x)}")


def kind_of(x) -> str:
    if isinstance(x, FinCat):
        return "cat"
    if isinstance(x, FunctorData):
        return "functor"
    if isinstance(x, NatTransData):
        return "nat"
    if isinstance(x, ObjRef):
        return "obj"
    if isinstance(x, MorRef):
        return "mor"
    return type(x).__name__


def _functor_like(x) -> bool:
    return isinstance(x, (FinCat, FunctorData, ObjRef, MorRef))


def _literal(c: FinCat, lit: str):
    k = int(lit[1:])
    if lit[0] == "o":
        if not 0 <= k < c.n_obj:
            raise SammyTypeError(f"object {k} out of range")
        return point(c, k)
    if not 0 <= k < c.n_mor:
        raise SammyTypeError(f"morphism {k} out of range")
    return arrow(c, k)


def apply(op: str, args, limits: Limits = Limits()) -> tuple:
    """Evaluate one operation; always returns a tuple of outputs."""
    bounds = {"max_objects": limits.max_objects, "max_morphisms": limits.max_morphisms}
    if op in _CONSTANTS:
        out = (_CONSTANTS[op],)
    elif op == "Bang":
        out = (bang(_cat(args[0], op), _cat(args[1], op)),)
    elif op == "Ident":
        x = args[0]
        if isinstance(x, FinCat):
            out = (identity_functor(x),)
        elif isinstance(x, FunctorData):
            out = (identity_nat(x),)
        else:
            raise SammyTypeError(f"Ident expects a category or functor, got {kind_of(x)}")
    elif op in ("Source", "Target"):
        x = args[0]
        first = op == "Source"
        if isinstance(x, FunctorData):
            out = (x.dom if first else x.cod,)
        elif isinstance(x, NatTransData):
            out = (x.src_fun if first else x.tgt_fun,)
        elif isinstance(x, (ObjRef, MorRef)):
            out = (ONE if isinstance(x, ObjRef) else TWO,) if first else (x.cat,)
        else:
            raise SammyTypeError(f"{op} expects a functor or transformation, got {kind_of(x)}")
    elif op == "Op":
        out = (opposite(args[0]),)
    elif op == "Pick":
        out = (pick(_fun(args[0], op)),)
    elif op == "Determine":
        if len(args) == 2:
            out = (_literal(_cat(args[0], op), args[1]),)
        else:
            out = (determine(None, args[0]),)
    elif op == "Hcomp":
        b, a = args
        if _functor_like(a) and _functor_like(b):
            g, f = _fun(b, op), _fun(a, op)
            if f.cod != g.dom:
                raise SammyTypeError("Hcomp: functors are not composable")
            out = (compose_functors(g, f),)
        else:
            out = (hcomp(as_nat(b), as_nat(a)),)
    elif op == "Vcomp":
        out = (vcomp(as_nat(args[0]), as_nat(args[1])),)
    elif op == "Pow":
        x, y = args
        if isinstance(x, FinCat) and isinstance(y, FinCat):
            out = (K.pow(x, y, **bounds),)
        elif isinstance(x, FunctorData) and isinstance(y, FinCat):
            out = (K.precompose(x, y, **bounds),)
        elif isinstance(x, FinCat) and isinstance(y, FunctorData):
            out = (K.postcompose(x, y, **bounds),)
        else:
            raise SammyTypeError(f"Pow is undefined on ({kind_of(x)}, {kind_of(y)})")
    elif op in ("KanExL", "KanExR"):
        side = "left" if op == "KanExL" else "right"
        out = tuple(K.kan_extension(side, _fun(args[0], op), _fun(args[1], op)))
    elif op == "KanInd":
        g, f, h = (_fun(x, op) for x in args[:3])
        beta = as_nat(args[3])
        if h.dom != g.cod or h.cod != f.cod:
            raise SammyTypeError("KanInd: competitor functor has the wrong source or target")
        if beta.src_fun != compose_functors(h, g) or beta.tgt_fun != f:
            raise SammyTypeError("KanInd: transformation must run from h.g to f")
        kr = K.kan_extension("right", g, f)
        out = (K.kan_induced(kr, g, h, beta),)
    elif op == "KanLif":
        out = tuple(K.kan_lifting(_fun(args[0], op), _fun(args[1], op),
                                  limit_functors=limits.max_functors))
    elif op == "Coprod":
        x, y = args
        if isinstance(x, FinCat) and isinstance(y, FinCat):
            out = K.coproduct(x, y)
        elif isinstance(x, FunctorData) and isinstance(y, FunctorData):
            out = (K.copair(x, y),)
        else:
            raise SammyTypeError(f"Coprod is undefined on ({kind_of(x)}, {kind_of(y)})")
    elif op == "Coeq":
        f, g = _fun(args[0], op), _fun(args[1], op)
        out = K.coequalizer_cat(f, g, max_morphisms=limits.max_morphisms)
    elif op == "Pullback":
        out = tuple(K.pullback(_fun(args[0], op), _fun(args[1], op)))
    elif op == "Composable":
        out = (K.composable_functor(_cat(args[0], op), **bounds),)
    else:
        raise SammyTypeError(f"unknown operation {op!r}")
    for v in out:
        _check_size(v, limits)
    return tuple(out)


def _check_size(v, limits: Limits):
    cats = ()
    if isinstance(v, FinCat):
        cats = (v,)
    elif isinstance(v, FunctorData):
        cats = (v.dom, v.cod)
    elif isinstance(v, NatTransData):
        cats = (v.dom, v.cod)
    for c in cats:
        if c.n_obj > limits.max_objects or c.n_mor > limits.max_morphisms:
            raise SizeBound(f"result has {c.n_obj} objects and {c.n_mor} morphisms, over the "
                            f"bound ({limits.max_objects}, {limits.max_morphisms})",
                            (limits.max_objects, limits.max_morphisms))
