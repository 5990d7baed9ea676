"""Shipped macros and program generators.

Natural numbers are pointed chains: ``n`` is the linear order with ``n``
objects together with the functors ``1 -> chain(n)`` picking its first and
last object.  Concatenation glues the last object of one chain to the first
of the next, so ``concat(n, m) = n + m - 1`` and ``Two`` acts as successor.
"""

from __future__ import annotations

from importlib import resources

from ..fincat import ISO_TWO, FunctorData, chain, point
from .parser import SammyProgram, length, parse

MACROS = ("span", "omega", "iso_two_attempt", "comma", "skeleton", "concat")


def macro_text(name: str) -> str:
    if name not in MACROS:
        raise KeyError(f"unknown macro {name!r}")
    return resources.files(__package__).joinpath("macros", f"{name}.sam").read_text()


def macro(name: str) -> SammyProgram:
    return parse(macro_text(name))


def number(n: int):
    """The pointed chain ``(chain(n), first, last)`` encoding ``n >= 1``."""
    if n < 1:
        raise ValueError("numbers start at 1")
    c = chain(n)
    return c, point(c, 0), point(c, n - 1)


def decode(triple) -> int:
    """Inverse of :func:`number` up to isomorphism; raises on non-chains."""
    c, b, e = triple
    n = c.n_obj
    if c.n_mor != n * (n + 1) // 2 or b.obj_map[0] == e.obj_map[0] and n > 1:
        raise ValueError("not a pointed chain")
    for x in range(n):
        for y in range(n):
            if x != y and c.hom(x, y) and c.hom(y, x):
                raise ValueError("not a pointed chain")
    return n


def concat_block(x: str, y: str, out: str, tmp: str) -> list[str]:
    """Statements concatenating pointed chains ``x`` and ``y`` into ``out``.

    Each triple is named by a stem: ``x`` means ``x``, ``xB``, ``xE``.
    """
    return [
        f"{tmp}D, {tmp}i, {tmp}j = Coprod({x}, {y})",
        f"{tmp}e = Hcomp({tmp}i, {x}E)",
        f"{tmp}b = Hcomp({tmp}j, {y}B)",
        f"{out}, {tmp}q = Coeq({tmp}e, {tmp}b)",
        f"{tmp}qi = Hcomp({tmp}q, {tmp}i)",
        f"{out}B = Hcomp({tmp}qi, {x}B)",
        f"{tmp}qj = Hcomp({tmp}q, {tmp}j)",
        f"{out}E = Hcomp({tmp}qj, {y}E)",
    ]


CONCAT_LENGTH = 8
_PRELUDE = ["Tw = Two", "TwB = S", "TwE = T", "Acc = One", "AccB = Ident(Acc)",
            "AccE = Ident(Acc)"]


def binary_encode(n: int) -> SammyProgram:
    """A program with no inputs returning the pointed chain for ``n``.

    Reads the binary expansion of ``n`` from the top: start from 1; each
    further bit doubles (``k -> 2k``); a set bit then adds one.
    """
    if n < 1:
        raise ValueError("numbers start at 1")
    lines = list(_PRELUDE)
    for bit in bin(n)[3:]:
        lines += concat_block("Acc", "Acc", "Acc", "h")
        lines += concat_block("Acc", "Tw", "Acc", "d")
        if bit == "1":
            lines += concat_block("Acc", "Tw", "Acc", "u")
    lines.append("Return Acc, AccB, AccE")
    return parse("\n".join(lines) + "\n")


def encoding_length_bound(n: int) -> int:
    """Closed-form upper bound on ``length(binary_encode(n))``."""
    return len(_PRELUDE) + 3 * CONCAT_LENGTH * (n.bit_length() - 1)


# -- reading numbers from a bit chain -------------------------------------------

_READER = """\
# Decode a bit string into a number.  K is a chain with one object per bit
# (most significant first), F: K -> IsoTwo marks a bit as set when it lands on
# the same object as the first bit (which is always set), Pb / Pe point at the
# first and last bit.
Input K : cat
Input F : functor
Input Pb : functor
Input Pe : functor
Tw = Two
TwB = S
TwE = T
IdK = Ident(K)
# successor on K (saturating at the last bit): shift then retract
D1, a1, b1 = Coprod(K, Tw)
x1 = Hcomp(a1, Pe)
y1 = Hcomp(b1, TwB)
E1, q1 = Coeq(x1, y1)
Inc = Hcomp(q1, a1)
Rt, r = KanExR(Inc, IdK)
D2, a2, b2 = Coprod(Tw, K)
x2 = Hcomp(a2, TwE)
y2 = Hcomp(b2, Pb)
E2, q2 = Coeq(x2, y2)
Sh = Hcomp(q2, b2)
Succ = Hcomp(Rt, Sh)
Top = Hcomp(F, Pb)
Acc = One
AccB = Ident(Acc)
AccE = Ident(Acc)
P = Hcomp(Pb, Acc)
Loop: If P == Pe Goto Done
P = Hcomp(Succ, P)
Bit = Hcomp(F, P)
{double}
If Bit == Top Goto AddOne
Goto Loop
{add_one}
Goto Loop
Done: Return Acc, AccB, AccE
"""


def reader() -> SammyProgram:
    """Constant-size program turning a bit chain into the number it spells."""
    double = concat_block("Acc", "Acc", "Acc", "h") + concat_block("Acc", "Tw", "Acc", "d")
    add = concat_block("Acc", "Tw", "Acc", "u")
    add[0] = "AddOne: " + add[0]
    return parse(_READER.format(double="\n".join(double), add_one="\n".join(add)))


def bit_input(n: int) -> dict:
    """Inputs for :func:`reader` spelling ``n`` in binary."""
    if n < 1:
        raise ValueError("numbers start at 1")
    bits = bin(n)[2:]
    k = chain(len(bits))
    # object 0 of IsoTwo marks a set bit
    obj = [0 if b == "1" else 1 for b in bits]
    mor = []
    for m in k.morphisms:
        a, b = obj[k.src[m]], obj[k.tgt[m]]
        mor.append(ISO_TWO.hom(a, b)[0])
    return {"K": k, "F": FunctorData(k, ISO_TWO, obj, mor),
            "Pb": point(k, 0), "Pe": point(k, len(bits) - 1)}


def concat_numbers(n: int, m: int, limits=None):
    """Run the concatenation macro on the encodings of ``n`` and ``m``."""
    from .interp import run
    x, xb, xe = number(n)
    y, yb, ye = number(m)
    return run(macro("concat"), {"X": x, "Xb": xb, "Xe": xe, "Y": y, "Yb": yb, "Ye": ye},
               limits=limits)


__all__ = ["MACROS", "macro", "macro_text", "number", "decode", "concat_block",
           "concat_numbers", "binary_encode", "encoding_length_bound", "reader", "bit_input", "length"]
