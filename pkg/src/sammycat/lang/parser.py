"""Line-oriented parser for ``.sam`` programs.

Grammar (one statement per line, ``#`` starts a comment)::

    Input VAR ':' KIND
    [LABEL ':'] VAR {',' VAR} '=' OPNAME ['(' [ARG {',' ARG}] ')']
    [LABEL ':'] If VAR '==' VAR Goto LABEL
    [LABEL ':'] Goto LABEL
    [LABEL ':'] Return VAR {',' VAR}

``ARG`` is a variable, a constant name (``Zero``, ``One``, ``Two``,
``IsoTwo``, ``S``, ``T``) or a literal ``o<k>`` / ``m<k>`` naming object or
morphism ``k`` (only meaningful as the second argument of ``Determine``).
A constant used as an argument is shorthand for loading it once, and is
counted that way by :func:`length`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ParseError

KINDS = ("cat", "functor", "nat", "obj", "mor", "any")

# name -> (allowed arities, number of outputs)
OPERATIONS = {
    "Zero": ((0,), 1), "One": ((0,), 1), "Two": ((0,), 1), "IsoTwo": ((0,), 1),
    "S": ((0,), 1), "T": ((0,), 1),
    "Bang": ((2,), 1),
    "Ident": ((1,), 1), "Source": ((1,), 1), "Target": ((1,), 1), "Op": ((1,), 1),
    "Pick": ((1,), 1), "Determine": ((1, 2), 1),
    "Hcomp": ((2,), 1), "Vcomp": ((2,), 1), "Pow": ((2,), 1),
    "KanExL": ((2,), 2), "KanExR": ((2,), 2), "KanInd": ((4,), 1), "KanLif": ((2,), 2),
    "Coprod": ((2,), 3), "Coeq": ((2,), 2), "Pullback": ((2,), 3),
    "Composable": ((1,), 1),
}

_IDENT = r"[A-Za-z_][A-Za-z0-9_']*"
_LITERAL = re.compile(r"^[om](\d+)$")
_LABEL = re.compile(rf"^({_IDENT})\s*:\s*(.*)$")
_INPUT = re.compile(rf"^Input\s+({_IDENT})\s*:\s*({_IDENT})\s*$")
_IF = re.compile(rf"^If\s+({_IDENT})\s*==\s*({_IDENT})\s+Goto\s+({_IDENT})\s*$")
_GOTO = re.compile(rf"^Goto\s+({_IDENT})\s*$")
_RETURN = re.compile(rf"^Return\s+({_IDENT}(?:\s*,\s*{_IDENT})*)\s*$")
_ASSIGN = re.compile(rf"^({_IDENT}(?:\s*,\s*{_IDENT})*)\s*=\s*({_IDENT})\s*(?:\((.*)\))?\s*$")
_KEYWORDS = {"If", "Goto", "Return", "Input"}
CONSTANTS = ("Zero", "One", "Two", "IsoTwo", "S", "T")


@dataclass(frozen=True)
class Statement:
    kind: str                      # assign | if | goto | return
    label: str | None = None
    targets: tuple = ()
    op: str | None = None
    args: tuple = ()
    lhs: str | None = None
    rhs: str | None = None
    goto: str | None = None
    line: int = 0

    def text(self) -> str:
        head = f"{self.label}: " if self.label else ""
        if self.kind == "assign":
            return f"{head}{', '.join(self.targets)} = {self.op}({', '.join(self.args)})"
        if self.kind == "if":
            return f"{head}If {self.lhs} == {self.rhs} Goto {self.goto}"
        if self.kind == "goto":
            return f"{head}Goto {self.goto}"
        return f"{head}Return {', '.join(self.targets)}"


@dataclass(frozen=True)
class SammyProgram:
    statements: tuple
    inputs: tuple = ()             # ((name, kind), ...)
    labels: dict = field(default_factory=dict, compare=False)
    inline_constants: frozenset = frozenset()

    def text(self) -> str:
        lines = [f"Input {n} : {k}" for n, k in self.inputs]
        lines += [s.text() for s in self.statements]
        return "\n".join(lines) + "\n"


def is_literal(arg: str) -> bool:
    return bool(_LITERAL.match(arg))


def length(p: SammyProgram) -> int:
    """Operation count: every statement except ``Return``, plus one load per
    distinct constant written as an argument."""
    return sum(1 for s in p.statements if s.kind != "return") + len(p.inline_constants)


def parse(text: str) -> SammyProgram:
    statements = []
    inputs = []
    labels = {}
    defined = set()
    pending_uses = []
    inline = set()
    assigned = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _INPUT.match(line)
        if m:
            name, kind = m.groups()
            if kind not in KINDS:
                raise ParseError(f"unknown input kind {kind!r}", lineno)
            if statements:
                raise ParseError("Input declarations must precede statements", lineno)
            inputs.append((name, kind))
            defined.add(name)
            continue
        label = None
        m = _LABEL.match(line)
        if m and m.group(1) not in _KEYWORDS:
            label, line = m.groups()
            if label in labels:
                raise ParseError(f"duplicate label {label!r}", lineno)
            labels[label] = len(statements)
        stmt = _statement(line, label, lineno)
        uses = []
        if stmt.kind == "assign":
            uses = [a for a in stmt.args if not is_literal(a)]
        elif stmt.kind == "if":
            uses = [stmt.lhs, stmt.rhs]
        elif stmt.kind == "return":
            uses = list(stmt.targets)
        for u in uses:
            if u in CONSTANTS and u not in defined and stmt.kind == "assign":
                inline.add(u)
                continue
            if u not in defined:
                raise ParseError(f"variable {u!r} used before definition", lineno,
                                 raw.find(u) + 1 if u in raw else None)
        if stmt.kind == "assign":
            defined.update(stmt.targets)
            for t in stmt.targets:
                assigned.setdefault(t, lineno)
        if stmt.goto:
            pending_uses.append((stmt.goto, lineno))
        statements.append(stmt)
    for target, lineno in pending_uses:
        if target not in labels:
            raise ParseError(f"unknown label {target!r}", lineno)
    for name in sorted(inline):
        if name in assigned or any(name == n for n, _ in inputs):
            raise ParseError(f"{name!r} is used both as a constant and as a variable",
                             assigned.get(name))
    return SammyProgram(tuple(statements), tuple(inputs), labels, frozenset(inline))


def _statement(line: str, label, lineno) -> Statement:
    m = _IF.match(line)
    if m:
        lhs, rhs, goto = m.groups()
        return Statement("if", label, lhs=lhs, rhs=rhs, goto=goto, line=lineno)
    m = _GOTO.match(line)
    if m:
        return Statement("goto", label, goto=m.group(1), line=lineno)
    m = _RETURN.match(line)
    if m:
        names = tuple(x.strip() for x in m.group(1).split(","))
        return Statement("return", label, targets=names, line=lineno)
    m = _ASSIGN.match(line)
    if m:
        targets = tuple(x.strip() for x in m.group(1).split(","))
        op = m.group(2)
        body = (m.group(3) or "").strip()
        args = tuple(a.strip() for a in body.split(",")) if body else ()
        if op == "Cat":
            raise ParseError("the category of all small categories (Cat) cannot be "
                             "represented; it is not available as a constant", lineno)
        if op not in OPERATIONS:
            raise ParseError(f"unknown operation {op!r}", lineno, line.find(op) + 1)
        arities, outputs = OPERATIONS[op]
        if len(args) not in arities:
            raise ParseError(f"{op} takes {' or '.join(map(str, arities))} argument(s), "
                             f"got {len(args)}", lineno)
        if len(targets) > outputs:
            raise ParseError(f"{op} produces at most {outputs} value(s)", lineno)
        for a in args:
            if not (re.fullmatch(_IDENT, a) or is_literal(a)):
                raise ParseError(f"bad argument {a!r}", lineno)
        if any(is_literal(a) for a in args) and not (op == "Determine" and len(args) == 2
                                                      and is_literal(args[1]) and not is_literal(args[0])):
            raise ParseError("literals are only allowed as Determine(C, o<k>|m<k>)", lineno)
        return Statement("assign", label, targets=targets, op=op, args=args, line=lineno)
    raise ParseError(f"syntax error: {line!r}", lineno, 1)
