"""Interpreter for parsed programs."""

from __future__ import annotations

from ..errors import SammyError, SammyTypeError, SizeBound, StepLimit
from ..functors import as_nat
from .ops import Limits, apply, kind_of
from .parser import SammyProgram, is_literal, parse

_KIND_CHECK = {
    "cat": ("cat",), "functor": ("functor",), "nat": ("nat",),
    "obj": ("obj",), "mor": ("mor",),
}


def values_equal(a, b) -> bool:
    """Strict equality used by ``If``: both sides as natural transformations."""
    try:
        return as_nat(a) == as_nat(b)
    except SammyTypeError:
        return a == b


def run(program: SammyProgram | str, env: dict | None = None,
        limits: Limits | None = None, trace: list | None = None):
    """Execute ``program`` and return the value (or tuple of values) it returns.

    ``env`` binds the declared inputs. Each executed statement costs one step.
    """
    if isinstance(program, str):
        program = parse(program)
    limits = limits or Limits()
    env = dict(env or {})
    for name, kind in program.inputs:
        if name not in env:
            raise SammyTypeError(f"missing input {name!r}")
        if kind != "any" and kind_of(env[name]) not in _KIND_CHECK[kind]:
            raise SammyTypeError(f"input {name!r} should be {kind}, got {kind_of(env[name])}")
    stmts = program.statements
    consts = program.inline_constants
    pc = 0
    steps = 0
    while pc < len(stmts):
        s = stmts[pc]
        steps += 1
        if steps > limits.max_steps:
            raise StepLimit(f"exceeded {limits.max_steps} steps at line {s.line}")
        if trace is not None:
            trace.append(s.line)
        if s.kind == "return":
            vals = tuple(env[t] for t in s.targets)
            return vals[0] if len(vals) == 1 else vals
        if s.kind == "goto":
            pc = program.labels[s.goto]
            continue
        if s.kind == "if":
            if values_equal(env[s.lhs], env[s.rhs]):
                pc = program.labels[s.goto]
            else:
                pc += 1
            continue
        try:
            args = [a if is_literal(a) else env[a] if a in env or a not in consts
                    else apply(a, [], limits)[0] for a in s.args]
        except KeyError as e:
            raise SammyError(f"line {s.line}: variable {e.args[0]!r} has no value") from None
        try:
            out = apply(s.op, args, limits)
        except SizeBound as e:
            hint = ""
            if s.op == "Coeq":
                hint = ("; a coequalizer of finite categories may be infinite "
                        "(IsoTwo is provided as a constant)")
            raise SizeBound(f"line {s.line} ({s.op}): {e}{hint}", e.bound) from e
        except SammyError as e:
            raise type(e)(f"line {s.line} ({s.op}): {e}") from e
        if len(s.targets) > len(out):
            raise SammyTypeError(f"line {s.line}: {s.op} produced {len(out)} value(s), "
                                 f"{len(s.targets)} requested")
        for t, v in zip(s.targets, out):
            env[t] = v
        pc += 1
    raise SammyError("program ended without Return")
