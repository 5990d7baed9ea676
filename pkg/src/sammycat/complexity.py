"""Bounded search for the shortest straight-line program producing a value.

The search walks a frontier of *value sets*: a state is the set of values a
straight-line program has bound so far, and two programs reaching the same set
are interchangeable for everything that follows.  Layer ``d`` holds the states
reachable in exactly ``d`` operations that were not reachable earlier.  The
last layer is generated and checked but never stored.

Reported lengths are exact for the straight-line fragment within the size
budget, and upper bounds for programs with control flow.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from .errors import BudgetExhausted, SammyError
from .fincat import (FinCat, FunctorData, MorRef, NatTransData, ObjRef, ONE, TWO, ZERO,
                     determine, identity_functor)
from .functors import as_nat
from .iso import canonical_key, structure_key
from .lang.ops import Limits, apply, kind_of
from .lang.parser import length, parse

NOTE = "exact over straight-line programs within the size budget; an upper bound for full programs"

CONSTANT_OPS = ("Zero", "One", "Two", "IsoTwo", "S", "T")


@dataclass(frozen=True)
class Budget:
    max_len: int = 6
    max_objects: int = 12
    max_morphisms: int = 40
    max_states: int = 200_000
    max_functors: int = 64
    deadline: float | None = None   # wall-clock seconds per call

    def limits(self) -> Limits:
        return Limits(max_steps=10_000, max_objects=self.max_objects,
                      max_morphisms=self.max_morphisms, max_functors=self.max_functors)


@dataclass
class ComplexityReport:
    target: str
    k: int | None
    exact: bool
    witness: str | None
    mode: str
    limits: dict
    states_per_depth: list = field(default_factory=list)
    categories_per_depth: list = field(default_factory=list)
    truncated: bool = False
    note: str = NOTE

    def to_json(self) -> dict:
        return asdict(self)


def describe(x) -> str:
    if isinstance(x, tuple) and not isinstance(x, (ObjRef, MorRef)):
        return "(" + ", ".join(describe(v) for v in x) + ")"
    if isinstance(x, FinCat):
        return f"cat[{x.n_obj} objects, {x.n_mor} morphisms]"
    if isinstance(x, FunctorData):
        return f"functor[{describe(x.dom)} -> {describe(x.cod)}]"
    if isinstance(x, NatTransData):
        return f"nat[{describe(x.dom)} -> {describe(x.cod)}]"
    return kind_of(x)


# -- per-process caches shared by all searches ---------------------------------------

_op_cache: dict = {}
_key_cache: dict = {}
_CACHE_LIMIT = 500_000


def _key(v):
    k = _key_cache.get(v)
    if k is None:
        try:
            k = structure_key(v)
        except SammyError:
            k = ("raw", v)
        if len(_key_cache) > _CACHE_LIMIT:
            _key_cache.clear()
        _key_cache[v] = k
    return k


def _apply_cached(op, args, limits: Limits):
    key = (op, args, limits)
    hit = _op_cache.get(key, _op_cache)
    if hit is not _op_cache:
        return hit
    try:
        out = apply(op, list(args), limits)
    except (SammyError, RecursionError):
        out = None
    if len(_op_cache) > _CACHE_LIMIT:
        _op_cache.clear()
    _op_cache[key] = out
    return out


# -- candidate generation ------------------------------------------------------------

def _ends(v):
    """(domain, codomain) of anything usable as a 1- or 2-cell, else None."""
    if isinstance(v, FinCat):
        return v, v
    if isinstance(v, (FunctorData, NatTransData)):
        return v.dom, v.cod
    if isinstance(v, ObjRef):
        return ONE, v.cat
    if isinstance(v, MorRef):
        return TWO, v.cat
    return None


def _as_functor(v):
    if isinstance(v, FunctorData):
        return v
    if isinstance(v, FinCat):
        return identity_functor(v)
    if isinstance(v, (ObjRef, MorRef)):
        return determine(None, v)
    return None


def _candidates(vals):
    """Yield ``(op, arg_indices)`` for every type-plausible statement on ``vals``."""
    for op in CONSTANT_OPS:
        yield op, ()
    idx = range(len(vals))
    cats = [i for i in idx if isinstance(vals[i], FinCat)]
    funs = [i for i in idx if isinstance(vals[i], FunctorData)]
    nats = [i for i in idx if isinstance(vals[i], NatTransData)]
    refs = [i for i in idx if isinstance(vals[i], (ObjRef, MorRef))]
    ends = [_ends(v) for v in vals]
    for i in cats:
        yield "Ident", (i,)
        yield "Op", (i,)
        yield "Composable", (i,)
        c = vals[i]
        if c == ONE or c == TWO:
            yield "Pick", (i,)
        for k in range(c.n_obj):
            yield "Determine", (i, f"o{k}")
        for m in range(c.n_mor):
            yield "Determine", (i, f"m{m}")
    for i in funs:
        f = vals[i]
        yield "Ident", (i,)
        yield "Op", (i,)
        yield "Source", (i,)
        yield "Target", (i,)
        if f.dom == ONE or f.dom == TWO:
            yield "Pick", (i,)
    for i in nats:
        yield "Op", (i,)
        yield "Source", (i,)
        yield "Target", (i,)
    for i in refs:
        yield "Determine", (i,)
        yield "Source", (i,)
        yield "Target", (i,)
    for i in cats:
        a = vals[i]
        for j in cats:
            b = vals[j]
            if a.n_obj == 0 or (b.n_obj == 1 and b.n_mor == 1):
                yield "Bang", (i, j)
            yield "Pow", (i, j)
            yield "Coprod", (i, j)
    for i in idx:
        for j in idx:
            # Hcomp(b, a) needs cod(a) == dom(b)
            if ends[i] and ends[j] and ends[j][1] == ends[i][0] and (i != j or ends[i][0] == ends[i][1]):
                yield "Hcomp", (i, j)
    cells = [i for i in idx if ends[i]]
    for i in cells:
        for j in cells:
            if ends[i] == ends[j]:
                yield "Vcomp", (i, j)
    for i in funs:
        for j in cats:
            yield "Pow", (i, j)
            yield "Pow", (j, i)
    fl = funs + cats + refs
    for i in fl:
        g = _as_functor(vals[i])
        for j in fl:
            f = _as_functor(vals[j])
            if g.dom == f.dom:
                yield "KanExL", (i, j)
                yield "KanExR", (i, j)
                if g.cod == f.cod:
                    yield "Coeq", (i, j)
            if g.cod == f.cod:
                yield "Pullback", (i, j)
                yield "KanLif", (i, j)
                if i in funs and j in funs:
                    yield "Coprod", (i, j)
    for ig in fl:
        g = _as_functor(vals[ig])
        for jf in fl:
            f = _as_functor(vals[jf])
            if g.dom != f.dom:
                continue
            for kh in fl:
                h = _as_functor(vals[kh])
                if h.dom != g.cod or h.cod != f.cod:
                    continue
                for lb in cells:
                    beta = as_nat(vals[lb])
                    if beta.dom == f.dom and beta.cod == f.cod and beta.tgt_fun == f:
                        yield "KanInd", (ig, jf, kh, lb)


# -- frontier -----------------------------------------------------------------------

def _name(i: int) -> str:
    return chr(65 + i) if i < 26 else f"V{i}"


@dataclass(frozen=True)
class _Node:
    program: tuple        # statement texts
    names: tuple          # variable name per bound value (inputs first)
    values: tuple


class _Explorer:
    """Layer-by-layer frontier for one input environment and budget.

    ``first_seen`` maps every value produced so far to the depth at which it
    first appeared and the lexicographically smallest program of that depth
    binding it.  Layers below ``max_len`` are stored for further expansion.
    """

    def __init__(self, given: dict, budget: Budget):
        self.budget = budget
        self.limits = budget.limits()
        self.inputs = tuple(given.items())
        self.used_names = set(given)
        root = _Node((), tuple(given), tuple(given.values()))
        self.layers = [[root]]
        self.seen = {frozenset(root.values)}
        self.truncated_at = None
        self.first_seen = {}
        self.by_depth = [[]]
        self.states_per_depth = [1]
        self.categories_per_depth = []
        self._record(0, [root])

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def exact_below(self, d: int) -> bool:
        return self.truncated_at is None or self.truncated_at >= d

    def _record(self, depth, nodes):
        fresh = self.by_depth[depth]
        for n in nodes:
            for name, v in zip(n.names, n.values):
                if v not in self.first_seen:
                    self.first_seen[v] = (depth, n, name)
                    fresh.append(v)
        self.categories_per_depth.append(
            len({canonical_key(v) for v in fresh if isinstance(v, FinCat)}))

    def _fresh(self, node: _Node, count: int):
        out = []
        i = len(node.names) - len(self.inputs)
        while len(out) < count:
            n = _name(i)
            i += 1
            if n not in self.used_names:
                out.append(n)
        return out

    def _expand(self, nodes, deadline):
        """Best child per new value set, for a slice of the layer."""
        best = {}
        seen = self.seen
        for k, node in enumerate(nodes):
            if deadline is not None and k % 64 == 0 and time.monotonic() > deadline:
                raise _Timeout
            vals = []
            pos = {}
            names = {}
            for n, v in zip(node.names, node.values):
                if v not in pos:
                    pos[v] = len(vals)
                    vals.append(v)
                    names[v] = n
            for op, arg_idx in _candidates(vals):
                args = tuple(a if isinstance(a, str) else vals[a] for a in arg_idx)
                out = _apply_cached(op, args, self.limits)
                if not out or all(o in pos for o in out):
                    continue
                key = frozenset(node.values + out)
                if key in seen:
                    continue
                targets = self._fresh(node, len(out))
                text = f"{', '.join(targets)} = {op}"
                if arg_idx:
                    text += "(" + ", ".join(a if isinstance(a, str) else names[vals[a]]
                                            for a in arg_idx) + ")"
                program = node.program + (text,)
                old = best.get(key)
                if old is None or program < old.program:
                    best[key] = _Node(program, node.names + tuple(targets), node.values + out)
        return best

    def advance(self, workers: int = 1, deadline: float | None = None):
        """Generate the next layer; it is stored only below ``max_len``."""
        layer = self.layers[-1]
        workers = max(1, int(workers))
        if workers > 1 and len(layer) > 1:
            chunk = (len(layer) + workers - 1) // workers
            parts = [layer[i:i + chunk] for i in range(0, len(layer), chunk)]
            with ThreadPoolExecutor(workers) as pool:
                results = list(pool.map(lambda p: self._expand(p, deadline), parts))
        else:
            results = [self._expand(layer, deadline)]
        best = {}
        for r in results:
            for k, node in r.items():
                old = best.get(k)
                if old is None or node.program < old.program:
                    best[k] = node
        nodes = sorted(best.values(), key=lambda n: n.program)
        depth = self.depth + 1
        self.states_per_depth.append(len(nodes))
        self.by_depth.append([])
        self._record(depth, nodes)
        if depth < self.budget.max_len:
            room = self.budget.max_states - len(self.seen)
            if len(nodes) > room:
                if self.truncated_at is None:
                    self.truncated_at = depth
                nodes = nodes[:max(room, 0)]
            self.seen.update(frozenset(n.values) for n in nodes)
        self.layers.append(nodes)
        return nodes

    def witness(self, node: _Node, returned) -> str:
        lines = [f"Input {n} : {kind_of(v)}" for n, v in self.inputs]
        lines += list(node.program)
        lines.append(f"Return {', '.join(returned)}")
        return "\n".join(lines) + "\n"

    def stats(self) -> dict:
        return {"states_per_depth": list(self.states_per_depth),
                "categories_per_depth": list(self.categories_per_depth),
                "truncated_at": self.truncated_at}


class _Timeout(Exception):
    pass


_explorers: dict = {}


def _explorer(given: dict, budget: Budget) -> _Explorer:
    key = (tuple(given.items()), replace(budget, deadline=None))
    ex = _explorers.get(key)
    if ex is None:
        if len(_explorers) > 64:
            _explorers.clear()
        ex = _explorers[key] = _Explorer(given, budget)
    return ex


def clear_caches():
    """Drop memoised operation results, structure keys and frontiers."""
    _explorers.clear()
    _op_cache.clear()
    _key_cache.clear()


class _Matcher:
    def __init__(self, target, mode: str):
        if mode not in ("iso", "eq"):
            raise ValueError("mode must be 'iso' or 'eq'")
        self.mode = mode
        self.parts = target if _is_tuple(target) else (target,)
        self.keys = [self._k(p) for p in self.parts]

    def _k(self, v):
        return _key(v) if self.mode == "iso" else v

    def matches(self, part, key, v) -> bool:
        if type(part) is not type(v):
            return False
        if self.mode == "eq":
            return v == part
        if isinstance(part, FinCat):
            if (part.n_obj, part.n_mor) != (v.n_obj, v.n_mor):
                return False
        else:
            e1, e2 = _ends(part), _ends(v)
            if e1 and e2 and any((a.n_obj, a.n_mor) != (b.n_obj, b.n_mor) for a, b in zip(e1, e2)):
                return False
        return _key(v) == key

    def in_node(self, node: _Node):
        out = []
        for part, key in zip(self.parts, self.keys):
            hit = next((n for n, v in zip(node.names, node.values) if self.matches(part, key, v)), None)
            if hit is None:
                return None
            out.append(hit)
        return out


def _is_tuple(x):
    return isinstance(x, tuple) and not isinstance(x, (ObjRef, MorRef))


def _find(ex: _Explorer, matcher: _Matcher, d: int):
    """Smallest witness of length ``d`` for the target, or ``None``."""
    if len(matcher.parts) == 1:
        part, key = matcher.parts[0], matcher.keys[0]
        hits = [ex.first_seen[v] for v in ex.by_depth[d] if matcher.matches(part, key, v)]
        if not hits:
            return None
        _, node, name = min(hits, key=lambda h: (h[1].program, h[2]))
        return ex.witness(node, [name])
    for node in ex.layers[d]:
        names = matcher.in_node(node)
        if names is not None:
            return ex.witness(node, names)
    return None


def k_search(target, given: dict | None = None, mode: str = "iso",
             budget: Budget | None = None, workers: int = 1) -> ComplexityReport:
    """Length of the shortest straight-line program producing ``target`` from ``given``.

    ``target`` may be a tuple, in which case every component must be bound by
    the same program.  Raises :class:`BudgetExhausted` (carrying the partial
    report) when no program of length ``<= budget.max_len`` is found, or when
    ``budget.deadline`` seconds elapse first.
    """
    budget = budget or Budget()
    given = dict(given or {})
    matcher = _Matcher(target, mode)
    ex = _explorer(given, budget)
    label = describe(target)
    deadline = None if budget.deadline is None else time.monotonic() + budget.deadline

    def report(k, witness, exact, upto):
        s = ex.stats()
        return ComplexityReport(label, k, exact, witness, mode, _budget_dict(budget),
                                s["states_per_depth"][:upto + 1],
                                s["categories_per_depth"][:upto + 1],
                                ex.truncated_at is not None and ex.truncated_at < upto)

    for d in range(budget.max_len + 1):
        if d > ex.depth:
            if not ex.layers[-1]:
                break
            try:
                ex.advance(workers, deadline)
            except _Timeout:
                raise BudgetExhausted(f"deadline of {budget.deadline}s reached at depth {d}",
                                      report(None, None, False, d - 1)) from None
        w = _find(ex, matcher, d)
        if w is not None:
            return report(d, w, ex.exact_below(d), d)
    raise BudgetExhausted(f"no program of length <= {budget.max_len} found for {label}",
                          report(None, None, False, min(ex.depth, budget.max_len)))


def _budget_dict(budget: Budget) -> dict:
    d = asdict(budget)
    d.pop("deadline")
    return d


def explore(given: dict | None = None, budget: Budget | None = None, workers: int = 1,
            kinds=(FinCat,)):
    """First depth and witness for every value of the given kinds reached within budget.

    Returns ``(table, stats)`` where ``table`` maps an isomorphism key to
    ``(depth, exact, witness, value)``.  ``stats["complete"]`` is false when the
    deadline stopped the search early.
    """
    budget = budget or Budget()
    given = dict(given or {})
    ex = _explorer(given, budget)
    deadline = None if budget.deadline is None else time.monotonic() + budget.deadline
    complete = True
    while ex.depth < budget.max_len and ex.layers[-1]:
        try:
            ex.advance(workers, deadline)
        except _Timeout:
            complete = False
            break
    table = {}
    for d in range(ex.depth + 1):
        for v in ex.by_depth[d]:
            if isinstance(v, kinds):
                k = _key(v)
                if k not in table:
                    _, node, name = ex.first_seen[v]
                    table[k] = (d, ex.exact_below(d), ex.witness(node, [name]), v)
    stats = ex.stats()
    stats["complete"] = complete
    stats["depth"] = ex.depth
    return table, stats


def replay(report: ComplexityReport, given: dict | None = None):
    """Run a witness program and return what it produces."""
    from .lang.interp import run
    return run(parse(report.witness), given or {}, limits=Limits(
        max_objects=report.limits["max_objects"], max_morphisms=report.limits["max_morphisms"],
        max_functors=report.limits["max_functors"]))


# -- theorem rows --------------------------------------------------------------------

MACROS = {
    "pair": """\
Input C : cat
Input D : cat
O = One
b = Bang(C, O)
c = Bang(D, O)
P, p, q = Pullback(b, c)
Return P
""",
    "double": """\
Input C : cat
O = One
b = Bang(C, O)
P, p, q = Pullback(b, b)
Return P
""",
    "target": """\
Input F : functor
B = Target(F)
Return B
""",
    "compos": """\
Input a : nat
Input g : nat
b = Vcomp(g, a)
Return b
""",
    "kan": """\
Input G : functor
Input F : functor
L, a = KanExL(G, F)
Return L, a
""",
}


def macro_constants() -> dict:
    return {name: length(parse(text)) for name, text in MACROS.items()}


@dataclass
class TheoremRow:
    theorem: str
    instance: str
    lhs: int | None
    rhs_terms: list
    constant: int
    rhs: int | None
    status: str          # holds | fails | inconclusive
    exact: bool


def _k(x, given=None, budget=None, mode="iso", workers=1):
    try:
        r = k_search(x, given, mode, budget, workers)
        return r.k, r.exact
    except BudgetExhausted:
        return None, False


def _row(theorem, instance, lhs, terms, const):
    k_lhs, _ = lhs
    ks = [t[0] for t in terms]
    exact_terms = all(t[1] for t in terms)
    rhs = None if any(k is None for k in ks) else sum(ks) + const
    if k_lhs is None or rhs is None or not exact_terms:
        status = "inconclusive"
    else:
        status = "holds" if k_lhs <= rhs else "fails"
    return TheoremRow(theorem, instance, k_lhs, ks, const, rhs, status,
                      exact_terms and lhs[1])


def default_suite():
    """Instances for the inequality rows, kept inside the default search budget."""
    from .constructions import coproduct, kan_extension
    from .fincat import ISO_TWO, bang, discrete, identity_nat, point
    cats = {"One": ONE, "Two": TWO, "IsoTwo": ISO_TWO, "1+1": discrete(2), "Zero": ZERO}
    pairs = [("One", "Two"), ("Two", "One"), ("One", "IsoTwo"), ("1+1", "Two"),
             ("Zero", "Two"), ("Two", "Two")]
    doubles = ["One", "Two", "IsoTwo", "1+1", "Zero"]
    functors = {"s": point(TWO, 0), "t": point(TWO, 1), "!:2->1": bang(TWO, ONE),
                "inl:1->1+1": coproduct(ONE, ONE)[1], "!:0->2": bang(ZERO, TWO)}
    s, t = point(TWO, 0), point(TWO, 1)
    kr = kan_extension("right", bang(ONE, ONE), s)
    nats = {
        "id_s . id_s": (identity_nat(s), identity_nat(s)),
        "id_t . id_t": (identity_nat(t), identity_nat(t)),
        "unit . id": (identity_nat(kr[1].src_fun), kr[1]),
    }
    kans = {"Lan along !:2->1 of Id": (bang(TWO, ONE), identity_functor(TWO)),
            "Lan along s of s": (s, s),
            "Lan along Id of !:2->1": (identity_functor(TWO), bang(TWO, ONE))}
    return {"cats": cats, "pairs": pairs, "doubles": doubles, "functors": functors,
            "nats": nats, "kans": kans}


def theorem_constants(suite=None, budget: Budget | None = None, mode: str = "iso",
                      workers: int = 1) -> dict:
    """Measured macro constants and one verified row per instance."""
    from .constructions import kan_extension, product
    from .functors import vcomp
    suite = suite or default_suite()
    budget = budget or Budget()
    c = macro_constants()
    cats = suite["cats"]
    kw = {"budget": budget, "mode": mode, "workers": workers}
    rows = []
    for a, b in suite["pairs"]:
        C, D = cats[a], cats[b]
        P = product(C, D)[0]
        rows.append(_row("product", f"{a} x {b}", _k(P, **kw),
                         [_k(C, **kw), _k(D, {"X": C}, **kw)], c["pair"]))
    for a in suite["doubles"]:
        C = cats[a]
        rows.append(_row("double", f"{a} x {a}", _k(product(C, C)[0], **kw),
                         [_k(C, **kw)], c["double"]))
    for name, F in suite["functors"].items():
        rows.append(_row("target", name, _k(F.cod, **kw), [_k(F, **kw)], c["target"]))
    for name, (g, a) in suite["nats"].items():
        beta = vcomp(g, a)
        rows.append(_row("composition", name, _k(beta, **kw),
                         [_k(a, **kw), _k(g, {"X": a}, **kw)], c["compos"]))
    for name, (G, F) in suite["kans"].items():
        try:
            L = tuple(kan_extension("left", G, F))
        except SammyError:
            continue
        rows.append(_row("kan", name, _k(L, **kw),
                         [_k(F, **kw), _k(G, {"X": F}, **kw)], c["kan"]))
    degenerate = []
    for b in ("One", "Two", "IsoTwo", "1+1"):
        k0 = _k(ZERO, **kw)[0]
        kp = _k(product(ZERO, cats[b])[0], **kw)[0]
        degenerate.append({"instance": f"Zero x {b}", "k_product": kp, "k_zero": k0,
                           "status": "holds" if kp == k0 and kp is not None else "fails"})
    return {"constants": c, "rows": [asdict(r) for r in rows], "degenerate": degenerate,
            "budget": asdict(budget), "mode": mode, "note": NOTE}


def equivalence_invariance_experiment(pool, budget: Budget | None = None, mode: str = "iso",
                                      workers: int = 1) -> dict:
    """Partition ``pool`` by equivalence and compare K within each class.

    The conversion constant of a class is the largest relative complexity
    ``K(a | b)`` between two members, i.e. the longest program needed to turn
    one member into another.  The skeleton macro length is reported alongside.
    """
    from .iso import equivalent
    from .lang.stdlib import macro
    budget = budget or Budget()
    kw = {"budget": budget, "mode": mode, "workers": workers}
    classes = []
    for c in pool:
        for cls in classes:
            if equivalent(cls[0], c):
                cls.append(c)
                break
        else:
            classes.append([c])
    out = []
    for cls in classes:
        ks = [_k(c, **kw) for c in cls]
        conv = 0
        for i, a in enumerate(cls):
            for j, b in enumerate(cls):
                if i != j:
                    r = _k(a, {"X": b}, **kw)[0]
                    conv = max(conv, r if r is not None else budget.max_len + 1)
        vals = [k for k, _ in ks]
        spread = None if any(v is None for v in vals) else max(vals) - min(vals)
        out.append({
            "members": [describe(c) for c in cls],
            "k": vals,
            "exact": all(e for _, e in ks),
            "spread": spread,
            "conversion_constant": conv,
            "status": "holds" if spread is not None and spread <= conv else "inconclusive",
        })
    return {"classes": out, "skeleton_macro_length": length(macro("skeleton")),
            "budget": asdict(budget), "mode": mode, "note": NOTE}


# -- output ----------------------------------------------------------------------------

def report_json(obj) -> str:
    if isinstance(obj, ComplexityReport):
        obj = obj.to_json()
    return json.dumps(obj, indent=2, sort_keys=True)


def format_table(rows: list[dict], columns: list[str]) -> str:
    """Aligned plain-text table."""
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"
