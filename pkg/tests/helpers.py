"""Independent oracles and generators shared by the test modules.

Nothing here calls the package's kernels or enumerators; the oracles are
deliberately naive so they can be trusted as references.
"""

import random
from itertools import permutations, product

from sammycat.constructions import coproduct
from sammycat.constructions import product as cat_product
from sammycat.fincat import FinCat, FunctorData, NatTransData, chain, discrete, indiscrete, opposite, relabel


ACCEPTANCE = {}


def record(criterion, passed, detail):
    """Remember one acceptance line for the end-of-run summary."""
    ACCEPTANCE[criterion] = (passed, detail)


def axioms_hold(c: FinCat) -> bool:
    n = len(c.src)
    if len(c.tgt) != n or len(c.ident) != c.n_obj or len(c.comp) != n * n:
        return False
    if any(not (0 <= x < c.n_obj) for x in c.src + c.tgt):
        return False
    for o, i in enumerate(c.ident):
        if not (0 <= i < n) or c.src[i] != o or c.tgt[i] != o:
            return False
    for g in range(n):
        for f in range(n):
            h = c.comp[g * n + f]
            if c.src[g] == c.tgt[f]:
                if not (0 <= h < n) or c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
                    return False
            elif h != -1:
                return False
    for f in range(n):
        if c.comp[c.ident[c.tgt[f]] * n + f] != f or c.comp[f * n + c.ident[c.src[f]]] != f:
            return False
    for h in range(n):
        for g in range(n):
            if c.src[h] != c.tgt[g]:
                continue
            for f in range(n):
                if c.src[g] != c.tgt[f]:
                    continue
                if c.comp[c.comp[h * n + g] * n + f] != c.comp[h * n + c.comp[g * n + f]]:
                    return False
    return True


def brute_functors(A: FinCat, B: FinCat):
    out = []
    na, nb = A.n_mor, B.n_mor
    for om in product(range(B.n_obj), repeat=A.n_obj):
        choices = []
        for m in range(na):
            choices.append([k for k in range(nb) if B.src[k] == om[A.src[m]] and B.tgt[k] == om[A.tgt[m]]])
        for mm in product(*choices):
            if any(mm[A.ident[o]] != B.ident[om[o]] for o in range(A.n_obj)):
                continue
            if all(B.comp[mm[g] * nb + mm[f]] == mm[A.comp[g * na + f]]
                   for g in range(na) for f in range(na) if A.comp[g * na + f] >= 0):
                out.append(FunctorData(A, B, om, mm))
    return out


def brute_nats(F: FunctorData, G: FunctorData):
    A, B = F.dom, F.cod
    nb = B.n_mor
    choices = [[k for k in range(nb) if B.src[k] == F.obj_map[o] and B.tgt[k] == G.obj_map[o]]
               for o in range(A.n_obj)]
    out = []
    for comps in product(*choices):
        if all(B.comp[G.mor_map[m] * nb + comps[A.src[m]]] == B.comp[comps[A.tgt[m]] * nb + F.mor_map[m]]
               for m in range(A.n_mor)):
            out.append(NatTransData(F, G, comps))
    return out


def brute_automorphisms(c: FinCat) -> int:
    return sum(1 for F in brute_functors(c, c)
               if sorted(F.mor_map) == list(range(c.n_mor)) and sorted(F.obj_map) == list(range(c.n_obj)))


def brute_isomorphic(a: FinCat, b: FinCat) -> bool:
    if (a.n_obj, a.n_mor) != (b.n_obj, b.n_mor):
        return False
    return any(sorted(F.mor_map) == list(range(b.n_mor)) for F in brute_functors(a, b))


def random_preorder(rng: random.Random, k: int) -> FinCat:
    """Thin category from the reflexive-transitive closure of a random relation."""
    rel = [[i == j or rng.random() < 0.3 for j in range(k)] for i in range(k)]
    for m in range(k):
        for i in range(k):
            for j in range(k):
                rel[i][j] = rel[i][j] or (rel[i][m] and rel[m][j])
    arrows = [(i, j) for i in range(k) for j in range(k) if rel[i][j]]
    index = {a: n for n, a in enumerate(arrows)}
    ident = [index[i, i] for i in range(k)]
    table = {}
    for (b, c), g in index.items():
        for (a, b2), f in index.items():
            if b2 == b:
                table[g, f] = index[a, c]
    return FinCat.build(k, arrows, ident, table)


# a few small categories with non-trivial endomorphisms (monoids and friends)
def _monoid(table):
    n = len(table)
    comp = [table[g][f] for g in range(n) for f in range(n)]
    return FinCat(1, [0] * n, [0] * n, [0], comp)


Z2 = _monoid([[0, 1], [1, 0]])
IDEMPOTENT = _monoid([[0, 1], [1, 1]])
Z3 = _monoid([[(a + b) % 3 for b in range(3)] for a in range(3)])


def random_category(rng: random.Random, max_mor: int = 20) -> FinCat:
    while True:
        kind = rng.randrange(7)
        if kind == 0:
            c = random_preorder(rng, rng.randint(1, 5))
        elif kind == 1:
            c = chain(rng.randint(0, 5))
        elif kind == 2:
            c = rng.choice([discrete(rng.randint(0, 4)), indiscrete(rng.randint(1, 4))])
        elif kind == 3:
            c = rng.choice([Z2, IDEMPOTENT, Z3])
        elif kind == 4:
            c = coproduct(random_category(rng, 8), random_category(rng, 8))[0]
        elif kind == 5:
            c = cat_product(random_category(rng, 5), random_category(rng, 4))[0]
        else:
            c = opposite(random_category(rng, max_mor))
        if c.n_mor <= max_mor:
            return c


def shuffle(c: FinCat, rng: random.Random) -> FinCat:
    obj = list(range(c.n_obj))
    mor = list(range(c.n_mor))
    rng.shuffle(obj)
    rng.shuffle(mor)
    return relabel(c, obj, mor)


def all_object_bijections(n):
    return permutations(range(n))


def _whisker_count(C, alpha_comps, gam_cands, g_obj, beta_comps, side):
    """How many candidate gammas satisfy the triangle for one competitor."""
    nc = C.n_mor
    n = 0
    for gamma in gam_cands:
        if side == "right":
            ok = all(C.comp[alpha_comps[a] * nc + gamma.components[g_obj[a]]] == beta_comps[a]
                     for a in range(len(g_obj)))
        else:
            ok = all(C.comp[gamma.components[g_obj[a]] * nc + alpha_comps[a]] == beta_comps[a]
                     for a in range(len(g_obj)))
        n += ok
    return n


def brute_kan_failures(E, alpha, g, f, side):
    """Competitors (h, beta) without exactly one factorisation, by brute force."""
    B, C = g.cod, f.cod
    bad = []
    count = 0
    for h in brute_functors(B, C):
        hg = FunctorData(g.dom, C, [h.obj_map[x] for x in g.obj_map], [h.mor_map[m] for m in g.mor_map])
        betas = brute_nats(hg, f) if side == "right" else brute_nats(f, hg)
        gammas = brute_nats(h, E) if side == "right" else brute_nats(E, h)
        for beta in betas:
            count += 1
            if _whisker_count(C, alpha.components, gammas, g.obj_map, beta.components, side) != 1:
                bad.append((h, beta))
    return count, bad


def brute_coequalizer_ok(f, g, q, X):
    """Every h: cod -> X with h.f == h.g factors through q exactly once."""
    def comp(h, k):
        return (tuple(h.obj_map[x] for x in k.obj_map), tuple(h.mor_map[m] for m in k.mor_map))
    through = {}
    for k in brute_functors(q.cod, X):
        key = comp(k, q)
        through[key] = through.get(key, 0) + 1
    for h in brute_functors(f.cod, X):
        if comp(h, f) == comp(h, g):
            if through.get((tuple(h.obj_map), tuple(h.mor_map)), 0) != 1:
                return False
    return True


def brute_reachable(max_len, limits, given=()):
    """Every value bound by some straight-line program of at most ``max_len``
    statements, found by trying every operation on every tuple of variables.

    Returns ``{depth: set of values first reached at that depth}``.
    """
    from sammycat.errors import SammyError
    from sammycat.lang.ops import apply
    from sammycat.lang.parser import OPERATIONS

    def moves(vals):
        vals = list(vals)
        for op, (arities, _) in OPERATIONS.items():
            for k in arities:
                for args in product(vals, repeat=k):
                    yield op, list(args)
            if op == "Determine":
                for c in vals:
                    if isinstance(c, FinCat):
                        for i in range(c.n_obj):
                            yield op, [c, f"o{i}"]
                        for i in range(c.n_mor):
                            yield op, [c, f"m{i}"]

    start = frozenset(given)
    layer = {start}
    seen = {start}
    reached = {0: set(start)}
    known = set(start)
    for d in range(1, max_len + 1):
        nxt = set()
        for state in layer:
            for op, args in moves(state):
                try:
                    out = apply(op, args, limits)
                except (SammyError, ValueError, TypeError, KeyError):
                    continue
                new = state | frozenset(out)
                if new not in seen:
                    seen.add(new)
                    nxt.add(new)
        reached[d] = {v for s in nxt for v in s} - known
        known |= reached[d]
        layer = nxt
    return reached
