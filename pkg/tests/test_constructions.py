import random
from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from helpers import (Z2, axioms_hold, brute_coequalizer_ok, brute_functors,
                     brute_kan_failures, brute_nats, random_category, random_preorder)
from sammycat.constructions import (colimit, comma, comma_direct, composable_functor,
                                    coequalizer_cat, coproduct, functor_category, kan_extension,
                                    kan_induced, kan_lifting, limit, pow, product,
                                    product_via_kan, pullback, skeleton)
from sammycat.errors import NoUniversal, SizeBound
from sammycat.fincat import (ISO_TWO, ONE, TWO, ZERO, FunctorData, bang, chain,
                             compose_functors, discrete, functor_violations, identity_functor,
                             identity_nat, indiscrete, nattrans_violations, point, validate_category)
from sammycat.functors import inverse_functor, is_iso_nat
from sammycat.iso import isomorphic

seeds = st.integers(0, 2**32 - 1)
SQUARE = product(TWO, TWO)[0]


def iso(a, b):
    return isomorphic(a, b) is not None


# -- sums and products ------------------------------------------------------------

def test_coproduct_examples():
    c, i, j = coproduct(ONE, ONE)
    assert iso(c, discrete(2))
    c, i, j = coproduct(ZERO, chain(3))
    assert iso(c, chain(3)) and sorted(j.mor_map) == list(range(c.n_mor))
    c, _, _ = coproduct(TWO, TWO)
    assert (c.n_obj, c.n_mor) == (4, 6)


def test_product_examples():
    assert iso(product(ONE, chain(3))[0], chain(3))
    assert product(ZERO, TWO)[0] == ZERO
    assert (SQUARE.n_obj, SQUARE.n_mor) == (4, 9)


@given(seeds)
def test_product_and_coproduct_structure(seed):
    rng = random.Random(seed)
    a, b = random_category(rng, 6), random_category(rng, 6)
    p, pa, pb = product(a, b)
    s, ia, ib = coproduct(a, b)
    assert axioms_hold(p) and axioms_hold(s)
    assert (p.n_obj, p.n_mor) == (a.n_obj * b.n_obj, a.n_mor * b.n_mor)
    assert (s.n_obj, s.n_mor) == (a.n_obj + b.n_obj, a.n_mor + b.n_mor)
    for F in (pa, pb, ia, ib):
        assert functor_violations(F) == []
    # the pairing map into the product is a bijection on morphisms
    pairs = {(pa.mor_map[m], pb.mor_map[m]) for m in p.morphisms}
    assert len(pairs) == p.n_mor


# -- functor categories ---------------------------------------------------------------

def test_pow_two_two_is_three_chain():
    p = pow(TWO, TWO)
    assert (p.n_obj, p.n_mor) == (3, 6)
    assert iso(p, chain(3))


def test_pow_trivial_exponents():
    assert iso(pow(ZERO, chain(3)), ONE)
    for b in (TWO, ISO_TWO, Z2):
        assert iso(pow(ONE, b), b)


@given(seeds)
def test_pow_counts_match_brute_force(seed):
    rng = random.Random(seed)
    a, b = random_category(rng, 4), random_category(rng, 6)
    fs = brute_functors(a, b)
    if len(fs) > 30:
        return
    p = pow(a, b)
    assert validate_category(p) == []
    assert p.n_obj == len(fs)
    assert p.n_mor == sum(len(brute_nats(F, G)) for F in fs for G in fs)


def test_pow_respects_bounds():
    with pytest.raises(SizeBound):
        pow(chain(3), chain(4), max_morphisms=10)


def test_functor_category_realisation():
    fc = functor_category(TWO, ISO_TWO)
    for k, F in enumerate(fc.functors):
        assert fc.fun_index[F] == k
    for m, x in enumerate(fc.nats):
        assert nattrans_violations(x) == []
        assert fc.functors[fc.cat.src[m]] == x.src_fun


# -- pullbacks and commas -----------------------------------------------------------

def test_pullback_examples():
    c = chain(3)
    P, p, q = pullback(identity_functor(c), identity_functor(c))
    assert iso(P, c)
    P, _, _ = pullback(point(TWO, 0), point(TWO, 1))
    assert P.n_obj == 0 and P.n_mor == 0


@given(seeds)
def test_pullback_square_commutes(seed):
    rng = random.Random(seed)
    a, b, c = (random_category(rng, 5) for _ in range(3))
    fs, gs = brute_functors(a, c), brute_functors(b, c)
    if not fs or not gs:
        return
    f, g = rng.choice(fs), rng.choice(gs)
    P, p, q = pullback(f, g)
    assert compose_functors(f, p) == compose_functors(g, q)
    # the pullback's morphisms are exactly the matching pairs
    expected = sum(1 for x in a.morphisms for y in b.morphisms if f.mor_map[x] == g.mor_map[y])
    assert P.n_mor == expected


def test_arrow_category_of_two():
    c, _, _ = comma(identity_functor(TWO), identity_functor(TWO))
    assert c.n_obj == 3
    assert iso(c, comma_direct(identity_functor(TWO), identity_functor(TWO)))


@pytest.mark.parametrize("c", [TWO, chain(3), ISO_TWO, Z2, SQUARE], ids=range(5))
def test_slices_match_textbook_oracle(c):
    for x in c.objects:
        l, r = identity_functor(c), point(c, x)
        s, _, _ = comma(l, r)
        assert s.n_obj == sum(1 for m in c.morphisms if c.tgt[m] == x)
        assert iso(s, comma_direct(l, r))


def test_comma_over_zero():
    z = identity_functor(ZERO)
    assert comma(z, z)[0] == ZERO


@given(seeds)
def test_comma_via_pullbacks_matches_direct(seed):
    rng = random.Random(seed)
    a, b, c = random_category(rng, 4), random_category(rng, 4), random_category(rng, 6)
    ls, rs = brute_functors(a, c), brute_functors(b, c)
    if not ls or not rs:
        return
    l, r = rng.choice(ls), rng.choice(rs)
    P, pa, pb = comma(l, r)
    assert iso(P, comma_direct(l, r))
    assert functor_violations(pa) == [] and functor_violations(pb) == []


# -- skeleta -----------------------------------------------------------------------

def test_skeleton_examples():
    assert iso(skeleton(ISO_TWO)[0], ONE)
    assert iso(skeleton(TWO)[0], TWO)
    for n in range(4):
        assert iso(skeleton(discrete(n))[0], discrete(n))
    assert iso(skeleton(indiscrete(3))[0], ONE)


@given(seeds)
def test_skeleton_has_no_isomorphic_distinct_objects(seed):
    c = random_category(random.Random(seed))
    s, q = skeleton(c)
    assert functor_violations(q) == []
    inv = s.inverses
    for m in s.morphisms:
        if inv[m] >= 0:
            assert s.src[m] == s.tgt[m]


# -- coequalizers ---------------------------------------------------------------------

def _span():
    # objects: apex 0, feet 1 and 2
    arrows = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)]
    table = {(0, 0): 0, (1, 1): 1, (2, 2): 2, (3, 0): 3, (1, 3): 3, (4, 0): 4, (2, 4): 4}
    from sammycat.fincat import FinCat
    return FinCat.build(3, arrows, [0, 1, 2], table)


def test_coequalizer_gives_span():
    s = point(TWO, 0)
    c, inl, inr = coproduct(TWO, TWO)
    f, g = compose_functors(inl, s), compose_functors(inr, s)
    Q, q = coequalizer_cat(f, g)
    assert (Q.n_obj, Q.n_mor) == (3, 5)
    assert iso(Q, _span())
    assert compose_functors(q, f) == compose_functors(q, g)
    for X in (TWO, ISO_TWO, chain(3), discrete(2)):
        assert brute_coequalizer_ok(f, g, q, X)


def test_coequalizer_of_endpoints_is_infinite():
    with pytest.raises(SizeBound):
        coequalizer_cat(point(TWO, 0), point(TWO, 1))


def test_coequalizer_of_equal_functors_is_iso():
    for c in (chain(3), Z2, SQUARE):
        f = point(c, 0)
        Q, q = coequalizer_cat(f, f)
        assert iso(Q, c)
        assert inverse_functor(q) is not None


@given(seeds)
def test_coequalizer_couniversal_on_random_thin_instances(seed):
    rng = random.Random(seed)
    b = random_preorder(rng, rng.randint(1, 4))
    a = rng.choice([ONE, discrete(2), TWO])
    fs = brute_functors(a, b)
    f, g = rng.choice(fs), rng.choice(fs)
    try:
        Q, q = coequalizer_cat(f, g, max_morphisms=60)
    except SizeBound:
        return
    assert validate_category(Q) == []
    assert compose_functors(q, f) == compose_functors(q, g)
    for X in (TWO, ISO_TWO, chain(3)):
        assert brute_coequalizer_ok(f, g, q, X)


# -- limits and colimits ----------------------------------------------------------

def test_empty_diagram():
    d = FunctorData(ZERO, TWO, (), ())
    assert limit(d).apex == 1
    assert colimit(d).apex == 0


def _meet(c, x, y):
    below = [z for z in c.objects if c.hom(z, x) and c.hom(z, y)]
    return [z for z in below if all(c.hom(w, z) for w in below)]


@pytest.mark.parametrize("c", [chain(3), SQUARE, product(TWO, chain(3))[0]], ids=range(3))
def test_binary_products_in_lattices(c):
    for x, y in cartesian(c.objects, repeat=2):
        d = FunctorData(discrete(2), c, (x, y), (c.ident[x], c.ident[y]))
        assert limit(d).apex in _meet(c, x, y)


def test_no_limit_raises():
    d = FunctorData(discrete(2), discrete(2), (0, 1), (0, 1))
    with pytest.raises(NoUniversal):
        limit(d)


# -- Kan extensions ------------------------------------------------------------------

LATTICES = [ONE, TWO, chain(3), SQUARE]
DOMAINS = [ONE, TWO, discrete(2), chain(3)]
BASES = [ONE, TWO, ISO_TWO, discrete(2), chain(3)]


def kan_instances(count, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b, c = rng.choice(DOMAINS), rng.choice(BASES), rng.choice(LATTICES)
        gs, fs = brute_functors(a, b), brute_functors(a, c)
        if gs and fs:
            out.append((rng.choice(gs), rng.choice(fs), rng.choice(["left", "right"])))
    return out


@pytest.mark.parametrize("g,f,side", kan_instances(12))
def test_kan_universal_property_brute_force(g, f, side):
    E, alpha = kan_extension(side, g, f)
    assert functor_violations(E) == [] and nattrans_violations(alpha) == []
    count, bad = brute_kan_failures(E, alpha, g, f, side)
    assert count > 0 and bad == []


def test_kan_along_identity_is_itself():
    f = point(chain(3), 2)
    for side in ("left", "right"):
        E, alpha = kan_extension(side, identity_functor(ONE), f)
        assert E == f and alpha == identity_nat(f)


def test_kan_along_iso_is_inverse():
    d2 = discrete(2)
    swap = [F for F in brute_functors(d2, d2) if F.obj_map == (1, 0)][0]
    E, _ = kan_extension("right", swap, identity_functor(d2))
    assert compose_functors(E, swap) == identity_functor(d2)
    # in Iso2 the answer is only determined up to a natural isomorphism
    swap = [F for F in brute_functors(ISO_TWO, ISO_TWO) if F.obj_map == (1, 0)][0]
    E, _ = kan_extension("right", swap, identity_functor(ISO_TWO))
    assert any(is_iso_nat(x) for x in brute_nats(E, inverse_functor(swap)))


@pytest.mark.parametrize("c", [chain(3), SQUARE], ids=["chain3", "square"])
def test_product_via_kan(c):
    for x, y in cartesian(c.objects, repeat=2):
        E, alpha = product_via_kan(c, x, y)
        apex = E.obj_map[0]
        assert apex in _meet(c, x, y)
        assert [c.src[m] for m in alpha.components] == [apex, apex]
        assert [c.tgt[m] for m in alpha.components] == [x, y]


def test_kan_induced_examples():
    c = SQUARE
    two_points = coproduct(ONE, ONE)[0]
    g = bang(two_points, ONE)
    kr = product_via_kan(c, 1, 2)
    R, alpha = kr
    assert kan_induced(kr, g, R, alpha) == identity_nat(R)
    # a competing cone from the bottom object factors through the product apex
    h = point(c, 0)
    beta = brute_nats(compose_functors(h, g), kr.unit_or_counit.tgt_fun)[0]
    gamma = kan_induced(kr, g, h, beta)
    nc = c.n_mor
    for a in two_points.objects:
        assert c.comp[alpha.components[a] * nc + gamma.components[0]] == beta.components[a]


def test_kan_lifting_examples():
    d2 = discrete(2)
    swap = [F for F in brute_functors(d2, d2) if F.obj_map == (1, 0)][0]
    f = point(d2, 0)
    R, alpha = kan_lifting(swap, f)
    assert R == compose_functors(inverse_functor(swap), f)
    swap = [F for F in brute_functors(ISO_TWO, ISO_TWO) if F.obj_map == (1, 0)][0]
    R, alpha = kan_lifting(swap, point(ISO_TWO, 0))
    assert is_iso_nat(alpha)
    g = point(chain(3), 1)
    R, alpha = kan_lifting(g, g)
    assert R == identity_functor(ONE) and alpha == identity_nat(g)


def test_kan_lifting_missing():
    # nothing maps from the top of Two back down, so no 2-cell g.R => f exists
    with pytest.raises(NoUniversal):
        kan_lifting(point(TWO, 1), point(TWO, 0))
    assert brute_nats(point(TWO, 1), point(TWO, 0)) == []


# -- composable pairs ----------------------------------------------------------------

def test_composable_two():
    F = composable_functor(TWO)
    assert F.dom.n_obj == 4
    fc = functor_category(TWO, TWO)
    image = sorted(fc.functors[k].mor_map[1] for k in F.obj_map)
    u = next(m for m in TWO.morphisms if not TWO.is_identity(m))
    assert image.count(u) == 2
    assert composable_functor(ONE).dom.n_obj == 1


@settings(max_examples=20)
@given(seeds)
def test_composable_object_action_is_the_table(seed):
    c = random_category(random.Random(seed), 8)
    F = composable_functor(c)
    assert functor_violations(F) == []
    fc = functor_category(TWO, c)
    got = sorted(fc.functors[k].mor_map[1] for k in F.obj_map)
    n = c.n_mor
    want = sorted(c.comp[g * n + f] for g in range(n) for f in range(n) if c.comp[g * n + f] >= 0)
    assert got == want
