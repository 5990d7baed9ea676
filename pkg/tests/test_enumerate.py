from collections import Counter
from itertools import product

import pytest

from helpers import axioms_hold
from sammycat.enumerate import small_categories
from sammycat.fincat import FinCat
from sammycat.iso import canonical_key


def _brute_classes(max_objects, max_morphisms):
    """Fill every composable cell with every candidate and keep the categories."""
    classes = set()
    for k in range(max_objects + 1):
        cells = [(a, b) for a in range(k) for b in range(k)]
        for sizes in product(range(max_morphisms + 1), repeat=len(cells)):
            if sum(sizes) > max_morphisms or any(sizes[a * k + a] == 0 for a in range(k)):
                continue
            src, tgt, ident = [], [], [0] * k
            for (a, b), s in zip(cells, sizes):
                for i in range(s):
                    if a == b and i == 0:
                        ident[a] = len(src)
                    src.append(a)
                    tgt.append(b)
            n = len(src)
            free = [(g, f) for g in range(n) for f in range(n)
                    if tgt[f] == src[g] and g not in ident and f not in ident]
            base = [-1] * (n * n)
            for f in range(n):
                base[ident[tgt[f]] * n + f] = f
                base[f * n + ident[src[f]]] = f
            options = [[h for h in range(n) if src[h] == src[f] and tgt[h] == tgt[g]] for g, f in free]
            for choice in product(*options):
                comp = list(base)
                for (g, f), h in zip(free, choice):
                    comp[g * n + f] = h
                c = FinCat(k, src, tgt, ident, comp)
                if axioms_hold(c):
                    classes.add(canonical_key(c))
    return classes


def test_matches_brute_force_up_to_four_morphisms():
    got = small_categories(3, 4)
    assert len(set(got)) == len(got)
    assert set(got) == _brute_classes(3, 4)


def test_every_representative_is_a_category():
    for c in small_categories(3, 5):
        assert axioms_hold(c)


def test_monoid_counts():
    # monoids of order 1..4 up to isomorphism
    counts = Counter(c.n_mor for c in small_categories(1, 4) if c.n_obj == 1)
    assert [counts[n] for n in range(1, 5)] == [1, 2, 7, 35]


def test_order_is_deterministic():
    assert small_categories(2, 4) == small_categories(2, 4)


@pytest.mark.parametrize("k", range(4))
def test_discrete_only_when_no_room(k):
    cats = [c for c in small_categories(3, k) if c.n_obj == k]
    assert len(cats) == 1 and cats[0].n_mor == k
