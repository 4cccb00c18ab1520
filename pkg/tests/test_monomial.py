import pytest
from hypothesis import given, settings, strategies as st

from coverreg import graph as gr
from coverreg.caps import CapExceededError, Caps
from coverreg.monomial import (
    MAX_EXPONENT,
    ExponentOverflowError,
    MonomialIdeal,
    colon,
    cover_ideal,
    degree,
    edge_intersection,
    equal,
    format_ideal,
    intersect,
    minimal_primes,
    minimalize,
    mono_pow,
    mul,
    parse_ideal,
    power,
    prime_power,
    product,
    random_squarefree_ideal,
    restrict_away,
    symbolic_power,
    unit_ideal,
    zero_ideal,
)

from oracles import box, brute_minimal, member


def I(*gens):
    return minimalize(gens)


def gens_from_membership(nvars, top, is_member):
    """Minimal generators of a monomial ideal whose generators lie in [0, top]^n."""
    return tuple(sorted(brute_minimal(m for m in box(nvars, top) if is_member(m)),
                        key=lambda m: (sum(m), m)))


def in_symbolic(primes, k):
    return lambda m: all(sum(m[v] for v in p) >= k for p in primes)


X1, X2, X3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
P3 = gr.path(3)
K3 = gr.complete(3)


# --- minimalize -------------------------------------------------------------


def test_minimalize_examples():
    assert I((1, 0), (1, 1)).gens == ((1, 0),)
    raw = [(0, 2, 0), (1, 2, 0), (0, 2, 1), (1, 1, 1), (2, 1, 1), (1, 1, 2), (2, 0, 2),
           (2, 2, 0), (0, 2, 2)]
    expected = brute_minimal(raw)
    assert expected == {(0, 2, 0), (1, 1, 1), (2, 0, 2)}
    assert set(I(*raw).gens) == expected
    assert minimalize([], 3) == zero_ideal(3)
    assert zero_ideal(3).is_zero


def test_minimalize_rejects_mixed_rings():
    with pytest.raises(ValueError):
        minimalize([(1, 0), (1, 0, 0)])


monomials = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=8)
)


@given(monomials)
def test_minimalize_is_idempotent_and_canonical(gens):
    a = minimalize(gens)
    assert minimalize(a.gens) == a
    assert minimalize(reversed(gens)) == a
    assert set(a.gens) == brute_minimal(gens)
    assert list(a.gens) == sorted(a.gens, key=lambda m: (sum(m), m))


# --- intersection, product, power -------------------------------------------


def test_intersect_examples():
    a, b = I(X1, X2), I(X2, X3)
    # lcm table: x1x2, x1x3, x2, x2x3 -> minimal x2, x1x3
    assert intersect(a, b).gens == ((0, 1, 0), (1, 0, 1))
    assert intersect(a, unit_ideal(3)) == a
    sq = intersect(power(a, 2), power(b, 2))
    oracle = gens_from_membership(3, 2, in_symbolic([{0, 1}, {1, 2}], 2))
    assert sq.gens == oracle == ((0, 2, 0), (1, 1, 1), (2, 0, 2))


def test_product_and_power_examples():
    assert power(I((1, 0), (0, 1)), 2).gens == ((0, 2), (1, 1), (2, 0))
    j = cover_ideal(K3)
    assert power(j, 1) == j
    assert power(j, 0) == unit_ideal(3)
    products = {tuple(a + b for a, b in zip(u, v)) for u in j.gens for v in j.gens}
    assert set(power(j, 2).gens) == brute_minimal(products)
    assert len(power(j, 2).gens) == 6


def small_ideals(nvars):
    mono = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.lists(mono, min_size=1, max_size=5).map(lambda g: minimalize(g, nvars))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(small_ideals(n), small_ideals(n))))
def test_intersection_and_product_membership(pair):
    a, b = pair
    both, prod = intersect(a, b), product(a, b)
    sums = [tuple(x + y for x, y in zip(u, v)) for u in a.gens for v in b.gens]
    for m in box(a.nvars, 6):
        assert (m in both) == (member(a.gens, m) and member(b.gens, m))
        assert (m in prod) == member(sums, m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(small_ideals(n), st.tuples(*[st.integers(0, 3)] * n))))
def test_colon_membership(pair):
    i, u = pair
    c = colon(i, u)
    for m in box(i.nvars, 4):
        assert (m in c) == member(i.gens, tuple(a + b for a, b in zip(m, u)))


def test_overflow_is_checked():
    big = (MAX_EXPONENT,)
    with pytest.raises(ExponentOverflowError):
        mul(big, (1,))
    with pytest.raises(ExponentOverflowError):
        mono_pow((2**20,), 2**12)
    with pytest.raises(ExponentOverflowError):
        power(MonomialIdeal(1, (big,)), 2)


def test_generator_cap():
    j = cover_ideal(gr.cycle(6))
    with pytest.raises(CapExceededError):
        power(j, 3, Caps(generators=10))


# --- colon, restriction -----------------------------------------------------


def test_colon_examples():
    assert colon(I((2, 0), (0, 1)), (1, 0)) == I((1, 0), (0, 1))
    j = cover_ideal(P3)
    assert colon(j, (0, 0, 0)) == j
    assert colon(symbolic_power(j, 2), (1, 1, 1)) == unit_ideal(3)


def test_restrict_away_examples():
    assert restrict_away(I(X1, (0, 1, 1)), 0) == I((1, 1))
    assert restrict_away(unit_ideal(3), 1) == unit_ideal(2)
    assert restrict_away(cover_ideal(P3), 2) == I((0, 1))


# --- cover ideals, primes, symbolic powers ----------------------------------


def test_cover_ideal_examples():
    assert cover_ideal(gr.complete(2)) == I((1, 0), (0, 1))
    assert cover_ideal(P3) == I(X2, (1, 0, 1))
    star = cover_ideal(gr.star(3))
    assert star == I((1, 0, 0, 0), (0, 1, 1, 1))
    assert star == edge_intersection(gr.star(3))
    assert cover_ideal(gr.edgeless(3)) == unit_ideal(3)


def test_cover_ideal_is_edge_intersection():
    for n in range(1, 7):
        for g in gr.enumerate_graphs(n):
            assert cover_ideal(g) == edge_intersection(g)


def test_minimal_primes_examples():
    assert minimal_primes(I((1, 0), (0, 1))) == [{0, 1}]
    assert set(minimal_primes(cover_ideal(P3))) == {frozenset({0, 1}), frozenset({1, 2})}
    assert set(minimal_primes(I((1, 1)))) == {frozenset({0}), frozenset({1})}
    with pytest.raises(ValueError):
        minimal_primes(I((2, 0)))


def test_minimal_primes_of_cover_ideals_are_edges():
    for n in range(2, 7):
        for g in gr.enumerate_graphs(n):
            if g.m:
                assert set(minimal_primes(cover_ideal(g))) == {frozenset(e) for e in g.edges}


def test_prime_power_examples():
    assert prime_power({0, 1}, 2, 2).gens == ((0, 2), (1, 1), (2, 0))
    assert prime_power({0}, 3, 3).gens == ((3, 0, 0),)
    assert len(prime_power({0, 1, 2}, 2, 3).gens) == 6
    with pytest.raises(ValueError):
        prime_power(set(), 2, 3)


def test_symbolic_power_examples():
    j = cover_ideal(P3)
    assert symbolic_power(j, 2).gens == ((0, 2, 0), (1, 1, 1), (2, 0, 2))
    assert symbolic_power(j, 1) == j
    assert symbolic_power(j, 0) == unit_ideal(3)
    jk = cover_ideal(K3)
    assert (1, 1, 1) in symbolic_power(jk, 2)
    assert (1, 1, 1) not in power(jk, 2)
    assert min(sum(g) for g in power(jk, 2).gens) == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_symbolic_power_matches_membership_oracle(k):
    for n in range(2, 6):
        for g in gr.enumerate_graphs(n, connected_only=True):
            oracle = gens_from_membership(g.n, k, in_symbolic(g.edges, k))
            assert symbolic_power(cover_ideal(g), k).gens == oracle


def test_symbolic_power_route_independence():
    for n in range(2, 7):
        for g in gr.enumerate_graphs(n):
            if g.m:
                for k in (2, 3):
                    assert symbolic_power(cover_ideal(g), k) == edge_intersection(g, k)


def random_ideals(count=80):
    for seed in range(count):
        n = 2 + seed % 4
        yield random_squarefree_ideal(n, 1 + seed % 6, seed)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ordinary_power_inside_symbolic_power(k):
    for i in random_ideals():
        sym = symbolic_power(i, k)
        assert all(g in sym for g in power(i, k).gens)
        gens = set(sym.gens)
        assert all(mono_pow(u, k) in gens for u in i.gens)


def test_degree_examples():
    for n in range(1, 5):
        assert degree(cover_ideal(gr.star(n))) == n
    assert degree(cover_ideal(gr.complete(2))) == 1
    assert degree(cover_ideal(gr.pendant_blowup(3, 3))) == 5
    assert degree(unit_ideal(2)) == 0
    with pytest.raises(ValueError):
        degree(zero_ideal(2))


def test_equal_examples():
    assert equal(I((1, 0), (0, 1)), minimalize([(1, 0), (0, 1), (1, 1)]))
    j = cover_ideal(P3)
    assert equal(power(j, 2), symbolic_power(j, 2))
    jk = cover_ideal(K3)
    assert not equal(power(jk, 2), symbolic_power(jk, 2))


def test_ideal_text_format():
    j = symbolic_power(cover_ideal(P3), 2)
    text = format_ideal(j)
    assert text == "ring 3\nx2^2\nx1 x2 x3\nx1^2 x3^2\n"
    assert parse_ideal(text) == j
    assert format_ideal(unit_ideal(2)) == "ring 2\n1\n"
    assert parse_ideal("ring 2\n1\n") == unit_ideal(2)
    assert parse_ideal("ring 2\n") == zero_ideal(2)
    with pytest.raises(ValueError):
        parse_ideal("ring 2\nx3\n")


def test_random_squarefree_ideal_is_reproducible():
    a = random_squarefree_ideal(5, 6, 11)
    assert a == random_squarefree_ideal(5, 6, 11)
    assert a.is_squarefree and 1 <= len(a) <= 6
