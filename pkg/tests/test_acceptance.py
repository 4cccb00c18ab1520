"""Exit criteria. Every check is exact integer or exact ideal equality.

Run ``pytest tests/test_acceptance.py -rA`` for the per-criterion lines;
``--runslow`` extends the main sweep to six vertices.
"""

import pytest

from coverreg import graph as gr
from coverreg.betti import betti_numbers, betti_via_lcm_order_complex, regularity
from coverreg.linalg import GF2, QQ
from coverreg.monomial import (
    cover_ideal,
    power,
    random_squarefree_ideal,
    symbolic_power,
)
from coverreg.verify import (
    check_bipartite_power_equality,
    check_bound_comparison,
    check_bounds,
    check_colon_identity,
    check_degree_lemma,
    check_half_cover_condition,
    check_restriction_identity,
    class_flags,
)

ORACLE_MAX_GENS = 12


def graphs(max_n, connected_only=False):
    for n in range(1, max_n + 1):
        yield from gr.enumerate_graphs(n, connected_only)


def random_ideals():
    """The 200 seeded squarefree ideals: 2..5 variables, 1..6 generators."""
    out = []
    for seed in range(200):
        i = random_squarefree_ideal(2 + seed % 4, 1 + (seed // 4) % 6, 1000 + seed)
        out.append(i)
    return out


@pytest.fixture(scope="module")
def corpus():
    """Every ideal whose regularity or Betti table the criteria below touch."""
    return set()


def test_c01_star_sharpness(criterion, corpus):
    bad = []
    for n in range(1, 5):
        for k in range(1, 4):
            ideal = power(cover_ideal(gr.star(n)), k)
            corpus.add(ideal)
            if regularity(ideal) != k * n:
                bad.append((n, k, regularity(ideal)))
    assert criterion("C1 star sharpness reg(J(K_{1,n})^k) = kn, n<=4, k<=3", not bad, str(bad or ""))


def test_c02_complete_sharpness(criterion, corpus):
    bad = []
    for n in range(2, 5):
        for k in range(1, 4):
            ideal = symbolic_power(cover_ideal(gr.complete(n)), k)
            corpus.add(ideal)
            if regularity(ideal) != k * (n - 1):
                bad.append((n, k, regularity(ideal)))
    assert criterion("C2 complete sharpness reg(J(K_n)^(k)) = k(n-1), n<=4, k<=3", not bad, str(bad or ""))


def test_c03_path_bounds_coincide(criterion, corpus):
    bad = []
    for k in range(1, 4):
        corpus.add(symbolic_power(cover_ideal(gr.path(3)), k))
        r = check_bounds(gr.path(3), k)
        if not (r.reg == 2 * k and r.lower_tight and r.upper_tight):
            bad.append(r)
    assert criterion("C3 reg(J(P_3)^(k)) = 2k with both bounds tight, k<=3", not bad, str(bad or ""))


@pytest.mark.parametrize("max_n", [5, pytest.param(6, marks=pytest.mark.slow)])
def test_c04_main_inequality_sweep(criterion, corpus, max_n):
    checked, violations = 0, []
    for g in graphs(max_n, connected_only=True):
        if g.m == 0:
            continue
        for k in (1, 2):
            r = check_bounds(g, k)
            corpus.add(symbolic_power(cover_ideal(g), k))
            if r.in_class:
                checked += 1
                if not r.holds:
                    violations.append(r)
    assert criterion(
        f"C4 k*deg <= reg <= (k-1)*deg+n-1 on in-class connected graphs n<={max_n}, k<=2",
        not violations, f"{checked} in-class rows, {len(violations)} violations",
    )


def test_c05_degree_lemma(criterion, corpus):
    failures = []
    ideals = [cover_ideal(g) for g in graphs(5, connected_only=True) if g.m]
    rnd = random_ideals()
    assert len(rnd) == 200 and all(i.nvars <= 5 and len(i) <= 6 for i in rnd)
    for i in ideals + rnd:
        corpus.add(i)
        for k in (1, 2, 3):
            r = check_degree_lemma(i, k)
            if not r.passed:
                failures.append(r)
    assert criterion(
        "C5 deg(I^(k)) >= k*deg(I) and u^k in G(I^(k)), sweep + 200 random ideals, k<=3",
        not failures, f"{len(ideals)} cover ideals, {len(rnd)} random ideals",
    )


def test_c06_restriction_identity(criterion):
    pairs = [(g, v) for g in graphs(6) for v in range(g.n)]
    failures = [(g, v) for g, v in pairs if not check_restriction_identity(g, v).passed]
    assert criterion("C6 restriction identity, every (graph, vertex) with n<=6",
                     not failures, f"{len(pairs)} pairs")


def test_c07_colon_identity(criterion):
    runs = [(g, k) for g in graphs(5) if g.m for k in (2, 3, 4)]
    failures = [(g, k) for g, k in runs if not check_colon_identity(g, k).passed]
    assert criterion("C7 (J^(k) : x1...xn) = J^(k-2), n<=5, k in {2,3,4}",
                     not failures, f"{len(runs)} cases")


def test_c08_bipartite_power_equality(criterion, corpus):
    runs, failures = 0, []
    for g in graphs(6):
        if gr.is_bipartite(g) is None:
            continue
        for k in (1, 2, 3):
            runs += 1
            if g.m and k <= 2:
                corpus.add(power(cover_ideal(g), k))
            if not check_bipartite_power_equality(g, k).passed:
                failures.append((g, k))
    j = cover_ideal(gr.complete(3))
    witness = (1, 1, 1) in symbolic_power(j, 2) and (1, 1, 1) not in power(j, 2)
    ok = not failures and witness
    assert criterion("C8 J^k = J^(k) for bipartite n<=6, k<=3; K_3 differs at k=2",
                     ok, f"{runs} equalities, x1x2x3 witness={witness}")


def test_c09_half_cover_condition(criterion):
    checked, failures = 0, []
    for g in graphs(6):
        if g.m == 0 or g.isolated_vertices():
            continue
        if any(class_flags(g).values()):
            checked += 1
            if not check_half_cover_condition(g).passed:
                failures.append(g)
    g33 = gr.pendant_blowup(3, 3)
    r = check_half_cover_condition(g33)
    blowup_ok = not r.passed and gr.max_cover_size(g33) == 5 and g33.n == 12
    assert criterion("C9 half-cover holds in class (n<=6); fails for G_{3,3} (5 < 12/2)",
                     not failures and blowup_ok, f"{checked} in-class graphs")


def test_c10_betti_oracle_and_field_agreement(criterion, corpus):
    # the corpus is filled by C1-C8; run them first if this test is selected alone
    if not corpus:
        pytest.skip("corpus empty: run the whole acceptance module")
    compared, mismatches, disagreements = 0, [], []
    for i in sorted(corpus, key=lambda i: (i.nvars, i.gens)):
        if i.is_unit or i.is_zero:
            continue
        if len(i) <= ORACLE_MAX_GENS:
            for fld in (GF2, QQ):
                compared += 1
                if betti_numbers(i, fld) != betti_via_lcm_order_complex(i, fld):
                    mismatches.append((i, fld))
        if regularity(i, GF2) != regularity(i, QQ):
            disagreements.append(i)
    ok = not mismatches and not disagreements
    assert criterion(
        "C10 Koszul and lcm-lattice Betti tables agree (<=12 gens, GF(2) and Q); no field disagreement",
        ok, f"{compared} table comparisons over {len(corpus)} ideals, "
            f"{len(disagreements)} regularity disagreements",
    )


def test_c11_bound_comparison(criterion):
    runs, failures = 0, []
    for g in graphs(6):
        h = gr.drop_isolated(g)
        if h.m == 0 or gr.is_bipartite(h) is None:
            continue
        for k in (1, 2, 3):
            runs += 1
            if not check_bound_comparison(h, k).passed:
                failures.append((g, k))
    assert criterion("C11 (k-1)deg+n-1 <= k*deg+reg(J)-1 on bipartite graphs n<=6, k<=3",
                     not failures, f"{runs} cases")
