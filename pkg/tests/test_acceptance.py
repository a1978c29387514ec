"""Acceptance criteria.  Each criterion prints one PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest, which
repeats the lines in its terminal summary.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from skorokhod_sset.delta import MonotoneMap, compose, edgewise_map, identity, monotone_maps, shift_map
from skorokhod_sset.filters import (
    hom_path_member,
    interval_diag_member,
    theta_skorokhod_member,
    u_neighborhood_member,
)
from skorokhod_sset.generators import Generator
from skorokhod_sset.metrics import (
    d_mu,
    d_prime,
    dist_F_A,
    indistinguishable,
    sup_dist,
    u_A_member_check,
    v1_dist,
    v2_dist,
    v3_dist,
)
from skorokhod_sset.oracle import normal_points, oracle_dist, oracle_membership, oracle_product_bijection
from skorokhod_sset.realization import (
    PathSimplex,
    StepFunction,
    coordinates,
    eval_point,
    from_step,
    homeo_apply,
    identity_homeo,
    normalize,
    refine,
    to_step,
)
from skorokhod_sset.sset import face, nondeg, pinched_triangle, point, precompose_edgewise, product, std_simplex

Q = Fraction
RESULTS: list[str] = []


def _first(failures: list[str], total: int) -> str:
    if not failures:
        return f"{total} checks"
    return f"{len(failures)}/{total} failed; first: {failures[0]}"


def coordinate_bijection():
    grid = [Q(k, 8) for k in range(9)]
    fails, total = [], 0
    for N in range(1, 6):
        tuples = list(combinations_with_replacement(grid, N - 1))
        images = set()
        for s in tuples:
            total += 1
            f = StepFunction(N, s)
            p = from_step(f)
            if p != normalize(p) or to_step(p) != f or coordinates(p) != s:
                fails.append(f"N={N} s={s}")
            images.add(p)
        pts = normal_points(std_simplex(N), grid[1:-1], N - 1)
        if set(pts) != images or len(pts) != len(tuples) or any(from_step(to_step(p)) != p for p in pts):
            fails.append(f"N={N}: not a bijection onto normal forms")
    return not fails, _first(fails, total)


def colimit_coherence():
    gen = Generator(2002)
    fails = []
    for i in range(500):
        X = gen.sset()
        p = gen.point(X)
        r = refine(p, sorted(set(p.F) | set(gen.cuts(gen.rng.randint(1, 3)))))
        if normalize(r) != normalize(p):
            fails.append(f"case {i}: normalize")
        for _ in range(10):
            ts = gen.tuple_in_unit(gen.rng.randint(1, 4))
            if eval_point(r, ts) != eval_point(p, ts):
                fails.append(f"case {i}: eval at {ts}")
    return not fails, _first(fails, 500)


def product_claim():
    catalog = {"point": point(), "Δ1": std_simplex(2), "Δ2": std_simplex(3), "pinched": pinched_triangle()}
    fails, cases = [], 0
    for a, X in catalog.items():
        for b, Y in catalog.items():
            report = oracle_product_bijection(X, Y, (Q(1, 4), Q(1, 2), Q(3, 4)), 2)
            cases += report.cases
            fails += [f"{a}x{b}: {m}" for m in report.failures]
    return not fails, _first(fails, cases)


def homeo_claim():
    gen = Generator(4004)
    fails = []
    ident = identity_homeo()
    for i in range(200):
        phi, psi = gen.homeo(), gen.homeo()
        p = gen.point(gen.sset())
        ts = gen.tuple_in_unit(gen.rng.randint(1, 3))
        if homeo_apply(ident, p) != p:
            fails.append(f"case {i}: identity")
        if homeo_apply(phi.then(psi), p) != homeo_apply(psi, homeo_apply(phi, p)):
            fails.append(f"case {i}: composition")
        if homeo_apply(phi.inverse(), homeo_apply(phi, p)) != p:
            fails.append(f"case {i}: inverse")
        if eval_point(homeo_apply(phi, p), [phi(t) for t in ts]) != eval_point(p, ts):
            fails.append(f"case {i}: eval equivariance")
        L, eps = phi.max_slope(), gen.positive()
        us = gen.tuple_in_unit(4)
        if interval_diag_member(us, eps) and not interval_diag_member([phi(u) for u in us], L * eps):
            fails.append(f"case {i}: slope bound")
    return not fails, _first(fails, 200)


def antidiscrete():
    gen = Generator(5005)
    fails, total = [], 0
    for i in range(100):
        f = gen.step()
        for n in (1, 2):
            for N in (2 * n, 2 * n + 1, 4 * n):
                for d in (Q(1, 8), Q(1, 4)):
                    total += 2
                    theta = MonotoneMap((1,) * n, 1)
                    if not theta_skorokhod_member(PathSimplex((f,)), theta, n, N, d):
                        fails.append(f"theta f={f.s} n={n} N={N} δ={d}")
                    if not hom_path_member(f, n, N, d):
                        fails.append(f"hom f={f.s} n={n} N={N} δ={d}")
    return not fails, _first(fails, total)


def closed_form_equivalence():
    gen = Generator(6006)
    fails = []
    for i in range(1000):
        M = gen.rng.randint(1, 3)
        P = gen.chain(M, gen.rng.randint(1, 4))
        n = gen.rng.randint(1, 3)
        N = gen.rng.randint(2 * n, 2 * n + 2)
        theta, d = gen.monotone(n, M), gen.positive()
        a, b = theta_skorokhod_member(P, theta, n, N, d), oracle_membership(P, theta, n, N, d)
        if a != b:
            fails.append(f"case {i}: closed {a} oracle {b}")
    return not fails, _first(fails, 1000)


def metric_identities():
    gen = Generator(7007)
    fails = []
    for i in range(500):
        N, pool = gen.rng.randint(1, 5), gen.pool()
        f, g, h = gen.step(N, pool), gen.step(N, pool), gen.step(N, pool)
        for name, dist in (("v1", v1_dist), ("v2", v2_dist), ("v3", v3_dist)):
            if dist(f, g) != dist(g, f):
                fails.append(f"case {i}: {name} symmetry")
            if (dist(f, g) == 0) != indistinguishable(f, g):
                fails.append(f"case {i}: {name} zero")
        if v1_dist(f, h) > v1_dist(f, g) + v1_dist(g, h):
            fails.append(f"case {i}: v1 triangle")
    for i in range(500):
        X = gen.sset() if i % 2 else std_simplex(gen.rng.randint(1, 4))
        u, v = gen.point(X), gen.point(X)
        refined = refine(u, sorted(set(u.F) | set(gen.cuts(2))))
        if d_mu(refined, v) != d_mu(u, v):
            fails.append(f"pair {i}: d_mu refinement")
        if (d_mu(u, v) == 0) != (normalize(u) == normalize(v)):
            fails.append(f"pair {i}: d_mu zero")
    return not fails, _first(fails, 1000)


def worked_thresholds():
    fails = []
    f, g = StepFunction(2, (Q(1, 3),)), StepFunction(2, (Q(1, 2),))
    p, q = from_step(f), from_step(g)
    want = {"sup": Q(1, 6), "v1": Q(1, 6), "v2": Q(1, 12), "v3": Q(1, 6), "dmu": Q(1, 6), "dprime": Q(0)}
    got = {"sup": sup_dist(f, g), "v1": v1_dist(f, g), "v2": v2_dist(f, g), "v3": v3_dist(f, g),
           "dmu": d_mu(p, q), "dprime": d_prime(p, q)}
    for kind in ("v1", "v2", "v3"):
        if oracle_dist(kind, f, g) != want[kind]:
            fails.append(f"oracle {kind} single jump")
    fails += [f"single jump {k}: {got[k]} != {want[k]}" for k in want if got[k] != want[k]]
    f, g = StepFunction(3, (Q(2, 5), Q(1, 2))), StepFunction(3, (Q(1, 2), Q(3, 5)))
    if oracle_dist("v3", f, g) != Q(1, 5):
        fails.append("oracle v3 interleaved")
    for name, val, exp in (("sup", sup_dist(f, g), Q(1, 10)), ("v3", v3_dist(f, g), Q(1, 5)),
                           ("dmu", d_mu(from_step(f), from_step(g)), Q(1, 5))):
        if val != exp:
            fails.append(f"interleaved {name}: {val} != {exp}")
    return not fails, _first(fails, 12)


def topology_sandwich():
    notes, fails = [], []
    for N in (2, 3, 4, 5):
        gen = Generator(9000 + N)
        bad_v3 = bad_mu = bad_iff = 0
        for _ in range(1000):
            pool = gen.pool()
            f, g = gen.step(N, pool), gen.step(N, pool)
            s, v = sup_dist(f, g), v3_dist(f, g)
            bad_v3 += not s <= v <= (N - 1) * s
            bad_mu += not s <= d_mu(from_step(f), from_step(g)) <= (N - 1) * s
            d = gen.positive()
            bad_iff += (v <= d) != u_neighborhood_member(f, g, d)
        notes.append(f"N={N}: v3 {bad_v3}, d_mu {bad_mu}, v3<=δ⇔U {bad_iff} violations")
        if bad_v3 or bad_mu or bad_iff:
            fails.append(notes[-1])
    return not fails, "; ".join(notes)


def u_A_property():
    gen = Generator(10010)
    X = std_simplex(4)
    fails, total = [], 0
    thetas = [t for n in (1, 2, 3) for t in monotone_maps(n, 2)]
    for i in range(300):
        u = gen.point(X)
        A = gen.cuts(gen.rng.randint(0, 3))
        delta = dist_F_A(u.F, A) + gen.positive(Q(1, 8))
        for theta in thetas:
            n = theta.dom
            total += 1
            if not u_A_member_check(u, A, theta, n, 2 * n, delta):
                fails.append(f"case {i}: F={u.F} A={A} θ={theta!r} δ={delta}")
    return not fails, _first(fails, total)


def functor_laws():
    gen = Generator(11011)
    fails = []
    for i in range(500):
        l, m, n = (gen.rng.randint(1, 5) for _ in range(3))
        f, g = gen.monotone(l, m), gen.monotone(m, n)
        for name, F in (("edgewise", edgewise_map), ("shift", shift_map)):
            if F(compose(g, f)) != compose(F(g), F(f)):
                fails.append(f"{name} composition on {g!r}∘{f!r}")
            if not F(identity(m)).is_identity():
                fails.append(f"{name} identity at {m}")
    D = std_simplex(2)
    P = product(D, D)
    L, E = precompose_edgewise(P), precompose_edgewise(D)
    R = product(E, E)
    if L.counts() != R.counts():
        fails.append(f"counts {L.counts()} vs {R.counts()}")
    else:
        def iso(s):
            a, b = P.components(L.underlying(s))
            return R.pair_instance(E.normal_form(a), E.normal_form(b))

        images = {nm: iso(nondeg(nm, d)) for d in range(L.max_dim + 1) for nm in L.nondegenerate(d)}
        if len(set(images.values())) != len(images) or not all(s.is_nondegenerate() for s in images.values()):
            fails.append("comparison map is not a bijection on nondegenerate simplices")
        for d in range(1, L.max_dim + 1):
            for nm in L.nondegenerate(d):
                for k in range(1, d + 2):
                    if iso(face(L, nondeg(nm, d), k)) != face(R, images[nm], k):
                        fails.append(f"face {k} of {nm}")
    return not fails, _first(fails, 1001)


CRITERIA = [
    (1, "coordinate bijection on eighths, N <= 5", coordinate_bijection),
    (2, "colimit coherence: normalize and eval are refinement invariant", colimit_coherence),
    (3, "realization commutes with products (exhaustive, grid of quarters, bound 2)", product_claim),
    (4, "PL homeomorphism action: group laws, equivariance, slope bound", homeo_claim),
    (5, "single step functions are in every Skorokhod neighborhood", antidiscrete),
    (6, "closed-form membership agrees with the grid oracle", closed_form_equivalence),
    (7, "metric identities for v1, v2, v3 and d_mu", metric_identities),
    (8, "worked thresholds, recomputed by the distance oracle", worked_thresholds),
    (9, "sandwich bounds and v3 <= δ iff U-neighborhood membership", topology_sandwich),
    (10, "u_A lies in every θδ-Skorokhod neighborhood once δ > dist(F, A)", u_A_property),
    (11, "edgewise and shift functor laws; edgewise commutes with products", functor_laws),
]


def _line(num: int, title: str, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} [{detail}]"


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check):
    ok, detail = check()
    line = _line(num, title, ok, detail)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    status = 0
    for num, title, check in CRITERIA:
        ok, detail = check()
        print(_line(num, title, ok, detail), flush=True)
        status |= not ok
    sys.exit(status)
