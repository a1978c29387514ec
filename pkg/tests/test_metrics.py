from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from strategies import steps

from skorokhod_sset.delta import MonotoneMap
from skorokhod_sset.filters import closed_form_member
from skorokhod_sset.generators import Generator
from skorokhod_sset.metrics import (
    AgreementSet,
    d_mu,
    d_prime,
    dist_F_A,
    indistinguishable,
    step_map,
    sup_dist,
    u_A_literal,
    u_A_member_check,
    u_A_path,
    v1_dist,
    v2_dist,
    v3_dist,
)
from skorokhod_sset.oracle import oracle_dist
from skorokhod_sset.realization import StepFunction, from_step, normalize, refine
from skorokhod_sset.sset import pinched_triangle, std_simplex, two_triangle_sphere

Q = Fraction


def test_single_jump_values(jumps):
    f, g = jumps
    p, q = from_step(f), from_step(g)
    assert (sup_dist(f, g), v1_dist(f, g), v2_dist(f, g), v3_dist(f, g)) == (Q(1, 6), Q(1, 6), Q(1, 12), Q(1, 6))
    assert d_mu(p, q) == Q(1, 6)
    assert d_prime(p, q) == 0


def test_interleaved_values():
    f, g = StepFunction(3, (Q(2, 5), Q(1, 2))), StepFunction(3, (Q(1, 2), Q(3, 5)))
    assert sup_dist(f, g) == Q(1, 10)
    assert v3_dist(f, g) == Q(1, 5)
    assert d_mu(from_step(f), from_step(g)) == Q(1, 5)


@pytest.mark.parametrize("kind", ["v1", "v2", "v3"])
def test_worked_values_match_oracle(jumps, kind):
    f, g = jumps
    closed = {"v1": v1_dist, "v2": v2_dist, "v3": v3_dist}[kind]
    assert oracle_dist(kind, f, g) == closed(f, g)
    h, k = StepFunction(3, (Q(2, 5), Q(1, 2))), StepFunction(3, (Q(1, 2), Q(3, 5)))
    assert oracle_dist(kind, h, k) == closed(h, k)
    assert oracle_dist(kind, f, f) == 0


def test_cap_when_no_matching_level():
    f, g = StepFunction(2, (Q(1),)), StepFunction(2, (Q(0),))
    assert v1_dist(f, g) == 1
    assert v3_dist(f, g) == 1


def test_codomain_mismatch():
    with pytest.raises(ValueError, match="codomain mismatch"):
        v3_dist(StepFunction(2, (Q(1, 2),)), StepFunction(3, (Q(1, 2), Q(1, 2))))


def test_agreement_set():
    A = AgreementSet(((Q(1, 3), Q(1, 2)),))
    assert Q(1, 3) not in A and Q(1, 2) in A and Q(1) in A
    assert A.longest_gap() == Q(1, 6)
    assert A.intervals() == ((Q(0), Q(1, 3)), (Q(1, 2), Q(1)))


@given(steps(N=3), steps(N=3))
def test_symmetry_and_zero(f, g):
    for dist in (v1_dist, v2_dist, v3_dist, sup_dist):
        assert dist(f, g) == dist(g, f)
        assert (dist(f, g) == 0) == indistinguishable(f, g)


@given(steps(N=3), steps(N=3), steps(N=3))
def test_v1_triangle(f, g, h):
    assert v1_dist(f, h) <= v1_dist(f, g) + v1_dist(g, h)


@given(steps(N=4), steps(N=4))
def test_sandwich(f, g):
    s = sup_dist(f, g)
    assert s <= v3_dist(f, g) <= 3 * s
    assert s / 2 <= v2_dist(f, g)
    assert v3_dist(f, g) <= d_mu(from_step(f), from_step(g)) <= 3 * s


def test_closed_forms_match_oracle_on_random_pairs():
    gen = Generator(21)
    for _ in range(150):
        N, pool = gen.rng.randint(1, 5), gen.pool()
        f, g = gen.step(N, pool), gen.step(N, pool)
        assert oracle_dist("v1", f, g) == v1_dist(f, g)
        assert oracle_dist("v2", f, g) == v2_dist(f, g)
        assert oracle_dist("v3", f, g) == v3_dist(f, g)


def test_v2_can_exceed_sup():
    # disagreement on all of [0, 1) puts the nearest agreement point at 1
    f = StepFunction(4, (Q(0), Q(0), Q(1)))
    g = StepFunction(4, (Q(0), Q(1, 2), Q(1, 2)))
    assert sup_dist(f, g) == Q(1, 2)
    assert v2_dist(f, g) == 1


# -- d_mu ---------------------------------------------------------------------------

@pytest.mark.parametrize("X", [std_simplex(3), pinched_triangle(), two_triangle_sphere()], ids=repr)
def test_d_mu_metric_laws(X):
    gen = Generator(3)
    for _ in range(80):
        u, v = gen.point(X), gen.point(X)
        G = sorted(set(u.F) | set(gen.cuts(2)))
        assert d_mu(refine(u, G), v) == d_mu(u, v) == d_mu(v, u)
        assert (d_mu(u, v) == 0) == (normalize(u) == normalize(v))
        w = gen.point(X)
        assert d_mu(u, w) <= d_mu(u, v) + d_mu(v, w)


def test_d_mu_greedy_equals_enumeration():
    gen = Generator(13)
    for _ in range(100):
        X = std_simplex(gen.rng.randint(1, 4))
        u, v = gen.point(X), gen.point(X)
        assert d_mu(u, v, method="greedy") == d_mu(u, v, method="enumerate")
    with pytest.raises(ValueError):
        p = gen.point(pinched_triangle())
        d_mu(p, p, method="greedy")


def test_d_mu_different_spaces():
    with pytest.raises(ValueError):
        d_mu(from_step(StepFunction(2, (Q(1, 2),))), from_step(StepFunction(3, (Q(1, 2), Q(1, 2)))))


def test_d_prime_is_degenerate():
    # every cut borders a component where the points agree, so d' sees nothing
    f, g = StepFunction(2, (Q(1, 10),)), StepFunction(2, (Q(9, 10),))
    assert d_prime(from_step(f), from_step(g)) == 0
    assert d_mu(from_step(f), from_step(g)) == Q(4, 5)


def test_dist_F_A():
    assert dist_F_A([Q(1, 3)], [Q(1, 2)]) == Q(1, 6)
    assert dist_F_A([], [Q(1, 2)]) == 0
    assert dist_F_A([Q(1, 2)], []) == 1
    assert dist_F_A([Q(1, 4), Q(3, 4)], [Q(1, 4), Q(1, 2)]) == Q(1, 4)


# -- step maps and u_A ------------------------------------------------------------------

def test_step_map():
    s = step_map([Q(1, 2)], Q(1, 4))
    assert s(Q(1, 8)) == Q(1, 8)
    assert s(Q(1, 3)) == Q(1, 2) and s(Q(1, 2)) == Q(1, 2)
    assert s(Q(3, 4)) == 1
    assert s.pieces() == [(Q(0), Q(1, 4), None), (Q(1, 4), Q(1, 2), Q(1, 2)), (Q(1, 2), Q(1), Q(1))]
    with pytest.raises(ValueError):
        step_map([], Q(2))


def test_u_A_path_snaps_back():
    u = from_step(StepFunction(3, (Q(1, 3), Q(2, 3))))
    P = u_A_path(u, [Q(1, 2)])
    assert P[2].s == (Q(0), Q(1, 2))
    assert P[1] == StepFunction(3, (Q(1, 3), Q(2, 3)))


def test_u_A_membership_tracks_v3_of_the_path():
    gen = Generator(17)
    X = std_simplex(3)
    for _ in range(100):
        u = gen.point(X)
        A = gen.cuts(gen.rng.randint(0, 3))
        P = u_A_path(u, A)
        delta = gen.positive()
        for theta in (MonotoneMap((1,), 2), MonotoneMap((2,), 2)):
            assert u_A_member_check(u, A, theta, 1, 2, delta)
        for N in (4, 5):
            expected = v3_dist(P[1], P[2]) <= (N - 3) * delta
            assert u_A_member_check(u, A, MonotoneMap((1, 2), 2), 2, N, delta) == expected
            assert closed_form_member(P, (N - 3) * delta) == expected


def test_u_A_literal_formula_is_not_simplicial():
    """Face 1 of ``((1, 2), (t, t))`` is the vertex ``(2, t)``; the explicit
    formula gives ``u(t)`` on the edge but ``u(snap t)`` on the vertex."""
    u = from_step(StepFunction(2, (Q(11, 16),)))
    A, t = [Q(3, 4)], Q(5, 8)
    edge = u_A_literal(u, A, (1, 2), (t, t))
    vertex = u_A_literal(u, A, (2,), (t,))
    assert edge[1] != vertex[0]
