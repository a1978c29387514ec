from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import monotone

from skorokhod_sset.delta import MonotoneMap, compose, edgewise_map, identity, monotone_maps
from skorokhod_sset.generators import Generator
from skorokhod_sset.sset import (
    FinSSet,
    SimplexInstance,
    apply_operator,
    face,
    load_sset,
    nondeg,
    pinched_triangle,
    point,
    precompose_edgewise,
    product,
    std_simplex,
    two_triangle_sphere,
    validate,
)

CATALOG = [point(), std_simplex(2), std_simplex(3), pinched_triangle(), two_triangle_sphere()]


@pytest.mark.parametrize("X", CATALOG, ids=repr)
def test_catalog_is_valid(X):
    assert validate(X) == []


def test_std_simplex_counts():
    assert std_simplex(3).counts() == (3, 3, 1)
    assert std_simplex(4).counts() == (4, 6, 4, 1)
    with pytest.raises(ValueError):
        std_simplex(0)


def test_validate_reports_broken_presentations():
    v = lambda n: nondeg(n, 0)
    dangling = FinSSet({0: ["a"], 1: ["e"]}, {"e": [v("a"), v("zzz")]})
    assert any("dangling" in m for m in validate(dangling))
    short = FinSSet({0: ["a"], 1: ["e"]}, {"e": [v("a")]})
    assert any("expected 2 faces" in m for m in validate(short))
    # a triangle whose edges do not fit together
    bad = FinSSet(
        {0: ["a", "b"], 1: ["ab", "ba"], 2: ["T"]},
        {
            "ab": [v("b"), v("a")],
            "ba": [v("a"), v("b")],
            "T": [nondeg("ab", 1), nondeg("ab", 1), nondeg("ab", 1)],
        },
    )
    assert any("simplicial identity" in m for m in validate(bad))


def test_random_presentations_are_valid():
    gen = Generator(11)
    for _ in range(200):
        assert validate(gen.sset()) == []


def _all_simplices(X, n):
    return list(X.simplices_of_dim(n))


@pytest.mark.parametrize("X", CATALOG, ids=repr)
def test_operators_act_functorially(X):
    # (g ∘ f)* = f* ∘ g*, and the identity acts trivially
    for n in range(1, 4):
        for s in _all_simplices(X, n - 1):
            assert apply_operator(X, s, identity(n)) == s
            for m in range(1, 4):
                for g in monotone_maps(m, n):
                    gs = apply_operator(X, s, g)
                    for f in monotone_maps(2, m):
                        assert apply_operator(X, gs, f) == apply_operator(X, s, compose(g, f))


def test_standard_simplex_acts_on_values():
    X = std_simplex(4)
    s = X.instance_of_values((1, 2, 2, 4))
    assert X.values_of(apply_operator(X, s, MonotoneMap((2, 4), 4))) == (2, 4)
    assert X.values_of(face(X, s, 1)) == (2, 2, 4)


def test_pinched_triangle_faces():
    X = pinched_triangle()
    T = nondeg("T", 2)
    assert face(X, T, 2) == nondeg("aa", 1)
    assert face(X, face(X, T, 3), 2) == face(X, face(X, T, 2), 2) == nondeg("a", 0)


def test_size_mismatch():
    X = std_simplex(2)
    with pytest.raises(ValueError, match="size mismatch"):
        apply_operator(X, nondeg("1,2", 1), identity(3))


def test_product_of_intervals():
    P = product(std_simplex(2), std_simplex(2))
    assert P.counts() == (4, 5, 2)
    assert validate(P) == []
    for proj in P.projections():
        assert proj.violations() == []


@pytest.mark.parametrize("X", CATALOG, ids=repr)
@pytest.mark.parametrize("Y", CATALOG[:3], ids=repr)
def test_products_are_valid(X, Y):
    P = product(X, Y)
    assert validate(P) == []
    assert all(not proj.violations() for proj in P.projections())


def test_product_components_roundtrip():
    X, Y = std_simplex(3), pinched_triangle()
    P = product(X, Y)
    for n in range(3):
        for s in P.simplices_of_dim(n):
            assert P.pair_instance(*P.components(s)) == s


def test_edgewise_of_interval():
    E = precompose_edgewise(std_simplex(2))
    assert E.counts() == (3, 2)
    assert validate(E) == []


def test_edgewise_commutes_with_products():
    D = std_simplex(2)
    P = product(D, D)
    L, E = precompose_edgewise(P), precompose_edgewise(D)
    R = product(E, E)
    assert L.counts() == R.counts() == (9, 16, 8)

    def iso(s):
        a, b = P.components(L.underlying(s))
        return R.pair_instance(E.normal_form(a), E.normal_form(b))

    images = {name: iso(nondeg(name, d)) for d in range(L.max_dim + 1) for name in L.nondegenerate(d)}
    assert len(set(images.values())) == len(images)
    assert all(v.is_nondegenerate() for v in images.values())
    for d in range(1, L.max_dim + 1):
        for name in L.nondegenerate(d):
            for i in range(1, d + 2):
                assert iso(face(L, nondeg(name, d), i)) == face(R, images[name], i)


@given(st.integers(2, 4), st.data())
def test_edgewise_operators_match_underlying(N, data):
    X = std_simplex(N)
    E = precompose_edgewise(X)
    k = data.draw(st.integers(0, E.max_dim))
    s = data.draw(st.sampled_from(list(E.simplices_of_dim(k))))
    theta = data.draw(monotone(cod=k + 1, max_size=3))
    lhs = E.underlying(apply_operator(E, s, theta))
    assert lhs == apply_operator(X, E.underlying(s), edgewise_map(theta))


def test_json_roundtrip(tmp_path):
    X = two_triangle_sphere()
    path = tmp_path / "s.json"
    path.write_text(json.dumps(X.to_json()))
    assert load_sset(path) == X
    assert load_sset("delta:3") is std_simplex(3)
    inst = SimplexInstance("ab", MonotoneMap((1, 1, 2), 2))
    assert SimplexInstance.from_json(inst.to_json()) == inst


def test_simplex_instance_requires_surjection():
    with pytest.raises(ValueError):
        SimplexInstance("a", MonotoneMap((1, 1), 2))
