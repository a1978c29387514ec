"""Distances on realization points and on step functions.

All values are exact rationals.  Where no admissible matching exists the
distance is capped at 1, the diameter of the parameter interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .delta import MonotoneMap, face_operator
from .filters import theta_skorokhod_member
from .intervals import AgreementSet, agreement, where
from .realization import (
    PathSimplex,
    RealizationPoint,
    StepFunction,
    _same_codomain,
    normalize,
    refine,
    to_step,
)
from .sset import apply_operator

__all__ = [
    "AgreementSet", "sup_dist", "v1_dist", "v2_dist", "v3_dist", "d_mu", "d_prime",
    "dist_F_A", "StepMap", "step_map", "u_A_path", "u_A_member_check", "u_A_literal",
    "indistinguishable", "u_threshold",
]

Q = Fraction
CAP = Q(1)


def _coords(a) -> tuple[Fraction, ...]:
    return a.s if isinstance(a, StepFunction) else tuple(Q(v) for v in a)


def sup_dist(a, b) -> Fraction:
    s, t = _coords(a), _coords(b)
    if len(s) != len(t):
        raise ValueError("coordinate tuples differ in length")
    return max((abs(x - y) for x, y in zip(s, t)), default=Q(0))


def _gap_to(t: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return Q(0) if lo <= t <= hi else min(abs(t - lo), abs(t - hi))


def _one_sided_v1(f: StepFunction, g: StepFunction) -> Fraction:
    worst = Q(0)
    for v in range(1, f.N + 1):
        lf = f.level(v)
        if lf is None:
            continue
        lg = g.level(v)
        if lg is None:
            return CAP
        # distance to a closed interval is convex, so endpoints are worst
        worst = max(worst, _gap_to(lf[0], lg[0], lg[1]), _gap_to(lf[1], lg[0], lg[1]))
    return worst


def v1_dist(f: StepFunction, g: StepFunction) -> Fraction:
    """Level-set matching: every ``t`` has an ``s`` within ε with
    ``f(t) = g(s)``, and symmetrically."""
    _same_codomain(f, g)
    return min(CAP, max(_one_sided_v1(f, g), _one_sided_v1(g, f)))


def v2_dist(f: StepFunction, g: StepFunction) -> Fraction:
    """Every ``t`` lies within δ of a point where ``f`` and ``g`` agree."""
    _same_codomain(f, g)
    worst = Q(0)
    for c, d in agreement(f, g).gaps:
        worst = max(worst, d if c == 0 else (d - c) / 2)
    return min(CAP, worst)


def v3_dist(f: StepFunction, g: StepFunction) -> Fraction:
    """Every ``t`` has an agreement point in ``[t, min(1, t + δ)]``."""
    _same_codomain(f, g)
    return min(CAP, agreement(f, g).longest_gap())


def indistinguishable(f: StepFunction, g: StepFunction) -> bool:
    _same_codomain(f, g)
    return f.s == g.s


def u_threshold(f: StepFunction, g: StepFunction) -> Fraction:
    """Smallest δ with ``g ∈ U_{δ,f}``: the longest stretch where one function
    stays strictly below the other."""
    _same_codomain(f, g)
    runs = where(lambda u, v: u < v, f, g) + where(lambda u, v: u > v, f, g)
    return max((d - c for c, d in runs), default=Q(0))


# -- distances on points ----------------------------------------------------------

def _common(u: RealizationPoint, v: RealizationPoint):
    if u.sset != v.sset:
        raise ValueError("points live over different simplicial sets")
    G = tuple(sorted(set(normalize(u).F) | set(normalize(v).F)))
    return G, refine(normalize(u), G).x, refine(normalize(v), G).x


def _agreeing_subsets(X, xu, xv, k: int) -> Iterable[tuple[int, ...]]:
    comps = range(1, k + 1)
    for r in range(k, 0, -1):
        for A in combinations(comps, r):
            mono = face_operator(A, k)
            if apply_operator(X, xu, mono) == apply_operator(X, xv, mono):
                yield A


def d_mu(u: RealizationPoint, v: RealizationPoint, method: str = "auto") -> Fraction:
    """Least Lebesgue measure of a set of components outside of which ``u`` and
    ``v`` agree.

    On a standard simplex faces are read off vertex by vertex, so dropping
    exactly the disagreeing components is optimal (``method="greedy"``);
    otherwise all component subsets are enumerated.
    """
    G, xu, xv = _common(u, v)
    ends = (Q(0),) + G + (Q(1),)
    lengths = [b - a for a, b in zip(ends, ends[1:])]
    k = len(lengths)
    X = u.sset
    if method == "auto":
        method = "greedy" if X.is_standard else "enumerate"
    if method == "greedy":
        if not X.is_standard:
            raise ValueError("greedy d_mu needs a standard simplex")
        a, b = X.values_of(xu), X.values_of(xv)
        return sum((lengths[j] for j in range(k) if a[j] != b[j]), Q(0))
    best = CAP
    for A in _agreeing_subsets(X, xu, xv, k):
        best = min(best, 1 - sum(lengths[j - 1] for j in A))
    return best


def d_prime(u: RealizationPoint, v: RealizationPoint) -> Fraction:
    """Least ``max_{x∈F} min_{a∈A} dist(x, a)`` over agreeing component sets
    ``A``, distances measured from the cut to the component as a subset of
    ``[0, 1]``.  Vanishes whenever each cut borders an agreeing component,
    so this is only a pseudometric."""
    G, xu, xv = _common(u, v)
    if not G:
        return Q(0)
    ends = (Q(0),) + G + (Q(1),)
    comps = list(zip(ends, ends[1:]))
    best = CAP
    for A in _agreeing_subsets(u.sset, xu, xv, len(comps)):
        cost = max(min(_gap_to(x, *comps[a - 1]) for a in A) for x in G)
        best = min(best, cost)
    return best


def dist_F_A(F: Iterable, A: Iterable) -> Fraction:
    F, A = [Q(x) for x in F], [Q(a) for a in A]
    if not F:
        return Q(0)
    if not A:
        return CAP
    return max(min(abs(x - a) for a in A) for x in F)


# -- step maps and u_A ------------------------------------------------------------

@dataclass(frozen=True)
class StepMap:
    """``t ↦ t`` for ``t <= t0``, otherwise ``t ↦ min{a ∈ A ∪ {1} : a >= t}``."""

    A: tuple[Fraction, ...]
    t0: Fraction

    def __call__(self, t) -> Fraction:
        t = Q(t)
        if t <= self.t0:
            return t
        return min(a for a in self.A + (Q(1),) if a >= t)

    def pieces(self) -> list[tuple[Fraction, Fraction, Fraction | None]]:
        """``(lo, hi, value)``; ``value`` None means identity on ``[lo, hi]``,
        otherwise the constant value on ``(lo, hi]``."""
        out: list[tuple[Fraction, Fraction, Fraction | None]] = [(Q(0), self.t0, None)]
        lo = self.t0
        for a in sorted(set(self.A) | {Q(1)}):
            if a > lo:
                out.append((lo, a, a))
                lo = a
        return out


def step_map(A: Iterable, t0) -> StepMap:
    t0 = Q(t0)
    if not 0 <= t0 <= 1:
        raise ValueError("t0 must lie in [0,1]")
    return StepMap(tuple(sorted({Q(a) for a in A})), t0)


def u_A_path(u: RealizationPoint, A: Iterable) -> PathSimplex:
    """The path-space 1-simplex ``(u, u ∘ step_{A,0})``.

    ``u ∘ snap`` exceeds ``i`` exactly on ``(α_i, 1]`` with ``α_i`` the last
    element of ``A ∪ {0}`` before the coordinate ``s_i < 1``; its
    right-continuous normal form has coordinate ``α_i``.
    """
    f = to_step(u)
    A = sorted({Q(a) for a in A})
    # a coordinate 1 marks a value never taken on [0, 1): nothing to snap
    snapped = tuple(s if s == 1 else max([a for a in A if a < s] + [Q(0)]) for s in f.s)
    return PathSimplex((f, StepFunction(f.N, snapped)))


def u_A_member_check(u: RealizationPoint, A: Iterable, theta: MonotoneMap, n: int, N: int, delta) -> bool:
    return theta_skorokhod_member(u_A_path(u, A), theta, n, N, delta)


def u_A_literal(u: RealizationPoint, A: Iterable, levels: Sequence[int], ts: Sequence) -> tuple[int, ...]:
    """The explicit assignment ``(l, t) ↦ u(step_{A, max{t_i : l_i = 1}}(t))``
    on one simplex, with ``max ∅ = 0``."""
    f = to_step(u)
    ts = [Q(t) for t in ts]
    t0 = max((t for l, t in zip(levels, ts) if l == 1), default=Q(0))
    snap = step_map(A, t0)
    return tuple(f(snap(t)) for t in ts)
