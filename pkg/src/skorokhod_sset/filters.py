"""Filters on simplex sets and the Skorokhod membership predicates.

Parameter conventions: ``n`` and ``N`` in the Skorokhod formulas are vertex
counts (tuple lengths), so ``x = x'[1..n]`` and the tail is
``x'[N-n+1..N]``.  Step sizes in the interval object are compared with
``<=``; filter generation does not see the difference between strict and
non-strict windows, and the closed form makes thresholds attained.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .delta import MonotoneMap, interval, monotone_maps
from .intervals import agreement
from .realization import PathSimplex, StepFunction, pointwise_max
from .sset import FinSSet, SimplexInstance, SimplicialMap, apply_operator

Q = Fraction


# -- filter bases ---------------------------------------------------------------

@dataclass(frozen=True)
class FiniteFilterBase:
    """A filter on a finite carrier given by a generating family of subsets."""

    carrier: frozenset
    basis: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if not self.basis:
            object.__setattr__(self, "basis", (self.carrier,))
        if any(not b <= self.carrier for b in self.basis):
            raise ValueError("basis sets must lie in the carrier")

    def is_neighborhood(self, subset: Iterable) -> bool:
        s = frozenset(subset)
        return s <= self.carrier and any(b <= s for b in self.basis)

    def core(self) -> frozenset:
        return frozenset.intersection(*self.basis)

    def is_downward_directed(self) -> bool:
        return all(
            any(c <= a & b for c in self.basis) for a, b in combinations(self.basis, 2)
        )


@dataclass(frozen=True)
class ParamFilterBase:
    """A filter generated by a family ``P(r)``, ``r > 0`` rational, increasing in
    ``r``, given by its membership predicate."""

    description: str
    member: Callable[[object, Fraction], bool]
    antidiscrete: bool = False

    def contains(self, element, r) -> bool:
        return self.antidiscrete or self.member(element, Q(r))


@dataclass(frozen=True)
class AllOf:
    """Symbolic stand-in for an infinite carrier."""

    description: str


@dataclass(frozen=True)
class SimplicialFilterSpec:
    kind: str
    level: Callable[[int], FiniteFilterBase | ParamFilterBase] = field(compare=False)
    underlying: object = None


def _diagonal(X: FinSSet, n: int) -> frozenset:
    return frozenset(SimplexInstance(v, MonotoneMap((1,) * (n + 1), 1)) for v in X.vertices())


def diag_filter(X: FinSSet) -> SimplicialFilterSpec:
    """Neighborhoods of ``X_n`` are the sets containing all totally degenerate
    simplices; on ``X_0`` this is the antidiscrete filter."""

    def level(n: int) -> FiniteFilterBase:
        return FiniteFilterBase(frozenset(X.simplices_of_dim(n)), (_diagonal(X, n),))

    return SimplicialFilterSpec("diag", level, X)


def is_diagonal(s: SimplexInstance) -> bool:
    return s.surj.cod == 1


def check_continuity(spec: SimplicialFilterSpec, max_vertices: int) -> list[str]:
    """Structure maps pull base neighborhoods back to neighborhoods."""
    X = spec.underlying
    out = []
    for m in range(1, max_vertices + 1):
        small = spec.level(m - 1)
        for n in range(1, max_vertices + 1):
            big = spec.level(n - 1)
            for theta in monotone_maps(m, n):
                for b in small.basis:
                    pre = {s for s in big.carrier if apply_operator(X, s, theta) in b}
                    if not big.is_neighborhood(pre):
                        out.append(f"{theta!r} is not continuous")
    return out


def interval_diag_member(ts: Sequence, eps) -> bool:
    """Is ``t_1 <= ... <= t_n`` in the ``eps``-neighborhood of the main diagonal
    (all consecutive gaps ``< eps``)?"""
    eps = Q(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    ts = [Q(t) for t in ts]
    return all(b - a < eps for a, b in zip(ts, ts[1:]))


def interval_object() -> SimplicialFilterSpec:
    def level(n: int) -> ParamFilterBase:
        if n == 0:
            return ParamFilterBase("points of [0,1]", lambda t, r: True, antidiscrete=True)
        return ParamFilterBase(
            f"{n}-simplices of [0,1]: consecutive gaps < r", lambda ts, r: interval_diag_member(ts, r)
        )

    return SimplicialFilterSpec("interval", level)


def path_space(M: int, N: int) -> SimplicialFilterSpec:
    def level(n: int) -> ParamFilterBase:
        if n == 0:
            return ParamFilterBase(f"step functions [0,1] -> {N}", lambda f, r: True, antidiscrete=True)
        return ParamFilterBase(
            f"chains of {n + 1} step functions into {N}",
            lambda P, r: closed_form_member(P, r),
        )

    return SimplicialFilterSpec("path", level, (M, N))


def points_of(spec: SimplicialFilterSpec) -> frozenset | AllOf:
    base = spec.level(0)
    if isinstance(base, FiniteFilterBase):
        return base.core()
    if base.antidiscrete:
        return AllOf(base.description)
    raise ValueError("dimension-0 filter is neither finite nor antidiscrete")


# -- subdivision filter on representables -----------------------------------------

def _window_needed(s_vals: Sequence[int], a_vals: Sequence[int]) -> int:
    """Fewest consecutive positions a monotone tuple containing ``a_vals`` as a
    subsequence needs in order to show every value of ``s_vals``."""
    distinct = sorted(set(s_vals))
    lo, hi = distinct[0], distinct[-1]
    extra = 0
    for v in set(a_vals):
        if lo < v < hi:
            extra += max(0, a_vals.count(v) - (v in distinct))
    return len(distinct) + extra


def subdivision_member_representable(X: FinSSet, s: SimplexInstance, anchor: SimplexInstance, m: int) -> bool:
    """Is ``s`` one of the faces ``ε'[t_1 <= ... <= t_n]``, ``t_n <= t_1 + m``, of
    some simplex ``ε'`` having ``anchor`` as a face?"""
    if not X.is_standard:
        raise ValueError("subdivision filter is only implemented on standard simplices")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _window_needed(X.values_of(s), X.values_of(anchor)) - 1 <= m


# -- Skorokhod neighborhoods ----------------------------------------------------------

def _check_params(n: int, N: int, delta=None) -> None:
    if n < 1 or N < 2 * n:
        raise ValueError(f"N too small: need N >= 2n >= 2, got n={n}, N={N}")
    if delta is not None and Q(delta) <= 0:
        raise ValueError("delta must be positive")


def reach_window(n: int, N: int, delta) -> Fraction:
    """How far past ``t_n`` the first tail entry ``t_{N-n+1}`` can be pushed."""
    return (N - 2 * n + 1) * Q(delta)


def theta_skorokhod_member(P: PathSimplex, theta: MonotoneMap, n: int, N: int, delta) -> bool:
    """Membership of the chain ``P`` in the θεδ-Skorokhod neighborhood with ε the
    main diagonal and δ the consecutive-gap neighborhood of width ``delta``.

    All tail values coincide iff ``f_θ(1)`` and ``f_θ(n)`` agree at the first
    tail entry (the chain is ordered, the entries nondecreasing), and any
    diagonal tuple lies in every δ₀, so the condition reads: from every
    ``t`` an agreement point of ``(f_θ(1), f_θ(n))`` is reachable within
    ``reach_window``.
    """
    _check_params(n, N, delta)
    if theta.dom != n or theta.cod != P.M:
        raise ValueError(f"θ must map {n} -> {P.M}")
    lo, hi = P[theta(1)], P[theta(n)]
    return agreement(lo, hi).longest_gap() <= reach_window(n, N, delta)


def closed_form_member(P: PathSimplex, delta) -> bool:
    """For every ``t`` some ``t' ∈ [t, min(1, t + delta)]`` has
    ``f_1(t') = ... = f_M(t')``."""
    delta = Q(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    return agreement(P[1], P[P.M]).longest_gap() <= delta


def hom_path_member(f: StepFunction, n: int, N: int, delta) -> bool:
    """εδ-Skorokhod neighborhood on ``hom(Δ_[0,1], Δ_{N-1})`` for a single path."""
    return theta_skorokhod_member(PathSimplex((f,)), MonotoneMap((1,) * n, 1), n, N, delta)


def hom_skorokhod_member_finite(phi: SimplicialMap, n: int, N: int) -> bool:
    """Brute-force εδ-Skorokhod membership of ``phi`` with both sides carrying
    the diagonal filter.

    The smallest neighborhoods are the diagonals, and membership is monotone
    in δ, ε and δ₀, so it suffices to evaluate the formula at those.
    """
    _check_params(n, N)
    X, Y = phi.source, phi.target
    head = interval(1, n, N)
    tail = interval(N - n + 1, N, N)
    delta0 = diag_filter(X).level(n - 1).basis[0]
    delta = diag_filter(X).level(N - 1)
    eps = diag_filter(Y).level(n - 1).basis[0]
    candidates = [xp for xp in delta.carrier if xp in delta.basis[0]]
    for x in delta0:
        if not any(
            apply_operator(X, xp, head) == x and phi(apply_operator(X, xp, tail)) in eps
            for xp in candidates
        ):
            return False
    return True


def u_neighborhood_member(f: StepFunction, g: StepFunction, delta) -> bool:
    """Is ``g`` in ``U_{δ,f}``: some ``h`` with ``(f <= h)`` and ``(g <= h)`` both
    in every θδ-Skorokhod neighborhood.  ``h = max(f, g)`` has the largest
    agreement sets with both, so it decides."""
    h = pointwise_max(f, g)
    pairs = (PathSimplex((f, h)), PathSimplex((g, h)))
    return all(closed_form_member(P, delta) for P in pairs)
