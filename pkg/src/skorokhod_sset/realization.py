"""Points of the geometric realization as pairs ``(F, x)``: a finite cut set
``F`` of the unit interval and a simplex ``x`` with one vertex per connected
component of ``[0, 1] \\ F``.

Convention at cuts: a point ``t ∈ F`` belongs to the component on its right,
so ``t`` lies in component ``1 + #{s ∈ F : s <= t}``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .delta import MonotoneMap, face_operator, identity
from .sset import FinSSet, ProductSSet, SimplexInstance, apply_operator, product, std_simplex

Q = Fraction


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def component_index(F: Sequence[Fraction], t: Fraction) -> int:
    return 1 + bisect_right(F, t)


@dataclass(frozen=True)
class RealizationPoint:
    sset: FinSSet
    F: tuple[Fraction, ...]
    x: SimplexInstance

    def __post_init__(self) -> None:
        F = tuple(_q(s) for s in self.F)
        object.__setattr__(self, "F", F)
        if self.x.dim != len(F):
            raise ValueError(f"malformed point: {len(F)} cuts need a {len(F)}-simplex, got dimension {self.x.dim}")
        if any(not 0 <= s <= 1 for s in F) or any(a >= b for a, b in zip(F, F[1:])):
            raise ValueError(f"malformed point: cuts must be strictly increasing in [0,1]: {F}")
        if not self.sset.has(self.x.base):
            raise ValueError(f"malformed point: unknown simplex {self.x.base!r}")

    def components(self) -> list[tuple[Fraction, Fraction]]:
        ends = (Q(0),) + self.F + (Q(1),)
        return list(zip(ends, ends[1:]))


def normalize(p: RealizationPoint) -> RealizationPoint:
    X, F, x = p.sset, list(p.F), p.x
    # a cut at 0 leaves an empty first component; a cut at 1 leaves only {1}
    while F and F[0] == 0:
        x = apply_operator(X, x, face_operator(range(2, len(F) + 2), len(F) + 1))
        F.pop(0)
    while F and F[-1] == 1:
        x = apply_operator(X, x, face_operator(range(1, len(F) + 1), len(F) + 1))
        F.pop()
    sigma = x.surj
    keep = tuple(F[j - 1] for j in range(1, len(F) + 1) if sigma(j) != sigma(j + 1))
    return RealizationPoint(X, keep, SimplexInstance(x.base, identity(sigma.cod)))


def equal(p: RealizationPoint, q: RealizationPoint) -> bool:
    return p.sset == q.sset and normalize(p) == normalize(q)


def refine(p: RealizationPoint, F_new: Iterable) -> RealizationPoint:
    G = tuple(sorted({_q(s) for s in F_new}))
    if not set(p.F) <= set(G):
        raise ValueError("refinement must contain the original cuts")
    lefts = (Q(0),) + G
    pi = MonotoneMap(tuple(component_index(p.F, a) for a in lefts), len(p.F) + 1)
    return RealizationPoint(p.sset, G, apply_operator(p.sset, p.x, pi))


def eval_point(p: RealizationPoint, ts: Sequence) -> SimplexInstance:
    """The simplex the point's morphism assigns to the tuple ``t_1 <= ... <= t_n``."""
    ts = [_q(t) for t in ts]
    if any(a > b for a, b in zip(ts, ts[1:])) or any(not 0 <= t <= 1 for t in ts):
        raise ValueError("evaluation tuple must be nondecreasing in [0,1]")
    theta = MonotoneMap(tuple(component_index(p.F, t) for t in ts), len(p.F) + 1)
    return apply_operator(p.sset, p.x, theta)


# -- step functions -----------------------------------------------------------

@dataclass(frozen=True)
class StepFunction:
    """Monotone right-continuous ``[0,1] -> {1..N}``, ``t ↦ 1 + #{i : s_i <= t}``.

    ``s`` is the coordinate form (``N - 1`` entries); repeated entries encode
    skipped values, an entry ``1`` a value never reached on ``[0, 1)``.
    """

    N: int
    s: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        s = tuple(_q(v) for v in self.s)
        object.__setattr__(self, "s", s)
        if self.N < 1 or len(s) != self.N - 1:
            raise ValueError(f"step function into {self.N} needs {self.N - 1} coordinates")
        if any(not 0 <= v <= 1 for v in s) or any(a > b for a, b in zip(s, s[1:])):
            raise ValueError(f"coordinates must be nondecreasing in [0,1]: {s}")

    def __call__(self, t) -> int:
        return 1 + bisect_right(self.s, _q(t))

    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.s)))

    def level(self, v: int) -> tuple[Fraction, Fraction, bool] | None:
        """The level set ``f^{-1}(v)`` as ``(lo, hi, closed_right)``, or None."""
        lo = Q(0) if v == 1 else self.s[v - 2]
        if v == self.N:
            return lo, Q(1), True
        hi = self.s[v - 1]
        return (lo, hi, False) if lo < hi else None


def pointwise_max(f: StepFunction, g: StepFunction) -> StepFunction:
    _same_codomain(f, g)
    return StepFunction(f.N, tuple(min(a, b) for a, b in zip(f.s, g.s)))


def _same_codomain(f: StepFunction, g: StepFunction) -> None:
    if f.N != g.N:
        raise ValueError(f"codomain mismatch: {f.N} vs {g.N}")


@dataclass(frozen=True)
class PathSimplex:
    """A chain ``f_1 <= ... <= f_M`` of step functions into one ``N``."""

    chains: tuple[StepFunction, ...]

    def __post_init__(self) -> None:
        chains = tuple(self.chains)
        object.__setattr__(self, "chains", chains)
        if not chains:
            raise ValueError("empty chain")
        for f, g in zip(chains, chains[1:]):
            _same_codomain(f, g)
            if any(b > a for a, b in zip(f.s, g.s)):
                raise ValueError("chain is not pointwise nondecreasing")

    @property
    def M(self) -> int:
        return len(self.chains)

    @property
    def N(self) -> int:
        return self.chains[0].N

    def __getitem__(self, i: int) -> StepFunction:
        return self.chains[i - 1]


def _require_standard(X: FinSSet) -> int:
    if not X.is_standard:
        raise ValueError("step presentation needs a point over a standard simplex")
    return X.kind[1]


def to_step(p: RealizationPoint) -> StepFunction:
    p = normalize(p)
    N = _require_standard(p.sset)
    vals = p.sset.values_of(p.x)
    coords = []
    for i in range(1, N):
        j = next((j for j, v in enumerate(vals) if v > i), None)
        coords.append(Q(1) if j is None else (Q(0) if j == 0 else p.F[j - 1]))
    return StepFunction(N, tuple(coords))


def from_step(f: StepFunction) -> RealizationPoint:
    X = std_simplex(f.N)
    F = tuple(s for s in f.breakpoints() if 0 < s < 1)
    vals = [f(a) for a in (Q(0),) + F]
    return RealizationPoint(X, F, X.instance_of_values(vals))


def coordinates(p: RealizationPoint) -> tuple[Fraction, ...]:
    return to_step(p).s


# -- products -----------------------------------------------------------------

def product_merge(p: RealizationPoint, q: RealizationPoint, P: ProductSSet | None = None) -> RealizationPoint:
    if P is None:
        P = product(p.sset, q.sset)
    elif P.factors != (p.sset, q.sset):
        raise ValueError("points do not live over the declared factors")
    G = tuple(sorted(set(p.F) | set(q.F)))
    xp, xq = refine(p, G).x, refine(q, G).x
    return normalize(RealizationPoint(P, G, P.pair_instance(xp, xq)))


def product_split(r: RealizationPoint) -> tuple[RealizationPoint, RealizationPoint]:
    P = r.sset
    if not isinstance(P, ProductSSet):
        raise ValueError("point does not live over a product")
    X, Y = P.factors
    ix, iy = P.components(r.x)
    return normalize(RealizationPoint(X, r.F, ix)), normalize(RealizationPoint(Y, r.F, iy))


# -- PL homeomorphisms --------------------------------------------------------

@dataclass(frozen=True)
class PLHomeo:
    knots: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        knots = tuple((_q(a), _q(b)) for a, b in self.knots)
        object.__setattr__(self, "knots", knots)
        if len(knots) < 2 or knots[0] != (0, 0) or knots[-1] != (1, 1):
            raise ValueError("knots must start at (0,0) and end at (1,1)")
        for (a, b), (c, d) in zip(knots, knots[1:]):
            if not (a < c and b < d):
                raise ValueError("knots must be strictly increasing in both coordinates")

    def __call__(self, t) -> Fraction:
        t = _q(t)
        xs = [k[0] for k in self.knots]
        i = min(max(bisect_right(xs, t) - 1, 0), len(xs) - 2)
        (a, b), (c, d) = self.knots[i], self.knots[i + 1]
        return b + (d - b) * (t - a) / (c - a)

    def inverse(self) -> "PLHomeo":
        return PLHomeo(tuple((b, a) for a, b in self.knots))

    def then(self, other: "PLHomeo") -> "PLHomeo":
        """``other ∘ self``."""
        inv = self.inverse()
        xs = sorted({a for a, _ in self.knots} | {inv(a) for a, _ in other.knots})
        return PLHomeo(tuple((x, other(self(x))) for x in xs))

    def max_slope(self) -> Fraction:
        return max((d - b) / (c - a) for (a, b), (c, d) in zip(self.knots, self.knots[1:]))


def identity_homeo() -> PLHomeo:
    return PLHomeo(((Q(0), Q(0)), (Q(1), Q(1))))


def homeo_apply(phi: PLHomeo, p: RealizationPoint) -> RealizationPoint:
    return RealizationPoint(p.sset, tuple(phi(s) for s in p.F), p.x)
