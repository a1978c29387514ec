"""Brute-force oracles.

Each oracle here decides the same question as a closed form elsewhere in the
package, but by searching a finite grid instead of reasoning about intervals.
They share no code with the closed forms beyond evaluating step functions.

Critical-grid lemma.  Every function in sight is a step function with
rational breakpoints, and every quantifier compares positions that are either
equal or at most a fixed rational distance apart.  The truth value of such a
condition can only change at a breakpoint ``c`` or at ``c ± kδ`` for the
distances ``kδ`` that appear, so it suffices to test those points and one
midpoint of every gap between them.  The membership oracle accepts extra
grid points so tests can check that nothing was missed.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Sequence

from .delta import MonotoneMap, monotone_maps
from .realization import (
    PathSimplex,
    RealizationPoint,
    StepFunction,
    eval_point,
    product_merge,
    product_split,
    refine,
)
from .sset import FinSSet, ProductSSet, nondeg, product

Q = Fraction
ZERO, ONE = Q(0), Q(1)


@dataclass
class Report:
    """Outcome of one oracle suite.  ``ok`` iff no failures were recorded."""

    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "ok": self.ok, "failures": self.failures[:50]}


def _with_midpoints(points: Iterable[Fraction]) -> list[Fraction]:
    pts = sorted(set(points))
    return sorted(set(pts) | {(a + b) / 2 for a, b in zip(pts, pts[1:])})


def critical_grid(breaks: Iterable[Fraction], shifts: Iterable[Fraction]) -> list[Fraction]:
    """Breakpoints, their translates by ``shifts`` (clipped to [0, 1]), and midpoints."""
    base = set(breaks) | {ZERO, ONE}
    pts = set(base)
    for c in base:
        for d in shifts:
            for t in (c - d, c + d):
                if ZERO <= t <= ONE:
                    pts.add(t)
    return _with_midpoints(pts)


# -- membership -------------------------------------------------------------------------

def _reachable(p: Fraction, targets: list[Fraction], delta: Fraction) -> bool:
    k = bisect.bisect_left(targets, p)
    return k < len(targets) and targets[k] <= p + delta


def oracle_membership(P: PathSimplex, theta: MonotoneMap, n: int, N: int, delta, extra: Sequence = ()) -> bool:
    """Evaluate the θεδ-Skorokhod condition literally over a critical grid.

    ε is the main diagonal and δ the tuples of length ``N`` with consecutive
    gaps ``<= delta``.  The condition: for two candidate widths ε₀, every
    ``n``-tuple with gaps ``< ε₀`` is the head of some tuple in δ whose tail
    is sent by θ into the diagonal, i.e. ``f_θ(1)(t_{N-n+1}) = ... =
    f_θ(n)(t_N)``.
    """
    delta = Q(delta)
    if n < 1 or N < 2 * n or delta <= 0:
        raise ValueError("bad parameters")
    if theta.dom != n or theta.cod != P.M:
        raise ValueError("θ has the wrong shape")
    breaks = [b for i in range(1, P.M + 1) for b in P[i].s]
    G = critical_grid(list(breaks) + [Q(e) for e in extra], [k * delta for k in range(N + 1)])
    values = range(1, P.N + 1)

    # tails: T[v] = admissible positions of tail entry i given all later entries also show v
    f_last = P[theta(n)]
    T = {v: [p for p in G if f_last(p) == v] for v in values}
    for i in range(n - 1, 0, -1):
        f_i = P[theta(i)]
        T = {v: [p for p in G if f_i(p) == v and _reachable(p, T[v], delta)] for v in values}
    S = sorted({p for v in values for p in T[v]})
    # walk back from t_{N-n+1} to t_n through the unconstrained middle entries
    for _ in range(N - 2 * n + 1):
        S = [p for p in G if _reachable(p, S, delta)]
    admissible = set(S)

    spacing = min((b - a for a, b in zip(G, G[1:])), default=ONE)
    for eps0 in (min(spacing, delta) / 2, min(spacing, delta) / 4):
        if all(_heads_ok(G, admissible, n, eps0, delta)):
            return True
    return False


def _heads_ok(G, admissible, n, eps0, delta):
    """Yield, for every grid ``n``-tuple with gaps ``< eps0``, whether it extends."""
    def tuples(prefix):
        if len(prefix) == n:
            yield prefix
            return
        last = prefix[-1]
        k = bisect.bisect_left(G, last)
        while k < len(G) and G[k] - last < eps0:
            yield from tuples(prefix + (G[k],))
            k += 1

    for p in G:
        for x in tuples((p,)):
            gaps_fine = all(b - a <= delta for a, b in zip(x, x[1:]))
            yield gaps_fine and x[-1] in admissible


# -- distances ---------------------------------------------------------------------------

def _probe_points(t: Fraction, delta: Fraction, breaks: Sequence[Fraction], forward_only: bool) -> list[Fraction]:
    """Points whose values cover everything a step function takes on the
    window ``(t - delta, t + delta)`` (or ``[t, t + delta)``) inside [0, 1].

    Right-continuity: just right of ``t - delta`` the value is the one at
    ``t - delta`` itself, and inside the window values change only at breakpoints.
    """
    pts = [t]
    if not forward_only:
        pts.append(max(ZERO, t - delta))
    pts += [b for b in breaks if (t <= b if forward_only else t - delta < b) and b < t + delta]
    return [p for p in pts if ZERO <= p <= ONE]


def _pass(kind: str, f: StepFunction, g: StepFunction, delta: Fraction) -> bool:
    breaks = sorted(set(f.s) | set(g.s) | {ZERO, ONE})
    shifts = [delta]
    tgrid = critical_grid(breaks, shifts)
    if kind == "v3":
        return all(
            any(f(p) == g(p) for p in _probe_points(t, delta, breaks, True))
            for t in tgrid
        )
    if kind == "v2":
        return all(
            any(f(p) == g(p) for p in _probe_points(t, delta, breaks, False))
            for t in tgrid
        )
    if kind == "v1":
        def one_sided(a, b):
            return all(
                any(b(p) == a(t) for p in _probe_points(t, delta, breaks, False))
                for t in tgrid
            )
        return one_sided(f, g) and one_sided(g, f)
    raise ValueError(f"unknown distance kind {kind!r}")


def oracle_dist(kind: str, f: StepFunction, g: StepFunction) -> Fraction:
    """Smallest threshold δ such that every strict δ-ball condition passes.

    Candidates are all breakpoint differences and half-differences.  A pass
    first seen at a midpoint probe means the infimum is the candidate below
    it (the condition is strict, so the infimum itself need not pass).
    Returns 1 when nothing up to 2 passes.
    """
    T = sorted(set(f.s) | set(g.s) | {ZERO, ONE})
    cands = sorted({abs(a - b) for a in T for b in T} | {abs(a - b) / 2 for a in T for b in T})
    if not _pass(kind, f, g, Q(2)):
        return ONE
    probes = _with_midpoints(cands + [Q(2)])
    lo, hi = 0, len(probes) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _pass(kind, f, g, probes[mid]):
            hi = mid
        else:
            lo = mid + 1
    p = probes[lo]
    if p in cands:
        return min(p, ONE)
    below = [c for c in cands if c < p]
    return min(below[-1], ONE)


# -- U-neighborhood witness search ---------------------------------------------------------

def oracle_u_witness(f: StepFunction, g: StepFunction, delta, extra: Sequence = ()) -> bool:
    """Search all ``h >= f, g`` with breakpoints from a bounded grid for one
    where both pairs satisfy the consecutive-agreement window ``delta``."""
    delta = Q(delta)
    N = f.N
    grid = _with_midpoints(set(f.s) | set(g.s) | {ZERO, ONE} | set(map(Q, extra)))
    tgrid = critical_grid(grid, [delta])
    for s in combinations_with_replacement(grid, N - 1):
        h = StepFunction(N, s)
        if any(h(t) < max(f(t), g(t)) for t in tgrid):
            continue
        closed = lambda t: [t, min(ONE, t + delta)] + [b for b in grid if t <= b <= t + delta]
        if all(any(a(p) == h(p) for p in closed(t)) for a in (f, g) for t in tgrid):
            return True
    return False


# -- product bijection ---------------------------------------------------------------------

def normal_points(X: FinSSet, grid: Sequence[Fraction], bound: int) -> list[RealizationPoint]:
    """All points whose cut set is drawn from ``grid`` with at most ``bound`` cuts
    and whose simplex is nondegenerate, i.e. every normal form there."""
    out = []
    for k in range(bound + 1):
        for F in combinations(sorted(grid), k):
            for name in X.nondegenerate(k):
                out.append(RealizationPoint(X, F, nondeg(name, k)))
    return out


def _samples(grid: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    pts = _with_midpoints(set(grid) | {ZERO, ONE})
    return [(t,) for t in pts] + list(combinations(pts, 2))


def oracle_product_bijection(
    X: FinSSet,
    Y: FinSSet,
    grid: Sequence = (Q(1, 4), Q(1, 2), Q(3, 4)),
    bound: int = 2,
    merge: Callable | None = None,
    split: Callable = product_split,
) -> Report:
    """Exhaustively check that points of |X × Y| and pairs of points of |X|, |Y|
    correspond, compatibly with evaluation, on all normal forms over ``grid``."""
    grid = [Q(g) for g in grid]
    P: ProductSSet = product(X, Y)
    merge = merge or (lambda p, q: product_merge(p, q, P))
    report = Report("product")
    samples = _samples(grid)
    xs, ys = normal_points(X, grid, bound), normal_points(Y, grid, bound)
    for p in xs:
        for q in ys:
            report.cases += 1
            tag = f"({p.F},{p.x}) x ({q.F},{q.x})"
            try:
                r = merge(p, q)
            except Exception as exc:  # a report, not a crash
                report.fail(f"merge raised on {tag}: {exc}")
                continue
            if split(r) != (p, q):
                report.fail(f"split(merge) != id on {tag}")
            extra = [g for g in grid if g not in p.F][:1]
            if extra:
                alt = merge(refine(p, sorted(set(p.F) | set(extra))), q)
                if alt != r:
                    report.fail(f"merge depends on the representative on {tag}")
            for ts in samples:
                cx, cy = P.components(eval_point(r, ts))
                if cx != eval_point(p, ts) or cy != eval_point(q, ts):
                    report.fail(f"eval mismatch at {ts} on {tag}")
                    break
    for r in normal_points(P, grid, bound):
        report.cases += 1
        try:
            back = merge(*split(r))
        except Exception as exc:
            report.fail(f"merge(split) raised on ({r.F},{r.x}): {exc}")
            continue
        if back != r:
            report.fail(f"merge(split) != id on ({r.F},{r.x})")
    for proj in P.projections():
        for v in proj.violations():
            report.fail(f"projection not simplicial: {v}")
    return report


def corrupted_merge(X: FinSSet, Y: FinSSet) -> Callable:
    """A merge that forgets to normalize: the negative control."""
    P = product(X, Y)

    def merge(p: RealizationPoint, q: RealizationPoint) -> RealizationPoint:
        G = tuple(sorted(set(p.F) | set(q.F)))
        rp, rq = refine(p, G), refine(q, G)
        return RealizationPoint(P, G, P.pair_instance(rp.x, rq.x))

    return merge


# -- subdivision filter -------------------------------------------------------------------

def brute_subdivision_member(s_vals: Sequence[int], a_vals: Sequence[int], m: int, K: int) -> bool:
    """Is there a monotone tuple ``e`` in {1..K} containing ``a_vals`` as a
    subsequence and positions ``t_1 <= ... <= t_n`` with ``t_n <= t_1 + m`` and
    ``e(t_j) = s_vals[j]``?"""
    n, k = len(s_vals), len(a_vals)
    for length in range(max(k, 1), k + n + 1):
        for e in monotone_maps(length, K):
            vals = e.values
            if not _is_subsequence(a_vals, vals):
                continue
            for t in monotone_maps(n, length):
                if t.values[-1] - t.values[0] <= m and all(vals[t.values[j] - 1] == s_vals[j] for j in range(n)):
                    return True
    return False


def _is_subsequence(small: Sequence, big: Sequence) -> bool:
    it = iter(big)
    return all(any(x == y for y in it) for x in small)

