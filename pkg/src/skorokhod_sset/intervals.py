"""Agreement and disagreement sets of pairs of step functions.

Both functions are constant on every ``[b_k, b_{k+1})`` between consecutive
breakpoints, and every step function takes the value ``N`` at ``t = 1``, so
the disagreement set is a finite union of half-open intervals ``[c, d)``
with ``d <= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .realization import StepFunction, _same_codomain

Q = Fraction


@dataclass(frozen=True)
class AgreementSet:
    """``{t : f(t) = g(t)}`` stored through its complement: sorted, disjoint,
    maximal half-open disagreement intervals ``[c, d)``."""

    gaps: tuple[tuple[Fraction, Fraction], ...]

    def __contains__(self, t) -> bool:
        return not any(c <= t < d for c, d in self.gaps)

    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Agreement pieces ``[a, b)``; the final piece ends at 1 inclusive."""
        out, start = [], Q(0)
        for c, d in self.gaps:
            if start < c:
                out.append((start, c))
            start = d
        out.append((start, Q(1)))
        return tuple(out)

    def longest_gap(self) -> Fraction:
        return max((d - c for c, d in self.gaps), default=Q(0))


def _pieces(*fs: StepFunction) -> list[tuple[Fraction, Fraction]]:
    pts = sorted({Q(0), Q(1)} | {b for f in fs for b in f.s})
    return [(a, b) for a, b in zip(pts, pts[1:]) if a < b]


def where(pred, f: StepFunction, g: StepFunction) -> tuple[tuple[Fraction, Fraction], ...]:
    """Maximal half-open intervals on which ``pred(f(t), g(t))`` holds."""
    _same_codomain(f, g)
    out: list[list[Fraction]] = []
    for a, b in _pieces(f, g):
        if pred(f(a), g(a)):
            if out and out[-1][1] == a:
                out[-1][1] = b
            else:
                out.append([a, b])
    return tuple((a, b) for a, b in out)


def agreement(f: StepFunction, g: StepFunction) -> AgreementSet:
    return AgreementSet(where(lambda u, v: u != v, f, g))
