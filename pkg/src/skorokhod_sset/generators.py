"""Seeded random instances.  Same seed and bounds give the same stream."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .delta import MonotoneMap
from .realization import PathSimplex, PLHomeo, RealizationPoint, StepFunction
from .sset import FinSSet, SimplexInstance, nondeg

Q = Fraction


@dataclass
class Generator:
    seed: int
    max_N: int = 4
    max_breakpoints: int = 4
    max_den: int = 12

    def __post_init__(self) -> None:
        self.rng = random.Random(self.seed)

    def rational(self, lo=0, hi=1) -> Fraction:
        den = self.rng.randint(1, self.max_den)
        lo_k, hi_k = -(-Q(lo) * den // 1), Q(hi) * den // 1
        return Q(self.rng.randint(int(lo_k), int(hi_k)), den)

    def positive(self, hi=Q(1, 2)) -> Fraction:
        den = self.rng.randint(2, self.max_den)
        return Q(self.rng.randint(1, max(1, int(Q(hi) * den))), den)

    def pool(self, size: int | None = None) -> list[Fraction]:
        k = self.rng.randint(1, self.max_breakpoints) if size is None else size
        return sorted({self.rational() for _ in range(k)})

    def step(self, N: int | None = None, pool=None) -> StepFunction:
        N = N or self.rng.randint(1, self.max_N)
        pool = (pool or self.pool()) + [Q(0), Q(1)]
        return StepFunction(N, tuple(sorted(self.rng.choice(pool) for _ in range(N - 1))))

    def chain(self, M: int, N: int, pool=None) -> PathSimplex:
        pool = pool or self.pool()
        fs = [self.step(N, pool) for _ in range(M)]
        # coordinatewise order statistics keep each tuple sorted and order the chain
        cols = [sorted((f.s[k] for f in fs), reverse=True) for k in range(N - 1)]
        return PathSimplex(tuple(StepFunction(N, tuple(c[i] for c in cols)) for i in range(M)))

    def monotone(self, m: int, n: int) -> MonotoneMap:
        return MonotoneMap(tuple(sorted(self.rng.randint(1, n) for _ in range(m))), n)

    def cuts(self, k: int) -> tuple[Fraction, ...]:
        out: set[Fraction] = set()
        while len(out) < k:
            r = self.rational()
            if 0 < r < 1:
                out.add(r)
        return tuple(sorted(out))

    def tuple_in_unit(self, n: int) -> tuple[Fraction, ...]:
        return tuple(sorted(self.rational() for _ in range(n)))

    def point(self, X: FinSSet, max_cuts: int = 3) -> RealizationPoint:
        k = self.rng.randint(0, max_cuts)
        simplices = list(X.simplices_of_dim(k))
        return RealizationPoint(X, self.cuts(k), self.rng.choice(simplices))

    def homeo(self, max_knots: int = 3) -> PLHomeo:
        k = self.rng.randint(0, max_knots)
        xs, ys = self.cuts(k), self.cuts(k)
        return PLHomeo(((Q(0), Q(0)),) + tuple(zip(xs, ys)) + ((Q(1), Q(1)),))

    def sset(self, max_nondeg: int = 10) -> FinSSet:
        """Random valid presentation of dimension <= 2."""
        rng = self.rng
        verts = [f"v{i}" for i in range(rng.randint(1, 3))]
        faces: dict[str, list[SimplexInstance]] = {}
        edges: list[tuple[str, str, str]] = []
        for i in range(rng.randint(0, 3)):
            src, tgt = rng.choice(verts), rng.choice(verts)
            edges.append((f"e{i}", src, tgt))
            faces[f"e{i}"] = [nondeg(tgt, 0), nondeg(src, 0)]

        def edge_between(a: str, b: str) -> SimplexInstance | None:
            options = [nondeg(n, 1) for n, s, t in edges if (s, t) == (a, b)]
            if a == b:
                options.append(SimplexInstance(a, MonotoneMap((1, 1), 1)))
            return rng.choice(options) if options else None

        tris = []
        for i in range(rng.randint(0, 3)):
            if len(verts) + len(edges) + len(tris) >= max_nondeg:
                break
            a, b, c = (rng.choice(verts) for _ in range(3))
            fs = [edge_between(b, c), edge_between(a, c), edge_between(a, b)]
            if None in fs:
                continue
            tris.append(f"t{i}")
            faces[f"t{i}"] = fs
        simplices = {0: verts, 1: [e[0] for e in edges], 2: tris}
        while len(simplices) > 1 and not simplices[max(simplices)]:
            del simplices[max(simplices)]
        return FinSSet(simplices, faces)

    def choice(self, seq):
        return self.rng.choice(list(seq))

