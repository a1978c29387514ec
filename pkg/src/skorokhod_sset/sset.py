"""Finitely presented simplicial sets.

A presentation lists the nondegenerate simplices per dimension and, for each
nondegenerate simplex of dimension ``n >= 1``, its ``n + 1`` codimension-one
faces (the ``i``-th entry deletes vertex ``i``).  Every simplex is then
written uniquely as ``base · surj`` (Eilenberg-Zilber normal form) and all
simplicial operators act by rewriting against the face table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .delta import (
    MonotoneMap,
    codegeneracy,
    coface,
    compose,
    edgewise_map,
    epi_mono_factorize,
    identity,
    surjections,
)


@dataclass(frozen=True)
class SimplexInstance:
    base: str
    surj: MonotoneMap

    def __post_init__(self) -> None:
        if not self.surj.is_surjective():
            raise ValueError(f"degeneracy part must be surjective: {self.surj!r}")

    @property
    def dim(self) -> int:
        return self.surj.dom - 1

    @property
    def base_dim(self) -> int:
        return self.surj.cod - 1

    def is_nondegenerate(self) -> bool:
        return self.surj.dom == self.surj.cod

    def to_json(self) -> dict:
        return {"base": self.base, "surj": list(self.surj.values)}

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplexInstance":
        vals = tuple(int(v) for v in data["surj"])
        return cls(str(data["base"]), MonotoneMap(vals, max(vals)))

    def __str__(self) -> str:
        if self.is_nondegenerate():
            return self.base
        return f"{self.base}·[{','.join(map(str, self.surj.values))}]"


def nondeg(name: str, dim: int) -> SimplexInstance:
    return SimplexInstance(name, identity(dim + 1))


class FinSSet:
    """Finite presentation of a simplicial set.

    ``labels`` optionally attaches a structured key to each nondegenerate
    simplex (value tuples for standard simplices, pairs of instances for
    products, ...); it plays no role in the simplicial structure.
    """

    def __init__(
        self,
        simplices: Mapping[int, Sequence[str]],
        faces: Mapping[str, Sequence[SimplexInstance]],
        labels: Mapping[str, Hashable] | None = None,
        kind: tuple = ("presented",),
    ) -> None:
        dims = sorted(int(d) for d in simplices)
        self.max_dim = dims[-1] if dims else -1
        self.simplices: dict[int, tuple[str, ...]] = {
            d: tuple(simplices.get(d, simplices.get(str(d), ()))) for d in range(self.max_dim + 1)
        }
        self.faces: dict[str, tuple[SimplexInstance, ...]] = {k: tuple(v) for k, v in faces.items()}
        self._dim_of: dict[str, int] = {}
        for d, names in self.simplices.items():
            for name in names:
                if name in self._dim_of:
                    raise ValueError(f"duplicate simplex name {name!r}")
                self._dim_of[name] = d
        self.labels: dict[str, Hashable] = dict(labels or {})
        self._by_label = {v: k for k, v in self.labels.items()}
        self.kind = kind
        self._signature = (
            tuple((d, names) for d, names in self.simplices.items()),
            tuple(sorted((k, v) for k, v in self.faces.items())),
        )
        self._hash = hash(self._signature)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinSSet) and self._signature == other._signature

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        counts = tuple(len(self.simplices[d]) for d in range(self.max_dim + 1))
        return f"FinSSet({self.kind[0]}, nondeg={counts})"

    def dim_of(self, name: str) -> int:
        return self._dim_of[name]

    def has(self, name: str) -> bool:
        return name in self._dim_of

    def nondegenerate(self, d: int) -> tuple[str, ...]:
        return self.simplices.get(d, ())

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.simplices[d]) for d in range(self.max_dim + 1))

    def by_label(self, key: Hashable) -> str:
        return self._by_label[key]

    def vertices(self) -> tuple[str, ...]:
        return self.nondegenerate(0)

    def simplices_of_dim(self, n: int) -> Iterator[SimplexInstance]:
        """Every simplex of ``X_n`` in normal form."""
        for k in range(min(n, self.max_dim) + 1):
            for name in self.simplices[k]:
                for s in surjections(n + 1, k + 1):
                    yield SimplexInstance(name, s)

    def act(self, s: SimplexInstance, theta: MonotoneMap) -> SimplexInstance:
        return apply_operator(self, s, theta)

    @property
    def is_standard(self) -> bool:
        return self.kind[0] == "delta"

    def values_of(self, s: SimplexInstance) -> tuple[int, ...]:
        """Vertex values of a simplex of a standard simplex."""
        if not self.is_standard:
            raise ValueError("values are only defined on standard simplices")
        vals = self.labels[s.base]
        return tuple(vals[v - 1] for v in s.surj.values)

    def instance_of_values(self, values: Sequence[int]) -> SimplexInstance:
        if not self.is_standard:
            raise ValueError("values are only defined on standard simplices")
        vals = tuple(values)
        distinct = tuple(sorted(set(vals)))
        if list(vals) != sorted(vals) or distinct[0] < 1 or distinct[-1] > self.kind[1]:
            raise ValueError(f"not a simplex of delta:{self.kind[1]}: {vals}")
        rank = {v: i for i, v in enumerate(distinct, start=1)}
        return SimplexInstance(self.by_label(distinct), MonotoneMap(tuple(rank[v] for v in vals), len(distinct)))

    def to_json(self) -> dict:
        return {
            "max_dim": self.max_dim,
            "simplices": {str(d): list(n) for d, n in self.simplices.items()},
            "faces": {k: [f.to_json() for f in v] for k, v in sorted(self.faces.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FinSSet":
        simplices = {int(d): list(names) for d, names in data["simplices"].items()}
        faces = {k: [SimplexInstance.from_json(f) for f in v] for k, v in data.get("faces", {}).items()}
        return cls(simplices, faces)


def apply_operator(X: FinSSet, s: SimplexInstance, theta: MonotoneMap) -> SimplexInstance:
    """Normal form of ``θ*(s)``."""
    if theta.cod != s.surj.dom:
        raise ValueError(f"size mismatch: operator {theta!r} on a {s.dim}-simplex")
    epi, mono = epi_mono_factorize(compose(s.surj, theta))
    base = s.base
    while not mono.is_identity():
        # mono = coface(i) ∘ rest, with i the first vertex it misses
        img = set(mono.values)
        i = next(v for v in range(1, mono.cod + 1) if v not in img)
        try:
            face = X.faces[base][i - 1]
        except (KeyError, IndexError):
            raise ValueError(f"missing face {i} of {base!r}") from None
        rest = MonotoneMap(tuple(v - (v > i) for v in mono.values), mono.cod - 1)
        e2, mono = epi_mono_factorize(compose(face.surj, rest))
        base = face.base
        epi = compose(e2, epi)
    return SimplexInstance(base, epi)


def face(X: FinSSet, s: SimplexInstance, i: int) -> SimplexInstance:
    """Delete vertex ``i`` of ``s``."""
    return apply_operator(X, s, coface(i, s.dim + 1))


@lru_cache(maxsize=None)
def std_simplex(N: int) -> FinSSet:
    """``hom(-, N)``: the ``(N-1)``-dimensional standard simplex."""
    if N < 1:
        raise ValueError("std_simplex needs N >= 1")
    simplices, faces, labels = {}, {}, {}
    for k in range(N):
        names = []
        for tup in combinations(range(1, N + 1), k + 1):
            name = ",".join(map(str, tup))
            names.append(name)
            labels[name] = tup
            if k:
                faces[name] = [nondeg(",".join(map(str, tup[:i] + tup[i + 1:])), k - 1) for i in range(k + 1)]
        simplices[k] = names
    return FinSSet(simplices, faces, labels, kind=("delta", N))


def point() -> FinSSet:
    return std_simplex(1)


class SimplicialMap:
    """A morphism of presented simplicial sets, given on nondegenerate
    generators."""

    def __init__(self, source: FinSSet, target: FinSSet, images: Mapping[str, SimplexInstance]) -> None:
        self.source = source
        self.target = target
        self.images = dict(images)

    def __call__(self, s: SimplexInstance) -> SimplexInstance:
        return apply_operator(self.target, self.images[s.base], s.surj)

    def violations(self) -> list[str]:
        out = []
        for d in range(self.source.max_dim + 1):
            for name in self.source.nondegenerate(d):
                img = self.images.get(name)
                if img is None:
                    out.append(f"no image for {name!r}")
                    continue
                if img.dim != d:
                    out.append(f"image of {name!r} has dimension {img.dim}, expected {d}")
                    continue
                for i in range(1, d + 2 if d else 1):
                    lhs = self(self.source.faces[name][i - 1])
                    rhs = face(self.target, img, i)
                    if lhs != rhs:
                        out.append(f"face {i} of {name!r} not preserved")
        return out

    def to_json(self) -> dict:
        return {k: v.to_json() for k, v in sorted(self.images.items())}


# -- products ---------------------------------------------------------------

def _joint_collapses(a: MonotoneMap, b: MonotoneMap) -> list[int]:
    return [j for j in range(1, a.dom) if a(j) == a(j + 1) and b(j) == b(j + 1)]


def _split_off(surj: MonotoneMap, eps: MonotoneMap) -> MonotoneMap:
    """The ``σ'`` with ``surj = σ' ∘ eps``; ``eps`` must only collapse where
    ``surj`` does."""
    vals = [0] * eps.cod
    for j in range(1, eps.dom + 1):
        vals[eps(j) - 1] = surj(j)
    return MonotoneMap(tuple(vals), surj.cod)


def _collapse(n_vertices: int, collapses: Iterable[int]) -> MonotoneMap:
    cut = set(collapses)
    vals, v = [1], 1
    for j in range(1, n_vertices):
        if j not in cut:
            v += 1
        vals.append(v)
    return MonotoneMap(tuple(vals), v)


def _inst_name(s: SimplexInstance) -> str:
    return str(s)


class ProductSSet(FinSSet):
    """``X × Y`` with nondegenerate simplices the jointly nondegenerate pairs."""

    def __init__(self, X: FinSSet, Y: FinSSet, max_dim: int | None = None) -> None:
        top = X.max_dim + Y.max_dim if max_dim is None else max_dim
        simplices: dict[int, list[str]] = {}
        labels: dict[str, tuple[SimplexInstance, SimplexInstance]] = {}
        for n in range(top + 1):
            names = []
            ys = list(Y.simplices_of_dim(n))
            for sx in X.simplices_of_dim(n):
                for sy in ys:
                    if _joint_collapses(sx.surj, sy.surj):
                        continue
                    name = f"({_inst_name(sx)}|{_inst_name(sy)})"
                    names.append(name)
                    labels[name] = (sx, sy)
            if not names:
                break
            simplices[n] = names
        self.factors = (X, Y)
        self._lookup = {v: k for k, v in labels.items()}
        faces: dict[str, list[SimplexInstance]] = {}
        for n, names in simplices.items():
            if n == 0:
                continue
            for name in names:
                sx, sy = labels[name]
                faces[name] = [
                    self.pair_instance(face(X, sx, i), face(Y, sy, i)) for i in range(1, n + 2)
                ]
        super().__init__(simplices, faces, labels, kind=("product",))

    def pair_instance(self, sx: SimplexInstance, sy: SimplexInstance) -> SimplexInstance:
        """Normal form in ``X × Y`` of the pair ``(sx, sy)``."""
        if sx.dim != sy.dim:
            raise ValueError("paired simplices must have equal dimension")
        eps = _collapse(sx.surj.dom, _joint_collapses(sx.surj, sy.surj))
        key = (
            SimplexInstance(sx.base, _split_off(sx.surj, eps)),
            SimplexInstance(sy.base, _split_off(sy.surj, eps)),
        )
        return SimplexInstance(self._lookup[key], eps)

    def components(self, s: SimplexInstance) -> tuple[SimplexInstance, SimplexInstance]:
        kx, ky = self.labels[s.base]
        X, Y = self.factors
        return apply_operator(X, kx, s.surj), apply_operator(Y, ky, s.surj)

    def projections(self) -> tuple[SimplicialMap, SimplicialMap]:
        X, Y = self.factors
        return (
            SimplicialMap(self, X, {k: v[0] for k, v in self.labels.items()}),
            SimplicialMap(self, Y, {k: v[1] for k, v in self.labels.items()}),
        )


@lru_cache(maxsize=256)
def product(X: FinSSet, Y: FinSSet) -> ProductSSet:
    return ProductSSet(X, Y)


# -- edgewise subdivision -----------------------------------------------------

class EdgewiseSSet(FinSSet):
    """``X ∘ e``: its ``n``-vertex simplices are the ``2n``-vertex simplices of
    ``X``, operators acting through :func:`edgewise_map`."""

    def __init__(self, X: FinSSet, max_dim: int | None = None) -> None:
        self.inner = X
        top = X.max_dim if max_dim is None else max_dim
        simplices: dict[int, list[str]] = {}
        labels: dict[str, SimplexInstance] = {}
        for k in range(top + 1):
            names = []
            for y in X.simplices_of_dim(2 * k + 1):
                if self._degeneracy(y) is None:
                    name = f"e[{_inst_name(y)}]"
                    names.append(name)
                    labels[name] = y
            simplices[k] = names
        while len(simplices) > 1 and not simplices[max(simplices)]:
            del simplices[max(simplices)]
        self._lookup = {v: k for k, v in labels.items()}
        faces = {}
        for k, names in simplices.items():
            if k == 0:
                continue
            for name in names:
                y = labels[name]
                faces[name] = [self.normal_form(apply_operator(X, y, edgewise_map(coface(i, k + 1))))
                               for i in range(1, k + 2)]
        super().__init__(simplices, faces, labels, kind=("edgewise",))

    def _degeneracy(self, y: SimplexInstance) -> tuple[MonotoneMap, SimplexInstance] | None:
        X = self.inner
        v = (y.dim + 1) // 2
        for j in range(1, v):
            sigma = codegeneracy(j, v)
            section = MonotoneMap(tuple(i if i <= j else i + 1 for i in range(1, v)), v)
            z = apply_operator(X, y, edgewise_map(section))
            if apply_operator(X, z, edgewise_map(sigma)) == y:
                return sigma, z
        return None

    def normal_form(self, y: SimplexInstance) -> SimplexInstance:
        """Eilenberg-Zilber decomposition in ``X ∘ e`` of an ``X``-simplex
        with an even number of vertices."""
        if (y.dim + 1) % 2:
            raise ValueError("X∘e simplices have an even number of X-vertices")
        surj = identity((y.dim + 1) // 2)
        while (hit := self._degeneracy(y)) is not None:
            sigma, y = hit
            surj = compose(sigma, surj)
        return SimplexInstance(self._lookup[y], surj)

    def underlying(self, s: SimplexInstance) -> SimplexInstance:
        return apply_operator(self.inner, self.labels[s.base], edgewise_map(s.surj))


def precompose_edgewise(X: FinSSet, max_dim: int | None = None) -> EdgewiseSSet:
    return EdgewiseSSet(X, max_dim)


# -- validation & io ----------------------------------------------------------

def validate(X: FinSSet) -> list[str]:
    out: list[str] = []
    for d in range(1, X.max_dim + 1):
        for name in X.nondegenerate(d):
            entries = X.faces.get(name)
            if entries is None:
                out.append(f"{name}: no face list")
                continue
            if len(entries) != d + 1:
                out.append(f"{name}: expected {d + 1} faces, got {len(entries)}")
            for i, f in enumerate(entries, start=1):
                if not X.has(f.base):
                    out.append(f"{name}: dangling face {i} -> {f.base!r}")
                elif f.dim != d - 1:
                    out.append(f"{name}: face {i} has dimension {f.dim}, expected {d - 1}")
                elif X.dim_of(f.base) != f.base_dim:
                    out.append(f"{name}: face {i} degeneracy does not match base {f.base!r}")
    for name in X.faces:
        if not X.has(name) or X.dim_of(name) == 0:
            out.append(f"{name}: face list for unknown or 0-dimensional simplex")
    if out:
        return out
    # simplicial identities: deleting vertices i < j in either order agrees
    for d in range(2, X.max_dim + 1):
        for name in X.nondegenerate(d):
            for i, j in combinations(range(1, d + 2), 2):
                a = face(X, X.faces[name][i - 1], j - 1)
                b = face(X, X.faces[name][j - 1], i)
                if a != b:
                    out.append(f"{name}: simplicial identity fails deleting vertices {i},{j}: {a} != {b}")
    return out


def load_sset(ref: str | Path) -> FinSSet:
    """``delta:N`` or a path to a simplicial-set JSON file."""
    ref = str(ref)
    if ref.startswith("delta:"):
        return std_simplex(int(ref.split(":", 1)[1]))
    with open(ref, encoding="utf-8") as fh:
        return FinSSet.from_json(json.load(fh))


def pinched_triangle() -> FinSSet:
    """One 2-simplex whose first and last vertices are identified."""
    v = lambda n: nondeg(n, 0)
    return FinSSet(
        {0: ["a", "b"], 1: ["ab", "ba", "aa"], 2: ["T"]},
        {
            "ab": [v("b"), v("a")],
            "ba": [v("a"), v("b")],
            "aa": [v("a"), v("a")],
            "T": [nondeg("ba", 1), nondeg("aa", 1), nondeg("ab", 1)],
        },
    )


def two_triangle_sphere() -> FinSSet:
    """Two 2-simplices glued along their whole boundary."""
    v = lambda n: nondeg(n, 0)
    e = lambda n: nondeg(n, 1)
    return FinSSet(
        {0: ["a", "b", "c"], 1: ["ab", "bc", "ac"], 2: ["upper", "lower"]},
        {
            "ab": [v("b"), v("a")],
            "bc": [v("c"), v("b")],
            "ac": [v("c"), v("a")],
            "upper": [e("bc"), e("ac"), e("ab")],
            "lower": [e("bc"), e("ac"), e("ab")],
        },
    )
