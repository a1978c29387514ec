"""The simplex category: finite nonempty linear orders ``1 < 2 < ... < n`` and
monotone maps between them.

Everything is 1-indexed.  A map ``m -> n`` is stored as its value tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence


@dataclass(frozen=True)
class MonotoneMap:
    values: tuple[int, ...]
    cod: int

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("domain must be nonempty")
        if self.cod < 1:
            raise ValueError("codomain must be nonempty")
        prev = 1
        for v in vals:
            if v < prev or v > self.cod:
                raise ValueError(f"not a monotone map into {self.cod}: {vals}")
            prev = v

    @property
    def dom(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.dom

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.values == tuple(range(1, self.cod + 1))

    def to_json(self) -> dict:
        return {"cod": self.cod, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "MonotoneMap":
        return cls(tuple(data["values"]), int(data["cod"]))

    def __repr__(self) -> str:
        return f"[{','.join(map(str, self.values))}]:{self.dom}->{self.cod}"


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(tuple(range(1, n + 1)), n)


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g ∘ f``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise ValueError(f"non-composable: {g!r} after {f!r}")
    return MonotoneMap(tuple(g.values[v - 1] for v in f.values), g.cod)


def epi_mono_factorize(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Unique factorization ``f = mono ∘ epi`` with ``epi`` surjective and
    ``mono`` strictly increasing."""
    img = f.image()
    rank = {v: i for i, v in enumerate(img, start=1)}
    epi = MonotoneMap(tuple(rank[v] for v in f.values), len(img))
    mono = MonotoneMap(img, f.cod)
    return epi, mono


def face_operator(indices: Sequence[int], l: int) -> MonotoneMap:
    """``[i_1 <= ... <= i_k]`` as a map ``k -> l``."""
    idx = tuple(indices)
    if any(i < 1 or i > l for i in idx):
        raise ValueError(f"index out of range 1..{l}: {idx}")
    return MonotoneMap(idx, l)


def interval(i: int, j: int, l: int) -> MonotoneMap:
    """``[i..j]`` shorthand."""
    return face_operator(range(i, j + 1), l)


def coface(i: int, n: int) -> MonotoneMap:
    """Injection ``n-1 -> n`` missing ``i``; pulling back along it deletes
    vertex ``i``."""
    return MonotoneMap(tuple(v for v in range(1, n + 1) if v != i), n)


def codegeneracy(j: int, n: int) -> MonotoneMap:
    """Surjection ``n -> n-1`` identifying ``j`` and ``j+1``."""
    if not 1 <= j < n:
        raise ValueError("codegeneracy index out of range")
    return MonotoneMap(tuple(v if v <= j else v - 1 for v in range(1, n + 1)), n - 1)


def edgewise_map(f: MonotoneMap) -> MonotoneMap:
    # f reversed, then f, shifted into the upper half
    m, n = f.dom, f.cod
    left = tuple(n + 1 - f(m + 1 - i) for i in range(1, m + 1))
    right = tuple(n + f(i) for i in range(1, m + 1))
    return MonotoneMap(left + right, 2 * n)


def shift_map(f: MonotoneMap) -> MonotoneMap:
    """``f[+1]``: adjoin a new minimum sent to the new minimum."""
    return MonotoneMap((1,) + tuple(v + 1 for v in f.values), f.cod + 1)


def monotone_maps(m: int, n: int) -> Iterator[MonotoneMap]:
    for vals in combinations_with_replacement(range(1, n + 1), m):
        yield MonotoneMap(vals, n)


def surjections(m: int, n: int) -> Iterator[MonotoneMap]:
    """All monotone surjections ``m -> n`` (choose where the value steps up)."""
    if n > m:
        return
    for steps in combinations(range(1, m), n - 1):
        vals, v, cut = [], 1, set(steps)
        for i in range(1, m + 1):
            vals.append(v)
            if i in cut:
                v += 1
        yield MonotoneMap(tuple(vals), n)


def injections(m: int, n: int) -> Iterator[MonotoneMap]:
    for vals in combinations(range(1, n + 1), m):
        yield MonotoneMap(vals, n)
