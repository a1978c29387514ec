"""JSON formats.

Rationals are always the string ``"p/q"``; floats are rejected on input so
no value silently loses exactness.

A simplicial set is referenced by ``"delta:N"``, ``{"product": [a, b]}``,
``{"edgewise": a}`` or an inline presentation ``{"simplices", "faces"}``.

=========  ==============================================
point      ``{"sset", "F": [q...], "x": {"base", "surj"}}``
step       ``{"N", "s": [q...]}``
homeo      ``{"knots": [[q, q], ...]}``
path       ``{"N", "chains": [[q...], ...]}``
map        ``{"source", "target", "images": {name: simplex}}``
=========  ==============================================
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .realization import PathSimplex, PLHomeo, RealizationPoint, StepFunction
from .sset import (
    EdgewiseSSet,
    FinSSet,
    ProductSSet,
    SimplexInstance,
    SimplicialMap,
    load_sset,
    precompose_edgewise,
    product,
    std_simplex,
)


def q_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def q_parse(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise ValueError(f"rationals must be given as 'p/q' strings, got {s!r}")
    try:
        return Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {s!r}") from None


def q_list(text: str) -> list[Fraction]:
    """Comma-separated rationals, as used on the command line."""
    return [q_parse(t.strip()) for t in text.split(",") if t.strip()]


# -- simplicial sets ---------------------------------------------------------

def sset_ref(X: FinSSet) -> Any:
    if X.is_standard:
        return f"delta:{X.kind[1]}"
    if isinstance(X, ProductSSet):
        return {"product": [sset_ref(F) for F in X.factors]}
    if isinstance(X, EdgewiseSSet):
        return {"edgewise": sset_ref(X.inner)}
    return X.to_json()


def sset_from(ref: Any, base: Path | None = None) -> FinSSet:
    if isinstance(ref, str):
        if ref.startswith("delta:"):
            return load_sset(ref)
        path = Path(ref) if base is None or Path(ref).is_absolute() else base / ref
        return load_sset(path)
    if isinstance(ref, dict):
        if "product" in ref:
            a, b = ref["product"]
            return product(sset_from(a, base), sset_from(b, base))
        if "edgewise" in ref:
            return precompose_edgewise(sset_from(ref["edgewise"], base))
        if "simplices" in ref:
            return FinSSet.from_json(ref)
    raise ValueError(f"not a simplicial-set reference: {ref!r}")


def load_sset_arg(ref: str) -> FinSSet:
    """Command-line form: ``delta:N`` or a JSON file holding any reference."""
    if ref.startswith("delta:"):
        n = ref.split(":", 1)[1]
        if not n.isdigit() or int(n) < 1:
            raise ValueError(f"bad standard simplex {ref!r}")
        return std_simplex(int(n))
    path = Path(ref)
    return sset_from(read_json(path), path.parent)


# -- values -----------------------------------------------------------------

def point_to_json(p: RealizationPoint) -> dict:
    return {"sset": sset_ref(p.sset), "F": [q_str(s) for s in p.F], "x": p.x.to_json()}


def point_from_json(data: dict, base: Path | None = None) -> RealizationPoint:
    X = sset_from(data["sset"], base)
    return RealizationPoint(X, tuple(q_parse(s) for s in data["F"]), SimplexInstance.from_json(data["x"]))


def step_to_json(f: StepFunction) -> dict:
    return {"N": f.N, "s": [q_str(s) for s in f.s]}


def step_from_json(data: dict) -> StepFunction:
    return StepFunction(int(data["N"]), tuple(q_parse(s) for s in data["s"]))


def homeo_to_json(phi: PLHomeo) -> dict:
    return {"knots": [[q_str(a), q_str(b)] for a, b in phi.knots]}


def homeo_from_json(data: dict) -> PLHomeo:
    return PLHomeo(tuple((q_parse(a), q_parse(b)) for a, b in data["knots"]))


def path_to_json(P: PathSimplex) -> dict:
    return {"N": P.N, "chains": [[q_str(s) for s in f.s] for f in P.chains]}


def path_from_json(data: dict) -> PathSimplex:
    N = int(data["N"])
    return PathSimplex(tuple(StepFunction(N, tuple(q_parse(s) for s in c)) for c in data["chains"]))


def map_to_json(phi: SimplicialMap) -> dict:
    return {"source": sset_ref(phi.source), "target": sset_ref(phi.target), "images": phi.to_json()}


def map_from_json(data: dict, base: Path | None = None) -> SimplicialMap:
    images = {k: SimplexInstance.from_json(v) for k, v in data["images"].items()}
    return SimplicialMap(sset_from(data["source"], base), sset_from(data["target"], base), images)


# -- files -------------------------------------------------------------------

def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh, parse_float=_reject_float)


def _reject_float(text: str):
    raise ValueError(f"floating-point literal {text} in input; write rationals as 'p/q'")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)
