"""JSON encodings for graphs, divisors, sBL annotations, oracle specs and reports.

Rationals are written as ``"p/q"`` strings in lowest terms (``"p"`` when
q = 1).  Every dict is emitted with sorted keys so output is diff-stable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .basloc import SBLSet
from .dualgraph import DualGraph, ExceptionalCurve, ExternalDivisor, QDivisor, ValidationReport
from .errors import InputError
from .fibercone import FiberConeReport, PrimeClass
from .oracle.monomial import FiltrationSpecM, GammaBruteforce, MonomialValuation, Staircase
from .projmodel import GammaResult, ProjDescription
from .zariski import ZariskiDecomposition

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, bool):
        raise InputError(f"{text!r} is not a rational")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"rationals are encoded as 'p/q' strings, got {text!r}")
    m = _RATIONAL.match(text.strip())
    if not m:
        raise InputError(f"malformed rational {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise InputError(f"zero denominator in {text!r}")
    value = Fraction(p, q)
    if value.denominator != q:
        raise InputError(f"rational {text!r} is not in lowest terms")
    return value


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _field(d: dict, key: str, where: str):
    if not isinstance(d, dict) or key not in d:
        raise InputError(f"{where}: missing field {key!r}")
    return d[key]


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


# graphs ---------------------------------------------------------------------

def graph_from_json(data: dict) -> DualGraph:
    curves = []
    for k, c in enumerate(_field(data, "curves", "graph")):
        where = f"curves[{k}]"
        curves.append(
            ExceptionalCurve(
                id=_int(_field(c, "id", where), where),
                self_int=_int(_field(c, "self_int", where), where),
                p_a=_int(c.get("pa", 0), where),
                kappa_deg=_int(c.get("kappa_deg", 1), where),
            )
        )
    edges = []
    for k, e in enumerate(data.get("edges", [])):
        where = f"edges[{k}]"
        edges.append(
            (_int(_field(e, "i", where), where), _int(_field(e, "j", where), where), _int(e.get("mult", 1), where))
        )
    externals = []
    for k, x in enumerate(data.get("externals", [])):
        where = f"externals[{k}]"
        meets = _field(x, "meets", where)
        if not isinstance(meets, list):
            raise InputError(f"{where}: meets must be a list")
        externals.append(ExternalDivisor(str(_field(x, "id", where)), tuple(_int(m, where) for m in meets)))
    return DualGraph.from_edges(curves, edges, externals)


def graph_to_json(g: DualGraph) -> dict:
    edges = []
    for a in range(g.r):
        for b in range(a + 1, g.r):
            if g.matrix[a][b]:
                edges.append({"i": g.curves[a].id, "j": g.curves[b].id, "mult": g.matrix[a][b]})
    return {
        "curves": [{"id": c.id, "self_int": c.self_int, "pa": c.p_a, "kappa_deg": c.kappa_deg} for c in g.curves],
        "edges": edges,
        "externals": [{"id": x.id, "meets": list(x.meets)} for x in g.externals],
    }


def report_to_json(rep: ValidationReport) -> dict:
    return {
        "valid": rep.valid,
        "problems": list(rep.problems),
        "minors": [format_rational(d) for d in rep.minors],
        "first_failing_minor": rep.first_failing_minor,
    }


# divisors -------------------------------------------------------------------

def divisor_from_json(data: dict) -> QDivisor:
    if not isinstance(data, dict):
        raise InputError("a divisor is a JSON object with 'exc' and 'ext' maps")
    exc_raw = data.get("exc", {})
    ext_raw = data.get("ext", {})
    if not isinstance(exc_raw, dict) or not isinstance(ext_raw, dict):
        raise InputError("divisor 'exc' and 'ext' must be objects")
    exc = {}
    for k, v in exc_raw.items():
        try:
            key = int(k)
        except ValueError:
            raise InputError(f"divisor: curve key {k!r} is not an integer id") from None
        exc[key] = parse_rational(v)
    ext = {str(k): parse_rational(v) for k, v in ext_raw.items()}
    return QDivisor(exc, ext)


def divisor_to_json(d: QDivisor) -> dict:
    return {
        "exc": {str(k): format_rational(v) for k, v in d.exc.items()},
        "ext": {k: format_rational(v) for k, v in d.ext.items()},
    }


def zariski_to_json(z: ZariskiDecomposition) -> dict:
    return {
        "delta": divisor_to_json(z.Delta),
        "b": divisor_to_json(z.B),
        "trace": [sorted(s) for s in z.support_trace],
    }


# sBL ------------------------------------------------------------------------

def sbl_components_from_json(data: dict) -> list[list[int]]:
    body = data.get("sbl", data) if isinstance(data, dict) else None
    if not isinstance(body, dict):
        raise InputError("sBL file must be a JSON object {'sbl': {...}}")
    provider = body.get("provider", "explicit")
    if provider != "explicit":
        raise InputError(f"sBL files carry explicit annotations, got provider {provider!r}")
    comps = body.get("components", [])
    if not isinstance(comps, list) or not all(isinstance(c, list) for c in comps):
        raise InputError("sbl.components must be a list of lists of curve ids")
    return [[_int(x, "sbl.components") for x in c] for c in comps]


def sbl_to_json(s: SBLSet) -> dict:
    return {"sbl": {"provider": s.provider.value, "components": s.sorted_components()}}


# reports --------------------------------------------------------------------

def _prime_to_json(p: PrimeClass) -> dict:
    out = {"curve": p.curve, "dim": p.dim, "identity": p.identity.value}
    if p.component is not None:
        out["component"] = p.component
    return out


def fibercone_to_json(rep: FiberConeReport) -> dict:
    return {
        "spread": rep.spread,
        "primes": [_prime_to_json(p) for p in rep.primes],
        "radical": {
            "kind": rep.radical.kind.value,
            "curves": list(rep.radical.curves),
            "description": rep.radical.describe(),
        },
    }


def proj_to_json(p: ProjDescription) -> dict:
    return {
        "kept": sorted(p.kept),
        "contracted": [sorted(c) for c in p.contracted],
        "removed": [sorted(c) for c in p.removed],
        "noetherian": p.noetherian,
        "proper": p.proper,
        "spread": p.spread,
        "fiber_shape": p.fiber_shape.value,
    }


def gamma_to_json(r: GammaResult) -> dict:
    return {"value": format_rational(r.value), "attained": r.attained}


# oracle ---------------------------------------------------------------------

def spec_from_json(data: dict) -> FiltrationSpecM:
    terms = []
    for k, t in enumerate(_field(data, "terms", "spec")):
        where = f"terms[{k}]"
        v = MonomialValuation(_int(_field(t, "wx", where), where), _int(_field(t, "wy", where), where))
        terms.append((v, parse_rational(_field(t, "a", where))))
    return FiltrationSpecM(tuple(terms))


def spec_to_json(spec: FiltrationSpecM) -> dict:
    return {"terms": [{"wx": v.wx, "wy": v.wy, "a": format_rational(a)} for v, a in spec.terms]}


def staircase_to_json(s: Staircase) -> list[list[int]]:
    return [list(g) for g in s.gens]


def gamma_bruteforce_to_json(r: GammaBruteforce) -> dict:
    return {
        "value": format_rational(r.value),
        "attained_at": sorted(r.attained_at),
        "window": r.window,
    }
