"""Dual graph of a resolution and the exact intersection pairing on it."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .linalg import leading_principal_minors

Rational = int | Fraction


@dataclass(frozen=True)
class ExceptionalCurve:
    id: int
    self_int: int
    p_a: int = 0
    kappa_deg: int = 1

    def __post_init__(self):
        if self.self_int > -1:
            raise InputError(f"curve {self.id}: self-intersection {self.self_int} must be <= -1")
        if self.p_a < 0:
            raise InputError(f"curve {self.id}: arithmetic genus {self.p_a} must be >= 0")
        if self.kappa_deg < 1:
            raise InputError(f"curve {self.id}: kappa_deg {self.kappa_deg} must be >= 1")


@dataclass(frozen=True)
class ExternalDivisor:
    """A non-exceptional prime divisor, known only through its pairing with the curves."""

    id: str
    meets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "meets", tuple(int(m) for m in self.meets))
        if any(m < 0 for m in self.meets):
            raise InputError(f"external {self.id!r}: intersection numbers must be >= 0")


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = ()
    minors: tuple[Fraction, ...] = ()
    first_failing_minor: int | None = None

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class DualGraph:
    """Exceptional curves, their intersection matrix and the external divisors.

    ``matrix[i][j]`` is indexed by position in ``curves``; curve ids are
    translated with :meth:`index`.  Construction only checks shapes; the
    geometric hypotheses (symmetry, negative definiteness, connectivity)
    are reported by :func:`validate_graph`.
    """

    curves: tuple[ExceptionalCurve, ...]
    matrix: tuple[tuple[int, ...], ...]
    externals: tuple[ExternalDivisor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        object.__setattr__(self, "externals", tuple(self.externals))
        r = len(self.curves)
        if r == 0:
            raise InputError("a dual graph needs at least one exceptional curve")
        ids = [c.id for c in self.curves]
        if len(set(ids)) != r:
            raise InputError(f"duplicate curve ids in {ids}")
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise InputError(f"intersection matrix must be {r}x{r}")
        for k, c in enumerate(self.curves):
            if self.matrix[k][k] != c.self_int:
                raise InputError(
                    f"matrix diagonal {self.matrix[k][k]} disagrees with self_int of curve {c.id}"
                )
        ext_ids = [x.id for x in self.externals]
        if len(set(ext_ids)) != len(ext_ids):
            raise InputError(f"duplicate external ids in {ext_ids}")
        for x in self.externals:
            if len(x.meets) != r:
                raise InputError(f"external {x.id!r}: meets vector must have length {r}")

    @classmethod
    def from_edges(
        cls,
        curves: Sequence[ExceptionalCurve],
        edges: Iterable[tuple[int, int, int]] = (),
        externals: Sequence[ExternalDivisor] = (),
    ) -> "DualGraph":
        """Build the matrix from ``(id_i, id_j, mult)`` triples; repeated edges add up."""
        pos = {c.id: k for k, c in enumerate(curves)}
        m = [[0] * len(curves) for _ in curves]
        for k, c in enumerate(curves):
            m[k][k] = c.self_int
        for i, j, mult in edges:
            if i not in pos or j not in pos:
                raise InputError(f"edge ({i}, {j}) references an unknown curve")
            if i == j:
                raise InputError(f"edge ({i}, {j}) is a loop; self-intersections go in self_int")
            if mult < 0:
                raise InputError(f"edge ({i}, {j}) has negative multiplicity")
            a, b = pos[i], pos[j]
            m[a][b] += mult
            m[b][a] += mult
        return cls(tuple(curves), tuple(map(tuple, m)), tuple(externals))

    @property
    def r(self) -> int:
        return len(self.curves)

    @property
    def curve_ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.curves)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {c.id: k for k, c in enumerate(self.curves)}

    @cached_property
    def _ext(self) -> dict[str, ExternalDivisor]:
        return {x.id: x for x in self.externals}

    def index(self, curve_id: int) -> int:
        try:
            return self._pos[curve_id]
        except KeyError:
            raise InputError(f"unknown curve id {curve_id!r}") from None

    def curve(self, curve_id: int) -> ExceptionalCurve:
        return self.curves[self.index(curve_id)]

    def external(self, ext_id: str) -> ExternalDivisor:
        try:
            return self._ext[ext_id]
        except KeyError:
            raise InputError(f"unknown external divisor {ext_id!r}") from None

    def pairing(self, a: int, b: int) -> int:
        """(E_a . E_b) for curve ids a, b."""
        return self.matrix[self.index(a)][self.index(b)]

    def neighbors(self, curve_id: int) -> list[int]:
        k = self.index(curve_id)
        return [c.id for j, c in enumerate(self.curves) if j != k and self.matrix[k][j] > 0]

    def adjacent(self, a: int, b: int) -> bool:
        return a != b and self.pairing(a, b) > 0

    def components(self, subset: Iterable[int] | None = None) -> list[frozenset[int]]:
        """Connected components of the subgraph induced on ``subset``.

        Components are ordered by their smallest curve position.
        """
        if subset is None:
            nodes = list(self.curve_ids)
        else:
            wanted = set(subset)
            nodes = [c for c in self.curve_ids if c in wanted]
        todo = set(nodes)
        out = []
        for start in nodes:
            if start not in todo:
                continue
            comp = {start}
            todo.discard(start)
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if w in todo:
                        todo.discard(w)
                        comp.add(w)
                        stack.append(w)
            out.append(frozenset(comp))
        return out

    @cached_property
    def report(self) -> ValidationReport:
        return validate_graph(self)


def _to_fraction(value: Rational | str, what: str) -> Fraction:
    try:
        q = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"{what}: {value!r} is not a rational number") from None
    if q < 0:
        raise InputError(f"{what}: coefficient {q} is negative; divisors must be effective")
    return q


@dataclass(frozen=True)
class QDivisor:
    """Effective Q-divisor: exceptional part keyed by curve id, external part by external id.

    Zero coefficients are dropped, so equality is structural.
    """

    exc: Mapping[int, Fraction] = field(default_factory=dict)
    ext: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        exc = {int(k): _to_fraction(v, f"curve {k}") for k, v in self.exc.items()}
        ext = {str(k): _to_fraction(v, f"external {k}") for k, v in self.ext.items()}
        object.__setattr__(self, "exc", {k: exc[k] for k in sorted(exc) if exc[k]})
        object.__setattr__(self, "ext", {k: ext[k] for k in sorted(ext) if ext[k]})

    def __hash__(self):
        return hash((tuple(self.exc.items()), tuple(self.ext.items())))

    def __add__(self, other: "QDivisor") -> "QDivisor":
        if not isinstance(other, QDivisor):
            return NotImplemented
        exc = dict(self.exc)
        for k, v in other.exc.items():
            exc[k] = exc.get(k, 0) + v
        ext = dict(self.ext)
        for k, v in other.ext.items():
            ext[k] = ext.get(k, 0) + v
        return QDivisor(exc, ext)

    def scale(self, c: Rational) -> "QDivisor":
        c = Fraction(c)
        return QDivisor({k: c * v for k, v in self.exc.items()}, {k: c * v for k, v in self.ext.items()})

    def __rmul__(self, c: Rational) -> "QDivisor":
        return self.scale(c)

    def coefficient(self, curve_id: int) -> Fraction:
        return self.exc.get(curve_id, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.exc and not self.ext

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in (*self.exc.values(), *self.ext.values()))

    def __str__(self) -> str:
        terms = [f"{v}*E{k}" for k, v in self.exc.items()] + [f"{v}*{k}" for k, v in self.ext.items()]
        return " + ".join(terms) if terms else "0"


def validate_graph(g: DualGraph) -> ValidationReport:
    """Report every violated hypothesis on the intersection matrix; never raises."""
    m = g.matrix
    r = g.r
    problems = []
    for i in range(r):
        for j in range(i + 1, r):
            if m[i][j] != m[j][i]:
                problems.append(
                    f"matrix not symmetric at curves ({g.curves[i].id}, {g.curves[j].id}):"
                    f" {m[i][j]} != {m[j][i]}"
                )
            if m[i][j] < 0 or m[j][i] < 0:
                problems.append(
                    f"negative intersection number between curves {g.curves[i].id} and {g.curves[j].id}"
                )
    minors = tuple(leading_principal_minors(m))
    first_bad = None
    for k, d in enumerate(minors, start=1):
        # negative definite <=> sign(minor_k) = (-1)^k
        if d == 0 or (d > 0) != (k % 2 == 0):
            first_bad = k
            problems.append(
                f"not negative definite: leading principal minor of order {k} is {d},"
                f" expected sign {'+' if k % 2 == 0 else '-'}"
            )
            break
    comps = g.components()
    if len(comps) > 1:
        problems.append(f"dual graph is disconnected: {len(comps)} components")
    return ValidationReport(tuple(problems), minors, first_bad)


def intersect(g: DualGraph, d: QDivisor, curve_id: int) -> Fraction:
    """(D . E) for an exceptional curve E."""
    col = g.index(curve_id)
    total = Fraction(0)
    for k, v in d.exc.items():
        total += v * g.matrix[g.index(k)][col]
    for k, v in d.ext.items():
        total += v * g.external(k).meets[col]
    return total


def pairings(g: DualGraph, d: QDivisor) -> dict[int, Fraction]:
    return {c: intersect(g, d, c) for c in g.curve_ids}


def is_antinef(g: DualGraph, d: QDivisor) -> bool:
    """True iff (D . E) <= 0 for every exceptional curve, i.e. -D is nef."""
    return all(v <= 0 for v in pairings(g, d).values())


def round_up(d: QDivisor) -> QDivisor:
    return QDivisor(
        {k: math.ceil(v) for k, v in d.exc.items()},
        {k: math.ceil(v) for k, v in d.ext.items()},
    )
