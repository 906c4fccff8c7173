"""Exact arithmetic for homogeneous polynomials in several real variables.

Representation
--------------
A homogeneous polynomial of degree m on R^d is stored sparsely as a dict
mapping multi-indices (length-d tuples of non-negative ints summing to m) to
coefficients.  Coefficients are `fractions.Fraction` under the "rational"
field tag and `float` under "f64"; the tag travels with every object and
mixed-field operations are rejected.  Zero coefficients are dropped on
construction, so equality of the dicts is equality of polynomials.

The canonical basis order everywhere is descending lexicographic on the
exponent tuples — e.g. for d=2, m=2: (2,0), (1,1), (0,2) — and the
coefficient-vector helpers read and write that order.

A polynomial map R^d -> R^e is a tuple of e scalar polynomials sharing
domain dimension, degree and field.  A symmetric m-linear form is stored by
its entries on sorted index tuples i_1 <= ... <= i_m; `polarize` produces the
unique symmetric form whose diagonal restriction recovers the polynomial.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeError, DimensionError, FieldError

RATIONAL = "rational"
F64 = "f64"
FIELDS = (RATIONAL, F64)

MultiIndex = tuple[int, ...]
Scalar = Fraction | float


def _coerce(value, field: str) -> Scalar:
    if field == RATIONAL:
        if isinstance(value, float):
            raise FieldError("float coefficient given for the rational field")
        return Fraction(value)
    if field == F64:
        return float(value)
    raise FieldError(f"unknown field {field!r}")


def _check_field(field: str) -> None:
    if field not in FIELDS:
        raise FieldError(f"unknown field {field!r}")


def infer_field(values: Iterable) -> str:
    """'f64' if any value is a float, else 'rational'."""
    return F64 if any(isinstance(v, float) for v in values) else RATIONAL


def enumerate_multi_indices(d: int, m: int) -> list[MultiIndex]:
    """All length-d multi-indices of total degree m, descending lex order.

    The count is C(d+m-1, m).  d must be >= 1; m >= 0 is allowed (m=0 yields
    the single all-zero index).
    """
    if d < 1:
        raise DimensionError(f"need at least one variable, got d={d}")
    if m < 0:
        raise DegreeError(f"degree must be non-negative, got {m}")
    if d == 1:
        return [(m,)]
    out: list[MultiIndex] = []
    for first in range(m, -1, -1):
        for rest in enumerate_multi_indices(d - 1, m - first):
            out.append((first,) + rest)
    return out


def multinomial(m: int, alpha: MultiIndex) -> int:
    """m! / (alpha_1! ... alpha_d!); requires |alpha| == m."""
    if sum(alpha) != m:
        raise DegreeError(f"multi-index {alpha} does not have degree {m}")
    out = math.factorial(m)
    for a in alpha:
        out //= math.factorial(a)
    return out


def _eval_monomial(alpha: MultiIndex, x: Sequence):
    v = 1
    for xi, a in zip(x, alpha):
        if a:
            v = v * xi ** a
    return v


@dataclass(frozen=True)
class HomPoly:
    """Homogeneous polynomial of fixed degree on R^domain_dim."""

    domain_dim: int
    degree: int
    coeffs: dict[MultiIndex, Scalar]
    field: str = RATIONAL

    def __post_init__(self):
        _check_field(self.field)
        if self.domain_dim < 1:
            raise DimensionError(f"domain_dim must be >= 1, got {self.domain_dim}")
        if self.degree < 1:
            raise DegreeError(f"degree must be >= 1, got {self.degree}")
        clean: dict[MultiIndex, Scalar] = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(alpha)
            if len(alpha) != self.domain_dim or any(a < 0 for a in alpha):
                raise DimensionError(f"bad multi-index {alpha} for d={self.domain_dim}")
            if sum(alpha) != self.degree:
                raise DegreeError(f"multi-index {alpha} has degree != {self.degree}")
            c = _coerce(c, self.field)
            if c != 0:
                clean[alpha] = c
        object.__setattr__(self, "coeffs", clean)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, d: int, m: int, field: str = RATIONAL) -> HomPoly:
        return cls(d, m, {}, field)

    @classmethod
    def monomial(cls, d: int, alpha: MultiIndex, coeff=1, field: str = RATIONAL) -> HomPoly:
        return cls(d, sum(alpha), {tuple(alpha): coeff}, field)

    @classmethod
    def linear_form(cls, coeffs: Sequence, field: str = RATIONAL) -> HomPoly:
        """The functional x |-> sum coeffs[i] * x_i."""
        d = len(coeffs)
        data = {}
        for i, c in enumerate(coeffs):
            alpha = tuple(1 if j == i else 0 for j in range(d))
            data[alpha] = c
        return cls(d, 1, data, field)

    @classmethod
    def from_coeff_vector(cls, d: int, m: int, values: Sequence, field: str = RATIONAL) -> HomPoly:
        basis = enumerate_multi_indices(d, m)
        if len(values) != len(basis):
            raise DimensionError(
                f"expected {len(basis)} coefficients for d={d}, m={m}, got {len(values)}"
            )
        return cls(d, m, dict(zip(basis, values)), field)

    # -- queries ------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, alpha: MultiIndex) -> Scalar:
        return self.coeffs.get(tuple(alpha), _coerce(0, self.field))

    def coeff_vector(self) -> list[Scalar]:
        """Coefficients in canonical (descending lex) basis order."""
        zero = _coerce(0, self.field)
        return [self.coeffs.get(a, zero) for a in enumerate_multi_indices(self.domain_dim, self.degree)]

    def eval(self, x: Sequence) -> Scalar:
        if len(x) != self.domain_dim:
            raise DimensionError(f"point has length {len(x)}, expected {self.domain_dim}")
        total = _coerce(0, self.field)
        for alpha, c in self.coeffs.items():
            total += c * _eval_monomial(alpha, x)
        return total

    # -- arithmetic ---------------------------------------------------
    def _require_same_shape(self, other: HomPoly) -> None:
        if self.domain_dim != other.domain_dim:
            raise DimensionError("polynomials live on different spaces")
        if self.field != other.field:
            raise FieldError("mixed-field polynomial arithmetic")

    def __add__(self, other: HomPoly) -> HomPoly:
        self._require_same_shape(other)
        if self.degree != other.degree:
            raise DegreeError("cannot add homogeneous polynomials of different degrees")
        data = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            data[alpha] = data.get(alpha, 0) + c
        return HomPoly(self.domain_dim, self.degree, data, self.field)

    def __neg__(self) -> HomPoly:
        return self.scale(-1)

    def __sub__(self, other: HomPoly) -> HomPoly:
        return self + (-other)

    def scale(self, c) -> HomPoly:
        c = _coerce(c, self.field)
        return HomPoly(self.domain_dim, self.degree,
                       {a: c * v for a, v in self.coeffs.items()}, self.field)

    def __mul__(self, other: HomPoly) -> HomPoly:
        """Pointwise product; degrees add."""
        self._require_same_shape(other)
        data: dict[MultiIndex, Scalar] = {}
        for a1, c1 in self.coeffs.items():
            for a2, c2 in other.coeffs.items():
                a = tuple(i + j for i, j in zip(a1, a2))
                data[a] = data.get(a, 0) + c1 * c2
        return HomPoly(self.domain_dim, self.degree + other.degree, data, self.field)

    def __pow__(self, n: int) -> HomPoly:
        if n < 1:
            raise DegreeError(f"power requires n >= 1, got {n}")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def as_field(self, field: str) -> HomPoly:
        _check_field(field)
        if field == self.field:
            return self
        if field == F64:
            return HomPoly(self.domain_dim, self.degree,
                           {a: float(c) for a, c in self.coeffs.items()}, F64)
        return HomPoly(self.domain_dim, self.degree,
                       {a: Fraction(c).limit_denominator(10 ** 12)
                        for a, c in self.coeffs.items()}, RATIONAL)


@dataclass(frozen=True)
class PolyMap:
    """Homogeneous polynomial map R^d -> R^e: a tuple of e scalar components."""

    components: tuple[HomPoly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise DimensionError("a polynomial map needs at least one component")
        d, m, f = comps[0].domain_dim, comps[0].degree, comps[0].field
        for c in comps:
            if (c.domain_dim, c.degree, c.field) != (d, m, f):
                raise DimensionError("components disagree in domain, degree or field")
        object.__setattr__(self, "components", comps)

    @property
    def domain_dim(self) -> int:
        return self.components[0].domain_dim

    @property
    def codomain_dim(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return self.components[0].degree

    @property
    def field(self) -> str:
        return self.components[0].field

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    @classmethod
    def zero(cls, d: int, e: int, m: int, field: str = RATIONAL) -> PolyMap:
        return cls(tuple(HomPoly.zero(d, m, field) for _ in range(e)))

    @classmethod
    def identity(cls, d: int, field: str = RATIONAL) -> PolyMap:
        return cls(tuple(
            HomPoly.monomial(d, tuple(1 if j == i else 0 for j in range(d)), 1, field)
            for i in range(d)))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], field: str = RATIONAL) -> PolyMap:
        """Linear map with the given e x d coefficient matrix."""
        return cls(tuple(HomPoly.linear_form(r, field) for r in rows))

    def eval_map(self, x: Sequence) -> tuple[Scalar, ...]:
        return tuple(c.eval(x) for c in self.components)

    def __add__(self, other: PolyMap) -> PolyMap:
        if self.codomain_dim != other.codomain_dim:
            raise DimensionError("maps have different codomains")
        return PolyMap(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: PolyMap) -> PolyMap:
        if self.codomain_dim != other.codomain_dim:
            raise DimensionError("maps have different codomains")
        return PolyMap(tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, c) -> PolyMap:
        return PolyMap(tuple(p.scale(c) for p in self.components))

    def as_field(self, field: str) -> PolyMap:
        return PolyMap(tuple(c.as_field(field) for c in self.components))


def compose_scalar(q: HomPoly, P: PolyMap) -> HomPoly:
    """q o P: substitute the components of P into q.  Degree multiplies."""
    if q.domain_dim != P.codomain_dim:
        raise DimensionError(
            f"q has {q.domain_dim} variables but P has codomain dimension {P.codomain_dim}")
    if q.field != P.field:
        raise FieldError("mixed-field composition")
    d, m = P.domain_dim, P.degree
    out = HomPoly.zero(d, m * q.degree, q.field)
    # cache powers of the components: powers[i][a] = P_i ** a
    powers: list[dict[int, HomPoly]] = [dict() for _ in range(P.codomain_dim)]

    def comp_power(i: int, a: int) -> HomPoly:
        if a not in powers[i]:
            powers[i][a] = P.components[i] ** a
        return powers[i][a]

    for alpha, c in q.coeffs.items():
        term: HomPoly | None = None
        for i, a in enumerate(alpha):
            if a == 0:
                continue
            f = comp_power(i, a)
            term = f if term is None else term * f
        if term is None:  # cannot happen: |alpha| = q.degree >= 1
            continue
        out = out + term.scale(c)
    return out


def compose_map(Q: PolyMap, P: PolyMap) -> PolyMap:
    """Q o P for polynomial maps; degrees multiply."""
    return PolyMap(tuple(compose_scalar(c, P) for c in Q.components))


@dataclass(frozen=True)
class SymForm:
    """Symmetric multilinear form, entries keyed by sorted index tuples."""

    domain_dim: int
    arity: int
    entries: dict[tuple[int, ...], Scalar]
    field: str = RATIONAL

    def __post_init__(self):
        _check_field(self.field)
        clean = {}
        for t, v in self.entries.items():
            t = tuple(t)
            if len(t) != self.arity or any(not (0 <= i < self.domain_dim) for i in t):
                raise DimensionError(f"bad index tuple {t}")
            if tuple(sorted(t)) != t:
                raise DimensionError(f"index tuple {t} is not sorted")
            v = _coerce(v, self.field)
            if v != 0:
                clean[t] = v
        object.__setattr__(self, "entries", clean)

    def apply(self, args: Sequence[Sequence]) -> Scalar:
        """Evaluate on arity-many vectors."""
        if len(args) != self.arity:
            raise DimensionError(f"expected {self.arity} vectors, got {len(args)}")
        for v in args:
            if len(v) != self.domain_dim:
                raise DimensionError("argument vector has wrong length")
        total = _coerce(0, self.field)
        for t, val in self.entries.items():
            s = _coerce(0, self.field)
            for order in sorted(set(itertools.permutations(t))):
                prod = 1
                for j, idx in enumerate(order):
                    prod = prod * args[j][idx]
                s += prod
            total += val * s
        return total


def polarize(p: HomPoly) -> SymForm:
    """The symmetric m-linear form whose diagonal is p.

    Entry at the sorted tuple of a monomial's variable indices is the
    coefficient divided by the multinomial weight, so that restricting the
    form to the diagonal recovers p exactly.
    """
    entries: dict[tuple[int, ...], Scalar] = {}
    for alpha, c in p.coeffs.items():
        t = tuple(i for i, a in enumerate(alpha) for _ in range(a))
        w = multinomial(p.degree, alpha)
        entries[t] = c / w if p.field == RATIONAL else c / float(w)
    return SymForm(p.domain_dim, p.degree, entries, p.field)


def additivity_defect(R: PolyMap) -> PolyMap:
    """W(x, y) = R(x+y) - R(x) - R(y), exactly, on 2d variables.

    Zero as a polynomial iff R is linear (degree 1); for degree m the
    defect collects all mixed terms of the expansion of R(x+y).
    """
    d = R.domain_dim
    f = R.field
    # linear substitution maps on 2d variables: (x, y) |-> x+y, x, y
    def var(i: int) -> HomPoly:
        return HomPoly.monomial(2 * d, tuple(1 if j == i else 0 for j in range(2 * d)), 1, f)

    sum_map = PolyMap(tuple(var(i) + var(d + i) for i in range(d)))
    first = PolyMap(tuple(var(i) for i in range(d)))
    second = PolyMap(tuple(var(d + i) for i in range(d)))
    return compose_map(R, sum_map) - compose_map(R, first) - compose_map(R, second)
