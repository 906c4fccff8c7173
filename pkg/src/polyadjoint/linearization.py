"""Symmetric tensor powers and the matrix view of the linear-case adjoint.

The k-th symmetric tensor power of R^d is coordinatized by the monomial
basis: the tensor power of a vector x has coordinate x^alpha at the
multi-index alpha, so pairing a degree-k polynomial's coefficient vector
with those coordinates by a plain dot product evaluates the polynomial.
Under this convention the relabeling maps between a polynomial space and
its tensor-power model are identity matrices; they are still kept explicit
in the checker API so a different convention could be plugged in.

Degree counting for the two matrices built here, with P of degree m from
R^d to R^e and k >= 1:

* ``linearization_matrix(P, k)`` is the matrix L with
  L . (coords of the mk-th tensor power of x) = coords of the k-th tensor
  power of P(x) — the linearization of the composed-power map.
* ``adjoint_matrix(P, k)`` sends the coefficient vector of a degree-k
  polynomial q on R^e to the coefficient vector of q o P on R^d.

The transpose identity checked by ``transpose_identity_defect`` says these
two matrices are transposes of each other up to the explicit relabelings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    RATIONAL,
    HomPoly,
    MultiIndex,
    PolyMap,
    Scalar,
    compose_scalar,
    enumerate_multi_indices,
    infer_field,
)
from .errors import CapacityError, DimensionError, FieldError, SingularMatrixError

DEFAULT_SIZE_CAP = 3003  # C(14, 6); largest coefficient space materialized by default


def check_capacity(what: str, dim: int, cap: int = DEFAULT_SIZE_CAP) -> None:
    if dim > cap:
        raise CapacityError(what, dim, cap)


@dataclass(frozen=True)
class SymTensor:
    """Element of the order-k symmetric power of R^d in monomial coordinates."""

    base_dim: int
    order: int
    coords: dict[MultiIndex, Scalar]
    field: str = RATIONAL

    def coord_vector(self) -> list[Scalar]:
        zero = Fraction(0) if self.field == RATIONAL else 0.0
        return [self.coords.get(a, zero)
                for a in enumerate_multi_indices(self.base_dim, self.order)]


def tensor_power(x: Sequence, k: int, field: str | None = None) -> SymTensor:
    """Coordinates of the k-th tensor power of x: x^alpha at each alpha."""
    if k < 1:
        raise DimensionError(f"tensor order must be >= 1, got {k}")
    d = len(x)
    if field is None:
        field = infer_field(x)
    coords = {}
    for alpha in enumerate_multi_indices(d, k):
        v = 1
        for xi, a in zip(x, alpha):
            if a:
                v = v * xi ** a
        coords[alpha] = v if field == RATIONAL else float(v)
    return SymTensor(d, k, coords, field)


@dataclass(frozen=True)
class LinearMap:
    """Dense matrix with optional multi-index labels on rows and columns."""

    entries: tuple[tuple[Scalar, ...], ...]
    row_labels: tuple[MultiIndex, ...] | None = None
    col_labels: tuple[MultiIndex, ...] | None = None
    field: str = RATIONAL

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        ncol = len(rows[0])
        if any(len(r) != ncol for r in rows):
            raise DimensionError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        if self.row_labels is not None and len(self.row_labels) != len(rows):
            raise DimensionError("row label count mismatch")
        if self.col_labels is not None and len(self.col_labels) != ncol:
            raise DimensionError("column label count mismatch")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def max_abs(self) -> Scalar:
        return max(abs(v) for r in self.entries for v in r)

    @classmethod
    def identity(cls, n: int, labels: tuple[MultiIndex, ...] | None = None,
                 field: str = RATIONAL) -> LinearMap:
        one = Fraction(1) if field == RATIONAL else 1.0
        zero = Fraction(0) if field == RATIONAL else 0.0
        ent = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        return cls(ent, labels, labels, field)

    def transpose(self) -> LinearMap:
        ent = tuple(tuple(self.entries[i][j] for i in range(self.rows))
                    for j in range(self.cols))
        return LinearMap(ent, self.col_labels, self.row_labels, self.field)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.field != other.field:
            raise FieldError("mixed-field matrix product")
        ent = tuple(
            tuple(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                  for j in range(other.cols))
            for i in range(self.rows))
        return LinearMap(ent, self.row_labels, other.col_labels, self.field)

    def __sub__(self, other: LinearMap) -> LinearMap:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix shapes differ")
        ent = tuple(tuple(a - b for a, b in zip(ra, rb))
                    for ra, rb in zip(self.entries, other.entries))
        return LinearMap(ent, self.row_labels, self.col_labels, self.field)

    def apply(self, vec: Sequence) -> list[Scalar]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector length {len(vec)} != {self.cols} columns")
        return [sum(r[j] * vec[j] for j in range(self.cols)) for r in self.entries]

    # -- exact elimination (rational field) ----------------------------
    def _require_rational(self) -> None:
        if self.field != RATIONAL:
            raise FieldError("exact elimination needs the rational field")

    def rank(self) -> int:
        self._require_rational()
        a = [list(r) for r in self.entries]
        rank = 0
        row = 0
        for col in range(self.cols):
            pivot = next((r for r in range(row, self.rows) if a[r][col] != 0), None)
            if pivot is None:
                continue
            a[row], a[pivot] = a[pivot], a[row]
            pv = a[row][col]
            a[row] = [v / pv for v in a[row]]
            for r in range(self.rows):
                if r != row and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[row])]
            row += 1
            rank += 1
            if row == self.rows:
                break
        return rank

    def inverse(self) -> LinearMap:
        self._require_rational()
        if self.rows != self.cols:
            raise DimensionError("only square matrices can be inverted")
        n = self.rows
        a = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i, r in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            pv = a[col][col]
            a[col] = [v / pv for v in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[col])]
        ent = tuple(tuple(a[i][n:]) for i in range(n))
        return LinearMap(ent, self.col_labels, self.row_labels, RATIONAL)


def linearize(q: HomPoly) -> LinearMap:
    """Covector pairing tensor-power coordinates to the value of q."""
    return LinearMap((tuple(q.coeff_vector()),),
                     row_labels=((),),
                     col_labels=tuple(enumerate_multi_indices(q.domain_dim, q.degree)),
                     field=q.field)


def relabeling_map(d: int, k: int, field: str = RATIONAL) -> LinearMap:
    """Explicit identity between a degree-k coefficient space on R^d and its
    tensor-power model (the identity under monomial coordinates)."""
    labels = tuple(enumerate_multi_indices(d, k))
    return LinearMap.identity(len(labels), labels, field)


def linearization_matrix(P: PolyMap, k: int, cap: int = DEFAULT_SIZE_CAP) -> LinearMap:
    """Matrix taking order-mk tensor coordinates on the domain to the
    order-k tensor coordinates of P(x); rows indexed by codomain
    multi-indices beta, columns by domain multi-indices gamma."""
    if k < 1:
        raise DimensionError(f"k must be >= 1, got {k}")
    d, e, m = P.domain_dim, P.codomain_dim, P.degree
    row_basis = enumerate_multi_indices(e, k)
    col_basis = enumerate_multi_indices(d, m * k)
    check_capacity(f"order-{k} tensor space on R^{e}", len(row_basis), cap)
    check_capacity(f"order-{m * k} tensor space on R^{d}", len(col_basis), cap)
    rows = []
    for beta in row_basis:
        # expand the product of component powers P^beta
        prod: HomPoly | None = None
        for i, b in enumerate(beta):
            if b == 0:
                continue
            f = P.components[i] ** b
            prod = f if prod is None else prod * f
        assert prod is not None  # |beta| = k >= 1
        rows.append(tuple(prod.coefficient(g) for g in col_basis))
    return LinearMap(tuple(rows), tuple(row_basis), tuple(col_basis), P.field)


def adjoint_matrix(P: PolyMap, k: int, cap: int = DEFAULT_SIZE_CAP) -> LinearMap:
    """Matrix of q |-> q o P on coefficient vectors, for degree-k q.

    Columns are indexed by the codomain monomials beta (the basis of the
    q-space), rows by the domain monomials of degree mk.
    """
    if k < 1:
        raise DimensionError(f"k must be >= 1, got {k}")
    d, e, m = P.domain_dim, P.codomain_dim, P.degree
    col_basis = enumerate_multi_indices(e, k)
    row_basis = enumerate_multi_indices(d, m * k)
    check_capacity(f"degree-{k} coefficient space on R^{e}", len(col_basis), cap)
    check_capacity(f"degree-{m * k} coefficient space on R^{d}", len(row_basis), cap)
    cols = []
    for beta in col_basis:
        image = compose_scalar(HomPoly.monomial(e, beta, 1, P.field), P)
        cols.append([image.coefficient(g) for g in row_basis])
    ent = tuple(tuple(cols[j][i] for j in range(len(col_basis)))
                for i in range(len(row_basis)))
    return LinearMap(ent, tuple(row_basis), tuple(col_basis), P.field)


def transpose_identity_defect(P: PolyMap, k: int,
                              relabel_domain: LinearMap | None = None,
                              relabel_codomain: LinearMap | None = None,
                              cap: int = DEFAULT_SIZE_CAP) -> LinearMap:
    """Defect of: adjoint matrix == relabel_codomain . (linearization)^T . relabel_domain^{-1}.

    The relabelings default to the identity maps of the monomial-coordinate
    convention; the defect is the zero matrix exactly for every P and k.
    """
    d, e, m = P.domain_dim, P.codomain_dim, P.degree
    if relabel_domain is None:
        relabel_domain = relabeling_map(e, k, P.field)
    if relabel_codomain is None:
        relabel_codomain = relabeling_map(d, m * k, P.field)
    adj = adjoint_matrix(P, k, cap)
    lin = linearization_matrix(P, k, cap)
    return adj - (relabel_codomain @ lin.transpose() @ relabel_domain.inverse())


def coefficient_matrix(P: PolyMap) -> LinearMap:
    """e x C(d+m-1, m) matrix of component coefficient vectors."""
    basis = enumerate_multi_indices(P.domain_dim, P.degree)
    ent = tuple(tuple(c.coefficient(a) for a in basis) for c in P.components)
    return LinearMap(ent, None, tuple(basis), P.field)


def map_rank(P: PolyMap) -> int:
    """Rank of the coefficient matrix = dimension of the span of P's values."""
    return coefficient_matrix(P).rank()


def adjoint_rank_bound(P: PolyMap, k: int) -> int:
    """C(rank(P)+k-1, k): the rank of adjoint_matrix(P, k) never exceeds this."""
    r = map_rank(P)
    return math.comb(r + k - 1, k)
