"""The lattice H = Z^{2g} with its standard intersection form.

Coordinates are always ordered ``(a1, b1, a2, b2, ..., ag, bg)`` and
``a_i . b_i = 1``.  Matrices act on column vectors, so the j-th column of a
matrix is the image of the j-th basis vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import DimensionError, DomainError, PreconditionError
from .linalg import Matrix, Vector

GENUS = 3
BASIS_LABELS = ("a1", "b1", "a2", "b2", "a3", "b3")


def basis_vector(i: int, g: int = GENUS) -> Vector:
    return tuple(int(k == i) for k in range(2 * g))


def a(i: int, g: int = GENUS) -> Vector:
    """Class a_i (1-based)."""
    return basis_vector(2 * (i - 1), g)


def b(i: int, g: int = GENUS) -> Vector:
    """Class b_i (1-based)."""
    return basis_vector(2 * (i - 1) + 1, g)


def vec(*coords: int) -> Vector:
    return tuple(int(c) for c in coords)


def zero(g: int = GENUS) -> Vector:
    return (0,) * (2 * g)


def standard_basis(g: int = GENUS) -> tuple[Vector, ...]:
    return tuple(basis_vector(i, g) for i in range(2 * g))


def intersection_matrix(g: int = GENUS) -> Matrix:
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return linalg.as_matrix(rows)


def intersection(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection number x . y = x^T J y."""
    if len(x) != len(y):
        raise DimensionError(f"vectors of length {len(x)} and {len(y)}")
    if len(x) % 2:
        raise DimensionError("odd-length vector")
    return sum(x[i] * y[i + 1] - x[i + 1] * y[i] for i in range(0, len(x), 2))


def is_symplectic(m: Matrix) -> bool:
    rows, cols = linalg.shape(m)
    if rows != cols or rows % 2:
        raise DimensionError(f"expected a square 2g x 2g matrix, got {rows}x{cols}")
    j = intersection_matrix(rows // 2)
    return linalg.matmul(linalg.matmul(linalg.transpose(m), j), m) == j


def is_primitive(x: Sequence[int]) -> bool:
    return linalg.vgcd(x) == 1


def primitive_part(x: Sequence[int]) -> tuple[int, Vector]:
    """Split a nonzero x as n * p with n > 0 and p primitive."""
    n = linalg.vgcd(x)
    if n == 0:
        raise DomainError("zero vector has no primitive part")
    return n, tuple(c // n for c in x)


def transvection(v: Sequence[int], exponent: int = 1) -> Matrix:
    """Matrix of x -> x + exponent * (x . v) v.

    ``exponent`` of +1 and -1 give the two mutually inverse transvections;
    no sign convention for Dehn twists is implied.
    """
    v = linalg.as_vector(v)
    if not any(v):
        raise DomainError("transvection along the zero vector")
    n = len(v)
    cols = []
    for j in range(n):
        e = basis_vector(j, n // 2)
        k = exponent * intersection(e, v)
        cols.append(tuple(e[i] + k * v[i] for i in range(n)))
    return linalg.from_columns(cols)


def apply(m: Matrix, x: Sequence[int]) -> Vector:
    return linalg.matvec(m, x)


def random_primitive_vector(rng: np.random.Generator, g: int = GENUS, bound: int = 2) -> Vector:
    while True:
        v = tuple(int(c) for c in rng.integers(-bound, bound + 1, size=2 * g))
        if is_primitive(v):
            return v


def random_sp_element(seed: int, word_length: int, g: int = GENUS, bound: int = 2) -> Matrix:
    """Seeded product of ``word_length`` random transvections.

    Transvection vectors are primitive with coordinates in ``[-bound, bound]``
    and each factor gets a random exponent of +-1.
    """
    if word_length < 0:
        raise DomainError("word_length must be non-negative")
    rng = np.random.default_rng(seed)
    return random_sp_from_rng(rng, word_length, g, bound)


def random_sp_from_rng(rng: np.random.Generator, word_length: int, g: int = GENUS,
                       bound: int = 2) -> Matrix:
    m = linalg.identity(2 * g)
    for _ in range(word_length):
        v = random_primitive_vector(rng, g, bound)
        e = 1 if rng.integers(2) else -1
        m = linalg.matmul(transvection(v, e), m)
    return m


def is_symplectic_basis(basis: Sequence[Sequence[int]]) -> bool:
    """True if basis = (x1, y1, ..., xg, yg) has the standard intersection pattern."""
    n = len(basis)
    if n % 2 or any(len(v) != n for v in basis):
        return False
    j = intersection_matrix(n // 2)
    return all(intersection(basis[p], basis[q]) == j[p][q] for p in range(n) for q in range(n))


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of H given by an ordered basis (stored as rows)."""

    basis: tuple[Vector, ...]

    def __post_init__(self):
        basis = tuple(linalg.as_vector(v) for v in self.basis)
        object.__setattr__(self, "basis", basis)
        if not basis:
            raise PreconditionError("empty basis")
        if len({len(v) for v in basis}) != 1:
            raise DimensionError("basis vectors of different lengths")
        if linalg.rank(basis) != len(basis):
            raise PreconditionError("basis vectors are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0])

    def is_direct_summand(self) -> bool:
        """All invariant factors of the basis matrix equal 1."""
        inv = linalg.smith_invariants(self.basis)
        return len(inv) == self.rank and all(d == 1 for d in inv)

    def hnf(self) -> Matrix:
        return linalg.hermite_normal_form(self.basis)

    def contains(self, x: Sequence[int]) -> bool:
        """Membership in the Z-span of the basis."""
        if not any(x):
            return True
        return linalg.hermite_normal_form(self.basis + (tuple(x),)) == self.hnf()

    def pairing(self) -> int:
        """u . v for a rank-2 basis (u, v)."""
        if self.rank != 2:
            raise PreconditionError(f"pairing needs rank 2, got rank {self.rank}")
        return intersection(*self.basis)

    def image(self, m: Matrix) -> "Sublattice":
        return Sublattice(tuple(apply(m, v) for v in self.basis))
