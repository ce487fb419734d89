"""Orthogonal splittings H = V1 + V2 + V3 and the symmetry criterion.

A simple abelian cycle is identified with its splitting, so nothing here
refers to curves.  Reversing the outer summands flips the sign of the
cycle, which is the only relation :func:`canonical_form` quotients by.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import DimensionError, NotFoundError, PreconditionError
from .linalg import Matrix, Vector
from .quadratic import SpQuadraticForm, arf, reference_form, restrict
from .symplectic import (GENUS, Sublattice, a, b, intersection, is_primitive, primitive_part,
                         random_sp_from_rng)
from .torus import normalize_middle_basis

DEFAULT_BOUND = 5


@dataclass(frozen=True)
class OrthogonalSplitting:
    V1: Sublattice
    V2: Sublattice
    V3: Sublattice

    @property
    def summands(self) -> tuple[Sublattice, Sublattice, Sublattice]:
        return (self.V1, self.V2, self.V3)

    def reversed(self) -> "OrthogonalSplitting":
        return OrthogonalSplitting(self.V3, self.V2, self.V1)

    def permuted(self, order: Sequence[int]) -> "OrthogonalSplitting":
        s = self.summands
        return OrthogonalSplitting(*(s[i] for i in order))

    def image(self, m: Matrix) -> "OrthogonalSplitting":
        return OrthogonalSplitting(*(v.image(m) for v in self.summands))

    def basis_matrix(self) -> Matrix:
        """6x6 matrix whose columns are the six summand basis vectors."""
        return linalg.from_columns([v for s in self.summands for v in s.basis])

    def unordered_key(self) -> frozenset:
        return frozenset(s.hnf() for s in self.summands)

    def to_json(self) -> dict:
        return {name: [list(v) for v in s.basis]
                for name, s in zip(("V1", "V2", "V3"), self.summands)}

    @classmethod
    def from_json(cls, obj: dict) -> "OrthogonalSplitting":
        return cls(*(Sublattice(tuple(tuple(v) for v in obj[k])) for k in ("V1", "V2", "V3")))


def standard_splitting() -> OrthogonalSplitting:
    return OrthogonalSplitting(Sublattice((a(1), b(1))), Sublattice((a(2), b(2))),
                               Sublattice((a(3), b(3))))


def _as_sublattice(v) -> Sublattice:
    return v if isinstance(v, Sublattice) else Sublattice(tuple(tuple(x) for x in v))


def is_orthogonal_splitting(V1, V2, V3) -> bool:
    subs = [_as_sublattice(v) for v in (V1, V2, V3)]
    for s in subs:
        if s.rank != 2:
            raise PreconditionError(f"summand of rank {s.rank}; every summand must have rank 2")
        if s.ambient_dim != 2 * GENUS:
            raise DimensionError("summands must live in Z^6")
    for i in range(3):
        for j in range(i + 1, 3):
            if any(intersection(u, v) for u in subs[i].basis for v in subs[j].basis):
                return False
    if any(abs(s.pairing()) != 1 for s in subs):
        return False
    return abs(linalg.det(OrthogonalSplitting(*subs).basis_matrix())) == 1


def check_splitting(s: OrthogonalSplitting) -> None:
    if not is_orthogonal_splitting(*s.summands):
        raise PreconditionError("not an orthogonal splitting of H")


def arf_pattern(s: OrthogonalSplitting, form: SpQuadraticForm | None = None) -> tuple[int, int, int]:
    form = form or reference_form()
    return tuple(arf(restrict(form, v)) for v in s.summands)


def is_symmetric_splitting(s: OrthogonalSplitting, form: SpQuadraticForm | None = None) -> bool:
    """Outer summands have Arf 1 and the middle one Arf 0 under the reference form."""
    check_splitting(s)
    return arf_pattern(s, form) == (1, 0, 1)


def canonical_form(s: OrthogonalSplitting) -> tuple[OrthogonalSplitting, int]:
    """Canonical representative of {S, reversed S} and the sign relating S to it.

    Summand bases are replaced by their Hermite normal forms; the pair is
    reversed (sign -1) when V1's HNF sorts before V3's.  With this rule the
    standard splitting is its own canonical form.
    """
    if not is_symmetric_splitting(s):
        raise PreconditionError("canonical form is defined for symmetric splittings only")
    h1, h2, h3 = (v.hnf() for v in s.summands)
    canon = OrthogonalSplitting(Sublattice(h1), Sublattice(h2), Sublattice(h3))
    if h1 < h3:
        return canon.reversed(), -1
    return canon, 1


def project(x: Sequence[int], s: OrthogonalSplitting) -> tuple[Vector, Vector, Vector]:
    """Components of x in V1, V2, V3.

    For a summand with basis (u, v) and u.v = e = +-1, orthogonality gives
    the coefficients x = (e x.v) u - (e x.u) v + (other summands).
    """
    x = linalg.as_vector(x)
    if len(x) != 2 * GENUS:
        raise DimensionError("expected a vector in Z^6")
    out = []
    for sub in s.summands:
        u, v = sub.basis
        e = intersection(u, v)
        if abs(e) != 1:
            raise PreconditionError("summand basis is not symplectic")
        alpha = e * intersection(x, v)
        beta = -e * intersection(x, u)
        out.append(linalg.vadd(linalg.vscale(alpha, u), linalg.vscale(beta, v)))
    return tuple(out)


@dataclass(frozen=True)
class GenericClass:
    x: Vector
    components: tuple[tuple[Vector, Vector, Vector], ...]
    multiplicities: tuple[tuple[int, int, int], ...]
    primitive_parts: tuple[tuple[Vector, Vector, Vector], ...]

    def to_json(self) -> dict:
        return {
            "x": list(self.x),
            "components": [[list(c) for c in comp] for comp in self.components],
            "multiplicities": [list(m) for m in self.multiplicities],
            "primitive_parts": [[list(p) for p in parts] for parts in self.primitive_parts],
        }


def generic_class_for(x: Sequence[int], family: Sequence[OrthogonalSplitting]) -> GenericClass | None:
    """Decompose x against each splitting; None unless x is generic for the family.

    Generic means: x primitive, every component nonzero, the unordered
    component sets pairwise distinct, and likewise for the sets of primitive
    parts.
    """
    x = linalg.as_vector(x)
    if not is_primitive(x):
        return None
    comps = []
    for s in family:
        c = project(x, s)
        if not all(any(v) for v in c):
            return None
        comps.append(c)
    comp_sets = [frozenset(c) for c in comps]
    if len(set(comp_sets)) != len(comp_sets):
        return None
    mults, parts = [], []
    for c in comps:
        split = [primitive_part(v) for v in c]
        mults.append(tuple(n for n, _ in split))
        parts.append(tuple(p for _, p in split))
    part_sets = [frozenset(p) for p in parts]
    if len(set(part_sets)) != len(part_sets):
        return None
    return GenericClass(x, tuple(comps), tuple(mults), tuple(parts))


def _check_family(family: Sequence[OrthogonalSplitting]) -> None:
    if not family:
        raise PreconditionError("family must be nonempty")
    for s in family:
        check_splitting(s)
    keys = [s.unordered_key() for s in family]
    if len(set(keys)) != len(keys):
        raise PreconditionError("splittings must be pairwise distinct as unordered splittings")


def choose_generic_class(family: Sequence[OrthogonalSplitting], seed: int = 0,
                         coordinate_bound: int = DEFAULT_BOUND) -> GenericClass:
    """First generic x in a seeded shuffle of the box [-bound, bound]^6."""
    _check_family(family)
    side = 2 * coordinate_bound + 1
    order = np.random.default_rng(seed).permutation(side ** 6)
    for code in order:
        code = int(code)
        x = []
        for _ in range(6):
            code, r = divmod(code, side)
            x.append(r - coordinate_bound)
        found = generic_class_for(x, family)
        if found is not None:
            return found
    raise NotFoundError(f"no generic class with coordinates bounded by {coordinate_bound}")


def orient(sub: Sublattice) -> Sublattice:
    """Same summand with the basis order fixed so that u.v = +1."""
    u, v = sub.basis
    return sub if intersection(u, v) == 1 else Sublattice((v, u))


def random_symmetric_splitting(rng: np.random.Generator, word_length: int = 6) -> OrthogonalSplitting:
    """Image of the standard splitting under a random Sp(6, Z) element, ordered to be symmetric.

    Arf patterns of orthogonal splittings sum to 0, so a pattern with two
    ones is moved to (1, 0, 1) by placing the Arf-0 summand in the middle;
    the all-zero pattern is resampled.  The middle basis is normalized to
    reference-form values (0, 1) and every basis pair is oriented to u.v = 1.
    """
    form = reference_form()
    std = standard_splitting()
    while True:
        m = random_sp_from_rng(rng, word_length)
        s = std.image(m)
        pattern = arf_pattern(s, form)
        if sum(pattern) != 2:
            continue
        mid = pattern.index(0)
        outer = [i for i in range(3) if i != mid]
        if rng.integers(2):
            outer.reverse()
        s = s.permuted((outer[0], mid, outer[1]))
        v2 = orient(s.V2)
        u, v = v2.basis
        t, _ = normalize_middle_basis(form(u), form(v))
        new_u = linalg.vadd(linalg.vscale(t[0][0], u), linalg.vscale(t[1][0], v))
        new_v = linalg.vadd(linalg.vscale(t[0][1], u), linalg.vscale(t[1][1], v))
        return OrthogonalSplitting(orient(s.V1), Sublattice((new_u, new_v)), orient(s.V3))


def random_symmetric_family(n: int, seed: int, word_length: int = 6) -> list[OrthogonalSplitting]:
    """n symmetric splittings, pairwise distinct as unordered splittings."""
    rng = np.random.default_rng(seed)
    out: list[OrthogonalSplitting] = []
    keys: set = set()
    while len(out) < n:
        s = random_symmetric_splitting(rng, word_length)
        if s.unordered_key() not in keys:
            keys.add(s.unordered_key())
            out.append(s)
    return out
