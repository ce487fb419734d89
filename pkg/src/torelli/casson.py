"""Seifert linking forms, Morita twist values and independence certificates.

A linking form is an integer matrix L with ``L[u][v] = l(e_u, e_v)`` and
``L.T - L = J``.  Precomposing the embedding with a mapping class acting by
M on homology changes L to ``M.T @ L @ M``.  The value of the Morita
homomorphism on a genus-one separating twist is the determinant of L
restricted to the genus-one side, and the pairing of a cup product of two
such functionals with a simple abelian cycle is minus the 2x2 determinant of
their values on the two twists.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import NotFoundError, PreconditionError
from .linalg import Matrix, Vector
from .splittings import OrthogonalSplitting, canonical_form, is_symmetric_splitting, orient
from .symplectic import GENUS, intersection, intersection_matrix, is_symplectic, random_sp_from_rng

log = logging.getLogger(__name__)

PSI1 = linalg.as_matrix([
    [1, 1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0, 0],
    [1, 0, 1, 1, 0, 0],
    [1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
])
PSI3 = linalg.as_matrix([
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 0, 1],
])

MAX_WORD_LENGTH = 12


@dataclass(frozen=True)
class LinkingForm:
    matrix: Matrix

    def __post_init__(self):
        m = linalg.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        n, k = linalg.shape(m)
        if n != k or n % 2:
            raise PreconditionError("linking form must be a square 2g x 2g matrix")
        if not satisfies_seifert_relation(m):
            raise PreconditionError("matrix violates L^T - L = J")

    def __call__(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(xi * sum(lij * yj for lij, yj in zip(row, y))
                   for xi, row in zip(x, self.matrix) if xi)


def satisfies_seifert_relation(m: Matrix) -> bool:
    n = len(m)
    j = intersection_matrix(n // 2)
    mt = linalg.transpose(m)
    return all(mt[r][c] - m[r][c] == j[r][c] for r in range(n) for c in range(n))


def standard_linking_form(g: int = GENUS) -> LinkingForm:
    """l(b_i, a_i) = 1 and every other basis value 0."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    rows = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        rows[2 * i + 1][2 * i] = 1
    return LinkingForm(linalg.as_matrix(rows))


def pushforward(form: LinkingForm, m: Matrix) -> LinkingForm:
    """The form x, y -> l(Mx, My)."""
    m = linalg.as_matrix(m)
    if not is_symplectic(m):
        raise PreconditionError("pushforward needs a symplectic matrix")
    return LinkingForm(linalg.matmul(linalg.matmul(linalg.transpose(m), form.matrix), m))


def morita_twist_value(form: LinkingForm, pair: Sequence[Sequence[int]]) -> int:
    """l(a,a) l(b,b) - l(a,b) l(b,a) for a symplectic pair (a, b)."""
    x, y = pair
    if intersection(x, y) != 1:
        raise PreconditionError("side pair must satisfy a.b = 1")
    return form(x, x) * form(y, y) - form(x, y) * form(y, x)


@dataclass(frozen=True)
class CycleDescriptor:
    """Simple abelian cycle A(T_gamma, T_delta) recorded by its splitting.

    The gamma twist bounds the V1 side and the delta twist the V3 side.
    """

    splitting: OrthogonalSplitting

    def __post_init__(self):
        if not is_symmetric_splitting(self.splitting):
            raise PreconditionError("cycle descriptor needs a symmetric splitting")

    @property
    def gamma_side(self) -> tuple[Vector, Vector]:
        return orient(self.splitting.V1).basis

    @property
    def delta_side(self) -> tuple[Vector, Vector]:
        return orient(self.splitting.V3).basis

    def swapped(self) -> "CycleDescriptor":
        return CycleDescriptor(self.splitting.reversed())

    def to_json(self) -> dict:
        return self.splitting.to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "CycleDescriptor":
        return cls(OrthogonalSplitting.from_json(obj))


def cycle_pairing(l1: LinkingForm, l2: LinkingForm, cycle: CycleDescriptor) -> int:
    g, d = cycle.gamma_side, cycle.delta_side
    return -(morita_twist_value(l1, g) * morita_twist_value(l2, d)
             - morita_twist_value(l1, d) * morita_twist_value(l2, g))


@dataclass
class IndependenceCertificate:
    cycles: list[CycleDescriptor]
    functionals: list[Matrix]
    value_matrix: list[list[int]]
    rank: int
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "cycles": [c.to_json() for c in self.cycles],
            "functionals": [[list(r) for r in m] for m in self.functionals],
            "value_matrix": [list(r) for r in self.value_matrix],
            "rank": self.rank,
        }
        if self.meta:
            out["meta"] = dict(self.meta)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "IndependenceCertificate":
        return cls(
            cycles=[CycleDescriptor.from_json(c) for c in obj["cycles"]],
            functionals=[linalg.as_matrix(m) for m in obj["functionals"]],
            value_matrix=[[int(x) for x in r] for r in obj["value_matrix"]],
            rank=int(obj["rank"]),
            meta=dict(obj.get("meta", {})),
        )


def pairing_row(m1: Matrix, m2: Matrix, cycles: Sequence[CycleDescriptor],
                base: LinkingForm | None = None) -> list[int]:
    base = base or standard_linking_form()
    l1, l2 = pushforward(base, m1), pushforward(base, m2)
    return [cycle_pairing(l1, l2, c) for c in cycles]


def _candidates(rng: np.random.Generator, hints: Iterable[tuple[Matrix, Matrix]]):
    for h1, h2 in hints:
        yield linalg.as_matrix(h1), linalg.as_matrix(h2)
    while True:
        n1, n2 = (int(k) for k in rng.integers(1, MAX_WORD_LENGTH + 1, size=2))
        yield random_sp_from_rng(rng, n1), random_sp_from_rng(rng, n2)


def find_independence_certificate(cycles: Sequence[CycleDescriptor], seed: int = 0,
                                  budget: int = 100_000,
                                  hints: Iterable[tuple[Matrix, Matrix]] = ()) -> IndependenceCertificate:
    """Greedy search for functional pairs whose pairing matrix has full rank.

    Candidates are the ``hints`` followed by pairs of seeded transvection
    words of length 1..12; a pair is kept only if it raises the rank.  A
    full-rank matrix certifies Z-linear independence of the cycles; running
    out of budget proves nothing.
    """
    cycles = list(cycles)
    if not cycles:
        raise PreconditionError("no cycles given")
    keys = [canonical_form(c.splitting)[0] for c in cycles]
    if len(set(keys)) != len(keys):
        raise PreconditionError("cycles must be pairwise distinct up to reversal")
    n = len(cycles)
    rng = np.random.default_rng(seed)
    base = standard_linking_form()
    rows: list[list[int]] = []
    functionals: list[Matrix] = []
    tried = 0
    for m1, m2 in _candidates(rng, hints):
        if tried >= budget:
            break
        tried += 1
        row = pairing_row(m1, m2, cycles, base)
        if not any(row):
            continue
        if linalg.rank(rows + [row]) > len(rows):
            rows.append(row)
            functionals.extend([m1, m2])
            log.debug("candidate %d raised rank to %d", tried, len(rows))
            if len(rows) == n:
                return IndependenceCertificate(cycles, functionals, rows, n,
                                               {"seed": seed, "candidates_tried": tried})
    raise NotFoundError(f"rank {len(rows)} of {n} after {tried} candidates")


def _gram_det(lmat, x, y) -> int:
    """det of the 2x2 matrix of l on (x, y), with l given as an object array."""
    basis = np.array([x, y], dtype=object)
    gram = basis.dot(lmat).dot(basis.T)
    return gram[0, 0] * gram[1, 1] - gram[0, 1] * gram[1, 0]


def verify_certificate(cert: IndependenceCertificate) -> dict:
    """Replay a certificate from its stored data alone.

    Recomputes every pairing with separate arithmetic (object-dtype numpy
    products), checks each functional is symplectic, the cycles are valid
    and pairwise distinct, and that the value matrix has full rank via an
    exact rational determinant.
    """
    problems = []
    n = len(cert.cycles)
    j = np.array(intersection_matrix(GENUS), dtype=object)
    base = np.array(standard_linking_form().matrix, dtype=object)
    if len(cert.functionals) != 2 * len(cert.value_matrix):
        problems.append("functionals must come in pairs, one pair per row")
    keys = set()
    for c in cert.cycles:
        try:
            keys.add(canonical_form(c.splitting)[0])
        except PreconditionError as exc:
            problems.append(f"invalid cycle: {exc}")
    if len(keys) != n:
        problems.append("cycles are not pairwise distinct up to reversal")
    forms = []
    for k, f in enumerate(cert.functionals):
        m = np.array(f, dtype=object)
        if m.shape != (6, 6) or not (m.T.dot(j).dot(m) == j).all():
            problems.append(f"functional {k} is not symplectic")
        forms.append(m.T.dot(base).dot(m))
    recomputed = []
    if not problems:
        for k in range(len(cert.value_matrix)):
            l1, l2 = forms[2 * k], forms[2 * k + 1]
            row = []
            for c in cert.cycles:
                g, d = c.gamma_side, c.delta_side
                row.append(-(_gram_det(l1, *g) * _gram_det(l2, *d)
                             - _gram_det(l1, *d) * _gram_det(l2, *g)))
            recomputed.append(row)
        if recomputed != [list(r) for r in cert.value_matrix]:
            problems.append("stored value matrix does not match recomputation")
    full_rank = False
    if not problems and len(recomputed) == n:
        full_rank = linalg.fraction_det(recomputed) != 0
        if not full_rank:
            problems.append("value matrix is singular")
    elif not problems:
        problems.append(f"value matrix has {len(recomputed)} rows for {n} cycles")
    if not problems and cert.rank != n:
        problems.append(f"stored rank {cert.rank} != {n}")
    return {"valid": not problems, "rank": n if full_rank else None, "problems": problems}
