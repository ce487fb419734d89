"""Sp-quadratic forms on H (x) Z/2 and their Arf invariants.

A form is determined by its values on the standard basis; the value on any
other vector follows from the polarization rule
``w(x + y) = w(x) + w(y) + x.y  (mod 2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, PreconditionError, ResourceError
from .symplectic import GENUS, Sublattice, is_symplectic_basis

MAX_ENUMERATION_GENUS = 8
# values on (a1, b1, a2, b2, a3, b3)
REFERENCE_VALUES = (1, 1, 0, 1, 1, 1)


@dataclass(frozen=True)
class SpQuadraticForm:
    basis_values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.basis_values)
        if not vals or len(vals) % 2:
            raise DimensionError("a form needs an even, positive number of basis values")
        if any(v not in (0, 1) for v in vals):
            raise ValueError(f"basis values must be bits, got {vals}")
        object.__setattr__(self, "basis_values", vals)

    @property
    def genus(self) -> int:
        return len(self.basis_values) // 2

    def __call__(self, x: Sequence[int]) -> int:
        return evaluate(self, x)

    def as_int(self) -> int:
        """Little-endian bit encoding (value on a1 is bit 0)."""
        return sum(v << k for k, v in enumerate(self.basis_values))

    @classmethod
    def from_int(cls, code: int, g: int) -> "SpQuadraticForm":
        return cls(tuple((code >> k) & 1 for k in range(2 * g)))

    def to_json(self) -> dict:
        return {"genus": self.genus, "basis_values": list(self.basis_values)}

    @classmethod
    def from_json(cls, obj: dict) -> "SpQuadraticForm":
        form = cls(tuple(obj["basis_values"]))
        if "genus" in obj and obj["genus"] != form.genus:
            raise DimensionError("genus does not match the number of basis values")
        return form


def evaluate(form: SpQuadraticForm, x: Sequence[int]) -> int:
    vals = form.basis_values
    if len(x) != len(vals):
        raise DimensionError(f"vector of length {len(x)} for a genus-{form.genus} form")
    c = [int(t) & 1 for t in x]
    linear = sum(ci * wi for ci, wi in zip(c, vals))
    cross = sum(c[i] * c[i + 1] for i in range(0, len(c), 2))
    return (linear + cross) & 1


def reference_form() -> SpQuadraticForm:
    """The fixed genus-3 form with value 0 on a2 and 1 on the other basis classes."""
    form = SpQuadraticForm(REFERENCE_VALUES)
    if arf_standard(form) != 0:
        raise PreconditionError("reference form must have Arf invariant 0")
    return form


def nu_form() -> SpQuadraticForm:
    """Genus-1 form with nu(a) = 0, nu(b) = 1."""
    return SpQuadraticForm((0, 1))


def arf_standard(form: SpQuadraticForm) -> int:
    v = form.basis_values
    return sum(v[i] * v[i + 1] for i in range(0, len(v), 2)) & 1


def arf(form: SpQuadraticForm, basis: Sequence[Sequence[int]] | None = None) -> int:
    """Arf invariant, computed on ``basis`` (standard basis if omitted)."""
    if basis is None:
        return arf_standard(form)
    basis = [tuple(v) for v in basis]
    if len(basis) != len(form.basis_values):
        raise DimensionError("basis size does not match the form's genus")
    if not is_symplectic_basis(basis):
        raise PreconditionError("basis is not symplectic")
    return sum(evaluate(form, basis[i]) * evaluate(form, basis[i + 1])
               for i in range(0, len(basis), 2)) & 1


def enumerate_forms(g: int, arf_value: int | None = None) -> list[SpQuadraticForm]:
    """All genus-g forms with the given Arf invariant, ordered by :meth:`as_int`."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g > MAX_ENUMERATION_GENUS:
        raise ResourceError(f"2^{2 * g} forms is too many to enumerate")
    forms = (SpQuadraticForm.from_int(code, g) for code in range(1 << (2 * g)))
    if arf_value is None:
        return list(forms)
    return [f for f in forms if arf_standard(f) == arf_value]


def census_formula(g: int, arf_value: int) -> int:
    """Number of genus-g forms with the given Arf invariant."""
    return 2 ** (g - 1) * (2 ** g + (1 if arf_value == 0 else -1))


def restrict(form: SpQuadraticForm, sub: Sublattice) -> SpQuadraticForm:
    """Genus-1 form on a rank-2 summand with basis (u, v), u.v = +-1."""
    if sub.rank != 2:
        raise PreconditionError(f"restriction needs a rank-2 summand, got rank {sub.rank}")
    if abs(sub.pairing()) != 1:
        raise PreconditionError("summand basis is not symplectic (u.v != +-1)")
    u, v = sub.basis
    return SpQuadraticForm((evaluate(form, u), evaluate(form, v)))


def birman_craggs_involution_value(form: SpQuadraticForm) -> int:
    """Birman-Craggs value on the standard hyperelliptic involution.

    Uses the reduced single-term expression, valid only for Arf-0 forms.
    """
    if form.genus != GENUS:
        raise PreconditionError("involution value is defined for genus 3 only")
    if arf_standard(form) != 0:
        raise PreconditionError("involution value requires an Arf-0 form")
    a1, b1, a2, b2, _, _ = form.basis_values
    return (a1 * b1 * (a2 + 1) * b2) & 1


def birman_craggs_three_term(form: SpQuadraticForm) -> int:
    """Unreduced sum over i < j of w(a_i)w(b_i)(w(a_j)+1)w(b_j)."""
    v = form.basis_values
    g = form.genus
    total = 0
    for i in range(g):
        for j in range(i + 1, g):
            total += v[2 * i] * v[2 * i + 1] * (v[2 * j] + 1) * v[2 * j + 1]
    return total & 1
