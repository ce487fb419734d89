"""Reduction of symplectic bases of Z^2 to the standard basis (a, b).

Input matrices follow the row convention ``X = [[x1, x2], [y1, y2]]`` with
``a' = x1 a + x2 b`` and ``b' = y1 a + y2 b``.  The output is a word in

    R1 = [[1, 1], [0, 1]],   R2 = [[1, 0], [1, 1]]

and the action convention is: a word ``w`` carries a basis ``B`` to ``B'``
when ``eval(w) @ cols(B) == cols(B')``, where ``cols(B)`` holds the basis
vectors as columns (so ``cols`` of the basis encoded by X is ``X.T``) and
``eval(w)`` is the product of the letters in written order.  The rightmost
letter therefore acts first.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import PreconditionError
from .linalg import Matrix

R1 = ((1, 1), (0, 1))
R2 = ((1, 0), (1, 1))
GENERATORS = {"R1": R1, "R2": R2}
IDENTITY2 = linalg.identity(2)

# eval(R2 R1^-2 R2 R1^-2) = -1, written left to right
MINUS_IDENTITY_WORD = (("R2", 1), ("R1", -2), ("R2", 1), ("R1", -2))


def generator_power(name: str, k: int) -> Matrix:
    if name == "R1":
        return ((1, k), (0, 1))
    if name == "R2":
        return ((1, 0), (k, 1))
    raise ValueError(f"unknown generator {name!r}")


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        letters = tuple((str(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g not in GENERATORS or e == 0:
                raise ValueError(f"bad letter {(g, e)}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def matrix(self) -> Matrix:
        return linalg.matprod((generator_power(g, e) for g, e in self.letters), 2)

    def in_refined_subgroup(self) -> bool:
        """Every R1 exponent is even, i.e. the word lies in <R1^2, R2>."""
        return all(e % 2 == 0 for g, e in self.letters if g == "R1")

    def to_json(self) -> list:
        return [[g, e] for g, e in self.letters]

    @classmethod
    def from_json(cls, obj) -> "GeneratorWord":
        return cls(tuple((g, e) for g, e in obj))


@dataclass
class Reduction:
    word: GeneratorWord
    trace: list[Matrix] = field(default_factory=list)  # column matrices after each step

    @property
    def iterations(self) -> int:
        return len(self.word)


def nu_value(x: int, y: int) -> int:
    """nu(x a + y b) for the torus form nu(a) = 0, nu(b) = 1."""
    return (y * (1 + x)) & 1


def _round_ties_to_zero(n: int, d: int) -> int:
    """Nearest integer to n / d; exact halves go toward zero."""
    if d < 0:
        n, d = -n, -d
    q, r = divmod(n, d)
    if 2 * r > d or (2 * r == d and q < 0):
        q += 1
    return q


def _check_det(x: Matrix) -> None:
    if linalg.shape(x) != (2, 2):
        raise PreconditionError("expected a 2x2 matrix")
    if linalg.det(x) != 1:
        raise PreconditionError(f"determinant must be 1, got {linalg.det(x)}")


class _Reducer:
    def __init__(self, x: Matrix):
        self.cols = linalg.transpose(x)
        self.steps: list[tuple[str, int]] = []
        self.trace: list[Matrix] = [self.cols]

    def apply(self, name: str, k: int) -> None:
        if k == 0:
            return
        self.cols = linalg.matmul(generator_power(name, k), self.cols)
        self.steps.append((name, k))
        self.trace.append(self.cols)

    def finish(self) -> Reduction:
        (x1, z), (x2, y2) = self.cols
        assert x2 == 0 and abs(x1) == 1 and y2 == x1
        if x1 == -1:
            for name, k in reversed(MINUS_IDENTITY_WORD):
                self.apply(name, k)
            z = self.cols[0][1]
        self.apply("R1", -z)
        word = GeneratorWord(tuple(reversed(self.steps)))
        if linalg.matmul(word.matrix(), self.trace[0]) != IDENTITY2:
            raise RuntimeError("reduction word failed verification")
        return Reduction(word, self.trace)


def reduce_full_trace(x: Matrix) -> Reduction:
    x = linalg.as_matrix(x)
    _check_det(x)
    red = _Reducer(x)
    while True:
        (x1, _), (x2, _) = red.cols
        if x2 == 0:
            break
        if x1 == 0:
            red.apply("R1", x2)  # x2 = +-1 here
        elif abs(x2) >= abs(x1):
            red.apply("R2", -_round_ties_to_zero(x2, x1))
        else:
            red.apply("R1", -_round_ties_to_zero(x1, x2))
    return red.finish()


def reduce_full(x: Matrix) -> GeneratorWord:
    """Word in R1, R2 carrying the basis encoded by ``x`` to (a, b)."""
    return reduce_full_trace(x).word


def check_refined_precondition(x: Matrix) -> None:
    x = linalg.as_matrix(x)
    _check_det(x)
    (x1, x2), (y1, y2) = x
    if nu_value(x1, x2) != 0 or nu_value(y1, y2) != 1:
        raise PreconditionError(
            f"need nu(a') = 0 and nu(b') = 1, got ({nu_value(x1, x2)}, {nu_value(y1, y2)})")


def reduce_refined_trace(x: Matrix) -> Reduction:
    """Parity-aware descent inside G = <R1^2, R2>.

    nu(a') = 0 together with primitivity forces the a-coordinate x1 of a'
    to be odd.  R2-powers subtract any multiple of x1 from x2, R1^2-powers
    subtract even multiples of x2 from x1; both keep x1 odd and strictly
    lower |x1| + |x2| until x2 = 0.
    """
    x = linalg.as_matrix(x)
    check_refined_precondition(x)
    red = _Reducer(x)
    while True:
        (x1, _), (x2, _) = red.cols
        if x2 == 0:
            break
        if abs(x2) >= abs(x1):
            red.apply("R2", -_round_ties_to_zero(x2, x1))
        else:
            red.apply("R1", -2 * _round_ties_to_zero(x1, 2 * x2))
    return red.finish()


def reduce_refined(x: Matrix) -> GeneratorWord:
    """Word in R1^2, R2 carrying the basis encoded by ``x`` to (a, b)."""
    return reduce_refined_trace(x).word


def descent_bound(x: Matrix) -> int:
    (x1, _), (y1, _) = x
    return abs(x1) + abs(y1) + 8


def random_sl2(rng: np.random.Generator, length: int, refined: bool = False,
               max_exponent: int = 3) -> Matrix:
    """Row-convention matrix of a random basis reachable from (a, b).

    With ``refined`` the word uses only R1^{2k} and R2^k, so the result
    satisfies the nu-precondition of :func:`reduce_refined`.
    """
    g = IDENTITY2
    for _ in range(length):
        name = "R1" if rng.integers(2) else "R2"
        k = int(rng.integers(1, max_exponent + 1)) * (1 if rng.integers(2) else -1)
        if refined and name == "R1":
            k *= 2
        g = linalg.matmul(generator_power(name, k), g)
    return linalg.transpose(g)
