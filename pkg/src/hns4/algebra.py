"""Four-dimensional hypercomplex systems obtained by Grassmann-Clifford doubling.

Two 2-D systems with imaginary units squaring to ``mu1`` and ``mu2`` (each of
-1, 0, +1: complex, dual or double numbers) are doubled into a 4-D system
with basis ``e1 = e1f1, e2 = e2f1, e3 = e1f2, e4 = e2f2``.  The two non-unit
generators anticommute, which makes every system non-commutative.

Six combinations are named::

    H  = D(C, C)   quaternions        mu = (-1, -1)
    AH = D(C, W)   antiquaternions    mu = (-1, +1)
    CD = D(C, D)                      mu = (-1,  0)
    WW = D(W, W)                      mu = (+1, +1)
    DD = D(D, D)                      mu = ( 0,  0)
    WD = D(W, D)                      mu = (+1,  0)

Any other ``(mu1, mu2)`` pair gives a ``GENERIC`` system with the same rules.
"""

from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

DIM = 4

#: Relative tolerance used to decide that a pseudonorm vanishes.
ZERO_DIVISOR_EPS = 1e-12


class HNSError(Exception):
    """Base class for errors raised by this package."""


class SystemMismatchError(HNSError, ValueError):
    """Operands belong to different number systems."""


class NonFiniteError(HNSError, ValueError):
    """A coefficient is NaN or infinite."""


class ZeroDivisorError(HNSError, ZeroDivisionError):
    """Division by zero or by a zero divisor.

    Attributes:
        divisor: the offending number.
        pseudonorm: its pseudonorm (zero within tolerance).
    """

    def __init__(self, divisor: "HNum", pseudonorm: float, message: str | None = None):
        self.divisor = divisor
        self.pseudonorm = pseudonorm
        if message is None:
            message = (
                f"cannot divide by {divisor.render()}: it is a zero divisor "
                f"(pseudonorm {pseudonorm:.6g})"
            )
        super().__init__(message)


def check_square_sign(value: int) -> int:
    """Validate a square sign (the square of a 2-D system's imaginary unit)."""
    if isinstance(value, bool) or value not in (-1, 0, 1):
        raise ValueError(f"square sign must be -1, 0 or +1, got {value!r}")
    return int(value)


class SignedBasis(NamedTuple):
    """A signed basis element ``sign * e_index``; ``sign == 0`` is the zero product."""

    sign: int
    index: int = 1

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'-' if self.sign < 0 else ''}e{self.index}"

    def __mul__(self, factor: int) -> "SignedBasis":
        return signed(self.sign * factor, self.index)

    __rmul__ = __mul__


def signed(sign: int, index: int) -> SignedBasis:
    """Build a :class:`SignedBasis` in canonical form (index 1 when zero)."""
    if sign == 0:
        return SignedBasis(0, 1)
    return SignedBasis(1 if sign > 0 else -1, index)


ZERO = SignedBasis(0, 1)


@dataclass(frozen=True)
class CayleyTable:
    """Products of basis elements: ``entries[i-1][j-1] == e_i * e_j``."""

    entries: tuple[tuple[SignedBasis, ...], ...]

    def __post_init__(self):
        if len(self.entries) != DIM or any(len(row) != DIM for row in self.entries):
            raise ValueError("a Cayley table must be 4x4")

    def product(self, i: int, j: int) -> SignedBasis:
        """Return ``e_i * e_j`` (1-based indices)."""
        return self.entries[i - 1][j - 1]

    def multiply(self, x: SignedBasis, y: SignedBasis) -> SignedBasis:
        """Multiply two signed basis elements exactly."""
        if x.sign == 0 or y.sign == 0:
            return ZERO
        p = self.product(x.index, y.index)
        return p * (x.sign * y.sign)

    def structure_constants(self) -> np.ndarray:
        """Array ``g`` with ``e_i e_j = sum_k g[i, j, k] e_k`` (0-based)."""
        g = np.zeros((DIM, DIM, DIM))
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                if p.sign:
                    g[i, j, p.index - 1] = p.sign
        return g

    def violations(self) -> list[str]:
        """List every broken table invariant; empty for a valid table."""
        problems = []
        for j in range(1, DIM + 1):
            if self.product(1, j) != SignedBasis(1, j):
                problems.append(f"e1*e{j} != e{j}")
            if self.product(j, 1) != SignedBasis(1, j):
                problems.append(f"e{j}*e1 != e{j}")
        for i in range(2, DIM + 1):
            for j in range(2, DIM + 1):
                if i != j and self.product(i, j) != self.product(j, i) * -1:
                    problems.append(f"e{i}*e{j} != -(e{j}*e{i})")
        for i, j, k in np.ndindex(DIM, DIM, DIM):
            ei, ej, ek = (SignedBasis(1, n + 1) for n in (i, j, k))
            left = self.multiply(self.multiply(ei, ej), ek)
            right = self.multiply(ei, self.multiply(ej, ek))
            if left != right:
                problems.append(f"(e{i+1}e{j+1})e{k+1} = {left} but e{i+1}(e{j+1}e{k+1}) = {right}")
        return problems

    def rows_as_text(self) -> list[list[str]]:
        return [[str(p) for p in row] for row in self.entries]

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]]) -> "CayleyTable":
        """Parse cells such as ``"e3"``, ``"-e4"`` or ``"0"``."""

        def cell(text: str) -> SignedBasis:
            text = text.strip().replace(" ", "")
            if text == "0":
                return ZERO
            sign = -1 if text.startswith("-") else 1
            text = text.lstrip("+-")
            if len(text) != 2 or text[0] not in "eE" or text[1] not in "1234":
                raise ValueError(f"bad Cayley table cell {text!r}")
            return SignedBasis(sign, int(text[1]))

        return cls(tuple(tuple(cell(c) for c in row) for row in rows))


@lru_cache(maxsize=None)
def gc_double(mu1: int, mu2: int) -> CayleyTable:
    """Cayley table of the Grassmann-Clifford doubling of two 2-D systems.

    ``mu1`` and ``mu2`` are the squares of the imaginary units of the first
    and second factor.  The generators ``e2`` and ``e3`` anticommute and
    ``e4 = e2 e3``.
    """
    mu1, mu2 = check_square_sign(mu1), check_square_sign(mu2)
    t = [[ZERO] * DIM for _ in range(DIM)]
    for j in range(1, DIM + 1):
        t[0][j - 1] = SignedBasis(1, j)
        t[j - 1][0] = SignedBasis(1, j)
    t[1][1] = signed(mu1, 1)
    t[2][2] = signed(mu2, 1)
    t[3][3] = signed(-mu1 * mu2, 1)
    t[1][2], t[2][1] = signed(1, 4), signed(-1, 4)
    t[1][3], t[3][1] = signed(mu1, 3), signed(-mu1, 3)
    t[2][3], t[3][2] = signed(-mu2, 2), signed(mu2, 2)
    return CayleyTable(tuple(tuple(row) for row in t))


class Kind(str, enum.Enum):
    H = "H"
    AH = "AH"
    CD = "CD"
    WW = "WW"
    DD = "DD"
    WD = "WD"
    GENERIC = "Generic"


NAMED_MU: dict[Kind, tuple[int, int]] = {
    Kind.H: (-1, -1),
    Kind.AH: (-1, 1),
    Kind.CD: (-1, 0),
    Kind.WW: (1, 1),
    Kind.DD: (0, 0),
    Kind.WD: (1, 0),
}

NAMED_KINDS = tuple(NAMED_MU)


@dataclass(frozen=True)
class SystemDef:
    kind: Kind
    mu1: int
    mu2: int
    table: CayleyTable = field(repr=False)

    @property
    def name(self) -> str:
        if self.kind is Kind.GENERIC:
            return f"GC({self.mu1},{self.mu2})"
        return self.kind.value

    @property
    def structure(self) -> np.ndarray:
        return _structure(self.table)

    def number(self, *coeffs: float) -> "HNum":
        """``system.number(a1, a2, a3, a4)``; missing trailing coefficients are 0."""
        if len(coeffs) == 1 and not isinstance(coeffs[0], numbers.Real):
            coeffs = tuple(coeffs[0])
        padded = tuple(coeffs) + (0.0,) * (DIM - len(coeffs))
        return HNum(self, padded)

    def basis(self, index: int) -> "HNum":
        if not 1 <= index <= DIM:
            raise ValueError(f"basis index must be 1..4, got {index}")
        return self.number(*(1.0 if k == index else 0.0 for k in range(1, DIM + 1)))

    def one(self) -> "HNum":
        return self.basis(1)

    def zero(self) -> "HNum":
        return self.number()

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def _structure(table: CayleyTable) -> np.ndarray:
    g = table.structure_constants()
    g.setflags(write=False)
    return g


@lru_cache(maxsize=None)
def _make_system(kind: Kind, mu1: int, mu2: int) -> SystemDef:
    return SystemDef(kind, mu1, mu2, gc_double(mu1, mu2))


def builtin_system(kind: Kind | str) -> SystemDef:
    """Return one of the six named systems, e.g. ``builtin_system("AH")``."""
    try:
        kind = Kind(kind.upper() if isinstance(kind, str) and not isinstance(kind, Kind) else kind)
    except ValueError:
        raise ValueError(f"unknown system {kind!r}; expected one of {', '.join(k.value for k in NAMED_KINDS)}") from None
    if kind not in NAMED_MU:
        raise ValueError(f"{kind.value} is not a named system; use generic_system(mu1, mu2)")
    return _make_system(kind, *NAMED_MU[kind])


def generic_system(mu1: int, mu2: int) -> SystemDef:
    return _make_system(Kind.GENERIC, check_square_sign(mu1), check_square_sign(mu2))


@dataclass(frozen=True)
class HNum:
    """Hypercomplex number ``a1 e1 + a2 e2 + a3 e3 + a4 e4`` of a given system."""

    system: SystemDef
    a: tuple[float, float, float, float]

    def __post_init__(self):
        coeffs = tuple(float(x) for x in self.a)
        if len(coeffs) != DIM:
            raise ValueError(f"expected 4 coefficients, got {len(coeffs)}")
        if not all(math.isfinite(x) for x in coeffs):
            raise NonFiniteError(f"coefficients must be finite, got {coeffs}")
        object.__setattr__(self, "a", coeffs)

    @property
    def coeffs(self) -> np.ndarray:
        return np.array(self.a)

    def is_zero(self) -> bool:
        return not any(self.a)

    def render(self, digits: int = 6) -> str:
        return render(self.a, digits)

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other):
        return add(self, other) if isinstance(other, HNum) else NotImplemented

    def __sub__(self, other):
        return sub(self, other) if isinstance(other, HNum) else NotImplemented

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, HNum):
            return mul(self, other)
        if isinstance(other, numbers.Real):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, HNum):
            return div_right(self, other)
        if isinstance(other, numbers.Real):
            return scale(1.0 / other, self)
        return NotImplemented


def render(coeffs: Iterable[float], digits: int = 6) -> str:
    """Canonical text form, e.g. ``1 + 2*e2 - 3*e3``; zero terms are omitted."""
    parts: list[str] = []
    for index, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        mag = f"{abs(c):.{digits}g}"
        if index == 1:
            term = mag
        elif mag == "1":
            term = f"e{index}"
        else:
            term = f"{mag}*e{index}"
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f" {'-' if c < 0 else '+'} {term}")
    return "".join(parts) if parts else "0"


def _same_system(w1: HNum, w2: HNum) -> SystemDef:
    if w1.system != w2.system:
        raise SystemMismatchError(f"cannot combine numbers of {w1.system} and {w2.system}")
    return w1.system


def add(w1: HNum, w2: HNum) -> HNum:
    s = _same_system(w1, w2)
    return HNum(s, tuple(x + y for x, y in zip(w1.a, w2.a)))


def sub(w1: HNum, w2: HNum) -> HNum:
    s = _same_system(w1, w2)
    return HNum(s, tuple(x - y for x, y in zip(w1.a, w2.a)))


def neg(w: HNum) -> HNum:
    return HNum(w.system, tuple(-x for x in w.a))


def scale(k: float, w: HNum) -> HNum:
    return HNum(w.system, tuple(k * x for x in w.a))


def mul(w1: HNum, w2: HNum) -> HNum:
    """Product ``w1 w2`` expanded through the system's Cayley table."""
    s = _same_system(w1, w2)
    out = [0.0] * DIM
    for i, row in enumerate(s.table.entries):
        ai = w1.a[i]
        if ai == 0:
            continue
        for j, p in enumerate(row):
            if p.sign:
                out[p.index - 1] += p.sign * ai * w2.a[j]
    return HNum(s, tuple(out))


def conj(w: HNum) -> HNum:
    a1, a2, a3, a4 = w.a
    return HNum(w.system, (a1, -a2, -a3, -a4))


def left_rep(w: HNum) -> np.ndarray:
    """Matrix of ``x -> w x``: column ``j`` holds the coefficients of ``w e_j``."""
    return np.einsum("i,ijk->kj", np.array(w.a), w.system.structure)


def right_rep(w: HNum) -> np.ndarray:
    """Matrix of ``x -> x w``."""
    return np.einsum("j,ijk->ki", np.array(w.a), w.system.structure)


def norm(w: HNum) -> float:
    """Determinant of the left regular representation."""
    # LAPACK reports an exactly zero pivot as a divide-by-zero; the result is still 0
    with np.errstate(divide="ignore"):
        return float(np.linalg.det(left_rep(w)))


def pseudonorm(w: HNum) -> float:
    """Quadratic form ``a1^2 - mu1 a2^2 - mu2 a3^2 + mu1 mu2 a4^2``; may be negative."""
    a1, a2, a3, a4 = w.a
    m1, m2 = w.system.mu1, w.system.mu2
    return a1 * a1 - m1 * a2 * a2 - m2 * a3 * a3 + m1 * m2 * a4 * a4


def _zero_divisor_band(w: HNum) -> float:
    return ZERO_DIVISOR_EPS * (1.0 + max(x * x for x in w.a))


def is_zero_divisor(w: HNum) -> bool:
    """True for a nonzero ``w`` whose pseudonorm vanishes within tolerance."""
    if w.is_zero():
        return False
    return abs(pseudonorm(w)) <= _zero_divisor_band(w)


def _check_divisor(w: HNum) -> float:
    pn = pseudonorm(w)
    if w.is_zero():
        raise ZeroDivisorError(w, pn, "division by zero")
    if abs(pn) <= _zero_divisor_band(w):
        raise ZeroDivisorError(w, pn)
    return pn


def div_left(w1: HNum, w2: HNum) -> HNum:
    """Solve ``w2 x = w1``: ``x = conj(w2) w1 / pseudonorm(w2)``."""
    _same_system(w1, w2)
    pn = _check_divisor(w2)
    return scale(1.0 / pn, mul(conj(w2), w1))


def div_right(w1: HNum, w2: HNum) -> HNum:
    """Solve ``x w2 = w1``: ``x = w1 conj(w2) / pseudonorm(w2)``."""
    _same_system(w1, w2)
    pn = _check_divisor(w2)
    return scale(1.0 / pn, mul(w1, conj(w2)))


def inverse(w: HNum) -> HNum:
    """Two-sided inverse ``conj(w) / pseudonorm(w)``."""
    pn = _check_divisor(w)
    return scale(1.0 / pn, conj(w))
