"""Exponential of a hypercomplex variable.

Write ``w = m1 e1 + v`` with ``v`` the vector part.  In every system of the
class ``v*v = delta * e1`` with the scalar radicand
``delta = mu1 m2^2 + mu2 m3^2 - mu1 mu2 m4^2``, so ``exp(w)`` collapses to
``e^m1 (f e1 + g v)`` where the pair ``(f, g)`` is ``(cosh s, sinh s / s)``,
``(cos s, sin s / s)`` or ``(1, 1)`` depending on the sign of ``delta``
(``s = sqrt|delta|``).

:func:`exp_series` computes the same quantity independently, as the flow at
``t = 1`` of the linear system ``X' = L X`` started from ``e1``, where ``L``
is the left regular representation of ``w``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import HNum, left_rep

RADICAND_EPS = 1e-12

# Below this s, sin(s)/s and sinh(s)/s switch to their Taylor polynomials.
_SMALL_S = 1e-4


class Branch(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    TRIGONOMETRIC = "trigonometric"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class RadicandBranch:
    delta: float
    branch: Branch

    @property
    def s(self) -> float:
        """``sqrt(|delta|)``, the angle or rapidity of the exponential."""
        return math.sqrt(abs(self.delta))


def radicand(w: HNum) -> RadicandBranch:
    _, m2, m3, m4 = w.a
    mu1, mu2 = w.system.mu1, w.system.mu2
    delta = mu1 * m2 * m2 + mu2 * m3 * m3 - mu1 * mu2 * m4 * m4
    if abs(delta) <= RADICAND_EPS * (1.0 + m2 * m2 + m3 * m3 + m4 * m4):
        branch = Branch.DEGENERATE
    elif delta > 0:
        branch = Branch.HYPERBOLIC
    else:
        branch = Branch.TRIGONOMETRIC
    return RadicandBranch(delta, branch)


def _sinc(s: float) -> float:
    if s < _SMALL_S:
        s2 = s * s
        return 1.0 - s2 / 6.0 + s2 * s2 / 120.0
    return math.sin(s) / s


def _sinhc(s: float) -> float:
    if s < _SMALL_S:
        s2 = s * s
        return 1.0 + s2 / 6.0 + s2 * s2 / 120.0
    return math.sinh(s) / s


def exp_closed(w: HNum) -> HNum:
    """Closed-form exponential ``e^m1 (f e1 + g v)``."""
    m1, m2, m3, m4 = w.a
    rb = radicand(w)
    s = rb.s
    if rb.branch is Branch.HYPERBOLIC:
        f, g = math.cosh(s), _sinhc(s)
    elif rb.branch is Branch.TRIGONOMETRIC:
        f, g = math.cos(s), _sinc(s)
    else:
        f, g = 1.0, 1.0
    k = math.exp(m1)
    return HNum(w.system, (k * f, k * g * m2, k * g * m3, k * g * m4))


def expm(a: np.ndarray, max_norm: float = 0.5, term_tol: float = 1e-16) -> np.ndarray:
    """Matrix exponential by scaling and squaring a truncated Taylor series.

    The matrix is halved until its infinity norm is at most ``max_norm``;
    the series stops once a term's infinity norm drops below ``term_tol``.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    nrm = np.linalg.norm(a, np.inf)
    squarings = 0
    if nrm > max_norm:
        squarings = int(math.ceil(math.log2(nrm / max_norm)))
    scaled = a / 2.0**squarings

    result = np.eye(n)
    term = np.eye(n)
    k = 0
    while True:
        k += 1
        term = term @ scaled / k
        result = result + term
        if np.linalg.norm(term, np.inf) < term_tol or k > 100:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def exp_series(w: HNum) -> HNum:
    """Exponential via the associated linear system (matrix-exponential oracle)."""
    flow = expm(left_rep(w))
    return HNum(w.system, tuple(flow[:, 0]))
