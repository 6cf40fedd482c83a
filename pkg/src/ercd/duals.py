"""Forward-mode dual numbers for differentiating momentum-space
coefficient functions.

A Dual carries a value and a 3-component gradient (one slot per momentum
component). Values and gradient slots may themselves be Duals, so second
derivatives come from nesting. Exact to machine precision for the
closed-form coefficients used here (rational functions of q and
omega = sqrt(q^2 + m^2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np


class Dual:
    __slots__ = ("val", "grad")

    def __init__(self, val, grad=(0.0, 0.0, 0.0)):
        self.val = val
        self.grad = tuple(grad)

    # arithmetic; ndarray operands are deferred to numpy so scalar Duals
    # broadcast elementwise into object arrays
    def __add__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        if isinstance(other, Dual):
            return Dual(self.val + other.val,
                        tuple(a + b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val + other, self.grad)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        if isinstance(other, Dual):
            return Dual(self.val - other.val,
                        tuple(a - b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val - other, self.grad)

    def __rsub__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        return (-self) + other

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.grad))

    def __mul__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        if isinstance(other, Dual):
            return Dual(self.val * other.val,
                        tuple(a * other.val + self.val * b
                              for a, b in zip(self.grad, other.grad)))
        return Dual(self.val * other, tuple(a * other for a in self.grad))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        if isinstance(other, Dual):
            inv = 1.0 / other.val
            return Dual(self.val * inv,
                        tuple((a * other.val - self.val * b) * inv * inv
                              for a, b in zip(self.grad, other.grad)))
        inv = 1.0 / other
        return Dual(self.val * inv, tuple(a * inv for a in self.grad))

    def __rtruediv__(self, other):
        if isinstance(other, np.ndarray):
            return NotImplemented
        inv = 1.0 / self.val
        val = other * inv
        return Dual(val, tuple(-val * inv * b for b in self.grad))

    def conjugate(self):
        # differentiation variables are the real momentum components, so
        # conjugation commutes with the derivative
        return Dual(_conj(self.val), tuple(_conj(a) for a in self.grad))

    def sqrt(self):
        s = gsqrt(self.val)
        half_inv = 0.5 / s
        return Dual(s, tuple(a * half_inv for a in self.grad))

    def __repr__(self):
        return f"Dual({self.val!r}, {self.grad!r})"


def _conj(x):
    if isinstance(x, Dual):
        return x.conjugate()
    return np.conj(x)


def gsqrt(x):
    """sqrt that dispatches over floats, complex and Dual."""
    if isinstance(x, Dual):
        return x.sqrt()
    return np.sqrt(x)


def gconj(x):
    return _conj(x)


def value(x):
    """Strip one dual layer."""
    return x.val if isinstance(x, Dual) else x


def grad_component(x, a: int):
    if isinstance(x, Dual):
        return x.grad[a]
    return 0.0


def seed(q) -> Tuple[Dual, Dual, Dual]:
    """Dual-augment a momentum triple with unit gradient seeds."""
    e = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    return tuple(Dual(q[a], e[a]) for a in range(3))


@dataclass(frozen=True)
class DerivativeEngine:
    """Derivative of matrix-valued momentum functions.

    mode 'dual' is forward-mode (machine-exact on the closed forms used
    here); 'fd' is central finite differences with step h, kept as the
    independent cross-check.
    """

    mode: str = "dual"
    h: float = 1e-5

    def gradient(self, fn, q):
        """Return [d fn / d q_a for a in 0..2], each shaped like fn(q).

        fn maps a momentum triple to a numpy array (possibly object dtype
        holding Duals already, for nested differentiation).
        """
        if self.mode == "dual":
            out = fn(seed(q))
            mats = []
            for a in range(3):
                take = np.vectorize(lambda x, a=a: grad_component(x, a),
                                    otypes=[object])
                g = take(out)
                mats.append(_try_complex(g))
            return mats
        if self.mode == "fd":
            mats = []
            for a in range(3):
                qp = list(q)
                qm = list(q)
                qp[a] = qp[a] + self.h
                qm[a] = qm[a] - self.h
                mats.append((np.asarray(fn(tuple(qp)), dtype=complex)
                             - np.asarray(fn(tuple(qm)), dtype=complex))
                            / (2.0 * self.h))
            return mats
        raise ValueError(f"unknown derivative mode {self.mode!r}")


def _try_complex(arr):
    try:
        return np.asarray(arr, dtype=complex)
    except (TypeError, ValueError):
        return arr
