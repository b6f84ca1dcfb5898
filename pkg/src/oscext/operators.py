"""Linear differential operators with rational-function coefficients.

An operator is stored densely as coefficients a_0, ..., a_N by derivative
order, meaning sum_j a_j(x) d^j/dx^j.  Composition uses the Leibniz rule;
equality is structural on the normalized coefficient list, which works
because rational functions are kept in normal form.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .algebra import (
    GR_ZERO,
    GaugedRational,
    Polynomial,
    RationalFunction,
    RF_ZERO,
    _SCALAR_TYPES,
)


@lru_cache(maxsize=4096)
def _coefficient_chains(op: "LinearDifferentialOperator", depth: int):
    """Derivative chains of an operator's coefficients, memoized so that
    repeated compositions against the same operator share the work."""
    out = []
    for c in op.coeffs:
        chain = [c]
        for _ in range(depth):
            chain.append(chain[-1].derivative())
        out.append(tuple(chain))
    return tuple(out)


def _coeff(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class LinearDifferentialOperator:
    """Finite-order operator sum_j a_j(x) * d^j/dx^j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def identity(cls) -> "LinearDifferentialOperator":
        return cls((1,))

    @classmethod
    def derivative(cls) -> "LinearDifferentialOperator":
        return cls((0, 1))

    @classmethod
    def multiplication_by(cls, f) -> "LinearDifferentialOperator":
        return cls((f,))

    @property
    def order(self) -> int:
        """Order of the operator; the zero operator reports -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> RationalFunction:
        return self.coeffs[-1] if self.coeffs else RF_ZERO

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, order: int) -> RationalFunction:
        if 0 <= order < len(self.coeffs):
            return self.coeffs[order]
        return RF_ZERO

    def apply(self, f: GaugedRational) -> GaugedRational:
        """Evaluate the operator on a gauged rational; the gauge is preserved."""
        if self.is_zero or f.is_zero:
            return GR_ZERO
        chain = [f]
        for _ in range(self.order):
            chain.append(chain[-1].derivative())
        acc = GR_ZERO
        for a, g in zip(self.coeffs, chain):
            if a.is_zero:
                continue
            acc = acc + g * a
        return acc

    def compose(self, other: "LinearDifferentialOperator") -> "LinearDifferentialOperator":
        """Operator composition self(other(y)) via the Leibniz expansion."""
        if self.is_zero or other.is_zero:
            return LinearDifferentialOperator()
        n = self.order
        chains = _coefficient_chains(other, n)
        out = [RF_ZERO] * (n + other.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(other.order + 1):
                chain = chains[j]
                for low in range(i + 1):
                    b_deriv = chain[i - low]
                    if b_deriv.is_zero:
                        continue
                    term = a * b_deriv
                    c = comb(i, low)
                    if c != 1:
                        term = term * c
                    out[low + j] = out[low + j] + term
        return LinearDifferentialOperator(out)

    def __pow__(self, n: int) -> "LinearDifferentialOperator":
        if n < 0:
            raise ValueError("negative operator power")
        out = LinearDifferentialOperator.identity()
        for _ in range(n):
            out = out.compose(self)
        return out

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return LinearDifferentialOperator(out)

    __radd__ = __add__

    def __neg__(self):
        return LinearDifferentialOperator([-c for c in self.coeffs])

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        """Coefficientwise scaling by a scalar, polynomial or rational function."""
        if isinstance(other, (RationalFunction, Polynomial, *_SCALAR_TYPES)):
            return LinearDifferentialOperator([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, LinearDifferentialOperator):
            return other
        if isinstance(other, (RationalFunction, Polynomial, *_SCALAR_TYPES)):
            return LinearDifferentialOperator((other,))
        return None

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self.coeffs == q.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j in range(self.order, -1, -1):
            c = self.coeffs[j]
            if c.is_zero:
                continue
            if j == 0:
                parts.append(f"({c})")
            else:
                ds = "D" if j == 1 else f"D^{j}"
                parts.append(ds if c == 1 else f"({c})*{ds}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LinearDifferentialOperator({list(self.coeffs)!r})"

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "LinearDifferentialOperator":
        return cls([RationalFunction.from_json(c) for c in data])
