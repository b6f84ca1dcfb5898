"""Rational extension potentials, Hamiltonians, eigenfunctions and
regularity.

The extension attached to a Maya diagram M is the oscillator potential
plus a rational term built from the Wronskian polynomial of M.  Bound
states are decided combinatorially (empty boxes of a regular diagram);
no numerical analysis is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    GaugedRational,
    Polynomial,
    RationalFunction,
    X,
    wronskian,
)
from .wronskians import seed_function, wronskian_polynomial
from .maya import MayaDiagram
from .operators import LinearDifferentialOperator

_X2 = X * X


@dataclass(frozen=True)
class RationalExtension:
    """A diagram together with its Wronskian polynomial, potential and
    Hamiltonian (order 2, leading coefficient -1, no first-order term)."""

    diagram: MayaDiagram
    h_polynomial: Polynomial
    potential: RationalFunction
    hamiltonian: LinearDifferentialOperator


@dataclass(frozen=True)
class EigenState:
    """Solution data at level k: gauge sign, the function itself, and
    whether it is a genuine bound state of a regular extension."""

    k: int
    epsilon: int
    function: GaugedRational
    bound: bool


@lru_cache(maxsize=8192)
def rational_extension(diagram: MayaDiagram) -> RationalExtension:
    h = wronskian_polynomial(diagram)
    sigma = diagram.index
    hp = h.derivative()
    hpp = hp.derivative()
    h2 = h * h
    # the +2*sigma constant is what makes translates satisfy
    # potential(M+n) = potential(M) + 2n exactly
    num = _X2 * h2 + 2 * (hp * hp) - 2 * (hpp * h) + (2 * sigma) * h2
    pot = RationalFunction(num, h2)
    ham = LinearDifferentialOperator((pot, 0, -1))
    return RationalExtension(diagram, h, pot, ham)


def potential(diagram: MayaDiagram) -> RationalFunction:
    """Oscillator potential plus the rational deformation term of M."""
    return rational_extension(diagram).potential


def potential_from_wronskian(diagram: MayaDiagram) -> RationalFunction:
    """Independent route: x^2 - 2 (log W)'' computed in gauged arithmetic.

    W is the raw (gauge-carrying) Wronskian of the seed functions; the
    second logarithmic derivative is (W''W - W'^2)/W^2, whose gauge
    factors cancel, leaving an honest rational function.
    """
    w = wronskian(seed_function(k) for k in diagram.index_set)
    w1 = w.derivative()
    w2 = w1.derivative()
    ratio = (w2 * w - w1 * w1) / (w * w)
    if ratio.gauge != 0:
        raise RuntimeError("logarithmic derivative kept a gauge factor")
    return RationalFunction(_X2) - 2 * ratio.body


def schrodinger_operator(diagram: MayaDiagram) -> LinearDifferentialOperator:
    """-d^2/dx^2 + potential, as an exact operator."""
    return rational_extension(diagram).hamiltonian


@lru_cache(maxsize=8192)
def eigenfunction(diagram: MayaDiagram, k: int) -> EigenState:
    """Formal eigenfunction at eigenvalue 2k+1.

    The function carries gauge +1 when k is occupied and -1 when it is
    empty, with body the Wronskian polynomial of the flipped diagram over
    that of the diagram itself.  No normalization is applied.  Occupied
    levels give non-normalizable solutions; empty levels are bound exactly
    when the diagram is regular.
    """
    eps = +1 if k in diagram else -1
    body = RationalFunction(
        wronskian_polynomial(diagram.flip(k)),
        wronskian_polynomial(diagram),
    )
    bound = (eps == -1) and is_regular(diagram)
    return EigenState(k, eps, GaugedRational(eps, body), bound)


def is_regular(diagram: MayaDiagram) -> bool:
    """True when every finite filled block has even length, which is
    exactly when the Wronskian polynomial has no real zeros."""
    return all(
        length % 2 == 0
        for length in diagram.block_coordinates().filled_block_lengths()
    )


def bound_states(diagram: MayaDiagram, kmin: int, kmax: int) -> list[int]:
    """All bound-state labels in [kmin, kmax]: the empty boxes of M.

    Refuses non-regular diagrams, whose Hamiltonians are not self-adjoint.
    """
    if kmin > kmax:
        raise ValueError(f"empty level window [{kmin}, {kmax}]")
    if not is_regular(diagram):
        raise ValueError(
            f"{diagram} is singular (odd filled block); "
            "its extension is not self-adjoint"
        )
    return [k for k in range(kmin, kmax + 1) if k not in diagram]


def exceptional_hermite(diagram: MayaDiagram, k: int) -> Polynomial:
    """Numerator polynomial of the bound state at level k."""
    if not is_regular(diagram):
        raise ValueError(f"{diagram} is singular; no bound states")
    if k in diagram:
        raise ValueError(f"level {k} is occupied in {diagram}")
    return wronskian_polynomial(diagram.flip(k))


def vanishing_part(diagram: MayaDiagram) -> RationalFunction:
    """potential - x^2 - 2*index: the rational term that decays at infinity."""
    u = potential(diagram)
    return u - RationalFunction(_X2) - 2 * diagram.index
