"""Intertwining operators, arrows, ladder operators and their syzygies.

An arrow is a diagram plus a flip multiset; it is realized as a monic
differential operator A satisfying A T_src = T_tgt A, built as a ratio of
Wronskians of eigenfunctions.  Ladder operators are the arrows from M to
M+n; the composition algebra of single-step ladders against the minimal
ladder produces the syzygy identities checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import QQ, RF_ONE, RationalFunction, X, det_poly
from .extension import eigenfunction, schrodinger_operator
from .wronskians import wronskian_polynomial
from .maya import IntegerMultiset, MayaDiagram
from .operators import LinearDifferentialOperator


@dataclass(frozen=True)
class Arrow:
    """Morphism data: a source diagram and a multiset of flips."""

    source: MayaDiagram
    flips: IntegerMultiset

    @property
    def target(self) -> MayaDiagram:
        return self.source.multi_flip(self.flips)

    @property
    def is_primitive(self) -> bool:
        """True when the flips form a genuine set (no repeated flip)."""
        return all(m == 1 for _, m in self.flips.entries)

    def to_operator(self) -> LinearDifferentialOperator:
        return intertwiner_multiset(self.source, self.flips)

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "flips": self.flips.to_json()}


@dataclass(frozen=True)
class LadderResult:
    """A ladder operator between a Hamiltonian and its shift by 2n."""

    operator: LinearDifferentialOperator
    order: int
    flip_set: tuple[int, ...]
    shift: int


@dataclass(frozen=True)
class Syzygy:
    """Bookkeeping for the identity (single-step ladder)^n = minimal
    ladder composed with a polynomial in the Hamiltonian."""

    multiset: IntegerMultiset
    flip_set: tuple[int, ...]
    even_part: IntegerMultiset
    polynomial_roots: tuple[int, ...]
    identity_holds: bool


def intertwiner(diagram: MayaDiagram, flips) -> LinearDifferentialOperator:
    """Monic operator of order |flips| built from Wronskian ratios.

    The coefficient of the j-th derivative is a signed minor of the
    eigenfunction derivative matrix over its base Wronskian; the gauge
    factors are column-constant and cancel, so every coefficient is a
    certified rational function.
    """
    ks = tuple(sorted(flips))
    if len(set(ks)) != len(ks):
        raise ValueError(
            "repeated flips form a multiset; use intertwiner_multiset"
        )
    return _intertwiner_cached(diagram, ks)


@lru_cache(maxsize=8192)
def _intertwiner_cached(diagram: MayaDiagram, ks: tuple[int, ...]):
    # Every seed has body (numerator)/H with the same H, so the i-th body
    # derivative is Q_i/H^(i+1) with polynomial Q_i; the minors then split
    # into polynomial determinants times powers of H, and only the final
    # coefficient ratios touch rational arithmetic.
    size = len(ks)
    if size == 0:
        return LinearDifferentialOperator.identity()
    h = wronskian_polynomial(diagram)
    h_prime = h.derivative()
    columns = []
    for k in ks:
        eps = 1 if k in diagram else -1
        shear = X * eps
        q = wronskian_polynomial(diagram.flip(k))
        chain = [q]
        for i in range(size):
            q = h * (q.derivative() + q * shear) - (i + 1) * (h_prime * q)
            chain.append(q)
        columns.append(chain)
    dets = []
    for skip in range(size + 1):
        rows = [
            [columns[j][r] for j in range(size)]
            for r in range(size + 1)
            if r != skip
        ]
        dets.append(det_poly(rows))
    base = dets[size]
    if base.is_zero:
        raise RuntimeError("degenerate seed family: base Wronskian vanishes")
    coeffs = []
    for j in range(size):
        c = RationalFunction(dets[j], base * h ** (size - j))
        if (j + size) % 2:
            c = -c
        coeffs.append(c)
    coeffs.append(RF_ONE)
    return LinearDifferentialOperator(coeffs)


def shifted_hamiltonian_factor(diagram: MayaDiagram, k: int) -> LinearDifferentialOperator:
    """The operator (2k+1) - T for the diagram's Hamiltonian T."""
    return LinearDifferentialOperator.identity() * (2 * k + 1) - schrodinger_operator(diagram)


def intertwiner_multiset(diagram: MayaDiagram, flips) -> LinearDifferentialOperator:
    """Arrow realization for a flip multiset.

    The odd-multiplicity support acts as a genuine intertwiner; each
    leftover pair contributes a right factor (2k+1) - T in the source
    Hamiltonian.  Order is |odd part| + 2 * |halved remainder|.
    """
    ms = IntegerMultiset(flips)
    odd, halves = ms.decompose()
    op = _intertwiner_cached(diagram, odd)
    for k in halves:
        op = op.compose(shifted_hamiltonian_factor(diagram, k))
    return op


def compose_arrows(outer: Arrow, inner: Arrow) -> Arrow:
    """Categorical composition: flip multisets unite over the inner source."""
    if outer.source != inner.target:
        raise ValueError(
            f"cannot compose: outer source {outer.source} is not "
            f"inner target {inner.target}"
        )
    return Arrow(inner.source, inner.flips.union(outer.flips))


def verify_intertwining(diagram: MayaDiagram, flips) -> bool:
    """Check A T_src = T_tgt A exactly for the arrow (diagram, flips)."""
    return _verify_intertwining_cached(diagram, IntegerMultiset(flips))


@lru_cache(maxsize=None)
def _verify_intertwining_cached(diagram: MayaDiagram, ms: IntegerMultiset) -> bool:
    op = intertwiner_multiset(diagram, ms)
    lhs = op.compose(schrodinger_operator(diagram))
    rhs = schrodinger_operator(diagram.multi_flip(ms)).compose(op)
    return lhs == rhs


def verify_functor(diagram: MayaDiagram, flips1, flips2) -> bool:
    """Check that realization turns arrow composition into operator
    composition: A_{M2,K2} A_{M1,K1} = A_{M1, K1 u K2}."""
    return _verify_functor_cached(
        diagram, IntegerMultiset(flips1), IntegerMultiset(flips2)
    )


@lru_cache(maxsize=None)
def _verify_functor_cached(
    diagram: MayaDiagram, k1: IntegerMultiset, k2: IntegerMultiset
) -> bool:
    mid = diagram.multi_flip(k1)
    lhs = intertwiner_multiset(mid, k2).compose(intertwiner_multiset(diagram, k1))
    rhs = intertwiner_multiset(diagram, k1.union(k2))
    return lhs == rhs


def ladder(diagram: MayaDiagram, n: int) -> LadderResult:
    """The primitive ladder operator shifting the spectrum by 2n."""
    flip_set = diagram.ladder_flip_set(n)
    op = _intertwiner_cached(diagram, flip_set)
    return LadderResult(op, len(flip_set), flip_set, n)


def ladder_order(diagram: MayaDiagram, n: int) -> int:
    """Predicted ladder order n + 2*sum of component genera, n >= 1."""
    if n < 1:
        raise ValueError("the order formula requires n >= 1")
    parts = diagram.modular_decompose(n)
    return n + 2 * sum(p.block_coordinates().genus for p in parts)


def syzygy(diagram: MayaDiagram, n: int) -> Syzygy:
    """Relate the n-th power of the single-step ladder to the minimal one.

    Accumulates the single-step flip sets shifted through n steps,
    splits off the even part, and verifies
        L1^n = Ln o prod_{k in even part} ((2k+1) - T)
    as an exact operator identity.
    """
    if n < 1:
        raise ValueError("syzygy requires n >= 1")
    step = diagram.ladder_flip_set(1)
    acc = IntegerMultiset()
    for j in range(n):
        acc = acc.union(IntegerMultiset(k + j for k in step))
    odd, halves = acc.decompose()
    flip_set = diagram.ladder_flip_set(n)
    if set(odd) != set(flip_set):
        raise RuntimeError(
            f"odd part {odd} disagrees with the ladder flip set {flip_set}"
        )
    lhs = ladder(diagram, 1).operator ** n
    rhs = ladder(diagram, n).operator
    for k in halves:
        rhs = rhs.compose(shifted_hamiltonian_factor(diagram, k))
    roots = tuple(2 * k + 1 for k in halves)
    return Syzygy(acc, flip_set, halves, roots, lhs == rhs)


def ladder_coefficient(diagram: MayaDiagram, n: int, k: int):
    """Exact proportionality constant of the ladder action on level k.

    Applies the ladder to the level-k eigenfunction and divides by the
    level-(k-n) eigenfunction; the quotient must be a rational constant
    (zero exactly when the image level is occupied).
    """
    if k in diagram:
        raise ValueError(f"level {k} is occupied in {diagram}")
    result = ladder(diagram, n).operator.apply(eigenfunction(diagram, k).function)
    if (k - n) in diagram:
        if not result.is_zero:
            raise RuntimeError(
                "ladder image should vanish on an occupied target level"
            )
        return QQ(0)
    quotient = result / eigenfunction(diagram, k - n).function
    if quotient.gauge != 0 or not quotient.body.is_polynomial \
            or quotient.body.num.degree > 0:
        raise RuntimeError(
            f"ladder action is not proportional: quotient {quotient}"
        )
    return quotient.body.num.coefficient(0)


def first_order_factorization(
    diagram: MayaDiagram, flips, order=None
) -> list[Arrow]:
    """Chain of single-flip arrows through the intermediate diagrams.

    Returns the arrows in application order (first applied first); for a
    set of flips and any permutation the composed operators multiply out
    to the full intertwiner exactly.
    """
    ks = tuple(sorted(flips))
    if len(set(ks)) != len(ks):
        raise ValueError("factorization requires a set of flips")
    if order is None:
        order = ks
    else:
        order = tuple(order)
        if tuple(sorted(order)) != ks:
            raise ValueError(f"{order} is not a permutation of {ks}")
    arrows = []
    current = diagram
    for k in order:
        arrows.append(Arrow(current, IntegerMultiset((k,))))
        current = current.flip(k)
    return arrows
