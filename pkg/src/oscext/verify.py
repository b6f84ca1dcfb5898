"""Bounded-family invariant suite.

Every check sweeps a deterministic family of diagrams (all index sets
inside a symmetric window, up to a size cap) and verifies one exact
identity, reporting the number of cases and the first counterexample if
any.  The CLI's verify-all command runs the whole suite; the acceptance
tests reuse the same checks at their own (larger) bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import QQ, sturm_real_roots
from .extension import (
    eigenfunction,
    is_regular,
    potential,
    potential_from_wronskian,
    schrodinger_operator,
)
from .wronskians import normalized_wronskian, pseudo_wronskian, wronskian_polynomial
from .intertwining import (
    intertwiner,
    ladder_coefficient,
    ladder_order,
    syzygy,
    verify_functor,
    verify_intertwining,
)
from .maya import IntegerMultiset, MayaDiagram


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    passed: bool
    detail: str = ""

    def __str__(self):
        mark = "pass" if self.passed else "FAIL"
        line = f"[{mark}] {self.name} ({self.cases} cases)"
        if self.detail:
            line += f": {self.detail}"
        return line


@lru_cache(maxsize=None)
def diagram_family(window: int, max_size: int) -> tuple[MayaDiagram, ...]:
    """All diagrams with index set inside [-window, window] and at most
    max_size elements, in a fixed deterministic order."""
    positions = range(-window, window + 1)
    out = []
    for size in range(max_size + 1):
        for ks in combinations(positions, size):
            out.append(MayaDiagram(ks))
    return tuple(out)


def _fail(name, cases, detail):
    return CheckResult(name, cases, False, detail)


def check_flip_involution(window: int, max_size: int,
                          positions=(-6, -1, 0, 3)) -> CheckResult:
    name = "flip involution"
    cases = 0
    for m in diagram_family(window, max_size):
        for k in positions:
            cases += 1
            if m.flip(k).flip(k) != m:
                return _fail(name, cases, f"M={m}, k={k}")
    return CheckResult(name, cases, True)


def check_flip_commutation(window: int, max_size: int,
                           pairs=((-2, 0), (5, -6), (1, 3))) -> CheckResult:
    name = "flip commutation"
    cases = 0
    for m in diagram_family(window, max_size):
        for j, k in pairs:
            cases += 1
            if m.flip(j).flip(k) != m.flip(k).flip(j):
                return _fail(name, cases, f"M={m}, j={j}, k={k}")
    return CheckResult(name, cases, True)


def check_edge_property(window: int, max_size: int) -> CheckResult:
    """multi_flip(M1, M1 (-) M2) = M2 over all ordered pairs."""
    name = "edge property"
    cases = 0
    fam = diagram_family(window, max_size)
    for m1 in fam:
        for m2 in fam:
            cases += 1
            edge = m1.symmetric_difference(m2)
            if m1.multi_flip(edge) != m2:
                return _fail(name, cases, f"M1={m1}, M2={m2}")
    return CheckResult(name, cases, True)


def check_index_shift(window: int, max_size: int,
                      shifts=range(-3, 4)) -> CheckResult:
    name = "index shift under translation"
    cases = 0
    for m in diagram_family(window, max_size):
        for n in shifts:
            cases += 1
            if m.translate(n).index != m.index + n:
                return _fail(name, cases, f"M={m}, n={n}")
    return CheckResult(name, cases, True)


def check_block_property(window: int, max_size: int) -> CheckResult:
    """Flipping at the block coordinates translates by one, and the block
    coordinates reconstruct the diagram."""
    name = "block coordinates"
    cases = 0
    for m in diagram_family(window, max_size):
        cases += 1
        bc = m.block_coordinates()
        if m.multi_flip(bc.coords) != m.translate(1):
            return _fail(name, cases, f"M={m}: flip at {bc.coords} is not M+1")
        if MayaDiagram.from_block_coordinates(bc) != m:
            return _fail(name, cases, f"M={m}: blocks {bc.coords} do not rebuild M")
    return CheckResult(name, cases, True)


def check_frobenius(window: int, max_size: int) -> CheckResult:
    name = "Frobenius symbol"
    cases = 0
    for m in diagram_family(window, max_size):
        cases += 1
        fs = m.frobenius_symbol()
        if fs.index_set() != m.index_set or fs.index != m.index:
            return _fail(name, cases, f"M={m}: symbol {fs}")
    return CheckResult(name, cases, True)


def check_multiset_law(window: int, max_size: int,
                       multisets=({0: 2}, {0: 1, 1: 2}, {-1: 3},
                                  {-2: 2, 0: 2}, {2: 1})) -> CheckResult:
    """Multi-flips only see the odd-multiplicity support."""
    name = "multiset flip law"
    cases = 0
    sets = [IntegerMultiset(ms) for ms in multisets]
    for m in diagram_family(window, max_size):
        for ms in sets:
            cases += 1
            odd, _ = ms.decompose()
            if m.multi_flip(ms) != m.multi_flip(odd):
                return _fail(name, cases, f"M={m}, K={ms}")
            if ms.is_even and m.multi_flip(ms) != m:
                return _fail(name, cases, f"even K={ms} moved M={m}")
    return CheckResult(name, cases, True)


def check_canonical_form(window: int, max_size: int,
                         shifts=(-2, 1, 3)) -> CheckResult:
    name = "canonical unlabelled form"
    cases = 0
    for m in diagram_family(window, max_size):
        canon, shift = m.canonical_unlabelled()
        cases += 1
        if canon.index != 0 or m.translate(shift) != canon:
            return _fail(name, cases, f"M={m}")
        for n in shifts:
            cases += 1
            if m.translate(n).canonical_unlabelled()[0] != canon:
                return _fail(name, cases, f"M={m}, n={n}")
    return CheckResult(name, cases, True)


def check_wronskian_agreement(window: int, max_size: int) -> CheckResult:
    """Wronskian route equals the pseudo-Wronskian route exactly."""
    name = "Wronskian = pseudo-Wronskian"
    cases = 0
    for m in diagram_family(window, max_size):
        cases += 1
        if wronskian_polynomial(m) != pseudo_wronskian(m):
            return _fail(name, cases, f"M={m}")
    return CheckResult(name, cases, True)


def check_normalization_invariance(window: int, max_size: int,
                                   max_shift: int = 3) -> CheckResult:
    name = "normalized Wronskian translation invariance"
    cases = 0
    for m in diagram_family(window, max_size):
        base = normalized_wronskian(m)
        for n in range(-max_shift, max_shift + 1):
            cases += 1
            if normalized_wronskian(m.translate(n)) != base:
                return _fail(name, cases, f"M={m}, n={n}")
    return CheckResult(name, cases, True)


def check_eigen_relation(window: int, max_size: int,
                         kmin: int = -4, kmax: int = 6) -> CheckResult:
    """T psi = (2k+1) psi exactly, for every level in the window."""
    name = "eigenfunction relation"
    cases = 0
    for m in diagram_family(window, max_size):
        op = schrodinger_operator(m)
        for k in range(kmin, kmax + 1):
            cases += 1
            f = eigenfunction(m, k).function
            if op.apply(f) != f * (2 * k + 1):
                return _fail(name, cases, f"M={m}, k={k}")
    return CheckResult(name, cases, True)


def check_covariance(window: int, max_size: int,
                     max_shift: int = 3) -> CheckResult:
    name = "potential translation covariance"
    cases = 0
    for m in diagram_family(window, max_size):
        base = potential(m)
        for n in range(-max_shift, max_shift + 1):
            cases += 1
            if potential(m.translate(n)) != base + 2 * n:
                return _fail(name, cases, f"M={m}, n={n}")
    return CheckResult(name, cases, True)


def check_potential_dual_route(window: int, max_size: int) -> CheckResult:
    name = "potential: log-derivative route agreement"
    cases = 0
    for m in diagram_family(window, max_size):
        cases += 1
        if potential(m) != potential_from_wronskian(m):
            return _fail(name, cases, f"M={m}")
    return CheckResult(name, cases, True)


def check_regularity_equivalence(window: int, max_size: int) -> CheckResult:
    """Block parity (combinatorial) matches a zero Sturm count (analytic)."""
    name = "regularity: block parity vs Sturm count"
    cases = 0
    for m in diagram_family(window, max_size):
        cases += 1
        roots = sturm_real_roots(wronskian_polynomial(m))
        if is_regular(m) != (roots == 0):
            return _fail(name, cases, f"M={m}: {roots} real roots")
    return CheckResult(name, cases, True)


def _flip_sets(window: int, max_size: int):
    positions = range(-window, window + 1)
    for size in range(1, max_size + 1):
        yield from combinations(positions, size)


def check_intertwining_family(window: int, max_size: int,
                              k_window: int | None = None,
                              k_max_size: int | None = None) -> CheckResult:
    """Monic order-|K| contract plus the exact intertwining identity."""
    name = "intertwining identity and order contract"
    k_window = window if k_window is None else k_window
    k_max_size = max_size if k_max_size is None else k_max_size
    cases = 0
    flip_sets = list(_flip_sets(k_window, k_max_size))
    for m in diagram_family(window, max_size):
        for ks in flip_sets:
            cases += 1
            op = intertwiner(m, ks)
            if not op.is_monic or op.order != len(ks):
                return _fail(name, cases, f"M={m}, K={ks}: order/monic broken")
            if not verify_intertwining(m, ks):
                return _fail(name, cases, f"M={m}, K={ks}")
    return CheckResult(name, cases, True)


def check_intertwiner_translation(window: int, max_size: int,
                                  k_window: int | None = None,
                                  k_max_size: int | None = None,
                                  shift: int = 1) -> CheckResult:
    """A at (M+n, K+n) is the same operator as A at (M, K)."""
    name = "intertwiner translation invariance"
    k_window = window if k_window is None else k_window
    k_max_size = max_size if k_max_size is None else k_max_size
    cases = 0
    flip_sets = list(_flip_sets(k_window, k_max_size))
    for m in diagram_family(window, max_size):
        shifted_m = m.translate(shift)
        for ks in flip_sets:
            cases += 1
            shifted_k = tuple(k + shift for k in ks)
            if intertwiner(shifted_m, shifted_k) != intertwiner(m, ks):
                return _fail(name, cases, f"M={m}, K={ks}, n={shift}")
    return CheckResult(name, cases, True)


#: (K1, K2) pairs exercising disjoint, overlapping, repeated and even
#: multisets, negative flips, and the one-gap syzygy building block.
FUNCTOR_CATALOG = (
    ({0: 1}, {1: 1}),
    ({0: 1}, {0: 1}),
    ({1: 1}, {0: 1}),
    ({0: 1, 1: 1}, {0: 1}),
    ({0: 2}, {0: 1}),
    ({-1: 1}, {-1: 1, 0: 1}),
    ({-2: 1, 0: 1}, {-1: 1}),
    ({0: 1, 2: 1}, {1: 1, 2: 1}),
    ({-1: 2}, {1: 2}),
    ({-2: 1, -1: 1, 0: 1}, {-1: 1, 0: 1, 1: 1}),
    ({1: 1}, {1: 3}),
    ({-3: 1, 1: 1}, {-3: 1, 1: 1}),
)


def check_functor_law(window: int, max_size: int,
                      catalog=FUNCTOR_CATALOG) -> CheckResult:
    name = "functor law (multiset composition)"
    cases = 0
    pairs = [(IntegerMultiset(a), IntegerMultiset(b)) for a, b in catalog]
    for m in diagram_family(window, max_size):
        for k1, k2 in pairs:
            cases += 1
            if not verify_functor(m, k1, k2):
                return _fail(name, cases, f"M={m}, K1={k1}, K2={k2}")
    return CheckResult(name, cases, True)


def check_order_theorem(window: int, max_size: int,
                        n_max: int = 4) -> CheckResult:
    """|(M+n)(-)M| = n + 2*sum of component genera, and the flip set is
    the union of the rescaled component block coordinates."""
    name = "ladder order theorem"
    cases = 0
    for m in diagram_family(window, max_size):
        for n in range(1, n_max + 1):
            cases += 1
            flips = m.ladder_flip_set(n)
            if len(flips) != ladder_order(m, n):
                return _fail(name, cases, f"M={m}, n={n}: cardinality")
            union = set()
            for i, part in enumerate(m.modular_decompose(n)):
                union.update(n * b + i for b in part.block_coordinates().coords)
            if union != set(flips):
                return _fail(name, cases, f"M={m}, n={n}: block union")
    return CheckResult(name, cases, True)


def _syzygy_diagrams():
    return (
        MayaDiagram(),
        MayaDiagram([-1]),
        MayaDiagram([-2]),
        MayaDiagram([-3]),
        MayaDiagram([1, 2]),
    )


def check_syzygies(n_max: int = 3, diagrams=None) -> CheckResult:
    name = "ladder syzygies"
    cases = 0
    for m in diagrams or _syzygy_diagrams():
        for n in range(1, n_max + 1):
            cases += 1
            s = syzygy(m, n)
            if not s.identity_holds:
                return _fail(name, cases, f"M={m}, n={n}")
    return CheckResult(name, cases, True)


def check_ladder_coefficients(n_max: int = 3, k_max: int = 6) -> CheckResult:
    """Trivial-diagram coefficients match the closed product, and the
    image of an occupied target level is annihilated."""
    name = "ladder coefficients"
    trivial = MayaDiagram()
    cases = 0
    for n in range(1, n_max + 1):
        for k in range(0, k_max + 1):
            cases += 1
            c = ladder_coefficient(trivial, n, k)
            if k < n:
                expected = QQ(0)
            else:
                expected = QQ(2) ** n
                for i in range(k - n + 1, k + 1):
                    expected *= i
            if c != expected:
                return _fail(name, cases, f"n={n}, k={k}: {c} != {expected}")
    return CheckResult(name, cases, True)


def default_suite(window: int = 4, max_size: int = 3,
                  max_shift: int = 3) -> list[CheckResult]:
    """The full invariant suite at the CLI's bounded family."""
    edge_size = min(max_size, 2)
    return [
        check_flip_involution(window, max_size),
        check_flip_commutation(window, max_size),
        check_edge_property(window, edge_size),
        check_index_shift(window, max_size, range(-max_shift, max_shift + 1)),
        check_block_property(window, max_size),
        check_frobenius(window, max_size),
        check_multiset_law(window, max_size),
        check_canonical_form(window, max_size),
        check_wronskian_agreement(window, max_size),
        check_normalization_invariance(window, max_size, max_shift),
        check_eigen_relation(window, max_size),
        check_covariance(window, max_size, max_shift),
        check_potential_dual_route(window, max_size),
        check_regularity_equivalence(window, max_size),
        check_intertwining_family(window, max_size),
        check_intertwiner_translation(window, max_size),
        check_functor_law(window, max_size),
        check_order_theorem(window, max_size, max_shift),
        check_syzygies(max_shift),
        check_ladder_coefficients(max_shift),
    ]
