"""Hermite polynomials, their conjugates, oscillator seed functions, and
Wronskian polynomials of Maya diagrams.

The Wronskian polynomial of a diagram M is the Wronskian of the seed
functions over M's index set with the exponential gauge stripped; the
pseudo-Wronskian computes the same polynomial as a purely polynomial
determinant built from the Frobenius symbol.  Both routes are kept
independent so they can check each other.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .algebra import (
    ONE,
    QQ,
    GaugedRational,
    Polynomial,
    X,
    det_poly,
    wronskian,
)
from .maya import MayaDiagram


class HermiteCache:
    """Grow-only memo table for Hermite and conjugate Hermite polynomials.

    Entries follow the derivative recurrences
        H_{n+1} = 2x H_n - H_n'        (physicists' Hermite)
        Ht_{n+1} = 2x Ht_n + Ht_n'     (conjugate: all signs positive)
    Growth happens under a lock; reads of already-present entries never
    block, so the table is safe to share between threads.
    """

    def __init__(self):
        self._h = [ONE]
        self._ht = [ONE]
        self._lock = threading.Lock()

    def hermite(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("Hermite degree must be non-negative")
        if n >= len(self._h):
            with self._lock:
                while len(self._h) <= n:
                    last = self._h[-1]
                    self._h.append(2 * X * last - last.derivative())
        return self._h[n]

    def conjugate(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("Hermite degree must be non-negative")
        if n >= len(self._ht):
            with self._lock:
                while len(self._ht) <= n:
                    last = self._ht[-1]
                    self._ht.append(2 * X * last + last.derivative())
        return self._ht[n]


_cache = HermiteCache()


def hermite(n: int) -> Polynomial:
    """Physicists' Hermite polynomial of degree n (leading coefficient 2^n)."""
    return _cache.hermite(n)


def conjugate_hermite(n: int) -> Polynomial:
    """Conjugate Hermite polynomial: the coefficients of H_n made positive."""
    return _cache.conjugate(n)


def seed_function(n: int) -> GaugedRational:
    """Oscillator solution with eigenvalue 2n+1.

    Non-negative n gives the bound state e^(-x^2/2) H_n; negative n gives
    the non-normalizable solution e^(+x^2/2) Ht_{-n-1}.
    """
    if n >= 0:
        return GaugedRational(-1, hermite(n))
    return GaugedRational(+1, conjugate_hermite(-n - 1))


@lru_cache(maxsize=None)
def wronskian_polynomial(diagram: MayaDiagram) -> Polynomial:
    """Wronskian of the seed functions over the index set, gauge stripped.

    The seeds enter in ascending index order.  The Wronskian's gauge must
    come out as minus the diagram index; anything else means the encoding
    is corrupted.
    """
    ks = diagram.index_set
    if not ks:
        return ONE
    w = wronskian(seed_function(k) for k in ks)
    if w.gauge != -diagram.index:
        raise RuntimeError(
            f"Wronskian gauge {w.gauge} does not cancel index {diagram.index}"
        )
    return w.body.as_polynomial()


@lru_cache(maxsize=None)
def pseudo_wronskian(diagram: MayaDiagram) -> Polynomial:
    """Purely polynomial determinant equal to the Wronskian polynomial.

    Rows are built from the Frobenius symbol (s_1..s_r | t_1..t_q): first
    one row per s_i (largest first) of conjugate Hermite polynomials with
    degree increasing along the row, then one row per t_j (smallest t
    first) of H_{t_j} and its successive derivatives.
    """
    fs = diagram.frobenius_symbol()
    size = fs.size
    if size == 0:
        return ONE
    rows = []
    for s in fs.s:
        rows.append([conjugate_hermite(s + c) for c in range(size)])
    for t in reversed(fs.t):
        row = [hermite(t)]
        for _ in range(size - 1):
            row.append(row[-1].derivative())
        rows.append(row)
    return det_poly(rows)


def normalized_wronskian(diagram: MayaDiagram) -> Polynomial:
    """Translation-invariant rescaling of the Wronskian polynomial."""
    fs = diagram.frobenius_symbol()
    factor = QQ(1)
    for i in range(fs.r):
        for j in range(i + 1, fs.r):
            factor *= 2 * (fs.s[j] - fs.s[i])
    for i in range(fs.q):
        for j in range(i + 1, fs.q):
            factor *= 2 * (fs.t[i] - fs.t[j])
    sign = -1 if (fs.r * fs.q) % 2 else 1
    return pseudo_wronskian(diagram) * (QQ(sign) / factor)
