"""Counts of pencils on a general curve with prescribed ramification, and the
aggregate sums that give the nonzero intersection degrees of the test
surfaces.

The point counts (``count_n``, ``count_m``, ``count_ell``) are exact
integers.  The reciprocal-factorial determinants (``castelnuovo_general``,
``castelnuovo_N``) are exact rationals; they are integers precisely in the
zero-dimensional counting regime where they count linear series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from bn2.exactnum import factorial, inv_factorial_or_zero

__all__ = [
    "SchubertIndex",
    "InvalidIndexError",
    "RhoMismatchError",
    "RegimeError",
    "rho",
    "reduce_base_locus",
    "castelnuovo_general",
    "castelnuovo_N",
    "count_n",
    "count_m",
    "count_ell",
    "sum_T",
    "sum_D",
    "sum_S16",
]


class InvalidIndexError(ValueError):
    """A ramification index violates 0 <= a_0 <= ... <= a_r <= d - r."""


class RhoMismatchError(ValueError):
    """The adjusted Brill-Noether number is not the one the count requires."""


class RegimeError(ValueError):
    """After base-locus reduction rho(g,1,d') < 0: the count is not defined on
    a general curve.  Aggregate sums treat such terms as zero contributions;
    direct calls get this distinct error."""


@dataclass(frozen=True)
class SchubertIndex:
    """Ramification pair (a0, a1) of a pencil at a point, with 0 <= a0 <= a1.

    Validity against a degree d additionally means a1 <= d - 1.
    """

    a0: int
    a1: int

    def __post_init__(self) -> None:
        if not 0 <= self.a0 <= self.a1:
            raise InvalidIndexError(f"need 0 <= a0 <= a1, got ({self.a0},{self.a1})")

    def check_degree(self, d: int) -> "SchubertIndex":
        if self.a1 > d - 1:
            raise InvalidIndexError(
                f"index ({self.a0},{self.a1}) invalid for degree {d}: a1 > d-1"
            )
        return self

    def weight(self) -> int:
        return self.a0 + self.a1

    def complement(self, k: int) -> "SchubertIndex":
        """(k-1-a1, k-1-a0): the index forced at the opposite branch point of
        a degree-k cover."""
        return SchubertIndex(k - 1 - self.a1, k - 1 - self.a0)


def _index(a) -> SchubertIndex:
    if isinstance(a, SchubertIndex):
        return a
    return SchubertIndex(*a)


def _ram_sequence(seq, r: int, d: int) -> tuple[int, ...]:
    """Validate a ramification sequence of type (r, d)."""
    if isinstance(seq, SchubertIndex):
        vals: tuple[int, ...] = (seq.a0, seq.a1)
    else:
        vals = tuple(int(v) for v in seq)
    if len(vals) != r + 1:
        raise InvalidIndexError(f"need {r + 1} ramification entries, got {vals}")
    if vals[0] < 0 or any(vals[t] > vals[t + 1] for t in range(r)) or vals[-1] > d - r:
        raise InvalidIndexError(f"sequence {vals} invalid for type r={r}, d={d}")
    return vals


def rho(g: int, r: int, d: int, ramifications: Sequence = ()) -> int:
    """Adjusted Brill-Noether number g - (r+1)(g-d+r) - sum of all prescribed
    ramification weights."""
    if g < 0 or d < 1:
        raise ValueError(f"need g >= 0 and d >= 1, got g={g}, d={d}")
    total = g - (r + 1) * (g - d + r)
    for seq in ramifications:
        total -= sum(_ram_sequence(seq, r, d))
    return total


def reduce_base_locus(d: int, alpha, beta):
    """Remove the forced base locus a0*p + b0*q from a degree-d pencil.

    Returns (d', alpha', beta') with d' = d - a0 - b0 and both indices shifted
    to start at 0.  The reduction is arithmetic: the shifted indices are not
    revalidated against the smaller degree (the two-point count formulas
    evaluate correctly either way); only exhausting the pencil is an error.
    """
    a = _index(alpha).check_degree(d)
    b = _index(beta).check_degree(d)
    dp = d - a.a0 - b.a0
    if dp < 1:
        raise InvalidIndexError(f"base locus exhausts the pencil: d'={dp}")
    return dp, SchubertIndex(0, a.a1 - a.a0), SchubertIndex(0, b.a1 - b.a0)


def _det_small(m: list[list[Fraction]]) -> Fraction:
    """Cofactor-expansion determinant; the matrices here are (r+1) x (r+1)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det_small(minor)
        total += term if j % 2 == 0 else -term
    return total


def castelnuovo_general(g: int, r: int, d: int, alpha, beta) -> Fraction:
    """g! * det( 1/[alpha_i + i + beta_{r-j} + r - j + g - d]! ), 0 <= i,j <= r.

    Reciprocal factorials of negative arguments are 0.  In the rho = 0 regime
    this is the number of series of type (r, d) with ramification alpha, beta
    at two general points; the value may vanish, and away from that regime it
    is an exact rational that need not be integral.
    """
    a = _ram_sequence(alpha, r, d)
    b = _ram_sequence(beta, r, d)
    n = r + 1
    mat = [
        [inv_factorial_or_zero(a[i] + i + b[r - j] + r - j + g - d) for j in range(n)]
        for i in range(n)
    ]
    return factorial(g) * _det_small(mat)


def castelnuovo_N(g: int, d: int, alpha, beta=SchubertIndex(0, 0)) -> Fraction:
    """Pencil count with ramification alpha at p and beta at q (r = 1).

    Subtracts the base locus a0*p + b0*q and evaluates the two-term
    reciprocal-factorial expansion; a route independent of the raw
    determinant in ``castelnuovo_general``, which it must always equal.
    With beta omitted this is the single-point count.
    """
    a = _index(alpha).check_degree(d)
    b = _index(beta).check_degree(d)
    dp = d - a.a0 - b.a0
    a1 = a.a1 - a.a0
    b1 = b.a1 - b.a0
    gd = g - dp
    return factorial(g) * (
        inv_factorial_or_zero(b1 + 1 + gd) * inv_factorial_or_zero(a1 + 1 + gd)
        - inv_factorial_or_zero(gd) * inv_factorial_or_zero(a1 + b1 + 2 + gd)
    )


def count_n(g: int, d: int, alpha) -> int:
    """Number of (moving point, pencil) pairs on a general genus-g curve with
    ramification alpha at the point, in the adjusted-rho = -1 regime.

    After removing the a0-fold base point (d' = d - a0) the count is
    (2d'-g-1)(2d'-g)(2d'-g+1) * C(g, d').  Raises RhoMismatchError unless
    rho(g,1,d,alpha) = -1, and RegimeError when rho(g,1,d') < 0 -- the case
    where the leading factor 2d'-g-1 would be <= 0 and no such pencils exist
    on a general curve.
    """
    a = _index(alpha).check_degree(d)
    value = rho(g, 1, d, [a])
    if value != -1:
        raise RhoMismatchError(
            f"count_n needs adjusted rho = -1, got rho({g},1,{d},{(a.a0, a.a1)}) = {value}"
        )
    dp = d - a.a0
    if 2 * dp - g - 2 < 0:
        raise RegimeError(f"rho({g},1,{dp}) < 0 after base-locus reduction")
    lead = 2 * dp - g - 1  # equals a1 - a0, >= 1 here
    return lead * (lead + 1) * (lead + 2) * comb(g, dp)


def count_m(g: int, d: int, alpha) -> int:
    """Number of (x, y, pencil) triples with ramification alpha at x and a
    simple ramification at y, in the adjusted-rho = -2 regime.

    Fixing one of the count_n points x, the second moving point contributes a
    factor 3g - 1.
    """
    a = _index(alpha).check_degree(d)
    value = rho(g, 1, d, [a, SchubertIndex(0, 1)])
    if value != -2:
        raise RhoMismatchError(
            f"count_m needs adjusted rho = -2, got rho({g},1,{d},{(a.a0, a.a1)},(0,1)) = {value}"
        )
    return count_n(g, d, a) * (3 * g - 1)


def count_ell(g: int, k: int) -> int:
    """Degree of the one-nodal family against the pointed pencil divisor:
    ell_{2,2} = 2, and for g = 2k - 2 > 2 it equals 2 (2k-3)! / ((k-2)!(k-1)!).
    """
    if k < 2 or g != 2 * k - 2:
        raise ValueError(f"count_ell needs g = 2k-2 with k >= 2, got g={g}, k={k}")
    if k == 2:
        return 2
    return 2 * comb(2 * k - 3, k - 2)


def _indices_with_weight(k: int, w: int) -> list[SchubertIndex]:
    """All (a0, a1) with 0 <= a0 <= a1 <= k-1 and a0 + a1 = w."""
    out = []
    for a0 in range(k):
        a1 = w - a0
        if a0 <= a1 <= k - 1:
            out.append(SchubertIndex(a0, a1))
    return out


def _n_or_zero(g: int, d: int, alpha: SchubertIndex) -> int:
    try:
        return count_n(g, d, alpha)
    except (RhoMismatchError, RegimeError):
        return 0


def _m_or_zero(g: int, d: int, alpha: SchubertIndex) -> int:
    try:
        return count_m(g, d, alpha)
    except (RhoMismatchError, RegimeError):
        return 0


def _as_count(total: Fraction, what: str) -> int:
    if total.denominator != 1:
        raise ArithmeticError(
            f"{what} is not integral ({total}); it only counts points when g = 2k"
        )
    return total.numerator


def sum_T(i: int, g: int, k: int) -> int:
    """Sum over a0 + a1 = 2k - i - 1 of
    n_{i,k,(a0,a1)} * n_{g-i,k,(k-1-a1,k-1-a0)}.

    Indices whose factors fall outside their counting regime contribute 0.
    """
    if not 2 <= i <= g // 2:
        raise ValueError(f"sum_T needs 2 <= i <= g/2, got i={i}, g={g}")
    total = 0
    for a in _indices_with_weight(k, 2 * k - i - 1):
        na = _n_or_zero(i, k, a)
        if na:
            total += na * _n_or_zero(g - i, k, a.complement(k))
    return total


def sum_D(i: int, j: int, g: int, k: int) -> int:
    """Sum over rho = -1 indices alpha (genus i) and beta (genus j) of
    n_{i,k,alpha} * n_{j,k,beta} * N_{g-i-j,k,comp(alpha),comp(beta)}."""
    if not (2 <= i <= j <= g - 3 and i + j <= g - 1):
        raise ValueError(
            f"sum_D needs 2 <= i <= j <= g-3 and i+j <= g-1, got i={i}, j={j}, g={g}"
        )
    total = Fraction(0)
    for a in _indices_with_weight(k, 2 * k - i - 1):
        na = _n_or_zero(i, k, a)
        if not na:
            continue
        for b in _indices_with_weight(k, 2 * k - j - 1):
            nb = _n_or_zero(j, k, b)
            if nb:
                total += na * nb * castelnuovo_N(
                    g - i - j, k, a.complement(k), b.complement(k)
                )
    return _as_count(total, f"sum_D({i},{j},{g},{k})")


def sum_S16(i: int, g: int, k: int) -> int:
    """Sum over a0 + a1 = g - i - 1 of
    m_{i,k,(a0,a1)} * N_{g-i-1,k,(k-1-a1,k-1-a0)}.

    For i = g - 2 the relation uses m_{g-2,k,(0,1)} directly instead.
    """
    if not g // 2 <= i <= g - 3:
        raise ValueError(f"sum_S16 needs g/2 <= i <= g-3, got i={i}, g={g}")
    total = Fraction(0)
    for a in _indices_with_weight(k, g - i - 1):
        ma = _m_or_zero(i, k, a)
        if ma:
            total += ma * castelnuovo_N(g - i - 1, k, a.complement(k))
    return _as_count(total, f"sum_S16({i},{g},{k})")
