"""Closed-form evaluators for restricted-walk counts.

Every function returns an exact Python int.  The reflection-style sums
treat out-of-range binomials as 0 and evaluate signed terms literally,
including negative values of `wall_term`; both conventions are load
bearing for the alternating sums.

Conventions shared by all counting functions: walks start at (0, 0)
(except where a start offset is an explicit argument), end at column m on
row n, and a count of 0 is returned for parity-impossible endpoints
rather than an error.
"""

from __future__ import annotations

import math


class InvalidN(ValueError):
    """Binomial with negative upper index."""


class DomainError(ValueError):
    """Arguments outside a formula's stated domain."""


def binom(n: int, k: int) -> int:
    """C(n, k) with the out-of-range convention: 0 when k < 0 or k > n."""
    if n < 0:
        raise InvalidN(f"upper index must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def count_free(m: int, n: int) -> int:
    """Unrestricted walks from (0,0) to (m, n)."""
    if n < 0:
        raise DomainError(f"row must be >= 0, got {n}")
    if (n - m) % 2:
        return 0
    return binom(n, (n - m) // 2)


def wall_term(m: int, n: int) -> int:
    """Signed reflection term C(n,(n-m)/2) - C(n,(n-m)/2-1).

    Equals the walk count with a one-way column at 0 when m >= 0; for
    other m it is evaluated literally (possibly negative) because the
    multi-restriction reflection sums rely on the signed values.
    """
    if n < 0:
        raise DomainError(f"row must be >= 0, got {n}")
    if (n - m) % 2:
        return 0
    h = (n - m) // 2
    return binom(n, h) - binom(n, h - 1)


def wall_left(a: int, m: int, n: int) -> int:
    """Walks with a single rightward one-way column at a <= 0."""
    if a > 0:
        raise DomainError(f"left wall axis must be <= 0, got {a}")
    if m < a:
        raise DomainError(f"endpoint {m} lies left of the wall at {a}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) - binom(n, (n - m) // 2 + a - 1)


def wall_right(b: int, m: int, n: int) -> int:
    """Walks with a single leftward one-way column at b >= 0."""
    if b < 0:
        raise DomainError(f"right wall axis must be >= 0, got {b}")
    if m > b:
        raise DomainError(f"endpoint {m} lies right of the wall at {b}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) - binom(n, (n - m) // 2 + b + 1)


def _require_positive_axis(d: int) -> None:
    if d < 1:
        raise DomainError(f"filter axis parameter must be >= 1, got {d}")


def filter1_left(d: int, m: int, n: int) -> int:
    """Type-1 filter at d >= 1, endpoint left of it (m < d)."""
    _require_positive_axis(d)
    if m >= d:
        raise DomainError(f"endpoint {m} not left of the filter at {d}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) - binom(n, (n - m) // 2 + d)


def filter1_right(d: int, m: int, n: int) -> int:
    """Type-1 filter at d >= 1, endpoint right of or on it (m >= d)."""
    _require_positive_axis(d)
    if m < d:
        raise DomainError(f"endpoint {m} not right of the filter at {d}")
    return count_free(m, n)


def filter1_neg(d: int, m: int, n: int) -> int:
    """Type-1 filter at -d, d >= 1; walk starts and ends right of it.

    The extra term counts unrestricted walks from (-2d, 0), hence the
    minus-d shift inside the binomial.
    """
    _require_positive_axis(d)
    if m < -d:
        raise DomainError(f"endpoint {m} lies left of the filter at {-d}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) + binom(n, (n - m) // 2 - d)


def filter2_left(d: int, m: int, n: int) -> int:
    """Type-2 filter at d >= 1, endpoint left of it; same count as type 1."""
    _require_positive_axis(d)
    if m >= d:
        raise DomainError(f"endpoint {m} not left of the filter at {d}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) - binom(n, (n - m) // 2 + d)


def filter2_right(d: int, m: int, n: int) -> int:
    """Type-2 filter at d >= 1, endpoint strictly right of it (m > d)."""
    _require_positive_axis(d)
    if m <= d:
        raise DomainError(f"endpoint {m} not strictly right of the filter at {d}")
    return 2 * count_free(m, n)


def filter2_neg(d: int, m: int, n: int) -> int:
    """Type-2 filter at -d, d >= 1; walk starts and ends right of it."""
    _require_positive_axis(d)
    if m < -d:
        raise DomainError(f"endpoint {m} lies left of the filter at {-d}")
    if (n - m) % 2:
        return 0
    return count_free(m, n) + binom(n, (n - m) // 2 - d)


def _check_l(l: int) -> None:
    if l < 2:
        raise DomainError(f"period parameter must be >= 2, got {l}")


def _strip1_series(l: int, m: int, n: int) -> int:
    """The strip-1 reflection series, evaluated formally at any (m, n)."""
    total = wall_term(m, n)
    for k in range(1, (n + l) // (2 * l) + 1):
        total += wall_term(m - 2 * k * l, n)
    for k in range(1, n // (2 * l) + 1):
        total += wall_term(m + 2 * k * l, n)
    return total


def _right_series(l: int, m: int, n: int) -> int:
    """The right-of-filter reflection series, evaluated formally."""
    total = wall_term(m, n)
    for k in range(1, (n - l + 1) // (2 * l) + 1):
        total += wall_term(m + 2 * k * l, n)
    return total


def wall_filter_strip1(l: int, m: int, n: int) -> int:
    """Wall at 0 plus type-1 filter at l-1; endpoint in strip 1 (m <= l-2)."""
    _check_l(l)
    if not 0 <= m <= l - 2:
        raise DomainError(f"endpoint {m} outside strip 1 for l={l}")
    return _strip1_series(l, m, n)


def wall_filter_right(l: int, m: int, n: int) -> int:
    """Wall at 0 plus type-1 filter at l-1; endpoint right of it (m > l-2)."""
    _check_l(l)
    if m <= l - 2:
        raise DomainError(f"endpoint {m} not right of the filter at {l - 1}")
    return _right_series(l, m, n)


def _check_strip2(l: int, m: int) -> None:
    _check_l(l)
    if not l - 1 <= m < 2 * l - 1:
        raise DomainError(f"endpoint {m} outside [{l - 1}, {2 * l - 1}) for l={l}")


def two_filters(l: int, m: int, n: int) -> int:
    """Filters at l-1 (type 1) and 2l-1 (type 2), no wall; endpoint between."""
    _check_strip2(l, m)
    total = 0
    for k in range(0, (n - l + 1) // (2 * l) + 1):
        total += (-1) ** k * count_free(m + 2 * k * l, n)
    for k in range(2, n // (2 * l) + 2):
        total += (-1) ** (k - 1) * count_free(m - 2 * k * l + 2, n)
    return total


def two_filters_from_even(a: int, l: int, m: int, n: int) -> int:
    """Same two filters, walk starting from (-2*a*l, 0) with a >= 0."""
    if a < 0:
        raise DomainError(f"start index must be >= 0, got {a}")
    _check_strip2(l, m)
    total = 0
    for k in range(a, (n - l + 1) // (2 * l) + 1):
        total += (-1) ** (k - a) * count_free(m + 2 * k * l, n)
    for k in range(a, n // (2 * l)):
        total += (-1) ** (k - a + 1) * count_free(m - 2 * (k + 2) * l + 2, n)
    return total


def two_filters_from_odd(b: int, l: int, m: int, n: int) -> int:
    """Same two filters, walk starting from (-2*b*l - 2, 0) with b >= 0.

    First-sum terms are shifted to column m + 2kl + 2: the start point
    sits two columns left of the even-start family, so its reflected
    images land two columns further right.
    """
    if b < 0:
        raise DomainError(f"start index must be >= 0, got {b}")
    _check_strip2(l, m)
    total = 0
    for k in range(b, (n - l - 1) // (2 * l) + 1):
        total += (-1) ** (k - b) * count_free(m + 2 * k * l + 2, n)
    for k in range(b, (n - 2) // (2 * l)):
        total += (-1) ** (k - b + 1) * count_free(m - 2 * (k + 2) * l, n)
    return total


def wall_two_filters(l: int, m: int, n: int) -> int:
    """Wall at 0 plus filters at l-1 and 2l-1; endpoint between the filters."""
    _check_strip2(l, m)
    total = 0
    for k in range(0, (n - l + 1) // (4 * l) + 1):
        total += wall_term(m + 4 * k * l, n)
    for k in range(0, (n - 2 * l) // (4 * l) + 1):
        total += wall_term(m - 4 * k * l - 4 * l, n)
    return total


def _check_jk(j: int, k: int) -> None:
    if j < 2:
        raise DomainError(f"strip index must be >= 2, got {j}")
    if k < 0:
        raise DomainError(f"term index must be >= 0, got {k}")


def poly_p(j: int, k: int) -> int:
    """Plus-family coefficient of the periodic-arrangement count."""
    _check_jk(j, k)
    total = 0
    for i in range(0, j // 2 + 1):
        c = binom(j - 2, 2 * i)
        if c:
            total += c * binom(k - i + j - 2, j - 2)
    return total


def poly_q(j: int, k: int) -> int:
    """Minus-family coefficient of the periodic-arrangement count."""
    _check_jk(j, k)
    total = 0
    for i in range(0, j // 2 + 1):
        c = binom(j - 2, 2 * i + 1)
        if c:
            total += c * binom(k - i + j - 2, j - 2)
    return total


def pq_recurrence_check(j_max: int, k_max: int):
    """Verify the p/q families against their defining recurrences.

    p_{j+1}(k) = sum(p_j(0..k)) + sum(q_j(0..k-1)) and
    q_{j+1}(k) = sum(p_j(0..k)) + sum(q_j(0..k)), checked for
    2 <= j < j_max, 0 <= k <= k_max.  Returns None when everything holds,
    otherwise the first counterexample as (family, j, k, closed, recurrence).
    """
    if j_max < 3:
        raise DomainError(f"j_max must be >= 3, got {j_max}")
    for j in range(2, j_max):
        sp, sq = 0, 0
        for k in range(0, k_max + 1):
            sp += poly_p(j, k)
            lhs_q = poly_q(j + 1, k)
            if lhs_q != sp + sq + poly_q(j, k):
                return ("q", j + 1, k, lhs_q, sp + sq + poly_q(j, k))
            lhs_p = poly_p(j + 1, k)
            if lhs_p != sp + sq:
                return ("p", j + 1, k, lhs_p, sp + sq)
            sq += poly_q(j, k)
    return None


def strip_index(l: int, m: int) -> int:
    """Index of the strip [(j-1)l - 1, jl - 1) containing column m >= 0."""
    _check_l(l)
    if m < 0:
        raise DomainError(f"column must be >= 0, got {m}")
    return (m + 1) // l + 1


def multiplicity(l: int, m: int, n: int) -> int:
    """Weighted walks from the origin to (m, n) in the periodic arrangement.

    The arrangement is the wall at 0, the type-1 filter at l-1 and type-2
    filters at nl-1 for n >= 2.  Dispatches on the strip index: strip 1
    reduces to `wall_filter_strip1`; strips j >= 2 use the p/q families
    with prefactor 2^(j-2).
    """
    j = strip_index(l, m)
    if (m + n) % 2:
        raise DomainError(f"(m + n) must be even, got m={m}, n={n}")
    if m > n:
        raise DomainError(f"column {m} unreachable by row {n}")
    if j == 1:
        return wall_filter_strip1(l, m, n)
    total = 0
    for k in range(0, (n - (j - 1) * l + 1) // (4 * l) + 1):
        total += poly_p(j, k) * wall_term(m + 4 * k * l, n)
    for k in range(0, (n - j * l) // (4 * l) + 1):
        total += poly_p(j, k) * wall_term(m - 4 * k * l - 2 * j * l, n)
    for k in range(0, (n - (j + 1) * l + 1) // (4 * l) + 1):
        total -= poly_q(j, k) * wall_term(m + 2 * l + 4 * k * l, n)
    for k in range(0, (n - (j + 2) * l) // (4 * l) + 1):
        total -= poly_q(j, k) * wall_term(m - 4 * k * l - 2 * (j + 1) * l, n)
    return 2 ** (j - 2) * total
