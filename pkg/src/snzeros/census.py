"""Exact zero statistics: full-table scans and generating-function counts.

Small n: iterate the whole p(n) x p(n) character table and tally zeros by
type.  Large n: the number of type-1 zeros decomposes as
sum_t q(n,t) * c_t(n), where q(n,t) counts column shapes with largest part t
and c_t(n) counts row shapes with no hook divisible by t.  The c_t series is
the partition series times E(x^t)^t with E the (sparse, pentagonal) Euler
product, so a single coefficient can be extracted cheaply.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceLimit
from .mn import classify
from .partitions import Partition, partitions_of
from .ptable import build_p_table

DEFAULT_SCAN_CAP = 20
DEFAULT_TYPE1_CAP = 5000


def scan_cap() -> int:
    """Full-scan cap; override with SNZ_SCAN_CAP."""
    return int(os.environ.get("SNZ_SCAN_CAP", DEFAULT_SCAN_CAP))


def type1_cap() -> int:
    """count_type1 cap; override with SNZ_TYPE1_CAP."""
    return int(os.environ.get("SNZ_TYPE1_CAP", DEFAULT_TYPE1_CAP))


def ratio_decimal(num: int, den: int, digits: int = 6) -> str:
    """num/den as a fixed-point decimal string, round half to even."""
    if den == 0:
        raise ZeroDivisionError("ratio_decimal with zero denominator")
    scaled = num * 10**digits
    q, r = divmod(scaled, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1
    s = str(q).rjust(digits + 1, "0")
    return s[:-digits] + "." + s[-digits:] if digits else s


@dataclass(frozen=True)
class ScanResult:
    """Exact tallies over every entry of one character table."""

    n: int
    total_entries: int
    zero_count: int
    type1_count: int
    type2_count: int

    def z(self, digits: int = 6) -> str:
        return ratio_decimal(self.zero_count, self.total_entries, digits)

    def z1(self, digits: int = 6) -> str:
        return ratio_decimal(self.type1_count, self.total_entries, digits)

    def z2(self, digits: int = 6) -> str:
        return ratio_decimal(self.type2_count, self.total_entries, digits)

    def type1_over_zero(self, digits: int = 3) -> str:
        """The exact-census headline ratio (type-1 zeros) / (all zeros)."""
        return ratio_decimal(self.type1_count, self.zero_count, digits)


def full_table_scan(n: int, cap: int | None = None) -> ScanResult:
    """Tally zeros, type-1 and type-2 zeros over all (lam, mu) pairs of weight n."""
    if cap is None:
        cap = scan_cap()
    if n > cap:
        raise ResourceLimit(f"n={n} exceeds scan cap {cap}")
    rows = [Partition(t) for t in partitions_of(n)]
    zero = type1 = type2 = 0
    for mu_parts in partitions_of(n):
        mu = Partition(mu_parts)
        for lam in rows:
            zc = classify(lam, mu, evaluate=True)
            zero += zc.is_zero
            type1 += zc.is_type1
            type2 += zc.is_type2
    p_n = len(rows)
    return ScanResult(n, p_n * p_n, zero, type1, type2)


def count_t_cores(n: int, t: int) -> int:
    """Number of partitions of n with no hook length divisible by t.

    Coefficient of x^n in prod_k (1 - x^{tk})^t / (1 - x^k), by dense exact
    series arithmetic: start from the partition series and apply each factor
    (1 - x^{tk}) t times.
    """
    series = list(build_p_table(n, cap=max(n, 0) + 1).counts)
    for k in range(1, n // t + 1):
        step = t * k
        for _ in range(t):
            for m in range(n, step - 1, -1):
                series[m] -= series[m - step]
    return series[n]


def _pentagonal_coeffs(max_deg: int) -> list[tuple[int, int]]:
    """Nonzero coefficients (degree, +-1) of the Euler product up to max_deg."""
    out = [(0, 1)]
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > max_deg:
            break
        sign = -1 if k & 1 else 1
        out.append((g1, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= max_deg:
            out.append((g2, sign))
        k += 1
    return out


def _core_count_at(n: int, t: int, pcounts: tuple[int, ...]) -> int:
    """c_t(n) via E(y)^t computed with the power-series power recurrence.

    With g = E^t and E sparse, m*g_m = sum_j ((t+1)*j - m) E_j g_{m-j}; the
    division is exact.  Then c_t(n) = sum_j g_j * p(n - t*j).
    """
    deg = n // t
    euler = _pentagonal_coeffs(deg)[1:]  # skip the constant term
    g = [0] * (deg + 1)
    g[0] = 1
    for m in range(1, deg + 1):
        acc = 0
        for j, e in euler:
            if j > m:
                break
            term = ((t + 1) * j - m) * g[m - j]
            acc += term if e > 0 else -term
        q, r = divmod(acc, m)
        assert r == 0
        g[m] = q
    return sum(g[j] * pcounts[n - t * j] for j in range(deg + 1))


def count_max_part(n: int) -> list[int]:
    """q[t] = number of partitions of n with largest part exactly t, 1 <= t <= n.

    q(n,t) is the number of partitions of n-t into parts <= t; a rolling
    bounded-part array keeps memory at O(n) big integers.
    """
    bounded = [0] * (n + 1)  # partitions with parts <= t, updated in place
    bounded[0] = 1
    q = [0] * (n + 1)
    for t in range(1, n + 1):
        for m in range(t, n + 1):
            bounded[m] += bounded[m - t]
        q[t] = bounded[n - t]
    return q


def count_type1(n: int, cap: int | None = None) -> int:
    """Exact number of type-1 zeros in the character table of weight n."""
    if cap is None:
        cap = type1_cap()
    if n > cap:
        raise ResourceLimit(f"n={n} exceeds type-1 count cap {cap}")
    if n < 1:
        return 0
    pcounts = build_p_table(n, cap=n + 1).counts
    q = count_max_part(n)
    return sum(q[t] * _core_count_at(n, t, pcounts) for t in range(1, n + 1))
