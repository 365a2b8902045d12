"""Verification sweeps, sharpness comparison, and report assembly.

Exact values are always the oracle side: bounds are compared against
v_exact/w_exact converted once to double. Sharpness comparisons between two
bounds are strict; when two doubles land within 1e-12 (relative) of each
other the comparison is re-done at 30 significant digits so that integer
thresholds cannot flip through rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .ballvol import v_exact, w_exact
from .bounds import BoundId, eval_bound, eval_bound_mp
from .errors import DomainError

# sidedness slack: gap > -TIE_REL * scale counts as correct-sided, which
# admits the one documented exact-equality case without admitting real flips
TIE_REL = 1e-13

# |a - b| below this (relative) sends a sharpness comparison to mpmath
_RECHECK_REL = 1e-12

_CHUNK = 1 << 22

_V_REAL: dict[int, float] = {}
_W_REAL: dict[int, float] = {}


def exact_target(target: str, n: int) -> float:
    """Double image of v_n or w_n, cached per n for sweep reuse."""
    cache = _V_REAL if target == "v" else _W_REAL
    val = cache.get(n)
    if val is None:
        val = (v_exact(n) if target == "v" else w_exact(n)).to_real()
        cache[n] = val
    return val


@dataclass(frozen=True)
class EvaluationRecord:
    n: int
    bound: BoundId
    bound_value: float
    exact_value: float
    gap: float  # exact - bound for LOWER, bound - exact for UPPER; signed
    side_ok: bool


@dataclass(frozen=True)
class CrossoverResult:
    bound_a: BoundId
    bound_b: BoundId
    target: str
    sharper_set: frozenset[int]
    threshold: int | None


@dataclass(frozen=True)
class TableReport:
    target: str
    headers: list[str]
    rows: list[list]


def verify_bounds(ids: list[BoundId], n_max: int) -> list[EvaluationRecord]:
    """One record per (bound, n) with n from the bound's min_n up to n_max."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    records: list[EvaluationRecord] = []
    for bid in ids:
        for n in range(bid.min_n, n_max + 1):
            bv = eval_bound(bid, n)
            ev = exact_target(bid.target, n)
            gap = ev - bv if bid.side == "lower" else bv - ev
            ok = gap > -TIE_REL * max(1.0, abs(ev))
            records.append(EvaluationRecord(n, bid, bv, ev, gap, ok))
    return records


def _sharper_at(a: BoundId, b: BoundId, n: int, upper: bool) -> bool | None:
    """True if a is strictly sharper at n, False if b is, None on a tie."""
    va, vb = eval_bound(a, n), eval_bound(b, n)
    if abs(va - vb) < _RECHECK_REL * max(1.0, abs(va), abs(vb)):
        with mpmath.workdps(30):
            ma, mb = eval_bound_mp(a, n), eval_bound_mp(b, n)
            if ma == mb:
                return None
            return (ma < mb) if upper else (ma > mb)
    return (va < vb) if upper else (va > vb)


def crossover(a: BoundId, b: BoundId, n_max: int) -> CrossoverResult:
    """Set of n where a is strictly sharper than b, with interval threshold.

    Sharper means smaller for UPPER bounds, larger for LOWER bounds. The
    threshold field is populated only when the sharper set is a contiguous
    run of integers; its value is then the run's last element.
    """
    if a.target != b.target or a.side != b.side:
        raise ValueError(
            f"bounds {a.label()} and {b.label()} do not share side and target"
        )
    start = max(a.min_n, b.min_n)
    if n_max < start:
        raise DomainError(f"n_max must be >= {start}, got {n_max}")
    upper = a.side == "upper"
    sharper = [n for n in range(start, n_max + 1) if _sharper_at(a, b, n, upper)]
    threshold = None
    if sharper and sharper[-1] - sharper[0] + 1 == len(sharper):
        threshold = sharper[-1]
    return CrossoverResult(a, b, a.target, frozenset(sharper), threshold)


def _overtake_log_target(n: int) -> float:
    # log(sqrt(pi (2n+1))/2): the full product pi*v_n must beat this for a
    # finite overtake index to exist, and it does since (pi v_n)^2 > pi(2n+1)/4
    return 0.5 * math.log(math.pi * (2 * n + 1)) - math.log(2.0)


def product_overtake_index(n: int, r_max: int) -> int | None:
    """Least r with prod_{k=1}^r (2k/(2k-1))((2k+n-1)/(2k+n)) above
    sqrt(pi(2n+1))/2, scanning r <= r_max; None when no r qualifies."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    target = _overtake_log_target(n)
    offset = 0.0
    for lo in range(1, r_max + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, r_max + 1), dtype=np.float64)
        partial = np.cumsum(np.log1p(n / ((2.0 * k - 1.0) * (2.0 * k + n))))
        idx = int(np.searchsorted(partial, target - offset, side="right"))
        if idx < len(partial):
            return lo + idx
        offset += float(partial[-1])
    return None


def partials_below_upper_cap(n: int, m_max: int) -> bool:
    """True iff every partial product up to m_max stays below
    sqrt(pi(2n+2))/2. Partials increase, so only the last one is checked."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    cap = 0.5 * math.log(math.pi * (2 * n + 2)) - math.log(2.0)
    total = 0.0
    for lo in range(1, m_max + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, m_max + 1), dtype=np.float64)
        total += float(np.sum(np.log1p(n / ((2.0 * k - 1.0) * (2.0 * k + n)))))
    return total < cap


def klein_rota_check(n_max: int) -> bool:
    """Exact check that w_n < 1 + 1/n for every n up to n_max."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    for n in range(1, n_max + 1):
        if w_exact(n).compare_to_fraction(Fraction(n + 1, n)) != -1:
            return False
    return True


def make_table(
    target: str,
    ids: list[BoundId],
    n_list: list[int],
    partial: bool = False,
) -> TableReport:
    """Rows of (n, exact, bound values..., gaps...) in caller column order.

    Values are the eval_bound doubles, bit for bit. An n below some bound's
    validity raises, unless partial is set, in which case the offending
    cells hold None and the rest of the row is produced.
    """
    for bid in ids:
        if bid.target != target:
            raise ValueError(f"bound {bid.label()} does not target {target}")
    headers = ["n", "exact"]
    headers += [bid.label() for bid in ids]
    headers += [f"gap:{bid.label()}" for bid in ids]
    rows: list[list] = []
    for n in n_list:
        ev = exact_target(target, n)  # DomainError for n < 1 regardless of flag
        values: list[float | None] = []
        gaps: list[float | None] = []
        for bid in ids:
            if n < bid.min_n:
                if not partial:
                    raise DomainError(
                        f"bound {bid.label()} needs n >= {bid.min_n}, got {n}"
                    )
                values.append(None)
                gaps.append(None)
                continue
            bv = eval_bound(bid, n)
            values.append(bv)
            gaps.append(ev - bv if bid.side == "lower" else bv - ev)
        rows.append([n, ev, *values, *gaps])
    return TableReport(target, headers, rows)


def auxiliary_log_inequality(n: int) -> tuple[float, float, bool]:
    """(lhs, rhs, lhs <= rhs) for 1/(2(n-1)) vs log(4(n+1)^2/(pi n(n+2)))."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    lhs = 1.0 / (2.0 * (n - 1))
    rhs = math.log(4.0 * (n + 1) ** 2 / (math.pi * n * (n + 2)))
    return lhs, rhs, lhs <= rhs


def w_upper_refined_vs_51_margin(n: int) -> float:
    """log of upper-51 minus log of upper-refined:1, rearranged exactly.

    The difference collapses to u - log1p(u) with u = 1/((n+1)(n+3)), which
    is positive for every n >= 1 and numerically resolvable long after the
    two bound values themselves collide in double precision.
    """
    u = 1.0 / ((n + 1) * (n + 3))
    return u - math.log1p(u)


def w_lower_p_vs_443_margin(n: int) -> float:
    """log of lower-p minus log of lower-443: log1p(u) - 1/(n+2)^2 with
    u = 1/((n+1)(n+3)); positive, of order 1/(2(n+2)^4)."""
    u = 1.0 / ((n + 1) * (n + 3))
    return math.log1p(u) - 1.0 / (n + 2) ** 2


def w_upper_merkle_vs_alzer_margin(n: int) -> int:
    """Integer (n+1)^3 (n+3) - n(n+2)^3, positive iff Merkle's bound sits
    below Alzer's at n; the polynomial difference is exactly 2n+3."""
    return (n + 1) ** 3 * (n + 3) - n * (n + 2) ** 3
