"""Gamma-quotient evaluation through its joint-factor infinite product.

The quotient Gamma(x+a)/Gamma(x) equals f(x,a)/Gamma(1-a), where

    f(x, a) = prod_{k=1}^inf  k(x+k-1) / ((k-a)(k+x+a-1))

Each factor equals 1 + c/((k-a)(k+x+a-1)) with c = a(x+a-1), so the
product converges like O(1/m): slow, which is why exact needs route
through ballvol instead of through tighter tolerances here. Partial
products are evaluated as vectorized log1p sums; tails are certified by an
integral comparison bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonConvergenceError
from .truncation import TruncationControl

_CHUNK = 1 << 22
SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ProductResult:
    """Adaptive product outcome: value, terms consumed, certified tail bound.

    tail_bound always dominates |log f - log f_m| for the returned m.
    """

    value: float
    terms_used: int
    tail_bound: float


def _validate(x, a) -> tuple[float, float]:
    xf, af = float(x), float(a)
    if not xf > 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    if not af < 1.0:
        raise DomainError(f"a must be below 1, got {a!r}")
    if not xf + af > 0.0:
        # the k=1 factor has the sign of x+a; positivity of every factor
        # requires x+a > 0 (this also rules out the nonpositive-integer poles)
        raise DomainError(f"x + a must be positive, got x={x!r}, a={a!r}")
    return xf, af


def joint_factor_truncate(x, a, m: int):
    """Partial product f_m(x,a) of the first m factors; m = 0 gives 1.

    Arithmetic follows the argument types: Fraction arguments produce the
    exact rational partial product, floats produce a float.
    """
    _validate(x, a)
    if m < 0:
        raise DomainError(f"truncation order must be >= 0, got {m}")
    result = 1
    for k in range(1, m + 1):
        result = result * (k * (x + k - 1)) / ((k - a) * (k + x + a - 1))
    return result


def _log_partial(xf: float, af: float, m: int) -> float:
    """log f_m as a chunked sum of log1p(c/((k-a)(k+b)))."""
    c = af * (xf + af - 1.0)
    b = xf + af - 1.0
    chunks = []
    for lo in range(1, m + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, m + 1), dtype=np.float64)
        chunks.append(float(np.sum(np.log1p(c / ((k - af) * (k + b))))))
    return math.fsum(chunks)


def _tail_bound(xf: float, af: float, m: int) -> float:
    """Upper bound on |sum_{k>m} (term_k - 1)| >= |log f - log f_m|.

    Integral comparison: the summand is |c|/((k-a)(k+b)), decreasing in k,
    so the tail is below the integral from m, which evaluates to
    (|c|/(a+b)) log((m+b)/(m-a)); the degenerate a+b = 0 case collapses to
    |c|/(m-a).
    """
    c = af * (xf + af - 1.0)
    if c == 0.0:
        return 0.0
    b = xf + af - 1.0
    denom = af + b
    if denom == 0.0:
        return abs(c) / (m - af)
    return abs(c / denom * math.log((m + b) / (m - af)))


def _minimal_m(xf: float, af: float, eps: float) -> int:
    """Smallest m >= 1 whose certified tail bound drops below eps."""
    if _tail_bound(xf, af, 1) < eps:
        return 1
    c = af * (xf + af - 1.0)
    hi = max(2, int(c / eps) + 2)
    while _tail_bound(xf, af, hi) >= eps:
        hi *= 2
    lo = 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _tail_bound(xf, af, mid) < eps:
            hi = mid
        else:
            lo = mid
    return hi


def joint_factor_result(x, a, ctrl: TruncationControl | None = None) -> ProductResult:
    """Evaluate f(x,a) under the given truncation policy, with diagnostics."""
    xf, af = _validate(x, a)
    if ctrl is None:
        ctrl = TruncationControl.tolerance()
    if ctrl.is_fixed:
        m = ctrl.m
        return ProductResult(
            value=math.exp(_log_partial(xf, af, m)),
            terms_used=m,
            tail_bound=_tail_bound(xf, af, m),
        )
    c = af * (xf + af - 1.0)
    if c == 0.0:
        # x = 1 - a (or a = 0): every factor is exactly 1
        return ProductResult(value=1.0, terms_used=0, tail_bound=0.0)
    if c < 0.0:
        raise DomainError(
            "tolerance mode needs factors >= 1, i.e. a(x+a-1) >= 0; "
            f"got x={x!r}, a={a!r}"
        )
    m = _minimal_m(xf, af, ctrl.eps)
    if m > ctrl.max_terms:
        cap = ctrl.max_terms
        raise NonConvergenceError(
            f"joint factor at x={xf}, a={af} needs {m} factors for eps={ctrl.eps}",
            partial=math.exp(_log_partial(xf, af, cap)),
            tail_bound=_tail_bound(xf, af, cap),
            terms=cap,
        )
    return ProductResult(
        value=math.exp(_log_partial(xf, af, m)),
        terms_used=m,
        tail_bound=_tail_bound(xf, af, m),
    )


def joint_factor(x, a, ctrl: TruncationControl | None = None) -> float:
    return joint_factor_result(x, a, ctrl).value


def gautschi_ratio(
    x,
    a,
    ctrl: TruncationControl | None = None,
    gamma_one_minus_a: float | None = None,
) -> float:
    """Gamma(x+a)/Gamma(x) = f(x,a)/Gamma(1-a).

    Gamma(1-a) is known in closed form for a = 1/2 (sqrt(pi)) and a = 0
    (1); for any other a the caller must supply it.
    """
    _validate(x, a)
    if gamma_one_minus_a is not None:
        denom = float(gamma_one_minus_a)
    elif a == 0.5:
        denom = SQRT_PI
    elif a == 0:
        denom = 1.0
    else:
        raise DomainError(
            f"Gamma(1-a) is not built in for a={a!r}; pass gamma_one_minus_a"
        )
    return joint_factor(x, a, ctrl) / denom
