"""Floating checks of the tangent-product identities in sign/log2-magnitude form.

True product values grow like 2^((p-1)/2), which overflows doubles near
p = 2100, so products are accumulated as a sign and a base-2 logarithm.
Every tangent argument is reduced modulo 1 into (-1/2, 1/2] before the call
to tan.  For the full-residue-system identity the reduction is done in exact
rational arithmetic, so grid points landing exactly on a zero of
1 + tan(pi*t) are recognized symbolically instead of drowning in rounding
noise.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .arith import as_prime, jacobi
from .errors import BranchViolation, HypothesisViolation, PoleProximity
from .records import VerificationRecord, finish
from .residues import is_mth_residue, residue_set, symbol_sign

TINY_FACTOR = 1e-12   # |1 + tan| below this degrades float precision
POLE_EPS = 1e-9
ZERO_CROSS = 1e-9

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)
_THREE_QUARTERS = Fraction(3, 4)


@dataclass(frozen=True)
class SignedMagnitude:
    """sign * 2^log2_mag; sign 0 encodes an exact zero."""

    sign: int
    log2_mag: float = 0.0

    def __mul__(self, other: "SignedMagnitude") -> "SignedMagnitude":
        if self.sign == 0 or other.sign == 0:
            return SignedMagnitude(0)
        return SignedMagnitude(self.sign * other.sign,
                               self.log2_mag + other.log2_mag)

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * 2.0 ** self.log2_mag
        except OverflowError:
            return self.sign * math.inf

    def render(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{'+' if self.sign > 0 else '-'}2^{self.log2_mag:.9f}"


def _log_tolerance(rel_tol: float) -> float:
    return math.log2(1.0 + rel_tol)


def tan_product(p, m: int, a: int = 1) -> SignedMagnitude:
    """Product of (1 + tan(pi*a*k/p)) over k in R_m(p), in sign/log2 form.

    Arguments a*k are reduced modulo p exactly before the division by p, so
    the only float error per factor is the tangent evaluation itself.  No
    factor can be exactly zero: 1 + tan(pi*a*k/p) = 0 would need ak/p = 3/4
    modulo 1, impossible for odd prime p.
    """
    ctx = as_prime(p)
    if a % ctx.p == 0:
        raise ValueError(f"a={a} is divisible by p={ctx.p}")
    members = residue_set(ctx, m).members
    q = ctx.p
    sign = 1
    log2 = 0.0
    for k in members:
        t = (a * k % q) / q
        if t > 0.5:
            t -= 1.0
        f = 1.0 + math.tan(math.pi * t)
        assert f != 0.0, "1 + tan(pi*a*k/p) cannot vanish for an odd prime p"
        if abs(f) < TINY_FACTOR:
            warnings.warn(
                f"near-zero factor at k={k} (p={q}, a={a}); precision degraded",
                RuntimeWarning, stacklevel=2)
        if f < 0.0:
            sign = -sign
        log2 += math.log2(abs(f))
    return SignedMagnitude(sign, log2)


def verify_theorem_main_numeric(p, m: int, a: int = 1,
                                rel_tol: float = 1e-6) -> VerificationRecord:
    """Compare tan_product against the predicted sign * 2^((p-1)/(2m)).

    The predicted value is sign(-2) * (-2)^((p-1)/(2m)); the magnitude is
    compared in the log2 domain within rel_tol, the sign must match exactly.
    """
    t0 = time.perf_counter()
    ctx = as_prime(p)
    if a % ctx.p == 0:
        raise ValueError(f"a={a} is divisible by p={ctx.p}")
    if not is_mth_residue(2, ctx, m):
        raise HypothesisViolation(f"2 is not a {m}-th power residue mod {ctx.p}")
    half = ctx.p_minus_1 // (2 * m)
    delta = symbol_sign(-2, ctx, m).value
    want_sign = delta * (-1 if half % 2 else 1)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        got = tan_product(ctx, m, a)
    ok = got.sign == want_sign and abs(got.log2_mag - half) <= _log_tolerance(rel_tol)
    expected = f"{'+' if want_sign > 0 else '-'}2^{half} (rel_tol={rel_tol:g})"
    actual = got.render() + (" [precision warning]" if caught else "")
    return finish(ctx.p, m, a, "thm_main_numeric", ok, expected, actual, t0)


def _tan_factor(arg: Fraction):
    """(sign, log2) of 1 + tan(pi*arg), with exact pole and zero detection.

    Returns sign 0 with log2 None when the reduced argument is exactly 3/4,
    the only zero of 1 + tan(pi*t) modulo 1.
    """
    q = arg % 1
    if abs(float(q) - 0.5) < POLE_EPS:
        raise PoleProximity(
            f"argument {float(arg)!r} is within {POLE_EPS:g} of a tangent pole")
    if q == _THREE_QUARTERS:
        return 0, None
    t = float(q)
    if t > 0.5:
        t -= 1.0
    f = 1.0 + math.tan(math.pi * t)
    if f == 0.0:
        return 0, None
    return (1 if f > 0.0 else -1), math.log2(abs(f))


def pmd_lemma_identity(n: int, x: float,
                       rel_tol: float = 1e-9) -> VerificationRecord:
    """Full residue-system tangent product for odd n against its closed form.

    Left side: prod over r = 0..n-1 of (1 + tan(pi*(x+r)/n)).
    Right side: (2/n) * 2^((n-1)/2) * (1 + (-1/n)*tan(pi*x)), Jacobi symbols.
    Both sides may be zero; when the right side is exactly zero (or smaller
    than 1e-9 in magnitude) the comparison is absolute rather than relative.
    """
    t0 = time.perf_counter()
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    fx = Fraction(x)  # exact: binary floats are dyadic rationals
    args = [(fx + r) / n for r in range(n)]
    factors = [_tan_factor(arg) for arg in args]

    lhs_sign, lhs_log2 = 1, 0.0
    for s, lg in factors:
        if s == 0:
            lhs_sign = 0
            break
        lhs_sign *= s
        lhs_log2 += lg
    lhs = SignedMagnitude(lhs_sign, lhs_log2 if lhs_sign else 0.0)

    s2 = jacobi(2, n)
    s1 = jacobi(-1, n)
    qx = fx % 1
    if abs(float(qx) - 0.5) < POLE_EPS:
        raise PoleProximity(f"x={x!r} is within {POLE_EPS:g} of a tangent pole")
    if (s1 == 1 and qx == _THREE_QUARTERS) or (s1 == -1 and qx == _QUARTER):
        rhs = SignedMagnitude(0)
    else:
        t = float(qx)
        if t > 0.5:
            t -= 1.0
        base = 1.0 + s1 * math.tan(math.pi * t)
        if base == 0.0:
            rhs = SignedMagnitude(0)
        else:
            rhs = SignedMagnitude(s2 * (1 if base > 0.0 else -1),
                                  (n - 1) / 2 + math.log2(abs(base)))

    if lhs.sign == 0 and rhs.sign == 0:
        ok = True
    elif abs(rhs.value()) < ZERO_CROSS:
        ok = abs(lhs.value() - rhs.value()) <= ZERO_CROSS
    else:
        ok = lhs.sign == rhs.sign and \
            abs(lhs.log2_mag - rhs.log2_mag) <= _log_tolerance(rel_tol)
    expected = f"x={x:g}: {rhs.render()} (rel_tol={rel_tol:g})"
    actual = f"x={x:g}: {lhs.render()}"
    return finish(n, 1, 0, "pmd_lemma", ok, expected, actual, t0)


def pmd_theorem14_numeric(p, a: int = 1,
                          rel_tol: float = 1e-6) -> VerificationRecord:
    """Quadratic-residue tangent product for p = 1 (mod 8).

    prod over k = 1..(p-1)/2 of (1 + tan(pi*a*k^2/p)) is compared against
    sign (-1)^#{1 <= k < p/4 : (k/p) = 1} and magnitude 2^((p-1)/4).
    """
    t0 = time.perf_counter()
    ctx = as_prime(p)
    if ctx.p % 8 != 1:
        raise BranchViolation(
            f"p={ctx.p} is not 1 mod 8; only that branch is supported")
    if a % ctx.p == 0:
        raise ValueError(f"a={a} is divisible by p={ctx.p}")
    q = ctx.p
    sign = 1
    log2 = 0.0
    for k in range(1, (q - 1) // 2 + 1):
        t = (a * k * k % q) / q
        if t > 0.5:
            t -= 1.0
        f = 1.0 + math.tan(math.pi * t)
        assert f != 0.0, "1 + tan(pi*a*k^2/p) cannot vanish for an odd prime p"
        if abs(f) < TINY_FACTOR:
            warnings.warn(
                f"near-zero factor at k={k} (p={q}, a={a}); precision degraded",
                RuntimeWarning, stacklevel=2)
        if f < 0.0:
            sign = -sign
        log2 += math.log2(abs(f))
    count = sum(1 for k in range(1, (q - 1) // 4 + 1) if jacobi(k, q) == 1)
    want_sign = -1 if count % 2 else 1
    quarter = (q - 1) // 4
    ok = sign == want_sign and abs(log2 - quarter) <= _log_tolerance(rel_tol)
    expected = f"{'+' if want_sign > 0 else '-'}2^{quarter} (rel_tol={rel_tol:g})"
    actual = SignedMagnitude(sign, log2).render()
    return finish(ctx.p, 1, a, "pmd_thm14", ok, expected, actual, t0)
