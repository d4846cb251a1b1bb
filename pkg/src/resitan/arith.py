"""Integer and modular arithmetic primitives used by every other module."""

from __future__ import annotations

from dataclasses import dataclass

# Deterministic Miller-Rabin witness set: correct for every n below 3.3e24,
# which covers the full 64-bit range this library targets.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for nonnegative integers up to 64 bits."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeContext:
    """A verified odd prime p together with p - 1, the order of its unit group."""

    p: int
    p_minus_1: int = 0

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        object.__setattr__(self, "p_minus_1", self.p - 1)


def as_prime(p: int | PrimeContext) -> PrimeContext:
    """Coerce an integer to a PrimeContext, validating primality."""
    return p if isinstance(p, PrimeContext) else PrimeContext(p)


def mod_pow(b: int, e: int, p: int) -> int:
    """b**e mod p, with b reduced into [0, p) first."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(b % p, e, p)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n; the Legendre symbol for prime n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, p: int | PrimeContext) -> int | None:
    """Smaller square root of a modulo an odd prime, or None for a non-residue.

    Tonelli-Shanks in general; for p = 3 (mod 4) the direct exponent shortcut
    is used.  For a != 0 the returned root r satisfies 0 < r <= (p-1)/2.
    """
    ctx = as_prime(p)
    q = ctx.p
    a %= q
    if a == 0:
        return 0
    if pow(a, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        r = pow(a, (q + 1) // 4, q)
        return min(r, q - r)
    # write q - 1 = d * 2^s with d odd
    d, s = q - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1
    c = pow(z, d, q)
    r = pow(a, (d + 1) // 2, q)
    t = pow(a, d, q)
    m = s
    while t != 1:
        i, u = 0, t
        while u != 1:
            u = u * u % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        r = r * b % q
        c = b * b % q
        t = t * c % q
        m = i
    return min(r, q - r)
