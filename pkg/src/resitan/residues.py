"""Power residue sets R_m(p) and the sign-valued 2m-th power residue symbol.

R_m(p) is the set of m-th power residues in [1, p-1], a multiplicative
subgroup of index m when p = 1 (mod m).  The symbol implemented here is the
restriction of the 2m-th power residue symbol to arguments whose value
a^((p-1)/(2m)) mod p is +-1; anything else raises NonRealSymbol, since a
faithful complex-valued symbol would need an embedding choice this library
deliberately does not make.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .arith import PrimeContext, as_prime, is_prime
from .errors import HypothesisViolation, NonRealSymbol

_TRIAL_BOUND = 10 ** 6


@dataclass(frozen=True)
class ResidueSet:
    """The sorted m-th power residues in [1, p-1]."""

    p: int
    m: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class SignSymbol:
    """A 2m-th power residue symbol restricted to the real case {+1, -1}."""

    value: int
    a: int
    p: int
    order: int


def require_even_index(ctx: PrimeContext, m: int) -> None:
    """Raise unless m is positive and 2m divides p - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    if ctx.p_minus_1 % (2 * m) != 0:
        raise HypothesisViolation(
            f"2m={2 * m} does not divide p-1={ctx.p_minus_1}")


def is_mth_residue(k: int, p: int | PrimeContext, m: int) -> bool:
    """Whether k is an m-th power modulo p, by the exponent criterion."""
    ctx = as_prime(p)
    if m < 1:
        raise ValueError("m must be positive")
    if ctx.p_minus_1 % m != 0:
        raise HypothesisViolation(f"p={ctx.p} is not 1 mod m={m}")
    if k % ctx.p == 0:
        raise HypothesisViolation(f"k={k} is divisible by p={ctx.p}")
    return pow(k % ctx.p, ctx.p_minus_1 // m, ctx.p) == 1


@functools.lru_cache(maxsize=65536)
def _primitive_root(p: int) -> int | None:
    """A generator of (Z/p)*, or None when p-1 resists quick factorization."""
    distinct = []
    n = p - 1
    d = 2
    while d * d <= n and d <= _TRIAL_BOUND:
        if n % d == 0:
            distinct.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n > _TRIAL_BOUND and not is_prime(n):
            return None
        distinct.append(n)
    exps = [(p - 1) // q for q in distinct]
    g = 2
    while True:
        if all(pow(g, e, p) != 1 for e in exps):
            return g
        g += 1


def residue_set(p: int | PrimeContext, m: int) -> ResidueSet:
    """All m-th power residues in [1, p-1].

    Membership is defined by the exponent test k^((p-1)/m) = 1 (mod p).  The
    set itself is built by walking the powers of g^m for a generator g, which
    produces the same subgroup in O(p/m) multiplications; when p - 1 cannot
    be factored quickly the O(p log p) exponent test is used directly.
    """
    ctx = as_prime(p)
    require_even_index(ctx, m)
    q = ctx.p
    count = ctx.p_minus_1 // m
    if m == 1:
        return ResidueSet(q, 1, tuple(range(1, q)))
    g = _primitive_root(q)
    if g is None:
        e = count
        members = tuple(k for k in range(1, q) if pow(k, e, q) == 1)
    else:
        step = pow(g, m, q)
        out = []
        cur = 1
        for _ in range(count):
            out.append(cur)
            cur = cur * step % q
        members = tuple(sorted(out))
    assert len(members) == count
    return ResidueSet(q, m, members)


def residue_sum_check(p: int | PrimeContext, m: int) -> bool:
    """Whether the members of R_m(p) sum to p(p-1)/(2m)."""
    ctx = as_prime(p)
    rs = residue_set(ctx, m)
    return sum(rs.members) == ctx.p * ctx.p_minus_1 // (2 * m)


def symbol_sign(a: int, p: int | PrimeContext, m: int) -> SignSymbol:
    """The sign d in {+1, -1} with a^((p-1)/(2m)) = d (mod p).

    Defined whenever that power is congruent to +-1, which is guaranteed when
    a is plus or minus an m-th power residue.
    """
    ctx = as_prime(p)
    require_even_index(ctx, m)
    if a % ctx.p == 0:
        raise ValueError(f"a={a} is divisible by p={ctx.p}")
    t = pow(a % ctx.p, ctx.p_minus_1 // (2 * m), ctx.p)
    if t == 1:
        value = 1
    elif t == ctx.p - 1:
        value = -1
    else:
        raise NonRealSymbol(
            f"a^((p-1)/(2m)) = {t} (mod {ctx.p}) is not +-1, the symbol is not real")
    return SignSymbol(value, a, ctx.p, 2 * m)
