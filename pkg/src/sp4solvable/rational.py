"""Exact rational scalars.

Every quantity in this library is an exact rational number; no floating point
is used anywhere.  The backend is gmpy2's ``mpq`` when available (an order of
magnitude faster on small fractions) with ``fractions.Fraction`` as a drop-in
fallback.  Both store reduced fractions with positive denominator, so bit-exact
equality is value equality.

The wire format for rationals is the string ``"p/q"`` in lowest terms, or just
``"p"`` when the denominator is 1 (e.g. ``"-3/16"``, ``"2"``).
"""

from __future__ import annotations

from math import isqrt

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

__all__ = [
    "Q",
    "ZERO",
    "ONE",
    "parse_rational",
    "format_rational",
    "rational_sqrt",
    "rational_nth_root",
    "factor_int",
    "divisors",
    "squarefree_kernel",
]

ZERO = Q(0)
ONE = Q(1)


def parse_rational(s: str):
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Q(int(num), int(den))
    return Q(int(s))


def format_rational(q) -> str:
    """Render in lowest terms as ``"p/q"``, or ``"p"`` when q = 1."""
    q = Q(q)
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _int_nth_root(n: int, k: int):
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    if k == 1:
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    lo, hi = 1, 1
    while hi**k < n:
        hi <<= 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def rational_sqrt(q):
    """Exact square root of a rational, or None if irrational/negative."""
    return rational_nth_root(q, 2)


def rational_nth_root(q, k: int):
    """Exact rational k-th root, or None.

    For even k the input must be nonnegative; for odd k the sign is carried
    through.
    """
    q = Q(q)
    neg = q < 0
    if neg and k % 2 == 0:
        return None
    num, den = int(abs(q).numerator), int(abs(q).denominator)
    rn = _int_nth_root(num, k)
    if rn is None:
        return None
    rd = _int_nth_root(den, k)
    if rd is None:
        return None
    root = Q(rn, rd)
    return -root if neg else root


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here stay small)."""
    if n < 0:
        n = -n
    if n in (0, 1):
        return {}
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``abs(n)``."""
    ds = [1]
    for p, e in factor_int(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def squarefree_kernel(q):
    """Canonical representative of q modulo nonzero rational squares.

    Returns the sign-carrying squarefree integer part: q = s^2 * kernel(q) for
    some rational s.  kernel(0) = 0, kernel(4) = 1, kernel(-8/9) = -2.
    """
    q = Q(q)
    if q == 0:
        return ZERO
    n = int(q.numerator) * int(q.denominator)  # q ~ num*den mod squares
    sign = 1 if n > 0 else -1
    k = 1
    for p, e in factor_int(abs(n)).items():
        if e % 2:
            k *= p
    return Q(sign * k)
