"""Exponent-vector monomials, divisibility, base-p digit arithmetic, term orders.

A monomial in x1..xn is a plain tuple of n non-negative ints.  Variable and
Koszul-subset indices are 1-based everywhere in the public API; exponents are
arbitrary-precision Python ints.

The order used throughout ("rlex") is graded: higher total degree is greater.
At equal degree the monomial whose first differing exponent is *smaller* is
the greater one, i.e. reverse lexicographic with x_n > ... > x_1.  This is the
direction under which the leading-term reductions on Koszul chains in this
package make progress; see the test suite for the identities that pin it down.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NonDivisibleError, NotPrimeError

Monomial = tuple  # tuple[int, ...]; alias for signatures only


def unit(n: int) -> tuple:
    if n < 1:
        raise ValueError("need at least one variable")
    return (0,) * n


def variable(n: int, i: int, power: int = 1) -> tuple:
    """The monomial x_i^power over n variables."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    if power < 0:
        raise ValueError("negative exponent")
    return tuple(power if k == i - 1 else 0 for k in range(n))


def from_pairs(n: int, pairs) -> tuple:
    """Monomial from (index, exponent) pairs, e.g. from_pairs(4, [(2, 1), (4, 2)])."""
    exps = [0] * n
    for i, e in pairs:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        if e < 0:
            raise ValueError("negative exponent")
        exps[i - 1] += e
    return tuple(exps)


def _check_same_n(a: tuple, b: tuple) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials over {len(a)} and {len(b)} variables")


def degree(u: tuple) -> int:
    return sum(u)


def is_unit(u: tuple) -> bool:
    return not any(u)


def multiply(a: tuple, b: tuple) -> tuple:
    _check_same_n(a, b)
    return tuple(x + y for x, y in zip(a, b))


def divides(a: tuple, b: tuple) -> bool:
    """True iff a | b componentwise."""
    _check_same_n(a, b)
    return all(x <= y for x, y in zip(a, b))


def exact_divide(a: tuple, b: tuple) -> tuple:
    """a / b; raises NonDivisibleError unless b | a."""
    _check_same_n(a, b)
    if not all(y <= x for x, y in zip(a, b)):
        raise NonDivisibleError(f"{b} does not divide {a}")
    return tuple(x - y for x, y in zip(a, b))


def gcd(a: tuple, b: tuple) -> tuple:
    _check_same_n(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def lcm(a: tuple, b: tuple) -> tuple:
    _check_same_n(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def exponent(u: tuple, i: int) -> int:
    """Exponent of x_i in u (1-based)."""
    if not 1 <= i <= len(u):
        raise ValueError(f"variable index {i} out of range 1..{len(u)}")
    return u[i - 1]


def top_index(u: tuple):
    """Largest variable index with positive exponent; None for the unit monomial."""
    for i in range(len(u), 0, -1):
        if u[i - 1]:
            return i
    return None


def support(u: tuple) -> tuple:
    """Sorted 1-based indices of variables dividing u."""
    return tuple(i + 1 for i, e in enumerate(u) if e)


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def rlex_key(u: tuple):
    """Sort key realizing the graded order; larger key = greater monomial."""
    return (sum(u), tuple(-e for e in u))


def rlex_compare(a: tuple, b: tuple) -> int:
    """-1, 0, or 1 as a <, =, > b in the graded reverse-lex order."""
    _check_same_n(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(a, b):
        if x != y:
            return 1 if x < y else -1
    return 0


def subset_monomial(n: int, sigma: tuple) -> tuple:
    """Squarefree monomial with support sigma (sorted 1-based indices)."""
    exps = [0] * n
    for i in sigma:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        exps[i - 1] = 1
    return tuple(exps)


def element_key(u: tuple, sigma: tuple):
    """Sort key for monomial Koszul elements u*e_sigma; larger key = greater."""
    return (rlex_key(u), rlex_key(subset_monomial(len(u), sigma)))


def koszul_element_compare(a, b) -> int:
    """Compare (u, sigma) pairs: first the monomials, then x_sigma, both by rlex."""
    (u, sigma), (v, tau) = a, b
    _check_same_n(u, v)
    c = rlex_compare(u, v)
    if c:
        return c
    return rlex_compare(subset_monomial(len(u), sigma), subset_monomial(len(v), tau))


# ---------------------------------------------------------------------------
# base-p digits
# ---------------------------------------------------------------------------


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def padic_digits(a: int, p: int) -> tuple:
    """Base-p digits of a, least significant first; () for a = 0."""
    _require_prime(p)
    if a < 0:
        raise ValueError("negative value")
    digits = []
    while a:
        a, r = divmod(a, p)
        digits.append(r)
    return tuple(digits)


def padic_value(digits, p: int) -> int:
    _require_prime(p)
    value = 0
    for d in reversed(tuple(digits)):
        if not 0 <= d < p:
            raise ValueError(f"digit {d} out of range for base {p}")
        value = value * p + d
    return value


def padic_leq(a: int, b: int, p: int) -> bool:
    """True iff every base-p digit of a is <= the matching digit of b."""
    da, db = padic_digits(a, p), padic_digits(b, p)
    if len(da) > len(db):
        return False
    return all(x <= y for x, y in zip(da, db))


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def render_monomial(u: tuple) -> str:
    """Canonical text form, e.g. x1^3*x2; the unit monomial renders as 1."""
    parts = []
    for i, e in enumerate(u, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"
