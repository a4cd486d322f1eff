"""Monomial ideals, ideal arithmetic, and the p-Borel constructions.

A ``MonomialIdeal`` is held by its unique minimal generating set (an antichain
under divisibility), canonically sorted, so equality of ideals is equality of
generator tuples.  Membership of a monomial is divisibility by a generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import (
    DimensionMismatch,
    NotBorelTypeError,
    NotPrimeError,
    NotPrincipalBorelError,
)
from . import monomials as mono
from .monomials import (
    divides,
    exact_divide,
    is_prime,
    lcm,
    padic_digits,
    rlex_key,
    top_index,
    unit,
)


def minimalize(n: int, gens):
    """Divisibility antichain generating the same ideal, sorted canonically."""
    seen = set()
    pool = []
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch(f"generator over {len(g)} variables, expected {n}")
        if any(e < 0 for e in g):
            raise ValueError("negative exponent in generator")
        if g not in seen:
            seen.add(g)
            pool.append(g)
    pool.sort(key=sum)
    minimal = []
    for g in pool:
        if not any(divides(h, g) for h in minimal):
            minimal.append(g)
    minimal.sort(key=rlex_key, reverse=True)
    return tuple(minimal)


class MonomialIdeal:
    """Monomial ideal with minimal generators; zero ideal = no generators."""

    __slots__ = ("n", "gens", "_scan")

    def __init__(self, n: int, gens=(), *, _minimal=False):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.gens = tuple(gens) if _minimal else minimalize(n, gens)
        # degree-ascending copy: low-degree generators divide more monomials
        self._scan = tuple(sorted(self.gens, key=sum))

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def contains(self, u) -> bool:
        if len(u) != self.n:
            raise DimensionMismatch(f"monomial over {len(u)} variables, ideal over {self.n}")
        for g in self._scan:
            for a, b in zip(g, u):
                if a > b:
                    break
            else:
                return True
        return False

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def top_variable(self):
        """Largest variable index appearing in any generator; None if none do."""
        best = None
        for g in self.gens:
            t = top_index(g)
            if t is not None and (best is None or t > best):
                best = t
        return best

    def generator_degrees(self):
        return tuple(sum(g) for g in self.gens)

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MonomialIdeal") -> None:
        if other.n != self.n:
            raise DimensionMismatch(f"ideals over {self.n} and {other.n} variables")

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n)
        gens = {mono.multiply(g, h) for g in self.gens for h in other.gens}
        return MonomialIdeal(self.n, gens)

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = MonomialIdeal(self.n, [unit(self.n)])
        base = self
        while k:
            if k & 1:
                out = out.product(base)
            k >>= 1
            if k:
                base = base.product(base)
        return out

    def frobenius(self, q: int) -> "MonomialIdeal":
        """Generators with every exponent multiplied by q."""
        if q < 1:
            raise ValueError("frobenius exponent must be >= 1")
        return MonomialIdeal(
            self.n, [tuple(e * q for e in g) for g in self.gens], _minimal=True
        )

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n)
        return MonomialIdeal(self.n, {lcm(g, h) for g in self.gens for h in other.gens})

    def colon(self, v) -> "MonomialIdeal":
        """(I : v) for a monomial v."""
        if len(v) != self.n:
            raise DimensionMismatch("monomial dimension mismatch")
        return MonomialIdeal(
            self.n, [exact_divide(g, mono.gcd(g, v)) for g in self.gens]
        )

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J) = intersection of (I : g) over generators g of J."""
        self._check(other)
        if other.is_zero:
            return MonomialIdeal(self.n, [unit(self.n)])
        out = None
        for g in other.gens:
            piece = self.colon(g)
            out = piece if out is None else out.intersect(piece)
        return out

    def saturate_variable(self, j: int) -> "MonomialIdeal":
        """(I : x_j^inf): the j-th exponent of every generator drops to zero."""
        if not 1 <= j <= self.n:
            raise ValueError(f"variable index {j} out of range 1..{self.n}")
        return MonomialIdeal(
            self.n,
            [tuple(0 if k == j - 1 else e for k, e in enumerate(g)) for g in self.gens],
        )

    def saturate_prefix(self, j: int) -> "MonomialIdeal":
        """(I : (x_1..x_j)^inf), by iterating the colon until it stabilizes."""
        if not 1 <= j <= self.n:
            raise ValueError(f"variable index {j} out of range 1..{self.n}")
        prefix = MonomialIdeal(self.n, [mono.variable(self.n, k) for k in range(1, j + 1)])
        current = self
        while True:
            nxt = current.colon_ideal(prefix)
            if nxt == current:
                return current
            current = nxt

    def saturation(self) -> "MonomialIdeal":
        return self.saturate_prefix(self.n)

    def project_drop_last(self) -> "MonomialIdeal":
        """Image under x_n -> 0, as an ideal over n-1 variables."""
        if self.n < 2:
            raise ValueError("cannot drop the last variable of a 1-variable ring")
        kept = [g[:-1] for g in self.gens if g[-1] == 0]
        return MonomialIdeal(self.n - 1, kept, _minimal=True)

    def extend(self, n: int) -> "MonomialIdeal":
        """Same generators viewed over a larger variable count."""
        if n < self.n:
            raise ValueError("extension must not shrink the ring")
        pad = (0,) * (n - self.n)
        return MonomialIdeal(n, [g + pad for g in self.gens], _minimal=True)

    def restrict_prefix(self, k: int) -> "MonomialIdeal":
        """Sub-ideal of generators supported on x_1..x_k, over k variables."""
        if not 1 <= k <= self.n:
            raise ValueError("bad prefix length")
        kept = [g[:k] for g in self.gens if all(e == 0 for e in g[k:])]
        return MonomialIdeal(k, kept)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and other.n == self.n
            and other.gens == self.gens
        )

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        inside = ", ".join(mono.render_monomial(g) for g in self.gens) or "0"
        return f"MonomialIdeal(n={self.n}, ({inside}))"

    def to_json(self):
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        return cls(int(data["n"]), [tuple(int(e) for e in g) for g in data["gens"]])


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n)

def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [unit(n)], _minimal=True)

def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [mono.variable(n, i) for i in range(1, n + 1)])


def prefix_power_gens(n: int, q: int, a: int, scale: int = 1):
    """Generators of ((x_1..x_q)^a)^[scale]: degree-a monomials in x_1..x_q, scaled."""
    if a == 0:
        return [unit(n)]
    gens = []
    for combo in combinations_with_replacement(range(q), a):
        exps = [0] * n
        for idx in combo:
            exps[idx] += scale
        gens.append(tuple(exps))
    return gens


# ---------------------------------------------------------------------------
# stability predicates
# ---------------------------------------------------------------------------


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Closure under x_j * (u / x_i) for j < i, checked on generators."""
    for g in ideal.gens:
        for i in range(1, ideal.n + 1):
            if g[i - 1] == 0:
                continue
            shifted = list(g)
            shifted[i - 1] -= 1
            for j in range(1, i):
                shifted[j - 1] += 1
                if not ideal.contains(tuple(shifted)):
                    return False
                shifted[j - 1] -= 1
    return True


def is_p_borel(ideal: MonomialIdeal, p: int) -> bool:
    """Closure under x_j^t * (u / x_i^t) for j < i and digitwise t <= nu_i(u)."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    for g in ideal.gens:
        for i in range(1, ideal.n + 1):
            e = g[i - 1]
            if e == 0:
                continue
            for t in _padic_lower_set(e, p):
                shifted = list(g)
                shifted[i - 1] -= t
                for j in range(1, i):
                    shifted[j - 1] += t
                    if not ideal.contains(tuple(shifted)):
                        return False
                    shifted[j - 1] -= t
    return True


def _padic_lower_set(e: int, p: int):
    """Positive t with every base-p digit of t bounded by the digit of e."""
    digits = padic_digits(e, p)
    values = [0]
    power = 1
    for d in digits:
        values = [v + c * power for v in values for c in range(d + 1)]
        power *= p
    return sorted(v for v in values if v)


def borel_type_failure(ideal: MonomialIdeal):
    """First index j where (I : x_j^inf) != (I : (x_1..x_j)^inf); None if Borel type."""
    for j in range(1, ideal.n + 1):
        if ideal.saturate_variable(j) != ideal.saturate_prefix(j):
            return j
    return None


def is_borel_type(ideal: MonomialIdeal) -> bool:
    return borel_type_failure(ideal) is None


# ---------------------------------------------------------------------------
# p-Borel factorizations
# ---------------------------------------------------------------------------


class PBorelFactorization:
    """Product presentation prod_q prod_j ((x_1..x_q)^[p^j])^alpha[q][j].

    ``alpha`` maps are stored as a tuple of rows, one per prefix length q = 1..n,
    each row a tuple of layer exponents for j = 0..s.
    """

    __slots__ = ("n", "p", "alpha", "_expanded")

    def __init__(self, n: int, p: int, alpha):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        rows = [tuple(int(e) for e in row) for row in alpha]
        if len(rows) != n:
            raise ValueError("need one exponent row per prefix length 1..n")
        width = max((len(r) for r in rows), default=0)
        rows = [r + (0,) * (width - len(r)) for r in rows]
        if any(e < 0 for r in rows for e in r):
            raise ValueError("negative layer exponent")
        self.n = n
        self.p = p
        self.alpha = tuple(rows)
        self._expanded = None

    @property
    def layers(self) -> int:
        return len(self.alpha[0]) if self.alpha else 0

    def expand(self) -> MonomialIdeal:
        if self._expanded is None:
            out = unit_ideal(self.n)
            for q in range(1, self.n + 1):
                row = self.alpha[q - 1]
                for j, e in enumerate(row):
                    if e == 0:
                        continue
                    factor = MonomialIdeal(
                        self.n, prefix_power_gens(self.n, q, e, self.p**j), _minimal=True
                    )
                    out = out.product(factor)
            self._expanded = out
        return self._expanded

    def split(self, a: int):
        """(product of factors with q <= a, product with q > a)."""
        if not 1 <= a < self.n:
            raise ValueError(f"split index {a} out of range 1..{self.n - 1}")
        low = PBorelFactorization(self.n, self.p, [
            row if q <= a else (0,) * len(row)
            for q, row in enumerate(self.alpha, start=1)
        ])
        high = PBorelFactorization(self.n, self.p, [
            row if q > a else (0,) * len(row)
            for q, row in enumerate(self.alpha, start=1)
        ])
        return low.expand(), high.expand()

    @staticmethod
    def split_monomial(u, a: int):
        """(u restricted to x_1..x_a, u restricted to x_{a+1}..x_n)."""
        n = len(u)
        if not 1 <= a < n:
            raise ValueError(f"split index {a} out of range 1..{n - 1}")
        low = tuple(e if i < a else 0 for i, e in enumerate(u))
        high = tuple(e if i >= a else 0 for i, e in enumerate(u))
        return low, high

    def to_json(self):
        return {"n": self.n, "p": self.p, "alpha": [list(r) for r in self.alpha]}

    def __repr__(self):
        return f"PBorelFactorization(n={self.n}, p={self.p}, alpha={self.alpha})"


def principal_p_borel(u, p: int) -> PBorelFactorization:
    """Factorization of the smallest p-Borel ideal containing the monomial u."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    n = len(u)
    digit_rows = [padic_digits(e, p) for e in u]
    width = max((len(r) for r in digit_rows), default=0)
    alpha = [r + (0,) * (width - len(r)) for r in digit_rows]
    return PBorelFactorization(n, p, alpha)


def principal_generator(ideal: MonomialIdeal, p: int):
    """The monomial u with ideal == <u>_p-Borel, else NotPrincipalBorelError.

    For a principal p-Borel ideal the defining monomial is the largest
    generator in the rlex order, since every exchange moves exponents to
    smaller variable indices.
    """
    if ideal.is_zero or ideal.is_unit:
        raise NotPrincipalBorelError("trivial ideal")
    u = max(ideal.gens, key=rlex_key)
    if principal_p_borel(u, p).expand() != ideal:
        raise NotPrincipalBorelError(
            f"not the smallest p-Borel ideal of a single monomial at p={p}"
        )
    return u


# ---------------------------------------------------------------------------
# saturation chain and its corner data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainStage:
    """One stage of the saturation chain of a Borel-type ideal."""

    index: int
    n_stage: int               # variable count of the stage subring
    ideal: MonomialIdeal       # I_e over the original n variables
    restricted: MonomialIdeal  # J_e = I_e read in x_1..x_{n_e}
    saturated: MonomialIdeal   # saturation of J_e inside its subring
    top_socle_degree: int      # largest d with (J^sat / J)_d nonzero
    corner_dimension: int      # dim of that top layer
    layer_dimensions: tuple    # dim (J^sat/J)_d for d = 0..top degree


def quotient_layer_dimensions(sub: MonomialIdeal, big: MonomialIdeal):
    """Per-degree counts of monomials in big \\ sub, for sub <= big of finite colength.

    Valid whenever big/sub has finite length; counts stop at the first zero
    layer past every generator degree of big.
    """
    if not sub.n == big.n:
        raise DimensionMismatch("mismatched variable counts")
    if not big.contains_ideal(sub):
        raise ValueError("expected sub contained in big")
    n = big.n
    stop_floor = big.max_generator_degree()
    dims = []
    d = 0
    while True:
        count = sum(
            1
            for u in _degree_monomials(n, d)
            if big.contains(u) and not sub.contains(u)
        )
        dims.append(count)
        if d >= stop_floor and count == 0:
            break
        d += 1
        if d > stop_floor + 4 * (n + 1) + 64:
            raise RuntimeError("quotient does not appear to have finite length")
    while dims and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


def _degree_monomials(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for e in range(d + 1):
        for rest in _degree_monomials(n - 1, d - e):
            yield (e,) + rest


def borel_chain(ideal: MonomialIdeal):
    """Stages of the iterated single-variable saturation chain.

    Requires a Borel-type input; raises NotBorelTypeError naming the failing
    index otherwise.  The unit ideal yields an empty chain.
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no saturation chain")
    j = borel_type_failure(ideal)
    if j is not None:
        raise NotBorelTypeError(j)
    stages = []
    current = ideal
    e = 0
    while not current.is_unit:
        n_stage = current.top_variable()
        restricted = current.restrict_prefix(n_stage)
        saturated = restricted.saturate_prefix(n_stage)
        layer_dims = quotient_layer_dimensions(restricted, saturated)
        if not layer_dims:
            raise RuntimeError("saturation did not move; chain stage is degenerate")
        top = len(layer_dims) - 1
        stages.append(
            ChainStage(
                index=e,
                n_stage=n_stage,
                ideal=current,
                restricted=restricted,
                saturated=saturated,
                top_socle_degree=top,
                corner_dimension=layer_dims[top],
                layer_dimensions=layer_dims,
            )
        )
        current = current.saturate_variable(n_stage)
        e += 1
    return stages


# ---------------------------------------------------------------------------
# layer regrouping for two variables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegroupResult:
    """Outcome of regrouping prod_j (m^[p^j])^a_j into strictly increasing layers."""

    layers: tuple          # ((j_0, g_0), (j_1, g_1), ...) with j strictly increasing
    bound_ok: bool         # every g_t < p^(j_{t+1} - j_t)
    verified: bool         # expand-and-compare confirmed ideal equality (n = 2)


def regroup_frobenius_layers(exponents, p: int, *, verify_n2: bool = True) -> RegroupResult:
    """Rewrite prod_j (m^[p^j])^a_j using (m^[p^c])^(2p^t) = (m^[p^c])^(p^t) m^[p^(c+t)].

    The rewrite is an ideal identity in two variables only; the returned
    ``verified`` flag records the expand-and-compare check there.  When the
    strict digit bound cannot be met the result carries ``bound_ok=False``
    rather than guessing a different normal form.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    alpha = [int(e) for e in exponents]
    if any(e < 0 for e in alpha):
        raise ValueError("negative layer exponent")
    work = dict(enumerate(alpha))

    def rewrite_once() -> bool:
        for c in sorted(work):
            e = work.get(c, 0)
            if e < 2 * p:
                continue
            # largest t with 2 p^t <= e
            t = 0
            while 2 * p ** (t + 1) <= e:
                t += 1
            if t == 0:
                continue
            work[c] = e - p**t
            work[c + t] = work.get(c + t, 0) + 1
            return True
        return False

    while rewrite_once():
        pass
    layers = tuple((j, work[j]) for j in sorted(work) if work[j] > 0)
    bound_ok = all(
        layers[t][1] < p ** (layers[t + 1][0] - layers[t][0])
        for t in range(len(layers) - 1)
    )
    verified = False
    if verify_n2:
        before = _two_var_layer_ideal(enumerate(alpha), p)
        after = _two_var_layer_ideal(layers, p)
        verified = before == after
        if not verified:
            raise RuntimeError("layer regrouping changed the ideal; rewrite is unsound")
    return RegroupResult(layers=layers, bound_ok=bound_ok, verified=verified)


def _two_var_layer_ideal(layers, p: int) -> MonomialIdeal:
    out = unit_ideal(2)
    for j, e in layers:
        if e:
            factor = MonomialIdeal(2, prefix_power_gens(2, 2, e, p**j), _minimal=True)
            out = out.product(factor)
    return out
