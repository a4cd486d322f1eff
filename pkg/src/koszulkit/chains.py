"""Koszul chains with coefficients in S/I.

A chain in homological degree i is a field-linear combination of terms
u * e_sigma with u a monomial outside the context ideal and sigma a strictly
increasing tuple of i indices.  Terms whose monomial lies in the ideal are
dropped on construction: coefficients live in the quotient.

The boundary uses the sign convention
    d(e_{j1<...<ji}) = sum_k (-1)^(k+1) x_{jk} e_{sigma \\ jk}.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NonCycleError
from .ideals import MonomialIdeal
from .monomials import element_key, multiply, render_monomial, subset_monomial


def check_subset(n: int, sigma, size=None) -> tuple:
    s = tuple(sigma)
    if any(not 1 <= i <= n for i in s):
        raise ValueError(f"subset {s} not inside 1..{n}")
    if list(s) != sorted(set(s)):
        raise ValueError(f"subset {s} must be strictly increasing")
    if size is not None and len(s) != size:
        raise ValueError(f"subset {s} does not have size {size}")
    return s


class KoszulChain:
    """Immutable-by-convention chain; arithmetic returns new chains."""

    __slots__ = ("ideal", "field", "hdeg", "terms")

    def __init__(self, ideal: MonomialIdeal, field, hdeg: int, items=()):
        if hdeg < 0:
            raise ValueError("negative homological degree")
        self.ideal = ideal
        self.field = field
        self.hdeg = hdeg
        terms = {}
        for coeff, u, sigma in items:
            u = tuple(u)
            if len(u) != ideal.n:
                raise DimensionMismatch("term over wrong variable count")
            if any(e < 0 for e in u):
                raise ValueError("negative exponent in chain term")
            sigma = check_subset(ideal.n, sigma, hdeg)
            c = field.of(coeff)
            if not c or ideal.contains(u):
                continue
            key = (u, sigma)
            if key in terms:
                c = field.add(terms[key], c)
                if c:
                    terms[key] = c
                else:
                    del terms[key]
            else:
                terms[key] = c
        self.terms = terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ideal, field, hdeg) -> "KoszulChain":
        return cls(ideal, field, hdeg)

    @classmethod
    def monomial(cls, ideal, field, u, sigma, coeff=1) -> "KoszulChain":
        sigma = tuple(sigma)
        return cls(ideal, field, len(sigma), [(coeff, u, sigma)])

    def with_items(self, items) -> "KoszulChain":
        return KoszulChain(self.ideal, self.field, self.hdeg, items)

    def reinterpret(self, ideal: MonomialIdeal) -> "KoszulChain":
        """Same terms read modulo another ideal (terms inside it vanish)."""
        if ideal.n != self.ideal.n:
            raise DimensionMismatch("reinterpretation over wrong variable count")
        return KoszulChain(
            ideal, self.field, self.hdeg,
            [(c, u, s) for (u, s), c in self.terms.items()],
        )

    def with_field(self, field) -> "KoszulChain":
        """Same terms with coefficients converted into another field."""
        from fractions import Fraction

        items = []
        for (u, s), c in self.terms.items():
            if isinstance(c, Fraction) and c.denominator != 1:
                value = field.div(field.of(c.numerator), field.of(c.denominator))
            else:
                value = field.of(int(c))
            items.append((value, u, s))
        return KoszulChain(self.ideal, field, self.hdeg, items)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def length(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        """Terms (u, sigma, coeff), greatest Koszul element first."""
        keys = sorted(self.terms, key=lambda t: element_key(*t), reverse=True)
        return [(u, s, self.terms[(u, s)]) for u, s in keys]

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero chain has no leading term")
        u, s = max(self.terms, key=lambda t: element_key(*t))
        return u, s, self.terms[(u, s)]

    def multidegree(self):
        """Common multidegree u * x_sigma; NonCycleError when terms mix degrees."""
        if not self.terms:
            return None
        degrees = {
            multiply(u, subset_monomial(self.ideal.n, s)) for u, s in self.terms
        }
        if len(degrees) > 1:
            raise NonCycleError("chain is not multigraded")
        return next(iter(degrees))

    def is_multigraded(self) -> bool:
        if not self.terms:
            return True
        return len({
            multiply(u, subset_monomial(self.ideal.n, s)) for u, s in self.terms
        }) == 1

    def is_cycle(self) -> bool:
        return self.boundary().is_zero

    # -- arithmetic --------------------------------------------------------------

    def _compat(self, other: "KoszulChain") -> None:
        if (other.ideal, other.hdeg) != (self.ideal, self.hdeg) or other.field != self.field:
            raise DimensionMismatch("chains live in different complexes")

    def __add__(self, other: "KoszulChain") -> "KoszulChain":
        self._compat(other)
        items = [(c, u, s) for (u, s), c in self.terms.items()]
        items += [(c, u, s) for (u, s), c in other.terms.items()]
        return self.with_items(items)

    def __sub__(self, other: "KoszulChain") -> "KoszulChain":
        return self + other.scale(self.field.neg(self.field.one))

    def __neg__(self) -> "KoszulChain":
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "KoszulChain":
        c = self.field.of(c)
        return self.with_items([(self.field.mul(c, v), u, s) for (u, s), v in self.terms.items()])

    def times_monomial(self, v) -> "KoszulChain":
        """Multiply every coefficient monomial by v (terms landing in I vanish)."""
        return self.with_items(
            [(c, multiply(u, v), s) for (u, s), c in self.terms.items()]
        )

    def boundary(self) -> "KoszulChain":
        if self.hdeg == 0:
            return KoszulChain(self.ideal, self.field, 0)
        items = []
        one = self.field.one
        for (u, sigma), coeff in self.terms.items():
            for k, idx in enumerate(sigma):
                sign = one if k % 2 == 0 else self.field.neg(one)
                v = list(u)
                v[idx - 1] += 1
                items.append((
                    self.field.mul(coeff, sign),
                    tuple(v),
                    sigma[:k] + sigma[k + 1:],
                ))
        return KoszulChain(self.ideal, self.field, self.hdeg - 1, items)

    def wedge_index(self, idx: int) -> "KoszulChain":
        """Wedge every term with e_idx on the right; idx must exceed all entries."""
        items = []
        for (u, sigma), coeff in self.terms.items():
            if sigma and idx <= sigma[-1]:
                raise ValueError("wedge index must exceed existing subset entries")
            items.append((coeff, u, sigma + (idx,)))
        return KoszulChain(self.ideal, self.field, self.hdeg + 1, items)

    # -- equality / rendering --------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, KoszulChain)
            and other.ideal == self.ideal
            and other.field == self.field
            and other.hdeg == self.hdeg
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ideal, self.hdeg, frozenset(self.terms.items())))

    def term_set(self):
        """Hashable view ignoring coefficients; handy for comparing basis listings."""
        return frozenset(self.terms)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for u, sigma, coeff in self.sorted_terms():
            body = f"{render_monomial(u)}*e{{{','.join(map(str, sigma))}}}"
            parts.append(f"({coeff})*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"KoszulChain({self.render()})"

    def to_json(self):
        return {
            "i": self.hdeg,
            "terms": [
                {"coeff": str(c), "u": list(u), "sigma": list(s)}
                for u, s, c in self.sorted_terms()
            ],
        }
