"""Cycle representatives: normal forms, short-cycle decompositions, searches.

The reductions here all follow one scheme: replace the leading term of a
multigraded cycle by subtracting an explicit boundary, peel off a short cycle
(one or two terms) in the same class, and recurse on a strictly smaller
leading term.  Every step keeps an explicit boundary preimage so the final
identity  input = sum(pieces) + boundary(witness)  is machine-checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chains import KoszulChain
from .errors import (
    CycleSplitsError,
    KoszulkitError,
    NonCycleError,
)
from .homology import (
    boundary_matrix,
    chain_to_vector,
    strand_basis,
    strand_homology,
    vector_to_chain,
)
from .ideals import MonomialIdeal, principal_generator
from .linalg import RowSpace, kernel_basis
from .monomials import element_key, top_index


def is_monomial_cycle(ideal: MonomialIdeal, u, sigma) -> bool:
    """True iff x_t * u lies in the ideal for every t in sigma; u must be nonzero in S/I."""
    u = tuple(u)
    if ideal.contains(u):
        raise ValueError("monomial lies in the ideal; the element is zero")
    for t in sigma:
        v = list(u)
        v[t - 1] += 1
        if not ideal.contains(tuple(v)):
            return False
    return True


def neighbours(chain: KoszulChain, term) -> list:
    """Terms whose index subset differs from the given term's in exactly one element."""
    u, sigma = term
    s = set(sigma)
    out = []
    for v, tau in chain.terms:
        if (v, tau) == (u, sigma):
            continue
        if len(s - set(tau)) == 1:
            out.append((v, tau))
    return out


def has_neighbour(chain: KoszulChain, term) -> bool:
    if not chain.is_multigraded() or not chain.is_cycle():
        raise NonCycleError("neighbour analysis needs a multigraded cycle")
    return bool(neighbours(chain, term))


# ---------------------------------------------------------------------------
# normal form: every term with m(u) <= m(sigma)
# ---------------------------------------------------------------------------


@dataclass
class NormalizedCycle:
    chain: KoszulChain
    witness: KoszulChain  # original = chain + boundary(witness)


def _require_multigraded_cycle(z: KoszulChain) -> None:
    if not z.is_multigraded():
        raise NonCycleError("chain is not multigraded")
    if not z.is_cycle():
        raise NonCycleError("chain is not a cycle")


def normalize_cycle(z: KoszulChain) -> NormalizedCycle:
    """Boundary-equivalent cycle with m(u) <= m(sigma) in every term.

    Each round removes the greatest violating term by subtracting the boundary
    of (u / x_q) e_{sigma + q} with q the top variable of u; the replacement
    terms are strictly smaller and never violate, so the loop ends after at
    most one round per initial violation.
    """
    _require_multigraded_cycle(z)
    ideal, field = z.ideal, z.field
    witness = KoszulChain(ideal, field, z.hdeg + 1)
    current = z
    guard = z.length * (ideal.n + 2) + 8
    while True:
        violating = [
            (u, s)
            for (u, s) in current.terms
            if s and (top_index(u) or 0) > s[-1]
        ]
        if not violating:
            break
        guard -= 1
        if guard < 0:
            raise KoszulkitError("normalization failed to terminate")
        u, s = max(violating, key=lambda t: element_key(*t))
        coeff = current.terms[(u, s)]
        q = top_index(u)
        v = list(u)
        v[q - 1] -= 1
        y0 = KoszulChain.monomial(ideal, field, tuple(v), s + (q,))
        lead = y0.boundary().terms.get((u, s))
        if lead is None:
            raise KoszulkitError("expected leading term missing from boundary")
        # scale so the boundary cancels the violating term exactly
        y = y0.scale(field.div(coeff, lead))
        current = current - y.boundary()
        witness = witness + y
    result = NormalizedCycle(chain=current, witness=witness)
    if not (z - current - witness.boundary()).is_zero:
        raise KoszulkitError("normalization bookkeeping failed")
    if current.terms:
        tops = {s[-1] for (_, s) in current.terms}
        if len(tops) > 1:
            raise KoszulkitError("normal form has mixed top indices")
        r = tops.pop()
        for u, s in current.terms:
            v = list(u)
            v[r - 1] += 1
            if not ideal.contains(tuple(v)):
                raise KoszulkitError("normal form violates the top-variable membership")
    return result


# ---------------------------------------------------------------------------
# degree-2 strands: monomial cycle decomposition
# ---------------------------------------------------------------------------


@dataclass
class CycleDecomposition:
    """input = sum(pieces) + boundary(witness); every piece is a short cycle."""

    input: KoszulChain
    pieces: list
    witness: KoszulChain

    def verify(self) -> bool:
        total = KoszulChain(self.input.ideal, self.input.field, self.input.hdeg)
        for piece in self.pieces:
            if not piece.is_cycle():
                return False
            total = total + piece
        return (self.input - total - self.witness.boundary()).is_zero

    @property
    def max_piece_length(self) -> int:
        return max((p.length for p in self.pieces), default=0)

    def to_json(self):
        """Certificate with the boundary witness embedded for re-checking."""
        return {
            "input": self.input.to_json(),
            "pieces": [p.to_json() for p in self.pieces],
            "witness": self.witness.to_json(),
        }


def decompose_h2(z: KoszulChain) -> CycleDecomposition:
    """Write a multigraded 2-cycle as monomial cycles plus a boundary."""
    if z.hdeg != 2:
        raise ValueError("expected a chain in homological degree 2")
    _require_multigraded_cycle(z)
    ideal, field = z.ideal, z.field
    norm = normalize_cycle(z)
    current = norm.chain
    witness = norm.witness
    pieces = []
    guard = (current.length + 1) * (ideal.n + 2) + 8
    while not current.is_zero:
        guard -= 1
        if guard < 0:
            raise KoszulkitError("degree-2 decomposition failed to terminate")
        u1, s1, c1 = current.leading_term()
        a, r = s1
        xa_u1 = list(u1)
        xa_u1[a - 1] += 1
        if current.length == 1 or ideal.contains(tuple(xa_u1)):
            piece = KoszulChain.monomial(ideal, field, u1, s1, c1)
            if not piece.is_cycle():
                raise KoszulkitError("leading term should be a monomial cycle here")
            pieces.append(piece)
            current = current - piece
            continue
        # leading term is not a monomial cycle: cancel it against a neighbour
        partners = [
            (u, s) for (u, s) in current.terms if s != s1 and s[-1] == r
        ]
        if not partners:
            raise NonCycleError("leading term has no cancellation partner")
        u2, s2 = max(partners, key=lambda t: element_key(*t))
        b = s2[0]
        if not b > a:
            raise KoszulkitError("neighbour index should exceed the leading index")
        if u1[b - 1] < 1:
            raise KoszulkitError("neighbour does not divide the leading monomial")
        v = list(u1)
        v[b - 1] -= 1
        y = KoszulChain.monomial(ideal, field, tuple(v), (a, b, r), c1)
        dy = y.boundary()
        # dy = u2 e_{s2} - u1 e_{s1} + (x_r u1 / x_b) e_{ab}, up to the field scalar
        extracted_items = [
            (c, u, s) for (u, s), c in dy.terms.items() if s == (a, b)
        ]
        extracted = KoszulChain(ideal, field, 2, extracted_items)
        if not extracted.is_zero and not extracted.is_cycle():
            raise KoszulkitError("extracted short term is not a cycle")
        current = current + dy - extracted
        witness = witness - y
        if not extracted.is_zero:
            pieces.append(extracted)
        if not current.is_zero:
            nu, ns, _ = current.leading_term()
            if element_key(nu, ns) >= element_key(u1, s1):
                raise KoszulkitError("leading term did not decrease")
    out = CycleDecomposition(input=z, pieces=pieces, witness=witness)
    if not out.verify():
        raise KoszulkitError("degree-2 decomposition bookkeeping failed")
    if any(p.length != 1 for p in out.pieces):
        raise KoszulkitError("degree-2 pieces must be monomial")
    return out


# ---------------------------------------------------------------------------
# top-degree strands: short representatives
# ---------------------------------------------------------------------------


@dataclass
class ReducedTopCycle:
    chain: KoszulChain     # representative with at most floor(n/2) terms
    negated: bool          # True when chain ~ -input modulo boundaries
    witness: KoszulChain   # input + chain = boundary(witness) when negated,
                           # input - chain = boundary(witness) otherwise

    def verify(self, original: KoszulChain) -> bool:
        lhs = original + self.chain if self.negated else original - self.chain
        return (lhs - self.witness.boundary()).is_zero


def coefficient_classes(z: KoszulChain):
    """Partition of a top-degree multigraded cycle by the sign-adjusted coefficient.

    Terms e_{[n] minus k} with coefficient c are grouped by c * (-1)^k; each
    group is itself a cycle.
    """
    field = z.field
    groups = {}
    for (u, s), c in z.terms.items():
        missing = _missing_index(z.ideal.n, s)
        key = field.mul(c, field.one if missing % 2 == 0 else field.neg(field.one))
        groups.setdefault(key, []).append((c, u, s))
    return [z.with_items(items) for items in groups.values()]


def _missing_index(n: int, sigma) -> int:
    missing = set(range(1, n + 1)) - set(sigma)
    if len(missing) != 1:
        raise ValueError("expected a subset omitting exactly one index")
    return missing.pop()


def reduce_top_degree(z: KoszulChain) -> ReducedTopCycle:
    """Representative of +-z with at most floor(n/2) terms, in degree n-1.

    Inputs violating the alternating-coefficient pattern split into shorter
    cycles; those raise CycleSplitsError carrying the (cycle) pieces.
    """
    n = z.ideal.n
    if z.hdeg != n - 1:
        raise ValueError("expected a chain in homological degree n-1")
    _require_multigraded_cycle(z)
    ideal, field = z.ideal, z.field
    norm = normalize_cycle(z)
    current, witness = norm.chain, norm.witness
    half = n // 2
    if current.is_zero or current.length <= half:
        # z = current + boundary(witness) straight from normalization
        out = ReducedTopCycle(chain=current, negated=False, witness=witness)
        if not out.verify(z):
            raise KoszulkitError("top-degree bookkeeping failed")
        return out
    classes = coefficient_classes(current)
    if len(classes) > 1:
        for piece in classes:
            if not piece.is_cycle():
                raise KoszulkitError("coefficient class is not a cycle")
        raise CycleSplitsError(classes)
    u1, s1, c1 = current.leading_term()
    k1 = _missing_index(n, s1)
    if u1[k1 - 1] < 1:
        raise KoszulkitError("leading monomial must be divisible by its missing variable")
    v = list(u1)
    v[k1 - 1] -= 1
    sign = field.one if (k1 + 1) % 2 == 0 else field.neg(field.one)
    top = KoszulChain.monomial(ideal, field, tuple(v), tuple(range(1, n + 1)),
                               field.mul(sign, c1))
    reduced = top.boundary() - current
    if reduced.length > half:
        raise KoszulkitError("reduction exceeded the guaranteed length bound")
    for _, s in reduced.terms:
        if s in {t for (_, t) in current.terms}:
            raise KoszulkitError("reduction failed to cancel an input term")
    # z + reduced = boundary(top + witness): current = z - boundary(witness)
    out = ReducedTopCycle(chain=reduced, negated=True, witness=top + witness)
    if not out.verify(z):
        raise KoszulkitError("top-degree bookkeeping failed")
    return out


# ---------------------------------------------------------------------------
# degree-3 strands over principal p-Borel ideals
# ---------------------------------------------------------------------------


@dataclass
class H3Step:
    """One leading-term replacement: y = attached + boundary(preimage)."""

    case: str
    y: KoszulChain
    attached: KoszulChain
    preimage: KoszulChain


def _contains_shift(ideal, u, up=(), down=()):
    """Membership of u * prod(x_i, i in up) / prod(x_j, j in down)."""
    v = list(u)
    for i in up:
        v[i - 1] += 1
    for j in down:
        v[j - 1] -= 1
        if v[j - 1] < 0:
            return False
    return ideal.contains(tuple(v))


def _shift(u, up=(), down=()):
    v = list(u)
    for i in up:
        v[i - 1] += 1
    for j in down:
        v[j - 1] -= 1
        if v[j - 1] < 0:
            raise ValueError("shift left the monomial lattice")
    return tuple(v)


def h3_reduction_step(ideal: MonomialIdeal, z: KoszulChain, *, p=None) -> H3Step:
    """Leading-term replacement for a normalized multigraded 3-cycle.

    Follows the case analysis on the neighbours of the leading subset
    {a < t < r}; the replacement y has in(y) = in(z) with unit coefficient and
    at most 4 terms, and ``attached`` is a cycle of length <= 2 in y's class.
    ``p`` triggers the (expensive) principality check when given.
    """
    if z.hdeg != 3:
        raise ValueError("expected a chain in homological degree 3")
    if p is not None:
        principal_generator(ideal, p)
    _require_multigraded_cycle(z)
    if z.length < 2:
        raise ValueError("leading-term replacement needs at least two terms")
    tops = {s[-1] for (_, s) in z.terms}
    if len(tops) != 1 or any((top_index(u) or 0) > s[-1] for (u, s) in z.terms):
        raise NonCycleError(
            "expected normal form: m(u) <= m(sigma) and a common top index"
        )
    field = z.field
    u1, s1, _ = z.leading_term()
    a, t, r = s1
    xa_in = _contains_shift(ideal, u1, up=(a,))
    xt_in = _contains_shift(ideal, u1, up=(t,))

    def monomial_cycle_chain(u, sigma):
        c = KoszulChain.monomial(ideal, field, u, tuple(sorted(sigma)))
        if not c.is_zero and not c.is_cycle():
            raise KoszulkitError(
                "membership case analysis produced a non-cycle; hypotheses violated"
            )
        return c

    def build(case, attached, preimage):
        y = attached + preimage.boundary()
        lu, ls, lc = y.leading_term()
        if (lu, ls) != (u1, s1):
            raise KoszulkitError("replacement does not lead with in(z)")
        if lc == field.neg(field.one):
            # boundary orientation came out reversed; flip the whole step
            attached, preimage, y = -attached, -preimage, -y
            lc = field.one
        if lc != field.one:
            raise KoszulkitError("replacement leads with a non-unit coefficient")
        if y.length > 4:
            raise KoszulkitError("replacement is longer than four terms")
        if not y.is_cycle():
            raise KoszulkitError("replacement is not a cycle")
        return H3Step(case=case, y=y, attached=attached, preimage=preimage)

    def neighbour_q(keep, drop):
        """Largest term whose subset keeps ``keep`` and r but not ``drop``."""
        cands = [
            (u, s)
            for (u, s) in z.terms
            if s != s1 and keep in s and r in s and drop not in s
        ]
        if not cands:
            raise NonCycleError("required cancellation partner is missing")
        u, s = max(cands, key=lambda x: element_key(*x))
        (q,) = set(s) - {keep, r}
        return q

    if xa_in and xt_in:
        attached = monomial_cycle_chain(u1, s1)
        if attached.is_zero:
            raise KoszulkitError("leading term vanished; chain is corrupt")
        return build("leading-monomial", attached, KoszulChain(ideal, field, 4))

    zero4 = KoszulChain(ideal, field, 4)

    if xa_in and not xt_in:
        q = neighbour_q(a, t)
        if q <= t:
            raise KoszulkitError("neighbour should sit above the middle index")
        if not _contains_shift(ideal, u1, up=(a, r), down=(q,)):
            raise KoszulkitError(
                "membership x_a x_r u / x_q expected; exchange lemma violated"
            )
        attached = monomial_cycle_chain(_shift(u1, up=(r,), down=(q,)), (a, t, q))
        preimage = KoszulChain.monomial(ideal, field, _shift(u1, down=(q,)),
                                        (a, t, q, r))
        return build("replace-middle", attached, preimage)

    if xt_in and not xa_in:
        q = neighbour_q(t, a)
        if q <= a:
            raise KoszulkitError("neighbour index should exceed the leading index")
        if t < q:
            if not _contains_shift(ideal, u1, up=(t, r), down=(q,)):
                raise KoszulkitError(
                    "membership x_t x_r u / x_q expected; exchange lemma violated"
                )
            attached = monomial_cycle_chain(_shift(u1, up=(r,), down=(q,)), (a, t, q))
            preimage = KoszulChain.monomial(ideal, field, _shift(u1, down=(q,)),
                                            (a, t, q, r))
            return build("replace-low", attached, preimage)
        # q < t: the leading term pairs with its neighbour into a binomial cycle
        if not _contains_shift(ideal, u1, up=(a, t), down=(q,)):
            raise KoszulkitError(
                "membership x_t x_a u / x_q expected; exchange lemma violated"
            )
        other = KoszulChain.monomial(ideal, field, _shift(u1, up=(a,), down=(q,)),
                                     (q, t, r), field.neg(field.one))
        attached = KoszulChain.monomial(ideal, field, u1, s1) + other
        if not attached.is_cycle():
            raise KoszulkitError("binomial replacement is not a cycle")
        return build("binomial", attached, zero4)

    # neither x_a u1 nor x_t u1 lies in the ideal: two neighbours exist
    q = neighbour_q(a, t)
    c = neighbour_q(t, a)
    if q <= t or c <= a:
        raise KoszulkitError("neighbour ordering violates leading-term maximality")

    def construction(low_pair_idx):
        """Length-3 replacement through e_{a,t,idx,r} with idx in {q via a-side, c via t-side}."""
        attached = monomial_cycle_chain(_shift(u1, up=(r,), down=(low_pair_idx,)),
                                        (a, t, low_pair_idx))
        preimage = KoszulChain.monomial(ideal, field, _shift(u1, down=(low_pair_idx,)),
                                        tuple(sorted((a, t, low_pair_idx, r))))
        return build("two-neighbours-3", attached, preimage)

    if c == q:
        return construction(q)
    if _contains_shift(ideal, u1, up=(a, r), down=(q,)):
        return construction(q)
    if _contains_shift(ideal, u1, up=(t, r), down=(c,)):
        return construction(c)
    if not (a < c < t < q):
        raise KoszulkitError("no admissible short replacement; exchange lemmas violated")
    if not _contains_shift(ideal, u1, up=(a, t, r), down=(q, c)):
        raise KoszulkitError(
            "membership x_t x_a x_r u / (x_q x_c) expected; exchange lemma violated"
        )
    # neither part is a cycle alone: their boundaries cancel on the {t,q} face
    phi_a = KoszulChain.monomial(ideal, field, _shift(u1, up=(r,), down=(q,)),
                                 (a, t, q))
    phi_b = KoszulChain.monomial(
        ideal, field, _shift(u1, up=(a, r), down=(q, c)), (c, t, q),
        field.neg(field.one),
    )
    phi = phi_a + phi_b
    if not phi.is_cycle():
        raise KoszulkitError("binomial companion is not a cycle")
    w1 = KoszulChain.monomial(ideal, field, _shift(u1, down=(q,)), (a, t, q, r))
    w2 = KoszulChain.monomial(ideal, field, _shift(u1, up=(a,), down=(c, q)),
                              (c, t, q, r), field.neg(field.one))
    return build("two-neighbours-4", phi, w1 + w2)


def decompose_h3(ideal: MonomialIdeal, z: KoszulChain, *, p=None) -> CycleDecomposition:
    """Write a multigraded 3-cycle as cycles of length <= 2 plus a boundary.

    Valid over principal p-Borel ideals; pass ``p`` to have principality
    checked once up front.
    """
    if z.hdeg != 3:
        raise ValueError("expected a chain in homological degree 3")
    if p is not None:
        principal_generator(ideal, p)
    _require_multigraded_cycle(z)
    field = z.field
    norm = normalize_cycle(z)
    current, witness = norm.chain, norm.witness
    pieces = []
    guard = (current.length + 1) * (ideal.n + 3) ** 2 + 16
    while not current.is_zero:
        guard -= 1
        if guard < 0:
            raise KoszulkitError("degree-3 decomposition failed to terminate")
        if current.length <= 2:
            pieces.append(current)
            current = KoszulChain(ideal, field, 3)
            break
        u1, s1, c1 = current.leading_term()
        step = h3_reduction_step(ideal, current)
        if not step.attached.is_zero:
            pieces.append(step.attached.scale(c1))
        witness = witness + step.preimage.scale(c1)
        current = current - step.y.scale(c1)
        if not current.is_zero:
            nu, ns, _ = current.leading_term()
            if element_key(nu, ns) >= element_key(u1, s1):
                raise KoszulkitError("leading term did not decrease")
    out = CycleDecomposition(input=z, pieces=pieces, witness=witness)
    if not out.verify():
        raise KoszulkitError("degree-3 decomposition bookkeeping failed")
    if any(p_.length > 2 for p_ in out.pieces):
        raise KoszulkitError("degree-3 pieces must have length at most 2")
    return out


# ---------------------------------------------------------------------------
# exhaustive minimal-length search
# ---------------------------------------------------------------------------


@dataclass
class MinLengthReport:
    status: str                  # "ok" | "bound-exceeded"
    multidegree: tuple
    strand_dim: int
    betti: int
    spanning_length: int | None  # least k with <=k-term cycles spanning homology
    target_lengths: list         # per target: least k covering its class, or None
    witnesses: list = None       # short cycles that extended the span, in order
    note: str = ""


DEFAULT_STRAND_CAP = 24
DEFAULT_LENGTH_CAP = 4


def min_length_report(
    ideal: MonomialIdeal,
    i: int,
    a,
    field,
    k_max: int = DEFAULT_LENGTH_CAP,
    targets=(),
    strand_cap: int = DEFAULT_STRAND_CAP,
) -> MinLengthReport:
    """Exhaustively search cycles supported on <= k strand elements, k <= k_max.

    Reports the least k whose cycles span the strand homology modulo
    boundaries, and for each target cycle the least k whose span covers its
    class.  Refuses (status "bound-exceeded") past the configured caps
    rather than silently truncating.
    """
    a = tuple(a)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    basis = strand_basis(ideal, i, a)
    dim = len(basis)
    if dim > strand_cap or k_max > DEFAULT_LENGTH_CAP:
        return MinLengthReport(
            status="bound-exceeded",
            multidegree=a,
            strand_dim=dim,
            betti=-1,
            spanning_length=None,
            target_lengths=[None] * len(targets),
            witnesses=[],
            note=f"aborted, bound exceeded: strand dim {dim} (cap {strand_cap}), "
                 f"k_max {k_max} (cap {DEFAULT_LENGTH_CAP})",
        )
    sh = strand_homology(ideal, i, a, field)
    target_vectors = []
    for tchain in targets:
        if not tchain.is_cycle():
            raise NonCycleError("targets must be cycles in the strand")
        target_vectors.append(chain_to_vector(tchain, basis, field))
    cycle_dim = len(sh.cycle_vectors)
    space = RowSpace(field, sh.boundary_vectors)
    target_found = [None] * len(targets)
    spanning = 0 if sh.betti == 0 else None
    witnesses = []
    low_basis = strand_basis(ideal, i - 1, a)
    matrix = boundary_matrix(ideal, low_basis, basis)
    columns = matrix.columns(field)
    for k in range(1, k_max + 1):
        if spanning is not None and all(t is not None for t in target_found):
            break
        for subset in combinations(range(dim), k):
            sub = _submatrix(columns, subset, len(low_basis))
            for vec in kernel_basis(sub, field):
                full = [field.zero] * dim
                for pos, cval in zip(subset, vec):
                    full[pos] = cval
                if space.add(full):
                    witnesses.append(
                        vector_to_chain(ideal, field, i, basis, full)
                    )
        if spanning is None and space.dim == cycle_dim:
            spanning = k
        for idx, tv in enumerate(target_vectors):
            if target_found[idx] is None and space.contains(tv):
                target_found[idx] = k
    return MinLengthReport(
        status="ok",
        multidegree=a,
        strand_dim=dim,
        betti=sh.betti,
        spanning_length=spanning,
        target_lengths=target_found,
        witnesses=witnesses,
    )


def _submatrix(columns, subset, rows):
    from .linalg import SparseMatrix

    m = SparseMatrix(rows, len(subset))
    for cnew, cold in enumerate(subset):
        for r, v in enumerate(columns[cold]):
            if v:
                m.entries[(r, cnew)] = v
    return m


# ---------------------------------------------------------------------------
# basis verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyResult:
    ok: bool
    failure: str | None
    strand_counts: dict  # multidegree -> (given, betti)

    def __bool__(self):
        return self.ok


def verify_basis(ideal: MonomialIdeal, chains, i: int, field) -> VerifyResult:
    """Check that the chains' classes form a basis of degree-i homology.

    (a) each candidate is a nonzero multigraded cycle of degree i;
    (b) per multidegree, classes are independent modulo boundaries;
    (c) counts match the strand Betti numbers everywhere (including strands
        the candidates miss).
    """
    from .homology import candidate_multidegrees

    groups = {}
    for idx, chain in enumerate(chains):
        if chain.hdeg != i:
            return VerifyResult(False, f"candidate {idx} has degree {chain.hdeg}, not {i}", {})
        if chain.is_zero:
            return VerifyResult(False, f"candidate {idx} is zero in the quotient", {})
        if not chain.is_multigraded():
            return VerifyResult(False, f"candidate {idx} is not multigraded", {})
        if not chain.is_cycle():
            return VerifyResult(False, f"candidate {idx} is not a cycle", {})
        groups.setdefault(chain.multidegree(), []).append(chain)
    counts = {}
    for a, group in groups.items():
        sh = strand_homology(ideal, i, a, field)
        counts[a] = (len(group), sh.betti)
        space = sh.boundary_space()
        for chain in group:
            vec = chain_to_vector(chain, sh.basis, field)
            if not space.add(vec):
                return VerifyResult(
                    False,
                    f"classes at multidegree {a} are dependent modulo boundaries",
                    counts,
                )
        if len(group) != sh.betti:
            return VerifyResult(
                False,
                f"multidegree {a} carries {sh.betti} classes but {len(group)} candidates",
                counts,
            )
    for a in candidate_multidegrees(ideal, i):
        if a in counts:
            continue
        b = strand_homology(ideal, i, a, field).betti
        if b:
            counts[tuple(a)] = (0, b)
            return VerifyResult(
                False, f"multidegree {tuple(a)} has homology but no candidates", counts
            )
    return VerifyResult(True, None, counts)
