"""Multigraded Koszul homology of S/I: strands, Betti tables, corners.

Per multidegree a, the degree-i strand has basis (u, sigma) with |sigma| = i,
x_sigma | x^a and u = x^a / x_sigma outside I.  Homology in the strand is
ker d_i / im d_{i+1}, computed by exact elimination.  Nonzero homology in
degree i >= 1 only occurs at multidegrees that are lcms of exactly i minimal
generators, so tables are assembled over the lcm lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chains import KoszulChain
from .errors import KoszulkitError
from .ideals import MonomialIdeal, borel_chain, is_strongly_stable
from .linalg import RowSpace, SparseMatrix, kernel_basis, solve_combination
from .monomials import element_key, lcm as mono_lcm, divides, top_index


def strand_basis(ideal: MonomialIdeal, i: int, a):
    """Strand basis, greatest element first; empty when i is out of range."""
    a = tuple(a)
    if len(a) != ideal.n:
        raise ValueError("multidegree over wrong variable count")
    if any(e < 0 for e in a):
        raise ValueError("multidegree must be componentwise nonnegative")
    if i < 0 or i > ideal.n:
        return []
    positions = [k + 1 for k, e in enumerate(a) if e > 0]
    if i > len(positions):
        return []
    out = []
    for sigma in combinations(positions, i):
        u = list(a)
        for idx in sigma:
            u[idx - 1] -= 1
        u = tuple(u)
        if not ideal.contains(u):
            out.append((u, sigma))
    out.sort(key=lambda t: element_key(*t), reverse=True)
    return out


def boundary_matrix(ideal: MonomialIdeal, basis_low, basis_high) -> SparseMatrix:
    """Matrix of the boundary from span(basis_high) to span(basis_low); entries +-1."""
    index = {t: r for r, t in enumerate(basis_low)}
    m = SparseMatrix(len(basis_low), len(basis_high))
    for c, (u, sigma) in enumerate(basis_high):
        for k, idx in enumerate(sigma):
            v = list(u)
            v[idx - 1] += 1
            v = tuple(v)
            if ideal.contains(v):
                continue
            row = index.get((v, sigma[:k] + sigma[k + 1:]))
            if row is None:
                raise KoszulkitError("boundary left the strand; bases are inconsistent")
            m.set(row, c, 1 if k % 2 == 0 else -1)
    return m


def chain_to_vector(chain: KoszulChain, basis, field):
    vec = [field.zero] * len(basis)
    index = {t: k for k, t in enumerate(basis)}
    for (u, s), c in chain.terms.items():
        k = index.get((u, s))
        if k is None:
            raise KoszulkitError("chain term outside the strand basis")
        vec[k] = field.of(c)
    return vec


def vector_to_chain(ideal, field, i, basis, vec) -> KoszulChain:
    items = [(c, u, s) for c, (u, s) in zip(vec, basis) if c]
    return KoszulChain(ideal, field, i, items)


@dataclass
class StrandHomology:
    """Cycles, boundaries, and homology of one (i, multidegree) strand."""

    ideal: MonomialIdeal
    field: object
    i: int
    multidegree: tuple
    basis: list            # strand basis of K_i
    cycle_vectors: list    # kernel basis of d_i
    boundary_vectors: list # columns of d_{i+1}, spanning the boundaries
    betti: int
    rep_vectors: list      # cycle vectors whose classes form a homology basis

    @property
    def representatives(self):
        return [
            vector_to_chain(self.ideal, self.field, self.i, self.basis, v)
            for v in self.rep_vectors
        ]

    def cycles(self):
        return [
            vector_to_chain(self.ideal, self.field, self.i, self.basis, v)
            for v in self.cycle_vectors
        ]

    def boundary_space(self) -> RowSpace:
        return RowSpace(self.field, self.boundary_vectors)

    def cycle_space(self) -> RowSpace:
        return RowSpace(self.field, self.cycle_vectors)

    def class_vector(self, chain: KoszulChain):
        return chain_to_vector(chain, self.basis, self.field)

    def is_boundary(self, chain: KoszulChain) -> bool:
        return self.boundary_space().contains(self.class_vector(chain))


def strand_homology(ideal: MonomialIdeal, i: int, a, field) -> StrandHomology:
    a = tuple(a)
    basis = strand_basis(ideal, i, a)
    basis_low = strand_basis(ideal, i - 1, a) if i >= 1 else []
    basis_high = strand_basis(ideal, i + 1, a)
    if i == 0:
        cycles = [[field.one]] if len(basis) == 1 else []
    else:
        d_i = boundary_matrix(ideal, basis_low, basis)
        cycles = kernel_basis(d_i, field)
    d_up = boundary_matrix(ideal, basis, basis_high)
    boundaries = [col for col in d_up.columns(field) if any(col)]
    space = RowSpace(field, boundaries)
    betti = len(cycles) - space.dim
    reps = []
    work = RowSpace(field, boundaries)
    for v in cycles:
        if work.add(v):
            reps.append(v)
    if len(reps) != betti:
        raise KoszulkitError("rank bookkeeping failed in strand homology")
    return StrandHomology(
        ideal=ideal,
        field=field,
        i=i,
        multidegree=a,
        basis=basis,
        cycle_vectors=cycles,
        boundary_vectors=boundaries,
        betti=betti,
        rep_vectors=reps,
    )


def strand_betti(ideal: MonomialIdeal, i: int, a, field) -> int:
    return strand_homology(ideal, i, a, field).betti


def boundary_preimage(ideal, field, target: KoszulChain):
    """Chain w of degree i+1 with boundary(w) == target, or None."""
    a = target.multidegree()
    if a is None:
        return KoszulChain(ideal, field, target.hdeg + 1)
    basis_high = strand_basis(ideal, target.hdeg + 1, a)
    basis_low = strand_basis(ideal, target.hdeg, a)
    matrix = boundary_matrix(ideal, basis_low, basis_high)
    cols = matrix.columns(field)
    coeffs = solve_combination(cols, chain_to_vector(target, basis_low, field), field)
    if coeffs is None:
        return None
    return vector_to_chain(ideal, field, target.hdeg + 1, basis_high, coeffs)


# ---------------------------------------------------------------------------
# candidate multidegrees via the lcm lattice
# ---------------------------------------------------------------------------


def lcm_lattice(ideal: MonomialIdeal, max_level=None):
    """Map multidegree -> (level, divisor count).

    ``level`` is the least subset size whose lcm realizes the multidegree;
    the divisor count is how many minimal generators divide it.
    """
    gens = ideal.gens
    if max_level is None:
        max_level = len(gens)
    lattice = {}
    frontier = []
    for g in gens:
        if g not in lattice:
            lattice[g] = 1
            frontier.append(g)
    level = 1
    while frontier and level < max_level:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mono_lcm(a, g)
                if b not in lattice:
                    lattice[b] = level + 1
                    nxt.append(b)
        frontier = nxt
        level += 1
    return {a: (lvl, sum(1 for g in gens if divides(g, a))) for a, lvl in lattice.items()}


def candidate_multidegrees(ideal: MonomialIdeal, i: int, lattice=None):
    """Multidegrees that can carry nonzero degree-i homology.

    For i >= 1 these are the lcms of exactly i minimal generators; for i = 0
    the single multidegree 0.
    """
    if i < 0:
        return []
    if i == 0:
        return [(0,) * ideal.n]
    if lattice is None:
        lattice = lcm_lattice(ideal, max_level=i)
    out = [a for a, (lvl, cnt) in lattice.items() if lvl <= i <= cnt]
    out.sort()
    return out


def all_multidegrees_upto(bound):
    """Every multidegree componentwise <= bound; brute-force oracle only."""
    n = len(bound)

    def rec(k):
        if k == n:
            yield ()
            return
        for rest in rec(k + 1):
            for e in range(bound[k] + 1):
                yield (e,) + rest

    return list(rec(0))


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------


class BettiTable:
    """Graded Betti numbers of S/I; absent entries are zero."""

    __slots__ = ("field_name", "entries")

    def __init__(self, field_name, entries):
        self.field_name = field_name
        self.entries = {
            (int(i), int(j)): int(v) for (i, j), v in dict(entries).items() if v
        }

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def projective_dimension(self) -> int:
        return max((i for (i, _) in self.entries), default=0)

    def regularity(self) -> int:
        """max(j - i) over nonzero entries."""
        if not self.entries:
            raise ValueError("empty table")
        return max(j - i for (i, j) in self.entries)

    def ideal_regularity(self) -> int:
        """Regularity of I itself: one more than the regularity of S/I."""
        return self.regularity() + 1

    def t_regularity(self, t: int):
        """max(j - i) over entries with i >= t; None when no such entry."""
        vals = [j - i for (i, j) in self.entries if i >= t]
        return max(vals) if vals else None

    def corners(self):
        """(t, r) pairs where the tail regularity strictly drops at t >= 1.

        Equivalently the positions of the extremal Betti numbers: nonzero
        beta_{t, t+r} with no other nonzero entry weakly above and to the
        right in (homological degree, diagonal) coordinates.
        """
        out = set()
        pd = self.projective_dimension()
        for t in range(1, pd + 1):
            here = self.t_regularity(t)
            nxt = self.t_regularity(t + 1)
            if here is not None and (nxt is None or nxt < here):
                out.add((t, here))
        return out

    def corner_values(self):
        return {(t, r): self.get(t, t + r) for t, r in self.corners()}

    def __eq__(self, other):
        return isinstance(other, BettiTable) and other.entries == self.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def to_json(self):
        return {
            "field": self.field_name,
            "entries": [
                {"i": i, "j": j, "dim": v}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    def render(self) -> str:
        """Betti diagram with homological degree across, j - i down."""
        if not self.entries:
            return "(empty table)"
        imax = self.projective_dimension()
        dmin = min(j - i for (i, j) in self.entries)
        dmax = max(j - i for (i, j) in self.entries)
        width = max(
            6, max(len(str(v)) for v in self.entries.values()) + 2
        )
        header = "      " + "".join(f"{i:>{width}}" for i in range(imax + 1))
        lines = [header]
        totals = "total:" + "".join(f"{self.total(i):>{width}}" for i in range(imax + 1))
        lines.append(totals)
        for d in range(dmin, dmax + 1):
            row = f"{d:>5}:"
            for i in range(imax + 1):
                v = self.get(i, i + d)
                row += f"{v if v else '.':>{width}}"
            lines.append(row)
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable({self.field_name}, {self.entries})"


def betti_table(ideal: MonomialIdeal, field, *, bruteforce: bool = False) -> BettiTable:
    """Full table for S/I over the given field; errors on the unit ideal.

    ``bruteforce=True`` scans every multidegree below lcm(G(I)) instead of the
    lcm-lattice candidates; it exists as a correctness oracle for small inputs.
    """
    if ideal.is_unit:
        raise ValueError("S/I is zero for the unit ideal; no Betti table")
    entries = {(0, 0): 1}
    lattice = None if bruteforce else lcm_lattice(ideal)
    for i in range(1, ideal.n + 1):
        if bruteforce:
            bound = (0,) * ideal.n
            for g in ideal.gens:
                bound = mono_lcm(bound, g)
            degrees = all_multidegrees_upto(bound)
        else:
            degrees = candidate_multidegrees(ideal, i, lattice)
        for a in degrees:
            b = strand_betti(ideal, i, a, field)
            if b:
                key = (i, sum(a))
                entries[key] = entries.get(key, 0) + b
    return BettiTable(field.name, entries)


def betti_tables(ideal: MonomialIdeal, fields):
    """Tables over several fields, sharing the candidate enumeration."""
    return {f.name: betti_table(ideal, f) for f in fields}


def eliahou_kervaire_table(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of S/I predicted by the Eliahou-Kervaire resolution.

    Only valid for strongly stable ideals (checked); the prediction is
    independent of the coefficient field.
    """
    if ideal.is_unit or ideal.is_zero:
        raise ValueError("need a proper nonzero monomial ideal")
    if not is_strongly_stable(ideal):
        raise ValueError("ideal is not strongly stable")
    entries = {(0, 0): 1}
    from math import comb

    for g in ideal.gens:
        m = top_index(g)
        d = sum(g)
        for i in range(m):
            key = (i + 1, d + i)
            entries[key] = entries.get(key, 0) + comb(m - 1, i)
    return BettiTable("ANY", entries)


def chain_corner_candidates(ideal: MonomialIdeal):
    """Corner candidates (t, r, dim) read off the saturation chain.

    The actual corners of S/I form a subset, with matching dimensions; the
    candidates do not depend on any field.
    """
    return {
        (stage.n_stage, stage.top_socle_degree, stage.corner_dimension)
        for stage in borel_chain(ideal)
    }
