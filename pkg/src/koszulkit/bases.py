"""Monomial cycle bases for power-product ideals and their inductive lifting.

For I = prod_j (m^[p^j])^{d_j} with every digit d_j < p there is a classical
monomial cycle basis of the Koszul homology (Aramova-Herzog): one element
w * (v/x_m(v))^(p^t) * x_sigma^(p^t - 1) * e_sigma per layer t, top-layer
generator w, degree-d_t monomial v, and subset sigma with m(sigma) = m(v).

For I generated as the smallest p-Borel ideal of x_{n-1}^g * x_n^a with
digitwise g_j + a_j < p, a monomial basis is assembled inductively over the
colon ideals (I : x_n^c): multiply the previous basis by x_n after removing
the part that dies, adjoin the basis of the x_n -> 0 image, and wedge the
kernel of the comparison map between consecutive images with e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chains import KoszulChain
from .errors import (
    BasisVerificationError,
    DigitBoundError,
    KoszulkitError,
    ShapeError,
)
from .cycles import verify_basis
from .homology import strand_homology
from .ideals import MonomialIdeal, PBorelFactorization, principal_p_borel
from .linalg import QQ, RowSpace
from .monomials import (
    element_key,
    from_pairs,
    padic_digits,
    top_index,
    unit,
    variable,
)


# ---------------------------------------------------------------------------
# layered monomial cycle families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerBasisElement:
    """One monomial cycle w * v'^(q) * x_sigma^(q-1) * e_sigma from layer t."""

    t: int          # layer position
    scale: int      # q = p^{j_t}
    w: tuple        # generator of the product of the higher layers
    v: tuple        # degree-d_t monomial fixing sigma's top index
    sigma: tuple    # index subset with max(sigma) = top index of v
    u: tuple        # the coefficient monomial of the chain

    def chain(self, ideal: MonomialIdeal, field) -> KoszulChain:
        return KoszulChain.monomial(ideal, field, self.u, self.sigma)


def power_product_ideal(n: int, p: int, digits) -> MonomialIdeal:
    """prod_j (m^[p^j])^(digits[j]) over n variables."""
    alpha = [(0,) * len(tuple(digits))] * (n - 1) + [tuple(digits)]
    return PBorelFactorization(n, p, alpha).expand()


def _layer_elements(n: int, p: int, layers, i: int):
    """Elements for layers ((j_t, d_t), ...) with strictly increasing j_t."""
    if i < 1 or i > n:
        return []
    js = [j for j, _ in layers]
    if js != sorted(set(js)):
        raise ValueError("layer positions must be strictly increasing")
    if any(d < 1 for _, d in layers):
        raise ValueError("layer exponents must be positive")
    out = []
    for t, (j_t, d_t) in enumerate(layers):
        scale = p**j_t
        tail = [(j_r, d_r) for j_r, d_r in layers[t + 1:]]
        if tail:
            w_pool = _layer_product_gens(n, p, tail)
        else:
            w_pool = [unit(n)]
        from .ideals import prefix_power_gens

        for v in prefix_power_gens(n, n, d_t):
            mv = top_index(v)
            v_prime = list(v)
            v_prime[mv - 1] -= 1
            for rest in combinations(range(1, mv), i - 1):
                sigma = rest + (mv,)
                base = [scale * e for e in v_prime]
                for idx in sigma:
                    base[idx - 1] += scale - 1
                for w in w_pool:
                    u = tuple(e + b for e, b in zip(w, base))
                    out.append(
                        LayerBasisElement(
                            t=t, scale=scale, w=w, v=v, sigma=sigma, u=u
                        )
                    )
    out.sort(key=lambda el: element_key(el.u, el.sigma), reverse=True)
    return out


def _layer_product_gens(n: int, p: int, layers):
    from .ideals import prefix_power_gens

    ideal = MonomialIdeal(n, [unit(n)], _minimal=True)
    for j, d in layers:
        factor = MonomialIdeal(n, prefix_power_gens(n, n, d, p**j), _minimal=True)
        ideal = ideal.product(factor)
    return list(ideal.gens)


def aramova_herzog_elements(n: int, p: int, digits, i: int):
    """Basis elements for prod_j (m^[p^j])^(digits[j]); every digit must be < p."""
    digits = tuple(int(d) for d in digits)
    for j, d in enumerate(digits):
        if d >= p:
            raise DigitBoundError(j, d, p)
        if d < 0:
            raise ValueError("negative digit")
    layers = [(j, d) for j, d in enumerate(digits) if d]
    return _layer_elements(n, p, layers, i)


def aramova_herzog_basis(factorization: PBorelFactorization, i: int, field=QQ):
    """Chains of the monomial cycle basis for a full-prefix power product.

    The factorization may only use the q = n prefix; its layer digits must be
    strictly below p.
    """
    n, p = factorization.n, factorization.p
    for q in range(1, n):
        if any(factorization.alpha[q - 1]):
            raise ShapeError("factorization must only use the full prefix (x_1..x_n)")
    digits = factorization.alpha[n - 1]
    ideal = factorization.expand()
    return [
        el.chain(ideal, field)
        for el in aramova_herzog_elements(n, p, digits, i)
    ]


def layered_basis(n: int, p: int, layer_pairs, i: int, field=QQ, ideal=None):
    """Chains for the strictly-increasing-layer variant prod_t (m^[p^{j_t}])^{g_t}."""
    layers = [(int(j), int(g)) for j, g in layer_pairs]
    if ideal is None:
        digits = {}
        for j, g in layers:
            digits[j] = digits.get(j, 0) + g
        width = max(digits) + 1 if digits else 0
        ideal = power_product_ideal(n, p, tuple(digits.get(j, 0) for j in range(width)))
    return [el.chain(ideal, field) for el in _layer_elements(n, p, layers, i)]


# ---------------------------------------------------------------------------
# colon splitting reports for <x_{n-1}^g x_n^a>
# ---------------------------------------------------------------------------


def _digit(digits, j: int) -> int:
    return digits[j] if j < len(digits) else 0


def reduced_digits(alpha_digits, a: int, p: int):
    """Digitwise-subtracted exponents, the classical prediction for the
    x_n -> 0 image of (I : x_n^a).

    Digit j keeps alpha_j - a_j when that is nonnegative and drops to zero
    otherwise, where a_j are the base-p digits of a.  This prediction is wrong
    when a digit of a exceeds the matching digit of alpha and the deficit has
    to consume a lower layer (see ``power_product_digits`` for the law that
    always holds).
    """
    a_digits = padic_digits(a, p)
    width = max(len(alpha_digits), len(a_digits))
    out = []
    for j in range(width):
        aj, cj = _digit(alpha_digits, j), _digit(a_digits, j)
        out.append(aj - cj if aj >= cj else 0)
    return tuple(out)


def power_product_digits(ideal: MonomialIdeal, p: int):
    """Digits d_j with ideal == prod_j (m^[p^j])^(d_j), or None.

    A layered power product is generated in one degree D, and base-p digits
    are unique, so the only candidate is the expansion of digits(D); the
    candidate is verified by expand-and-compare.
    """
    if ideal.is_zero:
        return None
    if ideal.is_unit:
        return ()
    degrees = set(ideal.generator_degrees())
    if len(degrees) != 1:
        return None
    digits = padic_digits(degrees.pop(), p)
    if power_product_ideal(ideal.n, p, digits) != ideal:
        return None
    return digits


def two_variable_shape(gamma: int, alpha: int, p: int, n: int):
    """(ideal, gamma digits, alpha digits) for the smallest p-Borel ideal of
    x_{n-1}^gamma * x_n^alpha."""
    if n < 2:
        raise ShapeError("need at least two variables")
    if gamma < 0 or alpha < 0:
        raise ShapeError("exponents must be nonnegative")
    u = from_pairs(n, [(n - 1, gamma), (n, alpha)])
    fact = principal_p_borel(u, p)
    return fact.expand(), padic_digits(gamma, p), padic_digits(alpha, p)


@dataclass
class ColonSplitReport:
    ok: bool
    top_split_ok: bool                 # (I : x_n^{p^r}) equals J * I'
    projection_checks: list            # (a, ok) for 0 <= a <= p^r
    digitwise_violations: list         # a where the digitwise-subtraction law fails
    r: int

    def failures(self):
        out = []
        if not self.top_split_ok:
            out.append("top colon does not split as J * I'")
        out.extend(f"projection mismatch at a={a}" for a, ok in self.projection_checks if not ok)
        return out


def colon_split_report(gamma: int, alpha: int, p: int, n: int) -> ColonSplitReport:
    """Check the colon identities used by the inductive lifting.

    (1) (I : x_n^{p^r}) = J * I' with r the top nonzero digit of alpha, J the
        x_{n-1}-part, and I' the x_n-part with that digit lowered by one;
    (2) for 0 <= a <= p^r, with A the pure part (gamma = 0):
        pi(I : x_n^a) = pi(J) * pi(A : x_n^a), and pi(A : x_n^a) is the
        layered power product on the base-p digits of its generator degree.

    The classical digitwise-subtraction prediction (layer j drops to
    alpha_j - a_j, or to zero when a_j exceeds alpha_j) is also evaluated;
    a-values where it misses are recorded in ``digitwise_violations`` without
    affecting ``ok`` — a digit carry can consume a lower layer, e.g. for
    <x1^2 x2^5> at p = 2 the image of (I : x2^2) is (x1^6), not (x1^7).
    """
    if alpha <= 0:
        raise ShapeError("the last-variable exponent must be positive")
    ideal, g_digits, a_digits = two_variable_shape(gamma, alpha, p, n)
    pure, _, _ = two_variable_shape(0, alpha, p, n)
    j_bar = power_product_ideal(n - 1, p, g_digits)
    r = len(a_digits) - 1
    top = ideal.colon(variable(n, n, p**r))
    expected_top, _, _ = two_variable_shape(gamma, alpha - p**r, p, n)
    top_ok = top == expected_top
    checks = []
    digitwise_violations = []
    for a in range(p**r + 1):
        projected = ideal.colon(variable(n, n, a)).project_drop_last()
        pure_projected = pure.colon(variable(n, n, a)).project_drop_last()
        pure_digits = power_product_digits(pure_projected, p)
        ok_a = (pure_digits is not None
                and projected == j_bar.product(pure_projected))
        checks.append((a, ok_a))
        predicted = power_product_ideal(
            n - 1, p, _pi_digit_tuple(g_digits, alpha, a, p)
        )
        if predicted != projected:
            digitwise_violations.append(a)
    ok = top_ok and all(flag for _, flag in checks)
    return ColonSplitReport(ok=ok, top_split_ok=top_ok, projection_checks=checks,
                            digitwise_violations=digitwise_violations, r=r)


# ---------------------------------------------------------------------------
# the inductive lift
# ---------------------------------------------------------------------------


@dataclass
class LiftLevel:
    """Bases of H_i(x; S/(I : x_n^a)) assembled at one colon level."""

    alpha: int
    a: int
    ideal: MonomialIdeal
    bases: dict  # i -> list of KoszulChain over ``ideal``


@dataclass
class LiftResult:
    ideal: MonomialIdeal
    n: int
    p: int
    gamma: int
    alpha: int
    bases: dict            # i -> list of KoszulChain
    levels: list           # LiftLevel records, innermost recursion first
    fallbacks: list        # descriptions of non-monomial kernel lifts (expected empty)

    def basis(self, i: int):
        return self.bases.get(i, [])

    def level(self, alpha: int, a: int) -> LiftLevel:
        for record in self.levels:
            if record.alpha == alpha and record.a == a:
                return record
        raise KeyError((alpha, a))


def _pi_digit_tuple(g_digits, alpha: int, a: int, p: int):
    reduced = reduced_digits(padic_digits(alpha, p), a, p)
    width = max(len(g_digits), len(reduced))
    return tuple(_digit(g_digits, j) + _digit(reduced, j) for j in range(width))


def lift_monomial_basis(
    gamma: int,
    alpha: int,
    p: int,
    n: int,
    field=QQ,
    *,
    verify: bool = True,
    verify_levels: bool = False,
) -> LiftResult:
    """Monomial cycle bases of H_i(x; S/I), i >= 2, for I = <x_{n-1}^g x_n^a>_p.

    Requires digitwise gamma_j + alpha_j < p.  With ``verify`` the final bases
    are checked against strand homology over ``field``; ``verify_levels``
    additionally checks every intermediate colon level (slower).
    """
    g_digits = padic_digits(gamma, p)
    a_digits = padic_digits(alpha, p)
    width = max(len(g_digits), len(a_digits))
    for j in range(width):
        if _digit(g_digits, j) + _digit(a_digits, j) >= p:
            raise DigitBoundError(j, _digit(g_digits, j) + _digit(a_digits, j), p)
    levels: list = []
    fallbacks: list = []
    bases, ideal = _lift_rec(gamma, alpha, p, n, field, levels, fallbacks,
                             verify_levels)
    if verify and not ideal.is_unit:
        for i in range(2, n + 1):
            result = verify_basis(ideal, bases.get(i, []), i, field)
            if not result.ok:
                raise BasisVerificationError(
                    f"final basis failed at i={i}: {result.failure}"
                )
    return LiftResult(
        ideal=ideal, n=n, p=p, gamma=gamma, alpha=alpha,
        bases=bases, levels=levels, fallbacks=fallbacks,
    )


def _lift_rec(gamma, alpha, p, n, field, levels, fallbacks, verify_levels):
    ideal, g_digits, a_digits = two_variable_shape(gamma, alpha, p, n)
    if alpha == 0:
        bases = {}
        if not ideal.is_unit:
            for i in range(2, n + 1):
                chains = []
                for el in aramova_herzog_elements(n - 1, p, g_digits, i):
                    chain = KoszulChain.monomial(ideal, field, el.u + (0,), el.sigma)
                    if chain.is_zero or not chain.is_cycle():
                        raise KoszulkitError("base-case element is not a cycle")
                    chains.append(chain)
                bases[i] = chains
        levels.append(LiftLevel(alpha=0, a=0, ideal=ideal, bases=bases))
        return bases, ideal
    r = len(a_digits) - 1
    upper_bases, upper_ideal = _lift_rec(
        gamma, alpha - p**r, p, n, field, levels, fallbacks, verify_levels
    )
    if ideal.colon(variable(n, n, p**r)) != upper_ideal:
        raise KoszulkitError("top colon does not match the recursive ideal")
    current_bases, current_ideal = upper_bases, upper_ideal
    for a in range(p**r - 1, -1, -1):
        target = ideal.colon(variable(n, n, a))
        current_bases = _level_step(
            target, current_ideal, current_bases,
            gamma, alpha, a, p, n, field, fallbacks,
        )
        current_ideal = target
        levels.append(LiftLevel(alpha=alpha, a=a, ideal=target, bases=current_bases))
        if verify_levels:
            for i in range(2, n + 1):
                result = verify_basis(target, current_bases.get(i, []), i, field)
                if not result.ok:
                    raise BasisVerificationError(
                        f"level alpha={alpha}, a={a} failed at i={i}: {result.failure}"
                    )
    return current_bases, current_ideal


def _level_step(T_a, T_next, M_next, gamma, alpha, a, p, n, field, fallbacks):
    """Assemble bases over T_a = (I : x_n^a) from bases over T_next = (I : x_n^{a+1})."""
    pi_a = T_a.project_drop_last()
    pi_next = T_next.project_drop_last()
    # base-p digits of the generator degree are the one valid layer
    # presentation; the classical digitwise-subtraction prediction can lose
    # a layer to carries, so the digits are derived, then verified
    pi_digits_a = power_product_digits(pi_a, p)
    pi_digits_next = power_product_digits(pi_next, p)
    if pi_digits_a is None or pi_digits_next is None:
        raise KoszulkitError(
            "projected colon is not a layered power product; lift inapplicable"
        )
    x_n = variable(n, n, 1)
    bases = {}
    eta_zero_cache = {}
    for i in range(2, n + 1):
        survivors = _eta_survivors(pi_a, pi_next, pi_digits_a, p, n, i, field,
                                   eta_zero_cache)
        removed_keys = {
            frozenset({(el.u + (0,), el.sigma)}) for el in survivors["removed"]
        }
        carried = []
        hits = 0
        for z in M_next.get(i, []):
            if _pad_keyset(z) in removed_keys:
                hits += 1
                continue
            lifted = KoszulChain(
                T_a, field, i,
                [(c, _mono_mul(u, x_n), s) for (u, s), c in z.terms.items()],
            )
            if lifted.is_zero:
                raise KoszulkitError(
                    "a carried basis element died unexpectedly under x_n"
                )
            carried.append(lifted)
        if hits != len(removed_keys):
            raise KoszulkitError(
                "surviving comparison-map images are not part of the carried basis"
            )
        fresh = [
            KoszulChain.monomial(T_a, field, el.u + (0,), el.sigma)
            for el in aramova_herzog_elements(n - 1, p, pi_digits_a, i)
        ]
        for chain in fresh:
            if chain.is_zero or not chain.is_cycle():
                raise KoszulkitError("projected basis element is not a cycle over the colon")
        kernel_lifts = _kernel_lifts(
            T_a, pi_a, pi_next, pi_digits_a, p, n, i - 1, field, fallbacks,
            eta_zero_cache,
        )
        bases[i] = carried + fresh + kernel_lifts
    return bases


def _mono_mul(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _pad_keyset(chain: KoszulChain):
    return frozenset(chain.terms)


def _eta_survivors(pi_a, pi_next, pi_digits_a, p, n, i, field, cache):
    """Split the projected basis at degree i by the comparison map to pi_next.

    Elements are 'removed' when their class maps to a nonzero class (those
    images are asserted independent), otherwise they die (literally or as
    boundaries).  Caches literal/boundary status for reuse by the kernel pass.
    """
    elements = aramova_herzog_elements(n - 1, p, pi_digits_a, i)
    removed = []
    by_degree = {}
    for el in elements:
        key = _mono_mul(el.u, _sigma_monomial(n - 1, el.sigma))
        by_degree.setdefault(key, []).append(el)
    for degree, group in by_degree.items():
        sh = None
        space = None
        images = []
        for el in group:
            chain = KoszulChain.monomial(pi_next, field, el.u, el.sigma)
            if chain.is_zero:
                cache[(i, el)] = ("literal", None)
                continue
            if sh is None:
                sh = strand_homology(pi_next, i, degree, field)
                space = sh.boundary_space()
            vec = sh.class_vector(chain)
            residue = space.reduce(vec)
            if not any(residue):
                cache[(i, el)] = ("boundary", chain)
                continue
            cache[(i, el)] = ("survives", None)
            images.append(vec)
            removed.append(el)
        if images:
            check = RowSpace(field, sh.boundary_vectors)
            for vec in images:
                if not check.add(vec):
                    raise KoszulkitError(
                        "comparison-map images are dependent; layer action is not "
                        "identical-or-zero"
                    )
    return {"removed": removed}


def _sigma_monomial(n, sigma):
    exps = [0] * n
    for idx in sigma:
        exps[idx - 1] = 1
    return tuple(exps)


def _kernel_lifts(T_a, pi_a, pi_next, pi_digits_a, p, n, j, field, fallbacks, cache):
    """Lift a monomial basis of the degree-j kernel of the comparison map.

    Kernel classes wedge with e_n; literally-vanishing representatives lift
    as monomials, boundary representatives need an extra x_n-correction term.
    """
    if j < 1:
        return []
    lifts = []
    if j == 1:
        # degree-1 strands are one-dimensional and sit at generator degrees
        for g in pi_a.gens:
            degree = g
            sh = strand_homology(pi_a, 1, degree, field)
            if sh.betti != 1:
                raise KoszulkitError("generator strand should carry one class")
            candidates = sorted(
                sh.basis, key=lambda t: element_key(*t), reverse=True
            )
            boundary_space = sh.boundary_space()
            chosen = None
            witness_chain = None
            # prefer a representative that is literally zero in the next colon
            for u, sigma in candidates:
                if pi_next.contains(u):
                    vec = [field.one if b == (u, sigma) else field.zero for b in sh.basis]
                    if not any(boundary_space.reduce(vec)):
                        continue  # a boundary represents the zero class
                    chosen = (u, sigma)
                    break
            if chosen is None:
                rep = sh.representatives[0]
                image = rep.reinterpret(pi_next)
                if image.is_zero:
                    chosen_chain = rep
                    witness_chain = None
                else:
                    sh_next = strand_homology(pi_next, 1, degree, field)
                    vec = sh_next.class_vector(image)
                    if any(sh_next.boundary_space().reduce(vec)):
                        continue  # class survives: not in the kernel
                    witness_chain = _boundary_witness(pi_next, image, field)
                    chosen_chain = rep
                lifted = _wedge_lift(T_a, chosen_chain, witness_chain, n, field)
                if witness_chain is not None or chosen_chain.length > 1:
                    fallbacks.append(
                        f"non-monomial kernel lift at degree 1, multidegree {degree}"
                    )
                lifts.append(lifted)
                continue
            chain = KoszulChain.monomial(pi_a, field, chosen[0], chosen[1])
            lifts.append(_wedge_lift(T_a, chain, None, n, field))
        return lifts
    for el in aramova_herzog_elements(n - 1, p, pi_digits_a, j):
        status, payload = cache.get((j, el), (None, None))
        if status is None:
            chain = KoszulChain.monomial(pi_next, field, el.u, el.sigma)
            if chain.is_zero:
                status, payload = "literal", None
            else:
                degree = _mono_mul(el.u, _sigma_monomial(n - 1, el.sigma))
                sh = strand_homology(pi_next, j, degree, field)
                vec = sh.class_vector(chain)
                if any(sh.boundary_space().reduce(vec)):
                    status, payload = "survives", None
                else:
                    status, payload = "boundary", chain
        if status == "survives":
            continue
        source = KoszulChain.monomial(pi_a, field, el.u, el.sigma)
        if source.is_zero or not source.is_cycle():
            raise KoszulkitError("kernel element is not a cycle over its own colon")
        if status == "literal":
            lifts.append(_wedge_lift(T_a, source, None, n, field))
        else:
            witness = _boundary_witness(pi_next, payload, field)
            lifts.append(_wedge_lift(T_a, source, witness, n, field))
            fallbacks.append(
                f"non-monomial kernel lift at degree {j}, element {el.u}*e{el.sigma}"
            )
    return lifts


def _boundary_witness(ideal, chain, field):
    from .homology import boundary_preimage

    witness = boundary_preimage(ideal, field, chain)
    if witness is None:
        raise KoszulkitError("boundary witness missing for a kernel element")
    return witness


def _wedge_lift(T_a, source, witness, n, field):
    """u e_sigma (over the projection, n-1 variables) -> cycle over T_a.

    Literal kernel elements become u e_{sigma + (n,)}; boundary kernel
    elements u e_sigma = d(w) pick up the correction (-1)^(j+1) x_n w.
    """
    items = [(c, u + (0,), s + (n,)) for (u, s), c in source.terms.items()]
    lifted = KoszulChain(T_a, field, source.hdeg + 1, items)
    if witness is not None:
        j = source.hdeg
        sign = field.one if (j + 1) % 2 == 0 else field.neg(field.one)
        x_n = variable(n, n, 1)
        correction = KoszulChain(
            T_a, field, source.hdeg + 1,
            [
                (field.mul(sign, c), _mono_mul(u + (0,), x_n), s)
                for (u, s), c in witness.terms.items()
            ],
        )
        lifted = lifted + correction
    if lifted.is_zero or not lifted.boundary().is_zero:
        raise KoszulkitError("kernel lift failed to produce a cycle")
    return lifted
