"""Applications: dualities, zero-weight restrictions, weight-orbit
decompositions, endofunction counts, and pure braid group cohomology.
"""

from __future__ import annotations

from fractions import Fraction

from .alphabets import (TruncatedSeries, binomial_exp_product, lie_character,
                        outer_plethysm, sigma_series)
from .coeffs import Coeff, ParamPoly, as_fraction
from .partitions import partition, partitions_of
from .stable import StableChar
from .symfunc import (SymExpr, _to_p, convert, elem, hall_scalar, homog,
                      mono, multiply, schur)


def littlewood_pair(f: SymExpr, g: SymExpr, cap: int) -> Coeff:
    """<f, g[sigma_1]>, which equals <f^[sigma_1 h_1], g> by duality."""
    if cap < f.degree():
        raise ValueError("cap must cover the degree of f")
    return hall_scalar(f, outer_plethysm(g, sigma_series("sigma", 1, cap)).expr)


def gay_restriction(lam, k: int) -> SymExpr:
    """Characteristic of the zero weight space of V_lam(C^n), |lam| = nk:
    the adjoint of f -> f[h_k] applied to s_lam."""
    if k <= 0:
        raise ValueError("k must be positive")
    lam = partition(lam)
    d = sum(lam)
    total = SymExpr("s")
    if d % k:
        return total
    for mu in partitions_of(d // k):
        c = hall_scalar(schur(lam), outer_plethysm(schur(mu), homog([k])))
        if c:
            total = total + schur(mu) * c
    return total


def gay_restriction_perm(lam, k: int) -> SymExpr:
    """h-version of the zero weight space, for S^lam = tensor product of
    symmetric powers: sum_mu <h_lam, m_mu[h_k]> h_mu."""
    if k <= 0:
        raise ValueError("k must be positive")
    lam = partition(lam)
    d = sum(lam)
    total = SymExpr("h")
    if d % k:
        return total
    for mu in partitions_of(d // k):
        c = hall_scalar(homog(lam), outer_plethysm(mono(mu), homog([k])))
        if c:
            total = total + homog(mu) * c
    return total


def _weight_alphabet(max_weight: int, with_t0: bool = True) -> SymExpr:
    """t_0 + t_1 h_1 + ... + t_w h_w with marker parameters t_j."""
    params = tuple(f"t{j}" for j in range(0 if with_t0 else 1, max_weight + 1))
    terms = {}
    lo = 0 if with_t0 else 1
    for j in range(lo, max_weight + 1):
        exps = tuple(1 if p == f"t{j}" else 0 for p in params)
        terms[(j,) if j else ()] = ParamPoly(params, {exps: Fraction(1)})
    return SymExpr("h", terms)


def weight_orbit_decomposition(f: SymExpr, n: int, max_weight: int) -> SymExpr:
    """Restriction of a GL(n)-module to S_n, graded by weight orbits.

    For f = s_lam returns sum_{mu |- n} <s_lam, s_mu[t_0 + t_1 h_1 + ...]>
    s_mu; for f = h_lam the analogous (h, m) pairing on h_mu.  The
    coefficient of the monomial t^nu is the characteristic of the sum of
    the weight spaces in the S_n-orbit of nu.  Setting every t_j = 1
    recovers the full branching rule.
    """
    if not f.is_homogeneous() or not f.terms:
        raise ValueError("weight decomposition requires homogeneous input")
    alphabet = _weight_alphabet(max_weight)
    d = f.degree()
    total = SymExpr(f.basis)
    for mu in partitions_of(n):
        if f.basis == "h":
            pleth = outer_plethysm(mono(mu),
                                   TruncatedSeries(alphabet, d)).expr
            c = hall_scalar(f, pleth)
            dual = homog(mu)
        else:
            pleth = outer_plethysm(schur(mu),
                                   TruncatedSeries(alphabet, d)).expr
            c = hall_scalar(convert(f, "s"), pleth)
            dual = schur(mu)
        if c:
            total = total + dual * c
    return total


def stable_weight_orbits(f: SymExpr) -> StableChar:
    """Stable weight-orbit decomposition of a product of symmetric powers:
    sum_mu <h_lam, m_mu[t_1 h_1 + t_2 h_2 + ...]> <<mu>>, with the marker
    monomial t^nu recording the multiset nu of orbit weights."""
    if not f.is_homogeneous() or not f.terms:
        raise ValueError("stable weight decomposition requires homogeneous input")
    d = f.degree()
    alphabet = _weight_alphabet(d, with_t0=False)
    fh = convert(f, "h")
    total = SymExpr("h")
    for size in range(1, d + 1):
        for mu in partitions_of(size):
            pleth = outer_plethysm(mono(mu),
                                   TruncatedSeries(alphabet, d)).expr
            c = hall_scalar(fh, pleth)
            if c:
                total = total + homog(mu) * c
    return StableChar(total)


def endofunction_signature(n: int) -> ParamPoly:
    """sum_{lam |- n} <h_lam, m_lam[1 + t_1 h_1 + ...]>, the weight-graded
    count of endofunction patterns on n points; t_j = 1 gives the total."""
    if n < 1:
        raise ValueError("n must be positive")
    alphabet = _weight_alphabet(n, with_t0=False) + SymExpr(
        "h", {(): Fraction(1)})
    params = tuple(f"t{j}" for j in range(1, n + 1))
    total: Coeff = ParamPoly.const(0, params)
    for lam in partitions_of(n):
        c = hall_scalar(homog(lam),
                        outer_plethysm(mono(lam),
                                       TruncatedSeries(alphabet, n)).expr)
        total = total + c
    return total


def _necklace_poly(i: int, cap: int) -> ParamPoly:
    """ell_i(t) = (1/i) sum_{d | i} mu(d) t^{i/d} in the parameter t."""
    from .alphabets import _mobius
    terms = {}
    for d in range(1, i + 1):
        if i % d == 0:
            m = _mobius(d)
            if m:
                terms[(i // d,)] = terms.get((i // d,), 0) + Fraction(m, i)
    return ParamPoly(("t",), {e: c for e, c in terms.items() if c},
                     {"t": cap})


def braid_poincare(n: int) -> list:
    """ch_t H^*(P_n): entry i is the characteristic of H^i(P_n; C).

    The generating identity sum_i (-t)^i ch H^{n-i} = degree-n part of
    prod_{k>=1} (1+p_k)^{ell_k(t)} (t a binomial element) is re-indexed
    so that entry i matches H^i.
    """
    if n < 1:
        raise ValueError("n must be positive")
    exponents = [_necklace_poly(i, n) for i in range(1, n + 1)]
    series = binomial_exp_product(exponents, n).expr.homogeneous_component(n)
    series = convert(series, "s")
    out = [SymExpr("s") for _ in range(n)]
    for lam, c in series.terms.items():
        if not isinstance(c, ParamPoly):
            c = ParamPoly.const(c, ("t",))
        for exps, v in c.terms.items():
            j = exps[0] if exps else 0
            i = n - j
            if 0 <= i < n:
                out[i] = out[i] + schur(lam) * (v * Fraction(-1) ** i)
    return out


def _minus_alphabet(f: SymExpr) -> SymExpr:
    """f(-X): substitute p_k -> -p_k."""
    return SymExpr("p", {nu: c * Fraction(-1) ** len(nu)
                         for nu, c in _to_p(f).items()})


def stable_cohomology(i: int, cap: int = 0) -> StableChar:
    """The stable character of H^i(P_n; C) for all n at once.

    Coefficient of t^i in prod_{k>=2} sum_j (-1)^j t^{j(k-1)}
    e_j[ell_k(-X)], times (-1)^i, with sigma_1 factored out; the X-degree
    of the t^i coefficient is bounded by 2i.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return StableChar(SymExpr("h", {(): Fraction(1)}))
    xcap = max(cap, 2 * i)
    one = ParamPoly.const(1, ("t",), {"t": i})
    acc = SymExpr("p", {(): one})
    for k in range(2, i + 2):
        lk = _minus_alphabet(lie_character(k))
        factor = SymExpr("p", {(): one})
        j = 1
        while j * (k - 1) <= i:
            ej = outer_plethysm(elem([j]), lk).truncate(xcap)
            marker = ParamPoly(("t",), {(j * (k - 1),): Fraction(-1) ** j},
                               {"t": i})
            factor = factor + convert(ej, "p") * marker
            j += 1
        acc = multiply(acc, factor).truncate(xcap)
    reduced = SymExpr("s")
    for lam, c in convert(acc, "s").terms.items():
        if isinstance(c, ParamPoly):
            v = c.terms.get((i,))
            if v:
                reduced = reduced + schur(lam) * (v * Fraction(-1) ** i)
    return StableChar(reduced)
