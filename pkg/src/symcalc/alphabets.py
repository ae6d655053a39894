"""Plethysm and lambda-ring alphabet transforms.

Conventions: p_k applied to an expression substitutes p_j -> p_{jk} and
raises every formal parameter to the k-th power; rational scalars are
fixed (they are binomial elements).  Infinite series (sigma_1, sigma_1-1,
the inverse -L(-X)) are carried as ``TruncatedSeries`` with an explicit
degree cap that only shrinks under arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffs import ParamPoly, binomial_series_coeff, coeff_frobenius
from .partitions import partition
from .symfunc import SymExpr, _from_p, _to_p, homog, power


class TruncatedSeries:
    """A symmetric-function series known exactly up to ``cap`` degree."""

    __slots__ = ("expr", "cap")

    def __init__(self, expr: SymExpr, cap: int):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.expr = expr.truncate(cap)
        self.cap = cap

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.expr + other.expr,
                                   min(self.cap, other.cap))
        return TruncatedSeries(self.expr + other, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.expr, self.cap)

    def __sub__(self, other):
        return self + (-other if isinstance(other, (TruncatedSeries, SymExpr))
                       else -1 * other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.expr * other.expr,
                                   min(self.cap, other.cap))
        return TruncatedSeries(self.expr * other, self.cap)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.cap == other.cap and self.expr == other.expr
        return self.expr == other

    def __repr__(self):
        return f"TruncatedSeries({self.expr!r}, cap={self.cap})"


def _pk_on_terms(pterms: dict, k: int, cap=None) -> dict:
    """Apply p_k to a p-basis expansion."""
    out = {}
    for nu, c in pterms.items():
        if cap is not None and sum(nu) * k > cap:
            continue
        out[tuple(x * k for x in nu)] = coeff_frobenius(c, k)
    return out


def _p_product(factors, cap=None) -> dict:
    acc = {(): Fraction(1)}
    for terms in factors:
        nxt: dict = {}
        for lam, c in acc.items():
            for mu, d in terms.items():
                key = tuple(sorted(lam + mu, reverse=True))
                if cap is not None and sum(key) > cap:
                    continue
                cd = c * d
                prev = nxt.get(key)
                nxt[key] = cd if prev is None else prev + cd
        acc = {key: v for key, v in nxt.items() if v}
    return acc


def outer_plethysm(f: SymExpr, g):
    """f o g by power-sum substitution.

    ``g`` may be a SymExpr or a TruncatedSeries; the result carries the
    series cap in the latter case.  Rational constant terms of g pass
    through p_k unchanged (lambda-ring convention for sigma_1 etc.).
    """
    if isinstance(g, TruncatedSeries):
        gp, cap = _to_p(g.expr), g.cap
    else:
        gp, cap = _to_p(g), None
    fp = _to_p(f)
    out: dict = {}
    for alpha, c in fp.items():
        piece = _p_product((_pk_on_terms(gp, k, cap) for k in alpha), cap)
        for nu, d in piece.items():
            cd = c * d
            prev = out.get(nu)
            out[nu] = cd if prev is None else prev + cd
    result = _from_p({k: v for k, v in out.items() if v},
                     f.basis)
    if cap is not None:
        return TruncatedSeries(result, cap)
    return result


def shift_alphabet(f: SymExpr, c: int) -> SymExpr:
    """f(X+c) for c = +1 or -1: substitute p_k -> p_k + c."""
    if c not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    fp = _to_p(f)
    out: dict = {}
    for nu, coef in fp.items():
        factors = ({(k,): Fraction(1), (): Fraction(c)} for k in nu)
        piece = _p_product(factors)
        for key, d in piece.items():
            cd = coef * d
            prev = out.get(key)
            out[key] = cd if prev is None else prev + cd
    return _from_p({k: v for k, v in out.items() if v},
                   f.basis)


def scale_alphabet(f: SymExpr, mode: str, qcap: int, param: str = "q") -> SymExpr:
    """f[(1-q)X] or f[X/(1-q)], truncated at q-degree qcap.

    p_k picks up the factor (1-q^k), resp. its truncated geometric
    inverse 1 + q^k + q^{2k} + ...
    """
    if qcap < 0:
        raise ValueError("qcap must be nonnegative")
    if mode not in ("(1-q)X", "X/(1-q)"):
        raise ValueError(f"unknown mode {mode!r}")
    fp = _to_p(f)
    out: dict = {}
    for nu, coef in fp.items():
        factor = ParamPoly.const(1, (param,), {param: qcap})
        for k in nu:
            if mode == "(1-q)X":
                fk = ParamPoly((param,), {(0,): 1, (k,): -1}, {param: qcap})
            else:
                fk = ParamPoly((param,),
                               {(j,): 1 for j in range(0, qcap + 1, k)},
                               {param: qcap})
            factor = factor * fk
        c = coef * factor
        prev = out.get(nu)
        out[nu] = c if prev is None else prev + c
    return _from_p({k: v for k, v in out.items() if v},
                   f.basis)


def sigma_series(kind: str = "sigma", sign: int = 1, cap: int = 6) -> TruncatedSeries:
    """sigma_1 = sum h_r, or lambda_{sign 1} = sum sign^r e_r, up to cap."""
    if kind == "sigma":
        terms = {(r,) if r else (): Fraction(1) for r in range(cap + 1)}
        return TruncatedSeries(SymExpr("h", terms), cap)
    if kind == "lambda":
        terms = {(r,) if r else (): Fraction(sign ** r)
                 for r in range(cap + 1)}
        return TruncatedSeries(SymExpr("e", terms), cap)
    raise ValueError(f"unknown series kind {kind!r}")


def sigma_minus_one(cap: int) -> TruncatedSeries:
    """sigma_1 - 1, the zero-constant-term variant used for plethysm."""
    terms = {(r,): Fraction(1) for r in range(1, cap + 1)}
    return TruncatedSeries(SymExpr("h", terms), cap)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    if n == 1:
        return 1
    m, primes = n, []
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            primes.append(d)
        else:
            d += 1
    if m > 1:
        primes.append(m)
    return (-1) ** len(primes)


def lie_character(n: int) -> SymExpr:
    """Degree-n free Lie algebra character (1/n) sum_{d|n} mu(d) p_d^{n/d}."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = {}
    for d in range(1, n + 1):
        if n % d == 0:
            mob = _mobius(d)
            if mob:
                terms[(d,) * (n // d)] = Fraction(mob, n)
    return SymExpr("p", terms)


def invert_sigma(cap: int) -> TruncatedSeries:
    """The series M with sigma_1 o M = 1 + p_1 through degree cap.

    Solved degree by degree: the degree-d error of the current iterate
    feeds back with a minus sign, since (sigma_1-1) o (M + delta) =
    (sigma_1-1) o M + delta + higher order.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    s = sigma_minus_one(cap)
    m = TruncatedSeries(power([1]), cap)
    for d in range(2, cap + 1):
        err = outer_plethysm(s.expr, m).expr - power([1])
        m = TruncatedSeries(m.expr - err.homogeneous_component(d), cap)
    return m


def binomial_exp_product(exponents, cap: int, param: str = "t") -> TruncatedSeries:
    """prod_{i>=1} (1+p_i)^{a_i} with binomial-element exponents a_i.

    ``exponents[i-1]`` is the exponent of (1+p_i); the X-degree is
    truncated at ``cap``.
    """
    result = TruncatedSeries(SymExpr("p", {(): Fraction(1)}), cap)
    for i, a in enumerate(exponents, start=1):
        if i > cap:
            break
        terms = {}
        for k in range(cap // i + 1):
            c = binomial_series_coeff(a, k)
            if c:
                terms[(i,) * k] = c
        result = result * TruncatedSeries(SymExpr("p", terms), cap)
    return result


def adams_on_params(expr: SymExpr, k: int) -> SymExpr:
    """Raise only the formal parameters of expr to the k-th power."""
    return expr.map_coeffs(lambda c: coeff_frobenius(c, k))
