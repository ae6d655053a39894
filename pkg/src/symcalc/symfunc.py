"""The ring of symmetric functions with exact coefficients.

``SymExpr`` is a sparse, basis-tagged expansion: a map from partitions to
coefficients in one of the bases m/e/h/p/s.  Inhomogeneous expressions are
first-class.  Everything pivots through the power-sum basis, where the
Hall pairing, internal product and Foulkes derivative are diagonal or
multiplicative:

* h,e <-> p by Newton recurrences,
* s <-> p by Murnaghan-Nakayama characters,
* m <-> p by monomial expansion of p_lambda and per-degree inversion.

Transition data is memoized per degree (optionally persisted, see
``symcalc.cache``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import cache as _cache
from .coeffs import (Coeff, ParamPoly, coeff_from_json, coeff_subs,
                     coeff_to_json)
from .partitions import (canonical_key, conjugate, multiplicities, partition,
                         partitions_of, z_value)

BASES = ("m", "e", "h", "p", "s")


class SymExpr:
    """Sparse basis-tagged symmetric function."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict = {}
        for lam, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            if c:
                lam = tuple(lam)
                prev = clean.get(lam)
                c = c if prev is None else prev + c
                if c:
                    clean[lam] = c
                else:
                    del clean[lam]
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "s") -> "SymExpr":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "s") -> "SymExpr":
        return cls(basis, {(): Fraction(1)})

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def min_degree(self) -> int:
        return min((sum(lam) for lam in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "SymExpr":
        return SymExpr(self.basis,
                       {lam: c for lam, c in self.terms.items()
                        if sum(lam) == d})

    def truncate(self, cap: int) -> "SymExpr":
        return SymExpr(self.basis,
                       {lam: c for lam, c in self.terms.items()
                        if sum(lam) <= cap})

    def coefficient(self, lam) -> Coeff:
        return self.terms.get(tuple(lam), Fraction(0))

    def map_coeffs(self, fn) -> "SymExpr":
        return SymExpr(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def subs_params(self, values: dict) -> "SymExpr":
        return self.map_coeffs(lambda c: coeff_subs(c, values))

    # -- ring structure --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        if other.basis != self.basis:
            other = other.in_basis(self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymExpr(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymExpr(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other, self.basis)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return multiply(self, other)
        return SymExpr(self.basis,
                       {lam: c * other for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def in_basis(self, target: str) -> "SymExpr":
        if target == self.basis:
            return self
        return _from_p(_to_p(self), target)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = _coerce(other, self.basis)
        if not isinstance(other, SymExpr):
            return NotImplemented
        a = self.terms if other.basis == self.basis else _to_p(self)
        b = other.terms if other.basis == self.basis else _to_p(other)
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] for k in a)

    def __hash__(self):
        raise TypeError("SymExpr is unhashable")

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=canonical_key):
            c = self.terms[lam]
            name = f"{self.basis}{list(lam)}"
            bits.append(f"{name}" if c == 1 else f"({c})*{name}")
        return " + ".join(bits)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))
        return {"basis": self.basis,
                "terms": [{"part": list(lam), "coeff": coeff_to_json(c)}
                          for lam, c in items]}

    @classmethod
    def from_json(cls, data: dict) -> "SymExpr":
        return cls(data["basis"],
                   {tuple(t["part"]): coeff_from_json(t["coeff"])
                    for t in data["terms"]})


def _coerce(x, basis: str):
    if isinstance(x, SymExpr):
        return x
    if isinstance(x, (int, Fraction, ParamPoly)):
        return SymExpr(basis, {(): x})
    return NotImplemented


# -- friendly constructors ---------------------------------------------


def schur(lam, coeff=1) -> SymExpr:
    return SymExpr("s", {partition(lam): coeff})


def homog(lam, coeff=1) -> SymExpr:
    return SymExpr("h", {partition(lam): coeff})


def elem(lam, coeff=1) -> SymExpr:
    return SymExpr("e", {partition(lam): coeff})


def power(lam, coeff=1) -> SymExpr:
    return SymExpr("p", {partition(lam): coeff})


def mono(lam, coeff=1) -> SymExpr:
    return SymExpr("m", {partition(lam): coeff})


# -- transition data ----------------------------------------------------


def _pkey(lam) -> str:
    return ",".join(map(str, lam))


def _punkey(s: str) -> tuple:
    return tuple(int(x) for x in s.split(",")) if s else ()


@lru_cache(maxsize=None)
def _hn_in_p(n: int):
    """p-expansion of h_n via Newton: n h_n = sum p_k h_{n-k}."""
    if n == 0:
        return (((), Fraction(1)),)
    acc: dict = {}
    for k in range(1, n + 1):
        for lam, c in _hn_in_p(n - k):
            key = tuple(sorted(lam + (k,), reverse=True))
            acc[key] = acc.get(key, Fraction(0)) + c
    return tuple(sorted(((lam, c / n) for lam, c in acc.items()),
                        key=lambda kv: canonical_key(kv[0])))


@lru_cache(maxsize=None)
def _en_in_p(n: int):
    """p-expansion of e_n: the omega image of h_n."""
    return tuple((lam, c if (n - len(lam)) % 2 == 0 else -c)
                 for lam, c in _hn_in_p(n))


@lru_cache(maxsize=None)
def char_value(lam: tuple, mu: tuple) -> int:
    """Murnaghan-Nakayama border-strip recursion via beta numbers."""
    if not lam:
        return 1 if not mu else 0
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in bset:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        newbeta = sorted((bset - {b}) | {b - r}, reverse=True)
        newlam = tuple(x - (ell - 1 - i) for i, x in enumerate(newbeta))
        newlam = tuple(x for x in newlam if x > 0)
        total += (-1) ** height * char_value(newlam, rest)
    return total


def character_table(n: int) -> dict:
    """Full character table of degree n: (lam, mu) -> integer."""
    def compute():
        parts = partitions_of(n)
        return {(lam, mu): char_value(lam, mu) for lam in parts for mu in parts}

    def encode(tab):
        return {f"{_pkey(l)}|{_pkey(m)}": v for (l, m), v in tab.items()}

    def decode(payload):
        out = {}
        for key, v in payload.items():
            l, m = key.split("|")
            out[(_punkey(l), _punkey(m))] = int(v)
        return out

    return _cache.cached_table("chartable", str(n), compute, encode, decode)


@lru_cache(maxsize=None)
def _sn_in_p(lam: tuple):
    """p-expansion of s_lambda: sum chi^lam_nu p_nu / z_nu."""
    out = []
    for nu in partitions_of(sum(lam)):
        chi = char_value(lam, nu)
        if chi:
            out.append((nu, Fraction(chi, z_value(nu))))
    return tuple(out)


@lru_cache(maxsize=None)
def _p_in_m_count(lam: tuple, mu: tuple) -> int:
    """Coefficient of m_mu in p_lam: assignments of parts of lam to the
    columns of mu with prescribed column sums."""
    ell = len(mu)

    @lru_cache(maxsize=None)
    def rec(i: int, remaining: tuple) -> int:
        if i == len(lam):
            return 1 if not any(remaining) else 0
        total = 0
        for j in range(ell):
            if remaining[j] >= lam[i]:
                nxt = remaining[:j] + (remaining[j] - lam[i],) + remaining[j + 1:]
                total += rec(i + 1, nxt)
        return total

    return rec(0, mu)


def _invert_unitri(parts, matrix_entry):
    """Invert a square rational matrix indexed by ``parts`` (Gaussian)."""
    n = len(parts)
    a = [[Fraction(matrix_entry(parts[i], parts[j])) for j in range(n)]
         for i in range(n)]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


@lru_cache(maxsize=None)
def _m_in_p_degree(n: int):
    """All m_lambda of degree n expanded in p, by inverting p->m."""
    def compute():
        parts = partitions_of(n)
        inv = _invert_unitri(parts, _p_in_m_count)
        return {parts[i]: tuple((parts[j], inv[i][j])
                                for j in range(len(parts)) if inv[i][j])
                for i in range(len(parts))}

    def encode(table):
        return {_pkey(lam): {_pkey(nu): [str(c.numerator), str(c.denominator)]
                             for nu, c in row}
                for lam, row in table.items()}

    def decode(payload):
        return {_punkey(l): tuple(sorted(
            ((_punkey(nu), Fraction(int(c[0]), int(c[1])))
             for nu, c in row.items()), key=lambda kv: canonical_key(kv[0])))
            for l, row in payload.items()}

    return _cache.cached_table("m2p", str(n), compute, encode, decode)


def _m_in_p(lam: tuple):
    return _m_in_p_degree(sum(lam))[lam]


# -- basis conversion ---------------------------------------------------


def _p_mult_basis(factors) -> dict:
    """Product of p-basis dicts (keys concatenate and sort)."""
    acc = {(): Fraction(1)}
    for terms in factors:
        nxt: dict = {}
        for lam, c in acc.items():
            for mu, d in terms:
                key = tuple(sorted(lam + mu, reverse=True))
                cd = c * d
                prev = nxt.get(key)
                nxt[key] = cd if prev is None else prev + cd
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def _to_p(expr: SymExpr) -> dict:
    """Expansion of expr in the p basis: dict partition -> Coeff."""
    if expr.basis == "p":
        return dict(expr.terms)
    out: dict = {}
    for lam, c in expr.terms.items():
        if expr.basis == "h":
            piece = _p_mult_basis(_hn_in_p(part) for part in lam)
        elif expr.basis == "e":
            piece = _p_mult_basis(_en_in_p(part) for part in lam)
        elif expr.basis == "s":
            piece = dict(_sn_in_p(lam))
        else:
            piece = dict(_m_in_p(lam))
        for nu, d in piece.items():
            prev = out.get(nu)
            cd = c * d
            out[nu] = cd if prev is None else prev + cd
    return {k: v for k, v in out.items() if v}


def _from_p(pterms: dict, target: str) -> SymExpr:
    if target == "p":
        return SymExpr("p", pterms)
    by_deg: dict = {}
    for nu, c in pterms.items():
        by_deg.setdefault(sum(nu), {})[nu] = c
    out: dict = {}
    for d, terms in by_deg.items():
        if target == "m":
            for nu, c in terms.items():
                for mu in partitions_of(d):
                    r = _p_in_m_count(nu, mu)
                    if r:
                        prev = out.get(mu)
                        cr = c * r
                        out[mu] = cr if prev is None else prev + cr
        elif target == "s":
            for lam in partitions_of(d):
                acc = None
                for nu, c in terms.items():
                    chi = char_value(lam, nu)
                    if chi:
                        piece = c * chi
                        acc = piece if acc is None else acc + piece
                if acc is not None:
                    out[lam] = acc
        else:  # h or e via duality with m; e through the omega involution
            use = terms
            if target == "e":
                use = {nu: (c if (sum(nu) - len(nu)) % 2 == 0 else -c)
                       for nu, c in terms.items()}
            for lam in partitions_of(d):
                acc = None
                row = dict(_m_in_p(lam))
                for nu, c in use.items():
                    w = row.get(nu)
                    if w:
                        piece = c * (w * z_value(nu))
                        acc = piece if acc is None else acc + piece
                if acc is not None:
                    out[lam] = acc
    return SymExpr(target, out)


def convert(f: SymExpr, target: str) -> SymExpr:
    return f.in_basis(target)


# -- products and pairings ----------------------------------------------


def multiply(f: SymExpr, g: SymExpr) -> SymExpr:
    """Outer product, returned in the basis of f."""
    a, b = _to_p(f), _to_p(g)
    out: dict = {}
    for lam, c in a.items():
        for mu, d in b.items():
            key = tuple(sorted(lam + mu, reverse=True))
            cd = c * d
            prev = out.get(key)
            out[key] = cd if prev is None else prev + cd
    return _from_p({k: v for k, v in out.items() if v}, f.basis)


def hall_scalar(f: SymExpr, g: SymExpr) -> Coeff:
    """Hall scalar product <p_lam, p_mu> = z_lam delta."""
    a, b = _to_p(f), _to_p(g)
    if len(b) < len(a):
        a, b = b, a
    total: Coeff = Fraction(0)
    for nu, c in a.items():
        d = b.get(nu)
        if d:
            total = total + c * d * z_value(nu)
    return total


def internal(f: SymExpr, g: SymExpr) -> SymExpr:
    """Kronecker product: diagonal on power sums, degreewise."""
    a, b = _to_p(f), _to_p(g)
    out = {}
    for nu, c in a.items():
        d = b.get(nu)
        if d:
            out[nu] = c * d * z_value(nu)
    return _from_p(out, f.basis)


def foulkes_derivative(f: SymExpr, g: SymExpr) -> SymExpr:
    """D_f g, the adjoint of multiplication by f."""
    a, b = _to_p(f), _to_p(g)
    out: dict = {}
    for alpha, c in a.items():
        for nu, d in b.items():
            coef = c * d
            rest = list(nu)
            ok = True
            for k in alpha:
                if k not in rest:
                    ok = False
                    break
                coef = coef * (k * rest.count(k))
                rest.remove(k)
            if ok:
                key = tuple(rest)
                prev = out.get(key)
                out[key] = coef if prev is None else prev + coef
    return _from_p({k: v for k, v in out.items() if v}, g.basis)


def omega(f: SymExpr) -> SymExpr:
    """The involution exchanging h and e (sign on power sums)."""
    p = _to_p(f)
    return _from_p({nu: (c if (sum(nu) - len(nu)) % 2 == 0 else -c)
                    for nu, c in p.items()}, f.basis)


# -- characters and Littlewood-Richardson --------------------------------


def mn_character(lam, mu) -> int:
    """chi^lam_mu = <s_lam, p_mu>."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| != |mu|: {lam}, {mu}")
    return char_value(lam, mu)


def lr_coefficient(mu, nu, lam) -> int:
    """c^lam_{mu nu} = <s_mu s_nu, s_lam>."""
    mu, nu, lam = partition(mu), partition(nu), partition(lam)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    prod = _to_p(multiply(schur(mu), schur(nu)))
    total = Fraction(0)
    for rho, c in prod.items():
        chi = char_value(lam, rho)
        if chi:
            total += c * chi
    assert total.denominator == 1
    return int(total)


def skew_schur(lam, mu) -> SymExpr:
    """s_{lam/mu} = D_{s_mu} s_lam = sum_nu c^lam_{mu nu} s_nu."""
    return foulkes_derivative(schur(partition(mu)), schur(partition(lam)))


__all__ = [
    "BASES", "SymExpr", "schur", "homog", "elem", "power", "mono",
    "convert", "multiply", "hall_scalar", "internal", "foulkes_derivative",
    "omega", "mn_character", "lr_coefficient", "skew_schur",
    "char_value", "character_table", "conjugate", "multiplicities",
]
