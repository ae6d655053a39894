"""The lambda-ring structure on class functions of the symmetric group.

Adams operations, inner plethysm g^[f], permutation-module
characteristics and evaluation on the eigenvalue alphabet of a
permutation matrix.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffs import Coeff
from .partitions import (multiplicities, partition, partitions_of,
                         power_cycle_type, z_value)
from .symfunc import SymExpr, _from_p, _to_p, homog, internal


def adams(f: SymExpr, k: int) -> SymExpr:
    """Adams operation: the character tau -> chi_f(tau^k).

    In the p basis the coefficient on p_nu becomes the coefficient of
    p_{psi_k(nu)} rescaled by z_{psi_k(nu)}/z_nu.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not f.is_homogeneous():
        raise ValueError("adams requires a homogeneous input")
    fp = _to_p(f)
    out = {}
    n = f.degree()
    for nu in partitions_of(n):
        src = power_cycle_type(nu, k)
        c = fp.get(src)
        if c:
            out[nu] = c * Fraction(z_value(src), z_value(nu))
    return _from_p(out, f.basis)


def inner_plethysm(g: SymExpr, f: SymExpr) -> SymExpr:
    """g^[f] for f homogeneous of degree n.

    Expand g in power sums; each p_mu acts as the Kronecker product of
    the Adams operations of its parts, and the empty partition acts as
    the unit h_n.
    """
    if not f.is_homogeneous():
        raise ValueError("inner plethysm requires homogeneous f")
    n = f.degree()
    gp = _to_p(g)
    unit = homog([n] if n else [])
    result = SymExpr(f.basis)
    adams_cache: dict = {}
    for mu, c in gp.items():
        piece = unit
        for k in mu:
            if k not in adams_cache:
                adams_cache[k] = adams(f, k)
            piece = internal(piece, adams_cache[k])
        result = result + c * piece
    return result


def eigenvalue_eval(f: SymExpr, mu) -> Coeff:
    """f(Omega_mu): evaluate on the eigenvalues of a permutation of type mu.

    Uses p_r(Omega_mu) = sum_{d | r} d m_d(mu).
    """
    mu = partition(mu)
    mults = multiplicities(mu)
    fp = _to_p(f)
    total: Coeff = Fraction(0)
    for nu, c in fp.items():
        val = 1
        for r in nu:
            val *= sum(d * m for d, m in mults.items() if r % d == 0)
        if val:
            total = total + c * val
    return total


def perm_char(n: int) -> SymExpr:
    """Characteristic h_{n-1,1} of the permutation representation."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return homog([1])
    return homog([n - 1, 1])


def graded_poly_char(n: int, qcap: int) -> SymExpr:
    """Graded characteristic h_n[X/(1-q)] of the polynomial ring,
    truncated at q-degree qcap."""
    from .alphabets import scale_alphabet
    return scale_alphabet(homog([n] if n else []), "X/(1-q)", qcap)
