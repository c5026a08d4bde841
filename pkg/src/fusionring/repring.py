"""Classical representation ring: weight multiplicities, tensor products,
and the character polynomials presenting it as Z[X, Y].

Weight multiplicities come from the Freudenthal recursion on the dominant
weights below the highest weight.  Tensor products decompose by Klimyk
sign-folding of lam + nu + rho over the full weight system of the smaller
factor.  Character polynomials follow the peel-off recursion
chi(lam) = chi(lam - omega_i) * chi(omega_i) - lower terms, memoized per
algebra, with chi(omega1) = X and chi(omega2) = Y.
"""

from __future__ import annotations

from .cartan import (
    AlgebraType,
    RootSystem,
    Weight,
    dominant_representative,
    dominant_representative_signed,
    inner_product,
    is_dominant,
    norm_sq,
    weyl_dimension,
    weyl_orbit,
)
from .polyring import IntPolynomial, X, Y

_MULT_CACHE: dict[tuple[AlgebraType, Weight], dict[Weight, int]] = {}
_SYSTEM_CACHE: dict[tuple[AlgebraType, Weight], dict[Weight, int]] = {}
_TENSOR_CACHE: dict[tuple[AlgebraType, Weight, Weight], dict[Weight, int]] = {}
_CHAR_CACHE: dict[tuple[AlgebraType, Weight, bool], IntPolynomial] = {}


def _height(rs: RootSystem, diff: Weight) -> int | None:
    """Sum of simple-root coefficients of diff, or None outside the root lattice cone."""
    c = rs.cartan_matrix
    det = c[0][0] * c[1][1] - c[0][1] * c[1][0]
    n1 = c[1][1] * diff[0] - c[0][1] * diff[1]
    n2 = -c[1][0] * diff[0] + c[0][0] * diff[1]
    if n1 % det or n2 % det:
        return None
    n1 //= det
    n2 //= det
    if n1 < 0 or n2 < 0:
        return None
    return n1 + n2


def _dominant_candidates(rs: RootSystem, lam: Weight) -> list[tuple[int, Weight]]:
    """Dominant mu <= lam (root-lattice order), as (height of lam - mu, mu)."""
    bound = norm_sq(rs, (lam[0] + 1, lam[1] + 1))

    def coord_max(direction: int) -> int:
        c = 0
        while True:
            w = (c + 2, 1) if direction == 0 else (1, c + 2)
            if norm_sq(rs, w) > bound:
                return c + 1
            c += 1

    out = []
    for a in range(coord_max(0) + 1):
        for b in range(coord_max(1) + 1):
            h = _height(rs, (lam[0] - a, lam[1] - b))
            if h is not None:
                out.append((h, (a, b)))
    out.sort()
    assert out and out[0] == (0, lam)
    return out


def weight_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible module V(lam).

    Freudenthal recursion, processed from lam downward; entries for
    non-dominant weights follow by Weyl invariance.
    """
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    key = (rs.algebra, lam)
    cached = _MULT_CACHE.get(key)
    if cached is not None:
        return cached

    rho = rs.rho
    lam_shift = (lam[0] + 1, lam[1] + 1)
    top_norm = norm_sq(rs, lam_shift)
    mults: dict[Weight, int] = {lam: 1}
    for h, mu in _dominant_candidates(rs, lam):
        if h == 0:
            continue
        total = 0
        for alpha in rs.positive_roots:
            j = 1
            while True:
                nu = (mu[0] + j * alpha[0], mu[1] + j * alpha[1])
                m = mults.get(dominant_representative(rs, nu))
                if m is None:
                    break
                total += m * inner_product(rs, nu, alpha)
                j += 1
        denom = top_norm - norm_sq(rs, (mu[0] + rho[0], mu[1] + rho[1]))
        assert denom > 0 and (2 * total) % denom == 0, (lam, mu)
        mult = 2 * total // denom
        assert mult > 0, (lam, mu)
        mults[mu] = mult
    _MULT_CACHE[key] = mults
    return mults


def weight_system(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """All weights of V(lam) with multiplicities (Weyl-orbit expansion)."""
    key = (rs.algebra, lam)
    cached = _SYSTEM_CACHE.get(key)
    if cached is not None:
        return cached
    system: dict[Weight, int] = {}
    for mu, m in weight_multiplicities(rs, lam).items():
        for w in weyl_orbit(rs, mu):
            system[w] = m
    assert sum(system.values()) == weyl_dimension(rs, lam)
    _SYSTEM_CACHE[key] = system
    return system


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decomposition of V(lam) (x) V(mu) into irreducibles.

    Klimyk folding: for every weight nu of the smaller factor, shift
    big + nu + rho into the dominant chamber with its determinant sign;
    hyperplane hits cancel.  All surviving multiplicities are positive.
    """
    if not is_dominant(lam) or not is_dominant(mu):
        raise ValueError(f"weights {lam}, {mu} must be dominant")
    key = (rs.algebra, min(lam, mu), max(lam, mu))
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return cached

    if weyl_dimension(rs, mu) <= weyl_dimension(rs, lam):
        big, small = lam, mu
    else:
        big, small = mu, lam
    result: dict[Weight, int] = {}
    for nu, m in weight_system(rs, small).items():
        shifted = (big[0] + nu[0] + 1, big[1] + nu[1] + 1)
        folded = dominant_representative_signed(rs, shifted)
        if folded is None:
            continue
        (da, db), sign = folded
        target = (da - 1, db - 1)
        new = result.get(target, 0) + sign * m
        if new:
            result[target] = new
        else:
            del result[target]
    assert all(v > 0 for v in result.values()), (lam, mu)
    total = sum(v * weyl_dimension(rs, nu) for nu, v in result.items())
    assert total == weyl_dimension(rs, lam) * weyl_dimension(rs, mu)
    _TENSOR_CACHE[key] = result
    return result


def char_poly(rs: RootSystem, lam: Weight, _descend_second: bool = False) -> IntPolynomial:
    """Character polynomial of V(lam) in the fundamental classes X, Y.

    The recursion subtracts omega1 while a > 0, then omega2.  The tie-break
    is fixed for reproducibility; either descent yields the same polynomial,
    and the _descend_second hook (omega2 first, separately memoized) lets
    tests assert that equality along an independent route.
    """
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    key = (rs.algebra, lam, _descend_second)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached

    a, b = lam
    if lam == (0, 0):
        poly = IntPolynomial.constant(1)
    elif lam == (1, 0):
        poly = X
    elif lam == (0, 1):
        poly = Y
    else:
        if (a > 0) if not _descend_second else not (b > 0):
            prev: Weight = (a - 1, b)
            fundamental: Weight = (1, 0)
            gen = X
        else:
            prev = (a, b - 1)
            fundamental = (0, 1)
            gen = Y
        poly = char_poly(rs, prev, _descend_second) * gen
        dec = tensor_decompose(rs, prev, fundamental)
        assert dec.get(lam) == 1
        for nu, m in dec.items():
            if nu != lam:
                poly = poly - char_poly(rs, nu, _descend_second) * m

    _CHAR_CACHE[key] = poly
    return poly
