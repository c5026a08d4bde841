"""Root-system and Weyl-group data for the rank-2 simple Lie algebras.

Everything lives in fundamental-weight coordinates: a weight is an integer
pair (a, b) standing for a*omega1 + b*omega2.  Simple roots are stored as the
columns of the Cartan matrix read in those coordinates, so every reflection
is an integer 2x2 matrix and no irrational root lengths ever appear.

Labeling follows Bourbaki.  For G2, omega1 is the short node (the
7-dimensional fundamental representation), giving comarks (1, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Weight = tuple[int, int]
Mat2 = tuple[tuple[int, int], tuple[int, int]]


class AlgebraType(Enum):
    A2 = "a2"
    C2 = "c2"
    G2 = "g2"


# Cartan matrix entries C[i][j] = <alpha_j, alpha_i^vee>, and half-norms
# d_i = (alpha_i, alpha_i)/2 scaled so short simple roots have d = 1.
_CARTAN: dict[AlgebraType, Mat2] = {
    AlgebraType.A2: ((2, -1), (-1, 2)),
    AlgebraType.C2: ((2, -2), (-1, 2)),
    AlgebraType.G2: ((2, -3), (-1, 2)),
}

_HALF_NORMS: dict[AlgebraType, tuple[int, int]] = {
    AlgebraType.A2: (1, 1),
    AlgebraType.C2: (1, 2),
    AlgebraType.G2: (1, 3),
}

_IDENTITY: Mat2 = ((1, 0), (0, 1))


def _mat_vec(m: Mat2, v: Weight) -> Weight:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _mat_mul(m: Mat2, n: Mat2) -> Mat2:
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _det(m: Mat2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan data for one algebra; safe to share across tasks."""

    algebra: AlgebraType
    cartan_matrix: Mat2
    simple_roots: tuple[Weight, Weight]
    positive_roots: tuple[Weight, ...]
    # Pairing vectors m with <lam, alpha^vee> = m[0]*a + m[1]*b, one per
    # positive root, in the same order as positive_roots.
    positive_coroots: tuple[Weight, ...]
    highest_root: Weight
    comarks: Weight
    rho: Weight
    dual_coxeter: int
    # Integer-scaled Weyl-invariant Gram matrix of the fundamental weights.
    gram: Mat2
    weyl_elements: tuple[tuple[Mat2, int], ...]
    longest_element_index: int

    def weyl_matrices(self) -> tuple[Mat2, ...]:
        return tuple(m for m, _ in self.weyl_elements)


def _root_coords(cartan: Mat2, root: Weight) -> Weight | None:
    """Coefficients of a root in the simple-root basis, or None if not integral."""
    det = _det(cartan)
    adj = ((cartan[1][1], -cartan[0][1]), (-cartan[1][0], cartan[0][0]))
    scaled = _mat_vec(adj, root)
    if scaled[0] % det or scaled[1] % det:
        return None
    return (scaled[0] // det, scaled[1] // det)


_ROOT_SYSTEMS: dict[AlgebraType, RootSystem] = {}


def build_root_system(algebra: AlgebraType) -> RootSystem:
    """Construct (and cache) the full root-system data for one algebra.

    The Weyl group is the closure of the two simple reflections under
    composition; positive roots are the Weyl orbit of the simple roots
    intersected with the positive cone.
    """
    cached = _ROOT_SYSTEMS.get(algebra)
    if cached is not None:
        return cached

    cartan = _CARTAN[algebra]
    d = _HALF_NORMS[algebra]
    alpha1: Weight = (cartan[0][0], cartan[1][0])
    alpha2: Weight = (cartan[0][1], cartan[1][1])
    simple_roots = (alpha1, alpha2)

    # Simple reflection s_i(v) = v - v_i * alpha_i as a matrix on omega-coords.
    refl = []
    for i, alpha in enumerate(simple_roots):
        cols = []
        for r in range(2):
            row = [int(r == c) - alpha[r] * int(c == i) for c in range(2)]
            cols.append(tuple(row))
        refl.append((cols[0], cols[1]))
    s1, s2 = (tuple(m) for m in refl)

    # Breadth-first closure under composition.
    elements: list[Mat2] = [_IDENTITY]
    seen = {_IDENTITY}
    queue = [_IDENTITY]
    while queue:
        w = queue.pop(0)
        for g in (s1, s2):
            prod = _mat_mul(g, w)
            if prod not in seen:
                seen.add(prod)
                elements.append(prod)
                queue.append(prod)
    weyl_elements = tuple((w, _det(w)) for w in elements)

    all_roots = {_mat_vec(w, alpha) for w, _ in weyl_elements for alpha in simple_roots}
    positive = []
    for root in all_roots:
        coords = _root_coords(cartan, root)
        assert coords is not None, root
        if coords[0] >= 0 and coords[1] >= 0:
            positive.append((coords[0] + coords[1], coords, root))
    positive.sort()
    positive_roots = tuple(root for _, _, root in positive)

    coroots = []
    for _, (n1, n2), root in positive:
        half_norm = n1 * n1 * d[0] + n2 * n2 * d[1] + n1 * n2 * d[0] * cartan[0][1]
        assert half_norm > 0
        assert (n1 * d[0]) % half_norm == 0 and (n2 * d[1]) % half_norm == 0
        coroots.append((n1 * d[0] // half_norm, n2 * d[1] // half_norm))
    positive_coroots = tuple(coroots)

    highest_root = positive_roots[-1]
    assert highest_root[0] >= 0 and highest_root[1] >= 0
    comarks = positive_coroots[-1]

    rho: Weight = (1, 1)
    dual_coxeter = 1 + comarks[0] + comarks[1]

    det = _det(cartan)
    adj = ((cartan[1][1], -cartan[0][1]), (-cartan[1][0], cartan[0][0]))
    gram: Mat2 = (
        (d[0] * adj[0][0], d[0] * adj[0][1]),
        (d[1] * adj[1][0], d[1] * adj[1][1]),
    )
    assert gram[0][1] == gram[1][0]
    assert gram[0][0] > 0 and _det(gram) > 0
    assert det > 0
    for w, _ in weyl_elements:
        # w^T * gram * w == gram: the form is Weyl invariant.
        wt = ((w[0][0], w[1][0]), (w[0][1], w[1][1]))
        assert _mat_mul(wt, _mat_mul(gram, w)) == gram

    longest = [i for i, (w, _) in enumerate(weyl_elements) if _mat_vec(w, rho) == (-1, -1)]
    assert len(longest) == 1

    rs = RootSystem(
        algebra=algebra,
        cartan_matrix=cartan,
        simple_roots=simple_roots,
        positive_roots=positive_roots,
        positive_coroots=positive_coroots,
        highest_root=highest_root,
        comarks=comarks,
        rho=rho,
        dual_coxeter=dual_coxeter,
        gram=gram,
        weyl_elements=weyl_elements,
        longest_element_index=longest[0],
    )
    _ROOT_SYSTEMS[algebra] = rs
    return rs


def reflect(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """Simple reflection s_i(lam) = lam - <lam, alpha_i^vee> * alpha_i, i in {1, 2}."""
    if i not in (1, 2):
        raise ValueError(f"simple-root index must be 1 or 2, got {i}")
    alpha = rs.simple_roots[i - 1]
    c = lam[i - 1]
    return (lam[0] - c * alpha[0], lam[1] - c * alpha[1])


def is_dominant(lam: Weight) -> bool:
    return lam[0] >= 0 and lam[1] >= 0


def level(rs: RootSystem, lam: Weight) -> int:
    """Pairing of lam with the coroot of the highest root (linear in lam)."""
    return rs.comarks[0] * lam[0] + rs.comarks[1] * lam[1]


def dual_weight(rs: RootSystem, lam: Weight) -> Weight:
    """The involution lam -> -w0(lam) given by the longest Weyl element."""
    w0, _ = rs.weyl_elements[rs.longest_element_index]
    image = _mat_vec(w0, lam)
    return (-image[0], -image[1])


def inner_product(rs: RootSystem, v: Weight, w: Weight) -> int:
    """Weyl-invariant bilinear form (integer-scaled; scale is per-algebra)."""
    g = rs.gram
    return v[0] * (g[0][0] * w[0] + g[0][1] * w[1]) + v[1] * (g[1][0] * w[0] + g[1][1] * w[1])


def norm_sq(rs: RootSystem, v: Weight) -> int:
    return inner_product(rs, v, v)


def dominant_representative(rs: RootSystem, v: Weight) -> Weight:
    """The unique dominant weight in the (unshifted) Weyl orbit of v."""
    cap = len(rs.positive_roots) + 1
    for _ in range(cap):
        if v[0] < 0:
            v = reflect(rs, 1, v)
        elif v[1] < 0:
            v = reflect(rs, 2, v)
        else:
            return v
    raise AssertionError(f"dominance folding failed to terminate for {v}")


def dominant_representative_signed(rs: RootSystem, v: Weight) -> tuple[Weight, int] | None:
    """Dominant orbit representative with the determinant of the folding element.

    Returns None when v lies on a reflection hyperplane (some Weyl element
    fixes it), the case that cancels out of alternating sums.
    """
    sign = 1
    cap = len(rs.positive_roots) + 1
    for _ in range(cap):
        if v[0] < 0:
            v = reflect(rs, 1, v)
            sign = -sign
        elif v[1] < 0:
            v = reflect(rs, 2, v)
            sign = -sign
        elif v[0] == 0 or v[1] == 0:
            return None
        else:
            return v, sign
    raise AssertionError(f"dominance folding failed to terminate for {v}")


def weyl_orbit(rs: RootSystem, lam: Weight) -> tuple[Weight, ...]:
    """All distinct images of lam under the Weyl group, sorted."""
    return tuple(sorted({_mat_vec(w, lam) for w, _ in rs.weyl_elements}))


_DIM_CACHE: dict[tuple[AlgebraType, Weight], int] = {}


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight lam."""
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    key = (rs.algebra, lam)
    cached = _DIM_CACHE.get(key)
    if cached is not None:
        return cached
    shifted = (lam[0] + 1, lam[1] + 1)
    num = 1
    den = 1
    for m in rs.positive_coroots:
        num *= m[0] * shifted[0] + m[1] * shifted[1]
        den *= m[0] + m[1]
    assert num % den == 0
    dim = num // den
    _DIM_CACHE[key] = dim
    return dim
