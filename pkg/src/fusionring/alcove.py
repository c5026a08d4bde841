"""Level-k alcove enumeration and affine Weyl folding.

The alcove P_k collects the dominant weights of level at most k in a fixed
canonical order (level, then lexicographic), so every matrix and serialized
table built on top of it is reproducible byte for byte.

Folding sends an arbitrary weight to its alcove representative under the
shifted action of the affine Weyl group generated by the simple reflections
and the affine reflection across the hyperplane <v, beta0^vee> = k + h^vee.
Weights whose rho-shift lands on any reflection hyperplane fold to a wall.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import (
    RootSystem,
    Weight,
    is_dominant,
    level,
    norm_sq,
    reflect,
)


@dataclass(frozen=True)
class FoldResult:
    """Either a wall (weight None, sign 0) or an interior weight with sign."""

    weight: Weight | None
    sign: int

    @property
    def is_wall(self) -> bool:
        return self.weight is None


WALL = FoldResult(None, 0)


@dataclass(frozen=True, eq=False)
class Alcove:
    rs: RootSystem
    k: int
    weights: tuple[Weight, ...]
    index: dict[Weight, int]

    def __len__(self) -> int:
        return len(self.weights)

    def __contains__(self, lam: Weight) -> bool:
        return lam in self.index


def enumerate_alcove(rs: RootSystem, k: int) -> Alcove:
    """All dominant weights of level <= k, ordered by (level, a, b)."""
    if k < 0:
        raise ValueError(f"level must be nonnegative, got {k}")
    c1, c2 = rs.comarks
    weights = [
        (a, b)
        for a in range(k // c1 + 1)
        for b in range((k - c1 * a) // c2 + 1)
    ]
    weights.sort(key=lambda w: (level(rs, w), w))
    assert weights[0] == (0, 0)
    index = {w: i for i, w in enumerate(weights)}
    return Alcove(rs=rs, k=k, weights=tuple(weights), index=index)


def _negative_pairings(rs: RootSystem, v: Weight) -> int:
    return sum(1 for m in rs.positive_coroots if m[0] * v[0] + m[1] * v[1] < 0)


def fold_to_alcove(alc: Alcove, lam: Weight) -> FoldResult:
    """Alcove representative of lam under the shifted affine action.

    Alternates dominance-restoring simple reflections with the affine
    reflection v -> v - (<v, beta0^vee> - (k + h^vee)) * beta0 on v = lam + rho,
    accumulating the determinant sign.  Each iteration strictly decreases the
    measure  norm^2(v) * (#positive roots + 1) + #negative coroot pairings:
    simple reflections preserve the invariant norm and drop the pairing count
    by one, the affine reflection strictly shrinks the norm.
    """
    rs = alc.rs
    t = alc.k + rs.dual_coxeter
    theta = rs.highest_root
    v: Weight = (lam[0] + 1, lam[1] + 1)
    sign = 1
    weight = len(rs.positive_roots) + 1
    prev_measure: int | None = None
    while True:
        measure = norm_sq(rs, v) * weight + _negative_pairings(rs, v)
        assert prev_measure is None or measure < prev_measure, (lam, v)
        prev_measure = measure
        if v[0] < 0:
            v = reflect(rs, 1, v)
            sign = -sign
            continue
        if v[1] < 0:
            v = reflect(rs, 2, v)
            sign = -sign
            continue
        if v[0] == 0 or v[1] == 0:
            return WALL
        lv = level(rs, v)
        if lv == t:
            return WALL
        if lv > t:
            excess = lv - t
            v = (v[0] - excess * theta[0], v[1] - excess * theta[1])
            sign = -sign
            continue
        result = (v[0] - 1, v[1] - 1)
        assert is_dominant(result) and level(rs, result) <= alc.k
        return FoldResult(result, sign)
