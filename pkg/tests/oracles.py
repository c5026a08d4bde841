"""Independent oracles the tests check the library against.

Everything here is deliberately written from first principles (or delegated
to sympy) rather than reusing the library's own algorithms, so agreement is
evidence, not tautology.
"""

from __future__ import annotations

import sympy

from fusionring.cartan import AlgebraType, RootSystem, build_root_system, level

# Translation-lattice generators of the affine Weyl group, in simple-root
# multiples: the lattice is spanned by (ratio_i * alpha_i) where ratio_i is
# the squared-length ratio of the highest root to alpha_i.
_LATTICE_RATIOS = {
    AlgebraType.A2: (1, 1),
    AlgebraType.C2: (2, 1),
    AlgebraType.G2: (3, 1),
}


def weyl_group_order_bfs(cartan) -> int:
    """Order of the group generated by the two simple reflections.

    Standalone breadth-first closure straight from the Cartan matrix.
    """
    alpha = [(cartan[0][0], cartan[1][0]), (cartan[0][1], cartan[1][1])]

    def refl(i, v):
        return (v[0] - v[i] * alpha[i][0], v[1] - v[i] * alpha[i][1])

    # Represent a group element by its action on the two basis vectors.
    ident = ((1, 0), (0, 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for i in (0, 1):
                img = tuple(refl(i, col) for col in g)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(seen)


def alcove_count_closed_form(algebra: AlgebraType, k: int) -> int:
    if algebra in (AlgebraType.A2, AlgebraType.C2):
        return (k + 1) * (k + 2) // 2
    return sum(k - 2 * b + 1 for b in range(k // 2 + 1))


def brute_force_fold(rs: RootSystem, k: int, lam, box: int = 6):
    """Fold by exhaustive search over Weyl elements and lattice translations.

    Returns None for a wall, else (nu, sign).  The search window must be
    large enough for the inputs used in tests; an assertion guards that a
    representative was found at all.
    """
    t = k + rs.dual_coxeter
    r1, r2 = _LATTICE_RATIOS[rs.algebra]
    a1, a2 = rs.simple_roots
    gen1 = (r1 * a1[0], r1 * a1[1])
    gen2 = (r2 * a2[0], r2 * a2[1])
    v = (lam[0] + 1, lam[1] + 1)
    hits = []
    for w, sign in rs.weyl_elements:
        wv = (w[0][0] * v[0] + w[0][1] * v[1], w[1][0] * v[0] + w[1][1] * v[1])
        for x in range(-box, box + 1):
            for y in range(-box, box + 1):
                u = (
                    wv[0] + t * (x * gen1[0] + y * gen2[0]),
                    wv[1] + t * (x * gen1[1] + y * gen2[1]),
                )
                if u[0] >= 0 and u[1] >= 0 and level(rs, u) <= t:
                    hits.append((u, sign))
    assert hits, (rs.algebra, k, lam)
    walls = [u for u, _ in hits if u[0] == 0 or u[1] == 0 or level(rs, u) == t]
    if walls:
        return None
    interiors = {u for u, _ in hits}
    assert len(interiors) == 1, (lam, interiors)
    u, sign = hits[0]
    assert all(s == sign for _, s in hits)
    return (u[0] - 1, u[1] - 1), sign


_X, _Y = sympy.symbols("X Y")


def to_sympy(p):
    return sum(c * _X**i * _Y**j for (i, j), c in p.terms())


def rational_staircase_size(gens) -> int | None:
    """Quotient dimension over the rationals via sympy's Groebner engine."""
    basis = sympy.groebner([to_sympy(g) for g in gens], _X, _Y, order="grevlex", domain=sympy.QQ)
    exps = [g.LM(order="grevlex").exponents for g in basis.polys]
    xb = min((e[0] for e in exps if e[1] == 0), default=None)
    yb = min((e[1] for e in exps if e[0] == 0), default=None)
    if xb is None or yb is None:
        return None
    return sum(
        1
        for i in range(xb)
        for j in range(yb)
        if not any(p <= i and q <= j for p, q in exps)
    )


def dominance_lower_dominant_weights(rs: RootSystem, lam) -> set:
    """Dominant mu with lam - mu a nonnegative integer root combination.

    Direct enumeration; used to bound character-polynomial supports.
    """
    c = rs.cartan_matrix
    det = c[0][0] * c[1][1] - c[0][1] * c[1][0]
    out = set()
    bound = 4 * (abs(lam[0]) + abs(lam[1])) + 8
    for a in range(bound):
        for b in range(bound):
            da, db = lam[0] - a, lam[1] - b
            n1 = c[1][1] * da - c[0][1] * db
            n2 = -c[1][0] * da + c[0][0] * db
            if n1 % det == 0 and n2 % det == 0 and n1 // det >= 0 and n2 // det >= 0:
                out.add((a, b))
    return out


def tensor_by_weight_convolution(rs: RootSystem, lam, mu):
    """Decompose a tensor product by convolving weight systems and peeling
    highest weights; independent of the signed folding route."""
    from fusionring.repring import weight_system

    conv: dict = {}
    for w1, m1 in weight_system(rs, lam).items():
        for w2, m2 in weight_system(rs, mu).items():
            key = (w1[0] + w2[0], w1[1] + w2[1])
            conv[key] = conv.get(key, 0) + m1 * m2

    def height(w):
        c = rs.cartan_matrix
        det = c[0][0] * c[1][1] - c[0][1] * c[1][0]
        n1 = c[1][1] * w[0] - c[0][1] * w[1]
        n2 = -c[1][0] * w[0] + c[0][0] * w[1]
        assert n1 % det == 0 and n2 % det == 0
        return (n1 + n2) // det

    result: dict = {}
    while conv:
        top = max(conv, key=lambda w: (height(w), w))
        mult = conv[top]
        assert top[0] >= 0 and top[1] >= 0 and mult > 0, (top, mult)
        result[top] = mult
        for w, m in weight_system(rs, top).items():
            left = conv.get(w, 0) - mult * m
            if left:
                conv[w] = left
            else:
                conv.pop(w, None)
    return result
