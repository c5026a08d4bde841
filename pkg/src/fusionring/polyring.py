"""Sparse bivariate polynomials over the integers and strong Groebner bases.

The monomial order is graded lexicographic with X > Y and is fixed globally:
certificates must be byte-stable, and the freeness rank read off a staircase
does not depend on the order anyway.

The Groebner machinery is the *strong* variant over the integers: reduction
steps divide coefficients with remainder, and the basis is saturated with
GCD-polynomials alongside S-polynomials.  That is what lets a normal form
detect torsion (non-unit leading coefficients), the exact failure mode that
separates "free of rank n" from "rank n plus torsion".  No modular or
floating-point shortcuts: all arithmetic is arbitrary-precision.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Monomial = tuple[int, int]


def _order_key(mono: Monomial) -> tuple[int, int]:
    """Graded-lex key: higher tuple = larger monomial."""
    return (mono[0] + mono[1], mono[0])


class IntPolynomial:
    """Bivariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        self._terms = clean

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial()

    @staticmethod
    def constant(c: int) -> IntPolynomial:
        return IntPolynomial({(0, 0): c})

    @staticmethod
    def monomial(i: int, j: int, c: int = 1) -> IntPolynomial:
        return IntPolynomial({(i, j): c})

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms sorted with the leading one first."""
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def coeff(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_order_key)
        return mono, self._terms[mono]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = terms.get(mono, 0) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        out = IntPolynomial.__new__(IntPolynomial)
        out._terms = terms
        return out

    def __neg__(self) -> IntPolynomial:
        out = IntPolynomial.__new__(IntPolynomial)
        out._terms = {mono: -c for mono, c in self._terms.items()}
        return out

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            out = IntPolynomial.__new__(IntPolynomial)
            out._terms = {mono: c * other for mono, c in self._terms.items()}
            return out
        terms: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                mono = (i1 + i2, j1 + j2)
                new = terms.get(mono, 0) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        out = IntPolynomial.__new__(IntPolynomial)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, i: int, j: int, c: int = 1) -> IntPolynomial:
        """Multiply by c * X^i * Y^j."""
        out = IntPolynomial.__new__(IntPolynomial)
        out._terms = {(a + i, b + j): coeff * c for (a, b), coeff in self._terms.items()}
        return out

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def key(self) -> tuple:
        return tuple(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"IntPolynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


X = IntPolynomial.monomial(1, 0)
Y = IntPolynomial.monomial(0, 1)
ONE = IntPolynomial.constant(1)


def format_polynomial(p: IntPolynomial) -> str:
    """Canonical text form: terms in decreasing order, 'c*X^i*Y^j' pieces."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for idx, ((i, j), c) in enumerate(p.terms()):
        mag = abs(c)
        factors = []
        if i > 0:
            factors.append("X" if i == 1 else f"X^{i}")
        if j > 0:
            factors.append("Y" if j == 1 else f"Y^{j}")
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{' + ' if c > 0 else ' - '}{body}")
    return "".join(parts)


_TERM_RE = re.compile(
    r"^(?P<coeff>\d+)?\s*(?:\*?\s*X(?:\^(?P<xe>\d+))?)?\s*(?:\*?\s*Y(?:\^(?P<ye>\d+))?)?$"
)


class PolynomialParseError(ValueError):
    pass


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse the canonical text format (round-trips format_polynomial exactly)."""
    s = text.strip()
    if not s:
        raise PolynomialParseError("empty polynomial text")
    if s == "0":
        return IntPolynomial.zero()
    # Split into signed chunks at top-level + and -.
    chunks: list[tuple[int, str]] = []
    sign = 1
    buf = ""
    for ch in s:
        if ch in "+-":
            if buf.strip():
                chunks.append((sign, buf.strip()))
            elif chunks:
                raise PolynomialParseError(f"dangling sign in {text!r}")
            sign = 1 if ch == "+" else -1
            buf = ""
        else:
            buf += ch
    if not buf.strip():
        raise PolynomialParseError(f"trailing sign in {text!r}")
    chunks.append((sign, buf.strip()))

    terms: dict[Monomial, int] = {}
    for sgn, chunk in chunks:
        compact = chunk.replace(" ", "")
        m = _TERM_RE.match(compact)
        if not m:
            raise PolynomialParseError(f"cannot parse term {chunk!r}")
        coeff_txt = m.group("coeff")
        has_x = "X" in compact
        has_y = "Y" in compact
        if coeff_txt is None and not has_x and not has_y:
            raise PolynomialParseError(f"cannot parse term {chunk!r}")
        coeff = int(coeff_txt) if coeff_txt is not None else 1
        i = int(m.group("xe")) if m.group("xe") else (1 if has_x else 0)
        j = int(m.group("ye")) if m.group("ye") else (1 if has_y else 0)
        mono = (i, j)
        terms[mono] = terms.get(mono, 0) + sgn * coeff
    return IntPolynomial(terms)


# ---------------------------------------------------------------------------
# Strong Groebner bases over the integers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrongGB:
    """Reduced strong Groebner basis with staircase and unit-leading flag.

    staircase is the tuple of standard monomials (not divisible by any
    leading monomial) when finite, None when infinite.  When unit_leading is
    true and the staircase is finite of size n, the quotient ring is a free
    module over the integers of rank n with the staircase as basis.
    """

    basis: tuple[IntPolynomial, ...]
    staircase: tuple[Monomial, ...] | None
    unit_leading: bool

    @property
    def rank(self) -> int | None:
        return None if self.staircase is None else len(self.staircase)


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _balanced_div(c: int, b: int) -> tuple[int, int]:
    """q, r with c = q*b + r and -b/2 < r <= b/2 (b > 0)."""
    q, r = divmod(c, b)
    if 2 * r > b:
        q += 1
        r -= b
    return q, r


def _reduce(p: IntPolynomial, basis: list[IntPolynomial]) -> IntPolynomial:
    """Full normal form: no term remains with a balanced-division reduction.

    Scans from the highest monomial down; at each monomial applies the basis
    element with the smallest leading coefficient among those whose leading
    monomial divides it, replacing the coefficient by its balanced remainder.
    Terminates: each step either empties a monomial or strictly shrinks the
    absolute coefficient there, and only strictly smaller monomials change.
    """
    leads = [g.leading_term() for g in basis]
    result: dict[Monomial, int] = {}
    work = dict(p._terms)
    while work:
        mono = max(work, key=_order_key)
        c = work.pop(mono)
        if not c:
            continue
        candidates = [
            (lc, idx)
            for idx, (lm, lc) in enumerate(leads)
            if _mono_divides(lm, mono)
        ]
        while candidates and c:
            lc, idx = min(candidates)
            q, r = _balanced_div(c, lc)
            if q == 0:
                break
            g = basis[idx]
            lm = leads[idx][0]
            shift = (mono[0] - lm[0], mono[1] - lm[1])
            for (gi, gj), gc in g._terms.items():
                target = (gi + shift[0], gj + shift[1])
                if target == mono:
                    continue
                # Targets sit strictly below mono, hence below everything
                # already finalized in result.
                new = work.get(target, 0) - q * gc
                if new:
                    work[target] = new
                else:
                    work.pop(target, None)
            c = r
        if c:
            result[mono] = c
    out = IntPolynomial.__new__(IntPolynomial)
    out._terms = result
    return out


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """g, u, v with u*a + v*b = g = gcd(a, b), g > 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _s_polynomial(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    (fm, fc), (gm, gc) = f.leading_term(), g.leading_term()
    lcm_mono = (max(fm[0], gm[0]), max(fm[1], gm[1]))
    lcm_coeff = abs(fc * gc) // _egcd(fc, gc)[0]
    return f.shift(lcm_mono[0] - fm[0], lcm_mono[1] - fm[1], lcm_coeff // fc) - g.shift(
        lcm_mono[0] - gm[0], lcm_mono[1] - gm[1], lcm_coeff // gc
    )


def _gcd_polynomial(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    (fm, fc), (gm, gc) = f.leading_term(), g.leading_term()
    lcm_mono = (max(fm[0], gm[0]), max(fm[1], gm[1]))
    _, u, v = _egcd(fc, gc)
    return f.shift(lcm_mono[0] - fm[0], lcm_mono[1] - fm[1], u) + g.shift(
        lcm_mono[0] - gm[0], lcm_mono[1] - gm[1], v
    )


def _normalize_sign(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero:
        return p
    return -p if p.leading_term()[1] < 0 else p


def _basis_sort_key(p: IntPolynomial) -> tuple:
    mono, coeff = p.leading_term()
    return (_order_key(mono), abs(coeff), p.key())


def _autoreduce(basis: list[IntPolynomial]) -> list[IntPolynomial]:
    """Replace each element by its normal form against the others, to a fixpoint.

    Ideal-preserving (only subtracts basis multiples; an element is dropped
    only when it genuinely reduces to zero), hence safe on arbitrary
    generating sets, not just completed bases.
    """
    basis = [_normalize_sign(g) for g in basis if not g.is_zero]
    changed = True
    while changed:
        changed = False
        basis.sort(key=_basis_sort_key)
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            if not others:
                continue
            reduced = _normalize_sign(_reduce(basis[i], others))
            if reduced != basis[i]:
                changed = True
                if reduced.is_zero:
                    basis.pop(i)
                else:
                    basis[i] = reduced
                break
    basis.sort(key=_basis_sort_key)
    return basis


def _minimalize(basis: list[IntPolynomial]) -> list[IntPolynomial]:
    """Drop elements whose leading term is strongly divisible by another's.

    Valid only on a saturated (strong Groebner) basis, where the kept
    elements still strongly divide every ideal leading term by transitivity
    of strong divisibility; ties keep the earlier element in sort order.
    """
    basis = sorted(basis, key=_basis_sort_key)
    kept: list[IntPolynomial] = []
    for i, g in enumerate(basis):
        gm, gc = g.leading_term()
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hm, hc = h.leading_term()
            if _mono_divides(hm, gm) and gc % hc == 0:
                if hm == gm and abs(hc) == abs(gc) and j > i:
                    continue
                redundant = True
                break
        if not redundant:
            kept.append(g)
    return kept


def _staircase(basis: list[IntPolynomial]) -> tuple[Monomial, ...] | None:
    leads = [g.leading_term()[0] for g in basis]
    x_powers = [m[0] for m in leads if m[1] == 0]
    y_powers = [m[1] for m in leads if m[0] == 0]
    if not x_powers or not y_powers:
        return None
    xb, yb = min(x_powers), min(y_powers)
    standard = [
        (i, j)
        for i in range(xb)
        for j in range(yb)
        if not any(_mono_divides(lm, (i, j)) for lm in leads)
    ]
    standard.sort(key=_order_key)
    return tuple(standard)


def strong_groebner(gens: list[IntPolynomial]) -> StrongGB:
    """Strong Groebner basis of the ideal generated by gens, over the integers.

    Buchberger saturation with both S-polynomials and GCD-polynomials,
    deterministic pair selection (sorted by lcm degree, lcm monomial, then
    age), followed by inter-reduction and sign normalization, so permuted
    inputs produce the identical reduced basis.
    """
    basis = _autoreduce([g for g in gens if not g.is_zero])
    if not basis:
        raise ValueError("generator list must contain a nonzero polynomial")

    # Post-saturation cleanup can shrink a leading coefficient through a
    # balanced (non-exact) reduction step, which invalidates previously
    # processed pairs; saturation and reduction therefore iterate to a
    # joint fixpoint.
    while True:

        def pair_key(i: int, j: int) -> tuple:
            (mi, _), (mj, _) = basis[i].leading_term(), basis[j].leading_term()
            lcm = (max(mi[0], mj[0]), max(mi[1], mj[1]))
            return (_order_key(lcm), i, j)

        pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
        grew = False
        while pairs:
            i, j = min(pairs, key=lambda p: pair_key(*p))
            pairs.discard((i, j))
            f, g = basis[i], basis[j]
            fc, gc = f.leading_term()[1], g.leading_term()[1]
            new_polys = [_s_polynomial(f, g)]
            if fc % gc != 0 and gc % fc != 0:
                new_polys.append(_gcd_polynomial(f, g))
            for cand in new_polys:
                remainder = _normalize_sign(_reduce(cand, basis))
                if remainder.is_zero:
                    continue
                grew = True
                basis.append(remainder)
                new_idx = len(basis) - 1
                pairs.update((idx, new_idx) for idx in range(new_idx))
        cleaned = _autoreduce(_minimalize(basis))
        if not grew and cleaned == basis:
            break
        basis = cleaned
    # Closure sanity: every S- and GCD-polynomial of the final basis reduces
    # to zero (the strong Groebner property).
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert _reduce(_s_polynomial(basis[i], basis[j]), basis).is_zero
            fc = basis[i].leading_term()[1]
            gc = basis[j].leading_term()[1]
            if fc % gc != 0 and gc % fc != 0:
                assert _reduce(_gcd_polynomial(basis[i], basis[j]), basis).is_zero
    for g in gens:
        if not g.is_zero:
            assert _reduce(g, basis).is_zero

    unit_leading = all(abs(g.leading_term()[1]) == 1 for g in basis)
    return StrongGB(
        basis=tuple(basis),
        staircase=_staircase(basis),
        unit_leading=unit_leading,
    )


def normal_form(p: IntPolynomial, gb: StrongGB) -> IntPolynomial:
    """Canonical remainder of p modulo the basis; idempotent, p - nf(p) in ideal."""
    return _reduce(p, list(gb.basis))


# ---------------------------------------------------------------------------
# Freeness certificates for the quotient.
# ---------------------------------------------------------------------------
#
# With unit leading coefficients the standard monomials are a free basis of
# the quotient and the rank is the staircase size.  Without them the quotient
# can still be free: the leading-coefficient ideal at a monomial m is
# generated by c_m = gcd{lc(g) : LM(g) | m}, and monomials with c_m = 1
# rewrite into strictly smaller ones, so the classes of the finitely many
# non-unit-covered monomials generate the quotient, with one relation per
# such monomial that is covered at all.  Smith normal form of that relation
# lattice decides freeness and gives the exact rank.


def _cover_gcd(basis: list[IntPolynomial], mono: Monomial) -> int:
    g = 0
    for b in basis:
        lm, lc = b.leading_term()
        if _mono_divides(lm, mono):
            g = _egcd(g, lc)[0]
            if g == 1:
                return 1
    return g


def _cover_combination(basis: list[IntPolynomial], mono: Monomial) -> tuple[int, IntPolynomial]:
    """Element of the ideal with leading term c * mono, c the cover gcd."""
    acc = IntPolynomial.zero()
    c = 0
    for b in basis:
        lm, lc = b.leading_term()
        if not _mono_divides(lm, mono):
            continue
        d, s, t = _egcd(c, lc)
        acc = acc * s + b.shift(mono[0] - lm[0], mono[1] - lm[1], t)
        c = d
        if c == 1:
            break
    assert c != 0 and acc.leading_term() == (mono, c)
    return c, acc


def _unit_prefix_bound(basis: list[IntPolynomial], axis: int) -> int | None:
    """Least power p with gcd{lc(g) : LM(g) a pure power <= p on axis} = 1."""
    pures = sorted(
        (lm[axis], lc)
        for lm, lc in (b.leading_term() for b in basis)
        if lm[1 - axis] == 0
    )
    g = 0
    for p, lc in pures:
        g = _egcd(g, lc)[0]
        if g == 1:
            return p
    return None


def _eliminate_unit_covered(
    e: IntPolynomial,
    basis: list[IntPolynomial],
    keep: set[Monomial],
    rewrites: dict[Monomial, IntPolynomial],
) -> IntPolynomial:
    """Rewrite every monomial outside keep via its unit cover combination."""
    while True:
        outside = [m for m in e._terms if m not in keep]
        if not outside:
            return e
        u = max(outside, key=_order_key)
        f = rewrites.get(u)
        if f is None:
            c, f = _cover_combination(basis, u)
            assert c == 1, (u, c)
            rewrites[u] = f
        e = e - f * e.coeff(u)


def _diagonalize(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero diagonal entries of a diagonal form under unimodular row/col ops."""
    m = [list(r) for r in rows]
    diag: list[int] = []
    top = 0
    left = 0
    while top < len(m) and left < ncols:
        pivot = None
        for i in range(top, len(m)):
            for j in range(left, ncols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[left], row[j0] = row[j0], row[left]
        while True:
            p = m[top][left]
            dirty = False
            for i in range(top + 1, len(m)):
                if m[i][left]:
                    q = m[i][left] // p
                    m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if m[i][left]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(left + 1, ncols):
                if m[top][j]:
                    q = m[top][j] // p
                    for row in m:
                        row[j] -= q * row[left]
                    if m[top][j]:
                        for row in m:
                            row[left], row[j] = row[j], row[left]
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(abs(m[top][left]))
        top += 1
        left += 1
    return diag


def quotient_free_rank(gb: StrongGB) -> tuple[int, str] | None:
    """Certified rank of the quotient when it is a free module over the integers.

    Returns (rank, route) with route "unit_staircase" (free basis is the
    staircase itself) or "smith_normal_form" (freeness via the relation
    lattice of the non-unit-covered monomials); None when the quotient is
    not finitely generated or not free.
    """
    if gb.staircase is None:
        return None
    if gb.unit_leading:
        return len(gb.staircase), "unit_staircase"
    basis = list(gb.basis)
    xu = _unit_prefix_bound(basis, 0)
    yu = _unit_prefix_bound(basis, 1)
    if xu is None or yu is None:
        return None
    box = [(i, j) for i in range(xu) for j in range(yu)]
    box.sort(key=_order_key)
    generators = [m for m in box if _cover_gcd(basis, m) != 1]
    keep = set(generators)
    rewrites: dict[Monomial, IntPolynomial] = {}
    rows = []
    for m in generators:
        if _cover_gcd(basis, m) == 0:
            continue
        _, e = _cover_combination(basis, m)
        e = _eliminate_unit_covered(e, basis, keep, rewrites)
        rows.append([e.coeff(v) for v in generators])
    diag = _diagonalize(rows, len(generators))
    assert len(diag) == len(rows), "relation rows must be independent"
    if any(d != 1 for d in diag):
        return None
    rank = len(generators) - len(diag)
    assert rank == len(gb.staircase)
    return rank, "smith_normal_form"
