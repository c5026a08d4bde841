"""Certification of generating sets of the fusion ideal.

A candidate set J of polynomials is certified equal to the fusion ideal
without ever constructing the ideal's infinite generating family.  Two
checks suffice:

  step A: every candidate evaluates to zero in the fusion ring, so J is
          contained in the fusion ideal;
  step B: the strong Groebner basis of J has unit leading coefficients and
          a finite staircase whose size equals the alcove size n, so the
          quotient by J is a free abelian group of rank n.

The fusion ring itself is free of rank n, so the induced surjection from
the J-quotient onto it is a surjection of free abelian groups of the same
finite rank: it splits, the kernel is a rank-zero direct summand of a free
module, hence zero, and the ideals coincide.  A verified two-element set is
automatically a regular sequence: the ideal has codimension two in the
polynomial ring, so two generators cannot form anything shorter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .alcove import enumerate_alcove, fold_to_alcove
from .cartan import RootSystem, Weight, is_dominant, level
from .fusion import (
    FusionTable,
    basis_element,
    cached_fusion_table,
    check_frobenius,
    evaluate_poly,
    pairing,
)
from .polyring import (
    IntPolynomial,
    StrongGB,
    format_polynomial,
    quotient_free_rank,
    strong_groebner,
)
from .repring import char_poly

SOUNDNESS_ARGUMENT = (
    "Every generator evaluates to zero in the fusion ring, so the ideal J "
    "they generate is contained in the fusion ideal. The strong Groebner "
    "basis of J certifies that the quotient by J is a free abelian group "
    "of rank n equal to the alcove size: either the basis has unit leading "
    "coefficients and the finite staircase of standard monomials is itself "
    "a free basis, or the Smith normal form of the relation lattice on the "
    "finitely many non-unit-covered monomials has all invariant factors "
    "equal to one. The fusion ring is itself free of rank n, hence the "
    "induced surjection between the two quotients is a surjection of free "
    "abelian groups of equal finite rank; it splits, its kernel is a direct "
    "summand of rank zero inside a free module, hence zero, and the two "
    "ideals coincide."
)

REGULAR_SEQUENCE_ARGUMENT = (
    "The fusion ideal has codimension two in the bivariate polynomial ring "
    "over the integers, so any two-element generating set is a regular "
    "sequence and the quotient is a complete intersection."
)


@dataclass(frozen=True)
class PresentationCertificate:
    algebra: str
    level: int
    alcove_size: int
    generators: tuple[IntPolynomial, ...]
    evaluation_witnesses: tuple[tuple[int, ...], ...]
    gb: StrongGB | None
    rank: int | None
    freeness_route: str | None
    verified: bool
    failure_reason: str | None

    @property
    def verdict(self) -> str:
        return "verified" if self.verified else "failed"

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "level": self.level,
            "alcove_size": self.alcove_size,
            "generators": [format_polynomial(g) for g in self.generators],
            "evaluation_witnesses": [list(w) for w in self.evaluation_witnesses],
            "groebner_basis": (
                None if self.gb is None else [format_polynomial(g) for g in self.gb.basis]
            ),
            "staircase": (
                None
                if self.gb is None or self.gb.staircase is None
                else [_format_monomial(m) for m in self.gb.staircase]
            ),
            "unit_leading": None if self.gb is None else self.gb.unit_leading,
            "rank": self.rank,
            "freeness_route": self.freeness_route,
            "verdict": self.verdict,
            "failure_reason": self.failure_reason,
            "soundness_argument": SOUNDNESS_ARGUMENT,
        }

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n").encode()


@dataclass(frozen=True)
class CIReport:
    certificate: PresentationCertificate
    regular_sequence: bool

    def to_json_dict(self) -> dict:
        data = self.certificate.to_json_dict()
        data["regular_sequence"] = self.regular_sequence
        data["regular_sequence_argument"] = REGULAR_SEQUENCE_ARGUMENT
        return data

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n").encode()


def _format_monomial(mono: tuple[int, int]) -> str:
    return format_polynomial(IntPolynomial.monomial(mono[0], mono[1]))


def _character_of(rs: RootSystem, lam: Weight) -> IntPolynomial:
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} has a negative coefficient")
    return char_poly(rs, lam)


def known_generators(rs: RootSystem, k: int) -> list[IntPolynomial]:
    """The published generating sets of the level-k fusion ideal.

    A2 and C2: the pair of characters at (k+1)*omega1 and k*omega1 + omega2.
    G2: the three-element sets, split by parity of k; the even form needs
    k >= 2 and the odd form k >= 3, otherwise a listed weight would go
    negative and the call is rejected.
    """
    if k < 1:
        raise ValueError(f"known generating sets need level >= 1, got {k}")
    alg = rs.algebra.value
    if alg in ("a2", "c2"):
        return [_character_of(rs, (k + 1, 0)), _character_of(rs, (k, 1))]
    if k % 2 == 0:
        half = k // 2
        return [
            _character_of(rs, (0, half + 1)) + _character_of(rs, (0, half)),
            _character_of(rs, (1, half)),
            _character_of(rs, (3, half - 1)),
        ]
    half = (k - 1) // 2
    return [
        _character_of(rs, (0, half + 1)),
        _character_of(rs, (2, half)),
        _character_of(rs, (3, half)) + _character_of(rs, (3, half - 1)),
    ]


def natural_ideal_elements(rs: RootSystem, k: int, level_bound: int) -> list[IntPolynomial]:
    """Fusion-ideal elements from folding: one per dominant weight with
    k < level <= level_bound.

    Wall weights contribute their bare character; interior folds contribute
    the character minus sign times the character of the fold image.  These
    sample the ideal's unbounded natural generating family; no claim is made
    that any truncation generates.
    """
    if level_bound <= k:
        raise ValueError("level_bound must exceed the alcove level")
    alc = enumerate_alcove(rs, k)
    out = []
    candidates = [
        (a, b)
        for a in range(level_bound // rs.comarks[0] + 1)
        for b in range((level_bound - rs.comarks[0] * a) // rs.comarks[1] + 1)
        if k < level(rs, (a, b))
    ]
    candidates.sort(key=lambda w: (level(rs, w), w))
    for lam in candidates:
        folded = fold_to_alcove(alc, lam)
        if folded.is_wall:
            out.append(char_poly(rs, lam))
        else:
            out.append(char_poly(rs, lam) - char_poly(rs, folded.weight) * folded.sign)
    return out


def verify_presentation(
    rs: RootSystem,
    k: int,
    gens: list[IntPolynomial],
    cache_dir: str | None = None,
    table: FusionTable | None = None,
) -> PresentationCertificate:
    """Certify whether gens generate exactly the level-k fusion ideal."""
    if not gens:
        raise ValueError("generator list must be nonempty")
    if table is None:
        table = cached_fusion_table(rs, k, cache_dir)
    n = table.size

    witnesses = tuple(evaluate_poly(table, g).coeffs for g in gens)
    vanishing = all(not any(w) for w in witnesses)

    nonzero = [g for g in gens if not g.is_zero]
    gb = strong_groebner(nonzero) if nonzero else None
    freeness = None if gb is None else quotient_free_rank(gb)
    rank, route = (None, None) if freeness is None else freeness

    failure = None
    if not vanishing:
        bad = next(i for i, w in enumerate(witnesses) if any(w))
        failure = f"generator {bad} does not evaluate to zero in the fusion ring"
    elif gb is None:
        failure = "no nonzero generators"
    elif gb.staircase is None:
        failure = "staircase is infinite (quotient not finite over the integers)"
    elif freeness is None:
        failure = "quotient is not certified free over the integers (torsion)"
    elif rank != n:
        failure = f"quotient rank {rank} differs from alcove size {n}"

    return PresentationCertificate(
        algebra=rs.algebra.value,
        level=k,
        alcove_size=n,
        generators=tuple(gens),
        evaluation_witnesses=witnesses,
        gb=gb,
        rank=rank,
        freeness_route=route,
        verified=failure is None,
        failure_reason=failure,
    )


def certify_complete_intersection(
    rs: RootSystem,
    k: int,
    p: IntPolynomial,
    q: IntPolynomial,
    cache_dir: str | None = None,
    table: FusionTable | None = None,
) -> CIReport:
    """Certify a two-element presentation; verified implies regular sequence."""
    cert = verify_presentation(rs, k, [p, q], cache_dir=cache_dir, table=table)
    return CIReport(certificate=cert, regular_sequence=cert.verified)


def gorenstein_duality_check(t: FusionTable) -> bool:
    """Gram matrix of the pairing is the identity and the Frobenius identity holds."""
    basis = [basis_element(t.alc, w) for w in t.alc.weights]
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if pairing(t, u, v) != int(i == j):
                return False
    ok, _ = check_frobenius(t)
    return ok


# ---------------------------------------------------------------------------
# Brute-force search for two-element generating sets (G2).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    algebra: str
    level: int
    bound: int
    candidate_count: int
    found_pair: tuple[IntPolynomial, IntPolynomial] | None
    certificate: CIReport | None
    found_at: int | None

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "level": self.level,
            "bound": self.bound,
            "candidate_count": self.candidate_count,
            "status": "found" if self.found_pair else "exhausted",
            "pair": (
                None
                if self.found_pair is None
                else [format_polynomial(p) for p in self.found_pair]
            ),
            "found_at": self.found_at,
            "certificate": None if self.certificate is None else self.certificate.to_json_dict(),
            "enumeration": SEARCH_ENUMERATION_NOTE,
        }

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n").encode()


SEARCH_ENUMERATION_NOTE = (
    "Pairs (g_i + c*h_m, g_j + c'*h_n) over base generators g (the defined "
    "published three-element set entries) and perturbation pool h (base "
    "generators followed by the level k+1 natural ideal elements); ordered "
    "by (i, j) with i < j, then by perturbation index and coefficient "
    "magnitude 0, +1, -1, ..., +bound, -bound on the first slot, then the "
    "second. First verified pair wins; bound 0 enumerates nothing."
)


def _defined_published_elements(rs: RootSystem, k: int) -> list[IntPolynomial]:
    """The published G2 elements that exist at this level (k=1 has only two)."""
    if k % 2 == 0:
        half = k // 2
        specs = [[(0, half + 1), (0, half)], [(1, half)], [(3, half - 1)]]
    else:
        half = (k - 1) // 2
        specs = [[(0, half + 1)], [(2, half)], [(3, half), (3, half - 1)]]
    out = []
    for weights in specs:
        if all(is_dominant(w) for w in weights):
            poly = IntPolynomial.zero()
            for w in weights:
                poly = poly + char_poly(rs, w)
            out.append(poly)
    return out


def search_two_generators(
    rs: RootSystem,
    k: int,
    bound: int,
    cache_dir: str | None = None,
) -> SearchReport:
    """Deterministic brute-force search for a two-element generating set.

    The certified existence of such a pair gives no locality bound, so the
    search is best-effort over a deliberately small space (see
    SEARCH_ENUMERATION_NOTE) and reports honestly when exhausted.  bound 0
    yields the degenerate empty enumeration; negative bounds are rejected.
    """
    if rs.algebra.value != "g2":
        raise ValueError("the two-generator search applies to G2 only")
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    if k < 1:
        raise ValueError(f"search needs level >= 1, got {k}")

    table = cached_fusion_table(rs, k, cache_dir)
    base = _defined_published_elements(rs, k)
    pool: list[IntPolynomial] = []
    for cand in base + natural_ideal_elements(rs, k, k + 1):
        if cand not in pool:
            pool.append(cand)

    coeffs: list[int] = [0]
    for magnitude in range(1, bound + 1):
        coeffs.extend((magnitude, -magnitude))
    perturbations = [(None, 0)] + [
        (m, c) for m in range(len(pool)) for c in coeffs if c != 0
    ]

    def side(i: int) -> list[IntPolynomial]:
        out = []
        for m, c in perturbations:
            poly = base[i]
            if m is not None:
                poly = poly + pool[m] * c
            out.append(poly)
        return out

    count = 0
    if bound >= 1:
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                for p in side(i):
                    for q in side(j):
                        count += 1
                        report = certify_complete_intersection(rs, k, p, q, table=table)
                        if report.certificate.verified:
                            return SearchReport(
                                algebra=rs.algebra.value,
                                level=k,
                                bound=bound,
                                candidate_count=count,
                                found_pair=(p, q),
                                certificate=report,
                                found_at=count,
                            )
    return SearchReport(
        algebra=rs.algebra.value,
        level=k,
        bound=bound,
        candidate_count=count,
        found_pair=None,
        certificate=None,
        found_at=None,
    )
