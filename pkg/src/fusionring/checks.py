"""Property suite shared by the CLI selftest and the test harness.

Each check runs exhaustively for one (algebra, level) pair and reports a
witness on failure, so a corrupted table names the offending triple instead
of just flipping a boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import AlgebraType, RootSystem, build_root_system, dual_weight, weyl_dimension
from .fusion import (
    FusionTable,
    basis_element,
    cached_fusion_table,
    check_frobenius,
    multiply,
    pairing,
)
from .repring import char_poly


@dataclass(frozen=True)
class CheckResult:
    check: str
    algebra: str
    level: int
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.witness is None else f"  witness={self.witness}"
        return f"{status} algebra={self.algebra} level={self.level} check={self.check}{tail}"


def _ring_axiom_checks(t: FusionTable) -> list[tuple[str, bool, str | None]]:
    alc = t.alc
    n = t.size
    out: list[tuple[str, bool, str | None]] = []

    witness = None
    for i in range(n):
        row = t.rows.get((0, i), {})
        if row != {i: 1}:
            witness = f"unit*{alc.weights[i]}"
            break
    out.append(("unit", witness is None, witness))

    witness = None
    for i in range(n):
        for j in range(i, n):
            if t.rows.get((i, j), {}) != t.rows.get((j, i), {}):
                witness = f"{alc.weights[i]}*{alc.weights[j]}"
                break
        if witness:
            break
    out.append(("commutativity", witness is None, witness))

    witness = None
    for i in range(n):
        for j in range(n):
            for l, v in t.rows.get((i, j), {}).items():
                if v < 0:
                    witness = f"N[{i},{j},{l}]={v}"
                    break
            if witness:
                break
        if witness:
            break
    out.append(("nonnegativity", witness is None, witness))

    witness = None
    basis = [basis_element(alc, w) for w in alc.weights]
    for i in range(n):
        for j in range(n):
            left = multiply(t, basis[i], basis[j])
            for l in range(n):
                if multiply(t, left, basis[l]) != multiply(
                    t, basis[i], multiply(t, basis[j], basis[l])
                ):
                    witness = f"({i},{j},{l})"
                    break
            if witness:
                break
        if witness:
            break
    out.append(("associativity", witness is None, witness))
    return out


def _duality_checks(t: FusionTable) -> list[tuple[str, bool, str | None]]:
    alc = t.alc
    rs = alc.rs
    n = t.size
    dual_idx = [alc.index[dual_weight(rs, w)] for w in alc.weights]
    witness = None
    for i in range(n):
        for j in range(n):
            row = t.rows.get((i, j), {})
            if row.get(alc.index[(0, 0)], 0) != int(j == dual_idx[i]):
                witness = f"N[{i},{j},0]"
                break
            dual_row = t.rows.get((dual_idx[i], dual_idx[j]), {})
            for l, v in row.items():
                if dual_row.get(dual_idx[l], 0) != v:
                    witness = f"N[{i},{j},{l}] vs dual"
                    break
            if witness:
                break
        if witness:
            break
    return [("duality", witness is None, witness)]


def _gorenstein_checks(t: FusionTable) -> list[tuple[str, bool, str | None]]:
    alc = t.alc
    basis = [basis_element(alc, w) for w in alc.weights]
    witness = None
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if pairing(t, u, v) != int(i == j):
                witness = f"<{alc.weights[i]},{alc.weights[j]}>"
                break
        if witness:
            break
    gram_ok = witness is None
    frob_ok, triple = check_frobenius(t)
    results = [("gram_identity", gram_ok, witness)]
    results.append(("frobenius", frob_ok, None if frob_ok else f"{triple}"))
    return results


def _dimension_check(rs: RootSystem, bound: int) -> tuple[str, bool, str | None]:
    dims = (weyl_dimension(rs, (1, 0)), weyl_dimension(rs, (0, 1)))
    c1, c2 = rs.comarks
    for a in range(bound // c1 + 1):
        for b in range((bound - c1 * a) // c2 + 1):
            lam = (a, b)
            if char_poly(rs, lam).evaluate(*dims) != weyl_dimension(rs, lam):
                return ("dimension_homomorphism", False, f"{lam}")
    return ("dimension_homomorphism", True, None)


def run_selftest(max_level: int, cache_dir: str | None = None) -> list[CheckResult]:
    """Run every property check for the three algebras up to max_level."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    results: list[CheckResult] = []
    for rs in (build_root_system(a) for a in sorted(AlgebraType, key=lambda x: x.value)):
        for k in range(max_level + 1):
            table = cached_fusion_table(rs, k, cache_dir)
            checks = (
                _ring_axiom_checks(table)
                + _gorenstein_checks(table)
                + _duality_checks(table)
            )
            results.extend(
                CheckResult(name, rs.algebra.value, k, ok, witness)
                for name, ok, witness in checks
            )
        name, ok, witness = _dimension_check(rs, max_level + 4)
        results.append(CheckResult(name, rs.algebra.value, max_level + 4, ok, witness))
    return results
