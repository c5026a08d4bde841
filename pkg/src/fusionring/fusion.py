"""The level-k fusion ring: structure constants, arithmetic, and evaluation.

Structure constants come from the truncated tensor product: classical
multiplicities are folded into the alcove with determinant signs, and the
signed sums cancel down to nonnegative integers.  The ring is free over the
alcove basis; multiplication-operator matrices for the two fundamental
classes bridge to the polynomial ring, where evaluating a polynomial means
applying it to those matrices at the identity class.

Tables serialize to a self-describing JSON cache file, one per
(algebra, level), byte-reproducible thanks to the canonical alcove order.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass

from .alcove import Alcove, enumerate_alcove, fold_to_alcove
from .cartan import (
    AlgebraType,
    RootSystem,
    Weight,
    build_root_system,
    dual_weight,
)
from .polyring import IntPolynomial
from .repring import tensor_decompose

CODE_VERSION = "fusionring-1"


@dataclass(frozen=True, eq=False)
class FusionTable:
    alc: Alcove
    # Sparse symmetric tensor: rows[(i, j)] maps nu-index -> N_{i j}^nu.
    rows: dict[tuple[int, int], dict[int, int]]
    mult_x: tuple[tuple[int, ...], ...]
    mult_y: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.alc.weights)

    def coefficient(self, i: int, j: int, l: int) -> int:
        return self.rows.get((i, j), {}).get(l, 0)

    def entries(self) -> list[tuple[int, int, int, int]]:
        """All nonzero (lambda, mu, nu, N) quadruples, canonically sorted."""
        out = [
            (i, j, l, v)
            for (i, j), row in self.rows.items()
            for l, v in row.items()
            if v
        ]
        out.sort()
        return out


@dataclass(frozen=True)
class FusionElement:
    alc: Alcove
    coeffs: tuple[int, ...]

    def __add__(self, other: FusionElement) -> FusionElement:
        _check_same(self.alc, other.alc)
        return FusionElement(self.alc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FusionElement) -> FusionElement:
        _check_same(self.alc, other.alc)
        return FusionElement(self.alc, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, scalar: int) -> FusionElement:
        return FusionElement(self.alc, tuple(scalar * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _check_same(a: Alcove, b: Alcove) -> None:
    if a is not b and (a.rs.algebra != b.rs.algebra or a.k != b.k):
        raise ValueError("fusion elements belong to different alcoves")


def zero_element(alc: Alcove) -> FusionElement:
    return FusionElement(alc, (0,) * len(alc.weights))


def basis_element(alc: Alcove, lam: Weight) -> FusionElement:
    pos = alc.index.get(lam)
    if pos is None:
        raise ValueError(f"weight {lam} is not in the level-{alc.k} alcove")
    coeffs = [0] * len(alc.weights)
    coeffs[pos] = 1
    return FusionElement(alc, tuple(coeffs))


def fold_class(table_or_alc: FusionTable | Alcove, lam: Weight) -> FusionElement:
    """Image of the basis class of lam in the fusion ring (zero on walls)."""
    alc = table_or_alc.alc if isinstance(table_or_alc, FusionTable) else table_or_alc
    folded = fold_to_alcove(alc, lam)
    if folded.is_wall:
        return zero_element(alc)
    return basis_element(alc, folded.weight) * folded.sign


def fusion_table(alc: Alcove) -> FusionTable:
    """Structure constants of the truncated tensor product over the alcove."""
    rs = alc.rs
    n = len(alc.weights)
    rows: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(n):
        for j in range(i, n):
            row: dict[int, int] = {}
            for xi, m in tensor_decompose(rs, alc.weights[i], alc.weights[j]).items():
                folded = fold_to_alcove(alc, xi)
                if folded.is_wall:
                    continue
                l = alc.index[folded.weight]
                new = row.get(l, 0) + folded.sign * m
                if new:
                    row[l] = new
                else:
                    del row[l]
            assert all(v > 0 for v in row.values()), (alc.weights[i], alc.weights[j])
            rows[(i, j)] = row
            if i != j:
                rows[(j, i)] = row
    return _with_mult_matrices(alc, rows)


def _with_mult_matrices(alc: Alcove, rows) -> FusionTable:
    n = len(alc.weights)
    table = FusionTable(alc=alc, rows=rows, mult_x=(), mult_y=())
    mats = []
    for fundamental in ((1, 0), (0, 1)):
        e = fold_class(alc, fundamental)
        cols = []
        for j in range(n):
            basis = FusionElement(alc, tuple(int(l == j) for l in range(n)))
            cols.append(multiply(table, e, basis).coeffs)
        mats.append(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))
    object.__setattr__(table, "mult_x", mats[0])
    object.__setattr__(table, "mult_y", mats[1])
    return table


def multiply(t: FusionTable, u: FusionElement, v: FusionElement) -> FusionElement:
    """Bilinear extension of the structure constants."""
    _check_same(t.alc, u.alc)
    _check_same(t.alc, v.alc)
    out = [0] * t.size
    for i, a in enumerate(u.coeffs):
        if not a:
            continue
        for j, b in enumerate(v.coeffs):
            if not b:
                continue
            for l, c in t.rows.get((i, j), {}).items():
                out[l] += a * b * c
    return FusionElement(t.alc, tuple(out))


def dual_element(t: FusionTable, u: FusionElement) -> FusionElement:
    """Coefficientwise image of u under the basis duality lam -> lam*."""
    alc = t.alc
    rs = alc.rs
    out = [0] * t.size
    for i, a in enumerate(u.coeffs):
        if a:
            out[alc.index[dual_weight(rs, alc.weights[i])]] = a
    return FusionElement(alc, tuple(out))


def pairing(t: FusionTable, u: FusionElement, v: FusionElement) -> int:
    """Bilinear form <u, v>: the identity-class coefficient of u * v^*."""
    product = multiply(t, u, dual_element(t, v))
    return product.coeffs[t.alc.index[(0, 0)]]


def fusion_rule_N(t: FusionTable, weights: list[Weight]) -> int:
    """The fusion rule on a nonempty multiset of alcove weights.

    Computed as the identity-class coefficient of the iterated product; the
    recursive splitting definition is checked against this in tests rather
    than used as the algorithm.
    """
    if not weights:
        raise ValueError("fusion rule needs at least one weight")
    acc = basis_element(t.alc, weights[0])
    for lam in weights[1:]:
        acc = multiply(t, acc, basis_element(t.alc, lam))
    return acc.coeffs[t.alc.index[(0, 0)]]


def check_frobenius(t: FusionTable) -> tuple[bool, tuple[Weight, Weight, Weight] | None]:
    """Exhaustively verify <[lam][nu], [mu]> = <[lam], [nu*][mu]> over the alcove.

    Returns (True, None) or (False, first violating (lam, nu, mu))."""
    alc = t.alc
    n = t.size
    basis = [basis_element(alc, w) for w in alc.weights]
    for i in range(n):
        for l in range(n):
            left = multiply(t, basis[i], basis[l])
            right_factor = dual_element(t, basis[l])
            for j in range(n):
                lhs = pairing(t, left, basis[j])
                rhs = pairing(t, basis[i], multiply(t, right_factor, basis[j]))
                if lhs != rhs:
                    return False, (alc.weights[i], alc.weights[l], alc.weights[j])
    return True, None


def evaluate_poly(t: FusionTable, p: IntPolynomial) -> FusionElement:
    """Ring homomorphism Z[X, Y] -> F_k: apply p(mult_X, mult_Y) to the identity."""
    n = t.size
    e0 = basis_element(t.alc, (0, 0)).coeffs
    cache: dict[tuple[int, int], tuple[int, ...]] = {(0, 0): e0}

    def power_vec(i: int, j: int) -> tuple[int, ...]:
        cached = cache.get((i, j))
        if cached is not None:
            return cached
        if i > 0:
            prev = power_vec(i - 1, j)
            mat = t.mult_x
        else:
            prev = power_vec(0, j - 1)
            mat = t.mult_y
        vec = tuple(sum(mat[r][c] * prev[c] for c in range(n)) for r in range(n))
        cache[(i, j)] = vec
        return vec

    out = [0] * n
    for (i, j), c in p.terms():
        vec = power_vec(i, j)
        for r in range(n):
            out[r] += c * vec[r]
    return FusionElement(t.alc, tuple(out))


# ---------------------------------------------------------------------------
# Disk cache: one self-describing JSON file per (algebra, level).
# ---------------------------------------------------------------------------


def _cache_key(algebra: AlgebraType, k: int) -> str:
    payload = f"{algebra.value}:{k}:{CODE_VERSION}".encode()
    return hashlib.sha256(payload).hexdigest()


def table_to_json_dict(t: FusionTable) -> dict:
    rs = t.alc.rs
    return {
        "algebra": rs.algebra.value,
        "level": t.alc.k,
        "h_dual": rs.dual_coxeter,
        "alcove": [list(w) for w in t.alc.weights],
        "N": [list(entry) for entry in t.entries()],
        "code_version": CODE_VERSION,
        "cache_key": _cache_key(rs.algebra, t.alc.k),
    }


def table_to_json_bytes(t: FusionTable) -> bytes:
    return (json.dumps(table_to_json_dict(t), sort_keys=True, indent=2) + "\n").encode()


def table_from_json_dict(data: dict) -> FusionTable:
    algebra = AlgebraType(data["algebra"])
    rs = build_root_system(algebra)
    alc = enumerate_alcove(rs, int(data["level"]))
    stored = [tuple(w) for w in data["alcove"]]
    if stored != list(alc.weights):
        raise ValueError("cached alcove does not match the canonical enumeration")
    rows: dict[tuple[int, int], dict[int, int]] = {}
    for i, j, l, v in data["N"]:
        rows.setdefault((int(i), int(j)), {})[int(l)] = int(v)
    return _with_mult_matrices(alc, rows)


def cache_path(cache_dir: str, algebra: AlgebraType, k: int) -> str:
    return os.path.join(cache_dir, f"fusion_{algebra.value}_k{k}.json")


def save_table(t: FusionTable, cache_dir: str) -> str:
    """Atomically write the table's cache file; returns its path."""
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, t.alc.rs.algebra, t.alc.k)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(table_to_json_bytes(t))
    os.replace(tmp, path)
    return path


def load_table(cache_dir: str, algebra: AlgebraType, k: int) -> FusionTable | None:
    """Load a cached table; None when absent or stale (wrong cache key)."""
    path = cache_path(cache_dir, algebra, k)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "rb") as fh:
            data = json.loads(fh.read().decode())
        if data.get("cache_key") != _cache_key(algebra, k):
            return None
        return table_from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError, IndexError):
        # Structurally broken files rebuild from scratch; value-level
        # corruption still loads and is caught by the selftest properties.
        return None


def cached_fusion_table(rs: RootSystem, k: int, cache_dir: str | None = None) -> FusionTable:
    """Fetch-or-build: reuse a valid cache file when a directory is given."""
    if cache_dir:
        loaded = load_table(cache_dir, rs.algebra, k)
        if loaded is not None:
            return loaded
    table = fusion_table(enumerate_alcove(rs, k))
    if cache_dir:
        save_table(table, cache_dir)
    return table
