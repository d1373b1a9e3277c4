"""Braid-group action on the weight blocks of tensor powers of the generic
highest-weight module, over Z[q^{±1}, s^{±1}].

The two-factor braiding sends v_a ⊗ v_b to

    Σ_{m=0}^{a}  s^{-(a+b)} q^{2(a-m)(b+m)} q^{m(m-1)/2} f_divided_action(m, b)
                 · v_{b+m} ⊗ v_{a-m},

a pure element of the ring: the diagonal Cartan factor combines with the
global normalization into the monomial s^{-(i+j)} q^{2ij} evaluated at the
output indices (i, j) = (a-m, b+m), so half-integer exponents never arise.
Inverse blocks are obtained by exact elimination in which every pivot is a
±monomial; a non-unit pivot is a fatal convention error, never user error.

Generator matrices on n-factor blocks apply the local braiding to adjacent
slots and are cached by (n, r, i, sign). A second, independently truncated
route computes the quantum trace of a braid word on the color-l simple
module directly; the weight-block route and the truncated route serve as
oracles for each other.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, closure_class
from .errors import ConventionError, NonKnotClosureError
from .ring import LaurentPoly, ONE, ZERO, aug, quantum_binomial

# ----------------------------------------------------------------------
# weight bases


@dataclass(frozen=True)
class WeightBasis:
    """Ordered basis of the (n, r) weight block: all compositions of r into
    n nonnegative parts, in lexicographic order, fixed forever."""

    n: int
    r: int
    compositions: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.compositions)

    def position(self, composition: tuple[int, ...]) -> int:
        return _composition_index(self.n, self.r)[composition]

    def composition(self, position: int) -> tuple[int, ...]:
        return self.compositions[position]


def _compositions(n: int, r: int) -> list[tuple[int, ...]]:
    if n == 1:
        return [(r,)]
    out = []
    for first in range(r + 1):
        for rest in _compositions(n - 1, r - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def weight_basis(n: int, r: int) -> WeightBasis:
    comps = tuple(sorted(_compositions(n, r)))
    assert len(comps) == math.comb(r + n - 1, n - 1)
    return WeightBasis(n, r, comps)


@lru_cache(maxsize=None)
def _composition_index(n: int, r: int) -> dict[tuple[int, ...], int]:
    return {comp: k for k, comp in enumerate(weight_basis(n, r).compositions)}


# ----------------------------------------------------------------------
# local braiding data


def f_divided_action(k: int, j: int) -> LaurentPoly:
    """Coefficient of v_{j+k} in the k-th divided lowering power applied to v_j.

    Equals [k+j choose j]_q · Π_{m=0}^{k-1} (s q^{-m-j} - s^{-1} q^{j+m}); the
    empty product at k = 0 gives 1. Under the color-l specialization the
    product vanishes exactly when k + j > l, which is what truncates the
    action to the (l+1)-dimensional simple module.
    """
    if k < 0 or j < 0:
        raise ValueError("f_divided_action requires nonnegative arguments")
    coeff = quantum_binomial(k + j, j)
    for m in range(k):
        factor = LaurentPoly({(-m - j, 1, 0): 1, (j + m, -1, 0): -1})
        coeff = coeff * factor
    return coeff


@dataclass(frozen=True)
class LocalRMatrix:
    """Action of the normalized two-factor braiding (or its inverse) on the
    local weight-r block, indexed by the first factor: columns[a_in] maps
    a_out -> coefficient, with the second factor index always r - a."""

    r: int
    sign: int
    columns: tuple[dict[int, LaurentPoly], ...]


@lru_cache(maxsize=None)
def local_r_matrix(r: int, sign: int = 1) -> LocalRMatrix:
    if r < 0:
        raise ValueError("local weight must be nonnegative")
    if sign not in (1, -1):
        raise ValueError("sign must be ±1")
    if sign == 1:
        columns: list[dict[int, LaurentPoly]] = []
        for a in range(r + 1):
            b = r - a
            column: dict[int, LaurentPoly] = {}
            for m in range(a + 1):
                exponent = 2 * (a - m) * (b + m) + (m * (m - 1)) // 2
                coeff = LaurentPoly.monomial(1, e_q=exponent, e_s=-r) * f_divided_action(m, b)
                if coeff:
                    column[b + m] = coeff
            columns.append(column)
        if r == 0:
            assert columns[0] == {0: ONE}, "degenerate block must normalize to 1"
        return LocalRMatrix(r, 1, tuple(columns))
    forward = local_r_matrix(r, 1)
    rows = [
        [forward.columns[a_in].get(a_out, ZERO) for a_in in range(r + 1)]
        for a_out in range(r + 1)
    ]
    inverse_rows = _invert_unit_pivot(rows)
    columns = []
    for a_in in range(r + 1):
        column = {
            a_out: inverse_rows[a_out][a_in]
            for a_out in range(r + 1)
            if inverse_rows[a_out][a_in]
        }
        columns.append(column)
    return LocalRMatrix(r, -1, tuple(columns))


def _invert_unit_pivot(rows: list[list[LaurentPoly]]) -> list[list[LaurentPoly]]:
    """Invert a matrix over the Laurent ring by elimination with ±monomial
    pivots only. Divisions are exact by construction; if some column offers
    no unit pivot the entries cannot clear to Laurent form and the exponent
    conventions are wrong."""
    n = len(rows)
    work = [
        row[:] + [ONE if j == i else ZERO for j in range(n)]
        for i, row in enumerate(rows)
    ]
    pivot_of_col = [-1] * n
    used = [False] * n
    for col in range(n):
        pivot = next(
            (i for i in range(n) if not used[i] and work[i][col].is_unit()), None
        )
        if pivot is None:
            raise ConventionError(
                f"no unit pivot in column {col} while inverting a local braiding "
                "block: inverse entries do not clear to Laurent form"
            )
        used[pivot] = True
        pivot_of_col[col] = pivot
        inv = work[pivot][col].unit_inverse()
        work[pivot] = [inv * entry for entry in work[pivot]]
        for i in range(n):
            if i != pivot and work[i][col]:
                factor = work[i][col]
                work[i] = [e - factor * p for e, p in zip(work[i], work[pivot])]
    return [work[pivot_of_col[col]][n:] for col in range(n)]


# ----------------------------------------------------------------------
# block matrices


@dataclass
class BlockMatrix:
    """Sparse square matrix over the ring acting on one weight block.

    Stored column-major: cols[c] maps row -> nonzero coefficient.
    """

    n: int
    r: int
    dim: int
    cols: dict[int, dict[int, LaurentPoly]]

    @classmethod
    def identity(cls, n: int, r: int) -> "BlockMatrix":
        dim = weight_basis(n, r).size
        return cls(n, r, dim, {c: {c: ONE} for c in range(dim)})

    def entry(self, row: int, col: int) -> LaurentPoly:
        return self.cols.get(col, {}).get(row, ZERO)

    def diagonal(self) -> list[LaurentPoly]:
        return [self.entry(k, k) for k in range(self.dim)]

    def trace(self) -> LaurentPoly:
        total = ZERO
        for c, column in self.cols.items():
            value = column.get(c)
            if value is not None:
                total = total + value
        return total

    def apply(self, vector: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
        """Matrix times column vector (vector as row -> coefficient)."""
        out: dict[int, LaurentPoly] = {}
        for k, coeff in vector.items():
            column = self.cols.get(k)
            if not column:
                continue
            for row, value in column.items():
                acc = out.get(row)
                out[row] = value * coeff if acc is None else acc + value * coeff
        return {row: v for row, v in out.items() if v}

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("block mismatch in matrix product")
        cols = {}
        for c, column in other.cols.items():
            product = self.apply(column)
            if product:
                cols[c] = product
        return BlockMatrix(self.n, self.r, self.dim, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        if (self.n, self.r, self.dim) != (other.n, other.r, other.dim):
            return False
        keys = set(self.cols) | set(other.cols)
        for c in keys:
            if self.cols.get(c, {}) != other.cols.get(c, {}):
                return False
        return True

    def to_triplets(self) -> str:
        """Deterministic sparse dump, one "(row, col) poly" line per entry."""
        lines = []
        for col in sorted(self.cols):
            for row in sorted(self.cols[col]):
                lines.append(f"({row}, {col}) {self.cols[col][row].render()}")
        lines.sort()
        return "\n".join(lines)


_GEN_CACHE: dict[tuple[int, int, int, int], BlockMatrix] = {}
_GEN_LOCK = threading.Lock()


def generator_block(n: int, r: int, i: int, sign: int = 1) -> BlockMatrix:
    """Matrix of σ_i^{±1} on the (n, r) weight block.

    Applies the local braiding to tensor slots (i, i+1) grouped by the local
    weight sum, identity elsewhere. Cached by (n, r, i, sign); the local
    blocks are shared across i.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    key = (n, r, i, sign)
    with _GEN_LOCK:
        cached = _GEN_CACHE.get(key)
    if cached is not None:
        return cached
    basis = weight_basis(n, r)
    index = _composition_index(n, r)
    cols: dict[int, dict[int, LaurentPoly]] = {}
    for col, comp in enumerate(basis.compositions):
        a, b = comp[i - 1], comp[i]
        local = local_r_matrix(a + b, sign)
        column: dict[int, LaurentPoly] = {}
        for a_out, coeff in local.columns[a].items():
            out = list(comp)
            out[i - 1] = a_out
            out[i] = a + b - a_out
            column[index[tuple(out)]] = coeff
        cols[col] = column
    block = BlockMatrix(n, r, basis.size, cols)
    with _GEN_LOCK:
        _GEN_CACHE[key] = block
    return block


def evaluate_word(word: BraidWord, r: int) -> BlockMatrix:
    """Ordered product of generator blocks on the (strands, r) weight block."""
    result = BlockMatrix.identity(word.strands, r)
    for index, sign in word.letters:
        result = result @ generator_block(word.strands, r, index, sign)
    return result


# ----------------------------------------------------------------------
# truncated route: quantum trace on the color-l simple module


@lru_cache(maxsize=None)
def _truncated_basis(n: int, r: int, l: int) -> tuple[tuple[tuple[int, ...], ...], dict]:
    comps = tuple(c for c in weight_basis(n, r).compositions if max(c) <= l)
    return comps, {c: k for k, c in enumerate(comps)}


@lru_cache(maxsize=None)
def _truncated_local(r_local: int, l: int, sign: int) -> tuple[dict[int, LaurentPoly], ...]:
    """Color-l specialized local braiding restricted to indices ≤ l.

    The specialization kills every coefficient that would leave the window,
    which is asserted; the restricted forward block is therefore square and
    its inverse is again computed with unit pivots.
    """
    phi = aug(l)
    lo, hi = max(0, r_local - l), min(l, r_local)
    window = list(range(lo, hi + 1))
    forward = local_r_matrix(r_local, 1)
    reduced: dict[int, dict[int, LaurentPoly]] = {}
    for a in window:
        column: dict[int, LaurentPoly] = {}
        for a_out, coeff in forward.columns[a].items():
            value = phi.apply(coeff)
            if a_out not in window:
                assert not value, (
                    "truncation failure: specialized coefficient escapes the "
                    f"color-{l} window at local weight {r_local}"
                )
                continue
            if value:
                column[a_out] = value
        reduced[a] = column
    if sign == 1:
        return tuple(reduced[a] for a in window)
    rows = [
        [reduced[a_in].get(a_out, ZERO) for a_in in window] for a_out in window
    ]
    inverse_rows = _invert_unit_pivot(rows)
    columns = []
    for j, _ in enumerate(window):
        columns.append(
            {
                window[i]: inverse_rows[i][j]
                for i in range(len(window))
                if inverse_rows[i][j]
            }
        )
    return tuple(columns)


def _truncated_generator(n: int, r: int, l: int, i: int, sign: int):
    comps, index = _truncated_basis(n, r, l)
    cols: dict[int, dict[int, LaurentPoly]] = {}
    for col, comp in enumerate(comps):
        a, b = comp[i - 1], comp[i]
        local = _truncated_local(a + b, l, sign)
        column: dict[int, LaurentPoly] = {}
        for a_out, coeff in local[a - max(0, a + b - l)].items():
            out = list(comp)
            out[i - 1] = a_out
            out[i] = a + b - a_out
            column[index[tuple(out)]] = coeff
        cols[col] = column
    return cols


def simple_module_trace(word: BraidWord, l: int) -> LaurentPoly:
    """Quantum trace of the braid action on the n-fold color-l simple module.

    Computed directly on the truncated basis (all tensor indices ≤ l) with
    the color-l specialization applied entrywise; the inverse of K acts
    diagonally by q^{2r - nl} on total-weight-r vectors. An independent
    second path: up to the writhe monomial this must coincide with the
    weight-block assembly of the colored Jones polynomial.
    """
    if l < 1:
        raise ValueError("the color parameter l must be at least 1")
    cc = closure_class(word)
    if not cc.is_knot:
        raise NonKnotClosureError(word.permutation_cycles())
    n = word.strands
    total = ZERO
    for r in range(0, n * l + 1):
        comps, _ = _truncated_basis(n, r, l)
        dim = len(comps)
        if dim == 0:
            continue
        # column-major product over the truncated block, letters composed in
        # the same order as evaluate_word: accumulated @ generator
        product = {c: {c: ONE} for c in range(dim)}
        for index, sign in word.letters:
            gen = _truncated_generator(n, r, l, index, sign)
            new_product = {}
            for c in range(dim):
                acc: dict[int, LaurentPoly] = {}
                for k, coeff in gen[c].items():
                    for row, value in product.get(k, {}).items():
                        prev = acc.get(row)
                        term = value * coeff
                        acc[row] = term if prev is None else prev + term
                new_product[c] = {row: v for row, v in acc.items() if v}
            product = new_product
        block_trace = ZERO
        for c in range(dim):
            value = product[c].get(c)
            if value is not None:
                block_trace = block_trace + value
        total = total + block_trace * LaurentPoly.q_power(2 * r - n * l)
    return total
