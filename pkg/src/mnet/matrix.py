"""Residue matrices, +/-1 M-matrices and their 0/1 reductions.

Two base constructions are supported:

* Type I base, ``n`` prime: ``a[i][j] = 1 + ((i-1)(j-1) mod n)``.
* Type II base, ``n+1`` prime and > 3: ``a[i][j] = (i*j) mod (n+1)``.

Indices ``i, j`` run over ``1..n``. Residues are always represented in
``1..n``; the Type II product never hits 0 because ``n+1`` is prime.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np


class MatrixError(ValueError):
    """Invalid matrix order or malformed matrix input."""


class NonPrimeOrder(MatrixError):
    pass


class OrderTooSmall(MatrixError):
    pass


class Variant(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class Polarity(enum.Enum):
    """Parity substitution rule used to turn residues into signs.

    ``EVEN_POSITIVE`` maps even residues to +1 and odd residues (1 included)
    to -1. ``ODD_POSITIVE`` maps odd residues (1 included) to +1 and even
    residues to -1. The two rules always give negated matrices.
    """

    EVEN_POSITIVE = "even"
    ODD_POSITIVE = "odd"


DEFAULT_POLARITY = Polarity.ODD_POSITIVE


def is_prime(m: int) -> bool:
    """Deterministic trial division."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for d in range(3, math.isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def valid_type2_orders(max_prime: int, min_prime: int = 5) -> list[int]:
    """Orders ``n`` with ``n+1`` prime and ``min_prime <= n+1 <= max_prime``."""
    return [q - 1 for q in range(max(min_prime, 5), max_prime + 1) if is_prime(q)]


def check_order(n: int, variant: Variant) -> None:
    if n < 1:
        raise MatrixError(f"order must be a positive integer, got {n}")
    if variant is Variant.TYPE_I:
        if not is_prime(n):
            raise NonPrimeOrder(f"Type I requires n prime; n={n} is not prime")
    else:
        if n + 1 <= 3:
            raise OrderTooSmall(f"Type II requires n+1 > 3; got n+1={n + 1}")
        if not is_prime(n + 1):
            raise NonPrimeOrder(f"Type II requires n+1 prime; n+1={n + 1} is not prime")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def _as_square(entries, n: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64)
    if a.shape != (n, n):
        raise MatrixError(f"expected a {n}x{n} matrix, got shape {a.shape}")
    return _frozen(a)


class _Grid:
    n: int
    entries: np.ndarray

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._key() == other._key() and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self._key(), self.entries.tobytes()))

    def _key(self) -> tuple:
        return (self.n,)


@dataclass(frozen=True, eq=False)
class MnMatrix(_Grid):
    n: int
    variant: Variant
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_square(self.entries, self.n))

    def _key(self):
        return (self.n, self.variant)


@dataclass(frozen=True, eq=False)
class SignMatrix(_Grid):
    n: int
    matrix_type: Variant
    polarity: Polarity
    entries: np.ndarray

    def __post_init__(self):
        a = _as_square(self.entries, self.n)
        if not np.isin(a, (-1, 1)).all():
            raise MatrixError("sign matrix entries must be +1 or -1")
        object.__setattr__(self, "entries", a)

    def _key(self):
        return (self.n, self.matrix_type, self.polarity)


@dataclass(frozen=True, eq=False)
class BinaryMatrix(_Grid):
    n: int
    entries: np.ndarray

    def __post_init__(self):
        a = _as_square(self.entries, self.n)
        if not np.isin(a, (0, 1)).all():
            raise MatrixError("binary matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_rows(cls, rows) -> BinaryMatrix:
        a = np.asarray(rows, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise MatrixError(f"binary matrix must be square, got shape {a.shape}")
        return cls(a.shape[0], a)


def build_mn_matrix(n: int, variant: Variant = Variant.TYPE_II) -> MnMatrix:
    check_order(n, variant)
    idx = np.arange(1, n + 1, dtype=np.int64)
    if variant is Variant.TYPE_I:
        entries = 1 + np.outer(idx - 1, idx - 1) % n
    else:
        entries = np.outer(idx, idx) % (n + 1)
    return MnMatrix(n, variant, entries)


def build_sign_matrix(base: MnMatrix, polarity: Polarity = DEFAULT_POLARITY) -> SignMatrix:
    even = base.entries % 2 == 0
    if polarity is Polarity.EVEN_POSITIVE:
        signs = np.where(even, 1, -1)
    else:
        signs = np.where(even, -1, 1)
    return SignMatrix(base.n, base.variant, polarity, signs)


def to_binary(sign: SignMatrix) -> BinaryMatrix:
    return BinaryMatrix(sign.n, (sign.entries > 0).astype(np.int64))


def mnet_binary(n: int, polarity: Polarity = DEFAULT_POLARITY) -> BinaryMatrix:
    """Type II pipeline: residues -> signs -> 0/1 adjacency."""
    return to_binary(build_sign_matrix(build_mn_matrix(n, Variant.TYPE_II), polarity))


# -- serialization ---------------------------------------------------------


def format_csv(rows) -> str:
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in np.asarray(rows).tolist())


def parse_csv(text: str) -> np.ndarray:
    rows = [[int(tok) for tok in line.split(",")] for line in text.splitlines() if line.strip()]
    return _parse_rows(rows)


def format_grid(rows) -> str:
    """Right-aligned, space-separated text grid."""
    rows = np.asarray(rows).tolist()
    if not rows:
        return ""
    width = max(len(str(x)) for row in rows for x in row)
    return "".join(" ".join(str(x).rjust(width) for x in row) + "\n" for row in rows)


def parse_grid(text: str) -> np.ndarray:
    rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    return _parse_rows(rows)


def _parse_rows(rows: list[list[int]]) -> np.ndarray:
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise MatrixError("ragged matrix rows")
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)
