"""Exact integer Laplacian analytics: characteristic polynomials, integral
spectra, rank/nullity and spanning-tree counts, all in exact arithmetic.

The characteristic polynomial is computed modulo a batch of 26-bit primes
(similarity reduction to Hessenberg form over F_p, then the leading-minor
recurrence) and the integer coefficients are recovered by Chinese
remaindering against a Hadamard-style bound.  Reduction mod p commutes with
det(xI - M), so every prime contributes a correct residue and no "unlucky
prime" handling is needed.  26-bit primes keep every modular dot product of
length up to 2048 inside int64, which lets numpy carry the O(N^3) inner
loops.

No floating point enters any certified result.  Float eigensolvers are fine
as an external diagnostic but are never consulted here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotIntegral
from .graphs import SimpleGraph

_PRIME_CAP = 1 << 26


# ---------------------------------------------------------------------------
# polynomials and spectra


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense univariate polynomial, exact integer coefficients low-to-high."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        if self.is_zero or other.is_zero:
            return IntegerPolynomial((0,))
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    def synthetic_division(self, root: int) -> tuple["IntegerPolynomial", int]:
        """Quotient and remainder of division by (x - root)."""
        coeffs = self.coefficients
        quotient = [0] * max(len(coeffs) - 1, 1)
        acc = 0
        for i in range(len(coeffs) - 1, 0, -1):
            acc = acc * root + coeffs[i]
            quotient[i - 1] = acc
        remainder = acc * root + coeffs[0]
        return IntegerPolynomial(tuple(quotient)), remainder

    @classmethod
    def from_integer_roots(cls, pairs) -> "IntegerPolynomial":
        """Monic product of (x - value)^multiplicity."""
        poly = cls((1,))
        for value, multiplicity in pairs:
            factor = cls((-int(value), 1))
            for _ in range(multiplicity):
                poly = poly * factor
        return poly

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                x = "x" if power == 1 else f"x^{power}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues with multiplicities, strictly descending."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(v), int(m)) for v, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        values = [v for v, _ in pairs]
        if values != sorted(values, reverse=True) or len(set(values)) != len(values):
            raise ValueError("eigenvalues must be strictly descending")
        if any(m < 1 for _, m in pairs):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def from_pairs(cls, pairs) -> "SpectrumMultiset":
        """Normalise arbitrary (value, multiplicity) pairs: merge coincident
        values, drop zero multiplicities, sort descending."""
        merged: dict[int, int] = {}
        for value, multiplicity in pairs:
            if multiplicity:
                merged[int(value)] = merged.get(int(value), 0) + int(multiplicity)
        return cls(tuple(sorted(merged.items(), reverse=True)))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def weighted_sum(self) -> int:
        return sum(v * m for v, m in self.pairs)

    def multiplicity(self, value: int) -> int:
        return dict(self.pairs).get(int(value), 0)

    def to_char_poly(self) -> IntegerPolynomial:
        return IntegerPolynomial.from_integer_roots(self.pairs)

    def compact(self) -> str:
        return " ".join(f"{v}^{m}" for v, m in self.pairs)


# ---------------------------------------------------------------------------
# matrix plumbing


def _as_square_int_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if m.dtype == object:
        return np.array([[int(x) for x in row] for row in m], dtype=object)
    if not np.issubdtype(m.dtype, np.integer):
        raise TypeError("exact routines accept integer matrices only")
    return m.astype(np.int64)


def _mod_reduce(matrix: np.ndarray, p: int) -> np.ndarray:
    return (matrix % p).astype(np.int64)


def laplacian(graph: SimpleGraph) -> np.ndarray:
    """Degree matrix minus adjacency matrix, as int64."""
    a = graph.adjacency.astype(np.int64)
    lap = np.diag(a.sum(axis=1)) - a
    return lap


# ---------------------------------------------------------------------------
# prime batches

_SMALL_PRIMES: list[int] = []
_PRIMES: list[int] = []
_next_candidate = _PRIME_CAP - 1


def _small_primes() -> list[int]:
    if not _SMALL_PRIMES:
        limit = 1 << 13  # covers trial division up to 2^26
        sieve = np.ones(limit, dtype=bool)
        sieve[:2] = False
        for q in range(2, int(limit ** 0.5) + 1):
            if sieve[q]:
                sieve[q * q :: q] = False
        _SMALL_PRIMES.extend(int(q) for q in np.flatnonzero(sieve))
    return _SMALL_PRIMES


def _ensure_primes(count: int) -> None:
    global _next_candidate
    small = _small_primes()
    while len(_PRIMES) < count:
        c = _next_candidate
        _next_candidate -= 2
        if all(c % q for q in small):
            _PRIMES.append(c)


def _prime_batch(bits: float) -> list[int]:
    """Enough descending 26-bit primes for a modulus above 2**bits."""
    got = 0.0
    count = 0
    while got <= bits:
        count += 1
        _ensure_primes(count)
        got += math.log2(_PRIMES[count - 1])
    return _PRIMES[:count]


# ---------------------------------------------------------------------------
# modular characteristic polynomial


def _hessenberg_inplace(h: np.ndarray, p: int) -> None:
    """Similarity-reduce to upper Hessenberg form over F_p, pivoting within
    each column; entries stay reduced mod p."""
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[j + 1, piv], :] = h[[piv, j + 1], :]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        mult = (h[j + 2 :, j] * inv) % p
        h[j + 2 :, :] = (h[j + 2 :, :] - mult[:, None] * h[j + 1, :]) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ mult) % p


def _hessenberg_charpoly(h: np.ndarray, p: int) -> np.ndarray:
    """char poly mod p of an upper Hessenberg matrix via the leading-minor
    recurrence; returns N+1 coefficients low-to-high."""
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        prev = polys[k - 1, :k]
        polys[k, 1 : k + 1] = prev
        polys[k, :k] = (polys[k, :k] - int(h[k - 1, k - 1]) * prev) % p
        if k >= 2:
            weights = np.zeros(k - 1, dtype=np.int64)
            prod = 1
            for i in range(k - 2, -1, -1):
                prod = (prod * int(h[i + 1, i])) % p
                if prod == 0:
                    break
                weights[i] = (int(h[i, k - 1]) * prod) % p
            if weights.any():
                corr = (weights @ polys[: k - 1, :k]) % p
                polys[k, :k] = (polys[k, :k] - corr) % p
    return polys[n]


def _charpoly_coeff_bits(m: np.ndarray) -> float:
    """log2 bound on |char poly coefficients|: each coefficient is a signed
    sum of at most C(N,k) principal minors, each Hadamard-bounded by the
    largest column norm to the k-th power."""
    n = m.shape[0]
    max_norm_sq = 1
    for j in range(n):
        norm_sq = sum(int(x) * int(x) for x in m[:, j])
        max_norm_sq = max(max_norm_sq, norm_sq)
    return n * (1.0 + 0.5 * math.log2(max_norm_sq)) + 2


def _crt_columns(residues: np.ndarray, primes: list[int]) -> list[int]:
    """Symmetric-range CRT per column of a (len(primes), width) table."""
    modulus = math.prod(primes)
    half = modulus // 2
    basis = []
    for p in primes:
        m = modulus // p
        basis.append(m * pow(m % p, -1, p))
    out = []
    for col in range(residues.shape[1]):
        acc = 0
        for i in range(len(primes)):
            acc += int(residues[i, col]) * basis[i]
        acc %= modulus
        if acc > half:
            acc -= modulus
        out.append(acc)
    return out


def char_poly(matrix) -> IntegerPolynomial:
    """Exact det(xI - M) for a square integer matrix."""
    m = _as_square_int_matrix(matrix)
    n = m.shape[0]
    if n == 0:
        return IntegerPolynomial((1,))
    primes = _prime_batch(_charpoly_coeff_bits(m) + 1)
    residues = np.empty((len(primes), n + 1), dtype=np.int64)
    for i, p in enumerate(primes):
        h = _mod_reduce(m, p)
        _hessenberg_inplace(h, p)
        residues[i] = _hessenberg_charpoly(h, p)
    poly = IntegerPolynomial(tuple(_crt_columns(residues, primes)))
    if poly.degree != n or not poly.is_monic:
        raise AssertionError("characteristic polynomial reconstruction out of bound")
    return poly


# ---------------------------------------------------------------------------
# exact rank / determinant


def nullity(matrix) -> int:
    """Dimension of the rational kernel, by fraction-free (Bareiss)
    elimination over exact integers."""
    m = _as_square_int_matrix(matrix)
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(rank, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot_row = rows[rank]
        pivot = pivot_row[col]
        for i in range(rank + 1, n):
            row = rows[i]
            lead = row[col]
            for j in range(col + 1, n):
                row[j] = (row[j] * pivot - lead * pivot_row[j]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
    return n - rank


def _det_mod(m: np.ndarray, p: int) -> int:
    a = np.array(m, dtype=np.int64)
    n = a.shape[0]
    det = 1
    for j in range(n):
        nz = np.flatnonzero(a[j:, j])
        if nz.size == 0:
            return 0
        piv = j + int(nz[0])
        if piv != j:
            a[[j, piv], :] = a[[piv, j], :]
            det = p - det
        pivot = int(a[j, j])
        det = (det * pivot) % p
        inv = pow(pivot, p - 2, p)
        mult = (a[j + 1 :, j] * inv) % p
        a[j + 1 :, j:] = (a[j + 1 :, j:] - mult[:, None] * a[j, j:]) % p
    return det


def integer_determinant(matrix) -> int:
    """Exact determinant via the same modular/CRT machinery."""
    m = _as_square_int_matrix(matrix)
    n = m.shape[0]
    if n == 0:
        return 1
    bits = 1.0
    for i in range(n):
        norm_sq = max(1, sum(int(x) * int(x) for x in m[i]))
        bits += 0.5 * math.log2(norm_sq)
    primes = _prime_batch(bits + 1)
    residues = np.empty((len(primes), 1), dtype=np.int64)
    for i, p in enumerate(primes):
        residues[i, 0] = _det_mod(_mod_reduce(m, p), p)
    return _crt_columns(residues, primes)[0]


# ---------------------------------------------------------------------------
# integral spectra


def integral_spectrum(matrix, strategy: str = "deflation") -> SpectrumMultiset:
    """Full eigenvalue multiset of an integral-spectrum symmetric matrix.

    Laplacian eigenvalues lie in [0, N], so the integer candidates 0..N are
    complete.  ``deflation`` walks them descending, splitting roots off the
    characteristic polynomial; ``nullity`` instead reads each multiplicity
    from the rational kernel of M - tI (valid for symmetric matrices, where
    geometric equals algebraic multiplicity).  Raises :class:`NotIntegral`
    when the candidates do not exhaust the spectrum.
    """
    m = _as_square_int_matrix(matrix)
    n = m.shape[0]
    if strategy == "deflation":
        remainder = char_poly(m)
        pairs: list[tuple[int, int]] = []
        for t in range(n, -1, -1):
            multiplicity = 0
            while True:
                quotient, rem = remainder.synthetic_division(t)
                if rem != 0:
                    break
                remainder = quotient
                multiplicity += 1
            if multiplicity:
                pairs.append((t, multiplicity))
        if remainder.degree > 0:
            raise NotIntegral(residual=remainder, partial=pairs)
        return SpectrumMultiset(tuple(pairs))
    if strategy == "nullity":
        pairs = []
        total = 0
        eye = np.eye(n, dtype=np.int64)
        for t in range(n, -1, -1):
            mult = nullity(m - t * eye)
            if mult:
                pairs.append((t, mult))
                total += mult
        if total != n:
            residual = char_poly(m)
            for value, multiplicity in pairs:
                for _ in range(multiplicity):
                    residual, rem = residual.synthetic_division(value)
                    if rem != 0:
                        raise AssertionError("kernel multiplicity exceeds root multiplicity")
            raise NotIntegral(residual=residual, partial=pairs)
        return SpectrumMultiset(tuple(pairs))
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# spanning trees


def spanning_tree_count(graph: SimpleGraph, method: str = "both") -> int:
    """Number of spanning trees (0 when disconnected).

    ``eigenvalues`` reads the product of the nonzero Laplacian eigenvalues
    off the degree-one coefficient of the characteristic polynomial;
    ``determinant`` takes the Kirchhoff cofactor (reduced-Laplacian
    determinant).  ``both`` computes the two independently and insists they
    agree.
    """
    if method not in ("both", "eigenvalues", "determinant"):
        raise ValueError(f"unknown method {method!r}")
    lap = laplacian(graph)
    n = graph.vertex_count
    by_eigen = by_det = None
    if method in ("eigenvalues", "both"):
        poly = char_poly(lap)
        c1 = poly.coefficients[1] if poly.degree >= 1 else 0
        signed = c1 if (n - 1) % 2 == 0 else -c1
        by_eigen, rem = divmod(signed, n)
        if rem != 0 or by_eigen < 0:
            raise AssertionError("eigenvalue product is not a valid tree count")
    if method in ("determinant", "both"):
        minor = np.delete(np.delete(lap, 0, axis=0), 0, axis=1)
        by_det = integer_determinant(minor)
        if by_det < 0:
            raise AssertionError("Kirchhoff cofactor came out negative")
    if method == "eigenvalues":
        return by_eigen
    if method == "determinant":
        return by_det
    if by_eigen != by_det:
        raise AssertionError(f"tree-count paths disagree: {by_eigen} vs {by_det}")
    return by_det


def factor_integer_roots(poly: IntegerPolynomial, upper: int) -> tuple[tuple[tuple[int, int], ...], IntegerPolynomial]:
    """Split off all roots in 0..upper, descending; returns (pairs, residual)."""
    pairs = []
    remainder = poly
    for t in range(upper, -1, -1):
        mult = 0
        while True:
            quotient, rem = remainder.synthetic_division(t)
            if rem != 0:
                break
            remainder = quotient
            mult += 1
        if mult:
            pairs.append((t, mult))
    return tuple(pairs), remainder
