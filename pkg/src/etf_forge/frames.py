"""Frames, Gram matrices, and the exact certification stack.

A frame is a d x n synthesis matrix whose columns are the vectors.  A row may
carry a positive rational weight w, meaning the represented row is sqrt(w)
times the stored one; this keeps constructions whose natural scaling is an
irrational square root inside the exact scalar domain.  Certification checks
equal norms, tightness, equiangularity, the coherence equality against the
bound (n - d) / (d (n - 1)), and flatness, all with zero tolerance.  Nothing
is ever rescaled implicitly: operations verify the exact scalings they need
and raise otherwise, because the missing factors are usually irrational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import FrameError
from .hadamard import HadamardMatrix, verify_hadamard
from .matrices import Domain, ExactMatrix, matmul, scaled_identity, vstack


@dataclass(frozen=True, eq=False)
class Frame:
    """A d x n synthesis matrix; column j is the j-th vector.

    ``row_weights[i]`` is the square of the scale carried by stored row i
    (all ones when absent).  Weighted rows appear only in complements whose
    closed form involves sqrt(k) blocks.

    Frames are immutable; the Gram matrix, the row product, and the
    certificate are computed once and cached.
    """

    matrix: ExactMatrix
    row_weights: tuple[Fraction, ...] | None = None
    _gram: ExactMatrix | None = field(default=None, repr=False, compare=False)
    _row_product: tuple | None = field(default=None, repr=False, compare=False)
    _certificate: "EtfCertificate | None" = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.matrix.cols < self.matrix.rows:
            raise FrameError("a frame needs at least as many vectors as dimensions")
        if self.row_weights is not None:
            weights = tuple(Fraction(w) for w in self.row_weights)
            if len(weights) != self.matrix.rows:
                raise FrameError("one weight per row required")
            if any(w <= 0 for w in weights):
                raise FrameError("row weights must be positive")
            if all(w == 1 for w in weights):
                weights = None
            object.__setattr__(self, "row_weights", weights)

    @property
    def d(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def domain(self) -> Domain:
        return self.matrix.domain

    def is_weighted(self) -> bool:
        return self.row_weights is not None


def welch_bound_sq(d: int, n: int) -> Fraction:
    """The squared coherence bound (n - d) / (d (n - 1)) as a reduced rational."""
    if not (n >= d >= 1 and n > 1):
        raise FrameError(f"need n >= d >= 1 and n > 1, got d={d}, n={n}")
    return Fraction(n - d, d * (n - 1))


def gram(frame: Frame) -> ExactMatrix:
    """The n x n matrix of pairwise inner products, weights included."""
    if frame._gram is None:
        m = frame.matrix
        if frame.row_weights is None:
            g = matmul(m.adjoint(), m)
        else:
            g = matmul(m.adjoint(), m.scale_rows(frame.row_weights))
        object.__setattr__(frame, "_gram", g)
    return frame._gram


def _row_product_diagonal(frame: Frame) -> tuple[list[Fraction], ExactMatrix]:
    """Weighted diagonal of the row Gram matrix, plus the raw row product.

    For a weighted frame, tightness holds exactly when the raw off-diagonal
    vanishes and w_i * (M M*)(i, i) is one constant; the irrational cross
    scales sqrt(w_i w_j) never need to be formed.
    """
    if frame._row_product is None:
        m = frame.matrix
        raw = matmul(m, m.adjoint())
        weights = frame.row_weights or (Fraction(1),) * m.rows
        diag = []
        for i in range(m.rows):
            q = raw.entry(i, i).rational_value()
            if q is None:
                raise FrameError(f"row {i} has an irrational squared norm")
            diag.append(weights[i] * q)
        object.__setattr__(frame, "_row_product", (diag, raw))
    return frame._row_product


@dataclass(frozen=True)
class EtfCertificate:
    """Exact witness that a frame is an equiangular tight frame."""

    d: int
    n: int
    beta: Fraction      # common squared vector norm
    alpha: Fraction     # tightness constant, always n * beta / d
    gamma_sq: Fraction  # common squared inner-product modulus
    welch_equality: bool
    flat: bool
    domain: Domain


def certify_etf(frame: Frame) -> EtfCertificate:
    """Certify a frame as an ETF; each failure names the violated identity.

    Checks, in order: constant rational squared norms (diagonal of the Gram
    matrix), exact tightness of the rows, a single rational squared modulus
    across all off-diagonal Gram entries, and the coherence equality
    gamma^2 d (n - 1) = beta^2 (n - d).  The flat flag is set when every
    stored entry (after weighting) has squared modulus one.
    """
    if frame._certificate is not None:
        return frame._certificate
    d, n = frame.d, frame.n
    g = gram(frame)
    g_ints = g.int_rows()

    norms = set()
    for j in range(n):
        q = g.entry(j, j).rational_value()
        if q is None:
            raise FrameError(f"vector {j} has an irrational squared norm")
        norms.add(q)
    if len(norms) != 1:
        raise FrameError(f"unequal norms: squared norms {sorted(norms)}")
    beta = norms.pop()
    if beta <= 0:
        raise FrameError("zero vectors are not allowed")

    diag, raw = _row_product_diagonal(frame)
    alphas = set(diag)
    if len(alphas) != 1:
        raise FrameError(f"not tight: row squared norms {sorted(alphas)}")
    alpha = alphas.pop()
    for i in range(d):
        for j in range(d):
            if i != j and not raw.entry(i, j).is_zero():
                raise FrameError(f"not tight: rows {i} and {j} are not orthogonal")
    if alpha != Fraction(n) * beta / d:
        raise FrameError(f"not tight: scale {alpha} differs from n beta / d")

    gamma_sqs = set()
    if g_ints is not None:
        for j in range(n):
            row = g_ints[j]
            gamma_sqs.update(x * x for x in row[j + 1 :])
        if len(gamma_sqs) > 1:
            raise FrameError(f"not equiangular: squared moduli {sorted(gamma_sqs)}")
        gamma_sqs = {Fraction(x) for x in gamma_sqs}
    else:
        for j in range(n):
            for j2 in range(j + 1, n):
                sq = g.entry(j, j2).squared_modulus().rational_value()
                if sq is None:
                    raise FrameError(
                        f"not equiangular: |<v{j}, v{j2}>|^2 is irrational"
                    )
                gamma_sqs.add(sq)
                if len(gamma_sqs) > 1:
                    raise FrameError(
                        f"not equiangular: squared moduli {sorted(gamma_sqs)} at ({j}, {j2})"
                    )
    gamma_sq = gamma_sqs.pop() if gamma_sqs else Fraction(0)

    if n > 1 and gamma_sq * d * (n - 1) != beta * beta * (n - d):
        raise FrameError(
            f"coherence equality violated: gamma^2 = {gamma_sq}, "
            f"bound requires {beta * beta * welch_bound_sq(d, n)}"
        )

    m = frame.matrix
    if frame.row_weights is None and m.int_rows() is not None:
        flat = all(x in (1, -1) for row in m.int_rows() for x in row)
    else:
        weights = frame.row_weights or (Fraction(1),) * d
        flat = True
        for i in range(d):
            wi = weights[i]
            for x in m.row(i):
                if wi * x.squared_modulus() != 1:
                    flat = False
                    break
            if not flat:
                break

    cert = EtfCertificate(d, n, beta, alpha, gamma_sq, True, flat, frame.domain)
    object.__setattr__(frame, "_certificate", cert)
    return cert


@dataclass(frozen=True)
class NaimarkPair:
    """Two frames whose rows jointly fill a scaled unitary."""

    primary: Frame
    complement: Frame
    alpha: Fraction


def verify_naimark_pair(primary: Frame, complement: Frame) -> NaimarkPair:
    """Check both defining identities exactly.

    The complement's rows must be orthogonal with the primary's tightness
    constant alpha as their common squared norm, and the complement's Gram
    matrix must equal alpha I minus the primary's.
    """
    if complement.n != primary.n:
        raise FrameError("primary and complement must have the same vector count")
    if complement.d != primary.n - primary.d:
        raise FrameError(
            f"complement dimension must be {primary.n - primary.d}, got {complement.d}"
        )

    p_diag, p_raw = _row_product_diagonal(primary)
    alphas = set(p_diag)
    if len(alphas) != 1:
        raise FrameError("primary is not tight: unequal row norms")
    alpha = alphas.pop()
    for i in range(primary.d):
        for j in range(primary.d):
            if i != j and not p_raw.entry(i, j).is_zero():
                raise FrameError("primary is not tight: rows not orthogonal")

    c_diag, c_raw = _row_product_diagonal(complement)
    for i, value in enumerate(c_diag):
        if value != alpha:
            raise FrameError(
                f"complement row {i} has squared norm {value}, expected {alpha}"
            )
    for i in range(complement.d):
        for j in range(complement.d):
            if i != j and not c_raw.entry(i, j).is_zero():
                raise FrameError(f"complement rows {i} and {j} are not orthogonal")

    g_p = gram(primary)
    lhs = gram(complement)
    rhs = scaled_identity(primary.n, alpha, g_p.domain) - g_p
    if lhs != rhs:
        for j in range(primary.n):
            for j2 in range(primary.n):
                if lhs.entry(j, j2) != rhs.entry(j, j2):
                    raise FrameError(
                        f"Gram complement identity failed at ({j}, {j2})"
                    )
    return NaimarkPair(primary, complement, alpha)


def certify_hadamard_etf(pair: NaimarkPair) -> HadamardMatrix:
    """Stack a flat pair into an n x n matrix and verify it is Hadamard."""
    for name, frame in (("primary", pair.primary), ("complement", pair.complement)):
        if frame.is_weighted():
            raise FrameError(f"{name} carries non-unit row weights, so it is not flat")
        cert = certify_etf(frame)
        if not cert.flat:
            raise FrameError(f"{name} is not flat")
    stacked = vstack(pair.primary.matrix, pair.complement.matrix)
    return verify_hadamard(stacked)


def gram_to_hadamard(frame: Frame) -> HadamardMatrix:
    """Rescale the Gram matrix of an ETF with d = (n - sqrt(n)) / 2 into a
    self-adjoint unit-diagonal Hadamard matrix.

    Uses the rational normalizer c = (sqrt(n) - 1) / beta on the Gram matrix,
    which is the scale-invariant form of the usual unit-norm convention.
    """
    cert = certify_etf(frame)
    n = cert.n
    s = isqrt(n)
    if s * s != n:
        raise FrameError(f"sqrt({n}) is not an integer")
    if cert.d != (n - s) // 2 or (n - s) % 2:
        raise FrameError(f"need d = (n - sqrt(n)) / 2 = {(n - s) / 2}, got d = {cert.d}")
    c = Fraction(s - 1) / cert.beta
    g = gram(frame)
    h = scaled_identity(n, s, g.domain) - g.scale(c)
    if h != h.adjoint():
        raise FrameError("rescaled Gram matrix is not self-adjoint")
    for j in range(n):
        if h.entry(j, j) != 1:
            raise FrameError("rescaled Gram matrix does not have a unit diagonal")
    return verify_hadamard(h)


def hadamard_to_gram(h: HadamardMatrix) -> tuple[ExactMatrix, int]:
    """Read a scaled ETF Gram matrix out of a self-adjoint unit-diagonal
    Hadamard matrix; returns (G, d) with G = sqrt(n) I - H and d the rank
    (n - sqrt(n)) / 2 certified by the polynomial identity G^2 = 2 sqrt(n) G.
    """
    n = h.n
    body = h.body
    if body != body.adjoint():
        raise FrameError("matrix is not self-adjoint")
    for j in range(n):
        if body.entry(j, j) != 1:
            raise FrameError("diagonal entries must all be one")
    s = isqrt(n)
    if s * s != n:
        raise FrameError(f"sqrt({n}) is not an integer")
    g = scaled_identity(n, s, body.domain) - body
    if matmul(g, g) != g.scale(2 * s):
        raise FrameError("eigenvalue identity G^2 = 2 sqrt(n) G failed")
    trace = Fraction(0)
    for j in range(n):
        q = g.entry(j, j).rational_value()
        trace += q
    if trace != n * (s - 1):
        raise FrameError(f"trace {trace} differs from n (sqrt(n) - 1)")
    return g, (n - s) // 2
