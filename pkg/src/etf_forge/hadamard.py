"""Generators and verifiers for real and complex Hadamard matrices.

A Hadamard matrix here is an n x n matrix over a cyclotomic domain whose
entries all have squared modulus one and which satisfies H H* = n I exactly.
Every generator routes its output through the verifier, so a convention slip
in a construction cannot produce an unverified object.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import HadamardError
from .matrices import RATIONAL, ExactMatrix, cyclo_domain, kron as kron_matrices, matmul, scaled_identity
from .scalars import CycloElem


@dataclass(frozen=True)
class HadamardMatrix:
    """A verified Hadamard matrix; ``kind`` is "real" for +/-1 matrices."""

    n: int
    body: ExactMatrix
    kind: str

    def is_real(self) -> bool:
        return self.kind == "real"


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group as a product of cyclic factors.

    Elements are indexed in big-endian mixed-radix counting order: the first
    factor is the most significant digit, so for (2, 2, 2, 2) the index is
    just the 4-bit binary reading of an element.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(m < 2 for m in self.orders):
            raise HadamardError("cyclic factor orders must all be >= 2")

    @property
    def size(self) -> int:
        n = 1
        for m in self.orders:
            n *= m
        return n

    def digits(self, index: int) -> tuple[int, ...]:
        out = []
        for m in reversed(self.orders):
            out.append(index % m)
            index //= m
        if index:
            raise HadamardError("element index out of range")
        return tuple(reversed(out))

    def index(self, digits) -> int:
        digits = tuple(digits)
        if len(digits) != len(self.orders):
            raise HadamardError("digit count does not match the factor count")
        i = 0
        for d, m in zip(digits, self.orders):
            if not 0 <= d < m:
                raise HadamardError(f"digit {d} out of range for a factor of order {m}")
            i = i * m + d
        return i

    def subtract(self, i: int, j: int) -> int:
        a, b = self.digits(i), self.digits(j)
        return self.index(tuple((x - y) % m for x, y, m in zip(a, b, self.orders)))


def verify_hadamard(m: ExactMatrix) -> HadamardMatrix:
    """Certify flatness and orthogonality, classifying real vs complex."""
    if m.rows != m.cols:
        raise HadamardError(f"expected a square matrix, got {m.rows}x{m.cols}")
    if m.domain.kind != "cyclotomic":
        raise HadamardError("Hadamard matrices live over cyclotomic domains")
    n = m.rows
    ints = m.int_rows()
    if ints is not None:
        for i, row in enumerate(ints):
            for j, x in enumerate(row):
                if x not in (1, -1):
                    raise HadamardError(f"entry ({i}, {j}) is not unimodular")
    else:
        for i in range(n):
            for j in range(n):
                if m.entry(i, j).squared_modulus() != 1:
                    raise HadamardError(f"entry ({i}, {j}) is not unimodular")
    product = matmul(m, m.adjoint())
    target = scaled_identity(n, n, m.domain)
    if product != target:
        for i in range(n):
            for j in range(n):
                if product.entry(i, j) != target.entry(i, j):
                    raise HadamardError(
                        f"rows {i} and {j} fail the orthogonality identity"
                    )
    if m.is_rational_integer():
        return HadamardMatrix(n, m.with_domain(RATIONAL), "real")
    return HadamardMatrix(n, m, "complex")


def sylvester(e: int) -> HadamardMatrix:
    """The size 2**e doubling construction: H0 = [1], H -> [[H, H], [H, -H]]."""
    if e < 0:
        raise HadamardError("exponent must be >= 0")
    rows = [[1]]
    for _ in range(e):
        rows = [r + r for r in rows] + [r + [-x for x in r] for r in rows]
    return verify_hadamard(ExactMatrix.from_rows(rows, RATIONAL))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def paley_one(q: int) -> HadamardMatrix:
    """Quadratic-character construction of size q + 1 for prime q = 3 mod 4."""
    if not _is_prime(q):
        raise HadamardError(f"{q} is not prime")
    if q % 4 != 3:
        raise HadamardError(f"{q} is not congruent to 3 mod 4")
    chi = [0] * q
    for x in range(1, q):
        chi[x] = 1 if pow(x, (q - 1) // 2, q) == 1 else -1
    rows = [[1] * (q + 1)]
    for i in range(q):
        row = [1]
        for j in range(q):
            row.append(-1 if i == j else chi[(i - j) % q])
        rows.append(row)
    return verify_hadamard(ExactMatrix.from_rows(rows, RATIONAL))


def dft(n: int) -> HadamardMatrix:
    """The discrete Fourier matrix F(j, k) = zeta_n**(j k), 0-based."""
    if n < 1:
        raise HadamardError("size must be >= 1")
    dom = cyclo_domain(n)
    entries = [CycloElem.root(n, (j * k) % n) for j in range(n) for k in range(n)]
    return verify_hadamard(ExactMatrix(dom, n, n, entries))


def kron(h1: HadamardMatrix, h2: HadamardMatrix) -> HadamardMatrix:
    """Kronecker product, re-verified at the lifted common order."""
    return verify_hadamard(kron_matrices(h1.body, h2.body))


def char_table(group: AbelianGroup) -> HadamardMatrix:
    """The character table: rows are characters, columns group elements.

    Both are indexed in the group's big-endian counting order; the entry for
    character a at element g is zeta_m ** (sum_i a_i g_i (m / m_i)) with
    m = lcm of the factor orders.  For an elementary 2-group this is exactly
    the doubling-construction matrix of the same size.
    """
    m = lcm(*group.orders)
    n = group.size
    weights = [m // mi for mi in group.orders]
    dom = cyclo_domain(m)
    entries = []
    for a in range(n):
        ad = group.digits(a)
        for g in range(n):
            gd = group.digits(g)
            e = sum(x * y * w for x, y, w in zip(ad, gd, weights)) % m
            entries.append(CycloElem.root(m, e))
    return verify_hadamard(ExactMatrix(dom, n, n, entries))


def hadamard_of_size(n: int) -> HadamardMatrix:
    """Deterministic recipe search: factor n over {2} and {q + 1 : q prime, 3 mod 4}.

    Recipes are tried largest quadratic-character factor first, so results are
    reproducible.  Raises with the attempted recipe set when nothing works.
    """
    if n < 1:
        raise HadamardError("size must be >= 1")
    attempts: list[str] = []

    def search(size: int) -> HadamardMatrix | None:
        if size == 1:
            return sylvester(0)
        if size == 2:
            return sylvester(1)
        for q in sorted(
            (q for q in range(3, size) if (q + 1 <= size) and size % (q + 1) == 0
             and q % 4 == 3 and _is_prime(q)),
            reverse=True,
        ):
            attempts.append(f"paley({q}) x size({size // (q + 1)})")
            rest = search(size // (q + 1))
            if rest is not None:
                h = paley_one(q)
                return h if rest.n == 1 else kron(h, rest)
        if size % 2 == 0:
            attempts.append(f"sylvester(1) x size({size // 2})")
            rest = search(size // 2)
            if rest is not None:
                return kron(sylvester(1), rest)
        return None

    result = search(n)
    if result is None:
        raise HadamardError(
            f"no Hadamard recipe found for size {n}; tried: {attempts or ['none']}"
        )
    return result
