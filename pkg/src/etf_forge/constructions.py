"""The frame constructions: flat regular simplices, harmonic frames from
difference sets, block-design frames with explicit complements, their
resolvable flattening, and tensor products of complementary pairs.

Conventions that fix the golden outputs bit-for-bit:

* In a size r+1 Hadamard matrix G feeding a design construction, the leading
  column seeds the complement tail and the remaining r columns carry the
  flat simplex (their conjugate transpose is the r x (r+1) simplex; for the
  standard generators the leading column is all ones, so the simplex is the
  matrix with the all-ones row removed).
* Group characters and elements are indexed in big-endian mixed-radix
  counting order, so the subset {1, 2, 3, 5, 10, 15} of the rank-4
  elementary 2-group reproduces the classical 6 x 16 flat packing verbatim.
* Resolvable designs list their blocks class by class, and the flattening
  rotation consumes them in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .designs import Design, PermutationLift, lift_permutation
from .errors import DesignError, FrameError
from .frames import Frame, NaimarkPair, certify_etf, verify_naimark_pair
from .hadamard import AbelianGroup, HadamardMatrix, char_table
from .matrices import ExactMatrix, kron, matmul, vstack


@dataclass(frozen=True)
class SteinerInputs:
    """Ingredients for a design-lifted frame.

    ``f`` has the size of the block size k; ``g`` has size r + 1.  ``column``
    is the 1-based column of f whose conjugate weights the lifted blocks.
    """

    lift: PermutationLift
    f: HadamardMatrix
    g: HadamardMatrix
    column: int = 1

    def __post_init__(self):
        if self.f.n != self.lift.k:
            raise FrameError(f"F must have size k = {self.lift.k}, got {self.f.n}")
        if self.g.n != self.lift.r + 1:
            raise FrameError(f"G must have size r + 1 = {self.lift.r + 1}, got {self.g.n}")
        if not 1 <= self.column <= self.lift.k:
            raise FrameError(f"column must lie in 1..{self.lift.k}")


@dataclass(frozen=True)
class KirkmanInputs:
    """Steiner ingredients over a resolvable design, plus the size v/k rotation."""

    steiner: SteinerInputs
    e: HadamardMatrix
    design: Design

    def __post_init__(self):
        if self.design.parallel_classes is None:
            raise FrameError("the design must carry parallel classes")
        p = self.design.params
        if self.e.n * p.k != p.v:
            raise FrameError(f"E must have size v / k = {p.v // p.k}, got {self.e.n}")


@dataclass(frozen=True)
class DifferenceSet:
    """A verified difference set: constant difference counts off the identity."""

    group: AbelianGroup
    elements: tuple[int, ...]
    lam: int


def flat_regular_simplex(h: HadamardMatrix, drop_row: int = 0) -> Frame:
    """Remove one row of a Hadamard matrix of size d + 1; certify the rest."""
    if not 0 <= drop_row < h.n:
        raise FrameError(f"row index {drop_row} out of range")
    frame = Frame(h.body.drop_row(drop_row))
    cert = certify_etf(frame)
    if not cert.flat:
        raise FrameError("simplex construction produced a non-flat frame")
    return frame


def verify_difference_set(group: AbelianGroup, subset) -> DifferenceSet:
    """Exhaustive difference count over every nonzero group element."""
    elements = tuple(subset)
    if not elements:
        raise DesignError("the subset must be nonempty")
    if len(set(elements)) != len(elements):
        raise DesignError("the subset has repeated elements")
    if len(elements) >= group.size:
        raise DesignError("the subset must be proper")
    counts = [0] * group.size
    for i in elements:
        for j in elements:
            counts[group.subtract(i, j)] += 1
    nonzero = counts[1:]
    first = nonzero[0]
    for g, c in enumerate(nonzero, start=1):
        if c != first:
            raise DesignError(
                f"difference counts are not constant: element {g} occurs {c} times, "
                f"element 1 occurs {first} times"
            )
    return DifferenceSet(group, elements, first)


def harmonic_etf(ds: DifferenceSet) -> NaimarkPair:
    """Restrict the character table to the difference set's rows.

    The primary takes the rows indexed by the subset in its listed order;
    the complement takes the remaining rows in increasing index order.  Both
    are flat, and stacking them recovers the character table.
    """
    table = char_table(ds.group)
    chosen = list(ds.elements)
    rest = [i for i in range(ds.group.size) if i not in set(chosen)]
    primary = Frame(table.body.take_rows(chosen))
    complement = Frame(table.body.take_rows(rest))
    certify_etf(primary)
    certify_etf(complement)
    return verify_naimark_pair(primary, complement)


def _split_g(g: HadamardMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """(simplex part, tail column): columns 1..r and column 0 of G."""
    body = g.body
    g1 = body.submatrix(range(body.rows), range(1, body.cols))
    g2 = body.submatrix(range(body.rows), [0])
    return g1, g2


def _lifted_block_matrix(inputs: SteinerInputs) -> ExactMatrix:
    """(I_b (x) f_l*) Pi (I_v (x) G1*), assembled block by block.

    Block (i, j) of the result is conj(F(p, l)) times row q of G1*, where
    (p, q) is the lift position of the incidence one at (i, j); zero rows of
    the incidence matrix contribute zero blocks.
    """
    lift = inputs.lift
    g1, _ = _split_g(inputs.g)
    g1_star = g1.adjoint()  # r x (r+1)
    f = inputs.f.body
    l = inputs.column - 1
    domain = g1_star.domain.unify(f.domain)
    g1_star = g1_star.with_domain(domain)
    f = f.with_domain(domain)
    width = lift.v * (lift.r + 1)
    zero = domain.zero()
    rows = [[zero] * width for _ in range(lift.b)]
    for i, j, p, q in lift.slots:
        c = f.entry(p, l).conjugate()
        base = j * (lift.r + 1)
        row = rows[i]
        for s, x in enumerate(g1_star.row(q)):
            row[base + s] = c * x
    return ExactMatrix(domain, lift.b, width, [x for row in rows for x in row])


def steiner_etf(inputs: SteinerInputs) -> Frame:
    """The b x v(r+1) frame lifted from a pairwise-balanced design with lam = 1."""
    frame = Frame(_lifted_block_matrix(inputs))
    certify_etf(frame)
    return frame


def _steiner_tail(inputs: SteinerInputs) -> ExactMatrix:
    """I_v (x) g2*, the unscaled tail block of the complement."""
    _, g2 = _split_g(inputs.g)
    v = inputs.lift.v
    return kron(ExactMatrix.identity(v, g2.domain), g2.adjoint())


def steiner_naimark(inputs: SteinerInputs) -> NaimarkPair:
    """Explicit complement: the sibling frames for columns 2..k of F, then the
    tail I_v (x) g2* carrying the rational weight k (the exact form of the
    sqrt(k) scale).
    """
    if inputs.column != 1:
        raise FrameError("the complement construction is anchored at column 1")
    lift = inputs.lift
    primary = steiner_etf(inputs)
    siblings = [
        _lifted_block_matrix(SteinerInputs(lift, inputs.f, inputs.g, column=l))
        for l in range(2, lift.k + 1)
    ]
    tail = _steiner_tail(inputs)
    stacked = vstack(*siblings, tail) if siblings else tail
    weights = (Fraction(1),) * (lift.b * (lift.k - 1)) + (Fraction(lift.k),) * lift.v
    complement = Frame(stacked, row_weights=weights)
    return verify_naimark_pair(primary, complement)


def steiner_sibling_products_vanish(inputs: SteinerInputs) -> bool:
    """Check the mutual row-space orthogonality of the sibling frames:
    the cross product is zero and the self product is k(r+1) I, exactly.
    """
    lift = inputs.lift
    mats = [
        _lifted_block_matrix(SteinerInputs(lift, inputs.f, inputs.g, column=l))
        for l in range(1, lift.k + 1)
    ]
    scale = lift.k * (lift.r + 1)
    for a in range(lift.k):
        for b in range(lift.k):
            product = matmul(mats[a], mats[b].adjoint())
            if a == b:
                expected = ExactMatrix.identity(lift.b, product.domain).scale(scale)
                if product != expected:
                    return False
            elif not product.is_zero():
                return False
    return True


def kirkman_etf(inputs: KirkmanInputs) -> NaimarkPair:
    """Flatten a resolvable design frame with the block rotation I_r (x) E.

    The complement stacks the rotated siblings and (E (x) F)(I_v (x) g2*);
    every entry of both frames is unimodular, so the pair stacks into a
    Hadamard matrix.
    """
    st = inputs.steiner
    if st.column != 1:
        raise FrameError("the complement construction is anchored at column 1")
    design = inputs.design
    p = design.params
    lift = st.lift
    rotation = kron(ExactMatrix.identity(p.r, inputs.e.body.domain), inputs.e.body)
    primary = Frame(matmul(rotation, _lifted_block_matrix(st)))
    cert = certify_etf(primary)
    if not cert.flat:
        raise FrameError("flattening failed: the rotated frame is not flat")
    siblings = [
        matmul(rotation, _lifted_block_matrix(SteinerInputs(lift, st.f, st.g, column=l)))
        for l in range(2, lift.k + 1)
    ]
    tail = matmul(kron(inputs.e.body, st.f.body), _steiner_tail(st))
    complement = Frame(vstack(*siblings, tail) if siblings else tail)
    comp_cert = certify_etf(complement)
    if not comp_cert.flat:
        raise FrameError("flattening failed: the complement is not flat")
    return verify_naimark_pair(primary, complement)


def standard_kirkman_inputs(u: int, e: HadamardMatrix | None = None) -> KirkmanInputs:
    """The canonical family instance on v = 2u vertices.

    E is a Hadamard matrix of size u (looked up by recipe when not given),
    F is the size-2 Hadamard matrix, and G = E (x) F has size 2u = r + 1.
    The round-robin schedule supplies the resolvable design.
    """
    from .hadamard import hadamard_of_size, kron as kron_hadamard, sylvester
    from .designs import round_robin_resolution

    if e is None:
        e = hadamard_of_size(u)
    if e.n != u:
        raise FrameError(f"E must have size {u}, got {e.n}")
    design = round_robin_resolution(2 * u)
    f = sylvester(1)
    g = kron_hadamard(e, f)
    lift = lift_permutation(design)
    return KirkmanInputs(SteinerInputs(lift, f, g, column=1), e, design)


def tensor_etf(p1: NaimarkPair, p2: NaimarkPair) -> NaimarkPair:
    """Combine two complementary pairs with d_i = (n_i - sqrt(n_i)) / 2.

    Columns are indexed lexicographically by the input column pairs.  The
    norm gates are verified, never repaired: the primaries must have squared
    norm d and the complements n - d (automatic for flat frames).
    """
    for idx, pair in enumerate((p1, p2), start=1):
        n = pair.primary.n
        s = isqrt(n)
        if s * s != n or pair.primary.d * 2 != n - s:
            raise FrameError(
                f"pair {idx}: need d = (n - sqrt(n)) / 2, got d={pair.primary.d}, n={n}"
            )
        if pair.primary.is_weighted() or pair.complement.is_weighted():
            raise FrameError(f"pair {idx}: weighted rows are not supported here")
        if certify_etf(pair.primary).beta != pair.primary.d:
            raise FrameError(f"pair {idx}: primary squared norms must equal d")
        if certify_etf(pair.complement).beta != pair.complement.d:
            raise FrameError(f"pair {idx}: complement squared norms must equal n - d")

    a, ac = p1.primary.matrix, p1.complement.matrix
    b, bc = p2.primary.matrix, p2.complement.matrix
    primary = Frame(vstack(kron(a, bc), kron(ac, b)))
    complement = Frame(vstack(kron(a, b), kron(ac, bc)))
    certify_etf(primary)
    certify_etf(complement)
    return verify_naimark_pair(primary, complement)
