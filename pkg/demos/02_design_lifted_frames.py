"""Build a frame from a block design and exhibit its explicit complement.

The all-pairs design on 4 vertices lifts to a 6 x 16 frame whose vectors
have three nonzero entries each.  The construction also hands us the
complement: the sibling frame for the other column of the 2 x 2 seed, plus
a tail block carrying an exact rational weight (the square of the sqrt(2)
scale the closed form wants).
"""

from etf_forge import (
    Design,
    ExactMatrix,
    SteinerInputs,
    certify_etf,
    gram,
    lift_permutation,
    scaled_identity,
    steiner_naimark,
    sylvester,
)

# Blocks arranged into three parallel classes; rows are blocks.
incidence = ExactMatrix.from_rows(
    [
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
    ]
)
design = Design.from_incidence(incidence, parallel_classes=[(0, 1), (2, 3), (4, 5)])
print(f"design: {design.params.as_tuple()} (v, k, lambda, r, b)")

lift = lift_permutation(design)
pi = lift.matrix()
print(f"lift: {pi.rows} x {pi.cols} permutation matrix")

inputs = SteinerInputs(lift, sylvester(1), sylvester(2), column=1)
pair = steiner_naimark(inputs)

cert = certify_etf(pair.primary)
print(f"\nprimary: {cert.d} x {cert.n}, beta = {cert.beta}, gamma^2 = {cert.gamma_sq}, flat = {cert.flat}")
for row in pair.primary.matrix.int_rows():
    print("  " + " ".join(f"{x:+d}" if x else " 0" for x in row))

comp = pair.complement
print(f"\ncomplement: {comp.d} x {comp.n}, row weights {[str(w) for w in (comp.row_weights or ())][-4:]} on the tail")
identity_check = gram(comp) == scaled_identity(pair.primary.n, pair.alpha) - gram(pair.primary)
print(f"Gram complement identity holds exactly: {identity_check}")
