"""The flat pair family on 4u^2 vectors, up to n = 576.

For every u admitting a Hadamard matrix, the round-robin schedule on 2u
vertices produces complementary real flat frames with dimensions u(2u - 1)
and u(2u + 1).  Stacking them fills a 4u^2 Hadamard matrix, which we verify
entry by entry with integer arithmetic.
"""

import time

from etf_forge import (
    certify_etf,
    certify_hadamard_etf,
    kirkman_etf,
    matmul,
    paley_one,
    scaled_identity,
    standard_kirkman_inputs,
    sylvester,
    vstack,
)

for u, seed in ((2, sylvester(1)), (4, sylvester(2)), (12, paley_one(11))):
    started = time.monotonic()
    pair = kirkman_etf(standard_kirkman_inputs(u, e=seed))
    cert_p = certify_etf(pair.primary)
    cert_c = certify_etf(pair.complement)
    stacked = vstack(pair.primary.matrix, pair.complement.matrix)
    n = cert_p.n
    assert matmul(stacked, stacked.transpose()) == scaled_identity(n, n)
    h = certify_hadamard_etf(pair)
    elapsed = time.monotonic() - started
    print(
        f"u = {u:2d}: primary ({cert_p.d}, {n}) flat={cert_p.flat}, "
        f"complement ({cert_c.d}, {n}) flat={cert_c.flat}, "
        f"stack is a {h.n} x {h.n} {h.kind} Hadamard matrix  [{elapsed:.2f}s]"
    )
