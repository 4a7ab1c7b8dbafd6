"""Grow flat frames by tensoring complementary pairs.

Starting from the row of ones and the 3 x 4 flat simplex (a complementary
pair with d = (n - sqrt(n))/2), each tensor round multiplies the vector
count: 16, then 256.  The parameter relation d = (n - sqrt(n))/2 is closed
under the operation, so the iteration never leaves the family.
"""

from etf_forge import (
    ExactMatrix,
    Frame,
    certify_etf,
    tensor_etf,
    verify_naimark_pair,
)

ones = Frame(ExactMatrix.ones(1, 4))
simplex = Frame(ExactMatrix.from_rows([[1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]))
pair = verify_naimark_pair(ones, simplex)
print(f"seed pair: ({pair.primary.d}, {pair.primary.n}) with alpha = {pair.alpha}")

for round_number in (1, 2):
    pair = tensor_etf(pair, pair)
    cert = certify_etf(pair.primary)
    print(
        f"round {round_number}: ({cert.d}, {cert.n}) flat={cert.flat}, "
        f"beta={cert.beta}, gamma^2={cert.gamma_sq}, "
        f"d == (n - sqrt(n))/2: {2 * cert.d == cert.n - int(cert.n ** 0.5)}"
    )
