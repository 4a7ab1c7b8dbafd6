"""Screen candidate (d, n) values for real flat frames.

Three exact integrality conditions plus divisibility of n by 16 rule most
candidates out before any search begins; the dimension-count bounds then
cut the survivors further.  (15, 36) is the showcase: a real ETF exists
there, but the parity of w = 3 proves no flat one does.
"""

from etf_forge import flat_feasibility, gerzon_bounds, tensor_etf

CANDIDATES = [(6, 16), (15, 36), (28, 64), (66, 144), (78, 144), (120, 256), (276, 576)]

print(f"{'(d, n)':>12}  {'q1':>4} {'q2':>4} {'w':>4}  {'n%16':>4}  verdict")
for d, n in CANDIDATES:
    r = flat_feasibility(d, n)
    def show(check):
        return str(check.value) if check.is_integer else "-"
    print(f"{str((d, n)):>12}  {show(r.q1):>4} {show(r.q2):>4} {show(r.w):>4}  "
          f"{r.n_mod_16:>4}  {'pass' if r.verdict else 'FAIL'}")

print("\ndimension-count bounds at (6, 16):")
for field in ("real", "complex"):
    for kind in ("flat", "hadamard"):
        g = gerzon_bounds(6, 16, field, kind)
        tightness = " (met with equality)" if g.upper_bound == 16 else ""
        print(f"  {field:7s} {kind:8s}: n <= {g.upper_bound}{tightness}, passed = {g.passed}")
