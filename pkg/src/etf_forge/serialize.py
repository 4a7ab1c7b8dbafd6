"""Bit-exact JSON interchange for matrices, designs, certificates, and
feasibility reports, plus CSV export for integer matrices.

All writers emit canonical JSON (sorted keys, no insignificant whitespace,
one trailing newline), so export -> import -> export is byte-identical and
content hashes are stable.  A cyclotomic entry is a list of
[exponent, numerator, denominator] terms over the reduced power basis; a
quadratic entry is [a_num, a_den, b_num, b_den].  Vertices in design files
are 1-based; parallel classes hold 0-based indices into the block list.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .designs import Design
from .errors import DomainError, DesignError
from .frames import EtfCertificate, Frame
from .matrices import ExactMatrix, cyclo_domain, quad_domain
from .qsd_bridge import FeasibilityReport
from .scalars import CycloElem, QuadElem

MATRIX_SCHEMA = "etf-forge/matrix/v1"
DESIGN_SCHEMA = "etf-forge/design/v1"
CERTIFICATE_SCHEMA = "etf-forge/certificate/v1"
FEASIBILITY_SCHEMA = "etf-forge/feasibility/v1"
RECIPE_SCHEMA = "etf-forge/recipe/v1"
PAIR_SCHEMA = "etf-forge/pair/v1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _frac_pair(q: Fraction) -> list[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def _domain_obj(domain) -> dict:
    if domain.kind == "cyclotomic":
        return {"kind": "cyclotomic", "order": domain.order}
    return {"kind": "quadratic", "radicand": domain.radicand}


def _domain_from_obj(obj):
    if obj["kind"] == "cyclotomic":
        return cyclo_domain(int(obj["order"]))
    if obj["kind"] == "quadratic":
        return quad_domain(int(obj["radicand"]))
    raise DomainError(f"unknown domain kind {obj.get('kind')!r}")


def _entry_obj(x) -> list:
    if isinstance(x, CycloElem):
        return [[e, c.numerator, c.denominator] for e, c in enumerate(x.coeffs) if c != 0]
    if isinstance(x, QuadElem):
        return [x.a.numerator, x.a.denominator, x.b.numerator, x.b.denominator]
    raise DomainError(f"cannot serialize entry {x!r}")


def matrix_to_obj(m: ExactMatrix) -> dict:
    return {
        "schema": MATRIX_SCHEMA,
        "domain": _domain_obj(m.domain),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [_entry_obj(x) for x in m.entries],
    }


def matrix_from_obj(obj) -> ExactMatrix:
    if obj.get("schema") != MATRIX_SCHEMA:
        raise DomainError(f"not a matrix document: schema {obj.get('schema')!r}")
    domain = _domain_from_obj(obj["domain"])
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = []
    for raw in obj["entries"]:
        if domain.kind == "cyclotomic":
            terms = {int(e): Fraction(int(num), int(den)) for e, num, den in raw}
            entries.append(CycloElem.from_terms(terms, domain.order))
        else:
            a_num, a_den, b_num, b_den = raw
            entries.append(
                QuadElem(domain.radicand, Fraction(int(a_num), int(a_den)), Fraction(int(b_num), int(b_den)))
            )
    return ExactMatrix(domain, rows, cols, entries)


def matrix_to_csv(m: ExactMatrix) -> str:
    """Rows of plain integers; only rational-integer matrices qualify."""
    ints = m.int_rows()
    if ints is None:
        raise DomainError("CSV export requires rational integer entries")
    return "\n".join(",".join(str(x) for x in row) for row in ints) + "\n"


def design_to_obj(design: Design) -> dict:
    p = design.params
    obj = {
        "schema": DESIGN_SCHEMA,
        "v": p.v,
        "k": p.k,
        "lambda": p.lam,
        "r": p.r,
        "b": p.b,
        "blocks": [[x + 1 for x in block] for block in design.blocks],
    }
    if design.parallel_classes is not None:
        obj["parallel_classes"] = [list(c) for c in design.parallel_classes]
    return obj


def design_from_obj(obj) -> Design:
    if obj.get("schema") != DESIGN_SCHEMA:
        raise DesignError(f"not a design document: schema {obj.get('schema')!r}")
    blocks = [tuple(int(x) - 1 for x in block) for block in obj["blocks"]]
    classes = obj.get("parallel_classes")
    design = Design(int(obj["v"]), blocks, classes)
    declared = (obj["v"], obj["k"], obj["lambda"], obj["r"], obj["b"])
    if design.params.as_tuple() != tuple(int(x) for x in declared):
        raise DesignError(
            f"declared parameters {declared} disagree with the block list "
            f"{design.params.as_tuple()}"
        )
    return design


def certificate_to_obj(cert: EtfCertificate) -> dict:
    return {
        "schema": CERTIFICATE_SCHEMA,
        "d": cert.d,
        "n": cert.n,
        "beta": _frac_pair(cert.beta),
        "alpha": _frac_pair(cert.alpha),
        "gamma_sq": _frac_pair(cert.gamma_sq),
        "welch_equality": cert.welch_equality,
        "flat": cert.flat,
        "domain": _domain_obj(cert.domain),
    }


def feasibility_to_obj(report: FeasibilityReport) -> dict:
    def radical(check):
        return {
            "integer": check.is_integer,
            "value": check.value,
            "odd": check.odd,
        }

    return {
        "schema": FEASIBILITY_SCHEMA,
        "d": report.d,
        "n": report.n,
        "q1": radical(report.q1),
        "q2": radical(report.q2),
        "w": radical(report.w),
        "n_mod_16": report.n_mod_16,
        "verdict": "pass" if report.verdict else "fail",
    }


def pair_to_obj(primary: Frame, complement: Frame, alpha: Fraction) -> dict:
    obj = {
        "schema": PAIR_SCHEMA,
        "d": primary.d,
        "n": primary.n,
        "alpha": _frac_pair(alpha),
    }
    if complement.row_weights is not None:
        obj["complement_row_weights"] = [_frac_pair(w) for w in complement.row_weights]
    return obj


def frame_from_files(matrix_obj, pair_obj=None, role: str = "primary") -> Frame:
    """Rebuild a frame from its matrix document plus optional pair metadata."""
    m = matrix_from_obj(matrix_obj)
    weights = None
    if pair_obj and role == "complement" and "complement_row_weights" in pair_obj:
        weights = tuple(Fraction(num, den) for num, den in pair_obj["complement_row_weights"])
    return Frame(m, row_weights=weights)


def dump(obj, path) -> None:
    with open(path, "w") as fh:
        fh.write(canonical_json(obj))


def load(path):
    with open(path) as fh:
        return json.load(fh)
