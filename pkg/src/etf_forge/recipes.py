"""Replayable construction recipes.

A recipe is a plain JSON object {"schema": "etf-forge/recipe/v1", "kind":
..., "inputs": {...}} that fully determines a constructed object, so the
catalog can re-run it and re-verify the stored payload at any time.

Hadamard sources: {"generator": "sylvester", "e": int},
{"generator": "paley", "q": int}, {"generator": "dft", "n": int},
{"generator": "size", "n": int}, or
{"generator": "kron", "left": ..., "right": ...}.

Design sources: {"generator": "all-pairs", "v": int},
{"generator": "round-robin", "v": int}, {"generator": "fano"}, or
{"generator": "blocks", "v": int, "blocks": [[1-based vertices]],
"parallel_classes": [[0-based block indices]]?}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import (
    SteinerInputs,
    flat_regular_simplex,
    harmonic_etf,
    kirkman_etf,
    steiner_naimark,
    tensor_etf,
    verify_difference_set,
)
from .designs import Design, all_pairs_design, fano_plane, lift_permutation, round_robin_resolution, verify_qsd
from .errors import EtfForgeError
from .frames import Frame, NaimarkPair, verify_naimark_pair
from .hadamard import AbelianGroup, HadamardMatrix, dft, hadamard_of_size, kron, paley_one, sylvester
from .qsd_bridge import QsdEtfLink, etf_from_qsd
from .serialize import RECIPE_SCHEMA


@dataclass
class Artifact:
    """The result of replaying a recipe: a frame or a complementary pair."""

    kind: str
    recipe: dict
    primary: Frame
    complement: Frame | None = None
    alpha: Fraction | None = None
    link: QsdEtfLink | None = None

    def pair(self) -> NaimarkPair | None:
        if self.complement is None:
            return None
        return verify_naimark_pair(self.primary, self.complement)


def recipe(kind: str, **inputs) -> dict:
    return {"schema": RECIPE_SCHEMA, "kind": kind, "inputs": inputs}


def hadamard_from_spec(spec) -> HadamardMatrix:
    gen = spec.get("generator")
    if gen == "sylvester":
        return sylvester(int(spec["e"]))
    if gen == "paley":
        return paley_one(int(spec["q"]))
    if gen == "dft":
        return dft(int(spec["n"]))
    if gen == "size":
        return hadamard_of_size(int(spec["n"]))
    if gen == "kron":
        return kron(hadamard_from_spec(spec["left"]), hadamard_from_spec(spec["right"]))
    raise EtfForgeError(f"unknown Hadamard generator {gen!r}")


def design_from_spec(spec) -> Design:
    gen = spec.get("generator")
    if gen == "all-pairs":
        return all_pairs_design(int(spec["v"]))
    if gen == "round-robin":
        return round_robin_resolution(int(spec["v"]))
    if gen == "fano":
        return fano_plane()
    if gen == "blocks":
        blocks = [tuple(int(x) - 1 for x in block) for block in spec["blocks"]]
        return Design(int(spec["v"]), blocks, spec.get("parallel_classes"))
    raise EtfForgeError(f"unknown design generator {gen!r}")


def replay(rec: dict) -> Artifact:
    """Re-run a recipe, certifying everything it builds."""
    if rec.get("schema") != RECIPE_SCHEMA:
        raise EtfForgeError(f"not a recipe document: schema {rec.get('schema')!r}")
    kind = rec.get("kind")
    inputs = rec.get("inputs", {})

    if kind == "simplex":
        h = hadamard_from_spec(inputs["hadamard"])
        frame = flat_regular_simplex(h, int(inputs.get("drop_row", 0)))
        return Artifact(kind, rec, frame)

    if kind == "harmonic":
        group = AbelianGroup(tuple(int(m) for m in inputs["group"]))
        ds = verify_difference_set(group, tuple(int(i) for i in inputs["subset"]))
        pair = harmonic_etf(ds)
        return Artifact(kind, rec, pair.primary, pair.complement, pair.alpha)

    if kind == "steiner":
        design = design_from_spec(inputs["design"])
        st = SteinerInputs(
            lift_permutation(design),
            hadamard_from_spec(inputs["f"]),
            hadamard_from_spec(inputs["g"]),
            int(inputs.get("column", 1)),
        )
        if st.column == 1:
            pair = steiner_naimark(st)
            return Artifact(kind, rec, pair.primary, pair.complement, pair.alpha)
        from .constructions import steiner_etf

        return Artifact(kind, rec, steiner_etf(st))

    if kind == "kirkman":
        u = int(inputs["u"])
        e = hadamard_from_spec(inputs["e"]) if "e" in inputs else hadamard_of_size(u)
        from .constructions import standard_kirkman_inputs

        pair = kirkman_etf(standard_kirkman_inputs(u, e=e))
        return Artifact(kind, rec, pair.primary, pair.complement, pair.alpha)

    if kind == "tensor":
        left = replay(inputs["left"])
        right = replay(inputs["right"])
        if left.complement is None or right.complement is None:
            raise EtfForgeError("tensor inputs must be complementary pairs")
        pair = tensor_etf(left.pair(), right.pair())
        return Artifact(kind, rec, pair.primary, pair.complement, pair.alpha)

    if kind == "qsd-to-etf":
        design = design_from_spec(inputs["design"])
        cert = verify_qsd(design)
        frame, link = etf_from_qsd(cert, inputs.get("branch", "plus"))
        return Artifact(kind, rec, frame, link=link)

    raise EtfForgeError(f"unknown recipe kind {kind!r}")
