import json

import pytest

from etf_forge.catalog import Catalog, recipe_id
from etf_forge.recipes import recipe, replay
from etf_forge.serialize import load


def kirkman_recipe(u=2):
    return recipe("kirkman", u=u)


def test_replay_kirkman():
    artifact = replay(kirkman_recipe())
    assert (artifact.primary.d, artifact.primary.n) == (6, 16)
    assert artifact.complement.d == 10


def test_replay_rejects_unknown_kind():
    from etf_forge.errors import EtfForgeError

    with pytest.raises(EtfForgeError, match="unknown recipe kind"):
        replay({"schema": "etf-forge/recipe/v1", "kind": "nope", "inputs": {}})


def test_recipe_ids_are_stable():
    assert recipe_id(kirkman_recipe()) == recipe_id(kirkman_recipe())
    assert recipe_id(kirkman_recipe(2)) != recipe_id(kirkman_recipe(4))


def test_catalog_add_list_show(tmp_path):
    catalog = Catalog(tmp_path / "cat")
    record = catalog.add(kirkman_recipe())
    assert record.kind == "kirkman"
    assert record.params["d"] == 6 and record.params["n"] == 16

    records = catalog.records()
    assert len(records) == 1
    assert records[0].id == record.id

    found = catalog.find(record.id[:12])
    assert found.id == record.id

    payload = catalog.root / record.payload
    assert (payload / "primary.json").exists()
    assert (payload / "complement.json").exists()
    assert load(payload / "recipe.json") == kirkman_recipe()


def test_catalog_add_is_idempotent(tmp_path):
    catalog = Catalog(tmp_path / "cat")
    catalog.add(kirkman_recipe())
    catalog.add(kirkman_recipe())
    assert len(catalog.records()) == 1


def test_catalog_three_adds_stable_order(tmp_path):
    catalog = Catalog(tmp_path / "cat")
    ids = {
        catalog.add(recipe("harmonic", group=[2, 2, 2, 2], subset=[1, 2, 3, 5, 10, 15])).id,
        catalog.add(kirkman_recipe()).id,
        catalog.add(recipe("simplex", hadamard={"generator": "sylvester", "e": 2}, drop_row=0)).id,
    }
    assert len(ids) == 3
    listed = [r.id for r in catalog.records()]
    assert set(listed) == ids


def test_catalog_audit_clean(tmp_path):
    catalog = Catalog(tmp_path / "cat")
    catalog.add(kirkman_recipe())
    assert catalog.audit() == []


def test_catalog_audit_detects_corruption(tmp_path):
    catalog = Catalog(tmp_path / "cat")
    record = catalog.add(kirkman_recipe())
    target = catalog.root / record.payload / "primary.json"
    obj = json.loads(target.read_text())
    obj["entries"][5] = [[0, -1, 1]] if obj["entries"][5] == [[0, 1, 1]] else [[0, 1, 1]]
    target.write_text(json.dumps(obj))
    failures = catalog.audit()
    assert failures == [record.id]
