"""Structured-text input files: round trips and malformed-input errors."""

import json

import pytest

from hopfcyclic.hopf import check_hopf_axioms, cyclic_group_algebra, sweedler_h4
from hopfcyclic.presentations import (PresentationError, dump_hopf,
                                      hopf_from_dict, hopf_to_dict,
                                      load_gamma_input, load_hopf, load_lie,
                                      load_pairing_input)


def test_round_trip(tmp_path):
    for H in (sweedler_h4(), cyclic_group_algebra(3)):
        path = tmp_path / "h.json"
        dump_hopf(H, path)
        H2 = load_hopf(str(path))
        assert H2.dim == H.dim
        def drop_empty(d):
            return {k: v for k, v in d.items() if v}
        assert drop_empty(H2.product) == drop_empty(H.product)
        assert drop_empty(H2.coproduct) == drop_empty(H.coproduct)
        assert drop_empty(H2.antipode) == drop_empty(H.antipode)
        assert sorted(H2.characters) == sorted(H.characters)
        assert check_hopf_axioms(H2).ok


def test_shipped_examples_load(data_dir):
    H = load_hopf(str(data_dir / "sweedler-h4.json"))
    assert H.dim == 4 and "delta" in H.characters
    U = load_lie(str(data_dir / "axb-lie.json"))
    assert U.lie.dim == 2
    A, phi, E, q = load_pairing_input(str(data_dir / "pair-qz2.json"))
    assert q == 2 and E
    H2, delta, A2, action, trace = load_gamma_input(
        str(data_dir / "gamma-translation.json"))
    assert H2.dim == 2 and A2.dim == 2


def test_unreadable_file():
    with pytest.raises(PresentationError):
        load_hopf("/nonexistent/file.json")


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    with pytest.raises(PresentationError):
        load_hopf(str(p))


def base_dict():
    return hopf_to_dict(cyclic_group_algebra(2))


@pytest.mark.parametrize("mutate,msg", [
    (lambda d: d.pop("coproduct"), "missing"),
    (lambda d: d.__setitem__("dim", -1), "dim"),
    (lambda d: d.__setitem__("unit", ["1"]), "unit"),
    (lambda d: d["product"].append([0, 0, 9, "1"]), "index"),
    (lambda d: d["product"].append([0, 0]), "product"),
    (lambda d: d.__setitem__("counit", ["1", "pi"]), "scalar"),
    (lambda d: d.__setitem__("field", {"kind": "real"}), "field"),
])
def test_malformed_hopf_rejected(mutate, msg):
    d = base_dict()
    mutate(d)
    with pytest.raises(PresentationError) as err:
        hopf_from_dict(d, "<test>")
    assert msg.lower() in str(err.value).lower()


def test_invalid_character_rejected():
    d = base_dict()
    d["characters"] = {"bogus": ["1", "2"]}  # 2 is not a square root of 1
    with pytest.raises(PresentationError):
        hopf_from_dict(d, "<test>")


def test_lie_jacobi_failure_rejected(tmp_path):
    p = tmp_path / "lie.json"
    p.write_text(json.dumps(
        {"dim": 3, "brackets": [[0, 1, 0, "1"], [1, 2, 1, "1"]]}))
    with pytest.raises(PresentationError):
        load_lie(str(p))


def test_pairing_degree_validation(tmp_path):
    p = tmp_path / "pair.json"
    data = {"algebra": base_dict(), "q": 1,
            "cochain": {"degree": 1, "entries": []},
            "idempotent": []}
    p.write_text(json.dumps(data))
    with pytest.raises(PresentationError):
        load_pairing_input(str(p))


def test_cyclotomic_field_round_trip(tmp_path):
    from hopfcyclic.fields import CyclotomicField
    H = cyclic_group_algebra(4, field=CyclotomicField(4))
    path = tmp_path / "h.json"
    dump_hopf(H, path)
    H2 = load_hopf(str(path))
    assert H2.field.to_spec() == {"kind": "cyclotomic", "order": 4}
    assert check_hopf_axioms(H2).ok
