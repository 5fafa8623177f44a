"""Cohomology dimensions and the mixed-complex identities."""

import pytest

from conftest import load_golden
from dense_oracle import oracle_dimensions
from hopfcyclic.cohomology import (NotCyclicError, b_matrix, B_matrix,
                                   bicomplex_dimensions, cohomology_report,
                                   B_operator, hochschild_b,
                                   hochschild_dimensions,
                                   lambda_complex_dimensions, methods_agree,
                                   mixed_complex_report,
                                   one_minus_lambda_matrix, require_involution)
from hopfcyclic.cyclic_ops import HopfCyclicModule
from hopfcyclic.hopf import (cyclic_group_algebra, sweedler_h4, trivial_hopf,
                             vec_eq)

CASES = [
    ("trivial", trivial_hopf, "counit"),
    ("qz2", lambda: cyclic_group_algebra(2), "counit"),
    ("qz3", lambda: cyclic_group_algebra(3), "counit"),
    ("sweedler", sweedler_h4, "delta"),
]


def module_of(builder, cname):
    H = builder()
    delta = H.counit_character() if cname == "counit" else H.character(cname)
    return H, delta, HopfCyclicModule(H, delta)


def test_trivial_dimensions():
    H, delta, module = module_of(trivial_hopf, "counit")
    hh, _ = hochschild_dimensions(module, 4)
    assert hh == [1, 0, 0, 0, 0]
    assert lambda_complex_dimensions(module, 4) == [1, 0, 1, 0, 1]


@pytest.mark.parametrize("name,builder,cname", CASES)
def test_lambda_dimensions_match_goldens(name, builder, cname):
    _, _, module = module_of(builder, cname)
    golden = load_golden(name)
    hh, _ = hochschild_dimensions(module, 4)
    assert hh == golden["HH"]
    assert lambda_complex_dimensions(module, 4) == golden["HC"]


@pytest.mark.parametrize("name,builder,cname", CASES[:3])
def test_bicomplex_matches_goldens_below_boundary(name, builder, cname):
    _, _, module = module_of(builder, cname)
    golden = load_golden(name)
    dims, flags = bicomplex_dimensions(module, 4)
    for n in range(4):
        if not flags[n]:
            assert dims[n] == golden["HC"][n], n


def test_oracle_agrees_with_package_on_sweedler():
    H, delta, module = module_of(sweedler_h4, "delta")
    hh_oracle, hc_oracle = oracle_dimensions(H, list(delta.values), 3)
    hh, _ = hochschild_dimensions(module, 3)
    assert hh == hh_oracle
    assert lambda_complex_dimensions(module, 3) == hc_oracle


@pytest.mark.parametrize("name,builder,cname", CASES)
def test_mixed_complex_identities(name, builder, cname):
    _, _, module = module_of(builder, cname)
    report = mixed_complex_report(module, 3)
    assert report.ok, report.render()


@pytest.mark.parametrize("name,builder,cname", CASES[:3])
def test_method_agreement_report(name, builder, cname):
    H, delta, _ = module_of(builder, cname)
    report = cohomology_report(H, delta, 4, method="both")
    assert methods_agree(report)
    # rendering is deterministic
    assert report.render() == cohomology_report(H, delta, 4,
                                                method="both").render()


def test_involution_refusal():
    H = sweedler_h4()
    with pytest.raises(NotCyclicError):
        require_involution(H, H.counit_character())
    with pytest.raises(NotCyclicError):
        cohomology_report(H, H.counit_character(), 2)


def test_b_image_is_cyclic_invariant():
    """b restricted to the invariant subcomplex lands in it again."""
    _, _, module = module_of(sweedler_h4, "delta")
    for n in range(3):
        proj = one_minus_lambda_matrix(module, n + 1)
        for vec in one_minus_lambda_matrix(module, n).kernel_basis():
            t = {module.key_of_index(i, n): c for i, c in vec.items()}
            img = hochschild_b(module, n + 1, t)
            coords = {module.key_index(k): v for k, v in img.items()}
            assert not proj.apply(coords)


def test_B_image_in_cyclic_kernel():
    _, _, module = module_of(sweedler_h4, "delta")
    for n in range(3):
        proj = one_minus_lambda_matrix(module, n)
        for t in module.samples(n + 1):
            img = B_operator(module, n, t)
            coords = {module.key_index(k): v for k, v in img.items()}
            assert not proj.apply(coords)


def test_matrix_and_elementwise_b_agree():
    _, _, module = module_of(sweedler_h4, "delta")
    n = 2
    mat = b_matrix(module, n)
    for t in module.samples(n - 1):
        coords = {module.key_index(k): v for k, v in t.items()}
        img = hochschild_b(module, n, t)
        want = {module.key_index(k): v for k, v in img.items()}
        assert mat.apply(coords) == want
