"""Manifold catalog: tangent classes, signatures, A-hat genera, products."""

from fractions import Fraction

import pytest

from genuscalc import (
    ManifoldModel,
    RingPresentation,
    a_hat_genus,
    hp_model,
    parse_descriptor,
    point_model,
    product_model,
    signature,
    sphere_model,
)
from oracles import binomial_inverse_product


def test_hp2_tangent_class_frozen():
    model = hp_model(2)
    assert model.dimension == 8
    assert model.presentation.nilpotencies == (3,)
    assert model.tangent_pontryagin.terms == {(0,): 1, (1,): 2, (2,): 7}
    assert str(model.tangent_pontryagin) == "1 + 2*z + 7*z^2"


def test_hp3_tangent_class_frozen():
    model = hp_model(3)
    assert model.tangent_pontryagin.terms == {(0,): 1, (1,): 4, (2,): 12, (3,): 8}


def test_hp1_tangent_class_is_trivial():
    # (1+z)^4 (1+4z)^{-1} = 1 mod z^2, matching the stably parallelizable S^4
    model = hp_model(1)
    assert model.tangent_pontryagin == model.presentation.one()


def test_hp_tangent_classes_match_binomial_oracle():
    for n in range(1, 7):
        model = hp_model(n)
        expected = binomial_inverse_product(2 * n + 2, 4, n)
        got = [model.tangent_pontryagin.coefficient((k,)) for k in range(n + 1)]
        assert got == expected, f"n={n}"


def test_hp_model_rejects_bad_input():
    with pytest.raises(ValueError):
        hp_model(0)
    with pytest.raises(ValueError):
        hp_model(2, top_degree=4)


def test_hp_signature_is_one_in_even_dimensions_zero_in_odd():
    assert [signature(hp_model(n)) for n in range(1, 7)] == [0, 1, 0, 1, 0, 1]


def test_hp_a_hat_genus_vanishes():
    for n in range(1, 7):
        assert a_hat_genus(hp_model(n)) == 0


def test_sphere_model_is_stably_trivial():
    model = sphere_model(4)
    assert model.dimension == 4
    assert model.tangent_pontryagin == model.presentation.one()
    assert signature(model) == 0
    assert a_hat_genus(model) == 0


def test_sphere_model_rejects_bad_dimensions():
    for k in (0, 2, 6, -4):
        with pytest.raises(ValueError):
            sphere_model(k)


def test_point_model_integrates_constants():
    pt = point_model()
    assert pt.dimension == 0
    assert signature(pt) == 1
    assert a_hat_genus(pt) == 1


def test_product_ring_structure():
    model = product_model(sphere_model(4), hp_model(2))
    assert model.name == "S4 x HP2"
    assert model.dimension == 12
    assert model.presentation.names == ("u", "z")
    assert model.presentation.nilpotencies == (2, 3)
    assert model.presentation.top_degree == 12
    assert model.fundamental == (1, 2)
    assert model.tangent_pontryagin.terms == {(0, 0): 1, (0, 1): 2, (0, 2): 7}


def test_product_with_point_changes_nothing():
    hp2 = hp_model(2)
    prod = product_model(point_model(), hp2)
    assert prod.dimension == hp2.dimension
    assert signature(prod) == signature(hp2)
    assert a_hat_genus(prod) == a_hat_genus(hp2)


def test_product_signature_is_multiplicative():
    assert signature(product_model(sphere_model(4), hp_model(2))) == 0
    assert signature(product_model(sphere_model(8), hp_model(2))) == 0


def test_product_rejects_colliding_generator_names():
    with pytest.raises(ValueError):
        product_model(sphere_model(4), sphere_model(8))
    with pytest.raises(ValueError):
        product_model(hp_model(2), hp_model(3))


def test_integrate_reads_the_fundamental_coefficient():
    model = hp_model(2)
    z = model.presentation.gen("z")
    assert model.integrate(3 * z**2 + z) == 3
    assert model.integrate(model.presentation.one()) == 0


def test_signature_rejects_dimensions_not_divisible_by_four():
    pres = RingPresentation((("w", 6, 2),), 6)
    odd_ball = ManifoldModel("W6", 6, pres, pres.one(), (1,))
    with pytest.raises(ValueError):
        signature(odd_ball)
    with pytest.raises(ValueError):
        a_hat_genus(odd_ball)


def test_descriptor_parsing():
    assert parse_descriptor("hp:2").name == "HP2"
    assert parse_descriptor("s:4").name == "S4"
    assert parse_descriptor(" s:8 ").name == "S8"
    prod = parse_descriptor("product:s:4,hp:2")
    assert prod.name == "S4 x HP2"
    assert prod.presentation.names == ("u", "z")
    swapped = parse_descriptor("product:hp:2,s:4")
    assert swapped.name == "HP2 x S4"
    assert swapped.presentation.names == ("z", "u")
    assert signature(prod) == signature(swapped)


@pytest.mark.parametrize(
    "bad",
    ["hp:0", "s:6", "x:1", "hp:two", "hp:-1", "product:hp:2", "product:", "", "product:hp:2,hp:3"],
)
def test_descriptor_parsing_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_descriptor(bad)
