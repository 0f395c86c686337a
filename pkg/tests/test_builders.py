"""Ready-made shadows reproduce their closed forms and pass validation."""

import random

import pytest

from shadowcalc import (AdmissibilityError, bracket, circle_cone, circle_eval,
                        default_cap, enumerate_colorings, surface_link_shadow,
                        tet_cone, tet_eval, theta_cone, theta_eval,
                        threaded_knot_shadow, validate_shadow)
from shadowcalc.exactq import INFINITE_ORDER, QPoly, QRat
from shadowcalc.graphvals import TetFrame, is_admissible
from shadowcalc.qcombinat import quantum_int


def test_every_builder_validates_clean():
    shadows = [circle_cone(0), circle_cone(5), theta_cone(1, 2, 3),
               tet_cone(2, 2, 2, 2, 2, 2), threaded_knot_shadow(0),
               threaded_knot_shadow(3), surface_link_shadow(1, [2]),
               surface_link_shadow(-2, [1, 3, 5])]
    for s in shadows:
        assert validate_shadow(s) == ()


def test_inadmissible_cones_rejected():
    with pytest.raises(AdmissibilityError):
        theta_cone(1, 1, 1)
    with pytest.raises(AdmissibilityError):
        tet_cone(1, 1, 1, 1, 1, 1)
    with pytest.raises(AdmissibilityError):
        circle_cone(-2)


def test_circle_cone_bracket():
    for a in range(7):
        res = bracket(circle_cone(a))
        assert res.complete and res.states_evaluated == 1
        assert res.value == QRat(circle_eval(a))


def test_theta_cone_bracket():
    rng = random.Random(53)
    for _ in range(15):
        while True:
            t = tuple(rng.randint(0, 9) for _ in range(3))
            if is_admissible(t):
                break
        assert bracket(theta_cone(*t)).value == theta_eval(t)


def test_tet_cone_bracket():
    rng = random.Random(59)
    for _ in range(15):
        while True:
            f = tuple(rng.randint(0, 7) for _ in range(6))
            if TetFrame(*f).admissible():
                break
        assert bracket(tet_cone(*f)).value == tet_eval(f)


def test_threaded_genus_zero_is_the_colored_unknot():
    res = bracket(threaded_knot_shadow(0))
    assert res.value == QRat(circle_eval(1))
    assert res.ord_i == 1


def test_threaded_family_closed_form():
    for g in range(1, 5):
        res = bracket(threaded_knot_shadow(g))
        assert res.complete
        assert res.states_evaluated == 2 ** g
        sign = (1, 0) if (1 - g) % 2 == 0 else (-1, 0)
        want = (QRat(QPoly.monomial(6 * g, sign))
                * QRat(quantum_int(4)) ** g
                / QRat(quantum_int(2)) ** (2 * g - 1))
        assert res.value == want
        assert res.ord_i == 1 - g


def test_threaded_rejects_negative_genus():
    with pytest.raises(ValueError):
        threaded_knot_shadow(-1)


def test_surface_link_matched_colors():
    for n in (1, 2, 4):
        for chi in (-2, -1, 0):
            res = bracket(surface_link_shadow(chi, [n, n]))
            assert res.complete and res.states_evaluated == 1
            assert res.value == QRat(circle_eval(n)) ** chi


def test_surface_link_positive_chi():
    # chi = 1 leaves a disc; its single state is the closed form itself
    res = bracket(surface_link_shadow(1, [3]))
    assert res.value == QRat(circle_eval(3))


def test_surface_link_mismatched_colors_vanish():
    res = bracket(surface_link_shadow(-1, [1, 2]))
    assert res.complete
    assert res.value == QRat.zero()
    assert res.ord_i == INFINITE_ORDER


def test_surface_link_component_count():
    with pytest.raises(ValueError):
        surface_link_shadow(0, [])
