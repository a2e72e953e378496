import cmath
import math

import numpy as np
import pytest

from bicliff.errors import MapsToInfinity, NotParavector
from bicliff.matrix import BicMatrixF
from bicliff.moebius import (
    RotationParams,
    embed_float,
    float_norm,
    float_paravector,
    moebius_apply,
    paravector_close,
    project_paravector,
    rotate,
    rotate_hat,
    rotor,
    vahlen_dilation,
    vahlen_identity,
    vahlen_inversion,
    vahlen_special,
    vahlen_translation,
)
from bicliff.tower import level


def random_point(L, rng, scale=1.0):
    return float_paravector(L, rng.normal(scale=scale, size=2 * L + 2))


@pytest.mark.parametrize("theta", [0.0, 0.4, 2.0, -3.0])
def test_plane_rotation_closed_form(theta):
    r = rotor(RotationParams.plane(0, 0, 1, theta))
    z = 0.7 - 1.3j
    w = rotate(r, float_paravector(0, [z.real, z.imag]))
    want = cmath.exp(-1j * theta) * z
    assert abs(complex(*w.coeffs) - want) <= 1e-12


@pytest.mark.parametrize("L", [0, 1, 2])
def test_rotors_preserve_norm(L, rng):
    for _ in range(20):
        r = rotor(RotationParams.random(L, rng))
        x = random_point(L, rng)
        y = rotate(r, x)
        assert abs(float_norm(y) - float_norm(x)) <= 1e-9
        assert paravector_close(rotate_hat(r, x), y, 1e-9)


@pytest.mark.parametrize("L", [1, 2])
def test_rotor_inverse_pairs(L, rng):
    params = RotationParams.random(L, rng)
    r = rotor(params)
    ident = BicMatrixF.identity(level(L).dim)
    assert (r @ rotor(params.negated())).allclose(ident, 1e-10)
    assert (r @ r.bar()).allclose(ident, 1e-10)


def test_boost_mixes_time_direction():
    # plane (0, 3) at level 1 contains the negative-metric direction
    r = rotor(RotationParams.plane(1, 0, 3, 0.5))
    y = rotate(r, float_paravector(1, [1, 0, 0, 0]))
    assert abs(abs(y.coeffs[0]) - math.cosh(0.5)) <= 1e-12
    assert abs(float_norm(y) - 1) <= 1e-12


def test_rotation_params_validation():
    with pytest.raises(ValueError):
        RotationParams(level(1), np.ones((4, 4)))
    with pytest.raises(ValueError):
        RotationParams(level(1), np.zeros((3, 3)))


def test_projection_rejects_non_paravectors():
    e1, e2, _ = level(1).generators
    with pytest.raises(NotParavector):
        project_paravector((e1 @ e2).to_float(), 1)


def test_embed_then_project_roundtrip(rng):
    x = random_point(2, rng)
    assert paravector_close(project_paravector(embed_float(x), 2), x, 1e-13)


@pytest.mark.parametrize("L", [0, 1, 2])
def test_vahlen_composition(L, rng):
    for _ in range(20):
        x = random_point(L, rng)
        v1 = vahlen_translation(random_point(L, rng)) @ vahlen_special(random_point(L, rng, 0.3))
        v2 = vahlen_inversion(L) @ vahlen_dilation(L, 1.7)
        try:
            direct = moebius_apply(v1 @ v2, x)
        except MapsToInfinity:
            continue
        assert paravector_close(direct, moebius_apply(v1, moebius_apply(v2, x)), 1e-9)


@pytest.mark.parametrize("L", [0, 1, 2])
def test_inversion_is_an_involution(L, rng):
    inv = vahlen_inversion(L)
    for _ in range(20):
        x = random_point(L, rng)
        assert paravector_close(moebius_apply(inv, moebius_apply(inv, x)), x, 1e-9)


def test_inversion_matches_exact_inverse():
    x = float_paravector(1, [1, 2, 0, 1])
    y = moebius_apply(vahlen_inversion(1), x)
    norm = float_norm(x)
    assert paravector_close(y, float_paravector(1, [1 / norm, -2 / norm, 0, -1 / norm]), 1e-12)


def test_basic_maps():
    x = float_paravector(1, [0.5, -1, 2, 0.25])
    assert paravector_close(moebius_apply(vahlen_identity(1), x), x, 1e-14)
    b = float_paravector(1, [1, 1, 1, 1])
    shifted = moebius_apply(vahlen_translation(b), x)
    assert paravector_close(shifted, float_paravector(1, [1.5, 0, 3, 1.25]), 1e-12)
    scaled = moebius_apply(vahlen_dilation(1, 2.0), x)
    assert paravector_close(scaled, float_paravector(1, [1, -2, 4, 0.5]), 1e-12)
    with pytest.raises(ValueError):
        vahlen_dilation(1, -1.0)


@pytest.mark.parametrize("coeffs", [[1, 0, 0, 1], [0, 3, 0, 3], [0, 0, 0, 0]])
def test_null_points_map_to_infinity(coeffs):
    with pytest.raises(MapsToInfinity):
        moebius_apply(vahlen_inversion(1), float_paravector(1, coeffs))
