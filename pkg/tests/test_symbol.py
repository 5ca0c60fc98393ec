import math

import numpy as np
import pytest

from helpers import random_symbol, sampled_chord_allowance
from specmeasure.geometry import diameter, min_enclosing_circle, PlanarSet
from specmeasure.operators import JacobiSpec, jacobi_symbol
from specmeasure.symbol import TWO_PI, FourierSymbol, KDomain, PhiFunction, phi_image, sample_grid


def laplacian():
    return FourierSymbol(np.zeros((1, 1)), ((PhiFunction.fourier((1,)), np.ones((1, 1))),))


def test_constant_symbol():
    sym = FourierSymbol(np.diag([1.0, 2.0]))
    for k in (0.0, 1.0, 6.0):
        np.testing.assert_array_equal(sym.evaluate([k]), np.diag([1.0, 2.0]))


def test_scalar_cosine():
    sym = laplacian()
    for k in np.linspace(0, TWO_PI, 7, endpoint=False):
        assert sym.evaluate([k])[0, 0] == pytest.approx(2 * math.cos(k), abs=1e-15)
    assert sym.evaluate([0.0])[0, 0] == 2.0


def test_jacobi_period_two_at_zero():
    sym = jacobi_symbol(JacobiSpec(([[1.0]], [[1.0]]), ([[0.0]], [[0.0]])))
    np.testing.assert_allclose(sym.evaluate([0.0]), [[0, 2], [2, 0]], atol=1e-15)


def test_sample_grid_examples():
    np.testing.assert_allclose(sample_grid(KDomain.torus(1, 4))[:, 0], [0, np.pi / 2, np.pi, 3 * np.pi / 2])
    np.testing.assert_allclose(sample_grid(KDomain(((0, np.pi),), 3))[:, 0], [0, np.pi / 2, np.pi])
    g = sample_grid(KDomain.torus(2, 3))
    assert g.shape == (9, 2)
    assert len({tuple(r) for r in g}) == 9


def test_domain_validation():
    with pytest.raises(ValueError):
        KDomain(((1.0, 1.0),))
    with pytest.raises(ValueError):
        KDomain(((0.0, 7.0),))
    with pytest.raises(ValueError):
        KDomain.torus(1, 1)
    assert KDomain.torus(1).grid == 256 and KDomain.torus(2).grid == 128


def test_phi_image_examples():
    img = phi_image(PhiFunction.fourier((1,)), KDomain.torus(1))
    assert img.kind == "circle" and img.radius == 1 and diameter(img) == 2
    a, b = 0.4, 2.1
    img = phi_image(PhiFunction.fourier((1,)), KDomain(((a, b),)))
    assert img.kind == "arc"
    assert diameter(img) == pytest.approx(2 * math.sin((b - a) / 2), abs=1e-15)
    img = phi_image(PhiFunction.sampled(np.full(16, 5.0)), KDomain.torus(1, 16))
    assert diameter(img) == 0.0


def test_phi_image_mixed_axes():
    dom = KDomain(((0.0, 1.0), (0.0, TWO_PI)))
    assert phi_image(PhiFunction.fourier((2, 0), 3j), dom).kind == "arc"
    assert phi_image(PhiFunction.fourier((2, 1), 3j), dom).kind == "circle"
    img = phi_image(PhiFunction.fourier((-2, 0), 1.0), dom)
    assert img.span == pytest.approx(2.0)
    assert img.alpha == pytest.approx(-2.0)


@pytest.mark.parametrize("freq, coeff, interval", [
    ((1,), 1.0, (0.0, TWO_PI)),
    ((2,), 0.5 - 1j, (0.3, 1.5)),
    ((-1,), 2j, (0.0, 2.0)),
    ((3,), 1.0, (0.0, 2.5)),
])
def test_fourier_image_agrees_with_samples(freq, coeff, interval):
    dom = KDomain((interval,), 10_000)
    phi = PhiFunction.fourier(freq, coeff)
    exact = phi_image(phi, dom)
    values = phi.coeff * np.exp(1j * freq[0] * sample_grid(dom)[:, 0])
    sampled = PlanarSet.from_points(values)
    phase_span = 0.0 if dom.full_torus else abs(freq[0]) * (interval[1] - interval[0])
    slack = sampled_chord_allowance(exact.radius, phase_span, dom.grid)
    assert diameter(sampled) == pytest.approx(diameter(exact), abs=1e-9 + slack)
    assert min_enclosing_circle(sampled).radius == pytest.approx(min_enclosing_circle(exact).radius, abs=1e-9)


def test_evaluate_hermitian_on_grid(rng):
    for _ in range(20):
        sym = random_symbol(rng, grid=16)
        for A in sym.evaluate_many(sym.grid()):
            assert np.linalg.norm(A - A.conj().T) <= 1e-12


def test_folding_constant_terms(rng):
    sym = random_symbol(rng, max_d=1, restricted=False, grid=32)
    C = rng.normal(size=(sym.N, sym.N)) + 1j * rng.normal(size=(sym.N, sym.N))
    c = 0.7 - 0.2j
    with_const = FourierSymbol(sym.H0, sym.terms + ((PhiFunction.fourier((0,), c), C),), sym.domain)
    folded = with_const.fold_constants()
    assert len(folded.terms) == len(sym.terms)
    ks = sym.grid()
    assert np.max(np.abs(with_const.evaluate_many(ks) - folded.evaluate_many(ks))) <= 1e-12


def test_sampled_phi_evaluation():
    dom = KDomain.torus(1, 8)
    ks = sample_grid(dom)[:, 0]
    phi = PhiFunction.sampled(np.exp(1j * ks))
    sym = FourierSymbol(np.zeros((1, 1)), ((phi, np.ones((1, 1))),), dom)
    np.testing.assert_allclose(sym.evaluate_many(sample_grid(dom))[:, 0, 0], 2 * np.cos(ks), atol=1e-15)
    with pytest.raises(ValueError):
        sym.evaluate([0.1])


def test_evaluate_errors():
    sym = FourierSymbol(np.zeros((1, 1)), ((PhiFunction.fourier((1,)), np.ones((1, 1))),), KDomain(((0, 1.0),)))
    with pytest.raises(ValueError):
        sym.evaluate([2.0])
    with pytest.raises(ValueError):
        sym.evaluate([0.5, 0.5])
    with pytest.raises(ValueError):
        FourierSymbol(np.zeros((2, 2)), ((PhiFunction.fourier((1,)), np.ones((3, 3))),))
    with pytest.raises(ValueError):
        FourierSymbol(np.zeros((2, 2)), ((PhiFunction.fourier((1, 0)), np.ones((2, 2))),))
    with pytest.raises(ValueError):
        FourierSymbol([[0, 1], [0, 0]])
