"""Tests para el paisaje de energía del modelo de Ising y el toro"""
import math

import pytest

from app.core.errors import DivergentParameter, PolyominoTooLargeForTorus
from app.geometry.lattice import Polyomino, rectangle
from app.geometry.shapes import ShapeSpec, Side, realize
from app.ising import (
    ModelParams,
    anisotropy_gap,
    critical_length,
    critical_length_square,
    critical_surface,
    d2_table,
    d2f_dl2,
    delta_H,
    df_dl,
    f_continuous,
    f_square,
    hamiltonian_excitation,
    landscape,
    short_range_critical_area,
    short_range_delta_H,
    stationary_point,
    torus_correction_bound,
    torus_perimeter,
)
from app.catalog.minimizers import argmin_shape


class TestModelParams:
    """Tests de validación de parámetros"""

    def test_divergent_lambda(self):
        """Validar λ ≤ 1"""
        with pytest.raises(DivergentParameter):
            ModelParams(lam=1.0, h=0.4)

    @pytest.mark.parametrize("kwargs", [{"h": 0.0}, {"h": -1.0}, {"h": 0.4, "L": 3}])
    def test_invalid(self, kwargs):
        """Validar h > 0 y L ≥ 4"""
        with pytest.raises(ValueError):
            ModelParams(lam=2.0, **kwargs)


class TestDeltaH:
    """Tests de ΔH sobre la foliación"""

    def test_square_formula(self):
        """Validar ΔH(σ̄_{l²}) = 8l Σ ζ(λ,i) − 2hl²"""
        params = ModelParams(lam=2.4, h=0.41)
        engine = params.engine
        expected = 16 * (engine.zeta(1) + engine.zeta(2)) - 2 * 0.41 * 4
        assert delta_H(4, params).delta_H == pytest.approx(expected, rel=1e-12)
        assert delta_H(4, params).shape == "Q2"

    def test_quasi_formula(self):
        """Validar ΔH(σ̄_{l(l+1)}) = 8lS + 4S + 4lζ(λ,l+1) − 2hn con l = 3"""
        params = ModelParams(lam=2.4, h=0.41)
        engine = params.engine
        s = engine.zeta_sum(3)
        expected = 24 * s + 4 * s + 12 * engine.zeta(4) - 2 * 0.41 * 12
        assert delta_H(12, params).delta_H == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("n", [5, 10, 11, 17, 30])
    def test_matches_catalog(self, n):
        """Validar ΔH = 2·min Per − 2hn"""
        params = ModelParams(lam=2.0, h=0.3)
        best = argmin_shape(n, params.engine)[0].nonlocal_perimeter
        assert delta_H(n, params).delta_H == pytest.approx(2 * best - 0.6 * n, rel=1e-12)

    def test_excitation_of_realization(self):
        """Validar hamiltonian_excitation sobre la realización del minimizador"""
        params = ModelParams(lam=2.0, h=0.3)
        point = delta_H(10, params)
        p = realize(point.minimizing_specs[0])
        assert hamiltonian_excitation(p, params) == pytest.approx(point.delta_H, rel=1e-9)

    def test_invalid_area(self):
        with pytest.raises(ValueError):
            delta_H(0, ModelParams(lam=2.0, h=0.3))


class TestLandscape:
    """Tests del barrido n ↦ ΔH"""

    def test_classical_limit(self):
        """Validar λ=50, h=0.41: n_c = 21 y longitud crítica 5"""
        result = landscape(ModelParams(lam=50.0, h=0.41), 60)
        assert result.n_c == 21
        assert result.critical_length == 5
        assert len(result.points) == 60
        assert result.points[20].delta_H == pytest.approx(22.78, abs=1e-6)

    def test_critical_length_lambda_2_4(self):
        """Validar longitud crítica cerca de l_c de los cuadrados"""
        assert critical_length(ModelParams(lam=2.4, h=0.41), 250) in {13, 14}

    def test_n_max_too_small(self):
        with pytest.raises(ValueError):
            landscape(ModelParams(lam=2.0, h=0.4), 3)

    def test_to_dict(self):
        data = landscape(ModelParams(lam=50.0, h=0.41), 10).to_dict()
        assert data["points"][3] == {"n": 4, "shape": "Q2", "delta_H": pytest.approx(16 - 3.28, abs=1e-9)}


class TestShortRange:
    """Tests del modelo de primeros vecinos"""

    def test_values(self):
        """Validar ΔH de primeros vecinos"""
        assert short_range_delta_H(4, 0.41) == pytest.approx(12.72, abs=1e-12)
        assert short_range_delta_H(25, 0.41) == pytest.approx(19.5, abs=1e-12)

    def test_critical_area(self):
        """Validar argmax n = 21 en h = 0.41"""
        assert short_range_critical_area(0.41, 60) == 21

    def test_long_range_agrees_in_limit(self):
        """Validar que λ grande recupera los valores de primeros vecinos"""
        params = ModelParams(lam=50.0, h=0.41)
        for n in (4, 12, 21, 25):
            assert delta_H(n, params).delta_H == pytest.approx(short_range_delta_H(n, 0.41), abs=1e-9)


class TestAnisotropy:
    """Tests de la brecha de anisotropía"""

    @pytest.mark.parametrize("lam", [2.4, 5.0, 50.0])
    @pytest.mark.parametrize("l,k", [(3, 1), (5, 2), (6, 4)])
    def test_gap_formula(self, lam, l, k):
        """Validar brecha 4k/(l+1)^λ"""
        params = ModelParams(lam=lam, h=0.41)
        assert anisotropy_gap(l, k, params) == pytest.approx(4 * k / (l + 1) ** lam, abs=1e-10)

    def test_gap_from_realizations(self):
        """Validar la brecha con las configuraciones realizadas"""
        params = ModelParams(lam=2.4, h=0.41)
        longer = realize(ShapeSpec.quasi_square(5, 2, Side.LONGER))
        shorter = realize(ShapeSpec.quasi_square(5, 2, Side.SHORTER))
        gap = hamiltonian_excitation(longer, params) - hamiltonian_excitation(shorter, params)
        assert gap == pytest.approx(anisotropy_gap(5, 2, params), rel=1e-7)


class TestCriticalLength:
    """Tests de la longitud crítica sobre cuadrados"""

    @pytest.mark.parametrize("lam,l_max,l_c,argmax", [(50.0, 20, 5, 5), (2.4, 40, 14, 13), (1.8, 120, 62, 62)])
    def test_critical_length(self, lam, l_max, l_c, argmax):
        """Validar l_c = ⌊l*⌋ + 1 y el argmax entero"""
        result = critical_length_square(ModelParams(lam=lam, h=0.41), l_max)
        assert result.l_c == l_c
        assert result.argmax == argmax
        assert l_c - 1 <= result.stationary_point < l_c

    def test_classical_stationary_point(self):
        """Validar l* ≈ 2/h para λ grande"""
        l_star = stationary_point(ModelParams(lam=50.0, h=0.41), 20)
        assert l_star == pytest.approx(2 / 0.41, rel=1e-4)

    def test_no_sign_change(self):
        """Validar ausencia de punto estacionario en rango corto"""
        assert stationary_point(ModelParams(lam=2.4, h=0.41), 5) is None

    @pytest.mark.parametrize("lam", [1.8, 2.4, 4.0])
    def test_square_paths_agree(self, lam):
        """Validar suma de Hurwitz frente a continuación en enteros"""
        params = ModelParams(lam=lam, h=0.41)
        for l in (1, 2, 7, 20):
            assert f_continuous(float(l), params) == pytest.approx(f_square(l, params), rel=1e-9)

    def test_l_max_too_small(self):
        with pytest.raises(ValueError):
            critical_length_square(ModelParams(lam=2.0, h=0.41), 1)

    def test_surface_rows(self):
        """Validar filas de la superficie crítica"""
        rows = critical_surface(0.41, [2.4, 50.0], 40)
        assert [r["lambda"] for r in rows] == [2.4, 50.0]
        assert [r["l_c"] for r in rows] == [14, 5]


class TestDerivatives:
    """Tests de df/dl y d²f/dl² frente a diferencias finitas"""

    @pytest.mark.parametrize("lam", [2.5, 3.0, 4.0])
    @pytest.mark.parametrize("l", [2.0, 5.5, 10.0, 30.0])
    def test_first_derivative(self, lam, l):
        params = ModelParams(lam=lam, h=0.4)
        step = 1e-3
        numeric = (f_continuous(l + step, params) - f_continuous(l - step, params)) / (2 * step)
        assert df_dl(params, l) == pytest.approx(numeric, rel=1e-5, abs=1e-5)

    @pytest.mark.parametrize("lam", [2.5, 3.0, 4.0])
    @pytest.mark.parametrize("l", [2.0, 5.5, 10.0, 30.0])
    def test_second_derivative(self, lam, l):
        params = ModelParams(lam=lam, h=0.4)
        step = 1e-2
        numeric = (f_continuous(l + step, params) - 2 * f_continuous(l, params) + f_continuous(l - step, params)) / step**2
        assert d2f_dl2(params, l) == pytest.approx(numeric, rel=1e-3, abs=2e-3)

    def test_plateau(self):
        """Validar d²f/dl² → −4h para l grande"""
        params = ModelParams(lam=4.0, h=0.4)
        assert d2f_dl2(params, 30.0) == pytest.approx(-1.6, abs=0.02)

    def test_domain(self):
        with pytest.raises(ValueError):
            d2f_dl2(ModelParams(lam=2.0, h=0.4), 0.5)

    def test_table(self):
        rows = d2_table(0.4, [2.0, 3.0], 5)
        assert len(rows) == 10
        assert rows[0] == {"lambda": 2.0, "l": 1, "d2f": pytest.approx(d2f_dl2(ModelParams(lam=2.0, h=0.4), 1.0))}


class TestTorus:
    """Tests del perímetro en el toro"""

    def test_unit_square_odd_side(self, engine2):
        """Validar celda aislada con L impar"""
        expected = 4 * sum(r ** -2.0 for r in range(1, 26))
        assert torus_perimeter(Polyomino.from_cells([(0, 0)]), 51, engine2) == pytest.approx(expected, rel=1e-12)

    def test_unit_square_even_side(self, engine2):
        """Validar celda aislada con L par: la distancia L/2 cuenta una vez por semieje"""
        expected = 4 * sum(r ** -2.0 for r in range(1, 50)) + 2 * 50 ** -2.0
        assert torus_perimeter(Polyomino.from_cells([(0, 0)]), 100, engine2) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("L", [6, 7, 20, 41, 100])
    @pytest.mark.parametrize("lam", [1.5, 2.0, 3.0])
    def test_bound(self, L, lam):
        """Validar 0 ≤ Per_∞ − Per_L ≤ cota"""
        correction = torus_correction_bound(rectangle(3, 2), ModelParams(lam=lam, h=0.4, L=L))
        assert correction.difference >= -1e-12
        assert correction.difference <= correction.bound
        assert correction.constant == pytest.approx(4 * (1 + (lam - 1) / (L / 2)))

    def test_difference_decreases(self):
        small = torus_correction_bound(rectangle(3, 3), ModelParams(lam=2.0, h=0.4, L=10))
        large = torus_correction_bound(rectangle(3, 3), ModelParams(lam=2.0, h=0.4, L=40))
        assert large.difference < small.difference

    def test_too_large(self, engine2):
        with pytest.raises(PolyominoTooLargeForTorus):
            torus_perimeter(rectangle(3, 1), 5, engine2)

    def test_missing_side(self):
        with pytest.raises(ValueError):
            torus_correction_bound(rectangle(2, 2), ModelParams(lam=2.0, h=0.4))

    def test_to_dict(self):
        data = torus_correction_bound(rectangle(2, 2), ModelParams(lam=2.0, h=0.4, L=12)).to_dict()
        assert set(data) == {"torus", "infinite", "difference", "bound", "constant"}
        assert math.isclose(data["difference"], data["infinite"] - data["torus"])
