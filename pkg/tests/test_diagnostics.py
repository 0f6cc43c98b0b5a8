"""Tests para los diagnósticos de positividad"""
import pytest

from app.catalog.diagnostics import (
    delta_lac,
    delta_protuberance,
    delta_quasi_rectangle,
    delta_square_rectangle,
    f1,
    f1_tilde,
    f2,
    f2_tilde,
    lemma_f,
    positivity_diagnostics,
    protuberance_term,
    step7_f,
)
from app.core.errors import HypothesisViolated
from app.geometry.shapes import ShapeSpec
from app.perimeter.nonlocal_perimeter import perimeter_shape
from app.special.zeta import get_engine


class TestSquareRectangle:
    """Tests de F₁, F₂ frente a 𝓠_l"""

    def test_l2_instance(self, engine2):
        """Validar Δ(l=2, a=1, b=4) = 1 − 2^{1−λ} − 3^{−λ} = 7/18 en λ=2"""
        assert delta_square_rectangle(1, 2, engine2) == pytest.approx(7 / 18, abs=1e-12)
        assert f1(1, 2, engine2) == pytest.approx(1.0, abs=1e-12)
        assert f2(1, 2, 4, engine2) == pytest.approx(-(2 / 4 + 1 / 9), abs=1e-12)

    @pytest.mark.parametrize("lam", [1.81, 2.0, 3.0])
    def test_f1_closed_values(self, lam):
        """Validar F₁(1,3) = 4 − 8/2^λ y F₁(2,4) = 2 + 4p₂ − 12p₃"""
        engine = get_engine(lam)
        p = engine.power
        assert f1(1, 3, engine) == pytest.approx(4 - 8 * p(2), abs=1e-12)
        assert f1(2, 4, engine) == pytest.approx(2 + 4 * p(2) - 12 * p(3), abs=1e-12)

    @pytest.mark.parametrize("a,l", [(1, 2), (1, 3), (2, 4), (1, 4), (3, 6), (2, 6)])
    @pytest.mark.parametrize("lam", [1.85, 2.5, 4.0])
    def test_identity_with_perimeters(self, a, l, lam):
        """Validar F₁ + F₂ = (Per 𝓡_{a,b} − Per 𝓠_l)/2"""
        engine = get_engine(lam)
        b = l * l // a
        diff = perimeter_shape(ShapeSpec.rect(a, b), engine) - perimeter_shape(ShapeSpec.square(l), engine)
        assert delta_square_rectangle(a, l, engine) == pytest.approx(diff / 2, abs=1e-10)

    @pytest.mark.parametrize("l,a", [(3, 2), (4, 2), (5, 3), (6, 2)])
    def test_quasi_identity(self, l, a):
        """Validar f₁ + f₂ = (Per 𝓡_{a,b} − Per 𝓡_{l,l+1})/2"""
        engine = get_engine(2.3)
        b = l * (l + 1) // a
        diff = perimeter_shape(ShapeSpec.rect(a, b), engine) - perimeter_shape(ShapeSpec.quasi_square(l), engine)
        assert delta_quasi_rectangle(a, l, engine) == pytest.approx(diff / 2, abs=1e-10)


class TestProtuberance:
    """Tests de F̃₁, F̃₂ y del término de protuberancia"""

    def test_tilde_values(self, engine2):
        """Validar F̃₁(2,3,1) = p₂ + p₃ y F̃₂(2,3,1) = −(4p₃ + 2p₄)"""
        assert f1_tilde(2, 3, 1, engine2) == pytest.approx(1 / 4 + 1 / 9, abs=1e-12)
        assert f2_tilde(2, 3, 1, engine2) == pytest.approx(-(4 / 9 + 2 / 16), abs=1e-12)
        assert f1_tilde(2, 4, 3, engine2) == pytest.approx(2.5 + 5 / 4 - 12 / 9 + 3 / 16, abs=1e-12)

    def test_f2_tilde_sign_changes(self):
        """Validar F̃₂(2,4,3) negativa en λ=2 y positiva en λ=3"""
        assert f2_tilde(2, 4, 3, get_engine(2.0)) < 0
        assert f2_tilde(2, 4, 3, get_engine(3.0)) > 0

    @pytest.mark.parametrize("lam", [1.85, 2.0, 3.0])
    def test_exact_identity_n11(self, lam):
        """Validar Per(𝓡_{2,5}¹) − Per(𝓠₃²) = 2(F̃₁ + F̃₂ + E) = 2 + 2p₂ − 6p₃ − 6p₄ − 2p₅"""
        engine = get_engine(lam)
        p = engine.power
        diff = perimeter_shape(ShapeSpec.rect(2, 5, 1), engine) - perimeter_shape(ShapeSpec.square(3, 2), engine)
        assert 2 * delta_protuberance(2, 5, 3, 2, 1, engine) == pytest.approx(diff, abs=1e-10)
        assert diff == pytest.approx(2 + 2 * p(2) - 6 * p(3) - 6 * p(4) - 2 * p(5), abs=1e-10)

    def test_protuberance_term(self, engine2):
        """Validar término con k₂ = 1: W(2)/2 − p_b"""
        assert protuberance_term(2, 5, 1, engine2) == pytest.approx(0.5 - 1 / 25, abs=1e-12)
        assert protuberance_term(2, 5, 0, engine2) == 0.0

    def test_delta_lac_instance(self, engine2):
        """Validar Δ(3,1,0) = p₂ − 3p₃ − 2p₄ = (Per 𝓡_{2,5} − Per 𝓠₃¹)/2"""
        value = delta_lac(3, 1, 0, engine2)
        assert value == pytest.approx(1 / 4 - 3 / 9 - 2 / 16, abs=1e-12)
        diff = perimeter_shape(ShapeSpec.rect(2, 5), engine2) - perimeter_shape(ShapeSpec.square(3, 1), engine2)
        assert value == pytest.approx(diff / 2, abs=1e-10)

    def test_delta_lac_invalid(self, engine2):
        """Validar l − α ≥ 1"""
        with pytest.raises(ValueError):
            delta_lac(3, 3, 0, engine2)


class TestAuxiliary:
    """Tests de las funciones auxiliares"""

    def test_lemma_f_values(self):
        """Validar f(2) en λ=1.9 y λ=3"""
        assert lemma_f(2, get_engine(1.9)) == pytest.approx(0.8078, abs=1e-3)
        assert lemma_f(2, get_engine(3.0)) == pytest.approx(1.2510, abs=1e-3)

    @pytest.mark.parametrize("lam", [1.81, 2.0, 3.0])
    def test_lemma_f_positive(self, lam):
        """Validar f > 0 en x = 2..12"""
        engine = get_engine(lam)
        assert all(lemma_f(x, engine) > 0 for x in range(2, 13))

    @pytest.mark.parametrize("lam", [1.81, 2.0, 3.0])
    def test_step7_positive(self, lam):
        """Validar f(x, λ) > 0 y f(1, λ) = 1 − ζ(λ, 3)"""
        engine = get_engine(lam)
        assert step7_f(1, engine) == pytest.approx(1 - engine.zeta(3), abs=1e-12)
        assert all(step7_f(x, engine) > 0 for x in range(1, 21))

    def test_domain_errors(self, engine2):
        """Validar dominios"""
        with pytest.raises(ValueError):
            lemma_f(1, engine2)
        with pytest.raises(ValueError):
            step7_f(0, engine2)


class TestReport:
    """Tests de positivity_diagnostics"""

    def test_square_mode(self, engine2):
        """Validar modo square sin violaciones"""
        report = positivity_diagnostics(2, 8, 4, engine=engine2)
        assert report.mode == "square"
        assert report.ok
        assert {"F1", "F2", "delta"} <= set(report.claims)

    def test_f2_not_claimed_below_three(self, engine2):
        """Validar F₂ < 0 en l=2 sin afirmación"""
        report = positivity_diagnostics(1, 4, 2, engine=engine2)
        assert report.values["F2"] < 0
        assert "F2" not in report.claims
        assert report.ok

    def test_swapped_sides(self, engine2):
        """Validar a > b intercambiados"""
        assert positivity_diagnostics(8, 2, 4, engine=engine2).params["a"] == 2

    def test_quasi_mode(self, engine2):
        """Validar modo quasi"""
        report = positivity_diagnostics(2, 6, 3, engine=engine2)
        assert report.mode == "quasi"
        assert report.values["delta"] > 0

    def test_protuberance_mode(self, engine2):
        """Validar modo square+prot en n = 11"""
        report = positivity_diagnostics(2, 5, 3, 2, 1, engine=engine2)
        assert report.mode == "square+prot"
        assert report.ok
        assert "protuberance" in report.claims
        assert 2 * report.values["delta"] == pytest.approx(2 + 0.5 - 6 / 9 - 6 / 16 - 2 / 25, abs=1e-10)

    def test_no_claims_below_threshold(self):
        """Validar λ ≤ 1.8 sin afirmaciones"""
        report = positivity_diagnostics(2, 8, 4, engine=get_engine(1.5))
        assert report.claims == {}
        assert report.ok

    @pytest.mark.parametrize("args", [(2, 3, 4, 0, 0), (2, 5, 3, 2, 2), (2, 5, 3, 3, 1), (4, 4, 4, 0, 0)])
    def test_hypothesis_violated(self, engine2, args):
        """Validar restricciones"""
        with pytest.raises(HypothesisViolated):
            positivity_diagnostics(*args, engine=engine2)

    def test_to_dict(self, engine2):
        """Validar serialización"""
        data = positivity_diagnostics(2, 8, 4, engine=engine2).to_dict()
        assert data["ok"] is True
        assert data["params"] == {"a": 2, "b": 8, "l": 4, "k1": 0, "k2": 0}

    def test_tilde_scope_below_threshold(self, engine2):
        """Validar F̃₁ sin afirmación cuando l < a+√a y F̃₂ siempre sin afirmación"""
        report = positivity_diagnostics(2, 5, 3, 2, 1, engine=engine2)
        assert "F1_tilde" not in report.claims
        assert "F2_tilde" not in report.claims
        assert report.scope["F1_tilde"].startswith("sin afirmación")
        assert report.scope["F2_tilde"].startswith("sin afirmación")
        assert report.to_dict()["scope"] == report.scope

    def test_tilde_scope_claimed(self, engine2):
        """Validar F̃₁ afirmado cuando l ≥ a+√a"""
        report = positivity_diagnostics(1, 5, 2, 1, 0, engine=engine2)
        assert report.claims["F1_tilde"] == ">0"
        assert report.scope["F1_tilde"].startswith("afirmado")
