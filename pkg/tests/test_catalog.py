"""Tests para el catálogo de minimizadores y los cruces de forma"""
import pytest

from app.catalog.minimizers import (
    argmin_shape,
    catalog,
    catalog_realizations,
    crossover_between,
    crossover_lambda,
    crossover_points,
    decompose,
    extended_catalog,
    lambda_c,
    minimal_specs,
)
from app.core.errors import NoTwoShapes
from app.geometry.lattice import orbit_key
from app.geometry.shapes import ShapeSpec, Side, realize
from app.special.zeta import get_engine


def labels(specs):
    return {s.label for s in specs}


class TestDecompose:
    """Tests de la descomposición n = l² + k₁ o l(l+1) + k₂"""

    @pytest.mark.parametrize("n,square,quasi", [
        (1, (1, 0), None),
        (4, (2, 0), None),
        (5, (2, 1), None),
        (6, None, (2, 0)),
        (8, None, (2, 2)),
        (11, (3, 2), None),
        (12, None, (3, 0)),
    ])
    def test_exactly_one_form(self, n, square, quasi):
        """Validar forma única"""
        d = decompose(n)
        assert d.square_form == square
        assert d.quasi_form == quasi

    def test_canonical_longer_side(self):
        """Validar k₂ = l en el lado largo"""
        assert decompose(8).canonical_spec == ShapeSpec.quasi_square(2, 2, Side.LONGER)

    def test_invalid(self):
        """Validar n < 1"""
        with pytest.raises(ValueError):
            decompose(0)

    @pytest.mark.parametrize("n", range(1, 40))
    def test_rect_forms_area(self, n):
        """Validar ab + k = n en todas las formas"""
        for a, b, k, side in decompose(n).rect_forms:
            assert ShapeSpec(a, b, k, side).area == n


class TestMinimalSpecs:
    """Tests de 𝓜ₙ"""

    def test_small_catalogs(self):
        """Validar 𝓜₄, 𝓜₁₀ y 𝓜₁₂"""
        assert labels(minimal_specs(4)) == {"Q2"}
        assert labels(minimal_specs(10)) == {"Q3^1", "R2,5", "R2,4^2L"}
        assert labels(minimal_specs(12)) == {"R3,4"}

    def test_canonical_first(self):
        """Validar forma canónica en primera posición"""
        assert minimal_specs(10)[0] == ShapeSpec.square(3, 1)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_same_classical_perimeter(self, n):
        """Validar área n y perímetro clásico común"""
        specs = minimal_specs(n)
        assert {s.area for s in specs} == {n}
        assert len({s.classical_perimeter for s in specs}) == 1

    @pytest.mark.parametrize("n", [5, 10, 17])
    def test_extended_contains_minimal(self, n):
        """Validar 𝓜ₙ ⊆ 𝓜ₙᵉˣᵗ sin duplicados por congruencia"""
        ext = extended_catalog(n)
        assert set(minimal_specs(n)) <= set(ext)
        keys = [orbit_key(realize(s)) for s in ext]
        assert len(keys) == len(set(keys))

    def test_catalog_entries(self, engine2):
        """Validar entradas con perímetros"""
        result = catalog(10, engine2)
        assert [e.spec for e in result.minimal] == minimal_specs(10)
        assert all(e.nonlocal_perimeter > 0 for e in result.extended)
        assert result.minimal[0].to_dict()["shape"] == "Q3^1"

    def test_realizations(self):
        """Validar realizaciones del 𝓜₅"""
        keys = catalog_realizations(5)
        assert orbit_key(realize(ShapeSpec.square(2, 1))) in keys


class TestArgmin:
    """Tests del minimizador por λ"""

    def test_n10_switch(self):
        """Validar 𝓡_{2,5} gana a λ=2 y 𝓠₃¹ a λ=5"""
        assert [e.spec.label for e in argmin_shape(10, get_engine(2.0))] == ["R2,5"]
        assert [e.spec.label for e in argmin_shape(10, get_engine(5.0))] == ["Q3^1"]

    def test_single_shape(self, engine2):
        """Validar área con una sola forma"""
        assert [e.spec.label for e in argmin_shape(12, engine2)] == ["R3,4"]


class TestCrossovers:
    """Tests de cruces de forma"""

    def test_lambda_c(self):
        """Validar cruce 𝓠₂ / 𝓡_{1,4} en λ ≈ 1.3646"""
        assert lambda_c() == pytest.approx(1.3646, abs=1e-3)

    def test_n10_root(self):
        """Validar raíz de p₂ − 3p₃ − 2p₄ entre 3 y 3.5"""
        root = crossover_lambda(10)
        assert root is not None
        assert 3.0 < root < 3.5

    def test_between_no_sign_change(self):
        """Validar None sin cambio de signo"""
        assert crossover_between(ShapeSpec.square(3, 1), ShapeSpec.rect(2, 5), 1.9, 2.5) is None

    def test_no_two_shapes(self):
        """Validar NoTwoShapes con catálogo unitario"""
        with pytest.raises(NoTwoShapes):
            crossover_points(12)

    def test_crossover_areas(self):
        """Validar áreas con cruce en (1.8, 20] para n ≤ 30"""
        found = set()
        for n in range(1, 31):
            try:
                if crossover_points(n):
                    found.add(n)
            except NoTwoShapes:
                continue
        assert found == {10, 17, 18, 21, 27, 28}

    @pytest.mark.parametrize("n,expected", [(21, 2.1869), (27, 3.0487)])
    def test_equal_classical_crossovers(self, n, expected):
        """Validar cruces entre formas de igual perímetro clásico"""
        (point,) = crossover_points(n)
        assert point.before.classical_perimeter == point.after.classical_perimeter
        assert point.lambda_star == pytest.approx(expected, abs=1e-3)

    def test_n21_rectangle_loses(self):
        """Validar que 𝓡_{3,7} cede ante 𝓡_{4,5} con protuberancia"""
        (point,) = crossover_points(21)
        assert (point.before.a, point.before.b, point.before.k) == (3, 7, 0)
        assert (point.after.a, point.after.b, point.after.k) == (4, 5, 1)

    def test_n27_quasi_square_wins_late(self):
        """Validar que 𝓠₅ con 2-protuberancia gana a partir de λ ≈ 3.05"""
        (point,) = crossover_points(27)
        assert (point.after.a, point.after.b, point.after.k) == (5, 5, 2)
