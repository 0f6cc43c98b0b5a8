"""Tests para los movimientos y algoritmos de reducción"""
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from app.core.errors import CollisionWithOccupiedCells, PreconditionViolated, StripNotFound
from app.geometry.lattice import Cell, Orientation, Polyomino, Strip, is_connected, is_line_convex, rectangle
from app.geometry.shapes import ShapeSpec, Side, realize
from app.reduction import (
    TerminalClass,
    chessboard_exchange,
    convexify,
    cross_convex_algorithm,
    fill_holes_step,
    is_in_extended_catalog,
    main_algorithm,
    relocate_best_cell,
    shift_strip,
)
from app.reduction.moves import total_perimeter

PLUS = Polyomino.from_cells([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
U_SHAPE = Polyomino.from_cells([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)])
Z_SHAPE = Polyomino.from_cells([(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)])
L_TETROMINO = Polyomino.from_cells([(0, 0), (1, 0), (2, 0), (0, 1)])
T_TETROMINO = Polyomino.from_cells([(0, 0), (1, 0), (2, 0), (1, 1)])
T_HEXOMINO = Polyomino.from_cells([(0, 0), (1, 0), (2, 0), (1, 1), (1, 2), (1, 3)])


class TestShiftStrip:
    """Tests de shift_strip"""

    def setup_method(self):
        self.p = Polyomino.from_cells([(0, 0), (3, 0)])
        self.strip = Strip(Orientation.HORIZONTAL, Cell(3, 0), 1)

    def test_shift_towards_neighbour(self, engine2):
        """Validar que acercar la tira baja Per en 2(p₂ − p₃)"""
        moved = shift_strip(self.p, self.strip, -1)
        assert moved == Polyomino.from_cells([(0, 0), (2, 0)])
        diff = total_perimeter(self.p, engine2) - total_perimeter(moved, engine2)
        assert diff == pytest.approx(2 * (1 / 4 - 1 / 9), abs=1e-12)

    def test_not_maximal(self):
        """Validar StripNotFound"""
        with pytest.raises(StripNotFound):
            shift_strip(self.p, Strip(Orientation.HORIZONTAL, Cell(1, 0), 1), -1)

    def test_zero_delta(self):
        """Validar delta = 0"""
        with pytest.raises(PreconditionViolated):
            shift_strip(self.p, self.strip, 0)

    def test_no_neighbour(self):
        """Validar dirección sin tira vecina"""
        with pytest.raises(PreconditionViolated):
            shift_strip(self.p, self.strip, 1)

    def test_collision(self):
        """Validar celda destino ocupada"""
        with pytest.raises(CollisionWithOccupiedCells):
            shift_strip(self.p, self.strip, -3)

    def test_overshoot(self):
        """Validar desplazamiento que atraviesa la vecina"""
        with pytest.raises(PreconditionViolated):
            shift_strip(self.p, self.strip, -4)


class TestMoves:
    """Tests de los movimientos elementales"""

    def test_fill_holes_on_u_shape(self, engine2):
        """Validar relleno de la columna 1 en la U"""
        result, changed, strict = fill_holes_step(U_SHAPE, engine2, 0)
        assert changed and strict
        assert result == Polyomino.from_cells([(0, 0), (1, 0), (2, 0), (1, 1), (2, 1)])

    def test_fill_holes_noop(self, engine2):
        """Validar columna sin huecos que rellenar"""
        result, changed, strict = fill_holes_step(rectangle(3, 2), engine2, 0)
        assert result == rectangle(3, 2)
        assert not changed and not strict

    def test_convexify(self):
        """Validar que convexify conserva el área y es convexo por líneas"""
        result = convexify(U_SHAPE)
        assert result.area == U_SHAPE.area
        assert is_line_convex(result)
        assert is_connected(result)

    def test_chessboard_exchange(self, engine2):
        """Validar que cerrar el hueco da el dominó"""
        p = Polyomino.from_cells([(0, 0), (3, 0)])
        assert chessboard_exchange(p, engine2) == rectangle(2, 1)

    def test_chessboard_exchange_none(self, engine2):
        """Validar que un rectángulo no tiene huecos"""
        assert chessboard_exchange(rectangle(3, 3), engine2) is None

    def test_relocate_best_cell(self, engine2):
        """Validar que el traslado de una celda baja Per"""
        candidate = relocate_best_cell(U_SHAPE, engine2)
        assert candidate is not None
        assert candidate.area == 5
        assert total_perimeter(candidate, engine2) < total_perimeter(U_SHAPE, engine2)

    @pytest.mark.parametrize(
        "p,expected",
        [
            (rectangle(3, 2), True),
            (realize(ShapeSpec.square(2, 1)), True),
            (realize(ShapeSpec.rect(2, 4, 3, Side.LONGER), offset=1), True),
            (L_TETROMINO, True),
            (T_TETROMINO, True),
            (PLUS, False),
            (U_SHAPE, False),
            (Z_SHAPE, False),
        ],
    )
    def test_extended_catalog(self, p, expected):
        """Validar pertenencia estructural a 𝓜ₙᵉˣᵗ"""
        assert is_in_extended_catalog(p) is expected


class TestMainAlgorithm:
    """Tests del algoritmo principal"""

    @pytest.mark.parametrize("p", [rectangle(2, 2), L_TETROMINO, T_TETROMINO])
    def test_extended_catalog_is_fixed(self, engine2, p):
        """Validar que 𝓜ₙᵉˣᵗ no se reduce"""
        trace = main_algorithm(p, engine2)
        assert trace.terminal_class == TerminalClass.EXTENDED_CATALOG
        assert trace.steps == []
        assert trace.terminal == p

    def test_u_shape(self, engine2):
        """Validar paso 3.1 en la U"""
        trace = main_algorithm(U_SHAPE, engine2)
        assert trace.steps[0].label == "3.1"
        assert trace.terminal_class == TerminalClass.REDUCED

    def test_rotation(self, engine2):
        """Validar rotación en el paso 4"""
        trace = main_algorithm(Z_SHAPE, engine2)
        assert trace.steps[0].label == "4"
        assert trace.rotated
        assert trace.terminal_class == TerminalClass.REDUCED

    def test_disconnected_pair(self, engine2):
        """Validar dos celdas separadas en una fila"""
        trace = main_algorithm(Polyomino.from_cells([(0, 0), (5, 0)]), engine2)
        assert trace.steps[0].label == "3.1"
        assert trace.terminal_class == TerminalClass.REDUCED

    def test_diagonal_pair(self, engine2):
        """Validar 3.2 seguido de 3.1"""
        trace = main_algorithm(Polyomino.from_cells([(0, 0), (2, 2)]), engine2)
        assert [s.label for s in trace.steps[:2]] == ["3.2", "3.1"]

    @pytest.mark.parametrize("lam", [1.85, 2.5, 5.0])
    def test_plus_reduced(self, engine_at, lam):
        """Validar reducción de la cruz para varios λ"""
        trace = main_algorithm(PLUS, engine_at(lam))
        assert trace.terminal_class == TerminalClass.REDUCED
        assert trace.terminal.area == 5

    def test_trace_serialization(self, engine2):
        """Validar to_dict"""
        data = main_algorithm(U_SHAPE, engine2).to_dict()
        assert data["terminal_class"] == "reduced_strictly"
        assert data["terminal_perimeter"] < data["initial_perimeter"]
        assert data["steps"][0]["step"] == "3.1"


class TestCrossConvex:
    """Tests del algoritmo cross-convex"""

    def test_plus(self, engine2):
        """Validar paso 6 sobre la cruz con disminución 2·3^{−λ}"""
        trace = cross_convex_algorithm(PLUS, engine2)
        assert [s.label for s in trace.steps] == ["1-2", "3-4", "6"]
        assert trace.terminal == Polyomino.from_cells([(1, 2), (2, -1), (2, 0), (2, 1), (2, 2)])
        assert trace.decrease == pytest.approx(2 / 9, abs=1e-10)
        assert trace.decrease >= trace.steps[-1].bound - 1e-12

    def test_t_hexomino(self, engine2):
        """Validar la T de seis celdas: 𝒟″ alargada y paso 6 en la segunda orientación"""
        trace = cross_convex_algorithm(T_HEXOMINO, engine2)
        assert [s.label for s in trace.steps] == ["1-2", "3-4", "6"]
        assert not any(s.label.startswith("fallback") for s in trace.steps)
        assert trace.terminal == rectangle(3, 2)
        assert trace.decrease == pytest.approx(59 / 18, abs=1e-9)
        assert trace.decrease >= trace.steps[-1].bound - 1e-12

    def test_preserves_perimeter_until_relocation(self, engine2):
        """Validar que 𝒟′ y 𝒟″ no aumentan Per"""
        for p in (PLUS, T_HEXOMINO):
            trace = cross_convex_algorithm(p, engine2)
            for step in trace.steps[:2]:
                assert step.perimeter <= trace.initial_perimeter + 1e-9

    @pytest.mark.parametrize("p", [U_SHAPE, rectangle(3, 2)])
    def test_precondition(self, engine2, p):
        """Validar que sólo acepta cross-convex fuera de 𝓜ₙᵉˣᵗ"""
        with pytest.raises(PreconditionViolated):
            cross_convex_algorithm(p, engine2)


cells_strategy = st.sets(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=2, max_size=7
)


class TestReductionProperties:
    """Propiedades del algoritmo principal"""

    @hyp_settings(max_examples=40, deadline=None)
    @given(cells=cells_strategy)
    def test_area_and_monotonicity(self, cells):
        """Validar área constante, Per no creciente y reducción estricta fuera de 𝓜ₙᵉˣᵗ"""
        from app.special.zeta import get_engine

        engine = get_engine(2.0)
        p = Polyomino.from_cells(cells)
        trace = main_algorithm(p, engine)
        previous = trace.initial_perimeter
        for step in trace.steps:
            assert step.polyomino.area == p.area
            assert step.perimeter <= previous + 1e-9
            previous = step.perimeter
        if is_in_extended_catalog(p):
            assert trace.terminal_class == TerminalClass.EXTENDED_CATALOG
        else:
            assert trace.terminal_class == TerminalClass.REDUCED
