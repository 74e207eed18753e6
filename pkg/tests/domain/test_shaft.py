# tests/domain/test_shaft.py
from fractions import Fraction

import pytest

from domain.polynomials.services import parse_polynomial
from domain.routh.entities import VerdictOutcome, MARGINAL_OR_UNSTABLE
from domain.routh.services import build_table, hurwitz_verdict
from domain.shaft.entities import STABLE, UNSTABLE, BOUNDARY
from domain.shaft.services import (
    closed_loop_model,
    characteristic_polynomial,
    model_characteristic_polynomial,
    shaft_conditions,
    shaft_table_closed_forms,
    lattice,
    sweep_grid,
)
from domain.shaft.value_objects import ShaftParams
from core.exceptions import ValidationError
from tests.helpers import random_rational


class TestClosedLoop:
    def test_matrix_layout(self, stable_shaft):
        model = closed_loop_model(stable_shaft)
        assert [c.re for c in model.matrix[0]] == [0, 1, 0]
        assert [c.re for c in model.matrix[2]] == [1, 0, 0]
        assert model.matrix[1][0].re == -10 + 4 - 4
        assert (model.matrix[1][1].re, model.matrix[1][1].im) == (-4, -4)
        assert model.matrix[1][2].re == -1

    @pytest.mark.parametrize("kp, ki, text", [
        (-10, -1, "4+4i,10,1"),
        (0, 0, "4+4i,0,0"),
        (0, 1, "4+4i,0,-1"),
    ])
    def test_characteristic_polynomial(self, kp, ki, text):
        params = ShaftParams(k=1, omega=2, Omega=2, kp=kp, kI=ki)
        assert characteristic_polynomial(params) == parse_polynomial(text)

    def test_determinant_consistency(self, rng):
        for _ in range(20):
            params = ShaftParams(*(random_rational(rng, -30, 30) for _ in range(5)))
            model = closed_loop_model(params)
            assert model_characteristic_polynomial(model) == characteristic_polynomial(params)

    def test_invalid_parameter(self):
        with pytest.raises(ValidationError):
            ShaftParams(k=float("nan"), omega=2, Omega=2, kp=0, kI=0)


class TestConditions:
    def test_stable_point(self, stable_shaft):
        assert shaft_conditions(stable_shaft) == (4, 156, 1457)

    def test_unstable_point(self, unstable_shaft):
        assert shaft_conditions(unstable_shaft)[2] == -65

    def test_undamped_shaft(self):
        params = ShaftParams(k=0, omega=2, Omega=2, kp=-1, kI=-1)
        assert shaft_conditions(params)[0] == 0
        verdict = hurwitz_verdict(characteristic_polynomial(params))
        assert verdict.annotation == MARGINAL_OR_UNSTABLE

    def test_final_pivot_is_scaled_third_condition(self, stable_shaft):
        table = build_table(characteristic_polynomial(stable_shaft))
        assert table.final_pivot == 16 * shaft_conditions(stable_shaft)[2]

    def test_signs_match_pivot_chain(self, rng):
        for _ in range(200):
            params = ShaftParams(
                k=random_rational(rng, 1, 30),
                omega=random_rational(rng, 1, 30),
                Omega=random_rational(rng, -30, 30),
                kp=random_rational(rng, -200, 50),
                kI=random_rational(rng, -50, 10),
            )
            table = build_table(characteristic_polynomial(params))
            signs = [(c > 0) - (c < 0) for c in shaft_conditions(params)]
            assert signs == [(p > 0) - (p < 0) for p in table.pivots]

    def test_table_closed_forms(self, rng):
        for _ in range(50):
            params = ShaftParams(*(random_rational(rng, -30, 30) for _ in range(5)))
            table = build_table(characteristic_polynomial(params))
            forms = shaft_table_closed_forms(params)
            first, second = table.levels
            assert (forms.a1_1, forms.b1_1, forms.a2_1) == (first.row1[0], first.row2[0], first.row2[1])
            assert (forms.a2_2, forms.b3_2) == second.row1
            assert (forms.b2_2, forms.a3_2) == second.row2
            assert forms.pivots() == table.pivots


class TestSweep:
    def test_lattice(self):
        assert lattice(Fraction(-5), Fraction(0), 3) == (-5, Fraction(-5, 2), 0)
        assert lattice(Fraction(-1), Fraction(-1), 200) == (-1,)
        assert lattice(-1.0, 1.0, 3) == (-1.0, 0.0, 1.0)

    @pytest.mark.parametrize("lo, hi, count", [(0, 1, 1), (1, 0, 5)])
    def test_lattice_rejects(self, lo, hi, count):
        with pytest.raises(ValidationError):
            lattice(Fraction(lo), Fraction(hi), count)

    def test_single_stable_cell(self, stable_shaft):
        grid = sweep_grid(stable_shaft, (-1, -1), (-10, -10), (2, 2))
        (cell,) = list(grid)
        assert cell.verdict.is_hurwitz
        assert cell.abscissa < 0
        assert cell.region(grid.margin) == STABLE
        assert grid.summary() == {STABLE: 1, UNSTABLE: 0, BOUNDARY: 0}

    def test_single_unstable_cell(self, stable_shaft):
        (cell,) = list(sweep_grid(stable_shaft, (1, 1), (0, 0), (2, 2)))
        assert cell.verdict.outcome is VerdictOutcome.NOT_HURWITZ
        assert cell.abscissa > 0

    def test_zero_integral_gain_is_boundary(self, stable_shaft):
        grid = sweep_grid(stable_shaft, (0, 0), (-10, -10), (2, 2))
        (cell,) = list(grid)
        assert cell.verdict.outcome is VerdictOutcome.NOT_HURWITZ
        assert cell.region(grid.margin) == BOUNDARY

    def test_small_grid_has_no_disagreements(self, stable_shaft):
        grid = sweep_grid(stable_shaft, (Fraction(-5), Fraction(1)), (Fraction(-20), Fraction(5)), (7, 11))
        assert grid.shape == (7, 11)
        assert grid.disagreements() == []
        counts = grid.summary()
        assert sum(counts.values()) == 77
        assert counts[STABLE] > 0 and counts[UNSTABLE] > 0
        codes = grid.region_codes()
        assert codes.shape == (7, 11)
        # kp varies along the second axis
        assert grid.cells[0][1].kp == grid.kp_axis[1]
