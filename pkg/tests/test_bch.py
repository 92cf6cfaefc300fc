#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#  Copyright (C) 2022 Robert Szabo.
#
#  This software can be used by anyone at no cost, however,
#  if you like using my software and can support - please
#  donate money to a children's hospital of your choice.
#  This program is free software: you can redistribute it
#  and/or modify it under the terms of the GNU General Public
#  License as published by the Free Software Foundation:
#  GNU GPLv3. You must include this entire text with your
#  distribution.
#  This program is distributed in the hope that it will be
#  useful, but WITHOUT ANY WARRANTY; without even the implied
#  warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR
#  PURPOSE.
#  See the GNU General Public License for more details.
#

# Created by rszabo50 at 2026-10-07

from fractions import Fraction

import pytest

from conftest import golden_file
from fglie.Bch import audit_valuations, bch_eval, bch_series, bch_symmetry_holds, factorial_audit, \
    gamma_group_check, matrix_oracle_check, valuation_bound
from fglie.Commands import run
from fglie.Errors import InputError, SeriesDivergence, ValuationError
from fglie.FreeLie import witt_dimension
from fglie.LieAlgebra import StructureConstants, free_nilpotent, heisenberg, sl2, solvable2
from fglie.Reports import dumps, envelope


@pytest.mark.parametrize('degree', [1, 2, 3, 4])
def test_table_matches_golden_file(degree, capsys):
    with open(golden_file(f'bch_degree_{degree}.json')) as f:
        golden = f.read()
    assert run(['bch', 'table', '--degree', str(degree)]) == 0
    assert capsys.readouterr().out == golden
    assert dumps(envelope(bch_series(degree).to_json())) == golden


@pytest.mark.parametrize('degree', [5, 6, 7, 8])
def test_high_degree_tables(degree, capsys):
    table = bch_series(degree)
    assert run(['bch', 'table', '--degree', str(degree)]) == 0
    assert capsys.readouterr().out == dumps(envelope(table.to_json()))
    assert table.series.truncated(degree - 1) == bch_series(degree - 1).series
    assert len(table.series.homogeneous(degree).terms) <= witt_dimension(2, degree)
    assert table.audit([2, 3, 5, 7]) == {'2': 'pass', '3': 'pass', '5': 'pass', '7': 'pass'}


def test_degree_must_be_positive():
    with pytest.raises(InputError):
        bch_series(0)


@pytest.mark.parametrize('degree', [3, 5, 6, 8])
def test_symmetry(degree):
    assert bch_symmetry_holds(degree)


def test_valuation_bound():
    assert valuation_bound(1, 2) == 0
    assert valuation_bound(4, 2) == -3
    assert valuation_bound(4, 3) == Fraction(-3, 2)


def test_valuation_audit_passes():
    report = audit_valuations(bch_series(10), [2, 3, 5, 7])
    assert report.status == 'PASS'
    assert report.data['valuation_audit'] == {'2': 'pass', '3': 'pass', '5': 'pass', '7': 'pass'}


def test_table_json():
    data = bch_series(3).to_json([2, 3])
    assert data['basis'] == 'lyndon'
    assert data['degree_bound'] == 3
    term = data['terms'][3]
    assert term['lyndon_word'] == '112'
    assert term['bracket'] == '[x1,[x1,x2]]'
    assert term['valuations']['2'] == {'valuation': -2, 'bound': '-2'}
    assert data['valuation_audit'] == {'2': 'pass', '3': 'pass'}


def test_table_text():
    text = bch_series(2).to_text([2])
    lines = text.splitlines()
    assert lines[0] == 'BCH series to degree 2 (Lyndon basis)'
    assert lines[-1] == 'valuation audit: p=2: pass'
    assert any(line.startswith('12 ') and '[x1,x2]' in line for line in lines)


def test_factorial_audit():
    assert factorial_audit(20, [2, 3, 5]).status == 'PASS'


def test_eval_in_heisenberg_over_q(q):
    L = heisenberg()
    assert bch_eval(L, [1, 0, 0], [0, 1, 0], ring=q) == [1, 1, Fraction(1, 2)]
    assert bch_eval(L, [1, 2, 3], [0, 0, 0]) == [1, 2, 3]
    assert bch_eval(L, [1, 0, 0], [0, 1, 0], 1) == [1, 1, 0]


def test_eval_over_q_needs_nilpotent(q):
    with pytest.raises(SeriesDivergence):
        bch_eval(sl2(), [1, 0, 0], [0, 1, 0], ring=q)


def test_eval_padic_needs_bold_p(z3):
    with pytest.raises(ValuationError):
        bch_eval(sl2(), [1, 0, 0], [0, 3, 0], ring=z3)


def test_eval_padic_solvable(z3):
    # in solvable2, H(a e1, b e2) has e2 coordinate b*a/(1 - e^-a)
    a, b = z3.embed(3), z3.embed(3)
    value = bch_eval(solvable2(), [a, z3.zero()], [z3.zero(), b], ring=z3)
    assert value[0] == a
    assert z3.valuation(value[1]) == 1


def test_eval_padic_degree_and_ring_are_positional(z3):
    value = bch_eval(heisenberg(), [3, 0, 0], [0, 3, 0], 1, z3)
    assert value == [z3.embed(3), z3.embed(3), z3.zero()]
    assert bch_eval(heisenberg(), [3, 0, 0], [0, 3, 0], None, z3)[2] == z3.embed(Fraction(9, 2))


def test_eval_padic_rejects_non_integral_brackets(z3):
    # [e1,e2] = e3/9 leaves the degree two part of H below 2*v0 - 1/2
    L = StructureConstants(3, {(0, 1): {2: Fraction(1, 9)}}, name='scaled')
    with pytest.raises(SeriesDivergence):
        bch_eval(L, [3, 0, 0], [0, 3, 0], ring=z3)


def test_gamma_group_nilpotent_over_q(q3):
    report = gamma_group_check(free_nilpotent(2, 3), q3, trials=4, seed=42)
    assert report.status == 'PASS'
    assert report.checks['associativity']['passed'] == 4


def test_gamma_group_padic(z3):
    report = gamma_group_check(sl2(), z3, trials=3, seed=42)
    assert report.status == 'PASS'


def test_gamma_group_is_seeded(z3):
    first = gamma_group_check(heisenberg(), z3, trials=2, seed=5).to_json()
    second = gamma_group_check(heisenberg(), z3, trials=2, seed=5).to_json()
    assert first == second


def test_matrix_oracle():
    report = matrix_oracle_check(trials=100, seed=42, sizes=(3, 4, 5, 6))
    assert report.status == 'PASS'
    for n in (3, 4, 5, 6):
        assert report.checks[f'size {n}']['passed'] == 25

# vim: ts=4 sw=4 et
