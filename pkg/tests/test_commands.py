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

# Created by rszabo50 at 2026-10-09

import json

import pytest

from conftest import data_file
from fglie.Commands import build_parser, ring_from_args, run
from fglie.CoeffRing import RingKind
from fglie.constants import PROGRAM_VERSION
from fglie.Errors import InputError


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_bch_table(capsys):
    code, data = run_json(capsys, ['bch', 'table', '--degree', '3'])
    assert code == 0
    assert [t['lyndon_word'] for t in data['terms']] == ['1', '2', '12', '112', '122']
    assert data['tool_version'] == PROGRAM_VERSION
    assert data['basis_convention'] == 'lyndon'
    assert data['ring'] == {'kind': 'Rational'}
    assert data['valuation_audit'] == {'2': 'pass', '3': 'pass', '5': 'pass', '7': 'pass'}


def test_bch_table_text(capsys):
    assert run(['bch', 'table', '--degree', '2', '--format', 'text']) == 0
    out = capsys.readouterr().out
    assert out.startswith('BCH series to degree 2')


def test_bch_audit(capsys):
    code, data = run_json(capsys, ['bch', 'audit', '--degree', '5'])
    assert code == 0
    assert [r['status'] for r in data['reports']] == ['PASS', 'PASS']


def test_bch_oracle_is_byte_reproducible(capsys):
    assert run(['bch', 'oracle', '--trials', '2', '--seed', '3']) == 0
    first = capsys.readouterr().out
    assert run(['bch', 'oracle', '--trials', '2', '--seed', '3']) == 0
    assert capsys.readouterr().out == first


def test_bch_gamma_padic(capsys):
    code, data = run_json(capsys, ['bch', 'gamma', '--structure', 'heisenberg', '--prime', '3',
                                   '--precision', '5', '--trials', '2'])
    assert code == 0
    assert data['status'] == 'PASS'
    assert data['ring'] == {'kind': 'PAdic', 'prime': 3, 'precision': 5}


def test_group_mul(capsys):
    code, data = run_json(capsys, ['group', 'mul', '--law', 'heisenberg', '--prime', '3',
                                   '--x', '3,0,0', '--y', '0,3,0'])
    assert code == 0
    assert data['product'] == ['3', '3', '9']
    assert data['ring'] == {'kind': 'Rational', 'prime': 3}


def test_group_log_and_exp(capsys):
    code, data = run_json(capsys, ['group', 'log', '--law', 'heisenberg', '--prime', '3', '--x', '3,3,9'])
    assert code == 0
    assert data['log'] == ['3', '3', '9/2']
    code, data = run_json(capsys, ['group', 'exp', '--law', 'heisenberg', '--prime', '3',
                                   '--coords', '3,3,9/2'])
    assert code == 0
    assert data['exp'] == ['3', '3', '9']


def test_group_inverse(capsys):
    code, data = run_json(capsys, ['group', 'inv', '--law', 'heisenberg', '--prime', '3', '--x', '3,3,9'])
    assert code == 0
    assert data['inverse'] == ['-3', '-3', '0']


def test_point_outside_the_maximal_ideal(capsys):
    code = run(['group', 'mul', '--law', 'heisenberg', '--prime', '3', '--x', '1,0,0', '--y', '0,3,0'])
    assert code == 2
    assert 'x:' in capsys.readouterr().err


def test_law_check_and_lie(capsys):
    code, data = run_json(capsys, ['law', 'check', '--law', 'unitriangular:3', '--degree', '3'])
    assert code == 0
    assert data['status'] == 'PASS'
    code, data = run_json(capsys, ['law', 'lie', '--law', 'heisenberg'])
    assert code == 0
    assert data['nilpotency_class'] == 2
    assert data['structure']['brackets'] == [{'i': 1, 'j': 2, 'result': [{'k': 3, 'coeff': '1'}]}]


def test_law_from_file(capsys):
    code, data = run_json(capsys, ['law', 'lie', '--law', data_file('affine_q.json')])
    assert code == 0
    assert data['law'] == 'affine-from-file'
    assert data['nilpotency_class'] is None


def test_explog_verify(capsys):
    code, data = run_json(capsys, ['law', 'explog-verify', '--law', 'heisenberg', '--prime', '3',
                                   '--degree', '3', '--trials', '1'])
    assert code == 0
    assert data['status'] == 'PASS'


def test_explog_verify_multiplicative_over_q_is_a_usage_error(capsys):
    code = run(['law', 'explog-verify', '--law', 'multiplicative', '--prime', '3', '--trials', '1'])
    assert code == 2
    assert 'p-adic' in capsys.readouterr().err


def test_unipotent_flag_exits_zero(capsys):
    code, data = run_json(capsys, ['law', 'unipotent', '--law', 'affine', '--prime', '3', '--degree', '3',
                                   '--trials', '4'])
    assert code == 0
    assert data['status'] == 'FLAG'


def test_lie_commands(capsys):
    code, data = run_json(capsys, ['lie', 'report', '--structure', 'solvable2'])
    assert code == 0
    assert data['status'] == 'FLAG'
    code, data = run_json(capsys, ['lie', 'radical', '--structure', 'sl2+heisenberg'])
    assert code == 0
    assert data['radical_dimension'] == 3
    code, data = run_json(capsys, ['lie', 'nilpotent', '--structure', 'free-nilpotent:2:3'])
    assert data['nilpotency_class'] == 3


def test_broken_jacobi_exits_one(capsys):
    code, data = run_json(capsys, ['lie', 'jacobi', '--structure', data_file('broken_jacobi.json')])
    assert code == 1
    assert data['status'] == 'FAIL'


def test_output_file(capsys, tmp_path):
    target = tmp_path / 'table.json'
    assert run(['bch', 'table', '--degree', '2', '--output', str(target)]) == 0
    assert capsys.readouterr().out == ''
    assert json.loads(target.read_text())['degree_bound'] == 2


@pytest.mark.parametrize('argv', [
    [],
    ['bch'],
    ['bch', 'nonsense'],
    ['bch', 'table', '--degree', 'four'],
    ['law', 'check', '--law', 'nosuch'],
    ['law', 'check'],
    ['lie', 'report', '--structure', '/no/such/file.json'],
    ['group', 'mul', '--law', 'heisenberg', '--prime', '3', '--t-precision', '2', '--x', '3,0,0', '--y', '3,0,0'],
    ['group', 'mul', '--law', 'heisenberg', '--prime', '4', '--x', '3,0,0', '--y', '3,0,0'],
    ['group', 'exp', '--law', 'heisenberg', '--prime', '3'],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_version(capsys):
    assert run(['--version']) == 0
    assert PROGRAM_VERSION in capsys.readouterr().out


def test_bad_config_is_a_usage_error(fglie_home, capsys):
    fglie_home.mkdir(parents=True)
    (fglie_home / 'config.yml').write_text('loglevel: chatty\n')
    assert run(['bch', 'table', '--degree', '1']) == 2


def test_config_file_is_created(fglie_home, capsys):
    assert run(['bch', 'table', '--degree', '1']) == 0
    assert (fglie_home / 'config.yml').exists()


def test_ring_selection():
    parser = build_parser()
    args = parser.parse_args(['group', 'mul', '--prime', '5'])
    assert ring_from_args(args).kind is RingKind.RATIONAL
    args = parser.parse_args(['group', 'mul', '--prime', '5', '--precision', '4'])
    assert ring_from_args(args).kind is RingKind.PADIC
    args = parser.parse_args(['group', 'mul', '--prime', '5', '--precision', '4', '--t-precision', '2'])
    assert ring_from_args(args).kind is RingKind.PADIC_T
    args = parser.parse_args(['group', 'mul', '--precision', '4'])
    with pytest.raises(InputError):
        ring_from_args(args)

# vim: ts=4 sw=4 et
