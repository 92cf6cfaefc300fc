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

import pytest

from fglie.CoeffRing import RingDescriptor
from fglie.Errors import InputError
from fglie.FormalGroup import builtin_law
from fglie.Operators import TruncOperator, derivation
from fglie.PowerSeries import variables
from fglie.Verification import adjoint_verify, correspondence_check, explog_verify, leibniz_defect, \
    multiplicative_defect, unipotence_verify


def test_leibniz_defect(q):
    x, y = variables(q, 2, 3)
    assert leibniz_defect(derivation([y, x])) is None
    assert leibniz_defect(TruncOperator.identity(q, 2, 3)) == ('1', '1')


def test_multiplicative_defect(q):
    assert multiplicative_defect(TruncOperator.identity(q, 2, 3)) is None
    assert multiplicative_defect(TruncOperator.identity(q, 2, 3).scale(2)) == ('1', '1')


@pytest.mark.parametrize('name', ['heisenberg', 'affine', 'unitriangular:3'])
def test_correspondence(name, q3):
    report = correspondence_check(builtin_law(name, q3, 3))
    assert report.status == 'PASS'
    assert report.checks['cotangent pairing is the identity']['passed'] == 1


def test_correspondence_unitriangular_four(q3):
    report = correspondence_check(builtin_law('unitriangular:4', q3, 6))
    assert report.status == 'PASS'
    assert report.checks['[psi(e_i), psi(e_j)] = psi(C(e_i, e_j))']['passed'] == 15


def test_explog_heisenberg_over_q(q3):
    report = explog_verify(builtin_law('heisenberg', q3, 4), trials=2, seed=42)
    assert report.status == 'PASS'
    assert report.checks['log(xy) = H(log x, log y)']['passed'] == 2
    assert report.checks['exp(log x) = x']['passed'] == 2
    assert report.data['seed'] == 42


def test_explog_multiplicative_padic(z3):
    report = explog_verify(builtin_law('multiplicative', z3, 4), trials=2, seed=42)
    assert report.status == 'PASS'
    assert report.checks['exp(log rho_x) = rho_x']['failed'] == 0


@pytest.mark.parametrize('prime', [3, 2])
def test_explog_heisenberg_with_eight_digits(prime):
    ring = RingDescriptor.padic(prime, 8)
    report = explog_verify(builtin_law('heisenberg', ring, 4), trials=10, seed=42)
    assert report.status == 'PASS'
    for name in ('log rho_x is a derivation', 'exp(log rho_x) = rho_x', 'exp(psi(a)) is multiplicative',
                 'exp(log x) = x', 'log(xy) = H(log x, log y)'):
        assert report.checks[name] == {'passed': 10, 'failed': 0}


def test_explog_multiplicative_with_eight_digits():
    report = explog_verify(builtin_law('multiplicative', RingDescriptor.padic(3, 8), 5), trials=10, seed=42)
    assert report.status == 'PASS'
    assert report.checks['log rho_x is a derivation']['failed'] == 0
    assert report.checks['exp(log rho_x) = rho_x']['failed'] == 0


def test_explog_multiplicative_over_q_needs_padic(q3):
    with pytest.raises(InputError) as e:
        explog_verify(builtin_law('multiplicative', q3, 4), trials=1, seed=42)
    assert e.value.field == 'precision'


def test_explog_is_reproducible(q3):
    F = builtin_law('heisenberg', q3, 3)
    first = explog_verify(F, trials=1, seed=7).to_json()
    second = explog_verify(F, trials=1, seed=7).to_json()
    assert first == second


def test_adjoint_heisenberg(q3):
    report = adjoint_verify(builtin_law('heisenberg', q3, 4), trials=2, seed=42)
    assert report.status == 'PASS'
    assert report.checks['tau_e(w) = w']['passed'] == 3
    assert report.checks['tau_x(psi(b)) = psi(exp(ad log x) b)']['passed'] == 6


def test_adjoint_affine_padic(z3):
    report = adjoint_verify(builtin_law('affine', z3, 3), trials=2, seed=42)
    assert report.status == 'PASS'


@pytest.mark.parametrize('seed', range(20))
def test_adjoint_identity_over_many_seeds(seed):
    ring = RingDescriptor.padic(3, 8)
    for name in ('heisenberg', 'affine'):
        report = adjoint_verify(builtin_law(name, ring, 3), trials=1, seed=seed)
        assert report.status == 'PASS'


def test_unipotence_nilpotent_law(q3):
    report = unipotence_verify(builtin_law('heisenberg', q3, 3), trials=3, seed=42)
    assert report.status == 'PASS'
    assert report.data['unipotent_points'] == 3


def test_unipotence_affine_is_flagged(q3):
    report = unipotence_verify(builtin_law('affine', q3, 3), trials=5, seed=42)
    assert report.status == 'FLAG'
    assert not report.failed
    assert report.findings[0]['name'] == 'conjugation not unipotent'

# vim: ts=4 sw=4 et
