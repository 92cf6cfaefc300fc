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

# Created by rszabo50 at 2026-10-08

import json
import random
from fractions import Fraction

import pytest

from conftest import data_file
from fglie.CoeffRing import RingDescriptor
from fglie.Errors import InputError, LawError, RingMismatch, ValuationError
from fglie.FormalGroup import FormalGroupLaw, GroupPoint, builtin_law, check_axioms, group_inverse, group_mul, \
    lie_from_law, quadratic_part, sample_point, unitriangular_coordinates
from fglie.LieAlgebra import heisenberg as heisenberg_algebra, nilpotency_class, solvable2
from fglie.PowerSeries import TruncSeries


def one_dimensional(ring, bound, terms, name='test'):
    return FormalGroupLaw([TruncSeries(ring, 2, bound, terms)], name=name)


@pytest.mark.parametrize('name', ['additive', 'additive:2', 'multiplicative', 'heisenberg', 'unitriangular:3',
                                  'unitriangular:4', 'affine'])
def test_builtin_laws_satisfy_the_axioms(name, q3):
    report = check_axioms(builtin_law(name, q3, 4))
    assert report.status == 'PASS'
    assert set(report.checks) == {'F(x,0) = x', 'F(0,y) = y', 'associativity'}


def test_axioms_over_padic(z3):
    assert check_axioms(builtin_law('multiplicative', z3, 5)).status == 'PASS'


def test_unitriangular_four_to_degree_eight(q3):
    report = check_axioms(builtin_law('unitriangular:4', q3, 8))
    assert report.status == 'PASS'
    assert report.checks['associativity']['passed'] == 6


def test_non_associative_law_is_caught(q):
    # x + y + x^2 y
    law = one_dimensional(q, 4, {(1, 0): 1, (0, 1): 1, (2, 1): 1})
    report = check_axioms(law)
    assert report.status == 'FAIL'
    assert report.checks['F(x,0) = x']['failed'] == 0
    assert report.checks['associativity']['first_failure']['monomial'] == 'x1*y1*z1'


def test_missing_identity_is_caught(q):
    law = one_dimensional(q, 3, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    report = check_axioms(law)
    assert report.checks['F(x,0) = x']['failed'] == 1
    assert report.checks['F(x,0) = x']['first_failure']['monomial'] == 'x1^2'


def test_degree_bound_must_reach_the_quadratic_part(q):
    with pytest.raises(InputError):
        builtin_law('heisenberg', q, 1)


def test_unknown_law(q):
    with pytest.raises(InputError):
        builtin_law('lorentz', q, 3)


def test_lie_algebra_of_heisenberg(q):
    L = lie_from_law(builtin_law('heisenberg', q, 3))
    assert L == heisenberg_algebra()


def test_lie_algebra_of_affine_is_solvable2(q):
    assert lie_from_law(builtin_law('affine', q, 3)) == solvable2()


def test_lie_algebra_of_unitriangular(q):
    L = lie_from_law(builtin_law('unitriangular:4', q, 3))
    assert L.dimension == 6
    assert nilpotency_class(L) == 3
    assert unitriangular_coordinates(3) == [(0, 1), (0, 2), (1, 2)]


def test_lie_algebra_over_padic(z3):
    L = lie_from_law(builtin_law('heisenberg', z3, 3))
    assert L == heisenberg_algebra()


def test_pure_quadratic_terms_are_rejected(q):
    law = one_dimensional(q, 3, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    with pytest.raises(LawError):
        quadratic_part(law)


def test_commutative_law_has_abelian_algebra(q):
    L = lie_from_law(builtin_law('multiplicative', q, 4))
    assert L.is_abelian()


def test_group_mul(q3):
    F = builtin_law('heisenberg', q3, 4)
    x = GroupPoint.parse(F, '3,0,0')
    y = GroupPoint.parse(F, '0,3,0')
    assert (x * y).format() == ['3', '3', '9']
    assert (y * x).format() == ['3', '3', '0']


def test_group_inverse_over_q(q3):
    F = builtin_law('heisenberg', q3, 4)
    x = GroupPoint(F, [3, 3, 9])
    z = group_inverse(F, x)
    assert z.format() == ['-3', '-3', '0']
    assert group_mul(F, x, z).is_identity()
    assert group_mul(F, z, x).is_identity()


def test_group_inverse_over_padic(z3):
    F = builtin_law('multiplicative', z3, 4)
    x = GroupPoint(F, [3])
    assert x.inverse() == GroupPoint(F, [Fraction(-3, 4)])


def test_points_live_in_the_maximal_ideal(q3, z3):
    F = builtin_law('heisenberg', q3, 3)
    with pytest.raises(ValuationError):
        GroupPoint(F, [1, 0, 0])
    with pytest.raises(ValuationError):
        GroupPoint(builtin_law('heisenberg', z3, 3), [1, 0, 0])
    with pytest.raises(InputError):
        GroupPoint(F, [3, 0])


def test_rational_without_prime_accepts_any_point(q):
    F = builtin_law('heisenberg', q, 3)
    x = GroupPoint(F, [1, 2, Fraction(1, 2)])
    assert x.level is None
    assert group_mul(F, x, GroupPoint.identity(F)) == x


def test_level_and_bold_p(q3):
    F = builtin_law('heisenberg', q3, 3)
    x = GroupPoint(F, [9, 3, 27])
    assert x.level == 1
    assert x.in_bold_p()
    assert GroupPoint(F, [9, 9, 27]).level == 2


def test_bold_p_for_two():
    ring = RingDescriptor.padic(2, 8)
    F = builtin_law('additive', ring, 3)
    assert not GroupPoint(F, [2]).in_bold_p()
    assert GroupPoint(F, [4]).in_bold_p()


def test_over_moves_coefficients(q3, z3):
    F = builtin_law('heisenberg', q3, 3)
    G = F.over(z3)
    assert G.ring == z3
    assert check_axioms(G).status == 'PASS'
    with pytest.raises(RingMismatch):
        G.over(q3)


def test_sample_point_is_seeded(z3):
    F = builtin_law('heisenberg', z3, 3)
    first = sample_point(F, random.Random(42))
    second = sample_point(F, random.Random(42))
    assert first == second
    assert first.in_bold_p()


def test_law_from_file():
    with open(data_file('affine_q.json')) as f:
        F = FormalGroupLaw.from_json(json.load(f))
    assert F.name == 'affine-from-file'
    assert F.ring == RingDescriptor.rational(3)
    assert check_axioms(F).status == 'PASS'
    assert F.to_json()['components'][1]['terms'][2] == {'exponents': [1, 0, 0, 1], 'coefficient': '1'}


def test_law_json_errors(q):
    with pytest.raises(InputError):
        FormalGroupLaw.from_json({'dimension': 1, 'components': []}, q)
    law = builtin_law('additive:2', q, 2).to_json()
    law['dimension'] = 3
    with pytest.raises(InputError):
        FormalGroupLaw.from_json(law)


def test_str_names_both_factors(q):
    assert str(builtin_law('multiplicative', q, 2)) == 'F1 = x1 + y1 + x1*y1'

# vim: ts=4 sw=4 et
