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

# Created by rszabo50 at 2026-10-06

import math
import random
from fractions import Fraction

import pytest

from fglie.CoeffRing import RingDescriptor, RingKind, guard_digits, rational_valuation
from fglie.Errors import InputError, PrecisionExhausted, RingMismatch


def test_rational_valuation():
    assert rational_valuation(Fraction(1, 24), 2) == -3
    assert rational_valuation(Fraction(1, 24), 3) == -1
    assert rational_valuation(18, 3) == 2
    assert rational_valuation(0, 5) == math.inf


@pytest.mark.parametrize('prime', [1, 4, 9, 15])
def test_rejects_composite_prime(prime):
    with pytest.raises(InputError):
        RingDescriptor.padic(prime, 4)


def test_rejects_bad_precision():
    with pytest.raises(InputError):
        RingDescriptor.padic(3, 0)
    with pytest.raises(InputError):
        RingDescriptor.padic_t(3, 4, 0)


def test_rational_ring_is_exact(q3):
    assert q3.is_exact
    assert q3.embed(Fraction(2, 3)) == Fraction(2, 3)
    assert q3.valuation(Fraction(2, 9)) == -2
    assert q3.format(Fraction(9, 2)) == '9/2'
    assert q3.bold_p == 3


def test_bold_p_for_two():
    ring = RingDescriptor.padic(2, 8)
    assert ring.bold_p == 4
    assert ring.bold_p_valuation == 2


def test_rational_without_prime_has_no_bold_p(q):
    with pytest.raises(InputError):
        q.bold_p


def test_padic_embedding(z3):
    assert str(z3.embed(9)) == '1*3^2 mod 3^6'
    assert str(z3.embed(Fraction(1, 3))) == '1*3^-1 mod 3^6'
    assert str(z3.embed(3 ** 6)) == '0 mod 3^6'
    assert z3.valuation(z3.embed(18)) == 2
    assert z3.valuation(z3.zero()) == math.inf


def test_padic_arithmetic(z3):
    three = z3.embed(3)
    assert three * three == z3.embed(9)
    assert three + three == z3.embed(6)
    assert three - three == z3.zero()
    assert z3.embed(Fraction(1, 2)) * z3.embed(2) == z3.one()
    assert not (three == z3.embed(6))


def test_padic_parse_and_format(z3):
    x = z3.parse('2*3^1 mod 3^6')
    assert x == z3.embed(6)
    assert z3.parse(z3.format(x)) == x
    assert z3.parse('9/2') == z3.embed(Fraction(9, 2))
    assert z3.parse('0 mod 3^4') == z3.zero()


def test_padic_parse_wrong_base(z3):
    with pytest.raises(InputError):
        z3.parse('1*5^1 mod 5^6')


def test_padic_parse_garbage(z3):
    with pytest.raises(InputError):
        z3.parse('three')


def test_div_exact_loses_precision(z3):
    x = z3.embed(3).div_exact(3)
    assert x == z3.one()
    assert x.absprec == 5


def test_div_exact_exhausts_precision():
    ring = RingDescriptor.padic(3, 1)
    with pytest.raises(PrecisionExhausted):
        ring.one().div_exact(3)


def test_balanced_lift(z3):
    assert z3.to_fraction(z3.embed(-2)) == -2
    # the lift is an integer representative, congruent to 9/2 modulo 3^6
    assert z3.embed(z3.to_fraction(z3.embed(Fraction(9, 2)))) == z3.embed(Fraction(9, 2))
    assert z3.to_fraction(z3.embed(-27)) == -27


def test_lift_keeps_known_digits(z3):
    wider = z3.with_guard(3)
    assert wider.precision == 9
    x = wider.lift(z3.embed(5))
    assert x.ring == wider
    assert x.absprec == 6
    assert z3.lift(x) == z3.embed(5)


def test_lift_rejects_other_prime(z3):
    with pytest.raises(RingMismatch):
        RingDescriptor.padic(5, 6).lift(z3.embed(3))


def test_padic_into_rational_is_a_mismatch(q, z3):
    with pytest.raises(RingMismatch):
        q.embed(z3.one())


def test_reduce_precision(z3):
    x = z3.reduce_precision(z3.embed(1 + 3 + 27), 2)
    assert x.absprec == 2
    assert x == z3.embed(4)


def test_padic_t_truncation(z3t):
    t = z3t.t()
    assert t * t * t == z3t.zero()
    assert not (t * t == z3t.zero())
    assert z3t.order(t) == 1
    assert z3t.order(z3t.embed(3) * t) == 2
    assert z3t.order(z3t.embed(9)) == 2


def test_padic_t_parse(z3t):
    x = z3t.parse('(1*3^1 mod 3^4) + (1)*t')
    assert x == z3t.embed(3) + z3t.t()
    assert z3t.parse(z3t.format(x)) == x


def test_padic_t_to_fraction_needs_constant(z3t):
    assert z3t.to_fraction(z3t.embed(6)) == 6
    with pytest.raises(InputError):
        z3t.to_fraction(z3t.t())


def test_json_descriptor(z3t):
    assert z3t.to_json() == {'kind': 'PAdicT', 'prime': 3, 'precision': 4, 't_precision': 3}
    assert RingDescriptor.from_json(z3t.to_json()) == z3t
    assert RingDescriptor.from_json({'kind': 'Rational'}).kind is RingKind.RATIONAL
    with pytest.raises(InputError):
        RingDescriptor.from_json({'kind': 'Octonion'})


def test_random_elements_are_seeded(z3):
    first = [z3.random_element(random.Random(7), 5) for _ in range(3)]
    second = [z3.random_element(random.Random(7), 5) for _ in range(3)]
    assert first == second


def test_guard_digits(q, z3):
    assert guard_digits(q, lambda k, p: k, 10) == 0
    assert guard_digits(z3, lambda k, p: k // p, 10) == 3


def _sample(ring, rng, count):
    """Random elements of every valuation, with a few zeros known to fewer digits."""
    out = []
    for _ in range(count):
        x = ring.embed(rng.randrange(ring.prime ** ring.precision)) * ring.embed(ring.prime ** rng.randrange(4))
        if rng.random() < 0.2:
            x = ring.reduce_precision(ring.zero(), rng.randrange(1, ring.precision + 1))
        out.append(x)
    return out


@pytest.mark.parametrize('seed', range(5))
def test_ring_axioms_on_random_triples(z3, seed):
    rng = random.Random(seed)
    for _ in range(20):
        a, b, c = _sample(z3, rng, 3)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == z3.zero()
        assert a * z3.one() == a


@pytest.mark.parametrize('seed', range(5))
def test_valuation_is_additive_and_ultrametric(z3, seed):
    rng = random.Random(seed)
    for _ in range(40):
        a, b = (z3.embed(rng.randrange(1, 3 ** 6)) for _ in range(2))
        va, vb = z3.valuation(a), z3.valuation(b)
        if va + vb < 6:
            assert z3.valuation(a * b) == va + vb
        else:
            assert not a * b
        assert z3.valuation(a + b) >= min(va, vb)
        if va != vb:
            assert z3.valuation(a + b) == min(va, vb)


@pytest.mark.parametrize('n', [2, 3, 9, 10])
def test_div_exact_undoes_mul(z3, n):
    rng = random.Random(n)
    for a in _sample(z3, rng, 30) + [z3.zero(), z3.reduce_precision(z3.embed(27), 3)]:
        back = z3.div_exact(a * n, n)
        assert back == a
        assert back.absprec >= min(a.absprec, 6) - rational_valuation(n, 3)


def test_integer_round_trip(z3):
    for k in range(-364, 365):
        assert z3.to_fraction(z3.embed(k)) == k


def test_promote_takes_digits_as_exact(z3):
    wider = z3.with_guard(2)
    x = z3.embed(504)
    assert wider.lift(x).absprec == 6
    assert wider.promote(x).absprec == 8
    assert wider.promote(x) == wider.embed(504)
    assert wider.promote(z3.reduce_precision(z3.embed(27), 3)) == wider.embed(0)
    assert wider.promote(z3.reduce_precision(z3.embed(27), 3)).absprec == 8
    assert z3.lift(wider.promote(x)) == x


def test_promote_into_padic_t(z3t):
    wider = z3t.with_guard(1)
    x = z3t.embed(3) + z3t.t()
    y = wider.promote(x)
    assert wider.absprec(y) == 5
    assert z3t.lift(y) == x


def test_only_full_precision_zeros_vanish(q, z3, z3t):
    assert z3.vanishes(z3.zero())
    assert not z3.vanishes(z3.reduce_precision(z3.embed(27), 3))
    assert not z3.vanishes(z3.embed(3))
    assert z3t.vanishes(z3t.zero())
    assert not z3t.vanishes(z3t.t())
    assert q.vanishes(0)
    assert not q.vanishes(Fraction(1, 3))

# vim: ts=4 sw=4 et
