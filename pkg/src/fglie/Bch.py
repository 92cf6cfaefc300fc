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

# Created by rszabo50 at 2026-09-23

"""
The Baker-Campbell-Hausdorff series H(x1, x2) = log(e^x1 e^x2) in the
Lyndon basis, its p-adic valuation audit, and evaluation of H in concrete
Lie algebras given by structure constants.
"""

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence

from sympy import Matrix, eye, zeros

from fglie.CoeffRing import RingDescriptor, rational_valuation
from fglie.Errors import InputError, SeriesDivergence, ValuationError
from fglie.FreeLie import AssocSeries, LieSeries, bracket_text, bracketing, project_to_lie, word_text
from fglie.LieAlgebra import StructureConstants, nilpotency_class, to_sympy
from fglie.Reports import Report
from fglie.UserConfig import UserConfig


def valuation_bound(n: int, p: int) -> Fraction:
    """Lower bound -(n-1)/(p-1) for v_p of a degree n coefficient."""
    return Fraction(-(n - 1), p - 1)


@dataclass
class BchTable(object):
    degree_bound: int
    series: LieSeries

    def terms(self, primes: Iterable[int] = ()) -> List[dict]:
        out = []
        for word, coeff in self.series.items():
            n = len(word)
            entry = {
                'lyndon_word': word_text(word),
                'degree': n,
                'coefficient': str(coeff),
                'bracket': bracket_text(bracketing(word)),
            }
            if primes:
                entry['valuations'] = {str(p): {'valuation': rational_valuation(coeff, p),
                                                'bound': str(valuation_bound(n, p))} for p in primes}
            out.append(entry)
        return out

    def audit(self, primes: Iterable[int]) -> dict:
        out = {}
        for p in primes:
            ok = all(rational_valuation(c, p) >= valuation_bound(len(w), p) for w, c in self.series.terms.items())
            out[str(p)] = 'pass' if ok else 'fail'
        return out

    def to_json(self, primes: Iterable[int] = (2, 3, 5, 7)) -> dict:
        primes = list(primes)
        return {
            'degree_bound': self.degree_bound,
            'basis': 'lyndon',
            'terms': self.terms(primes),
            'valuation_audit': self.audit(primes),
        }

    def get_header(self):
        return f"{'word'.ljust(12)} {'deg'.rjust(4)}   {'coefficient'.ljust(16)} bracket"

    def to_text(self, primes: Iterable[int] = (2, 3, 5, 7)) -> str:
        lines = [f"BCH series to degree {self.degree_bound} (Lyndon basis)", self.get_header()]
        for term in self.terms():
            lines.append(f"{term['lyndon_word'].ljust(12)} {str(term['degree']).rjust(4)}   "
                         f"{term['coefficient'].ljust(16)} {term['bracket']}")
        audit = self.audit(primes)
        lines.append('valuation audit: ' + ', '.join(f'p={p}: {audit[p]}' for p in sorted(audit, key=int)))
        return '\n'.join(lines)


@lru_cache(maxsize=None)
def _bch_lie_series(degree_bound: int) -> LieSeries:
    x1 = AssocSeries.letter(2, degree_bound, 1)
    x2 = AssocSeries.letter(2, degree_bound, 2)
    product = x1.exp() * x2.exp()
    u = product - AssocSeries.one(2, degree_bound)
    series = project_to_lie(u.log1p())
    logging.debug(f"BCH series to degree {degree_bound}: {len(series.terms)} nonzero Lyndon terms")
    return series


def bch_series(degree_bound: int) -> BchTable:
    if degree_bound < 1:
        raise InputError(f"degree must be at least 1, got {degree_bound}", field='degree')
    return BchTable(degree_bound, _bch_lie_series(degree_bound))


def audit_valuations(table: BchTable, primes: Iterable[int] = None) -> Report:
    primes = list(primes or UserConfig().setting('audit_primes'))
    report = Report(f'BCH valuation audit to degree {table.degree_bound}')
    for word, coeff in table.series.items():
        n = len(word)
        for p in primes:
            v = rational_valuation(coeff, p)
            bound = valuation_bound(n, p)
            report.check(f'p={p}', v >= bound,
                         {'lyndon_word': word_text(word), 'coefficient': coeff, 'valuation': v, 'bound': bound})
    report.add('degree_bound', table.degree_bound)
    report.add('primes', primes)
    report.add('valuation_audit', table.audit(primes))
    return report


def factorial_audit(n_max: int, primes: Iterable[int] = None) -> Report:
    """v_p(n!) <= (n-1)/(p-1), the estimate behind convergence of exp and log on pM."""
    primes = list(primes or UserConfig().setting('audit_primes'))
    report = Report(f'factorial valuations to {n_max}')
    for n in range(1, n_max + 1):
        for p in primes:
            v = rational_valuation(math.factorial(n), p)
            report.check(f'p={p}', v <= Fraction(n - 1, p - 1), {'n': n, 'valuation': v})
    return report


def bch_symmetry_holds(degree_bound: int) -> bool:
    """H(a,b) = -H(-b,-a) on the series itself."""
    series = _bch_lie_series(degree_bound)
    x1 = LieSeries.generator(2, degree_bound, 1)
    x2 = LieSeries.generator(2, degree_bound, 2)
    swapped = series.substitute_generators([-x2, -x1])
    return swapped == -series


def _padic_degree(ring: RingDescriptor, v0) -> int:
    """Largest degree whose BCH terms can still be nonzero modulo p^N."""
    p, target = ring.prime, ring.precision
    n = 1
    while n * v0 + valuation_bound(n, p) < target:
        n += 1
    return max(1, n - 1)


def bch_eval(L: StructureConstants, a: Sequence, b: Sequence, degree: int = None,
             ring: RingDescriptor = None) -> List:
    """
    H(a, b) computed from the structure constants of L, over Q unless `ring` is given.

    Over Q the algebra must be nilpotent; the sum stops at its class and is
    exact. Over p-adic rings a and b must lie in pL; the sum stops where
    every later term vanishes modulo p^N, and each degree n part must have
    valuation at least n*v0 - (n-1)/(p-1) or SeriesDivergence is raised.
    """
    ring = ring or RingDescriptor.rational()
    d = L.dimension
    if len(a) != d or len(b) != d:
        raise InputError(f"coordinate vectors must have {d} entries", field='coordinates')
    a = [ring.embed(x) for x in a]
    b = [ring.embed(x) for x in b]
    cls = nilpotency_class(L)
    reduced_to = None
    if ring.is_exact:
        if cls is None:
            raise SeriesDivergence(f"BCH over Q does not terminate in the non nilpotent {L.name}")
        n = max(cls, 1)
        if degree is not None and degree < n:
            logging.warning(f"BCH truncated at degree {degree} below the class {cls} of {L.name}")
            n = degree
        work = ring
    else:
        v0 = min([ring.valuation(x) for x in a + b] + [ring.precision])
        if v0 < ring.bold_p_valuation:
            raise ValuationError(f"BCH arguments must be divisible by {ring.bold_p}", field='coordinates')
        n = _padic_degree(ring, v0)
        if cls is not None:
            n = min(n, max(cls, 1))
        if degree is not None:
            n = min(n, degree)
        cap = UserConfig().setting('bch_max_degree')
        if n > cap:
            reduced_to = math.floor((cap + 1) * v0 + valuation_bound(cap + 1, ring.prime))
            logging.warning(f"BCH capped at degree {cap}, result known modulo {ring.prime}^{reduced_to}")
            n = cap
        work = ring.with_guard(math.floor(Fraction(n - 1, ring.prime - 1)))
        a = [work.promote(x) for x in a]
        b = [work.promote(x) for x in b]
    series = _bch_lie_series(n)

    def scale(c, u):
        c = c if work.is_exact else work.embed(c)
        return [c * x for x in u]

    def evaluate(part):
        return part.evaluate([a, b],
                             lambda u, v: L.bracket_vectors(u, v, work),
                             lambda u, v: [x + y for x, y in zip(u, v)],
                             scale,
                             [work.zero() for _ in range(d)])

    if ring.is_exact:
        return evaluate(series)
    value = [work.zero() for _ in range(d)]
    for k in range(1, n + 1):
        part = evaluate(series.homogeneous(k))
        low, bound = min(work.valuation(x) for x in part), k * v0 + valuation_bound(k, ring.prime)
        if low < bound:
            raise SeriesDivergence(f"degree {k} part of H({L.name}) has valuation {low} below {bound}, "
                                   f"the truncation is not certified")
        value = [x + y for x, y in zip(value, part)]
    value = [ring.lift(x) for x in value]
    if reduced_to is not None:
        value = [ring.reduce_precision(x, reduced_to) for x in value]
    return value


def sample_lattice_point(ring: RingDescriptor, dimension: int, rng: random.Random, bound: int = None) -> List:
    """A point of p*lattice: p times a uniform residue (p-adic) or times an integer in [-B, B] (Q)."""
    bound = bound if bound is not None else UserConfig().setting('sample_bound')
    scale = ring.embed(ring.bold_p)
    return [scale * ring.random_element(rng, bound) for _ in range(dimension)]


def gamma_group_check(L: StructureConstants, ring: RingDescriptor, trials: int, seed: int,
                      bound: int = None) -> Report:
    """Group axioms of (pL, H) on sampled elements."""
    report = Report(f'gamma group axioms for {L.name} over {ring}', ring)
    rng = random.Random(seed)
    zero = [ring.zero() for _ in range(L.dimension)]

    def same(u, v):
        return all(x == y for x, y in zip(u, v))

    for trial in range(trials):
        a = sample_lattice_point(ring, L.dimension, rng, bound)
        b = sample_lattice_point(ring, L.dimension, rng, bound)
        c = sample_lattice_point(ring, L.dimension, rng, bound)
        witness = {'trial': trial, 'a': [ring.format(x) for x in a], 'b': [ring.format(x) for x in b],
                   'c': [ring.format(x) for x in c]}
        report.check('identity', same(bch_eval(L, a, zero, ring=ring), a) and same(bch_eval(L, zero, a, ring=ring), a),
                     witness)
        report.check('inverse', same(bch_eval(L, a, [-x for x in a], ring=ring), zero), witness)
        left = bch_eval(L, bch_eval(L, a, b, ring=ring), c, ring=ring)
        right = bch_eval(L, a, bch_eval(L, b, c, ring=ring), ring=ring)
        report.check('associativity', same(left, right), witness)
    report.add('algebra', L.name)
    report.add('trials', trials)
    report.add('seed', seed)
    return report


def _strictly_upper(n: int, rng: random.Random, bound: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = to_sympy(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
    return m


def nilpotent_exp(x: Matrix) -> Matrix:
    n = x.shape[0]
    out = eye(n)
    term = eye(n)
    for k in range(1, n):
        term = term * x / k
        out = out + term
    return out


def unipotent_log(m: Matrix) -> Matrix:
    n = m.shape[0]
    x = m - eye(n)
    out = zeros(n, n)
    term = eye(n)
    for k in range(1, n):
        term = term * x
        out = out + term * to_sympy(Fraction((-1) ** (k + 1), k))
    return out


def matrix_oracle_check(trials: int, seed: int, sizes: Sequence[int] = (3, 4, 5, 6), bound: int = None) -> Report:
    """
    Lyndon-basis BCH evaluated on strictly upper triangular rational matrices
    against log(e^X e^Y) from the terminating matrix series.
    """
    bound = bound if bound is not None else UserConfig().setting('sample_bound')
    report = Report('BCH against the nilpotent matrix oracle')
    rng = random.Random(seed)
    for trial in range(trials):
        n = sizes[trial % len(sizes)]
        x = _strictly_upper(n, rng, bound)
        y = _strictly_upper(n, rng, bound)
        expected = unipotent_log(nilpotent_exp(x) * nilpotent_exp(y))
        series = _bch_lie_series(max(n - 1, 1))
        got = series.evaluate([x, y], lambda u, v: u * v - v * u, lambda u, v: u + v,
                              lambda c, u: u * to_sympy(c), zeros(n, n))
        report.check(f'size {n}', got == expected, {'trial': trial, 'X': x.tolist(), 'Y': y.tolist()})
    report.add('trials', trials)
    report.add('seed', seed)
    report.add('sizes', list(sizes))
    return report

# vim: ts=4 sw=4 et
