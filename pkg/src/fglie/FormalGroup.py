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

# Created by rszabo50 at 2026-09-25

"""
Formal group laws F(x, y) = x + y + B(x, y) + ..., the points of the
group G they define, and the Lie algebra read off from B.

A law of dimension d is d TruncSeries in 2d variables; variables 0..d-1
are the left factor x, d..2d-1 the right factor y.
"""

import logging
import random
from typing import Dict, List, Sequence

from sympy import Matrix

from fglie.Bch import sample_lattice_point
from fglie.CoeffRing import RingDescriptor
from fglie.Errors import InputError, LawError, RingMismatch, SeriesDivergence, ValuationError
from fglie.LieAlgebra import StructureConstants, jacobi_witness, to_sympy, from_sympy
from fglie.PowerSeries import TruncSeries, variables
from fglie.Registry import Registry
from fglie.Reports import Report
from fglie.UserConfig import UserConfig


class FormalGroupLaw(object):

    def __init__(self, components: Sequence[TruncSeries], name: str = None):
        if not components:
            raise InputError("a law needs at least one component", field='components')
        first = components[0]
        d = len(components)
        for f in components:
            if f.nvars != 2 * d:
                raise InputError(f"components of a {d} dimensional law need {2 * d} variables, got {f.nvars}",
                                 field='components')
            first._check_shape(f)
        self.components = list(components)
        self.dimension = d
        self.ring = first.ring
        self.degree_bound = first.degree_bound
        self.name = name or f'law of dimension {d}'

    def variable_names(self) -> List[str]:
        d = self.dimension
        return [f'x{i + 1}' for i in range(d)] + [f'y{i + 1}' for i in range(d)]

    def over(self, ring: RingDescriptor) -> 'FormalGroupLaw':
        """The same law with coefficients moved to `ring` (guard digits, or Q to Z_p)."""
        if ring == self.ring:
            return self
        if self.ring.is_exact:
            comps = [f.map_coefficients(ring, ring.embed) for f in self.components]
        elif ring.is_exact:
            raise RingMismatch(f"cannot move the {self.ring} law {self.name} to {ring}")
        else:
            comps = [f.map_coefficients(ring) for f in self.components]
        return FormalGroupLaw(comps, name=self.name)

    def __str__(self):
        names = self.variable_names()
        return '\n'.join(f'F{i + 1} = {f.format(names)}' for i, f in enumerate(self.components))

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'dimension': self.dimension,
            'ring': self.ring.to_json(),
            'degree_bound': self.degree_bound,
            'components': [f.to_json() for f in self.components],
        }

    @classmethod
    def from_json(cls, data: dict, ring: RingDescriptor = None):
        try:
            ring = ring or RingDescriptor.from_json(data['ring'])
            d = int(data['dimension'])
            comps = [TruncSeries.from_json(c, ring) for c in data['components']]
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed law ({e})", field='components')
        if len(comps) != d:
            raise InputError(f"dimension {d} but {len(comps)} components", field='components')
        if 'degree_bound' in data and int(data['degree_bound']) != comps[0].degree_bound:
            raise InputError("degree_bound disagrees with the components", field='degree_bound')
        return cls(comps, name=data.get('name'))


def _law(ring: RingDescriptor, d: int, degree_bound: int, components: List[Dict], name: str) -> FormalGroupLaw:
    if degree_bound < 2:
        raise InputError(f"{name} needs a degree bound of at least 2, got {degree_bound}", field='degree')

    def exponent(powers):
        e = [0] * (2 * d)
        for index, k in powers.items():
            e[index] = k
        return tuple(e)

    series = []
    for terms in components:
        series.append(TruncSeries(ring, 2 * d, degree_bound, {exponent(p): c for p, c in terms}))
    return FormalGroupLaw(series, name=name)


def additive(ring: RingDescriptor, degree_bound: int, d: int = 1) -> FormalGroupLaw:
    return _law(ring, d, degree_bound, [[({i: 1}, 1), ({d + i: 1}, 1)] for i in range(d)], f'additive:{d}')


def multiplicative(ring: RingDescriptor, degree_bound: int) -> FormalGroupLaw:
    return _law(ring, 1, degree_bound, [[({0: 1}, 1), ({1: 1}, 1), ({0: 1, 1: 1}, 1)]], 'multiplicative')


def heisenberg(ring: RingDescriptor, degree_bound: int) -> FormalGroupLaw:
    return _law(ring, 3, degree_bound, [
        [({0: 1}, 1), ({3: 1}, 1)],
        [({1: 1}, 1), ({4: 1}, 1)],
        [({2: 1}, 1), ({5: 1}, 1), ({0: 1, 4: 1}, 1)],
    ], 'heisenberg')


def unitriangular_coordinates(n: int) -> List[tuple]:
    """Matrix positions (i, j), i < j, in row-major order; coordinate k is entry coordinates[k]."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def unitriangular(ring: RingDescriptor, degree_bound: int, n: int = 3) -> FormalGroupLaw:
    """(1 + X)(1 + Y) - 1 on strictly upper triangular n x n matrices."""
    if n < 2:
        raise InputError(f"unitriangular needs n >= 2, got {n}", field='law')
    coords = unitriangular_coordinates(n)
    index = {pos: k for k, pos in enumerate(coords)}
    d = len(coords)
    components = []
    for (i, j) in coords:
        terms = [({index[(i, j)]: 1}, 1), ({d + index[(i, j)]: 1}, 1)]
        for k in range(i + 1, j):
            terms.append(({index[(i, k)]: 1, d + index[(k, j)]: 1}, 1))
        components.append(terms)
    return _law(ring, d, degree_bound, components, f'unitriangular:{n}')


def affine(ring: RingDescriptor, degree_bound: int) -> FormalGroupLaw:
    """The group of maps t -> (1 + a) t + b in coordinates (a, b)."""
    return _law(ring, 2, degree_bound, [
        [({0: 1}, 1), ({2: 1}, 1), ({0: 1, 2: 1}, 1)],
        [({1: 1}, 1), ({3: 1}, 1), ({0: 1, 3: 1}, 1)],
    ], 'affine')


Registry().register('law', 'additive', additive)
Registry().register('law', 'multiplicative', multiplicative)
Registry().register('law', 'heisenberg', heisenberg)
Registry().register('law', 'unitriangular', unitriangular)
Registry().register('law', 'affine', affine)


def builtin_law(name: str, ring: RingDescriptor, degree_bound: int) -> FormalGroupLaw:
    factory, params = Registry().lookup('law', name, field='law')
    return factory(ring, degree_bound, *params)


def _first_failure(difference: TruncSeries, names: Sequence[str]):
    for e, c in difference.items():
        if not c:
            continue
        factors = '*'.join(n if k == 1 else f'{n}^{k}' for n, k in zip(names, e) if k) or '1'
        return {'monomial': factors, 'coefficient': difference.ring.format(c)}
    return None


def check_axioms(F: FormalGroupLaw) -> Report:
    """F(x,0) = x, F(0,y) = y and F(F(x,y),z) = F(x,F(y,z)) up to the degree bound."""
    report = Report(f'axioms {F.name}', F.ring)
    d, ring, bound = F.dimension, F.ring, F.degree_bound
    xs = variables(ring, d, bound)
    zero = TruncSeries.zero(ring, d, bound)
    names = [f'x{i + 1}' for i in range(d)]
    for i, f in enumerate(F.components):
        diff = f.substitute(xs + [zero] * d) - xs[i]
        report.check('F(x,0) = x', diff.is_zero(), dict(component=i + 1, **(_first_failure(diff, names) or {})))
        diff = f.substitute([zero] * d + xs) - xs[i]
        report.check('F(0,y) = y', diff.is_zero(), dict(component=i + 1, **(_first_failure(diff, names) or {})))
    v3 = variables(ring, 3 * d, bound)
    x, y, z = v3[:d], v3[d:2 * d], v3[2 * d:]
    xy = [f.substitute(x + y) for f in F.components]
    yz = [f.substitute(y + z) for f in F.components]
    names3 = [f'x{i + 1}' for i in range(d)] + [f'y{i + 1}' for i in range(d)] + [f'z{i + 1}' for i in range(d)]
    for i, f in enumerate(F.components):
        diff = f.substitute(xy + z) - f.substitute(x + yz)
        report.check('associativity', diff.is_zero(), dict(component=i + 1, **(_first_failure(diff, names3) or {})))
    report.add('law', F.name)
    report.add('degree_bound', bound)
    return report


def quadratic_part(F: FormalGroupLaw) -> List[Dict[tuple, object]]:
    """b[k][(i, j)]: coefficient of x_i y_j in F_k; pure x or pure y quadratic terms raise LawError."""
    d = F.dimension
    out = []
    for k, f in enumerate(F.components):
        mixed = {}
        for e, c in f.homogeneous(2).items():
            if not c:
                continue
            left = [i for i in range(d) for _ in range(e[i])]
            right = [j for j in range(d) for _ in range(e[d + j])]
            if len(left) == 1 and len(right) == 1:
                mixed[(left[0], right[0])] = c
            else:
                raise LawError(f"F{k + 1} has the pure quadratic term {F.ring.format(c)}*"
                               f"{'*'.join(F.variable_names()[n] for n in left + [d + r for r in right])}, "
                               f"the law is not normalised")
        out.append(mixed)
    return out


def lie_from_law(F: FormalGroupLaw) -> StructureConstants:
    """Structure constants c^k_ij = b^k_ij - b^k_ji from C(x,y) = B(x,y) - B(y,x), lifted to Q."""
    d = F.dimension
    b = quadratic_part(F)
    brackets = {}
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            result = {}
            for k in range(d):
                c = F.ring.to_fraction(b[k].get((i, j), 0)) - F.ring.to_fraction(b[k].get((j, i), 0))
                if c:
                    result[k] = c
            if result and i < j:
                brackets[(i, j)] = result
    algebra = StructureConstants(d, brackets, name=f'lie({F.name})')
    found = jacobi_witness(algebra)
    if found is not None:
        (i, j, l), total = found
        raise LawError(f"bracket of {F.name} fails Jacobi on (e{i + 1},e{j + 1},e{l + 1}); "
                       f"the law is invalid or its degree bound too small")
    logging.debug(f"{algebra}")
    return algebra


class GroupPoint(object):
    """A point of G: d coordinates in the maximal ideal of the law's ring."""
    __hash__ = None

    def __init__(self, law: FormalGroupLaw, coordinates: Sequence):
        if len(coordinates) != law.dimension:
            raise InputError(f"{law.name} points have {law.dimension} coordinates, got {len(coordinates)}",
                             field='coordinates')
        self.law = law
        self.coordinates = [law.ring.embed(c) for c in coordinates]
        if self._has_prime():
            for c in self.coordinates:
                if law.ring.order(c) < 1:
                    raise ValuationError(f"coordinate {law.ring.format(c)} is not in the maximal ideal",
                                         field='coordinates')

    def _has_prime(self):
        return self.law.ring.prime is not None

    @classmethod
    def identity(cls, law: FormalGroupLaw):
        return cls(law, [0] * law.dimension)

    @classmethod
    def parse(cls, law: FormalGroupLaw, text: str):
        parts = [p for p in str(text).split(',')]
        return cls(law, [law.ring.parse(p) for p in parts])

    @property
    def level(self):
        """Largest i with the point in G_i; None over Q without a designated prime."""
        if not self._has_prime():
            return None
        return min(self.law.ring.order(c) for c in self.coordinates)

    def in_bold_p(self) -> bool:
        """Membership in G(pR): every coordinate divisible by p (by 4 when p = 2)."""
        ring = self.law.ring
        return all(ring.valuation(c) >= ring.bold_p_valuation for c in self.coordinates)

    def is_identity(self):
        return not any(self.coordinates)

    def __eq__(self, other):
        if not isinstance(other, GroupPoint):
            return NotImplemented
        return all(a == b for a, b in zip(self.coordinates, other.coordinates))

    def __mul__(self, other):
        return group_mul(self.law, self, other)

    def inverse(self):
        return group_inverse(self.law, self)

    def format(self) -> List[str]:
        return [self.law.ring.format(c) for c in self.coordinates]

    def __str__(self):
        return '(' + ', '.join(self.format()) + ')'

    __repr__ = __str__


def _evaluate(F: FormalGroupLaw, x: Sequence, y: Sequence) -> List:
    return [f.eval_at_point(list(x) + list(y)) for f in F.components]


def group_mul(F: FormalGroupLaw, x: GroupPoint, y: GroupPoint) -> GroupPoint:
    return GroupPoint(F, _evaluate(F, x.coordinates, y.coordinates))


def group_inverse(F: FormalGroupLaw, x: GroupPoint) -> GroupPoint:
    """
    z with F(x, z) = 0. Newton steps over Q (exact for laws affine in y),
    the contraction z <- z - F(x, z) over p-adic rings.
    """
    ring, d = F.ring, F.dimension
    cap = UserConfig().setting('max_inverse_iterations')
    z = [-c for c in x.coordinates]
    if ring.is_exact:
        jacobian = [[f.partial(d + j) for j in range(d)] for f in F.components]
    for step in range(cap):
        residual = _evaluate(F, x.coordinates, z)
        if not any(residual):
            logging.debug(f"inverse of {x} found after {step} steps")
            return GroupPoint(F, z)
        if ring.is_exact:
            point = list(x.coordinates) + z
            j = Matrix(d, d, lambda r, c: to_sympy(jacobian[r][c].eval_at_point(point)))
            delta = j.LUsolve(Matrix([to_sympy(v) for v in residual]))
            z = [zc - from_sympy(delta[i]) for i, zc in enumerate(z)]
        else:
            z = [zc - r for zc, r in zip(z, residual)]
    raise SeriesDivergence(f"inverting {x} in {F.name} did not converge in {cap} steps")


def sample_point(F: FormalGroupLaw, rng: random.Random, bound: int = None) -> GroupPoint:
    """A point of G(pR) with p-divisible coordinates drawn per the ring's sampling rule."""
    return GroupPoint(F, sample_lattice_point(F.ring, F.dimension, rng, bound))

# vim: ts=4 sw=4 et
