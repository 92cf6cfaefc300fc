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

# Created by rszabo50 at 2026-09-21

"""
Finite dimensional Lie algebras over Q given by structure constants.

Indices are 0-based in the API; the JSON form and all printed output use
1-based basis names e1..ed. Subspaces are lists of rational row vectors in
reduced row echelon form.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational, zeros

from fglie.Errors import InputError, RadicalError, SeriesDivergence
from fglie.FreeLie import LieSeries, lyndon_words, word_text
from fglie.Registry import Registry
from fglie.Reports import Report

Vector = Tuple[Fraction, ...]


def to_sympy(value) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def span(vectors: Sequence[Sequence], dimension: int) -> List[Vector]:
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    reduced, pivots = Matrix([[to_sympy(x) for x in row] for row in rows]).rref()
    return [tuple(from_sympy(reduced[r, c]) for c in range(dimension)) for r in range(len(pivots))]


def contains(basis: Sequence[Vector], vector: Sequence, dimension: int) -> bool:
    return len(span(list(basis) + [vector], dimension)) == len(basis)


class StructureConstants(object):
    """[e_i, e_j] = sum_k c^k_ij e_k, stored sparsely for i != j."""

    def __init__(self, dimension: int, brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = None,
                 name: str = None):
        if dimension < 1:
            raise InputError(f"dimension must be positive, got {dimension}", field='dimension')
        self.dimension = dimension
        self.name = name or f'algebra of dimension {dimension}'
        self.table = {}
        self._embedded = {}
        for (i, j), result in (brackets or {}).items():
            if not (0 <= i < dimension and 0 <= j < dimension):
                raise InputError(f"bracket [e{i + 1},e{j + 1}] out of range", field='brackets')
            vec = {k: Fraction(c) for k, c in result.items() if Fraction(c)}
            if any(not 0 <= k < dimension for k in vec):
                raise InputError(f"result of [e{i + 1},e{j + 1}] out of range", field='brackets')
            if i == j:
                if vec:
                    raise InputError(f"[e{i + 1},e{i + 1}] must vanish", field='brackets')
                continue
            neg = {k: -c for k, c in vec.items()}
            if (j, i) in self.table and self.table[(j, i)] != neg:
                raise InputError(f"[e{i + 1},e{j + 1}] and [e{j + 1},e{i + 1}] are not antisymmetric",
                                 field='brackets')
            if vec:
                self.table[(i, j)] = vec
                self.table[(j, i)] = neg

    def constant(self, i: int, j: int, k: int) -> Fraction:
        return self.table.get((i, j), {}).get(k, Fraction(0))

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dimension))

    def zero_vector(self) -> Vector:
        return (Fraction(0),) * self.dimension

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        out = [Fraction(0)] * self.dimension
        for (i, j), result in self.table.items():
            if u[i] and v[j]:
                w = Fraction(u[i]) * Fraction(v[j])
                for k, c in result.items():
                    out[k] += w * c
        return tuple(out)

    def bracket_vectors(self, u: Sequence, v: Sequence, ring) -> List:
        if ring.is_exact:
            return list(self.bracket(u, v))
        if ring not in self._embedded:
            self._embedded[ring] = {ij: {k: ring.embed(c) for k, c in r.items()} for ij, r in self.table.items()}
        table = self._embedded[ring]
        out = [ring.zero() for _ in range(self.dimension)]
        for (i, j), result in table.items():
            if u[i] and v[j]:
                w = u[i] * v[j]
                for k, c in result.items():
                    out[k] = out[k] + w * c
        return out

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad x in the basis e1..ed, columns are images."""
        m = zeros(self.dimension, self.dimension)
        for j in range(self.dimension):
            image = self.bracket(x, self.basis_vector(j))
            for k in range(self.dimension):
                m[k, j] = to_sympy(image[k])
        return m

    def bracket_span(self, first: Sequence[Vector], second: Sequence[Vector]) -> List[Vector]:
        return span([self.bracket(u, v) for u in first for v in second], self.dimension)

    def full_basis(self) -> List[Vector]:
        return [self.basis_vector(i) for i in range(self.dimension)]

    def is_abelian(self):
        return not self.table

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.dimension == other.dimension and self.table == other.table

    __hash__ = None

    def __str__(self):
        parts = []
        for (i, j), result in sorted(self.table.items()):
            if i < j:
                rhs = ' + '.join(f'{c}*e{k + 1}' for k, c in sorted(result.items())).replace('+ -', '- ')
                parts.append(f'[e{i + 1},e{j + 1}] = {rhs}')
        return f"{self.name}: " + ('; '.join(parts) if parts else 'abelian')

    def to_json(self) -> dict:
        brackets = []
        for (i, j), result in sorted(self.table.items()):
            if i < j:
                brackets.append({'i': i + 1, 'j': j + 1,
                                 'result': [{'k': k + 1, 'coeff': str(c)} for k, c in sorted(result.items())]})
        return {'dimension': self.dimension, 'brackets': brackets}

    @classmethod
    def from_json(cls, data: dict, name: str = None):
        try:
            dimension = int(data['dimension'])
            brackets = {}
            for entry in data.get('brackets', []):
                i, j = int(entry['i']) - 1, int(entry['j']) - 1
                result = {}
                for term in entry['result']:
                    k = int(term['k']) - 1
                    result[k] = result.get(k, Fraction(0)) + Fraction(str(term['coeff']))
                if (i, j) in brackets:
                    raise InputError(f"bracket [e{i + 1},e{j + 1}] given twice", field='brackets')
                brackets[(i, j)] = result
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed structure constants ({e})", field='brackets')
        return cls(dimension, brackets, name=name)


def jacobi_witness(L: StructureConstants) -> Optional[Tuple[Tuple[int, int, int], Vector]]:
    """First triple (i, j, l) with a nonzero Jacobi sum, or None."""
    e = L.full_basis()
    d = L.dimension
    for i in range(d):
        for j in range(i + 1, d):
            for l in range(j + 1, d):
                total = [a + b + c for a, b, c in zip(L.bracket(e[i], L.bracket(e[j], e[l])),
                                                       L.bracket(e[j], L.bracket(e[l], e[i])),
                                                       L.bracket(e[l], L.bracket(e[i], e[j])))]
                if any(total):
                    return (i, j, l), tuple(total)
    return None


def check_jacobi(L: StructureConstants) -> Report:
    report = Report(f'jacobi {L.name}')
    found = jacobi_witness(L)
    if found is None:
        report.check('jacobi', True)
    else:
        (i, j, l), total = found
        report.check('jacobi', False, {'triple': [i + 1, j + 1, l + 1], 'sum': list(total)})
    report.add('dimension', L.dimension)
    return report


def killing_form(L: StructureConstants) -> Matrix:
    ads = [L.ad(e) for e in L.full_basis()]
    d = L.dimension
    return Matrix(d, d, lambda i, j: (ads[i] * ads[j]).trace())


def killing_invariance_defect(L: StructureConstants, x, y, z) -> Fraction:
    """kappa([x,y],z) - kappa(x,[y,z]), zero for every Lie algebra."""
    k = killing_form(L)

    def kappa(u, v):
        return from_sympy((Matrix([[to_sympy(a) for a in u]]) * k * Matrix([to_sympy(b) for b in v]))[0, 0])

    return kappa(L.bracket(x, y), z) - kappa(x, L.bracket(y, z))


def derived_algebra(L: StructureConstants) -> List[Vector]:
    return L.bracket_span(L.full_basis(), L.full_basis())


def lower_central_series(L: StructureConstants, basis: Sequence[Vector] = None) -> List[int]:
    """
    Dimensions of U, [U,U], [U,[U,U]], ... for the subalgebra U (default L),
    stopping at 0 or at the first repeated dimension.
    """
    top = span(basis, L.dimension) if basis is not None else L.full_basis()
    dims = [len(top)]
    current = top
    while dims[-1] > 0:
        current = L.bracket_span(top, current)
        dims.append(len(current))
        if dims[-1] == dims[-2]:
            break
    return dims


def is_nilpotent(L: StructureConstants, basis: Sequence[Vector] = None) -> bool:
    return lower_central_series(L, basis)[-1] == 0


def is_ad_nilpotent(L: StructureConstants, a: Sequence) -> bool:
    return bool(L.ad(a).is_nilpotent())


def nilpotency_class(L: StructureConstants, basis: Sequence[Vector] = None) -> Optional[int]:
    """Smallest c with U^(c+1) = 0, None if U is not nilpotent."""
    dims = lower_central_series(L, basis)
    if dims[-1] != 0:
        return None
    return len(dims) - 1 if dims[0] else 0


def derived_series(L: StructureConstants, basis: Sequence[Vector] = None) -> List[int]:
    current = span(basis, L.dimension) if basis is not None else L.full_basis()
    dims = [len(current)]
    while dims[-1] > 0:
        current = L.bracket_span(current, current)
        dims.append(len(current))
        if dims[-1] == dims[-2]:
            break
    return dims


def is_solvable(L: StructureConstants, basis: Sequence[Vector] = None) -> bool:
    return derived_series(L, basis)[-1] == 0


def is_ideal(L: StructureConstants, basis: Sequence[Vector]) -> bool:
    basis = span(basis, L.dimension)
    return all(contains(basis, L.bracket(e, u), L.dimension) for e in L.full_basis() for u in basis)


def solvable_radical(L: StructureConstants) -> List[Vector]:
    """Cartan's criterion: the Killing-orthogonal complement of [L,L]."""
    derived = derived_algebra(L)
    if not derived:
        radical = L.full_basis()
    else:
        k = killing_form(L)
        b = Matrix([[to_sympy(x) for x in row] for row in derived])
        radical = span([[from_sympy(x) for x in v] for v in (b * k).nullspace()], L.dimension)
    dims = derived_series(L, radical) if radical else [0]
    if dims[-1] != 0:
        raise RadicalError(f"derived series of the radical of {L.name} stalls at {dims}")
    logging.debug(f"radical of {L.name} has dimension {len(radical)}")
    return radical


def exp_ad(L: StructureConstants, a: Sequence, b: Sequence) -> Vector:
    """e^{ad a} b, a must be ad-nilpotent."""
    out = list(Fraction(x) for x in b)
    term = tuple(Fraction(x) for x in b)
    for n in range(1, L.dimension + 2):
        term = tuple(x / n for x in L.bracket(a, term))
        if not any(term):
            return tuple(out)
        out = [x + y for x, y in zip(out, term)]
    raise SeriesDivergence(f"ad {list(a)} is not nilpotent in {L.name}")


def radical_nilpotency_report(L: StructureConstants) -> Report:
    report = Report(f'radical {L.name}')
    found = jacobi_witness(L)
    if not report.check('jacobi', found is None, found):
        return report
    radical = solvable_radical(L)
    report.check('radical is an ideal', is_ideal(L, radical) if radical else True)
    report.check('radical is solvable', is_solvable(L, radical) if radical else True)
    report.add('radical_dimension', len(radical))
    report.add('radical_basis', [list(v) for v in radical])
    series = lower_central_series(L, radical) if radical else [0]
    report.add('radical_lower_central_series', series)
    if series[-1] != 0:
        report.flag('radical not nilpotent',
                    f"the solvable radical of {L.name} has lower central series {series}, it cannot be "
                    f"the Lie algebra of a finitely generated standard group")
    return report


def direct_sum(first: StructureConstants, second: StructureConstants, name: str = None) -> StructureConstants:
    shift = first.dimension
    brackets = dict(first.table)
    for (i, j), result in second.table.items():
        brackets[(i + shift, j + shift)] = {k + shift: c for k, c in result.items()}
    return StructureConstants(first.dimension + second.dimension, brackets,
                              name=name or f'{first.name} + {second.name}')


def abelian(d: int = 1) -> StructureConstants:
    return StructureConstants(d, {}, name=f'abelian:{d}')


def heisenberg() -> StructureConstants:
    return StructureConstants(3, {(0, 1): {2: 1}}, name='heisenberg')


def sl2() -> StructureConstants:
    # basis h, e, f
    return StructureConstants(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, name='sl2')


def solvable2() -> StructureConstants:
    return StructureConstants(2, {(0, 1): {1: 1}}, name='solvable2')


def sl2_plus_heisenberg() -> StructureConstants:
    return direct_sum(sl2(), heisenberg(), name='sl2+heisenberg')


def free_nilpotent(k: int = 2, c: int = 3) -> StructureConstants:
    """Free nilpotent algebra of class c on k generators, basis = Lyndon words of length <= c."""
    words = lyndon_words(k, c)
    index = {w: n for n, w in enumerate(words)}
    brackets = {}
    for i, u in enumerate(words):
        for j in range(i + 1, len(words)):
            w = words[j]
            if len(u) + len(w) > c:
                continue
            product = LieSeries(k, c, {u: 1}).bracket(LieSeries(k, c, {w: 1}))
            if product.terms:
                brackets[(i, j)] = {index[v]: coeff for v, coeff in product.terms.items()}
    algebra = StructureConstants(len(words), brackets, name=f'free-nilpotent:{k}:{c}')
    algebra.basis_names = [word_text(w) for w in words]
    return algebra


Registry().register('algebra', 'abelian', abelian)
Registry().register('algebra', 'heisenberg', heisenberg)
Registry().register('algebra', 'sl2', sl2)
Registry().register('algebra', 'solvable2', solvable2)
Registry().register('algebra', 'sl2+heisenberg', sl2_plus_heisenberg)
Registry().register('algebra', 'free-nilpotent', free_nilpotent)


def builtin_algebra(name: str) -> StructureConstants:
    factory, params = Registry().lookup('algebra', name, field='structure')
    return factory(*params)

# vim: ts=4 sw=4 et
