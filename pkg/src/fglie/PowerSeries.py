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

# Created by rszabo50 at 2026-09-16

"""
Multivariate power series truncated above a total degree bound D.

Terms are kept in a dict {exponent tuple: coefficient} without exponents of
total degree above D. Zero coefficients are dropped once they vanish to the
full precision of the ring; a p-adic zero known to fewer digits stays.
Variable indices are 0-based in the API and printed as x1, x2, ...
"""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from fglie.CoeffRing import RingDescriptor
from fglie.Errors import InputError, RingMismatch, ValuationError

Exponent = Tuple[int, ...]


def _graded_key(e: Exponent):
    return sum(e), tuple(-k for k in e)


def prune(ring: RingDescriptor, terms: Dict) -> Dict:
    return {e: c for e, c in terms.items() if not ring.vanishes(c)}


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree_bound: int) -> Tuple[Exponent, ...]:
    """All exponents of total degree <= degree_bound, graded lexicographic (x1 > x2 > ...)."""

    def compositions(total, slots):
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, slots - 1):
                yield (first,) + rest

    out = []
    for degree in range(degree_bound + 1):
        out.extend(compositions(degree, nvars))
    return tuple(out)


class TruncSeries(object):
    __slots__ = ('ring', 'nvars', 'degree_bound', 'terms')
    __hash__ = None

    def __init__(self, ring: RingDescriptor, nvars: int, degree_bound: int, terms: Dict = None):
        if nvars < 1:
            raise InputError(f"nvars must be positive, got {nvars}", field='nvars')
        if degree_bound < 1:
            raise InputError(f"degree bound must be positive, got {degree_bound}", field='degree_bound')
        self.ring = ring
        self.nvars = nvars
        self.degree_bound = degree_bound
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise InputError(f"exponent {e} does not fit {nvars} variables", field='exponents')
            if sum(e) > degree_bound:
                continue
            c = ring.embed(c)
            if not ring.vanishes(c):
                self.terms[e] = c

    @classmethod
    def _make(cls, ring, nvars, degree_bound, terms):
        # trusted constructor: terms already embedded, truncated and free of vanishing coefficients
        out = cls.__new__(cls)
        out.ring = ring
        out.nvars = nvars
        out.degree_bound = degree_bound
        out.terms = terms
        return out

    @classmethod
    def zero(cls, ring, nvars, degree_bound):
        return cls._make(ring, nvars, degree_bound, {})

    @classmethod
    def constant(cls, ring, nvars, degree_bound, value):
        return cls(ring, nvars, degree_bound, {(0,) * nvars: value})

    @classmethod
    def one(cls, ring, nvars, degree_bound):
        return cls.constant(ring, nvars, degree_bound, 1)

    @classmethod
    def variable(cls, ring, nvars, degree_bound, index: int):
        e = [0] * nvars
        e[index] = 1
        return cls(ring, nvars, degree_bound, {tuple(e): 1})

    @classmethod
    def monomial(cls, ring, nvars, degree_bound, exponent: Sequence[int], coefficient=1):
        return cls(ring, nvars, degree_bound, {tuple(exponent): coefficient})

    def _like(self, terms):
        return TruncSeries._make(self.ring, self.nvars, self.degree_bound, terms)

    def _check_shape(self, other):
        if not isinstance(other, TruncSeries):
            raise InputError(f"expected a TruncSeries, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"series over {self.ring} and {other.ring}")
        if other.nvars != self.nvars or other.degree_bound != self.degree_bound:
            raise InputError(f"shape mismatch: ({self.nvars} vars, D={self.degree_bound}) "
                             f"vs ({other.nvars} vars, D={other.degree_bound})", field='series')

    def items(self) -> List:
        return sorted(self.terms.items(), key=lambda item: _graded_key(item[0]))

    def coefficient(self, exponent: Sequence[int]):
        return self.terms.get(tuple(exponent), self.ring.zero())

    def is_zero(self):
        return not any(self.terms.values())

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(self.ring, self.nvars, self.degree_bound, other)
        self._check_shape(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = terms[e] + c
                if not self.ring.vanishes(s):
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(self.ring, self.nvars, self.degree_bound, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.ring.embed(c) if not self.ring.is_exact else c
        terms = {}
        for e, v in self.terms.items():
            w = c * v
            if not self.ring.vanishes(w):
                terms[e] = w
        return self._like(terms)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check_shape(other)
        bound = self.degree_bound
        terms = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > bound:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in terms:
                    terms[e] = terms[e] + c1 * c2
                else:
                    terms[e] = c1 * c2
        return self._like(prune(self.ring, terms))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = TruncSeries.one(self.ring, self.nvars, self.degree_bound)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.nvars != self.nvars or other.degree_bound != self.degree_bound or other.ring != self.ring:
            return False
        return (self - other).is_zero()

    def truncated(self, degree_bound: int):
        return TruncSeries._make(self.ring, self.nvars, degree_bound,
                                 {e: c for e, c in self.terms.items() if sum(e) <= degree_bound})

    def homogeneous(self, k: int):
        return self._like({e: c for e, c in self.terms.items() if sum(e) == k})

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def order(self):
        """Largest k with the series in I^k (None for the zero series)."""
        return min((sum(e) for e, c in self.terms.items() if c), default=None)

    def map_coefficients(self, ring: RingDescriptor, fn=None):
        """Move the series to another ring, e.g. a guard-digit sibling of its own."""
        fn = fn or ring.lift
        terms = {}
        for e, c in self.terms.items():
            v = fn(c)
            if not ring.vanishes(v):
                terms[e] = v
        return TruncSeries._make(ring, self.nvars, self.degree_bound, terms)

    def substitute(self, args: Sequence['TruncSeries'], constants: bool = False):
        """
        f(args[0], ..., args[n-1]) truncated at the common bound of args.

        Arguments must vanish at 0 unless constants=True; that relaxed form is
        only exact when f is a polynomial of degree <= D.
        """
        if len(args) != self.nvars:
            raise InputError(f"expected {self.nvars} arguments, got {len(args)}", field='args')
        first = args[0]
        for g in args:
            first._check_shape(g)
            if g.ring != self.ring:
                raise RingMismatch(f"series over {self.ring} substituted with {g.ring}")
            if not constants and g.constant_term():
                raise InputError(f"argument {g} has a nonzero constant term", field='args')
        powers = [[TruncSeries.one(first.ring, first.nvars, first.degree_bound)] for _ in args]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * args[i])
            return cache[k]

        out = {}
        for e, c in self.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            if term is None:
                term = powers[0][0]
            for e2, c2 in term.terms.items():
                v = c * c2
                out[e2] = out[e2] + v if e2 in out else v
        return TruncSeries._make(first.ring, first.nvars, first.degree_bound, prune(first.ring, out))

    def partial(self, i: int):
        if not 0 <= i < self.nvars:
            raise InputError(f"variable index {i} out of range for {self.nvars} variables", field='i')
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            v = c * k
            if not self.ring.vanishes(v):
                terms[e[:i] + (k - 1,) + e[i + 1:]] = v
        return self._like(terms)

    def specialize(self, values: Dict[int, object]):
        """Evaluate the variables in `values` (index -> coefficient), keep the others in order."""
        keep = [i for i in range(self.nvars) if i not in values]
        if not keep:
            raise InputError("specialize needs at least one remaining variable, use eval_at_point",
                             field='values')
        values = {i: self.ring.embed(v) if not self.ring.is_exact else v for i, v in values.items()}
        cache = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = values[i] ** k if self.ring.is_exact else _ring_power(values[i], k, self.ring)
            return cache[(i, k)]

        out = {}
        for e, c in self.terms.items():
            v = c
            for i in values:
                if e[i]:
                    v = v * power(i, e[i])
            e2 = tuple(e[i] for i in keep)
            out[e2] = out[e2] + v if e2 in out else v
        return TruncSeries._make(self.ring, len(keep), self.degree_bound, prune(self.ring, out))

    def eval_at_point(self, point: Sequence):
        if len(point) != self.nvars:
            raise InputError(f"expected {self.nvars} coordinates, got {len(point)}", field='point')
        point = [self.ring.embed(c) if not self.ring.is_exact else c for c in point]
        if not self.ring.is_exact:
            for c in point:
                if self.ring.order(c) < 1:
                    raise ValuationError(f"coordinate {c} is not in the maximal ideal", field='point')
        total = self.ring.zero()
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * _ring_power(x, k, self.ring)
            total = total + v
        return total

    def format(self, names: Sequence[str] = None) -> str:
        names = names or [f'x{i + 1}' for i in range(self.nvars)]
        if self.is_zero():
            return '0'
        parts = []
        for e, c in self.items():
            if not c:
                continue
            factors = [n if k == 1 else f'{n}^{k}' for n, k in zip(names, e) if k]
            text = self.ring.format(c)
            if not factors:
                parts.append(text)
            elif self.ring.is_exact and c == 1:
                parts.append('*'.join(factors))
            elif self.ring.is_exact and c == -1:
                parts.append('-' + '*'.join(factors))
            else:
                coeff = text if self.ring.is_exact else f'({text})'
                parts.append('*'.join([coeff] + factors))
        return ' + '.join(parts).replace('+ -', '- ')

    def __str__(self):
        return self.format()

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            'nvars': self.nvars,
            'degree_bound': self.degree_bound,
            'terms': [{'exponents': list(e), 'coefficient': self.ring.format(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict, ring: RingDescriptor):
        try:
            nvars = int(data['nvars'])
            bound = int(data['degree_bound'])
            raw = data['terms']
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed series object ({e})", field='series')
        terms = {}
        for term in raw:
            try:
                e = tuple(int(k) for k in term['exponents'])
                c = ring.parse(term['coefficient'])
            except (KeyError, TypeError, ValueError) as e:
                raise InputError(f"malformed series term {term} ({e})", field='terms')
            if e in terms:
                logging.warning(f"duplicate exponent {e} in series input, summing coefficients")
                c = terms[e] + c
            terms[e] = c
        return cls(ring, nvars, bound, terms)


def _ring_power(x, k: int, ring: RingDescriptor):
    out = ring.one()
    for _ in range(k):
        out = out * x
    return out


def variables(ring: RingDescriptor, nvars: int, degree_bound: int) -> List[TruncSeries]:
    return [TruncSeries.variable(ring, nvars, degree_bound, i) for i in range(nvars)]


def mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f * g


def substitute(f: TruncSeries, args: Sequence[TruncSeries]) -> TruncSeries:
    return f.substitute(args)


def partial(f: TruncSeries, i: int) -> TruncSeries:
    return f.partial(i)


def eval_at_point(f: TruncSeries, point: Sequence):
    return f.eval_at_point(point)

# vim: ts=4 sw=4 et
