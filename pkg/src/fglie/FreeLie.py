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

# Created by rszabo50 at 2026-09-18

"""
Free Lie algebra on k generators over Q in the Lyndon basis, and the
truncated free associative algebra it expands into.

Words are tuples of letters 1..k. A Lyndon word w stands for its standard
bracketing P_w; expand(P_w) = w + (lexicographically larger words of the
same length), which is what project_to_lie eliminates against.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from sympy.ntheory import divisors, mobius

from fglie.Errors import InputError, NonPrimitiveError

Word = Tuple[int, ...]
Bracket = Union[int, Tuple['Bracket', 'Bracket']]


def _graded(word: Word):
    return len(word), word


def word_text(word: Word) -> str:
    if all(letter < 10 for letter in word):
        return ''.join(str(letter) for letter in word)
    return ','.join(str(letter) for letter in word)


def parse_word(text: str) -> Word:
    text = str(text).strip()
    try:
        word = tuple(int(x) for x in text.split(',')) if ',' in text else tuple(int(c) for c in text)
    except ValueError:
        raise InputError(f"'{text}' is not a word over 1..9 (use commas for larger letters)", field='lyndon_word')
    if not word or min(word) < 1:
        raise InputError(f"'{text}' is not a word over positive letters", field='lyndon_word')
    return word


def is_lyndon(word: Word) -> bool:
    word = tuple(word)
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_words(k: int, max_length: int) -> List[Word]:
    """Lyndon words over 1..k of length <= max_length in graded lexicographic order (Duval)."""
    if k < 1 or max_length < 1:
        raise InputError(f"need k >= 1 and N >= 1, got k={k}, N={max_length}", field='k')
    out = []
    w = [0]
    while w:
        out.append(tuple(letter + 1 for letter in w))
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
        if w:
            w[-1] += 1
    return sorted(out, key=_graded)


def witt_dimension(k: int, n: int) -> int:
    return sum(int(mobius(n // d)) * k ** d for d in divisors(n)) // n


@lru_cache(maxsize=None)
def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """w = uv with v the longest proper Lyndon suffix of w."""
    if len(word) < 2:
        raise InputError(f"{word_text(word)} has no standard factorization", field='lyndon_word')
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise InputError(f"{word_text(word)} has no Lyndon suffix", field='lyndon_word')


@lru_cache(maxsize=None)
def bracketing(word: Word) -> Bracket:
    if not is_lyndon(word):
        raise InputError(f"{word_text(word)} is not a Lyndon word", field='lyndon_word')
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return bracketing(u), bracketing(v)


def bracket_text(expr: Bracket) -> str:
    if isinstance(expr, int):
        return f'x{expr}'
    return f'[{bracket_text(expr[0])},{bracket_text(expr[1])}]'


class AssocSeries(object):
    """Truncated series in non-commuting x1..xk over Q, {word: Fraction}; () is the empty word."""
    __slots__ = ('k', 'degree_bound', 'terms')
    __hash__ = None

    def __init__(self, k: int, degree_bound: int, terms: Dict[Word, Fraction] = None):
        self.k = k
        self.degree_bound = degree_bound
        self.terms = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c and len(w) <= degree_bound:
                self.terms[tuple(w)] = c

    @classmethod
    def letter(cls, k, degree_bound, letter):
        return cls(k, degree_bound, {(letter,): 1})

    @classmethod
    def one(cls, k, degree_bound):
        return cls(k, degree_bound, {(): 1})

    def _like(self, terms):
        return AssocSeries(self.k, self.degree_bound, terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: _graded(item[0]))

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return self._like(terms)

    def __neg__(self):
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self._like({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AssocSeries):
            return self.scale(other)
        return self.product(other, self.degree_bound)

    __rmul__ = scale

    def product(self, other, max_length: int):
        """Concatenation product keeping words of length <= max_length."""
        terms = {}
        for w1, c1 in self.terms.items():
            room = max_length - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) <= room:
                    w = w1 + w2
                    terms[w] = terms.get(w, 0) + c1 * c2
        return self._like(terms)

    def __eq__(self, other):
        if not isinstance(other, AssocSeries):
            return NotImplemented
        return self.terms == other.terms

    def constant(self):
        return self.terms.get((), Fraction(0))

    def homogeneous(self, n: int):
        return self._like({w: c for w, c in self.terms.items() if len(w) == n})

    def truncated(self, degree_bound: int):
        return AssocSeries(self.k, degree_bound, {w: c for w, c in self.terms.items() if len(w) <= degree_bound})

    def exp(self):
        """exp(a) for a without constant term, Horner: 1 + a(1 + a/2(1 + a/3(...)))."""
        self._require_no_constant('exp')
        one = AssocSeries.one(self.k, self.degree_bound)
        s = one
        for depth in range(self.degree_bound, 0, -1):
            s = one + self.product(s, self.degree_bound).scale(Fraction(1, depth))
        return s

    def log1p(self):
        """log(1 + a) for a without constant term, Horner: a(1 - a(1/2 - a(1/3 - ...)))."""
        self._require_no_constant('log1p')
        s = t = AssocSeries(self.k, self.degree_bound)
        for depth in range(self.degree_bound, 0, -1):
            t = self.product(s, 1 + self.degree_bound - depth)
            if depth > 1:
                s = self.scale(Fraction(1, depth)) - t
        return self - t

    def _require_no_constant(self, what):
        if self.constant():
            raise InputError(f"{what} needs a series without constant term", field='series')

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'{c}*{word_text(w) or "1"}' for w, c in self.items()).replace('+ -', '- ')

    __repr__ = __str__


@lru_cache(maxsize=None)
def _expand_bracket(expr: Bracket) -> Tuple[Tuple[Word, int], ...]:
    if isinstance(expr, int):
        return (((expr,), 1),)
    left = _expand_bracket(expr[0])
    right = _expand_bracket(expr[1])
    out = {}
    for w1, c1 in left:
        for w2, c2 in right:
            out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
            out[w2 + w1] = out.get(w2 + w1, 0) - c1 * c2
    return tuple(sorted((w, c) for w, c in out.items() if c))


def expand_word(word: Word) -> Dict[Word, int]:
    return dict(_expand_bracket(bracketing(tuple(word))))


class LieSeries(object):
    """Rational combination of bracketed Lyndon words in k generators, up to degree N."""
    __slots__ = ('k', 'degree_bound', 'terms')
    __hash__ = None

    def __init__(self, k: int, degree_bound: int, terms: Dict[Word, Fraction] = None):
        self.k = k
        self.degree_bound = degree_bound
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            c = Fraction(c)
            if not is_lyndon(w) or max(w) > k:
                raise InputError(f"{word_text(w)} is not a Lyndon word over {k} letters", field='lyndon_word')
            if c and len(w) <= degree_bound:
                self.terms[w] = c

    @classmethod
    def generator(cls, k, degree_bound, letter):
        return cls(k, degree_bound, {(letter,): 1})

    def items(self):
        return sorted(self.terms.items(), key=lambda item: _graded(item[0]))

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return LieSeries(self.k, self.degree_bound, terms)

    def __neg__(self):
        return LieSeries(self.k, self.degree_bound, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return LieSeries(self.k, self.degree_bound, {w: c * v for w, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, LieSeries):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def homogeneous(self, n: int):
        return LieSeries(self.k, self.degree_bound, {w: c for w, c in self.terms.items() if len(w) == n})

    def truncated(self, degree_bound: int):
        return LieSeries(self.k, degree_bound, {w: c for w, c in self.terms.items() if len(w) <= degree_bound})

    def coefficient(self, word) -> Fraction:
        if isinstance(word, str):
            word = parse_word(word)
        return self.terms.get(tuple(word), Fraction(0))

    def expand(self) -> AssocSeries:
        out = {}
        for w, c in self.terms.items():
            for u, n in expand_word(w).items():
                out[u] = out.get(u, 0) + c * n
        return AssocSeries(self.k, self.degree_bound, out)

    def bracket(self, other: 'LieSeries') -> 'LieSeries':
        a = self.expand()
        b = other.expand()
        return project_to_lie(a * b - b * a)

    def substitute_generators(self, images: List['LieSeries']) -> 'LieSeries':
        """Replace generator i by images[i - 1], e.g. x1, x2 -> -x2, -x1."""
        return self.evaluate(images, lambda a, b: a.bracket(b), lambda a, b: a + b, lambda c, a: a.scale(c),
                             LieSeries(images[0].k, self.degree_bound))

    def evaluate(self, generators, bracket, add, scale, zero):
        """
        Value of the series in a concrete Lie algebra.

        `generators[i - 1]` is the image of x_i; bracket, add and scale(c, v)
        implement the target algebra. Sub-brackets are shared between words.
        """
        memo = {}

        def value(expr):
            if expr not in memo:
                if isinstance(expr, int):
                    memo[expr] = generators[expr - 1]
                else:
                    memo[expr] = bracket(value(expr[0]), value(expr[1]))
            return memo[expr]

        total = zero
        for w, c in self.items():
            total = add(total, scale(c, value(bracketing(w))))
        return total

    def to_json(self) -> dict:
        return {
            'generators': self.k,
            'degree_bound': self.degree_bound,
            'terms': [{'lyndon_word': word_text(w), 'coefficient': str(c)} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict):
        try:
            return cls(int(data['generators']), int(data['degree_bound']),
                       {parse_word(t['lyndon_word']): Fraction(t['coefficient']) for t in data['terms']})
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed Lie series ({e})", field='terms')

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'{c}*{bracket_text(bracketing(w))}' for w, c in self.items()).replace('+ -', '- ')

    __repr__ = __str__


def expand(s: LieSeries) -> AssocSeries:
    return s.expand()


def project_to_lie(a: AssocSeries) -> LieSeries:
    """
    The LieSeries L with expand(L) = a, by triangular elimination on the
    lexicographically smallest remaining word of each degree.

    Raises NonPrimitiveError when the smallest remaining word is not Lyndon,
    i.e. when a is not a Lie element.
    """
    if a.constant():
        raise NonPrimitiveError(f"constant term {a.constant()} is not a Lie element")
    remainder = dict(a.terms)
    out = {}
    for n in range(1, a.degree_bound + 1):
        layer = {w: c for w, c in remainder.items() if len(w) == n}
        while layer:
            lead = min(layer)
            c = layer[lead]
            if not is_lyndon(lead):
                logging.warning(f"projection left {c}*{word_text(lead)} in degree {n}")
                raise NonPrimitiveError(f"non-primitive input: remainder {c}*{word_text(lead)} in degree {n}")
            expansion = expand_word(lead)
            if expansion.get(lead) != 1 or min(expansion) != lead:
                raise NonPrimitiveError(f"bracketing of {word_text(lead)} is not triangular")
            for u, m in expansion.items():
                v = layer.get(u, 0) - c * m
                if v:
                    layer[u] = v
                else:
                    layer.pop(u, None)
            out[lead] = c
    return LieSeries(a.k, a.degree_bound, out)

# vim: ts=4 sw=4 et
