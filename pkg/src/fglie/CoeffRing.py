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

# Created by rszabo50 at 2026-09-15

"""
Coefficient rings.

Three backends share one descriptor type:

    Rational  exact fractions (python Fraction), optionally with a designated prime
    PAdic     Z_p known modulo p^N, values stored as p^shift * unit with an absolute precision
    PAdicT    (Z/p^N)[t]/t^M, a truncation of Z_p[[t]]

Rational coefficients are plain Fraction objects, the other two backends use
PAdicNumber and TPolynomial which coerce ints and Fractions on the fly.
"""

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from sympy import isprime, multiplicity

from fglie.Errors import InputError, PrecisionExhausted, RingMismatch


class RingKind(Enum):
    RATIONAL = 'Rational'
    PADIC = 'PAdic'
    PADIC_T = 'PAdicT'


def _vp(p: int, n: int) -> int:
    if n % p:
        return 0
    return int(multiplicity(p, abs(n)))


def rational_valuation(q, p: int):
    q = Fraction(q)
    if q == 0:
        return math.inf
    return _vp(p, q.numerator) - _vp(p, q.denominator)


class PAdicNumber(object):
    """
    p^shift * unit, known modulo p^absprec.

    The unit is reduced modulo p^(absprec - shift). Zero has shift None and
    still carries the precision at which it is known to vanish.
    """
    __slots__ = ('ring', 'shift', 'unit', 'absprec')
    __hash__ = None

    def __init__(self, ring, shift, unit, absprec):
        self.ring = ring
        self.shift = shift
        self.unit = unit
        self.absprec = absprec

    @staticmethod
    def normalize(ring, m: int, w: int, a: int):
        a = min(a, ring.precision)
        if m == 0:
            return PAdicNumber(ring, None, 0, a)
        p = ring.prime
        v = _vp(p, m)
        s = w + v
        if s >= a:
            return PAdicNumber(ring, None, 0, a)
        return PAdicNumber(ring, s, (m // p ** v) % p ** (a - s), a)

    def _coerce(self, other):
        if isinstance(other, PAdicNumber):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.embed(other)
        return NotImplemented

    def _floor(self):
        return self.absprec if self.shift is None else self.shift

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = min(self.absprec, other.absprec)
        if self.shift is None:
            return PAdicNumber.normalize(self.ring, other.unit, other._floor(), a)
        if other.shift is None:
            return PAdicNumber.normalize(self.ring, self.unit, self.shift, a)
        p = self.ring.prime
        w = min(self.shift, other.shift)
        m = self.unit * p ** (self.shift - w) + other.unit * p ** (other.shift - w)
        return PAdicNumber.normalize(self.ring, m, w, a)

    __radd__ = __add__

    def __neg__(self):
        if self.shift is None:
            return self
        return PAdicNumber.normalize(self.ring, -self.unit, self.shift, self.absprec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = min(self.absprec + other._floor(), other.absprec + self._floor())
        if self.shift is None or other.shift is None:
            return PAdicNumber(self.ring, None, 0, min(a, self.ring.precision))
        return PAdicNumber.normalize(self.ring, self.unit * other.unit, self.shift + other.shift, a)

    __rmul__ = __mul__

    def div_exact(self, n: int):
        p = self.ring.prime
        v = _vp(p, n)
        a = self.absprec - v
        if a < 1:
            logging.warning(f"precision exhausted dividing {self} by {n}")
            raise PrecisionExhausted(f"dividing {self} by {n} leaves no guaranteed {p}-adic digit")
        if self.shift is None:
            return PAdicNumber(self.ring, None, 0, a)
        r = self.absprec - self.shift
        unit = (self.unit * pow(n // p ** v, -1, p ** r)) % p ** r
        return PAdicNumber(self.ring, self.shift - v, unit, a)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).shift is None

    def __bool__(self):
        return self.shift is not None

    def valuation(self):
        return math.inf if self.shift is None else self.shift

    def to_fraction(self) -> Fraction:
        """Balanced lift: the unit is taken in (-p^r/2, p^r/2] so small negative integers come back."""
        if self.shift is None:
            return Fraction(0)
        modulus = self.ring.prime ** (self.absprec - self.shift)
        unit = self.unit - modulus if 2 * self.unit > modulus else self.unit
        return Fraction(unit) * Fraction(self.ring.prime) ** self.shift

    def residue(self) -> int:
        """Integer representative modulo p^N (requires shift >= 0)."""
        if self.shift is None:
            return 0
        if self.shift < 0:
            raise PrecisionExhausted(f"{self} is not a {self.ring.prime}-adic integer")
        return (self.unit * self.ring.prime ** self.shift) % self.ring.prime ** self.ring.precision

    def __str__(self):
        p = self.ring.prime
        if self.shift is None:
            return f"0 mod {p}^{self.absprec}"
        return f"{self.unit}*{p}^{self.shift} mod {p}^{self.absprec}"

    __repr__ = __str__


class TPolynomial(object):
    """Element of (Z/p^N)[t]/t^M: M p-adic coefficients, lowest power of t first."""
    __slots__ = ('ring', 'coeffs')
    __hash__ = None

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, TPolynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, (int, Fraction, PAdicNumber)):
            return self.ring.embed(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return TPolynomial(self.ring, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TPolynomial(self.ring, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = self.ring.t_precision
        out = []
        for k in range(m):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TPolynomial(self.ring, out)

    __rmul__ = __mul__

    def div_exact(self, n: int):
        return TPolynomial(self.ring, (a.div_exact(n) for a in self.coeffs))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def valuation(self):
        return min(a.valuation() for a in self.coeffs)

    def order(self):
        """Order in the (p, t)-adic filtration."""
        return min(a.valuation() + k for k, a in enumerate(self.coeffs))

    def constant(self) -> PAdicNumber:
        return self.coeffs[0]

    def __str__(self):
        parts = []
        for k, a in enumerate(self.coeffs):
            if k == 0:
                parts.append(f"({a})")
            elif k == 1:
                parts.append(f"({a})*t")
            else:
                parts.append(f"({a})*t^{k}")
        return ' + '.join(parts)

    __repr__ = __str__


_PADIC_TEXT = re.compile(r'^\s*(-?\d+)\*(\d+)\^(-?\d+)\s+mod\s+(\d+)\^(-?\d+)\s*$')
_PADIC_ZERO = re.compile(r'^\s*0\s+mod\s+(\d+)\^(-?\d+)\s*$')
_T_TERM = re.compile(r"\(([^()]*)\)(\*t(?:\^(\d+))?)?")


@dataclass(frozen=True)
class RingDescriptor(object):
    kind: RingKind
    prime: Optional[int] = None
    precision: Optional[int] = None
    t_precision: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and (not isinstance(self.prime, int) or not isprime(self.prime)):
            raise InputError(f"{self.prime} is not a prime", field='prime')
        if self.kind is RingKind.RATIONAL:
            if self.precision is not None or self.t_precision is not None:
                raise InputError("the rational ring has no precision", field='precision')
            return
        if self.prime is None:
            raise InputError(f"{self.kind.value} needs a prime", field='prime')
        if not isinstance(self.precision, int) or self.precision < 1:
            raise InputError(f"precision must be a positive integer, got {self.precision}", field='precision')
        if self.kind is RingKind.PADIC_T:
            if not isinstance(self.t_precision, int) or self.t_precision < 1:
                raise InputError(f"t-precision must be a positive integer, got {self.t_precision}",
                                 field='t-precision')
        elif self.t_precision is not None:
            raise InputError("t-precision is only meaningful for PAdicT", field='t-precision')

    @classmethod
    def rational(cls, prime: int = None):
        return cls(RingKind.RATIONAL, prime)

    @classmethod
    def padic(cls, prime: int, precision: int):
        return cls(RingKind.PADIC, prime, precision)

    @classmethod
    def padic_t(cls, prime: int, precision: int, t_precision: int):
        return cls(RingKind.PADIC_T, prime, precision, t_precision)

    def __str__(self):
        if self.kind is RingKind.RATIONAL:
            return 'Q' if self.prime is None else f'Q (p={self.prime})'
        if self.kind is RingKind.PADIC:
            return f'Z_{self.prime} mod {self.prime}^{self.precision}'
        return f'(Z/{self.prime}^{self.precision})[t]/t^{self.t_precision}'

    @property
    def is_exact(self):
        return self.kind is RingKind.RATIONAL

    def require_prime(self, prime: int = None) -> int:
        prime = prime if prime is not None else self.prime
        if prime is None:
            raise InputError("a prime is required for this operation", field='prime')
        return prime

    @property
    def bold_p(self) -> int:
        p = self.require_prime()
        return 4 if p == 2 else p

    @property
    def bold_p_valuation(self) -> int:
        return 2 if self.require_prime() == 2 else 1

    def base(self):
        if self.kind is RingKind.PADIC_T:
            return RingDescriptor.padic(self.prime, self.precision)
        return self

    def with_precision(self, precision: int):
        if self.kind is RingKind.RATIONAL:
            return self
        return RingDescriptor(self.kind, self.prime, precision, self.t_precision)

    def with_guard(self, digits: int):
        if self.kind is RingKind.RATIONAL or digits <= 0:
            return self
        logging.debug(f"working in {self} with {digits} guard digits")
        return self.with_precision(self.precision + digits)

    def zero(self):
        return self.embed(0)

    def one(self):
        return self.embed(1)

    def t(self):
        if self.kind is not RingKind.PADIC_T:
            raise InputError(f"{self} has no variable t", field='ring')
        base = self.base()
        coeffs = [base.zero() for _ in range(self.t_precision)]
        if self.t_precision > 1:
            coeffs[1] = base.one()
        return TPolynomial(self, coeffs)

    def embed(self, value):
        """Bring an int, Fraction, text or coefficient of a sibling ring into this ring."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind is RingKind.RATIONAL:
            if isinstance(value, (PAdicNumber, TPolynomial)):
                raise RingMismatch(f"cannot embed {value} into {self}")
            return Fraction(value)
        if self.kind is RingKind.PADIC:
            if isinstance(value, PAdicNumber):
                return self.lift(value)
            if isinstance(value, TPolynomial):
                raise RingMismatch(f"cannot embed {value} into {self}")
            q = Fraction(value)
            if q == 0:
                return PAdicNumber(self, None, 0, self.precision)
            p = self.prime
            s = _vp(p, q.numerator) - _vp(p, q.denominator)
            num = q.numerator // p ** max(0, _vp(p, q.numerator))
            den = q.denominator // p ** max(0, _vp(p, q.denominator))
            if s >= self.precision:
                return PAdicNumber(self, None, 0, self.precision)
            modulus = p ** (self.precision - s)
            return PAdicNumber(self, s, (num * pow(den, -1, modulus)) % modulus, self.precision)
        base = self.base()
        if isinstance(value, TPolynomial):
            return self.lift(value)
        coeffs = [base.embed(value)] + [base.zero() for _ in range(self.t_precision - 1)]
        return TPolynomial(self, coeffs)

    def lift(self, value):
        """Move a value to a ring with the same prime and another precision, keeping only its known digits."""
        if self.kind is RingKind.RATIONAL:
            return value
        if isinstance(value, TPolynomial):
            if self.kind is not RingKind.PADIC_T or value.ring.prime != self.prime:
                raise RingMismatch(f"cannot move {value.ring} values into {self}")
            base = self.base()
            coeffs = [base.lift(c) for c in value.coeffs[:self.t_precision]]
            coeffs += [base.zero() for _ in range(self.t_precision - len(coeffs))]
            return TPolynomial(self, coeffs)
        if isinstance(value, PAdicNumber):
            if value.ring.prime != self.prime:
                raise RingMismatch(f"cannot move {value.ring} values into {self}")
            if self.kind is RingKind.PADIC_T:
                return self.embed(self.base().lift(value))
            if value.shift is None:
                return PAdicNumber(self, None, 0, min(value.absprec, self.precision))
            return PAdicNumber.normalize(self, value.unit, value.shift, value.absprec)
        return self.embed(value)

    def promote(self, value):
        """Move a value into this wider ring taking its stored digits as exact."""
        if self.kind is RingKind.RATIONAL:
            return value
        if isinstance(value, TPolynomial):
            if self.kind is not RingKind.PADIC_T or value.ring.prime != self.prime:
                raise RingMismatch(f"cannot move {value.ring} values into {self}")
            base = self.base()
            coeffs = [base.promote(c) for c in value.coeffs[:self.t_precision]]
            coeffs += [base.zero() for _ in range(self.t_precision - len(coeffs))]
            return TPolynomial(self, coeffs)
        if isinstance(value, PAdicNumber):
            if value.ring.prime != self.prime:
                raise RingMismatch(f"cannot move {value.ring} values into {self}")
            if self.kind is RingKind.PADIC_T:
                return self.embed(self.base().promote(value))
            if value.shift is None:
                return PAdicNumber(self, None, 0, self.precision)
            return PAdicNumber.normalize(self, value.unit, value.shift, self.precision)
        return self.embed(value)

    def vanishes(self, c) -> bool:
        """c is zero to the full precision of the ring, so a series may drop it."""
        if isinstance(c, PAdicNumber):
            return c.shift is None and c.absprec >= self.base().precision
        if isinstance(c, TPolynomial):
            return all(self.vanishes(a) for a in c.coeffs)
        return not c

    def absprec(self, c):
        """Digits known of c: math.inf for Rational values."""
        if isinstance(c, PAdicNumber):
            return c.absprec
        if isinstance(c, TPolynomial):
            return min(a.absprec for a in c.coeffs)
        return math.inf

    def reduce_precision(self, c, absprec: int):
        """Forget every digit of c at or above p^absprec."""
        if self.kind is RingKind.RATIONAL:
            return c
        if isinstance(c, TPolynomial):
            base = self.base()
            return TPolynomial(self, (base.reduce_precision(a, absprec) for a in c.coeffs))
        if c.shift is None:
            return PAdicNumber(self, None, 0, min(c.absprec, absprec))
        return PAdicNumber.normalize(self, c.unit, c.shift, min(c.absprec, absprec))

    def valuation(self, c, prime: int = None):
        """v_p(c); math.inf for zero. PAdicT reports the minimum over its t coefficients."""
        if self.kind is RingKind.RATIONAL:
            return rational_valuation(c, self.require_prime(prime))
        if isinstance(c, (int, Fraction)):
            return rational_valuation(c, self.prime)
        return c.valuation()

    def order(self, c):
        """Order in the maximal ideal filtration: (p) for Rational and PAdic, (p, t) for PAdicT."""
        if isinstance(c, TPolynomial):
            return c.order()
        return self.valuation(c)

    def div_exact(self, c, n: int):
        if n == 0:
            raise InputError("division by zero", field='n')
        if self.kind is RingKind.RATIONAL:
            return Fraction(c) / n
        if isinstance(c, (int, Fraction)):
            c = self.embed(c)
        return c.div_exact(n)

    def is_zero(self, c):
        return not c

    def to_fraction(self, c) -> Fraction:
        if isinstance(c, TPolynomial):
            if any(c.coeffs[1:]):
                raise InputError(f"{c} depends on t and has no rational lift", field='coefficient')
            return c.constant().to_fraction()
        if isinstance(c, PAdicNumber):
            return c.to_fraction()
        return Fraction(c)

    def format(self, c) -> str:
        if self.kind is RingKind.RATIONAL:
            return str(Fraction(c))
        return str(self.embed(c) if isinstance(c, (int, Fraction)) else c)

    def parse(self, text: str):
        text = str(text).strip()
        if self.kind is RingKind.PADIC_T:
            terms = _T_TERM.findall(text)
            if not terms:
                return self.embed(self._parse_scalar(text))
            base = self.base()
            coeffs = [base.zero() for _ in range(self.t_precision)]
            for body, has_t, power in terms:
                k = int(power) if power else (1 if has_t else 0)
                if k < self.t_precision:
                    coeffs[k] = coeffs[k] + base.parse(body)
            return TPolynomial(self, coeffs)
        if self.kind is RingKind.PADIC:
            match = _PADIC_ZERO.match(text)
            if match:
                self._check_prime(int(match.group(1)), text)
                return PAdicNumber(self, None, 0, min(int(match.group(2)), self.precision))
            match = _PADIC_TEXT.match(text)
            if match:
                unit, p, s, p2, a = (int(g) for g in match.groups())
                self._check_prime(p, text)
                self._check_prime(p2, text)
                return PAdicNumber.normalize(self, unit, s, a)
        return self.embed(self._parse_scalar(text))

    def _check_prime(self, p: int, text: str):
        if p != self.prime:
            raise InputError(f"'{text}' is written in base {p}, the ring uses {self.prime}", field='coefficient')

    @staticmethod
    def _parse_scalar(text: str) -> Fraction:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot read '{text}' as a coefficient", field='coefficient')

    def random_element(self, rng, bound: int):
        """Rational: integer in [-bound, bound]; p-adic backends: uniform residues."""
        if self.kind is RingKind.RATIONAL:
            return Fraction(rng.randint(-bound, bound))
        if self.kind is RingKind.PADIC:
            return self.embed(rng.randrange(self.prime ** self.precision))
        base = self.base()
        return TPolynomial(self, [base.embed(rng.randrange(self.prime ** self.precision))
                                  for _ in range(self.t_precision)])

    def to_json(self) -> dict:
        out = {'kind': self.kind.value}
        if self.prime is not None:
            out['prime'] = self.prime
        if self.precision is not None:
            out['precision'] = self.precision
        if self.t_precision is not None:
            out['t_precision'] = self.t_precision
        return out

    @classmethod
    def from_json(cls, data: dict):
        try:
            kind = RingKind(data['kind'])
        except (KeyError, ValueError):
            raise InputError(f"unknown ring kind in {data}", field='ring.kind')
        return cls(kind, data.get('prime'), data.get('precision'), data.get('t_precision'))


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def neg(a):
    return -a


def valuation(ring: RingDescriptor, a, prime: int = None):
    return ring.valuation(a, prime)


def div_exact(ring: RingDescriptor, a, n: int):
    return ring.div_exact(a, n)


def guard_digits(ring: RingDescriptor, loss, terms: int) -> int:
    """Extra p-adic digits needed when the k-th of `terms` series terms loses loss(k, p) digits."""
    if ring.is_exact:
        return 0
    return max([0] + [loss(k, ring.prime) for k in range(1, terms + 1)])

# vim: ts=4 sw=4 et
