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

# Created by rszabo50 at 2026-09-14


class FglieError(RuntimeError):
    """Base of every error raised by the library."""


class InputError(FglieError):
    """Malformed input; `field` names the offending flag, key or value when known."""

    def __init__(self, message: str, field: str = None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class ConfigError(InputError):
    pass


class RingMismatch(InputError):
    pass


class ValuationError(InputError):
    pass


class PrecisionExhausted(FglieError):
    pass


class NonPrimitiveError(FglieError):
    pass


class SeriesDivergence(FglieError):
    pass


class LawError(FglieError):
    pass


class RadicalError(FglieError):
    pass

# vim: ts=4 sw=4 et
