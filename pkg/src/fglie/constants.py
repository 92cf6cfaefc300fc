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

PROGRAM_NAME = 'fglie'
PROGRAM_TITLE = 'Formal group laws, Lie algebras and the BCH correspondence'
PROGRAM_VERSION = '0.3.0'
SCM_URL = 'https://github.com/rszabo50/fglie'

BASIS_CONVENTION = 'lyndon'

STATUS_PASS = 'PASS'
STATUS_FAIL = 'FAIL'
STATUS_FLAG = 'FLAG'

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_LEVELS = ['debug', 'info', 'warning', 'error', 'critical']

# settings understood in ~/.fglie/config.yml
DEFAULTS = {
    'logfile': None,
    'loglevel': 'warning',
    'sample_bound': 5,
    'audit_primes': [2, 3, 5, 7],
    'bch_max_degree': 12,
    'max_inverse_iterations': 64,
}

# vim: ts=4 sw=4 et
