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

import logging
import os

import pytest

from fglie.CoeffRing import RingDescriptor
from fglie.UserConfig import UserConfig

HERE = os.path.dirname(__file__)


def data_file(name: str) -> str:
    return os.path.join(HERE, 'data', name)


def golden_file(name: str) -> str:
    return os.path.join(HERE, 'golden', name)


@pytest.fixture(autouse=True)
def fglie_home(tmp_path, monkeypatch):
    """Every test gets its own ~/.fglie and a fresh UserConfig."""
    home = tmp_path / 'fglie-home'
    monkeypatch.setenv('FGLIE_HOME', str(home))
    UserConfig().reset()
    yield home
    UserConfig().reset()
    root = logging.getLogger()
    for handler in list(root.handlers):
        # handlers installed by configure_logging hold the captured stream of this test
        if type(handler) in (logging.StreamHandler, logging.FileHandler):
            root.removeHandler(handler)


@pytest.fixture
def q():
    return RingDescriptor.rational()


@pytest.fixture
def q3():
    return RingDescriptor.rational(3)


@pytest.fixture
def z3():
    return RingDescriptor.padic(3, 6)


@pytest.fixture
def z3t():
    return RingDescriptor.padic_t(3, 4, 3)

# vim: ts=4 sw=4 et
