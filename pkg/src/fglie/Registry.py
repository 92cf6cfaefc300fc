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

import logging

from fglie.Errors import InputError


class Registry(dict):
    """
    Catalog of the built-in formal group laws and Lie algebras.

    Factories are stored under '<kind>:<name>' ('law:heisenberg', 'algebra:sl2').
    A name may carry ':'-separated integer parameters ('unitriangular:4'), they
    are handed to the factory as positional arguments.
    """
    __instance = None

    def __new__(cls, *args):
        if cls.__instance is None:
            cls.__instance = dict.__new__(cls)
        return cls.__instance

    def set(self, k, v, overwrite=True):
        if overwrite or self.get(k) is None:
            setattr(self.__instance, k, v)

    def get(self, k):
        return getattr(self.__instance, k) if hasattr(self.__instance, k) else None

    def register(self, kind: str, name: str, factory):
        key = f'{kind}:{name}'
        if self.get(key) is not None:
            logging.warning(f"Registry already has a factory for {key}, replacing it")
        logging.debug(f"Registering {key}")
        self.set(key, factory)

    def names(self, kind: str):
        prefix = f'{kind}:'
        return sorted(k[len(prefix):] for k in vars(self.__instance) if k.startswith(prefix))

    def lookup(self, kind: str, token: str, field: str = None):
        name, *params = token.split(':')
        factory = self.get(f'{kind}:{name}')
        if factory is None:
            raise InputError(f"unknown {kind} '{token}', expected one of {', '.join(self.names(kind))}",
                             field=field or kind)
        try:
            args = [int(p) for p in params]
        except ValueError:
            raise InputError(f"parameters of '{token}' must be integers", field=field or kind)
        return factory, args

# vim: ts=4 sw=4 et
