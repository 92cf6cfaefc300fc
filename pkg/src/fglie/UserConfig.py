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

from pathlib import Path
import os
import logging
import traceback
import yaml

from fglie.constants import DEFAULTS, LOG_LEVELS
from fglie.Errors import ConfigError


class UserConfig(dict):
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

    def setting(self, name: str):
        value = self.get(name)
        return DEFAULTS[name] if value is None else value

    def initialize(self):
        home = os.environ.get('FGLIE_HOME', f"{Path.home()}/.fglie")
        self.set('config_folder', home)
        self.set('config_file', f"{home}/config.yml")
        self.build_dot_fglie()
        self.load_config()

    def reset(self):
        for k in list(vars(self.__instance)):
            delattr(self.__instance, k)

    def load_config(self):
        loaded = UserConfig.load_yaml(self.get('config_file'), must_exist=False) or {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"Unable to load {self.get('config_file')}. expected a mapping", field='config.yml')
        for k, v in loaded.items():
            if k not in DEFAULTS:
                logging.warning(f"ignoring unknown setting {k} in {self.get('config_file')}")
                continue
            self.set(k, v)
        level = str(self.setting('loglevel')).lower()
        if level not in LOG_LEVELS:
            raise ConfigError(f"loglevel must be one of {', '.join(LOG_LEVELS)}, got {level}", field='loglevel')

    def build_dot_fglie(self):
        if not os.path.exists(self.get('config_folder')):
            os.makedirs(self.get('config_folder'))
        if not os.path.exists(self.get('config_file')):
            with open(self.get('config_file'), 'w') as f:
                f.write('\n'.join([
                    "# fglie runtime settings, every key is optional:",
                    "#   logfile: path of the log file, stderr when absent",
                    "#   loglevel: one of debug, info, warning, error, critical",
                    "#   sample_bound: B, sampled coordinates are drawn from p*{-B..B}",
                    "#   audit_primes: primes used by the BCH valuation audit",
                    "#   bch_max_degree: largest BCH degree summed for non nilpotent algebras",
                    "#   max_inverse_iterations: iteration cap when inverting group points",
                    "",
                    "loglevel: warning",
                    f"sample_bound: {DEFAULTS['sample_bound']}",
                    ""
                ]))

    @staticmethod
    def load_yaml(filename: str, must_exist: bool = False):
        if os.path.exists(filename):
            with open(filename, "r") as stream:
                try:
                    return yaml.load(stream, Loader=yaml.SafeLoader)
                except yaml.YAMLError as _e:
                    logging.debug(traceback.format_exc())
                    raise ConfigError(f"Unable to load {filename}.")
        else:
            if must_exist:
                raise ConfigError(f"Unable to load {filename}. NOT FOUND")

    def configure_logging(self):
        level = getattr(logging, str(self.setting('loglevel')).upper())
        logfile = self.setting('logfile')
        if logfile:
            logging.basicConfig(filename=os.path.expanduser(logfile), level=level, force=True,
                                format='%(asctime)s %(levelname)s %(message)s')
        else:
            logging.basicConfig(level=level, force=True, format='%(levelname)s %(message)s')

# vim: ts=4 sw=4 et
