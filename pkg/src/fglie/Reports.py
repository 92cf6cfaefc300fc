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

# Created by rszabo50 at 2026-09-20

import json
import logging
from fractions import Fraction

from fglie.constants import BASIS_CONVENTION, PROGRAM_VERSION, STATUS_FAIL, STATUS_FLAG, STATUS_PASS


def jsonable(value):
    """Fractions and ring elements become their text form, containers are walked."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return 'inf' if value == float('inf') else value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_json'):
        return value.to_json()
    return str(value)


class Report(object):
    """
    Outcome of a verification or analysis run.

    Identity checks are aggregated by name (passed/failed counts, first failing
    witness). FAIL means an identity was violated, FLAG is an informational
    finding, PASS otherwise.
    """

    def __init__(self, title: str, ring=None):
        self.title = title
        self.ring = ring
        self.checks = {}
        self.findings = []
        self.data = {}

    def check(self, name: str, ok: bool, witness=None) -> bool:
        entry = self.checks.setdefault(name, {'passed': 0, 'failed': 0})
        if ok:
            entry['passed'] += 1
        else:
            entry['failed'] += 1
            if 'first_failure' not in entry:
                entry['first_failure'] = jsonable(witness)
                logging.warning(f"{self.title}: {name} failed for {witness}")
        return ok

    def flag(self, name: str, detail: str):
        logging.info(f"{self.title}: FLAG {name}: {detail}")
        self.findings.append({'name': name, 'detail': detail})

    def add(self, key: str, value):
        self.data[key] = value

    @property
    def failed(self):
        return any(entry['failed'] for entry in self.checks.values())

    @property
    def status(self):
        if self.failed:
            return STATUS_FAIL
        return STATUS_FLAG if self.findings else STATUS_PASS

    def to_json(self) -> dict:
        out = {
            'title': self.title,
            'status': self.status,
            'checks': self.checks,
            'data': jsonable(self.data),
        }
        if self.findings:
            out['findings'] = self.findings
        return out

    def get_header(self):
        return f"{'check'.ljust(40)} {'passed'.rjust(8)} {'failed'.rjust(8)}"

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.status}"]
        if self.checks:
            lines.append(self.get_header())
            for name, entry in sorted(self.checks.items()):
                lines.append(f"{name.ljust(40)} {str(entry['passed']).rjust(8)} {str(entry['failed']).rjust(8)}")
                if 'first_failure' in entry:
                    lines.append(f"{''.ljust(4)}first failure: {entry['first_failure']}")
        for finding in self.findings:
            lines.append(f"FLAG {finding['name']}: {finding['detail']}")
        for key, value in sorted(self.data.items()):
            lines.append(f"{key.ljust(24)} : {render_text(value)}")
        return '\n'.join(lines)


def render_text(value) -> str:
    value = jsonable(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def envelope(payload: dict, ring=None) -> dict:
    """Metadata every JSON document written by the CLI carries."""
    out = dict(payload)
    out['tool_version'] = PROGRAM_VERSION
    out['basis_convention'] = BASIS_CONVENTION
    out['ring'] = ring.to_json() if ring is not None else {'kind': 'Rational'}
    return out


def dumps(payload: dict) -> str:
    return json.dumps(jsonable(payload), sort_keys=True, indent=2) + '\n'

# vim: ts=4 sw=4 et
