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

# Created by rszabo50 at 2026-10-05

import argparse
import json
import logging
import os
import sys
import traceback

from fglie.Bch import audit_valuations, bch_series, factorial_audit, gamma_group_check, matrix_oracle_check
from fglie.CoeffRing import RingDescriptor
from fglie.constants import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, PROGRAM_NAME, PROGRAM_TITLE, PROGRAM_VERSION
from fglie.Errors import FglieError, InputError
from fglie.FormalGroup import FormalGroupLaw, GroupPoint, builtin_law, check_axioms, group_inverse, \
    group_mul, lie_from_law
from fglie.LieAlgebra import StructureConstants, builtin_algebra, check_jacobi, derived_series, \
    lower_central_series, nilpotency_class, radical_nilpotency_report, solvable_radical
from fglie.Operators import group_exp, group_log
from fglie.Reports import Report, dumps, envelope, render_text
from fglie.UserConfig import UserConfig
from fglie.Verification import adjoint_verify, explog_verify, unipotence_verify


def load_help() -> str:
    try:
        with (open(f'{os.path.dirname(__file__)}/help.txt', "r")) as f:
            return f.read()
    except OSError as _e:
        logging.debug(traceback.format_exc())
        return ''


def load_json(path: str, field: str):
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except OSError as e:
        raise InputError(f"cannot read {path} ({e.strerror})", field=field)
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON ({e.msg} at line {e.lineno})", field=field)


def ring_from_args(args) -> RingDescriptor:
    """No --precision: Rational with --prime designated; --precision: PAdic; plus --t-precision: PAdicT."""
    if args.t_precision is not None and args.precision is None:
        raise InputError("--t-precision needs --precision", field='t-precision')
    if args.precision is None:
        return RingDescriptor.rational(args.prime)
    if args.prime is None:
        raise InputError("a p-adic backend needs --prime", field='prime')
    if args.t_precision is None:
        return RingDescriptor.padic(args.prime, args.precision)
    return RingDescriptor.padic_t(args.prime, args.precision, args.t_precision)


def _ring_flags_given(args) -> bool:
    return args.prime is not None or args.precision is not None


def load_law(args) -> FormalGroupLaw:
    token = args.law
    if token is None:
        raise InputError("a law is required", field='law')
    if token.endswith('.json') or os.path.sep in token:
        data = load_json(token, 'law')
        ring = ring_from_args(args) if _ring_flags_given(args) else None
        if not isinstance(data, dict):
            raise InputError(f"{token} must hold a JSON object", field='law')
        return FormalGroupLaw.from_json(data, ring)
    return builtin_law(token, ring_from_args(args), args.degree or 4)


def load_structure(args) -> StructureConstants:
    token = args.structure
    if token is None:
        raise InputError("a structure is required", field='structure')
    if token.endswith('.json') or os.path.sep in token:
        data = load_json(token, 'structure')
        if not isinstance(data, dict):
            raise InputError(f"{token} must hold a JSON object", field='structure')
        return StructureConstants.from_json(data, name=os.path.splitext(os.path.basename(token))[0])
    return builtin_algebra(token)


def parse_point(law: FormalGroupLaw, text: str, field: str) -> GroupPoint:
    if text is None:
        raise InputError("a point is required", field=field)
    try:
        return GroupPoint.parse(law, text)
    except InputError as e:
        raise InputError(str(e), field=field)


def _primes():
    return [int(p) for p in UserConfig().setting('audit_primes')]


class Outcome(object):
    """What a subcommand produced: a JSON payload, its text form and whether it failed."""

    def __init__(self, payload: dict, text: str, failed: bool = False, ring: RingDescriptor = None):
        self.payload = payload
        self.text = text
        self.failed = failed
        self.ring = ring

    @classmethod
    def from_report(cls, report: Report, ring: RingDescriptor = None):
        return cls(report.to_json(), report.to_text(), report.failed, ring or report.ring)

    @classmethod
    def from_reports(cls, reports, ring: RingDescriptor = None):
        payload = {'reports': [r.to_json() for r in reports]}
        text = '\n\n'.join(r.to_text() for r in reports)
        return cls(payload, text, any(r.failed for r in reports), ring)


def _data_outcome(payload: dict, ring: RingDescriptor = None) -> Outcome:
    text = '\n'.join(f"{key.ljust(24)} : {render_text(value)}" for key, value in sorted(payload.items()))
    return Outcome(payload, text, False, ring)


def do_bch(args) -> Outcome:
    if args.action == 'table':
        table = bch_series(args.degree or 4)
        return Outcome(table.to_json(_primes()), table.to_text(_primes()))
    if args.action == 'audit':
        table = bch_series(args.degree or 4)
        return Outcome.from_reports([audit_valuations(table, _primes()), factorial_audit(args.degree or 4, _primes())])
    if args.action == 'gamma':
        ring = ring_from_args(args)
        return Outcome.from_report(gamma_group_check(load_structure(args), ring, args.trials, args.seed), ring)
    return Outcome.from_report(matrix_oracle_check(args.trials, args.seed))


def do_law(args) -> Outcome:
    law = load_law(args)
    if args.action == 'check':
        return Outcome.from_report(check_axioms(law), law.ring)
    if args.action == 'lie':
        algebra = lie_from_law(law)
        return _data_outcome({
            'law': law.name,
            'structure': algebra.to_json(),
            'nilpotency_class': nilpotency_class(algebra),
            'lower_central_series': lower_central_series(algebra),
        }, law.ring)
    if args.action == 'explog-verify':
        return Outcome.from_report(explog_verify(law, args.trials, args.seed), law.ring)
    if args.action == 'adjoint-verify':
        return Outcome.from_report(adjoint_verify(law, args.trials, args.seed), law.ring)
    return Outcome.from_report(unipotence_verify(law, args.trials, args.seed, k=args.k), law.ring)


def do_lie(args) -> Outcome:
    algebra = load_structure(args)
    if args.action == 'jacobi':
        return Outcome.from_report(check_jacobi(algebra))
    if args.action == 'radical':
        radical = solvable_radical(algebra)
        return _data_outcome({
            'structure': algebra.name,
            'radical_dimension': len(radical),
            'radical_basis': [list(v) for v in radical],
            'radical_derived_series': derived_series(algebra, radical) if radical else [0],
        })
    if args.action == 'nilpotent':
        cls = nilpotency_class(algebra)
        return _data_outcome({
            'structure': algebra.name,
            'nilpotent': cls is not None,
            'nilpotency_class': cls,
            'lower_central_series': lower_central_series(algebra),
        })
    return Outcome.from_report(radical_nilpotency_report(algebra))


def do_group(args) -> Outcome:
    law = load_law(args)
    ring = law.ring
    if args.action == 'mul':
        x, y = parse_point(law, args.x, 'x'), parse_point(law, args.y, 'y')
        return _data_outcome({'law': law.name, 'x': x.format(), 'y': y.format(),
                              'product': group_mul(law, x, y).format()}, ring)
    if args.action == 'inv':
        x = parse_point(law, args.x, 'x')
        return _data_outcome({'law': law.name, 'x': x.format(), 'inverse': group_inverse(law, x).format()}, ring)
    if args.action == 'log':
        x = parse_point(law, args.x, 'x')
        return _data_outcome({'law': law.name, 'x': x.format(),
                              'log': [ring.format(c) for c in group_log(law, x)]}, ring)
    if args.coords is None:
        raise InputError("exp needs Lie coordinates", field='coords')
    a = [ring.parse(c) for c in args.coords.split(',')]
    return _data_outcome({'law': law.name, 'coords': [ring.format(c) for c in a],
                          'exp': group_exp(law, a).format()}, ring)


HANDLERS = {'bch': do_bch, 'law': do_law, 'lie': do_lie, 'group': do_group}

ACTIONS = {
    'bch': ['table', 'audit', 'gamma', 'oracle'],
    'law': ['check', 'lie', 'explog-verify', 'adjoint-verify', 'unipotent'],
    'lie': ['jacobi', 'radical', 'nilpotent', 'report'],
    'group': ['mul', 'inv', 'log', 'exp'],
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--degree', type=int, default=None, help='degree bound N (BCH) or D (laws), default 4')
    common.add_argument('--prime', type=int, default=None, help='prime p')
    common.add_argument('--precision', type=int, default=None, help='p-adic precision N')
    common.add_argument('--t-precision', dest='t_precision', type=int, default=None,
                        help='truncation M of the variable t')
    common.add_argument('--law', default=None, help='built-in law name or law JSON file')
    common.add_argument('--structure', default=None, help='built-in algebra name or structure JSON file')
    common.add_argument('--trials', type=int, default=20, help='number of sampled trials')
    common.add_argument('--seed', type=int, default=42, help='random seed')
    common.add_argument('--k', type=int, default=2, help='block I/I^k for unipotence checks')
    common.add_argument('--x', default=None, help='group point, comma separated coordinates')
    common.add_argument('--y', default=None, help='group point, comma separated coordinates')
    common.add_argument('--coords', default=None, help='Lie coordinates, comma separated')
    common.add_argument('--format', choices=['json', 'text'], default='json')
    common.add_argument('--output', default=None, help='write to this file instead of stdout')

    parser = argparse.ArgumentParser(prog=PROGRAM_NAME, description=PROGRAM_TITLE, epilog=load_help(),
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version=f'{PROGRAM_NAME} {PROGRAM_VERSION}')
    areas = parser.add_subparsers(dest='area', required=True)
    for area, actions in ACTIONS.items():
        verbs = areas.add_parser(area).add_subparsers(dest='action', required=True)
        for action in actions:
            verbs.add_parser(action, parents=[common])
    return parser


def emit(outcome: Outcome, args):
    if args.format == 'json':
        text = dumps(envelope(outcome.payload, outcome.ring))
    else:
        text = outcome.text + '\n'
    if args.output:
        try:
            with open(args.output, 'w') as f:
                f.write(text)
        except OSError as e:
            raise InputError(f"cannot write {args.output} ({e.strerror})", field='output')
    else:
        sys.stdout.write(text)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        UserConfig().initialize()
        UserConfig().configure_logging()
        logging.debug(f"{PROGRAM_NAME} {PROGRAM_VERSION}: {argv}")
        outcome = HANDLERS[args.area](args)
        emit(outcome, args)
    except InputError as e:
        logging.debug(traceback.format_exc())
        sys.stderr.write(f"{PROGRAM_NAME}: {e}\n")
        return EXIT_USAGE
    except FglieError as e:
        logging.debug(traceback.format_exc())
        sys.stderr.write(f"{PROGRAM_NAME}: {e}\n")
        return EXIT_FAILURE
    return EXIT_FAILURE if outcome.failed else EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))

# vim: ts=4 sw=4 et
