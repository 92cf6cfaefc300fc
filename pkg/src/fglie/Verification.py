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

# Created by rszabo50 at 2026-10-02

"""
Randomised identity suites for a formal group law. Every suite returns a
Report; a violated identity is a FAIL entry, never an exception.
"""

import logging
import random
from typing import List

from fglie.Bch import bch_eval, sample_lattice_point
from fglie.Errors import InputError, SeriesDivergence
from fglie.FormalGroup import FormalGroupLaw, GroupPoint, group_mul, lie_from_law, sample_point
from fglie.Operators import (LEFT, RIGHT, TruncOperator, cotangent_pairing, exp_ad_ring, exp_terms,
                             invariant_derivation, is_unipotent, log_terms, operator_exp, operator_log,
                             group_exp, group_log, adjoint_action, conjugation_operator, phi_of_derivation,
                             translation, conjugation_unipotence_check, lattice_gain)
from fglie.PowerSeries import TruncSeries, monomial_basis
from fglie.Reports import Report


def _monomial(ring, d, bound, e) -> TruncSeries:
    return TruncSeries._make(ring, d, bound, {tuple(e): ring.one()})


def _unit(ring, d, i) -> List:
    return [ring.one() if k == i else ring.zero() for k in range(d)]


def _same(u, v) -> bool:
    return all(a == b for a, b in zip(u, v))


def _exponent_text(e) -> str:
    return '*'.join(f'y{i + 1}' if k == 1 else f'y{i + 1}^{k}' for i, k in enumerate(e) if k) or '1'


def leibniz_defect(W: TruncOperator):
    """First pair (f, g) of basis monomials with W(fg) != W(f)g + fW(g), or None."""
    ring, d, bound = W.ring, W.nvars, W.degree_bound
    basis = monomial_basis(d, bound)
    for i, e in enumerate(basis):
        f = _monomial(ring, d, bound, e)
        for e2 in basis[i:]:
            if sum(e) + sum(e2) > bound:
                continue
            g = _monomial(ring, d, bound, e2)
            if not W.apply(f * g) == W.apply(f) * g + f * W.apply(g):
                return _exponent_text(e), _exponent_text(e2)
    return None


def multiplicative_defect(E: TruncOperator):
    """First pair (f, g) of basis monomials with E(fg) != E(f)E(g), or None."""
    ring, d, bound = E.ring, E.nvars, E.degree_bound
    basis = monomial_basis(d, bound)
    for i, e in enumerate(basis):
        f = _monomial(ring, d, bound, e)
        for e2 in basis[i:]:
            if sum(e) + sum(e2) > bound:
                continue
            g = _monomial(ring, d, bound, e2)
            if not E.apply(f * g) == E.apply(f) * E.apply(g):
                return _exponent_text(e), _exponent_text(e2)
    return None


def _witness(F: FormalGroupLaw, **points) -> dict:
    return {name: [F.ring.format(c) for c in (p.coordinates if isinstance(p, GroupPoint) else p)]
            for name, p in points.items()}


def correspondence_check(F: FormalGroupLaw) -> Report:
    """[psi(e_i), psi(e_j)] = psi(C(e_i, e_j)), phi.psi = id and the cotangent pairing."""
    report = Report(f'lie correspondence {F.name}', F.ring)
    ring, d = F.ring, F.dimension
    L = lie_from_law(F)
    psi = [invariant_derivation(F, _unit(ring, d, i)) for i in range(d)]
    one = (0,) * d
    for i in range(d):
        report.check('phi(psi(e_i)) = e_i', _same(phi_of_derivation(psi[i]), _unit(ring, d, i)), {'i': i + 1})
        report.check('psi(a)(1) = 0', psi[i].column(one).is_zero(), {'i': i + 1})
        for j in range(i + 1, d):
            c = L.bracket_vectors(_unit(ring, d, i), _unit(ring, d, j), ring)
            lhs = psi[i].commutator(psi[j])
            rhs = invariant_derivation(F, c)
            diff = lhs.first_difference(rhs)
            report.check('[psi(e_i), psi(e_j)] = psi(C(e_i, e_j))', diff is None,
                         {'i': i + 1, 'j': j + 1, 'monomial': diff and _exponent_text(diff)})
    pairing = cotangent_pairing(F)
    identity = all(pairing[i][j] == (1 if i == j else 0) for i in range(d) for j in range(d))
    report.check('cotangent pairing is the identity', identity, [[ring.format(c) for c in row] for row in pairing])
    report.add('lie_algebra', L.to_json())
    return report


def _working_ring(F: FormalGroupLaw, x: GroupPoint):
    """Guard-digit ring covering both the log and the exp series at x's level."""
    ring = F.ring
    if ring.is_exact:
        return ring, None, None, None
    gain = lattice_gain(ring, x.coordinates)
    k_log, g_log = log_terms(ring, gain)
    k_exp, g_exp = exp_terms(ring, gain)
    # exp divides what log already divided, so both losses add up
    return ring.with_guard(g_log + g_exp), k_log, k_exp, gain


def explog_verify(F: FormalGroupLaw, trials: int, seed: int, bound: int = None) -> Report:
    """
    The exp/log correspondence on sampled points of G(pR): translation
    actions, left invariance of psi, log rho_x a derivation with
    exp(log rho_x) = rho_x, exp(psi(a)) multiplicative, exp.log = id and
    log(xy) = H(log x, log y).
    """
    ring = F.ring
    report = Report(f'exp/log verification {F.name} over {ring}', ring)
    L = lie_from_law(F)
    base = correspondence_check(F)
    for name, entry in base.checks.items():
        for _ in range(entry['passed']):
            report.check(name, True)
        for _ in range(entry['failed']):
            report.check(name, False, entry.get('first_failure'))
    rng = random.Random(seed)
    try:
        for trial in range(trials):
            x = sample_point(F, rng, bound)
            y = sample_point(F, rng, bound)
            a = sample_lattice_point(ring, F.dimension, rng, bound)
            witness = dict(trial=trial, **_witness(F, x=x, y=y, a=a))
            logging.debug(f"trial {trial}: {witness}")
            xy = group_mul(F, x, y)
            rho_x, rho_y = translation(F, x, RIGHT), translation(F, y, RIGHT)
            lam_x, lam_y = translation(F, x, LEFT), translation(F, y, LEFT)
            report.check('rho_x rho_y = rho_xy', rho_x @ rho_y == translation(F, xy, RIGHT), witness)
            report.check('lambda_x lambda_y = lambda_xy', lam_x @ lam_y == translation(F, xy, LEFT), witness)
            report.check('lambda_x rho_y = rho_y lambda_x', lam_x @ rho_y == rho_y @ lam_x, witness)
            psi_a = invariant_derivation(F, a)
            report.check('psi(a) lambda_x = lambda_x psi(a)', psi_a @ lam_x == lam_x @ psi_a, witness)
            report.check('phi(psi(a)) = a', _same(phi_of_derivation(psi_a), a), witness)

            work, k_log, k_exp, gain = _working_ring(F, x)
            W = F.over(work)
            xw = GroupPoint(W, [work.promote(c) for c in x.coordinates])
            rho = translation(W, xw, RIGHT)
            log_rho_work = operator_log(rho, k_log, gain)
            # the series are summed to p^N only, so every check runs in the ring of F
            log_rho = log_rho_work.over(ring)
            report.check('log rho_x is a derivation', leibniz_defect(log_rho) is None,
                         dict(witness, pair=leibniz_defect(log_rho)))
            report.check('log rho_x kills 1', log_rho.column((0,) * F.dimension).is_zero(), witness)
            report.check('exp(log rho_x) = rho_x', operator_exp(log_rho_work, k_exp, gain).over(ring) == rho_x,
                         witness)
            if not ring.is_exact:
                a_gain = lattice_gain(ring, a)
                k_a, g_a = exp_terms(ring, a_gain)
                wa = ring.with_guard(g_a)
                psi_work = invariant_derivation(F.over(wa), [wa.promote(c) for c in a])
                exp_psi = operator_exp(psi_work, k_a, a_gain).over(ring)
            else:
                exp_psi = operator_exp(psi_a)
            report.check('exp(psi(a)) is multiplicative', multiplicative_defect(exp_psi) is None,
                         dict(witness, pair=multiplicative_defect(exp_psi)))
            report.check('exp(psi(a)) fixes 1', exp_psi.column((0,) * F.dimension) == _monomial(
                exp_psi.ring, F.dimension, F.degree_bound, (0,) * F.dimension), witness)

            log_x, log_y = group_log(F, x), group_log(F, y)
            report.check('exp(log x) = x', group_exp(F, log_x) == x, witness)
            report.check('log(xy) = H(log x, log y)',
                         _same(group_log(F, xy), bch_eval(L, log_x, log_y, ring=ring)), witness)
    except SeriesDivergence as e:
        raise InputError(f"{F.name} does not have terminating exp/log series over {ring}; "
                         f"use a p-adic backend ({e})", field='precision')
    report.add('law', F.name)
    report.add('degree_bound', F.degree_bound)
    report.add('trials', trials)
    report.add('seed', seed)
    return report


def adjoint_verify(F: FormalGroupLaw, trials: int, seed: int, bound: int = None) -> Report:
    """tau_x(psi(b)) = psi(e^{ad log x} b) for every basis vector b and sampled x."""
    ring, d = F.ring, F.dimension
    report = Report(f'adjoint verification {F.name} over {ring}', ring)
    L = lie_from_law(F)
    identity = GroupPoint.identity(F)
    for j in range(d):
        w = invariant_derivation(F, _unit(ring, d, j))
        report.check('tau_e(w) = w', adjoint_action(F, identity, w) == w, {'b': j + 1})
    rng = random.Random(seed)
    try:
        for trial in range(trials):
            x = sample_point(F, rng, bound)
            a = group_log(F, x)
            for j in range(d):
                b = _unit(ring, d, j)
                lhs = adjoint_action(F, x, invariant_derivation(F, b))
                rhs = invariant_derivation(F, exp_ad_ring(L, a, b, ring))
                diff = lhs.first_difference(rhs)
                report.check('tau_x(psi(b)) = psi(exp(ad log x) b)', diff is None,
                             dict(trial=trial, b=j + 1, monomial=diff and _exponent_text(diff),
                                  **_witness(F, x=x, log_x=a)))
    except SeriesDivergence as e:
        raise InputError(f"the adjoint identity for {F.name} needs terminating series over {ring}; "
                         f"use a p-adic backend ({e})", field='precision')
    report.add('law', F.name)
    report.add('trials', trials)
    report.add('seed', seed)
    return report


def unipotence_verify(F: FormalGroupLaw, trials: int, seed: int, k: int = 2, bound: int = None) -> Report:
    """Conjugation unipotent on I/I^k implies ad(log x) nilpotent, on sampled x."""
    report = Report(f'unipotence {F.name} over {F.ring}', F.ring)
    if F.degree_bound < 2 * k:
        logging.warning(f"degree bound {F.degree_bound} below 2k = {2 * k}, translations on I/I^{k} lose terms")
    report.check('identity conjugation is unipotent', is_unipotent(conjugation_operator(F, GroupPoint.identity(F)), k))
    rng = random.Random(seed)
    outcomes = []
    for trial in range(trials):
        x = sample_point(F, rng, bound)
        outcome = conjugation_unipotence_check(F, x, k)
        outcomes.append(outcome)
        report.check('unipotent conjugation implies nilpotent ad(log x)', outcome['holds'],
                     dict(trial=trial, **outcome))
    unipotent = sum(1 for o in outcomes if o['conjugation_unipotent'])
    if outcomes and unipotent < len(outcomes):
        report.flag('conjugation not unipotent',
                    f"{len(outcomes) - unipotent} of {len(outcomes)} sampled points act non-unipotently on I/I^{k}")
    report.add('law', F.name)
    report.add('k', k)
    report.add('unipotent_points', unipotent)
    report.add('trials', trials)
    report.add('seed', seed)
    return report

# vim: ts=4 sw=4 et
