"""Collective attack: exact statistics, the undetectability manifold and the term expansion."""
import itertools
import os
import tempfile
import unittest

import numpy as np
import pytest
import timeout_decorator

from mqkd.adversary import build_adversary
from mqkd.adversary.analysis import (
    collective_statistics,
    eve_leakage,
    no_detection_residual,
    run_collective_round,
)
from mqkd.adversary.collective import CollectiveAttack
from mqkd.adversary.params import UNDETECTABLE_LAYOUTS, AttackParams, deviation_params, layout_labels
from mqkd.adversary.report import attack_report
from mqkd.adversary.symbolic import expand_round, expansion_distribution
from mqkd.adversary.unitaries import build_attack_unitaries
from mqkd.protocol.engine import run_session
from mqkd.protocol.rounds import KEY_OP_PAIRS
from mqkd.quantum.operators import OP_ALPHABET, Outcome, UnitaryOp
from mqkd.quantum.state import fidelity
from mqkd.tests.utils_for_tests import SEED

I, Z, H = UnitaryOp.IDENTITY, UnitaryOp.PAULI_Z, UnitaryOp.HADAMARD
ALL_PAIRS = tuple(itertools.product(OP_ALPHABET, repeat=2))
DISCARD_PAIRS = ((H, I), (H, Z), (I, H), (Z, H))


class TestCollectiveRound(unittest.TestCase):
    def test_pass_through_is_noiseless(self):
        params = AttackParams.pass_through()
        for alice_op, bob_op in ((I, I), (H, H)):
            result = run_collective_round(params, alice_op, bob_op)
            self.assertAlmostEqual(result.probabilities[Outcome.PLUS], 1.0, places=12)
        self.assertAlmostEqual(run_collective_round(params, Z, I).probabilities[Outcome.MINUS], 1.0, places=12)

    def test_distributions_are_normalized(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            params = AttackParams.random(rng, layout='distinct')
            unitaries = build_attack_unitaries(params)
            for alice_op, bob_op in ALL_PAIRS:
                result = run_collective_round(params, alice_op, bob_op, unitaries)
                self.assertAlmostEqual(sum(result.probabilities.values()), 1.0, delta=1e-9)
                self.assertAlmostEqual(result.final_state.norm(), 1.0, delta=1e-9)

    def test_ancilla_states(self):
        params = AttackParams.random(np.random.default_rng(12))
        result = run_collective_round(params, H, I)
        for outcome in (Outcome.PLUS, Outcome.MINUS):
            self.assertAlmostEqual(result.ancilla_state(outcome).norm(), 1.0, delta=1e-9)
        self.assertIsNone(run_collective_round(AttackParams.pass_through(), I, I).ancilla_state(Outcome.MINUS))


class TestResidual(unittest.TestCase):
    def test_zero_on_manifold(self):
        self.assertEqual(no_detection_residual(AttackParams.pass_through()), 0.0)
        rng = np.random.default_rng(13)
        for _ in range(100):
            self.assertLess(no_detection_residual(AttackParams.random(rng, on_manifold=True)), 1e-9)

    def test_positive_off_manifold(self):
        for name in ('a2', 'A2', 'B1', 'C2', 'D1'):
            self.assertGreaterEqual(no_detection_residual(deviation_params(name, 0.1)), 0.1 - 1e-12)
        labels = AttackParams.pass_through().labels
        distinct = AttackParams(labels=dict(labels, G2=labels['G1'], G1=labels['G2']), layout='distinct')
        self.assertGreater(no_detection_residual(distinct), 1.0)


@pytest.mark.parametrize('a2', [0.05, 0.1, 0.3, 0.5, 0.5 ** 0.5])
def test_single_coefficient_deviation(a2):
    stats = collective_statistics(deviation_params('a2', a2))
    assert stats.detection_prob_case1 == pytest.approx(a2 ** 2, abs=1e-9)
    assert stats.disclosed_mismatch_prob == pytest.approx(a2 ** 2, abs=1e-9)
    assert stats.leakage_bits == pytest.approx(0.0, abs=1e-9)


@timeout_decorator.timeout(300)
def test_undetectable_attacks_learn_nothing():
    rng = np.random.default_rng(14)
    for point in range(1000):
        params = AttackParams.random(rng, on_manifold=True, layout=UNDETECTABLE_LAYOUTS[point % 2])
        stats = collective_statistics(params)
        assert stats.detection_prob_case1 < 1e-9
        assert stats.disclosed_mismatch_prob < 1e-9
        assert stats.leakage_bits < 1e-9


def test_last_ancilla_only_repeats_the_public_outcome():
    rng = np.random.default_rng(20)
    for _ in range(100):
        params = AttackParams.random(rng, on_manifold=True, layout='shared_fg')
        labels = params.labels
        assert abs(np.vdot(labels['H1'], labels['K2'])) < 1e-9
        assert no_detection_residual(params) < 1e-9
        # TP's ancilla tells a |+> round from a |-> round apart ...
        plus = run_collective_round(params, I, I).ancilla_state(Outcome.PLUS)
        minus = run_collective_round(params, Z, I).ancilla_state(Outcome.MINUS)
        assert fidelity(plus, minus) < 1e-9
        # ... which TP announces anyway, so the key stays hidden
        stats = collective_statistics(params)
        assert stats.detection_prob_case1 < 1e-9
        assert stats.disclosed_mismatch_prob < 1e-9
        assert stats.leakage_bits < 1e-9


def test_orthogonal_last_ancilla_fixed_point():
    phase = complex(np.exp(0.3j))
    params = AttackParams(A1=phase, B2=phase, C1=1j, D2=-1.0, labels=layout_labels('shared_fg'), layout='shared_fg')
    assert no_detection_residual(params) == 0.0
    stats = collective_statistics(params)
    assert stats.detection_prob_case1 < 1e-9
    assert stats.disclosed_mismatch_prob < 1e-9
    assert stats.leakage_bits < 1e-9
    assert eve_leakage(params) < 1e-9


@pytest.mark.parametrize('batch', range(10))
@timeout_decorator.timeout(300)
def test_undetectable_attacks_in_sessions(batch):
    rng = np.random.default_rng([15, batch])
    for point in range(100):
        params = AttackParams.random(rng, on_manifold=True, layout=UNDETECTABLE_LAYOUTS[point % 2])
        stats = attack_report(params, n_rounds=10000, seed=SEED + point)
        assert stats.detection_prob_case1 == 0.0
        assert stats.disclosed_mismatch_prob == 0.0
        assert stats.leakage_bits < 1e-9


@pytest.mark.parametrize('delta', [0.05, 0.1, 0.2])
def test_leaving_the_manifold_is_detectable(delta):
    base = AttackParams.random(np.random.default_rng(16), on_manifold=True)
    for name in ('a2', 'A2', 'B1', 'C2', 'D1'):
        stats = collective_statistics(deviation_params(name, delta, base))
        assert stats.detection_prob_case1 + stats.disclosed_mismatch_prob > delta ** 2 / 4


@timeout_decorator.timeout(300)
def test_random_off_manifold_points_are_detectable():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 100:
        params = AttackParams.random(rng)
        if no_detection_residual(params) <= 0.05:
            continue
        assert collective_statistics(params).detectable
        checked += 1


def test_distinct_layout_leaks_through_the_check():
    labels = AttackParams.pass_through().labels
    swapped = AttackParams(labels=dict(labels, G1=labels['G2'], G2=labels['G1']), layout='distinct')
    stats = collective_statistics(swapped)
    assert stats.detection_prob_case1 == pytest.approx(0.5, abs=1e-9)
    assert stats.disclosed_mismatch_prob == pytest.approx(0.0, abs=1e-9)
    assert stats.leakage_bits > 0.0
    assert eve_leakage(swapped) <= 1.0


class TestExpansion(unittest.TestCase):
    def test_term_count(self):
        params = AttackParams.pass_through()
        self.assertEqual(len(expand_round(params, I, I)), 8)
        self.assertEqual(len(expand_round(params, H, H)), 32)

    @timeout_decorator.timeout(300)
    def test_matches_state_vector(self):
        rng = np.random.default_rng(18)
        for point in range(1000):
            params = AttackParams.random(rng, layout='shared' if point % 2 else 'distinct')
            unitaries = build_attack_unitaries(params)
            pairs = KEY_OP_PAIRS + ((H, H),)
            if point < 100:
                pairs = pairs + DISCARD_PAIRS
            for alice_op, bob_op in pairs:
                exact = run_collective_round(params, alice_op, bob_op, unitaries).probabilities
                expanded = expansion_distribution(params, alice_op, bob_op)
                for outcome in (Outcome.PLUS, Outcome.MINUS):
                    self.assertAlmostEqual(exact[outcome], expanded[outcome], delta=1e-9)


class TestCollectiveHook(unittest.TestCase):
    def test_descriptors(self):
        self.assertEqual(build_adversary('collective:pass_through').descriptor(), 'collective:pass_through')
        hook = build_adversary('collective:random:5')
        self.assertEqual(hook.descriptor(), 'collective:random:5')
        self.assertEqual(hook.params, build_adversary('collective:random:5').params)
        for bad in ('collective', 'collective:random', 'collective:random:1:2'):
            with self.assertRaises(ValueError):
                build_adversary(bad)
        with self.assertRaises(OSError):
            build_adversary('collective:/nonexistent/attack.conf')

    def test_parameter_file(self):
        params = AttackParams.random(np.random.default_rng(19))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'attack.conf')
            params.save(path)
            hook = build_adversary(f'collective:{path}')
        self.assertEqual(hook.descriptor(), f'collective:{path}')
        self.assertEqual(hook.params.coefficients(), params.coefficients())

    @timeout_decorator.timeout(120)
    def test_pass_through_session_matches_honest_session(self):
        honest = run_session(2000, SEED)
        attacked = run_session(2000, SEED, CollectiveAttack(AttackParams.pass_through()))
        self.assertEqual(attacked.records, honest.records)
        self.assertEqual(attacked.adversary, 'collective:pass_through')
