"""Tests for protocol rounds, parties and sessions."""
import ast
import inspect
import itertools
import os
import tempfile
import time
import unittest

import numpy as np
import pytest
import timeout_decorator

from mqkd.adversary.collective import CollectiveAttack
from mqkd.adversary.intercept import InterceptResend
from mqkd.adversary.params import AttackParams
from mqkd.protocol import engine, parties
from mqkd.protocol.engine import build_record, round_draws, run_round, run_session
from mqkd.protocol.parties import Participant, Party, ThirdParty
from mqkd.protocol.rounds import (
    DRAWS_PER_ROUND,
    KEY_OP_PAIRS,
    CaseLabel,
    DiscardRoundError,
    RoundRecord,
    Segment,
    choose_op,
    classify_case,
    expected_outcome,
)
from mqkd.protocol.transcript import Transcript, read_transcript
from mqkd.quantum.operators import OP_ALPHABET, MeasBasis, Outcome, UnitaryOp
from mqkd.tests.utils_for_tests import SEED, forced_session

I, Z, H = UnitaryOp.IDENTITY, UnitaryOp.PAULI_Z, UnitaryOp.HADAMARD


@pytest.fixture(scope='module')
def long_session():
    return run_session(90000, SEED)


class TestCases(unittest.TestCase):
    def test_classify_case(self):
        self.assertIs(classify_case(H, H), CaseLabel.CHECK)
        self.assertIs(classify_case(I, I), CaseLabel.KEY)
        self.assertIs(classify_case(H, Z), CaseLabel.DISCARD)
        self.assertIs(classify_case(I, H), CaseLabel.DISCARD)
        counts = {case: 0 for case in CaseLabel}
        for alice_op, bob_op in itertools.product(OP_ALPHABET, repeat=2):
            counts[classify_case(alice_op, bob_op)] += 1
        self.assertEqual(counts, {CaseLabel.CHECK: 1, CaseLabel.KEY: 4, CaseLabel.DISCARD: 4})

    def test_expected_outcome(self):
        self.assertIs(expected_outcome(I, I), Outcome.PLUS)
        self.assertIs(expected_outcome(Z, I), Outcome.MINUS)
        self.assertIs(expected_outcome(I, Z), Outcome.MINUS)
        self.assertIs(expected_outcome(Z, Z), Outcome.PLUS)
        self.assertIs(expected_outcome(H, H), Outcome.PLUS)
        with self.assertRaises(DiscardRoundError):
            expected_outcome(H, I)

    def test_segment_tags(self):
        self.assertIs(Segment.from_tag('AliceToBob'), Segment.ALICE_TO_BOB)
        self.assertIs(Segment.from_tag('bob_to_tp'), Segment.BOB_TO_TP)
        with self.assertRaises(ValueError):
            Segment.from_tag('AliceToTP')


class TestChooseOp(unittest.TestCase):
    def test_boundaries(self):
        self.assertIs(choose_op(iter([0.0])), I)
        self.assertIs(choose_op(iter([0.34])), Z)
        self.assertIs(choose_op(iter([0.999999])), H)

    def test_uniform_frequencies(self):
        draws = np.random.default_rng(1).random((90000, 2))
        alice = [choose_op(iter([u])) for u in draws[:, 0]]
        bob = [choose_op(iter([u])) for u in draws[:, 1]]
        for op in OP_ALPHABET:
            self.assertAlmostEqual(alice.count(op) / 90000, 1 / 3, delta=0.01)
        both_non_h = sum(a is not H and b is not H for a, b in zip(alice, bob))
        self.assertAlmostEqual(both_non_h / 90000, 4 / 9, delta=0.01)

    def test_replay(self):
        draws = round_draws(SEED, 100)
        first = [choose_op(iter([u])) for u in draws[:, 0]]
        second = [choose_op(iter([u])) for u in round_draws(SEED, 100)[:, 0]]
        self.assertEqual(first, second)


class TestRoundRecord(unittest.TestCase):
    def test_key_bits_only_in_key_rounds(self):
        with self.assertRaises(ValueError):
            RoundRecord(0, H, H, Outcome.PLUS, CaseLabel.CHECK, alice_bit=0, bob_bit=0)
        with self.assertRaises(ValueError):
            RoundRecord(0, I, Z, Outcome.MINUS, CaseLabel.KEY)

    def test_case_must_match_ops(self):
        with self.assertRaises(ValueError):
            RoundRecord(0, I, H, Outcome.PLUS, CaseLabel.KEY, alice_bit=0, bob_bit=0)

    def test_dict_round_trip(self):
        record = build_record(7, Z, I, Outcome.MINUS, disclosed=True)
        self.assertEqual(list(record.to_dict()), [
            'round_id', 'alice_op', 'bob_op', 'tp_outcome', 'case', 'alice_bit', 'bob_bit', 'disclosed',
        ])
        self.assertEqual(RoundRecord.from_dict(record.to_dict()), record)


class TestRounds(unittest.TestCase):
    @timeout_decorator.timeout(10)
    def test_key_table_exact(self):
        start = time.perf_counter()
        transcripts = [forced_session(alice_op.value, bob_op.value, 10000) for alice_op, bob_op in KEY_OP_PAIRS]
        # four forced 10^4-round sessions fit in one second
        self.assertLess(time.perf_counter() - start, 1.0)
        for (alice_op, bob_op), transcript in zip(KEY_OP_PAIRS, transcripts):
            expected = expected_outcome(alice_op, bob_op)
            self.assertTrue(all(r.tp_outcome is expected for r in transcript))
            self.assertTrue(all(r.alice_bit == r.bob_bit for r in transcript))

    @timeout_decorator.timeout(60)
    def test_check_rounds_always_plus(self):
        transcript = forced_session('H', 'H', 10000)
        self.assertTrue(all(r.tp_outcome is Outcome.PLUS for r in transcript))
        self.assertTrue(all(r.case is CaseLabel.CHECK for r in transcript))

    @timeout_decorator.timeout(60)
    def test_discard_rounds_are_random(self):
        transcript = forced_session('H', 'I', 10000)
        n_plus = sum(r.tp_outcome is Outcome.PLUS for r in transcript)
        self.assertAlmostEqual(n_plus / 10000, 0.5, delta=0.02)

    def test_round_consumes_fixed_draws(self):
        class Recorder(object):
            def __init__(self):
                self.segments = []

            def begin_round(self):
                self.segments.append('begin')

            def intercept(self, segment, state, rand):
                self.segments.append(segment)
                return state

        draws = iter(np.linspace(0.05, 0.95, DRAWS_PER_ROUND + 1).tolist())
        recorder = Recorder()
        run_round(0, draws, recorder)
        self.assertEqual(recorder.segments, ['begin', Segment.TP_TO_ALICE, Segment.ALICE_TO_BOB, Segment.BOB_TO_TP])
        self.assertAlmostEqual(next(draws), 0.95)

    def test_forced_op_still_consumes_draw(self):
        stream = iter([0.9, 0.1])
        self.assertIs(Participant(Party.ALICE, Z).choose(stream), Z)
        self.assertAlmostEqual(next(stream), 0.1)

    def test_tp_is_not_a_participant(self):
        with self.assertRaises(ValueError):
            Participant(Party.TP)


class TestSessions(unittest.TestCase):
    def test_short_session(self):
        transcript = run_session(9, SEED)
        self.assertEqual(len(transcript), 9)
        self.assertEqual([r.round_id for r in transcript], list(range(9)))
        for record in transcript:
            self.assertIs(record.case, classify_case(record.alice_op, record.bob_op))

    def test_rejects_empty_session(self):
        with self.assertRaises(ValueError):
            run_session(0, SEED)

    def test_determinism(self):
        self.assertEqual(run_session(500, SEED).to_lines(), run_session(500, SEED).to_lines())
        self.assertNotEqual(run_session(500, SEED).to_lines(), run_session(500, SEED + 1).to_lines())

    def test_prefix_stable(self):
        # a longer session replays the rounds of a shorter one
        short = run_session(100, SEED).records
        long = run_session(300, SEED).records
        self.assertEqual(short, long[:100])

    def test_reused_channel_matches_fresh_rounds(self):
        rows = round_draws(SEED, 600).tolist()
        fresh = [run_round(round_id, iter(row)) for round_id, row in enumerate(rows)]
        self.assertEqual(list(run_session(600, SEED).records), fresh)

    def test_reused_channel_matches_fresh_rounds_under_attack(self):
        hook = CollectiveAttack(AttackParams.random(np.random.default_rng(3)))
        self.assertTrue(hook.deterministic)
        rows = round_draws(SEED, 600).tolist()
        fresh = [run_round(round_id, iter(row), hook) for round_id, row in enumerate(rows)]
        self.assertEqual(list(run_session(600, SEED, hook).records), fresh)

    def test_measuring_hooks_see_every_round(self):
        hook = InterceptResend(MeasBasis.Z, Segment.ALICE_TO_BOB)
        self.assertFalse(hook.deterministic)
        transcript = run_session(2000, SEED, hook)
        key_pairs = [r for r in transcript.key_records() if r.alice_op is r.bob_op]
        errors = sum(r.tp_outcome is not Outcome.PLUS for r in key_pairs)
        self.assertAlmostEqual(errors / len(key_pairs), 0.5, delta=0.1)


@timeout_decorator.timeout(120)
def test_case_frequencies(long_session):
    counts = long_session.case_counts()
    n = len(long_session)
    assert counts[CaseLabel.CHECK] / n == pytest.approx(1 / 9, abs=0.01)
    assert counts[CaseLabel.KEY] / n == pytest.approx(4 / 9, abs=0.01)
    assert counts[CaseLabel.DISCARD] / n == pytest.approx(4 / 9, abs=0.01)


def test_noiseless_correctness(long_session):
    for record in long_session:
        if record.case is not CaseLabel.DISCARD:
            assert record.tp_outcome is expected_outcome(record.alice_op, record.bob_op)
        if record.case is CaseLabel.KEY:
            assert record.alice_bit == record.bob_bit


class TestTranscript(unittest.TestCase):
    def test_append_only_increasing(self):
        transcript = Transcript(SEED, 2)
        transcript.append(build_record(3, I, I, Outcome.PLUS))
        with self.assertRaises(ValueError):
            transcript.append(build_record(3, Z, Z, Outcome.PLUS))
        with self.assertRaises(ValueError):
            transcript.append(build_record(1, Z, Z, Outcome.PLUS))

    def test_disclosure_copy(self):
        transcript = forced_session('I', 'Z', 6)
        disclosed = transcript.with_disclosure([0, 5])
        self.assertEqual([r.disclosed for r in disclosed], [True, False, False, False, False, True])
        self.assertFalse(any(r.disclosed for r in transcript))

    def test_save_and_read(self):
        transcript = run_session(50, SEED)
        transcript.error_report = {'aborted': False}
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'transcript.jsonl')
            transcript.save(path)
            reread = read_transcript(path)
        self.assertEqual(reread.records, transcript.records)
        self.assertEqual(reread.to_lines(), transcript.to_lines())
        self.assertEqual(reread.error_report, {'aborted': False})

    def test_malformed_lines(self):
        header = '{"type": "session", "seed": 1, "n_rounds": 1}'
        with self.assertRaises(ValueError):
            Transcript.from_lines(['{"type": "round", "round_id": 0}'])
        with self.assertRaises(ValueError):
            Transcript.from_lines([header, header])
        with self.assertRaises(ValueError):
            Transcript.from_lines([header, '{"type": "gossip"}'])


def _called_names(node):
    names = set()
    for call in ast.walk(node):
        if isinstance(call, ast.Call):
            func = call.func
            names.add(func.id if isinstance(func, ast.Name) else getattr(func, 'attr', None))
    return names


def test_party_capabilities_are_confined():
    tree = ast.parse(inspect.getsource(parties))
    classes = {node.name: node for node in tree.body if isinstance(node, ast.ClassDef)}
    assert _called_names(classes['Participant']) <= {'ValueError', 'choose_op', 'apply_op', 'reflect'}
    assert _called_names(classes['ThirdParty']) <= {'prepare_plus', 'measure'}

    imported = set()
    for node in tree.body:
        if isinstance(node, ast.ImportFrom) and node.module == 'mqkd.quantum.state':
            imported |= {alias.name for alias in node.names}
    assert imported == {'StateVector', 'apply_op', 'measure', 'prepare_plus'}


def test_engine_never_touches_qubits():
    tree = ast.parse(inspect.getsource(engine))
    modules = {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)}
    assert not any(module.startswith('mqkd.quantum') for module in modules)
    assert not any(module.startswith('mqkd.adversary') for module in modules)


def test_third_party_measures_x_only():
    tp = ThirdParty()
    assert tp.measure(tp.prepare(), 0.99) is Outcome.PLUS
