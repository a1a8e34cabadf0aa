import unittest

import numpy as np
import pytest

from mqkd.adversary.params import (
    COEFFICIENTS,
    LABELS,
    LAYOUTS,
    AttackParams,
    InvalidAttackParams,
    deviation_params,
    format_complex,
    layout_labels,
    parse_complex,
    parse_vector,
)
from mqkd.adversary.unitaries import NoUnitaryCompletionError, build_attack_unitaries, complete_unitary
from mqkd.protocol.rounds import Segment
from mqkd.quantum.operators import KET_MINUS, KET_PLUS, SQRT1_2
from mqkd.quantum.state import StateVector, ket, prepare_plus, tensor, zero_register


class TestParsing(unittest.TestCase):
    def test_parse_complex(self):
        self.assertEqual(parse_complex('0.5,-0.25'), complex(0.5, -0.25))
        self.assertEqual(parse_complex(' 1 '), complex(1.0, 0.0))
        self.assertEqual(parse_complex(0.6), complex(0.6, 0.0))
        for bad in ('x', '1,2,3', ''):
            with self.assertRaises(InvalidAttackParams):
                parse_complex(bad)

    def test_format_is_exact(self):
        for value in (complex(0.1, -0.7), complex(SQRT1_2, 0.0), complex(-1e-17, 3.0)):
            self.assertEqual(parse_complex(format_complex(value)), value)

    def test_parse_vector(self):
        np.testing.assert_array_equal(parse_vector('1,0,0,1'), [1.0, 1j])
        with self.assertRaises(InvalidAttackParams):
            parse_vector('1,0,0')


class TestAttackParams(unittest.TestCase):
    def test_pass_through(self):
        params = AttackParams.pass_through()
        self.assertEqual(params.a1, 1.0)
        self.assertEqual(params.B2, 1.0)
        self.assertEqual(params.source, 'pass_through')

    def test_override_renormalizes_partner(self):
        params = AttackParams.pass_through().with_overrides(a2=0.6)
        self.assertAlmostEqual(params.a1, 0.8)
        self.assertEqual(params.a2, 0.6)
        self.assertEqual(params.source, 'custom')

    def test_override_keeps_partner_phase(self):
        params = AttackParams(a1=1j, a2=0.0).with_overrides(a2=0.6)
        self.assertAlmostEqual(params.a1, 0.8j)

    def test_override_both_members(self):
        params = AttackParams.pass_through().with_overrides(C1=SQRT1_2, C2=-SQRT1_2)
        self.assertEqual(params.C2, -SQRT1_2)

    def test_invalid_overrides(self):
        with self.assertRaises(InvalidAttackParams):
            AttackParams.pass_through().with_overrides(a2=1.5)
        with self.assertRaises(InvalidAttackParams):
            AttackParams.pass_through().with_overrides(z9=0.1)
        with self.assertRaises(InvalidAttackParams):
            AttackParams.pass_through().with_overrides(a1=0.5, a2=0.5)

    def test_unnormalized_pair(self):
        with self.assertRaises(InvalidAttackParams):
            AttackParams(a1=0.5)

    def test_label_checks(self):
        labels = layout_labels('shared')
        labels['e2'] = labels['e1']
        with self.assertRaises(InvalidAttackParams):
            AttackParams(labels=labels)
        labels = layout_labels('shared')
        labels['F1'] = np.array([1.0, 0.0])
        with self.assertRaises(InvalidAttackParams):
            AttackParams(labels=labels)
        labels = layout_labels('distinct')
        del labels['K2']
        with self.assertRaises(InvalidAttackParams):
            AttackParams(labels=labels)
        with self.assertRaises(InvalidAttackParams):
            layout_labels('tangled')

    def test_shared_layout(self):
        labels = layout_labels('shared')
        np.testing.assert_array_equal(labels['F1'], labels['G2'])
        np.testing.assert_array_equal(labels['H1'], labels['K2'])
        distinct = layout_labels('distinct')
        family = np.stack([distinct[name] for name in ('F1', 'F2', 'G1', 'G2')], axis=1)
        np.testing.assert_allclose(family.conj().T @ family, np.eye(4))

    def test_shared_fg_layout(self):
        labels = layout_labels('shared_fg')
        np.testing.assert_array_equal(labels['F1'], labels['G2'])
        family = np.stack([labels[name] for name in ('H1', 'H2', 'K1', 'K2')], axis=1)
        np.testing.assert_allclose(family.conj().T @ family, np.eye(4))
        rng = np.random.default_rng(6)
        for _ in range(20):
            params = AttackParams.random(rng, on_manifold=True, layout='shared_fg')
            self.assertEqual(params.layout, 'shared_fg')
            self.assertAlmostEqual(abs(np.vdot(params.labels['H1'], params.labels['K2'])), 0.0, places=9)
            build_attack_unitaries(params)

    def test_random_params_are_valid(self):
        rng = np.random.default_rng(5)
        for layout in LAYOUTS:
            for _ in range(50):
                AttackParams.random(rng, layout=layout).validate()
        with self.assertRaises(InvalidAttackParams):
            AttackParams.random(rng, on_manifold=True, layout='distinct')

    def test_deviation_params(self):
        params = deviation_params('D1', 0.2)
        self.assertAlmostEqual(abs(params.D2), np.sqrt(0.96))
        self.assertEqual(params.a2, 0.0)


@pytest.mark.parametrize('layout', ['distinct', 'shared_fg'])
def test_save_and_load(tmp_path, layout):
    params = AttackParams.random(np.random.default_rng(8), layout=layout)
    path = str(tmp_path / 'attack.conf')
    params.save(path)
    loaded = AttackParams.from_file(path)
    assert loaded.layout == layout
    assert loaded.source == path
    for name in COEFFICIENTS:
        assert getattr(loaded, name) == getattr(params, name)
    for name in LABELS:
        np.testing.assert_array_equal(loaded.labels[name], params.labels[name])


def test_load_with_basis_seed(tmp_path):
    path = tmp_path / 'attack.conf'
    path.write_text('layout = shared\nbasis_seed = 3\na2 = 0.1\n')
    params = AttackParams.from_file(str(path))
    assert abs(params.a1) == pytest.approx(np.sqrt(0.99))
    np.testing.assert_array_equal(params.labels['F1'], params.labels['G2'])
    assert not np.allclose(params.labels['e1'], [1.0, 0.0])


def test_load_rejects_unknown_keys(tmp_path):
    path = tmp_path / 'attack.conf'
    path.write_text('a9 = 0.1\n')
    with pytest.raises(InvalidAttackParams):
        AttackParams.from_file(str(path))


def _apply_full(matrix, vector):
    return matrix @ np.asarray(vector, dtype=np.complex128)


class TestUnitaries(unittest.TestCase):
    def test_unitarity(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            for u in build_attack_unitaries(AttackParams.random(rng, layout='distinct')):
                np.testing.assert_allclose(u @ u.conj().T, np.eye(u.shape[0]), atol=1e-9)

    def test_pass_through_is_identity(self):
        rng = np.random.default_rng(7)
        for u, n_ancilla in zip(build_attack_unitaries(AttackParams.pass_through()), (1, 2, 2)):
            for _ in range(20):
                psi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
                psi = psi / np.linalg.norm(psi)
                joint = np.kron(psi, zero_register(n_ancilla).amps)
                np.testing.assert_allclose(_apply_full(u, joint), joint, atol=1e-12)

    def test_defining_relations(self):
        rng = np.random.default_rng(9)
        zero2 = zero_register(2).amps
        for _ in range(50):
            params = AttackParams.random(rng)
            u1, u2, u3 = build_attack_unitaries(params)
            labels = params.labels
            np.testing.assert_allclose(
                _apply_full(u1, np.kron(KET_PLUS, zero_register(1).amps)),
                params.a1 * np.kron(KET_PLUS, labels['e1']) + params.a2 * np.kron(KET_MINUS, labels['e2']),
                atol=1e-9,
            )
            np.testing.assert_allclose(
                _apply_full(u2, np.kron(KET_PLUS, zero2)),
                params.A1 * np.kron(KET_PLUS, labels['F1']) + params.A2 * np.kron(KET_MINUS, labels['F2']),
                atol=1e-9,
            )
            np.testing.assert_allclose(
                _apply_full(u2, np.kron(KET_MINUS, zero2)),
                params.B1 * np.kron(KET_PLUS, labels['G1']) + params.B2 * np.kron(KET_MINUS, labels['G2']),
                atol=1e-9,
            )
            np.testing.assert_allclose(
                _apply_full(u3, np.kron(KET_MINUS, zero2)),
                params.D1 * np.kron(KET_PLUS, labels['K1']) + params.D2 * np.kron(KET_MINUS, labels['K2']),
                atol=1e-9,
            )

    def test_no_completion_for_colliding_outputs(self):
        labels = layout_labels('shared')
        labels['G1'], labels['G2'] = labels['F1'], labels['F2']
        params = AttackParams(A1=SQRT1_2, A2=SQRT1_2, B1=SQRT1_2, B2=SQRT1_2, labels=labels)
        with self.assertRaises(NoUnitaryCompletionError):
            build_attack_unitaries(params)

    def test_completion_rejects_bad_inputs(self):
        with self.assertRaises(ValueError):
            complete_unitary([np.array([1.0, 1.0])], [np.array([1.0, 0.0])])
        with self.assertRaises(ValueError):
            complete_unitary([np.array([1.0, 0.0])], [np.array([1.0, 0.0, 0.0, 0.0])])

    def test_segments_attach_in_order(self):
        unitaries = build_attack_unitaries(AttackParams.pass_through())
        state = unitaries.apply(Segment.TP_TO_ALICE, prepare_plus())
        self.assertEqual(state.n_qubits, 2)
        state = unitaries.apply(Segment.ALICE_TO_BOB, state)
        self.assertEqual(state.n_qubits, 4)
        with self.assertRaises(ValueError):
            unitaries.apply(Segment.ALICE_TO_BOB, state)
        with self.assertRaises(ValueError):
            unitaries.apply(Segment.BOB_TO_TP, prepare_plus())
        expected = tensor(prepare_plus(), zero_register(3))
        self.assertIsInstance(state, StateVector)
        np.testing.assert_allclose(state.amps, expected.amps, atol=1e-12)

    def test_travel_qubit_is_first(self):
        unitaries = build_attack_unitaries(AttackParams.pass_through().with_overrides(a2=1.0))
        state = unitaries.apply(Segment.TP_TO_ALICE, prepare_plus())
        # a2 = 1 flips |+> to |-> and marks the ancilla with e2 = |1>
        np.testing.assert_allclose(state.amps, np.kron(KET_MINUS, ket(0, 1).amps), atol=1e-12)
