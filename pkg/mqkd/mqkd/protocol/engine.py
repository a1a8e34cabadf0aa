"""Drives protocol rounds and whole sessions."""
from typing import Dict, Iterator, Optional

import numpy as np

from mqkd.distill.bits import derive_alice_bit, derive_bob_bit
from mqkd.protocol.parties import Participant, Party, ThirdParty
from mqkd.protocol.rounds import DRAWS_PER_ROUND, CaseLabel, RoundRecord, Segment, classify_case
from mqkd.protocol.transcript import Transcript
from mqkd.utils.logging import logger
from mqkd.utils.misc import session_streams


def build_record(round_id, alice_op, bob_op, tp_outcome, disclosed=False) -> RoundRecord:
    case = classify_case(alice_op, bob_op)
    alice_bit = bob_bit = None
    if case is CaseLabel.KEY:
        alice_bit = derive_alice_bit(alice_op)
        bob_bit = derive_bob_bit(bob_op, tp_outcome)
    return RoundRecord(round_id, alice_op, bob_op, tp_outcome, case, alice_bit, bob_bit, disclosed)


def _channel_is_deterministic(adversary) -> bool:
    return adversary is None or getattr(adversary, 'deterministic', False)


def run_round(
    round_id: int,
    rng: Iterator[float],
    adversary=None,
    alice: Optional[Participant] = None,
    bob: Optional[Participant] = None,
    tp: Optional[ThirdParty] = None,
    channel_cache: Optional[Dict] = None,
) -> RoundRecord:
    """Run one round TP -> Alice -> Bob -> TP.

    Args:
        round_id: index of the round in its session.
        rng: iterator of uniform draws in [0, 1); exactly ``DRAWS_PER_ROUND``
            are consumed whatever the adversary does.
        adversary: hook with ``begin_round()`` and
            ``intercept(segment, state, rand)``; ``None`` for an honest channel.
        channel_cache: maps (alice_op, bob_op) to the state arriving at TP.
            Only used when the channel is deterministic (no adversary, or a
            hook flagged ``deterministic``); shared by the rounds of a session.
    """
    alice = alice if alice is not None else Participant(Party.ALICE)
    bob = bob if bob is not None else Participant(Party.BOB)
    tp = tp if tp is not None else ThirdParty()

    alice_op = alice.choose(rng)
    bob_op = bob.choose(rng)
    segment_draws = (next(rng), next(rng), next(rng))
    measure_draw = next(rng)

    if channel_cache is not None and _channel_is_deterministic(adversary):
        state = channel_cache.get((alice_op, bob_op))
        if state is None:
            state = channel_cache[(alice_op, bob_op)] = _travel(
                adversary, alice, bob, tp, alice_op, bob_op, segment_draws
            )
    else:
        state = _travel(adversary, alice, bob, tp, alice_op, bob_op, segment_draws)
    tp_outcome = tp.measure(state, measure_draw)

    return build_record(round_id, alice_op, bob_op, tp_outcome)


def _travel(adversary, alice, bob, tp, alice_op, bob_op, segment_draws):
    """The travel qubit's trip from TP's source back to TP's detector."""
    if adversary is not None:
        adversary.begin_round()
    state = tp.prepare()
    if adversary is not None:
        state = adversary.intercept(Segment.TP_TO_ALICE, state, segment_draws[0])
    state = alice.act(state, alice_op)
    if adversary is not None:
        state = adversary.intercept(Segment.ALICE_TO_BOB, state, segment_draws[1])
    state = bob.act(state, bob_op)
    if adversary is not None:
        state = adversary.intercept(Segment.BOB_TO_TP, state, segment_draws[2])
    return state


def descriptor_of(adversary) -> str:
    return 'null' if adversary is None else adversary.descriptor()


def run_session(
    n_rounds: int,
    seed: int,
    adversary=None,
    alice: Optional[Participant] = None,
    bob: Optional[Participant] = None,
) -> Transcript:
    """Run ``n_rounds`` rounds from the 'rounds' stream of ``seed``.

    Round ``i`` reads row ``i`` of one block of uniform draws, so every round
    owns a fixed substream and the transcript depends only on the seed, the
    adversary and the forced operations.
    """
    if n_rounds < 1:
        raise ValueError(f"n_rounds must be >= 1, got {n_rounds}")
    draws = round_draws(seed, n_rounds)
    alice = alice if alice is not None else Participant(Party.ALICE)
    bob = bob if bob is not None else Participant(Party.BOB)
    tp = ThirdParty()

    channel_cache = {} if _channel_is_deterministic(adversary) else None

    transcript = Transcript(seed=seed, n_rounds=n_rounds, adversary=descriptor_of(adversary))
    logger.info(f"Running {n_rounds} rounds (seed={seed}, adversary={transcript.adversary})")
    for round_id, row in enumerate(draws.tolist()):
        transcript.append(run_round(round_id, iter(row), adversary, alice, bob, tp, channel_cache))
    return transcript


def round_draws(seed: int, n_rounds: int) -> np.ndarray:
    """The per-round draw block of a session, as consumed by ``run_session``."""
    return session_streams(seed)['rounds'].random((n_rounds, DRAWS_PER_ROUND))
