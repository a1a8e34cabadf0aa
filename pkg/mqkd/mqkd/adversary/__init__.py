"""Module for attack strategies on the quantum channel."""
import os
import importlib

from mqkd.adversary.hook import AdversaryHook, AttackOutcomeStats


AVAILABLE_ADVERSARIES = {}


def get_adversary_cls(name):
    """Return the registered adversary class called `name`."""
    if name not in AVAILABLE_ADVERSARIES:
        raise ValueError(f"Specified adversary {name!r} not supported! Choose from {sorted(AVAILABLE_ADVERSARIES)}")
    return AVAILABLE_ADVERSARIES[name]


def build_adversary(descriptor):
    """Build a hook from a descriptor such as ``intercept_resend:X:AliceToBob``.

    The part before the first colon names the strategy, the remaining
    colon-separated fields are its arguments.
    """
    if descriptor is None:
        descriptor = 'null'
    if isinstance(descriptor, AdversaryHook):
        return descriptor
    name, *args = descriptor.strip().split(':')
    return get_adversary_cls(name).from_descriptor_args(args)


__all__ = [
    "AdversaryHook",
    "AttackOutcomeStats",
    "build_adversary",
    "get_adversary_cls",
    "register_adversary",
]


def register_adversary(name):
    """Adversary register that can be used to add new strategy classes."""

    def register_adversary_cls(cls):
        if name in AVAILABLE_ADVERSARIES:
            raise ValueError(f'Cannot register duplicate adversary ({name})')
        if not issubclass(cls, AdversaryHook):
            raise ValueError(f'adversary ({name}: {cls.__name__}) must extend AdversaryHook')
        AVAILABLE_ADVERSARIES[name] = cls
        return cls

    return register_adversary_cls


# Auto import python files in this directory
adversary_dir = os.path.dirname(__file__)
for file in os.listdir(adversary_dir):
    path = os.path.join(adversary_dir, file)
    if not file.startswith('_') and not file.startswith('.') and file.endswith('.py'):
        file_name = file[: file.find('.py')]
        module = importlib.import_module('mqkd.adversary.' + file_name)
