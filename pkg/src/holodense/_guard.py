"""Enumeration guards shared by every brute-force scan."""

import os

POINT_SCAN_DEFAULT = 10**7
SPACE_DEFAULT = 10**6
TUPLE_DEFAULT = 10**7
PLACE_SCAN_DEFAULT = 10**6

ENV_VAR = "HOLODENSE_GUARD"


class GuardExceeded(RuntimeError):
    """A requested enumeration is larger than the configured guard."""


def resolve(guard, default):
    if guard is not None:
        return guard
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return default


def check(size, guard, default, what):
    limit = resolve(guard, default)
    if size > limit:
        raise GuardExceeded(f"{what} needs {size} steps, guard is {limit} (set {ENV_VAR} to raise it)")
