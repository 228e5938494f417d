"""Global tunables: enumeration budget and backend selection knobs."""

import os

DEFAULT_BUDGET = 1 << 20


def enumeration_budget(explicit=None):
    """Resolve the element-enumeration budget.

    An explicit argument wins; otherwise the RINGLAB_BUDGET environment
    variable; otherwise the built-in default of 2**20.
    """
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("RINGLAB_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET
