import os

UPSET_BOUND = 20
FILTER_BOUND = 12
JID_EXHAUSTIVE_BOUND = 10
JID_SAMPLES = 10_000
ASSIGNMENT_BOUND = 10**6


def enumeration_bound(default):
    """Return the enumeration bound, honouring the ``LGC_MAX_CARRIER`` override."""
    value = os.environ.get("LGC_MAX_CARRIER")
    if value:
        return int(value)
    return default
