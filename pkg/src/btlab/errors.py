"""Exception hierarchy shared across btlab.

Two base classes matter for the CLI exit codes: ``InputError`` maps to
exit code 2 (the caller handed us something unusable) and
``VerificationError`` maps to exit code 1 (a consistency check between
two independent computations failed).
"""


class BtlabError(Exception):
    pass


class InputError(BtlabError):
    pass


class VerificationError(BtlabError):
    pass
