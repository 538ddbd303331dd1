"""Exception hierarchy.

Two families matter to callers: bad input (``InvalidInput``, CLI exit 2)
and broken internal bookkeeping (``InvariantViolation``, CLI exit 1).
"""


class ModratError(Exception):
    pass


class InvalidInput(ModratError, ValueError):
    pass


class GenusError(InvalidInput):
    """Raised for g < 2."""


class InvariantViolation(ModratError, RuntimeError):
    """An identity that must hold exactly did not.

    ``identity`` names the failing check so sweeps can tabulate it.
    """

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        msg = identity if not detail else f"{identity}: {detail}"
        super().__init__(msg)


class InapplicableEdge(ModratError, ValueError):
    pass
