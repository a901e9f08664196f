"""Exception hierarchy shared by the whole package."""


class GenposError(Exception):
    """Base class for all errors raised by genpos."""


class Graph6Error(GenposError):
    """Malformed graph6 input; carries the byte offset of the bad symbol."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class DomainError(GenposError):
    """An operation precondition (e.g. connectivity) was violated."""


class SpecError(GenposError):
    """A family or corpus specification is out of range or unparseable."""


class CapacityError(GenposError):
    """The requested object exceeds a documented size cap."""
