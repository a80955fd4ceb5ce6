"""Exception types shared across the package."""


class ZiptensorError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZiptensorError, ValueError):
    """An argument lies outside an operation's documented domain."""


class MalformedWordError(ZiptensorError, ValueError):
    """A binary word fails basic shape checks (alphabet, length, weight)."""


class CapacityError(ZiptensorError, ValueError):
    """A requested size exceeds the configured working limit."""


class StructureViolationError(ZiptensorError, RuntimeError):
    """A structural guarantee the tensors are expected to satisfy failed.

    Raised only by operations whose correctness rests on a verified claim
    (unique tree word per orbit, disjoint staircase cover).  Seeing it means
    either a bug or a genuine counterexample; it is never swallowed.
    """


class ParseError(ZiptensorError, ValueError):
    """Serialized input could not be parsed; the message pinpoints where."""
