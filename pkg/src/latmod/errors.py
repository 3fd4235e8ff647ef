"""Exception types shared across the package."""

from __future__ import annotations


class LatModError(Exception):
    """Base class for all latmod errors."""


class DuplicateElement(LatModError):
    def __init__(self, name: str):
        super().__init__(f"duplicate element name {name!r}")
        self.name = name


class UnknownElement(LatModError):
    def __init__(self, name: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown element {name!r}{where}")
        self.name = name
        self.line = line


class NotAPartialOrder(LatModError):
    """The given relation closes to something with a nontrivial cycle."""

    def __init__(self, a: str, b: str):
        super().__init__(f"not a partial order: {a!r} <= {b!r} and {b!r} <= {a!r}")
        self.witness = (a, b)


class NotALattice(LatModError):
    """Some pair lacks a unique meet or join, or no global bounds exist."""

    def __init__(self, reason: str, pair: tuple[str, str] | None = None):
        msg = reason if pair is None else f"{reason} for pair ({pair[0]!r}, {pair[1]!r})"
        super().__init__(msg)
        self.pair = pair


class IncompleteTable(LatModError):
    """A multiplication or action table is missing an entry."""

    def __init__(self, what: str, pair: tuple[str, str]):
        super().__init__(f"{what} table has no entry for ({pair[0]!r}, {pair[1]!r})")
        self.pair = pair


class InvalidStructure(LatModError):
    """Axiom validation failed; carries the full report."""

    def __init__(self, what: str, report):
        failed = ", ".join(name for name, _ in report.failures)
        super().__init__(f"{what} axioms violated: {failed}")
        self.report = report


class NotAnExpansion(LatModError):
    """A candidate table violates the expansion-function axioms."""

    def __init__(self, reason: str, witness: tuple[str, ...]):
        super().__init__(f"not an expansion function: {reason} (witness {witness})")
        self.witness = witness


class NotProper(LatModError):
    def __init__(self, name: str):
        super().__init__(f"{name!r} is the top element; a proper element is required")
        self.name = name


class UnknownTheorem(LatModError):
    def __init__(self, tid: str):
        super().__init__(f"unknown theorem id {tid!r}")
        self.tid = tid


class BadParameter(LatModError):
    pass


class LatSpecSyntaxError(LatModError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ConflictingFact(LatModError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: conflicting fact: {message}")
        self.line = line
