"""Exception hierarchy shared by models, services and commands."""


class OmegaError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidAlphabetError(OmegaError, ValueError):
    """Alphabet is empty or lists a symbol twice."""


class InvalidWordError(OmegaError, ValueError):
    """A word uses a letter outside its alphabet."""


class InvalidLassoError(OmegaError, ValueError):
    """Lasso word with an empty loop."""


class LassoSyntaxError(OmegaError, ValueError):
    """Text does not follow the `prefix(loop)` grammar."""


class AlphabetMismatchError(OmegaError, ValueError):
    """Two objects that must share an alphabet do not."""


class InvalidAutomatonError(OmegaError, ValueError):
    """Büchi automaton references undeclared states or symbols."""


class InvalidTransducerError(OmegaError, ValueError):
    """Büchi transducer references undeclared states or symbols."""


class InvalidInstanceError(OmegaError, ValueError):
    """Malformed ω-PCP instance."""


class IndexOutOfRangeError(OmegaError, ValueError):
    """Index word mentions an index outside 1..n."""


class InvalidMachineError(OmegaError, ValueError):
    """Malformed Turing machine."""


class NotInDomainError(OmegaError, ValueError):
    """Point outside the domain of a transducer."""


class NoWitnessError(OmegaError, ValueError):
    """No discontinuity witness exists for the requested point."""


class MalformedSolutionError(OmegaError, ValueError):
    """A claimed solution does not decode to a legal computation."""


class InvalidBoundError(OmegaError, ValueError):
    """Search bound, budget or precision outside its range."""


class InvalidVerdictError(OmegaError, ValueError):
    """Continuity verdict without the evidence its kind requires."""


class UnknownTargetError(OmegaError, ValueError):
    """Reduction target outside the construction table."""


class ManifestError(OmegaError, ValueError):
    """Manifest fails its schema, version or provenance checks."""


class SearchInvariantError(OmegaError, RuntimeError):
    """A search reached a state its construction rules out."""
