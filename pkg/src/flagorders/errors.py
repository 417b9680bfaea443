"""Exception types shared across the package."""


class AlignmentError(ValueError):
    """Operands live over different variable lists; embed first."""


class UndefinedGcdError(ValueError):
    """gcd(0, 0) requested."""


class ZeroDivisorError(ZeroDivisionError):
    """Division by the zero polynomial or zero rational function."""


class GroupTooLargeError(RuntimeError):
    """Group enumeration exceeded its cap (infinite group or cap too small)."""


class InvalidGeneratorError(ValueError):
    """A requested generator is not available in the declared group."""


class MorphismError(ValueError):
    """Base class for morphism construction/application failures."""


class CompatibilityError(MorphismError):
    """phi(w(a)) != psi(w)(phi(a)) for some generator pair; carries the pair."""

    def __init__(self, gen, var, msg=None):
        self.gen = gen
        self.var = var
        super().__init__(msg or f"compatibility fails for generator {gen} on variable {var}")


class DecompositionError(MorphismError):
    """Claimed tensor-complement decomposition fails a bounded independence check."""


class HomomorphismError(MorphismError):
    """The generator images do not extend to a group homomorphism."""


class MorphismDomainError(MorphismError):
    """Element support falls outside the subgroup generated by the psi domain."""


class DirectProductError(ValueError):
    """A claimed direct-product factorization of the target group fails."""

    def __init__(self, witness, msg=None):
        self.witness = witness
        super().__init__(msg or f"direct-product hypothesis fails: {witness}")


class WitnessNotFoundError(RuntimeError):
    """Determinant witness search exhausted its degree budget."""


class ScenarioSizeError(ValueError):
    """Scenario parameter exceeds the supported desk-scale caps."""


class ParseError(ValueError):
    """Expression syntax error with position information."""

    def __init__(self, msg, line=1, col=1):
        self.line = line
        self.col = col
        super().__init__(f"{msg} (line {line}, column {col})")
