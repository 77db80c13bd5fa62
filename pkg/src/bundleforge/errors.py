"""Exception hierarchy shared by all bundleforge modules."""

from __future__ import annotations


class BundleforgeError(Exception):
    """Base class for every error raised by this package."""


class NotAGroup(BundleforgeError):
    """A Cayley table failed one of the group axioms.

    ``reason`` is one of ``identity``, ``latin-square``, ``associativity``,
    ``inverses``.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        msg = f"not a group ({reason})"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class DomainViolation(BundleforgeError):
    """An element carries mass outside the domain ideal of an isomorphism."""


class NotStarClosed(BundleforgeError):
    """A matrix family is not closed under adjoints."""


class NotSemisimple(BundleforgeError):
    """Numerical block decomposition of a matrix *-algebra failed."""


class GeneratorInvariantViolated(BundleforgeError):
    """A randomly generated action failed its own axiom suite (internal bug)."""


class FiberViolation(BundleforgeError):
    """A bundle element does not lie in the fiber its tag claims."""


class EquivalentFormMismatch(BundleforgeError):
    """The two equivalent involution formulas disagree (invalid action data)."""


class WitnessMismatch(BundleforgeError):
    """A global witness is inconsistent with the action it should represent."""


class NotATro(BundleforgeError):
    """A matrix subspace is not closed under the triple product x y* z."""


class NotAnIdeal(BundleforgeError):
    """A subspace failed an ideal condition."""


class NotContained(BundleforgeError):
    """A candidate ideal is not contained in the ambient space."""


class HypothesisFailed(BundleforgeError):
    """A named precondition of a product/multiplier construction failed."""

    def __init__(self, name: str, detail: str = ""):
        self.name = name
        msg = f"hypothesis failed: {name}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class NonRegular(BundleforgeError):
    """A TRO admits no strictly associated partial isometry.

    Carries a rank certificate: either the global range/initial dimensions
    disagree, or a central block of EE* pairs with a block of E*E of a
    different dimension.
    """

    def __init__(self, certificate: dict):
        self.certificate = certificate
        super().__init__(f"non-regular TRO: {certificate}")


class Inconclusive(BundleforgeError):
    """Random search exhausted without a certificate either way."""


class NonRegularFiber(BundleforgeError):
    """A bundle fiber is not a regular TRO; classification cannot proceed."""

    def __init__(self, tag: int, certificate: dict):
        self.tag = tag
        self.certificate = certificate
        super().__init__(f"fiber {tag} is non-regular: {certificate}")


class AxiomExtractionFailed(BundleforgeError):
    """The action extracted from a bundle failed the axiom suite."""

    def __init__(self, report):
        self.report = report
        super().__init__("extracted action failed the axiom suite")


class FormatError(BundleforgeError):
    """A JSON document does not match the expected schema."""
