"""
Template Knot Exceptions
Error types raised by the orbit, braid and invariant modules
"""


class TemplateKnotError(Exception):
    """Base class for every error raised by this package"""


class InvalidWord(TemplateKnotError):
    """Word contains letters outside {x, y}"""


class EmptyWord(TemplateKnotError):
    """Orbit word has no letters"""


class NonPrimitive(TemplateKnotError):
    """Orbit word is a proper power of a shorter word"""

    def __init__(self, word, root):
        self.word = word
        self.root = root
        super().__init__(f"'{word}' is a proper power of '{root}'; the orbit is already named by its root")


class InvalidTemplate(TemplateKnotError):
    """Template string could not be parsed as 'm,n' or '~m,n'"""


class NotAKnot(TemplateKnotError):
    """Braid closure has more than one component"""

    def __init__(self, components):
        self.components = components
        super().__init__(f"closure has {components} components, expected a knot")


class StrandBudgetExceeded(TemplateKnotError):
    """Temperley-Lieb transfer would exceed the strand budget"""

    def __init__(self, strands, limit):
        self.strands = strands
        self.limit = limit
        super().__init__(f"{strands} strands exceeds the Jones strand budget of {limit}")


class CrossingBudgetExceeded(TemplateKnotError):
    """Brute-force state sum would exceed the crossing budget"""

    def __init__(self, crossings, limit):
        self.crossings = crossings
        self.limit = limit
        super().__init__(f"{crossings} crossings exceeds the state-sum budget of {limit}")


class MixedSigns(TemplateKnotError):
    """Braid has generators of both signs; the Bennequin genus formula does not apply"""


class InternalInvariantViolation(TemplateKnotError):
    """A construction produced something its invariants forbid (a bug, not bad input)"""
