"""Exception hierarchy.

Every domain failure derives from :class:`HStarError` and carries a
``precondition`` string naming what was violated; the CLI turns these into
structured error objects.
"""


class HStarError(ValueError):
    precondition = "input is valid"

    def __init__(self, message, precondition=None):
        super().__init__(message)
        if precondition is not None:
            self.precondition = precondition

    def to_dict(self):
        return {
            "type": type(self).__name__,
            "message": str(self),
            "precondition": self.precondition,
        }


class ResourceLimit(HStarError):
    precondition = "computation stays within the configured resource caps"


# lattice_core
class DegenerateSimplex(HStarError):
    precondition = "difference vectors v_i - v_0 are linearly independent"


class DegenerateInput(HStarError):
    precondition = "constructed polytope is full-dimensional"


class NegativeCoefficient(HStarError):
    precondition = "lattice point counts come from a lattice polytope"


class NonEmptySegment(HStarError):
    precondition = "every segment is an empty lattice segment"


# group_corr
class NotAGroup(HStarError):
    precondition = "element list is closed under addition mod 1"


class NonIntegerAge(HStarError):
    precondition = "every group element has integral coordinate sum"


# codes
class InvalidPrime(HStarError):
    precondition = "p is a prime number"


class MixedParameters(HStarError):
    precondition = "all simplex-code matrices share p and r"


class NotSimplexCode(HStarError):
    precondition = "matrix has exactly one column per projective point"


class NotConstantWeight(HStarError):
    precondition = "code has constant weight"


class NotConstantAge(HStarError):
    precondition = "code has constant age"


class ZeroCoordinate(HStarError):
    precondition = "no coordinate vanishes on the whole code"


class CoverageFailure(HStarError):
    precondition = "columns split into full sets of projective points"


class OddBlockCount(HStarError):
    precondition = "columns pair up as (X, -X)"


class NotBinomial(HStarError):
    precondition = "h* has the form 1 + h_k t^k with h_k > 0"


class DegreeOutOfRange(HStarError):
    precondition = "1 < k < (d+1)/2"


class IsPyramid(HStarError):
    precondition = "simplex is not a pyramid"


class NonPrimeExponent(HStarError):
    precondition = "all nontrivial group elements share a prime order"


# bernoulli
class EvenPrime(HStarError):
    precondition = "p is an odd prime"


class ZeroElement(HStarError):
    precondition = "field element is nonzero"


class TheoremViolation(HStarError):
    precondition = "B_1,chi is nonzero for every odd character"
