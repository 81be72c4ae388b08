"""Exception hierarchy shared by all modules."""


class FoliatlasError(Exception):
    pass


class RankError(FoliatlasError, ValueError):
    """Rank outside the supported range 0..3, or rank mismatch."""


class NonIntegralError(FoliatlasError, ValueError):
    """An invariant that must be an integer came out fractional."""


class InconsistentModelError(FoliatlasError, ValueError):
    pass


class RangeNotCovered(FoliatlasError, ValueError):
    """Cohomology query outside the range the closed forms are known to cover."""


class UnsupportedModel(RangeNotCovered):
    """Cohomology tables are only available for the built-in threefolds."""


class CriterionNotApplicable(FoliatlasError, ValueError):
    pass


class InvalidFoliation(FoliatlasError, ValueError):
    pass
