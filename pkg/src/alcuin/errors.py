"""Exception hierarchy for Alcuin."""


class AlcuinError(Exception):
    """Base class for all Alcuin errors."""


class NotATriangle(AlcuinError, ValueError):
    """Three side lengths that violate positivity or the strict triangle inequality."""

    def __init__(self, a: int, b: int, c: int):
        self.sides = (a, b, c)
        super().__init__(f"({a}, {b}, {c}) is not a triangle")


class NoTriangle(AlcuinError, ValueError):
    """No integer triangle exists with the requested perimeter."""

    def __init__(self, p: int, detail: str = ""):
        self.p = p
        message = f"no triangle exists with perimeter {p}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class HypothesisViolated(AlcuinError, ValueError):
    """The range lemma was asked about a pair outside its hypothesis."""


class OverflowRangeError(AlcuinError, OverflowError):
    """An exact integer left the checked signed range."""

    def __init__(self, value: int, bits: int):
        self.bits = bits
        super().__init__(
            f"integer with {value.bit_length()} bits exceeds the signed {bits}-bit range"
        )
