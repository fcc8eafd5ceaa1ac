from typing import Optional


class LatticeError(ValueError):
    pass


class DimensionMismatchError(LatticeError):
    pass


class DegenerateLatticeError(LatticeError):
    pass


class PreconditionError(LatticeError):
    pass


class VerificationError(LatticeError):
    pass


class CharacterUndefinedError(LatticeError):
    pass


class SearchExhaustedError(LatticeError):
    def __init__(self, stage: str, bound: Optional[int], detail: str = ""):
        self.stage = stage
        self.bound = bound
        message = f"{stage}: not found (bound {bound})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
