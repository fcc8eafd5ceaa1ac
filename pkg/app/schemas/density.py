from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings


CSV_COLUMNS = [
    "trial",
    "angle_achieved",
    "k_used",
    "classes_requested",
    "classes_realized",
    "max_height",
    "resamples",
    "millis",
    "already_saturated",
    "stages",
    "error",
]


class DensityConfig(BaseModel):
    """Flags of `density run`, also accepted as a YAML/JSON config file."""

    model_config = ConfigDict(from_attributes=True, extra="forbid")

    n: int = Field(ge=2)
    kind: str = "hilbert"
    trials: int = Field(default=10, ge=1)
    epsilon: float = Field(default=0.1, gt=0)
    seed: Optional[int] = None
    kmax: int = Field(default=settings.DENSITY_KMAX, ge=1)
    denominator_cap: int = Field(default=settings.DENOMINATOR_CAP, ge=1)
    workers: int = Field(default=1, ge=1)
    timing: bool = True


class DensityRowSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    trial: int
    angle_achieved: Optional[float] = None
    k_used: Optional[int] = None
    classes_requested: int
    classes_realized: int = 0
    max_height: int = 0
    resamples: int = 0
    millis: int = 0
    already_saturated: Optional[bool] = None
    stages: List[str] = []
    error: Optional[str] = None

    def csv_row(self) -> List[str]:
        angle = "" if self.angle_achieved is None else f"{self.angle_achieved:.12g}"
        k = "" if self.k_used is None else str(self.k_used)
        saturated = "" if self.already_saturated is None else str(self.already_saturated).lower()
        return [
            str(self.trial),
            angle,
            k,
            str(self.classes_requested),
            str(self.classes_realized),
            str(self.max_height),
            str(self.resamples),
            str(self.millis),
            saturated,
            ";".join(self.stages),
            self.error or "",
        ]
