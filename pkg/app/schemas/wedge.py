from typing import Dict, List

from pydantic import BaseModel, ConfigDict


class ConventionReportSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    sign: int
    norms: Dict[str, int]
    decomposition_holds: bool
    orientation_positive: int
    orientation_negative: int


class BlockStructureSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    fixed_frame: List[List[int]]
    negated_frame: List[List[int]]
    fixed_definite: bool
    negated_definite: bool
    identity_on_fixed: bool
    minus_identity_on_negated: bool

    @property
    def holds(self) -> bool:
        return (
            self.fixed_definite
            and self.negated_definite
            and self.identity_on_fixed
            and self.minus_identity_on_negated
        )


class WedgeReportSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    basis: List[str]
    psi: List[List[int]]
    psi_squared_is_identity: bool
    det_psi: int
    block_structure: BlockStructureSchema
    # under s = -1: orientation of the positive cone reversed, negative cone kept
    reverses_positive_cone: bool
    conventions: List[ConventionReportSchema]
    discrepancies: List[str] = []


class TauReportSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    n: int
    sign: int
    matrix: List[List[int]]
    det: int
    chi: int
    orientation_positive: int
    orientation_negative: int
    in_W: bool
    in_N: bool
    involution: bool


class UnitCheckSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    n: int
    units: List[int]
    count: int
    is_prime_power: bool
    agree: bool


class WedgeVerifySchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    psi: WedgeReportSchema
    tau: TauReportSchema
    unit_sweep_max: int
    unit_sweep_agree: bool
    # in W and not in N under s = -1
    tau_witness_holds: bool
    unit_disagreements: List[int] = []
