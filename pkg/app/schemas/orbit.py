from typing import List

from pydantic import BaseModel, ConfigDict

from app.schemas.base import BigInt, BigIntMatrix, BigIntVector


class OrbitClassSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    a: int
    b: int
    kind: str
    n: int


class OrbitCountSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    n: int
    kind: str
    formula: int
    enumerated: int
    agree: bool


class SigmaCheckSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    n: int
    kind: str
    vector: BigIntVector
    in_sigma: bool
    reasons: List[str] = []


class FInvariantSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    orbit_class: OrbitClassSchema
    coordinates: List[BigInt]
    saturation_index: BigInt
    saturation_basis: BigIntMatrix
    hyperbolic_pair: BigIntMatrix
