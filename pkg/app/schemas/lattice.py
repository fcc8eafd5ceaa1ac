from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from app.schemas.base import BigInt, BigIntMatrix, BigIntVector


class MukaiCheckSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    n: int
    delta: BigIntVector
    v: BigIntVector
    verified: bool


class LatticeInfoSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    name: str
    rank: int
    gram: BigIntMatrix
    signature: List[int]
    abs_det: BigInt
    disc: List[BigInt]
    unimodular: bool
    mukai: Optional[MukaiCheckSchema] = None
