from typing import Optional

from pydantic import BaseModel, ConfigDict

from app.schemas.base import BigIntMatrix


class EmbeddingCertificateSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    source_gram: BigIntMatrix
    target: str
    bound: int
    found: bool
    basis: Optional[BigIntMatrix] = None
    image_gram: Optional[BigIntMatrix] = None
    saturated: Optional[bool] = None
