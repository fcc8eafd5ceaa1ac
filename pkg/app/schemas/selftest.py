from typing import List

from pydantic import BaseModel, ConfigDict


class CheckResultSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    name: str
    passed: bool
    detail: str = ""


class SelftestReportSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    passed: bool
    checks: List[CheckResultSchema]
