from typing import Annotated, Any, List, Optional, Union

from pydantic import BaseModel, ConfigDict, PlainSerializer

# JSON consumers lose precision above 2^63
BIG_INT_LIMIT = 2 ** 63


def serialize_int(x: int) -> Union[int, str]:
    return str(x) if abs(x) >= BIG_INT_LIMIT else x


BigInt = Annotated[int, PlainSerializer(serialize_int)]
BigIntVector = List[BigInt]
BigIntMatrix = List[List[BigInt]]


class DefaultResponse(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    error: bool = False
    message: str = "Success"
    payload: Optional[Any] = None
