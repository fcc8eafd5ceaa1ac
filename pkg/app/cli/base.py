import sys
from typing import Any, Callable, List, Optional

import yaml
from pydantic import TypeAdapter, ValidationError

from app.core.errors import (
    CharacterUndefinedError,
    LatticeError,
    SearchExhaustedError,
    VerificationError,
)
from app.logger.logger import setup_logger
from app.schemas.base import DefaultResponse

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

Handler = Callable[[Any], Optional[DefaultResponse]]

_vector = TypeAdapter(List[int])
_matrix = TypeAdapter(List[List[int]])


def parse_vector(text: str) -> List[int]:
    return _vector.validate_json(text)


def parse_matrix(text: str) -> List[List[int]]:
    return _matrix.validate_json(text)


def emit(response: DefaultResponse, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(response.model_dump_json(indent=2))
    stream.write("\n")


def run_handler(handler: Handler, args) -> int:
    """Run a subcommand handler and map its outcome to an exit code."""
    try:
        logger.info(f"Команда: {args.command} {getattr(args, 'action', '') or ''}".rstrip())
        response = handler(args)
        if response is None:
            return EXIT_OK
        emit(response)
        return EXIT_FAILURE if response.error else EXIT_OK
    except (VerificationError, SearchExhaustedError, CharacterUndefinedError) as e:
        logger.error(f"Проверка не пройдена: {str(e)}")
        emit(DefaultResponse(error=True, message=str(e), payload=None))
        return EXIT_FAILURE
    except (LatticeError, ValidationError, ValueError, OverflowError, yaml.YAMLError, OSError) as e:
        logger.error(f"Некорректный ввод: {str(e)}")
        emit(DefaultResponse(error=True, message=str(e), payload=None), sys.stderr)
        return EXIT_USAGE
