from app.schemas.base import DefaultResponse
from app.selftest import run_selftest


def register(subparsers) -> None:
    parser = subparsers.add_parser("selftest", help="run the acceptance sweep")
    parser.set_defaults(handler=selftest)


def selftest(args) -> DefaultResponse:
    report = run_selftest()
    if not report.passed:
        return DefaultResponse(error=True, message="Selftest failed", payload=report)
    return DefaultResponse(error=False, message="Selftest passed", payload=report)
