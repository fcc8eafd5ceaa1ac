from app.cli.base import parse_vector
from app.logger.logger import setup_logger
from app.models.orbit import normalize_kind
from app.orbits.classes import enumerate_classes, orbit_count_formula, sigma_reasons
from app.orbits.invariant import f_invariant_trace
from app.schemas.base import DefaultResponse
from app.schemas.orbit import FInvariantSchema, OrbitClassSchema, OrbitCountSchema, SigmaCheckSchema

logger = setup_logger(__name__)

KINDS = ["hilbert", "hilb", "kummer"]


def register(subparsers) -> None:
    parser = subparsers.add_parser("orbits", help="orbit classes of exceptional vectors")
    actions = parser.add_subparsers(dest="action", required=True)
    enumerate_ = actions.add_parser("enumerate")
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--kind", choices=KINDS, default="hilbert")
    enumerate_.set_defaults(handler=orbits_enumerate)
    count = actions.add_parser("count")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--kind", choices=KINDS, default="hilbert")
    count.set_defaults(handler=orbits_count)

    sigma = subparsers.add_parser("sigma", help="membership in the exceptional classes")
    sigma_actions = sigma.add_subparsers(dest="action", required=True)
    check = sigma_actions.add_parser("check")
    _vector_arguments(check)
    check.set_defaults(handler=sigma_check)

    invariant = subparsers.add_parser("f-invariant", help="orbit invariant with its saturation trace")
    _vector_arguments(invariant)
    invariant.set_defaults(handler=f_invariant)


def _vector_arguments(parser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--kind", choices=KINDS, required=True)
    parser.add_argument("--vector", required=True, help="JSON list of integers")


def orbits_enumerate(args) -> DefaultResponse:
    classes = enumerate_classes(args.n, args.kind)
    logger.info(f"Найдено {len(classes)} классов для n={args.n}")
    return DefaultResponse(
        error=False,
        message="Orbit classes",
        payload=[OrbitClassSchema.model_validate(c) for c in classes],
    )


def orbits_count(args) -> DefaultResponse:
    formula = orbit_count_formula(args.n, args.kind)
    enumerated = len(enumerate_classes(args.n, args.kind))
    count = OrbitCountSchema(
        n=args.n,
        kind=normalize_kind(args.kind),
        formula=formula,
        enumerated=enumerated,
        agree=formula == enumerated,
    )
    if not count.agree:
        logger.warning(f"Формула {formula} и перечисление {enumerated} расходятся")
        return DefaultResponse(error=True, message="Formula and enumeration disagree", payload=count)
    return DefaultResponse(error=False, message="Orbit count", payload=count)


def sigma_check(args) -> DefaultResponse:
    vector = parse_vector(args.vector)
    reasons = sigma_reasons(args.n, args.kind, vector)
    result = SigmaCheckSchema(
        n=args.n,
        kind=normalize_kind(args.kind),
        vector=vector,
        in_sigma=not reasons,
        reasons=reasons,
    )
    if reasons:
        return DefaultResponse(error=True, message="Vector is not an exceptional class", payload=result)
    return DefaultResponse(error=False, message="Vector is an exceptional class", payload=result)


def f_invariant(args) -> DefaultResponse:
    vector = parse_vector(args.vector)
    trace = f_invariant_trace(args.n, args.kind, vector)
    result = FInvariantSchema(
        orbit_class=OrbitClassSchema.model_validate(trace["orbit_class"]),
        coordinates=trace["coordinates"],
        saturation_index=trace["saturation_index"],
        saturation_basis=trace["saturation_basis"],
        hyperbolic_pair=trace["hyperbolic_pair"],
    )
    return DefaultResponse(error=False, message="Orbit invariant", payload=result)
