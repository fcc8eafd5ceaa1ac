from app.lattice.core import disc_group
from app.lattice.mukai import mukai_coordinates, mukai_vector, mukai_vperp_structure
from app.lattice.standard import STANDARD_NAMES, make_standard
from app.logger.logger import setup_logger
from app.schemas.base import DefaultResponse
from app.schemas.lattice import LatticeInfoSchema, MukaiCheckSchema

logger = setup_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("lattice", help="standard lattices")
    actions = parser.add_subparsers(dest="action", required=True)
    info = actions.add_parser("info", help="Gram matrix, signature and discriminant group")
    info.add_argument("--name", required=True, choices=STANDARD_NAMES)
    info.add_argument("--n", type=int, default=None)
    info.set_defaults(handler=lattice_info)


def lattice_info(args) -> DefaultResponse:
    L = make_standard(args.name, args.n)
    L.require_nondegenerate()
    mukai = None
    if args.name == "Mukai" and args.n is not None:
        delta, verified = mukai_vperp_structure(args.n)
        mukai = MukaiCheckSchema(
            n=args.n,
            delta=mukai_coordinates(delta),
            v=mukai_coordinates(mukai_vector(args.n)),
            verified=verified,
        )
    info = LatticeInfoSchema(
        name=L.label,
        rank=L.rank,
        gram=L.gram,
        signature=list(L.signature),
        abs_det=abs(L.det),
        disc=disc_group(L).invariant_factors,
        unimodular=L.is_unimodular,
        mukai=mukai,
    )
    logger.info(f"Решётка {L.label}: ранг {L.rank}, дискриминант {info.disc}")
    if mukai is not None and not mukai.verified:
        return DefaultResponse(error=True, message="v-perp check failed", payload=info)
    return DefaultResponse(error=False, message="Lattice info", payload=info)
