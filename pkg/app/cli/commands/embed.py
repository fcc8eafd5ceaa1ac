from app.cli.base import parse_matrix, parse_vector
from app.core.config import settings
from app.embed.search import find_primitive_embedding
from app.lattice.core import is_saturated
from app.lattice.standard import STANDARD_NAMES, make_standard
from app.logger.logger import setup_logger
from app.models.lattice import Lattice
from app.schemas.base import DefaultResponse
from app.schemas.embed import EmbeddingCertificateSchema

logger = setup_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("embed", help="primitive embeddings")
    actions = parser.add_subparsers(dest="action", required=True)
    find = actions.add_parser("find", help="bounded search for a primitive embedding")
    find.add_argument("--source", required=True, help="JSON Gram matrix")
    find.add_argument("--target", required=True, choices=STANDARD_NAMES)
    find.add_argument("--n", type=int, default=None, help="parameter of the target lattice")
    find.add_argument("--bound", type=int, default=settings.EMBED_BOUND)
    find.add_argument("--window", default=None, help="JSON list of target coordinates to search on")
    find.set_defaults(handler=embed_find)


def embed_find(args) -> DefaultResponse:
    source = Lattice(parse_matrix(args.source), name="source")
    target = make_standard(args.target, args.n)
    window = parse_vector(args.window) if args.window else None
    image = find_primitive_embedding(source, target, args.bound, window=window)
    certificate = EmbeddingCertificateSchema(
        source_gram=source.gram,
        target=target.label,
        bound=args.bound,
        found=image is not None,
    )
    if image is None:
        return DefaultResponse(error=True, message="No embedding within the bound", payload=certificate)
    certificate.basis = image.basis
    certificate.image_gram = image.gram
    certificate.saturated = is_saturated(image)
    logger.info(f"Вложение найдено: {len(image.basis)} векторов")
    return DefaultResponse(error=False, message="Embedding found", payload=certificate)
