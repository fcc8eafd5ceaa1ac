from app.embed.search import (
    embed_into_window,
    extend_isometry,
    find_primitive_embedding,
    restrict_to_window,
    window_complement,
)
