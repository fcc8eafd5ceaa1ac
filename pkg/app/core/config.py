import os
from pydantic import BaseModel
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseModel):
    PROJECT_NAME: str = os.getenv("PROJECT_NAME", "latdense")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = os.getenv("LOG_FORMAT", "%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # Seed fallback for density runs
    LATDENSE_SEED: int = int(os.getenv("LATDENSE_SEED", "0"))

    # Search bounds
    EMBED_BOUND: int = int(os.getenv("EMBED_BOUND", "1"))
    EXTEND_BOUND: int = int(os.getenv("EXTEND_BOUND", "2"))
    EXTEND_MAX_NODES: int = int(os.getenv("EXTEND_MAX_NODES", "400"))
    ADJUST_BOUND: int = int(os.getenv("ADJUST_BOUND", "10"))
    HYPERBOLIC_BOUND: int = int(os.getenv("HYPERBOLIC_BOUND", "2"))
    PAIR_DIRECTION_BOUND: int = int(os.getenv("PAIR_DIRECTION_BOUND", "1"))
    REALIZE_BOUND: int = int(os.getenv("REALIZE_BOUND", "2"))
    DISC_FORM_LIMIT: int = int(os.getenv("DISC_FORM_LIMIT", "4096"))

    # Density experiment
    DENOMINATOR_CAP: int = int(os.getenv("DENOMINATOR_CAP", "10000"))
    DENSITY_KMAX: int = int(os.getenv("DENSITY_KMAX", str(2**40)))
    CONDITION_LIMIT: float = float(os.getenv("CONDITION_LIMIT", "1e6"))
    POSITIVITY_TOL: float = float(os.getenv("POSITIVITY_TOL", "1e-9"))
    SAMPLING_NOISE: float = float(os.getenv("SAMPLING_NOISE", "0.25"))
    DENSITY_WORKERS: int = int(os.getenv("DENSITY_WORKERS", "1"))


settings = Settings()

EMBED_BOUND = settings.EMBED_BOUND
EXTEND_BOUND = settings.EXTEND_BOUND
ADJUST_BOUND = settings.ADJUST_BOUND
POSITIVITY_TOL = settings.POSITIVITY_TOL
