from typing import Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings"""

    # Application settings
    APP_NAME: str = "tetrotile"
    VERSION: str = "1.0.0"
    log_level: str = "WARNING"

    # Search limits (per solve call)
    max_nodes: int = 10**9
    max_seconds: float = 300.0
    parallel_workers: Optional[int] = None  # None means os.cpu_count()

    # Rendering
    ascii_max_side: int = 200
    svg_cell_size: float = 20.0

    # Sequence subcommand
    sequence_default_bound: int = 100

    class Config:
        env_prefix = "TETROTILE_"
        env_file = ".env"
        case_sensitive = False


# Global settings instance
settings = Settings()
