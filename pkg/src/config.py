"""
Configuration management for the verification engine
"""
from pathlib import Path
from dotenv import load_dotenv
from pydantic_settings import BaseSettings

# Load environment variables
load_dotenv()

class EngineSettings(BaseSettings):
    """Engine settings loaded from environment variables (prefix HDGA_)"""

    # Rewriting Configuration
    rewrite_budget: int = 1_000_000
    debug_rewriting: bool = False

    # Verification Configuration
    degree_bound: int = 4
    transmute_degree: int = 2

    # Output Configuration
    verbose: bool = False

    # Catalog Configuration
    catalog_path: str = "data/catalog"

    # Project Paths
    @property
    def project_root(self) -> Path:
        return Path(__file__).parent.parent

    @property
    def data_dir(self) -> Path:
        return self.project_root / "data"

    @property
    def catalog_dir(self) -> Path:
        return self.project_root / self.catalog_path

    class Config:
        env_file = ".env"
        env_prefix = "HDGA_"
        case_sensitive = False

# Global settings instance
settings = EngineSettings()
