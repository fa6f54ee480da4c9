from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.utils.enumeration import Convention

class Settings(BaseSettings):
  model_config = SettingsConfigDict(env_prefix="LNN_", env_file=".env", extra="ignore")

  database_url: str = "sqlite:///./lnn.db"
  templates_path: str | None = None
  convention: Convention = Convention.EXACT
  working_lines: int = Field(default=1, ge=1)
  max_depth: int = Field(default=8, ge=0)
  mem_budget_mb: int = Field(default=4096, gt=0)
  workers: int = Field(default=1, ge=1)
  verify_rewrites: bool = True
  log_level: str = "INFO"

@lru_cache
def get_settings() -> Settings:
  return Settings()
