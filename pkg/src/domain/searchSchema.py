import json
from datetime import datetime

from pydantic import BaseModel, ConfigDict, field_validator

class EnumerationRun(BaseModel):
  model_config = ConfigDict(from_attributes = True)
  id: int
  kind: str
  convention: str
  max_depth: int | None
  completed_depth: int
  complete: bool
  histogram: dict[str, int]
  started_at: datetime
  finished_at: datetime | None

  # No banco o histograma fica serializado em JSON
  @field_validator("histogram", mode="before")
  @classmethod
  def load_histogram(cls, value):
    if isinstance(value, str):
      return json.loads(value)
    return value

class Witness(BaseModel):
  model_config = ConfigDict(from_attributes = True)
  kind: str
  convention: str
  function: str
  size: int
  gates: str
