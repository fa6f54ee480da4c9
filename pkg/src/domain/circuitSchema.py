from pydantic import BaseModel, Field

class TransformRequest(BaseModel):
  real: str
  optimize: bool = False
  working_lines: int = Field(default=1, ge=1)
  model_preference: list[str] | None = None
  convention: str = "exact"

class TransformResponse(BaseModel):
  real: str
  size_before: int
  size_after: int
  lnn: bool
  entangled: bool
  equivalent: bool

class VerifyRequest(BaseModel):
  real: str
  other: str | None = None
  convention: str = "exact"

class VerifyResponse(BaseModel):
  lines: int
  gates: int
  quantum_cost: int | None = None
  lnn: bool
  entangled: bool
  entangled_inputs: list[int] = []
  equivalent: bool | None = None
