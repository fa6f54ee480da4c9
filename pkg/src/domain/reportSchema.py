from pydantic import BaseModel, Field

class ReportRow(BaseModel):
  size: int = Field(ge=0)
  lnn: int = Field(default=0, ge=0)
  ms: int = Field(default=0, ge=0)
  m: int = Field(default=0, ge=0)
  opt_m: int = Field(default=0, ge=0)

class ReportAverages(BaseModel):
  lnn: float | None = None
  ms: float | None = None
  m: float | None = None
  opt_m: float | None = None

class Report(BaseModel):
  convention: str
  functions: int
  lnn_complete: bool
  lnn_completed_depth: int
  rows: list[ReportRow]
  averages: ReportAverages
  cited: ReportAverages
  reduction: float | None = None
