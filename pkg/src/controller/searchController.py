from fastapi import APIRouter, HTTPException, Depends
from sqlalchemy.orm import Session

from src.constants import errorMessages
from src.core.optimalSearch import function_key, parse_function_key
from src.database import get_db
from src.domain import searchSchema
from src.repository import witnessRepository
from src.utils import enumeration
from src.utils.exceptions import CircuitError

search = APIRouter(
  prefix="/search"
)

@search.get("/runs/{kind}", response_model=searchSchema.EnumerationRun)
def read_latest_run(kind: str, convention: str | None = None, db: Session = Depends(get_db)):
  if not enumeration.SearchKind.has_value(kind):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_SEARCH_KIND)
  if convention and not enumeration.Convention.has_value(convention):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_CONVENTION)

  db_run = witnessRepository.get_latest_run(db, kind, convention)
  if not db_run:
    raise HTTPException(status_code=404, detail=errorMessages.RUN_NOT_FOUND)
  return db_run

@search.get("/witnesses/{kind}/{function}", response_model=searchSchema.Witness)
def read_witness(kind: str, function: str, convention: str = "exact", db: Session = Depends(get_db)):
  if not enumeration.SearchKind.has_value(kind):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_SEARCH_KIND)
  if not enumeration.Convention.has_value(convention):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_CONVENTION)
  try:
    key = function_key(parse_function_key(function))
  except CircuitError:
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_FUNCTION)

  db_witness = witnessRepository.get_witness(db, kind, convention, key)
  if not db_witness:
    raise HTTPException(status_code=404, detail=errorMessages.WITNESS_NOT_FOUND)
  return db_witness
