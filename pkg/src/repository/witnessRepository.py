import json
from typing import Iterable

from sqlalchemy.orm import Session

from src.core.optimalSearch import CostHistogram, SearchResult, function_key
from src.core.realFormat import write_real
from src.model import witnessModel

# Obtem o circuito testemunha de uma função
def get_witness(db: Session, kind: str, convention: str, function: str):
  return db.query(witnessModel.Witness).filter(
    witnessModel.Witness.kind == kind,
    witnessModel.Witness.convention == convention,
    witnessModel.Witness.function == function,
  ).first()

'''
Lista testemunhas de um tipo de busca, ordenadas por tamanho e função.
Aceita offset e limit como a listagem paginada de usuários.
'''
def get_witnesses(db: Session, kind: str, convention: str, offset: int = 0, limit: int | None = None):
  query = db.query(witnessModel.Witness).filter(
    witnessModel.Witness.kind == kind,
    witnessModel.Witness.convention == convention,
  ).order_by(witnessModel.Witness.size.asc(), witnessModel.Witness.function.asc())

  if offset:
    query = query.offset(offset)
  if limit:
    query = query.limit(limit)
  return query.all()

def count_witnesses(db: Session, kind: str, convention: str) -> int:
  return db.query(witnessModel.Witness).filter(
    witnessModel.Witness.kind == kind,
    witnessModel.Witness.convention == convention,
  ).count()

# Substitui todas as testemunhas do par (kind, convention) numa única transação
def replace_witnesses(db: Session, kind: str, convention: str, rows: Iterable[tuple[str, int, str]]) -> int:
  db.query(witnessModel.Witness).filter(
    witnessModel.Witness.kind == kind,
    witnessModel.Witness.convention == convention,
  ).delete(synchronize_session=False)
  mappings = [
    {"kind": kind, "convention": convention, "function": function, "size": size, "gates": gates}
    for function, size, gates in rows
  ]
  db.bulk_insert_mappings(witnessModel.Witness, mappings)
  db.commit()
  return len(mappings)

def create_run(db: Session, kind: str, convention: str, max_depth: int | None, histogram: CostHistogram, started_at, finished_at):
  db_run = witnessModel.EnumerationRun(
    kind=kind,
    convention=convention,
    max_depth=max_depth,
    completed_depth=histogram.completed_depth,
    complete=histogram.complete,
    histogram=json.dumps({str(size): count for size, count in sorted(histogram.counts.items())}),
    started_at=started_at,
    finished_at=finished_at,
  )
  db.add(db_run)
  db.commit()
  db.refresh(db_run)
  return db_run

def get_latest_run(db: Session, kind: str, convention: str | None = None):
  query = db.query(witnessModel.EnumerationRun).filter(witnessModel.EnumerationRun.kind == kind)
  if convention:
    query = query.filter(witnessModel.EnumerationRun.convention == convention)
  return query.order_by(witnessModel.EnumerationRun.id.desc()).first()

def run_histogram(db_run) -> CostHistogram:
  counts = {int(size): count for size, count in json.loads(db_run.histogram).items()}
  return CostHistogram(counts, complete=db_run.complete, completed_depth=db_run.completed_depth)

# Persiste o resultado de uma busca: testemunhas em REAL e o registro da execução
def save_search(db: Session, result: SearchResult):
  rows = []
  for function, sequence in result.witnesses.items():
    rows.append((function_key(function), len(sequence), write_real(result.witness(function))))
  replace_witnesses(db, result.kind.value, result.convention.value, rows)
  return create_run(db, result.kind.value, result.convention.value, result.max_depth, result.histogram, result.started_at, result.finished_at)
