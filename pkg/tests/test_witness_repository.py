import sys
import os
from datetime import datetime, timezone

# Adiciona o caminho do diretório 'src' ao sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

from src.core.circuitCore import Circuit, toffoli
from src.core.optimalSearch import CostHistogram, enumerate_optimal_lnn, function_key
from src.core.realFormat import parse_real
from src.core.semantics import as_permutation, circuit_unitary, classical_permutation
from src.database import Base
from src.model import witnessModel
from src.repository import witnessRepository

@pytest.fixture
def db():
  engine = create_engine("sqlite://", connect_args={"check_same_thread": False}, poolclass=StaticPool)
  witnessModel.Base.metadata.create_all(bind=engine)
  session = sessionmaker(autocommit=False, autoflush=False, bind=engine)()
  try:
    yield session
  finally:
    session.close()
    Base.metadata.drop_all(bind=engine)

class TestWitnessRepository:

  def test_save_search(self, db):
    result = enumerate_optimal_lnn(2)
    db_run = witnessRepository.save_search(db, result)
    assert db_run.id is not None
    assert db_run.completed_depth == 2
    assert not db_run.complete
    assert witnessRepository.count_witnesses(db, "lnn", "exact") == len(result.witnesses)

    identity = witnessRepository.get_witness(db, "lnn", "exact", function_key(tuple(range(8))))
    assert identity.size == 0
    for db_witness in witnessRepository.get_witnesses(db, "lnn", "exact"):
      circuit = parse_real(db_witness.gates)
      assert len(circuit) == db_witness.size
      assert function_key(as_permutation(circuit_unitary(circuit))) == db_witness.function

  def test_listing_is_ordered_and_paginated(self, db):
    witnessRepository.save_search(db, enumerate_optimal_lnn(2))
    sizes = [db_witness.size for db_witness in witnessRepository.get_witnesses(db, "lnn", "exact")]
    assert sizes == sorted(sizes)
    page = witnessRepository.get_witnesses(db, "lnn", "exact", offset=1, limit=3)
    print(f"Página: {[db_witness.function for db_witness in page]}")
    assert len(page) == 3
    assert all(db_witness.size == 1 for db_witness in page)

  def test_replace_keeps_one_row_per_function(self, db):
    witnessRepository.replace_witnesses(db, "mct", "exact", [("0,1,2,3,4,5,6,7", 0, "")])
    witnessRepository.replace_witnesses(db, "mct", "exact", [("0,1,2,3,4,5,6,7", 0, ""), ("1,0,2,3,4,5,6,7", 3, "")])
    assert witnessRepository.count_witnesses(db, "mct", "exact") == 2
    assert witnessRepository.count_witnesses(db, "lnn", "exact") == 0

  def test_latest_run_and_histogram(self, db):
    now = datetime.now(timezone.utc)
    histogram = CostHistogram({0: 1, 1: 7}, completed_depth=1)
    witnessRepository.create_run(db, "lnn", "exact", 1, histogram, now, now)
    witnessRepository.create_run(db, "lnn", "phase", 2, CostHistogram({0: 1}, completed_depth=2), now, now)

    latest = witnessRepository.get_latest_run(db, "lnn")
    assert latest.convention == "phase"
    exact = witnessRepository.get_latest_run(db, "lnn", "exact")
    assert witnessRepository.run_histogram(exact) == histogram
    assert witnessRepository.get_latest_run(db, "mct") is None

  def test_missing_witness(self, db):
    key = function_key(classical_permutation(Circuit(3, [toffoli(0, 1, 2)])))
    assert witnessRepository.get_witness(db, "lnn", "exact", key) is None
