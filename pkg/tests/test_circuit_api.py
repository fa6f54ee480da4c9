import sys
import os
from pathlib import Path

# Adiciona o caminho do diretório 'src' ao sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import pytest
from fastapi.testclient import TestClient
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

from src.main import app
from src.constants import errorMessages
from src.core.optimalSearch import enumerate_optimal_lnn
from src.core.realFormat import parse_real
from src.core.semantics import equivalent
from src.database import get_db
from src.model import witnessModel
from src.repository import witnessRepository

FIXTURES = Path(__file__).parent / "fixtures"

engine = create_engine("sqlite://", connect_args={"check_same_thread": False}, poolclass=StaticPool)
TestingSessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

def override_get_db():
  db = TestingSessionLocal()
  try:
    yield db
  finally:
    db.close()

client = TestClient(app)

def fixture_text(name: str) -> str:
  return (FIXTURES / name).read_text()

class TestCircuitApi:

  def test_root(self):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json() == {"message": "LNN synthesis service"}

  def test_transform(self):
    source = fixture_text("mct_example.real")
    response = client.post("/api/circuits/transform", json={"real": source})
    data = response.json()
    print(f"Transform: {data['size_before']} -> {data['size_after']}")
    assert response.status_code == 200
    assert data['size_before'] == 2
    assert data['size_after'] == 21
    assert data['lnn']
    assert data['equivalent']
    assert not data['entangled']
    assert equivalent(parse_real(data['real']), parse_real(source))

  def test_transform_optimized(self):
    response = client.post("/api/circuits/transform", json={"real": fixture_text("mct_example.real"), "optimize": True})
    data = response.json()
    assert response.status_code == 200
    assert data['size_after'] == 13

  def test_transform_model_preference(self):
    body = {"real": fixture_text("mct_example.real"), "model_preference": ["MODEL3"]}
    response = client.post("/api/circuits/transform", json=body)
    assert response.status_code == 200
    assert response.json()['size_after'] == 22

  def test_transform_invalid_model(self):
    body = {"real": fixture_text("mct_example.real"), "model_preference": ["MODEL9"]}
    response = client.post("/api/circuits/transform", json=body)
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INVALID_MODEL

  def test_transform_invalid_convention(self):
    response = client.post("/api/circuits/transform", json={"real": fixture_text("mct_example.real"), "convention": "global"})
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INVALID_CONVENTION

  def test_transform_parse_error(self):
    response = client.post("/api/circuits/transform", json={"real": ".numvars 2\n.begin\nq2 a b\n.end\n"})
    data = response.json()
    assert response.status_code == 400
    assert errorMessages.UNKNOWN_GATE_TOKEN in data['detail']

  def test_transform_without_free_line(self):
    real = ".numvars 4\n.variables a b c d\n.begin\nt4 a b c d\n.end\n"
    response = client.post("/api/circuits/transform", json={"real": real})
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INSUFFICIENT_WORKING_LINES

  def test_transform_invalid_working_lines(self):
    response = client.post("/api/circuits/transform", json={"real": fixture_text("mct_example.real"), "working_lines": 0})
    assert response.status_code == 422

  def test_verify(self):
    response = client.post("/api/circuits/verify", json={"real": fixture_text("entangled.real")})
    data = response.json()
    assert response.status_code == 200
    assert data['lines'] == 3
    assert data['gates'] == 4
    assert data['quantum_cost'] == 4
    assert data['entangled']
    assert data['entangled_inputs'] == [2, 3, 4, 5]
    assert data['equivalent'] is None

  def test_verify_equivalence(self):
    body = {"real": fixture_text("toffoli_adjacent.real"), "other": fixture_text("toffoli_lnn.real")}
    response = client.post("/api/circuits/verify", json=body)
    data = response.json()
    assert response.status_code == 200
    assert data['equivalent']
    assert data['quantum_cost'] is None
    assert data['lnn']

  def test_verify_line_mismatch(self):
    body = {"real": fixture_text("toffoli_adjacent.real"), "other": fixture_text("swap_gate.real")}
    response = client.post("/api/circuits/verify", json=body)
    assert response.status_code == 400
    assert response.json()['detail'].startswith(errorMessages.LINE_COUNT_MISMATCH)

class TestSearchApi:

  @pytest.fixture(scope="class", autouse=True)
  def setup(self):
    witnessModel.Base.metadata.create_all(bind=engine)
    app.dependency_overrides[get_db] = override_get_db
    db = TestingSessionLocal()
    witnessRepository.save_search(db, enumerate_optimal_lnn(2))
    db.close()
    yield
    app.dependency_overrides.pop(get_db, None)
    witnessModel.Base.metadata.drop_all(bind=engine)

  def test_latest_run(self):
    response = client.get("/api/search/runs/lnn")
    data = response.json()
    print(f"Execução: {data}")
    assert response.status_code == 200
    assert data['completed_depth'] == 2
    assert data['histogram'] == {"0": 1, "1": 7, "2": 29}
    assert not data['complete']

  def test_run_not_found(self):
    response = client.get("/api/search/runs/mct")
    assert response.status_code == 404
    assert response.json()['detail'] == errorMessages.RUN_NOT_FOUND

  def test_invalid_kind(self):
    response = client.get("/api/search/runs/qualquer")
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INVALID_SEARCH_KIND

  def test_invalid_run_convention(self):
    response = client.get("/api/search/runs/lnn?convention=global")
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INVALID_CONVENTION

  def test_witness(self):
    response = client.get("/api/search/witnesses/lnn/0,1,3,2,4,5,6,7")
    data = response.json()
    assert response.status_code == 200
    assert data['size'] == 1
    assert parse_real(data['gates']).gates[0].kind.value == "CNOT"

  def test_witness_not_found(self):
    response = client.get("/api/search/witnesses/lnn/0,1,2,3,4,5,7,6")
    assert response.status_code == 404
    assert response.json()['detail'] == errorMessages.WITNESS_NOT_FOUND

  def test_invalid_function(self):
    response = client.get("/api/search/witnesses/lnn/0,0,1,2")
    assert response.status_code == 400
    assert response.json()['detail'] == errorMessages.INVALID_FUNCTION
