import sys
import os

# Adiciona o caminho do diretório 'src' ao sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import numpy as np
import pytest

from src.constants import errorMessages
from src.core import checkpoint
from src.core.circuitCore import Circuit, cnot, cv, toffoli
from src.core.optimalSearch import (
  LNN_HISTOGRAM_PREFIX, TOTAL_FUNCTIONS, CostHistogram, decode_state, encode_state, enumerate_optimal_lnn,
  enumerate_optimal_mct, function_key, lnn_gate_library, mct_gate_library, optimal_lnn_cost, parse_function_key,
)
from src.core.semantics import as_permutation, circuit_unitary, classical_permutation
from src.utils.enumeration import Convention, SearchKind
from src.utils.exceptions import CheckpointError, CircuitError

MCT_DISTRIBUTION = {0: 1, 1: 12, 2: 102, 3: 625, 4: 2780, 5: 8921, 6: 17049, 7: 10253, 8: 577}

@pytest.fixture(scope="module")
def mct_result():
  return enumerate_optimal_mct()

@pytest.fixture(scope="module")
def lnn_result():
  return enumerate_optimal_lnn(3)

class TestLibraries:

  def test_lnn_library(self):
    library = lnn_gate_library()
    assert len(library) == 15
    assert cv(1, 0) in library
    assert cnot(0, 2) not in library

  def test_mct_library(self):
    library = mct_gate_library()
    assert len(library) == 12
    assert toffoli(1, 2, 0) in library

  def test_only_three_lines(self):
    with pytest.raises(CircuitError) as error:
      lnn_gate_library(4)
    assert str(error.value) == errorMessages.INVALID_LINE_COUNT

  def test_function_key(self):
    function = (1, 0, 2, 3, 4, 5, 6, 7)
    assert function_key(function) == "1,0,2,3,4,5,6,7"
    assert parse_function_key("1,0,2,3,4,5,6,7") == function

  @pytest.mark.parametrize("key", ["1,1,2,3", "0,1,2", "a,b"])
  def test_invalid_function_key(self, key):
    with pytest.raises(CircuitError) as error:
      parse_function_key(key)
    assert str(error.value) == errorMessages.INVALID_FUNCTION

class TestHistogram:

  def test_average_requires_complete_search(self):
    histogram = CostHistogram({0: 1, 1: 3})
    assert histogram.total == 4
    assert histogram.average() is None
    histogram.complete = True
    assert histogram.average() == 0.75

  def test_prefix_and_dict(self):
    histogram = CostHistogram({0: 1, 2: 5}, completed_depth=2)
    assert histogram.prefix(3) == [1, 0, 5, 0]
    assert histogram.to_dict()["counts"] == {"0": 1, "2": 5}

class TestMctSearch:

  def test_distribution(self, mct_result):
    assert mct_result.histogram.counts == MCT_DISTRIBUTION
    assert mct_result.histogram.total == TOTAL_FUNCTIONS
    assert mct_result.histogram.complete
    assert mct_result.kind == SearchKind.MCT

  def test_witnesses_realize_functions(self, mct_result):
    for function in list(mct_result.witnesses)[::97]:
      witness = mct_result.witness(function)
      assert classical_permutation(witness) == function
      assert len(witness) == mct_result.cost(function)

  def test_toffoli_cost(self, mct_result):
    assert mct_result.cost(classical_permutation(Circuit(3, [toffoli(0, 1, 2)]))) == 1

class TestLnnSearch:

  def test_histogram_prefix(self, lnn_result):
    assert lnn_result.histogram.prefix(3) == list(LNN_HISTOGRAM_PREFIX[:4])
    assert lnn_result.histogram.completed_depth == 3
    assert not lnn_result.histogram.complete
    assert lnn_result.histogram.average() is None

  def test_witnesses_are_optimal_and_correct(self, lnn_result):
    for function in lnn_result.witnesses:
      witness = lnn_result.witness(function)
      assert as_permutation(circuit_unitary(witness)) == function

  def test_known_costs(self, lnn_result):
    assert optimal_lnn_cost(tuple(range(8)), lnn_result) == 0
    assert optimal_lnn_cost(classical_permutation(Circuit(3, [cnot(0, 1)])), lnn_result) == 1
    assert optimal_lnn_cost(classical_permutation(Circuit(3, [cnot(0, 2)])), lnn_result) is None

  def test_lexicographic_witness(self, lnn_result):
    # a testemunha é a menor sequência de índices entre as mínimas
    function = classical_permutation(Circuit(3, [cnot(0, 1), cnot(1, 2)]))
    library = lnn_gate_library()
    sequence = lnn_result.witnesses[function]
    assert [library[index] for index in sequence] == [cnot(0, 1), cnot(1, 2)]

  def test_state_encoding(self):
    re = np.eye(8, dtype=np.int64) * 2
    im = np.zeros((8, 8), dtype=np.int64)
    im[0, 1] = -1
    decoded = decode_state(encode_state(re, im, 1))
    assert (decoded[0] == re).all()
    assert (decoded[1] == im).all()
    assert decoded[2] == 1

  def test_invalid_depth(self):
    with pytest.raises(CircuitError) as error:
      enumerate_optimal_lnn(-1)
    assert str(error.value) == errorMessages.INVALID_DEPTH

  def test_phase_convention(self):
    result = enumerate_optimal_lnn(2, Convention.PHASE)
    assert result.convention == Convention.PHASE
    assert result.histogram.prefix(1) == [1, 7]
    for function in result.witnesses:
      assert as_permutation(circuit_unitary(result.witness(function)), Convention.PHASE) == function

  def test_memory_budget_gives_partial_result(self):
    result = enumerate_optimal_lnn(3, mem_budget_mb=0)
    assert result.histogram.completed_depth == 0
    assert not result.histogram.complete
    assert result.histogram.counts == {0: 1}

  def test_workers(self):
    result = enumerate_optimal_lnn(2, workers=2)
    assert result.histogram.prefix(2) == list(LNN_HISTOGRAM_PREFIX[:3])

  @pytest.mark.slow
  def test_full_prefix(self):
    result = enumerate_optimal_lnn(len(LNN_HISTOGRAM_PREFIX) - 1)
    assert result.histogram.prefix(len(LNN_HISTOGRAM_PREFIX) - 1) == list(LNN_HISTOGRAM_PREFIX)

  @pytest.mark.slow
  def test_toffoli_needs_nine_gates(self):
    result = enumerate_optimal_lnn(9)
    assert optimal_lnn_cost(classical_permutation(Circuit(3, [toffoli(0, 1, 2)])), result) == 9

class TestCheckpoint:

  def test_resume_matches_single_run(self, tmp_path, lnn_result):
    path = tmp_path / "busca.ckpt"
    first = enumerate_optimal_lnn(2, checkpoint_path=path)
    assert first.histogram.completed_depth == 2
    state = checkpoint.read_checkpoint(path)
    assert state.depth == 2
    assert state.kind == SearchKind.LNN
    resumed = enumerate_optimal_lnn(3, resume_path=path)
    assert resumed.histogram.counts == lnn_result.histogram.counts
    assert resumed.witnesses == lnn_result.witnesses

  def test_convention_mismatch(self, tmp_path):
    path = tmp_path / "busca.ckpt"
    enumerate_optimal_lnn(1, checkpoint_path=path)
    with pytest.raises(CheckpointError) as error:
      enumerate_optimal_lnn(2, Convention.PHASE, resume_path=path)
    assert str(error.value) == errorMessages.CHECKPOINT_MISMATCH

  def test_invalid_file(self, tmp_path):
    path = tmp_path / "lixo.ckpt"
    path.write_bytes(b"qualquer coisa")
    with pytest.raises(CheckpointError) as error:
      checkpoint.read_checkpoint(path)
    assert str(error.value) == errorMessages.CHECKPOINT_INVALID

  def test_truncated_file(self, tmp_path):
    path = tmp_path / "busca.ckpt"
    enumerate_optimal_lnn(1, checkpoint_path=path)
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(CheckpointError):
      checkpoint.read_checkpoint(path)
