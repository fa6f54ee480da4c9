import sys
import os
from pathlib import Path

# Adiciona o caminho do diretório 'src' ao sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import pytest
from hypothesis import given, settings, strategies as st

from src.constants import errorMessages
from src.core.circuitCore import Circuit, cnot, cv, cvdg, inverse, is_lnn, reflect, toffoli
from src.core.lnnTransform import TransformOptions, synthesize_lnn
from src.core.optimalSearch import enumerate_optimal_lnn
from src.core.realFormat import parse_real, write_template_base
from src.core.semantics import circuit_unitary, equivalent
from src.core.templates import (
  RewriteTrace, adjacent_library, builtin_templates, canonical_key, find_matches, find_templates,
  gate_cancel_merge, is_irreducible, load_templates, make_template, match_and_reduce, merge_bases, optimize,
)
from src.utils.enumeration import ModelKind
from src.utils.exceptions import CircuitError

FIXTURES = Path(__file__).parent / "fixtures"

def load(name: str) -> Circuit:
  return parse_real((FIXTURES / name).read_text())

library_gates = st.sampled_from(adjacent_library(3))
lnn_circuits = st.lists(library_gates, max_size=10).map(lambda gates: Circuit(3, gates))

@pytest.fixture(scope="module")
def optimal_witnesses():
  result = enumerate_optimal_lnn(4)
  return [result.witness(function) for function in result.witnesses]

class TestBuiltinBase:

  def test_templates_are_lnn_identities(self):
    base = builtin_templates()
    assert len(base) > 0
    for template in base:
      print(template.name)
      assert is_lnn(template.circuit)
      assert circuit_unitary(template.circuit).is_identity()

  def test_sizes(self):
    sizes = sorted(template.size for template in builtin_templates())
    assert sizes[:4] == [2, 2, 2, 3]
    assert max(sizes) == 18

  def test_make_template_rejects(self):
    with pytest.raises(CircuitError) as error:
      make_template(Circuit(2, [cnot(0, 1)]))
    assert str(error.value) == errorMessages.TEMPLATE_NOT_IDENTITY
    with pytest.raises(CircuitError) as error:
      make_template(Circuit(3, [cnot(0, 2), cnot(0, 2)]))
    assert str(error.value) == errorMessages.TEMPLATE_NOT_LNN

  def test_merge_bases_removes_duplicates(self):
    base = builtin_templates()
    assert merge_bases(base, base) == base

  def test_load_templates_from_file(self, tmp_path):
    extra = tmp_path / "extra.real"
    extra.write_text(write_template_base([Circuit(2, [cnot(1, 0), cnot(1, 0)]), Circuit(2, [cv(1, 0), cv(1, 0), cnot(1, 0)])]))
    assert load_templates(extra) == builtin_templates()
    assert load_templates() == builtin_templates()

class TestCancelMerge:

  def test_pair_is_deleted(self):
    trace = RewriteTrace()
    result = gate_cancel_merge(Circuit(2, [cnot(0, 1), cnot(0, 1)]), trace)
    assert len(result) == 0
    assert trace.steps[0].rule == "delete"

  def test_v_pair_merges_into_cnot(self):
    assert gate_cancel_merge(Circuit(2, [cv(0, 1), cv(0, 1)])).gates == (cnot(0, 1),)
    assert gate_cancel_merge(Circuit(2, [cv(0, 1), cnot(0, 1)])).gates == (cvdg(0, 1),)
    assert len(gate_cancel_merge(Circuit(2, [cv(0, 1), cvdg(0, 1)]))) == 0

  def test_cancels_through_commuting_gate(self):
    result = gate_cancel_merge(Circuit(3, [cnot(0, 1), cnot(2, 1), cnot(0, 1)]))
    assert result.gates == (cnot(2, 1),)

  def test_blocked_by_non_commuting_gate(self):
    circuit = Circuit(3, [cnot(0, 1), cnot(1, 2), cnot(0, 1)])
    assert gate_cancel_merge(circuit) == circuit

  def test_requires_primitive_level(self):
    with pytest.raises(CircuitError) as error:
      gate_cancel_merge(Circuit(3, [toffoli(0, 1, 2)]))
    assert str(error.value) == errorMessages.NOT_PRIMITIVE_LEVEL

class TestMatching:

  def v_v_not(self):
    return next(template for template in builtin_templates() if template.size == 3)

  def test_more_than_half_matches(self):
    matches = list(find_matches(Circuit(2, [cv(0, 1), cv(0, 1)]), self.v_v_not()))
    assert len(matches) == 1
    assert matches[0].indices == (0, 1)
    assert matches[0].replacement == (cnot(0, 1),)

  def test_single_gate_is_not_enough(self):
    assert list(find_matches(Circuit(2, [cv(0, 1)]), self.v_v_not())) == []

  def test_template_wider_than_circuit(self):
    wide = max(builtin_templates(), key=lambda template: template.width)
    assert list(find_matches(Circuit(2, [cnot(0, 1)]), wide)) == []

  def test_match_and_reduce(self):
    circuit = Circuit(3, [cv(1, 2), cv(1, 2)])
    result, trace = match_and_reduce(circuit, [self.v_v_not()])
    assert result.gates == (cnot(1, 2),)
    assert len(trace) == 1

  def test_rejects_non_lnn(self):
    with pytest.raises(CircuitError) as error:
      match_and_reduce(Circuit(3, [cnot(0, 2)]))
    assert str(error.value) == errorMessages.NOT_LNN

  def test_canonical_key_symmetries(self):
    circuit = Circuit(3, [cv(1, 2), cnot(0, 1), cvdg(1, 2)])
    key = canonical_key(circuit)
    assert canonical_key(reflect(circuit)) == key
    assert canonical_key(inverse(circuit)) == key
    assert canonical_key(circuit.with_gates(circuit.gates[1:] + circuit.gates[:1])) == key
    assert canonical_key(circuit.relabel(lambda line: line + 1, 4)) == key

class TestOptimize:

  def test_mct_example_after_model3(self):
    source = load("mct_example.real")
    synthesized = synthesize_lnn(source, TransformOptions(model_preference=(ModelKind.MODEL3,)))
    trace = RewriteTrace()
    result = optimize(synthesized, trace=trace)
    print(trace.steps)
    assert len(synthesized) == 22
    assert len(result) <= 13
    assert is_lnn(result)
    assert equivalent(result, source)

  def test_rejects_mct_level(self):
    with pytest.raises(CircuitError) as error:
      optimize(Circuit(3, [toffoli(0, 1, 2)]))
    assert str(error.value) == errorMessages.NOT_PRIMITIVE_LEVEL

  def test_rejects_non_lnn(self):
    with pytest.raises(CircuitError) as error:
      optimize(Circuit(3, [cnot(0, 2)]))
    assert str(error.value) == errorMessages.NOT_LNN

  def test_optimal_circuits_stay(self, optimal_witnesses):
    for circuit in optimal_witnesses:
      assert len(optimize(circuit)) == len(circuit)

  @pytest.mark.slow
  def test_optimal_circuits_stay_up_to_depth_eight(self):
    result = enumerate_optimal_lnn(8)
    for function in result.witnesses:
      circuit = result.witness(function)
      assert len(optimize(circuit)) == len(circuit)

  def test_eighteen_gate_template_fires(self):
    d18 = next(template for template in builtin_templates() if template.size == 18)
    prefix = Circuit(3, d18.circuit.gates[:10])
    result, trace = match_and_reduce(prefix, [d18])
    assert len(result) == 8
    assert trace.steps[0].rule == "template b8-d18"
    assert equivalent(result, prefix)

  @settings(max_examples=40, deadline=None)
  @given(lnn_circuits)
  def test_never_grows_and_keeps_unitary(self, circuit):
    result = optimize(circuit, keep_separable=False)
    assert len(result) <= len(circuit)
    assert circuit_unitary(result) == circuit_unitary(circuit)

class TestDiscovery:

  def test_size_two(self):
    templates = find_templates(2, 2)
    assert len(templates) == 3
    assert all(template.size == 2 for template in templates)
    assert sorted(template.width for template in templates) == [1, 2, 2]

  def test_size_three_finds_v_v_not(self):
    templates = find_templates(3, 2)
    assert sorted(template.size for template in templates) == [2, 2, 2, 3]
    found = next(template for template in templates if template.size == 3)
    builtin = next(template for template in builtin_templates() if template.size == 3)
    assert canonical_key(found.circuit) == canonical_key(builtin.circuit)

  def test_reducible_template(self):
    smaller = find_templates(2, 2)
    doubled = make_template(Circuit(2, [cnot(0, 1), cnot(0, 1), cnot(0, 1), cnot(0, 1)]))
    assert not is_irreducible(doubled, smaller)
    assert is_irreducible(builtin_templates()[0], [])
