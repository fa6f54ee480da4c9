import sys
import os
from pathlib import Path

# Adiciona o caminho do diretório 'src' ao sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import pytest

from src.constants import errorMessages
from src.core.circuitCore import Circuit, cnot, cv, cvdg, mct, not_gate, swap, toffoli
from src.core.realFormat import (
  TEMPLATE_BASE_HEADER, default_variable_names, parse_real, parse_template_base, write_real, write_template_base,
)
from src.utils.exceptions import RealFormatError

FIXTURES = Path(__file__).parent / "fixtures"

def body(*lines: str, numvars: int = 3, variables: str = "a b c") -> str:
  return "\n".join([".numvars {}".format(numvars), ".variables {}".format(variables), ".begin", *lines, ".end"])

class TestParseReal:

  def test_gate_tokens(self):
    circuit = parse_real(body("t1 a", "t2 a b", "t3 a b c", "v b c", "v+ a b", "f2 a c"))
    assert circuit.gates == (not_gate(0), cnot(0, 1), toffoli(0, 1, 2), cv(1, 2), cvdg(0, 1), swap(0, 2))

  def test_last_name_is_target(self):
    circuit = parse_real(body("t4 e a c b", numvars=5, variables="a b c d e"))
    assert circuit.gates == (mct([4, 0, 2], 1),)

  def test_comments_and_headers_ignored(self):
    circuit = parse_real((FIXTURES / "mct_example.real").read_text())
    assert circuit.num_lines == 4
    assert circuit.gates == (toffoli(0, 1, 3), cnot(0, 3))

  def test_default_variables(self):
    circuit = parse_real(".numvars 2\n.begin\nt2 b a\n.end\n")
    assert circuit.gates == (cnot(1, 0),)

  def test_unknown_token_reports_line(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(body("t2 a b", "q2 a b"))
    assert error.value.line_number == 5
    assert error.value.message.startswith(errorMessages.UNKNOWN_GATE_TOKEN)

  def test_token_arity_mismatch(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(body("t3 a b"))
    assert error.value.message == errorMessages.GATE_TOKEN_MISMATCH

  def test_unknown_variable(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(body("t2 a z"))
    assert error.value.message.startswith(errorMessages.UNKNOWN_VARIABLE)

  def test_duplicated_line_is_wrapped(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(body("t2 a a"))
    assert error.value.line_number == 4
    assert error.value.message == errorMessages.DUPLICATED_LINE

  def test_missing_numvars(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(".begin\n.end\n")
    assert error.value.message == errorMessages.MISSING_NUMVARS

  def test_missing_end(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(".numvars 1\n.begin\nt1 a\n")
    assert error.value.message == errorMessages.MISSING_END

  def test_variables_mismatch(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(".numvars 3\n.variables a b\n.begin\n.end\n")
    assert error.value.message == errorMessages.VARIABLES_MISMATCH

  def test_gate_outside_body(self):
    with pytest.raises(RealFormatError) as error:
      parse_real(".numvars 2\nt2 a b\n")
    assert error.value.message == errorMessages.GATE_OUTSIDE_BODY

class TestWriteReal:

  def test_round_trip(self):
    circuit = Circuit(4, [toffoli(0, 1, 3), cv(2, 3), cvdg(3, 2), swap(0, 1), mct([0, 1, 2], 3)])
    assert parse_real(write_real(circuit)) == circuit

  def test_written_text_is_stable(self):
    text = write_real(Circuit(2, [cnot(0, 1)]))
    assert write_real(parse_real(text)) == text
    assert ".constants --" in text
    assert "t2 a b" in text

  def test_comments_and_names(self):
    text = write_real(Circuit(2, [cv(0, 1)]), names=["x", "y"], comments=["gerado"])
    assert text.startswith("# gerado\n")
    assert "v x y" in text

  def test_variable_names_for_wide_circuits(self):
    assert default_variable_names(3) == ["a", "b", "c"]
    assert default_variable_names(30)[-1] == "x29"

class TestTemplateBase:

  def test_round_trip(self):
    circuits = [Circuit(1, [not_gate(0), not_gate(0)]), Circuit(2, [cv(0, 1), cvdg(0, 1)])]
    text = write_template_base(circuits)
    assert text.startswith(TEMPLATE_BASE_HEADER)
    assert parse_template_base(text) == circuits

  def test_size_mismatch(self):
    text = "\n".join([TEMPLATE_BASE_HEADER, "#template d=3", body("t1 a", "t1 a", numvars=1, variables="a")])
    with pytest.raises(RealFormatError) as error:
      parse_template_base(text)
    assert error.value.message == errorMessages.TEMPLATE_SIZE_MISMATCH

  def test_unknown_version(self):
    with pytest.raises(RealFormatError) as error:
      parse_template_base("#templates version 9\n")
    assert error.value.message == errorMessages.INVALID_TEMPLATE_HEADER
