'''
Leitura e escrita do formato REAL (dialeto RevKit) e da base de templates.

Tokens de porta: t1/t2/t3/tN para NOT/CNOT/Toffoli/MCT (o último nome é o
alvo), v e v+ para Controlled-V e Controlled-V†, f2 para SWAP.
'''
import re
from string import ascii_lowercase
from typing import Iterable

from src.constants import errorMessages
from src.core.circuitCore import Circuit, Gate, cv, cvdg, mct, swap
from src.utils.enumeration import GateKind
from src.utils.exceptions import CircuitError, RealFormatError

REAL_VERSION = "1.0"
TEMPLATE_BASE_VERSION = 1
TEMPLATE_BASE_HEADER = "#templates version {}".format(TEMPLATE_BASE_VERSION)

_TEMPLATE_HEADER = re.compile(r"^#template\s+d=(\d+)\s*$")
_MCT_TOKEN = re.compile(r"^t(\d+)$")

def default_variable_names(num_lines: int) -> list[str]:
  if num_lines <= len(ascii_lowercase):
    return list(ascii_lowercase[:num_lines])
  return ["x{}".format(index) for index in range(num_lines)]

def _gate_from_token(token: str, lines: list[int], line_number: int) -> Gate:
  mct_match = _MCT_TOKEN.match(token)
  if mct_match:
    if int(mct_match.group(1)) != len(lines) or not lines:
      raise RealFormatError(errorMessages.GATE_TOKEN_MISMATCH, line_number)
    return mct(lines[:-1], lines[-1])
  if token in ("v", "v+", "f2"):
    if len(lines) != 2:
      raise RealFormatError(errorMessages.GATE_TOKEN_MISMATCH, line_number)
    if token == "v":
      return cv(lines[0], lines[1])
    if token == "v+":
      return cvdg(lines[0], lines[1])
    return swap(lines[0], lines[1])
  raise RealFormatError("{} ({})".format(errorMessages.UNKNOWN_GATE_TOKEN, token), line_number)

def parse_real(text: str, line_offset: int = 0) -> Circuit:
  numvars = None
  variables = None
  index = {}
  in_body = False
  gates = []

  for number, raw in enumerate(text.splitlines(), start=1 + line_offset):
    line = raw.split("#", 1)[0].strip()
    if not line:
      continue

    if line.startswith("."):
      key, *values = line.split()
      key = key.lower()
      if key == ".numvars":
        if len(values) != 1 or not values[0].isdigit() or int(values[0]) < 1:
          raise RealFormatError(errorMessages.INVALID_NUMVARS, number)
        numvars = int(values[0])
      elif key == ".variables":
        variables = values
      elif key == ".begin":
        if numvars is None:
          raise RealFormatError(errorMessages.MISSING_NUMVARS, number)
        if variables is None:
          variables = default_variable_names(numvars)
        if len(variables) != numvars or len(set(variables)) != numvars:
          raise RealFormatError(errorMessages.VARIABLES_MISMATCH, number)
        index = {name: position for position, name in enumerate(variables)}
        in_body = True
      elif key == ".end":
        in_body = False
      # .version, .inputs, .outputs, .constants e .garbage não afetam o circuito
      continue

    if not in_body:
      raise RealFormatError(errorMessages.GATE_OUTSIDE_BODY, number)

    token, *names = line.split()
    unknown = [name for name in names if name not in index]
    if unknown:
      raise RealFormatError("{} ({})".format(errorMessages.UNKNOWN_VARIABLE, ", ".join(unknown)), number)
    try:
      gates.append(_gate_from_token(token.lower(), [index[name] for name in names], number))
    except RealFormatError:
      raise
    except CircuitError as error:
      raise RealFormatError(str(error), number) from error

  if numvars is None:
    raise RealFormatError(errorMessages.MISSING_NUMVARS)
  if in_body:
    raise RealFormatError(errorMessages.MISSING_END)
  return Circuit(numvars, gates)

def _gate_token(gate: Gate) -> str:
  if gate.kind == GateKind.CV:
    return "v"
  if gate.kind == GateKind.CVDG:
    return "v+"
  if gate.kind == GateKind.SWAP:
    return "f2"
  return "t{}".format(len(gate.lines))

def write_real(circuit: Circuit, names: list[str] | None = None, comments: Iterable[str] = ()) -> str:
  names = names or default_variable_names(circuit.num_lines)
  dashes = "-" * circuit.num_lines
  out = ["# {}".format(comment) for comment in comments]
  out += [
    ".version {}".format(REAL_VERSION),
    ".numvars {}".format(circuit.num_lines),
    ".variables {}".format(" ".join(names)),
    ".inputs {}".format(" ".join(names)),
    ".outputs {}".format(" ".join(names)),
    ".constants {}".format(dashes),
    ".garbage {}".format(dashes),
    ".begin",
  ]
  for gate in circuit.gates:
    out.append("{} {}".format(_gate_token(gate), " ".join(names[line] for line in gate.lines)))
  out.append(".end")
  return "\n".join(out) + "\n"

'''
Base de templates: um cabeçalho de versão seguido de fragmentos REAL, cada um
precedido por "#template d=<tamanho>".
'''
def parse_template_base(text: str) -> list[Circuit]:
  chunks = []
  current = None
  for number, raw in enumerate(text.splitlines(), start=1):
    stripped = raw.strip()
    header = _TEMPLATE_HEADER.match(stripped)
    if header:
      current = (number, int(header.group(1)), [])
      chunks.append(current)
    elif stripped.startswith("#templates"):
      if stripped != TEMPLATE_BASE_HEADER:
        raise RealFormatError(errorMessages.INVALID_TEMPLATE_HEADER, number)
    elif stripped.startswith("#template"):
      raise RealFormatError(errorMessages.INVALID_TEMPLATE_HEADER, number)
    elif current is not None:
      current[2].append(raw)

  circuits = []
  for number, size, body in chunks:
    circuit = parse_real("\n".join(body), line_offset=number)
    if len(circuit) != size:
      raise RealFormatError(errorMessages.TEMPLATE_SIZE_MISMATCH, number)
    circuits.append(circuit)
  return circuits

def write_template_base(circuits: Iterable[Circuit]) -> str:
  out = [TEMPLATE_BASE_HEADER]
  for circuit in circuits:
    body = write_real(circuit)
    out.append("#template d={}".format(len(circuit)))
    out.append(body.rstrip("\n"))
  return "\n".join(out) + "\n"
