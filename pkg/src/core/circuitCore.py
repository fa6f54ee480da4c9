'''
Modelo de dados de portas e circuitos reversíveis/quânticos.

Linhas são numeradas a partir de 0, de cima para baixo no diagrama. Portas e
circuitos são imutáveis depois de construídos.
'''
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple

from src.constants import errorMessages
from src.utils.enumeration import GateKind, GateLevel
from src.utils.exceptions import CircuitError

PRIMITIVE_KINDS = frozenset({GateKind.NOT, GateKind.CNOT, GateKind.CV, GateKind.CVDG, GateKind.SWAP})
TWO_LINE_KINDS = frozenset({GateKind.CNOT, GateKind.CV, GateKind.CVDG, GateKind.SWAP})

# Expoente de V: NOT = V², CV = V¹, CV† = V³
_V_EXPONENT = {
  GateKind.NOT: 2,
  GateKind.CNOT: 2,
  GateKind.TOFFOLI: 2,
  GateKind.MCT: 2,
  GateKind.CV: 1,
  GateKind.CVDG: 3,
}

_CONTROL_COUNT = {
  GateKind.NOT: 0,
  GateKind.CNOT: 1,
  GateKind.TOFFOLI: 2,
  GateKind.CV: 1,
  GateKind.CVDG: 1,
  GateKind.SWAP: 0,
}

_SYMBOL = {
  GateKind.NOT: "NOT",
  GateKind.CNOT: "C",
  GateKind.TOFFOLI: "T",
  GateKind.MCT: "T",
  GateKind.CV: "V",
  GateKind.CVDG: "V+",
  GateKind.SWAP: "SWAP",
}

@dataclass(frozen=True)
class Gate:
  kind: GateKind
  controls: tuple[int, ...]
  targets: tuple[int, ...]

  def __post_init__(self):
    object.__setattr__(self, "controls", tuple(sorted(self.controls)))
    targets = tuple(self.targets)
    if self.kind == GateKind.SWAP:
      targets = tuple(sorted(targets))
    object.__setattr__(self, "targets", targets)

    expected_targets = 2 if self.kind == GateKind.SWAP else 1
    if len(self.targets) != expected_targets:
      raise CircuitError(errorMessages.INVALID_GATE_ARITY)
    if self.kind == GateKind.MCT:
      if len(self.controls) < 3:
        raise CircuitError(errorMessages.INVALID_GATE_ARITY)
    elif len(self.controls) != _CONTROL_COUNT[self.kind]:
      raise CircuitError(errorMessages.INVALID_GATE_ARITY)

    lines = self.lines
    if any(line < 0 for line in lines):
      raise CircuitError(errorMessages.NEGATIVE_LINE)
    if len(set(lines)) != len(lines):
      raise CircuitError(errorMessages.DUPLICATED_LINE)

  @property
  def target(self) -> int:
    return self.targets[0]

  @property
  def lines(self) -> tuple[int, ...]:
    return self.controls + self.targets

  @property
  def low(self) -> int:
    return min(self.lines)

  @property
  def high(self) -> int:
    return max(self.lines)

  @property
  def is_primitive(self) -> bool:
    return self.kind in PRIMITIVE_KINDS

  @property
  def v_exponent(self) -> int | None:
    return _V_EXPONENT.get(self.kind)

  def inverse(self) -> Gate:
    if self.kind == GateKind.CV:
      return Gate(GateKind.CVDG, self.controls, self.targets)
    if self.kind == GateKind.CVDG:
      return Gate(GateKind.CV, self.controls, self.targets)
    return self

  def relabel(self, mapping: Mapping[int, int] | Callable[[int], int]) -> Gate:
    move = mapping if callable(mapping) else mapping.__getitem__
    return Gate(self.kind, tuple(move(c) for c in self.controls), tuple(move(t) for t in self.targets))

  def __str__(self) -> str:
    if self.kind == GateKind.SWAP:
      return "SWAP({},{})".format(*self.targets)
    if not self.controls:
      return "NOT({})".format(self.target)
    return "{}({}|{})".format(_SYMBOL[self.kind], ",".join(map(str, self.controls)), self.target)

def not_gate(target: int) -> Gate:
  return Gate(GateKind.NOT, (), (target,))

def cnot(control: int, target: int) -> Gate:
  return Gate(GateKind.CNOT, (control,), (target,))

def toffoli(control1: int, control2: int, target: int) -> Gate:
  return Gate(GateKind.TOFFOLI, (control1, control2), (target,))

def cv(control: int, target: int) -> Gate:
  return Gate(GateKind.CV, (control,), (target,))

def cvdg(control: int, target: int) -> Gate:
  return Gate(GateKind.CVDG, (control,), (target,))

def swap(line1: int, line2: int) -> Gate:
  return Gate(GateKind.SWAP, (), (line1, line2))

# Porta T_n(C, t) com o tipo escolhido pelo número de controles
def mct(controls: Iterable[int], target: int) -> Gate:
  controls = tuple(controls)
  kinds = {0: GateKind.NOT, 1: GateKind.CNOT, 2: GateKind.TOFFOLI}
  return Gate(kinds.get(len(controls), GateKind.MCT), controls, (target,))

# Porta da família X a partir do expoente de V (mod 4); expoente 0 não gera porta
def x_power(controls: Iterable[int], target: int, exponent: int) -> Gate | None:
  exponent %= 4
  controls = tuple(controls)
  if exponent == 0:
    return None
  if exponent == 2:
    return mct(controls, target)
  if len(controls) != 1:
    raise CircuitError(errorMessages.INVALID_GATE_ARITY)
  return cv(controls[0], target) if exponent == 1 else cvdg(controls[0], target)

@dataclass(frozen=True)
class Circuit:
  num_lines: int
  gates: tuple[Gate, ...] = ()

  def __post_init__(self):
    object.__setattr__(self, "gates", tuple(self.gates))
    if self.num_lines < 1:
      raise CircuitError(errorMessages.INVALID_LINE_COUNT)
    for gate in self.gates:
      if gate.high >= self.num_lines:
        raise CircuitError("{} ({})".format(errorMessages.LINE_OUT_OF_RANGE, gate))

  def __len__(self) -> int:
    return len(self.gates)

  def __iter__(self):
    return iter(self.gates)

  def __add__(self, other: Circuit) -> Circuit:
    if other.num_lines != self.num_lines:
      raise CircuitError(errorMessages.LINE_COUNT_MISMATCH)
    return Circuit(self.num_lines, self.gates + other.gates)

  def __str__(self) -> str:
    return " ".join(str(gate) for gate in self.gates)

  @property
  def level(self) -> GateLevel:
    if all(gate.is_primitive for gate in self.gates):
      return GateLevel.PRIMITIVE
    return GateLevel.MCT

  def with_gates(self, gates: Iterable[Gate]) -> Circuit:
    return Circuit(self.num_lines, tuple(gates))

  def relabel(self, mapping: Mapping[int, int] | Callable[[int], int], num_lines: int | None = None) -> Circuit:
    return Circuit(num_lines or self.num_lines, tuple(gate.relabel(mapping) for gate in self.gates))

class T3Layout(NamedTuple):
  case: int
  p: int
  q: int

def nnc(gate: Gate) -> int:
  if gate.kind not in TWO_LINE_KINDS:
    raise CircuitError(errorMessages.NOT_TWO_QUBIT_GATE)
  return gate.high - gate.low - 1

# Porta adjacente: as linhas formam um bloco contíguo
def is_adjacent(gate: Gate) -> bool:
  return gate.high - gate.low == len(gate.lines) - 1

def t3_layout(gate: Gate) -> T3Layout:
  if gate.kind != GateKind.TOFFOLI:
    raise CircuitError(errorMessages.NOT_TOFFOLI)
  c1, c2 = gate.controls
  t = gate.target
  if c1 < t < c2:
    return T3Layout(2, t - c1 - 1, c2 - t - 1)
  q = c2 - c1 - 1
  p = t - c2 - 1 if t > c2 else c1 - t - 1
  return T3Layout(1, p, q)

# Número de portas, em qualquer nível (para circuitos MCT conta portas MCT)
def gate_count(circuit: Circuit) -> int:
  return len(circuit.gates)

def quantum_cost(circuit: Circuit) -> int:
  if circuit.level != GateLevel.PRIMITIVE:
    raise CircuitError(errorMessages.NOT_PRIMITIVE_LEVEL)
  # Uma unidade por porta; para contar SWAP como 3 CNOTs use expand_swaps antes
  return len(circuit.gates)

def is_lnn(circuit: Circuit) -> bool:
  return all(is_adjacent(gate) for gate in circuit.gates)

def inverse(circuit: Circuit) -> Circuit:
  return circuit.with_gates(gate.inverse() for gate in reversed(circuit.gates))

# As duas realizações do SWAP com três CNOTs; reverse começa pelo CNOT de b para a
def swap_as_cnots(gate: Gate, reverse: bool = False) -> tuple[Gate, ...]:
  a, b = gate.targets
  if reverse:
    a, b = b, a
  return (cnot(a, b), cnot(b, a), cnot(a, b))

def expand_swaps(circuit: Circuit) -> Circuit:
  gates = []
  for gate in circuit.gates:
    if gate.kind == GateKind.SWAP:
      gates.extend(swap_as_cnots(gate))
    else:
      gates.append(gate)
  return circuit.with_gates(gates)

# Reflexão do eixo de linhas: l -> n-1-l
def reflect(circuit: Circuit) -> Circuit:
  last = circuit.num_lines - 1
  return circuit.relabel(lambda line: last - line)
