'''
Simulação exata de circuitos sobre números gaussianos diádicos (a + b·i)/2^k.

Todas as portas da biblioteca {NOT, CNOT, T_n, CV, CV†, SWAP} têm entradas
nesse anel, então produtos, igualdades e menores 2x2 são decididos sem
tolerância numérica. Índices da base: a linha 0 é o bit mais significativo.
'''
from __future__ import annotations

from dataclasses import dataclass

from src.core.circuitCore import Circuit, Gate
from src.utils.enumeration import Convention, GateKind
from src.utils.exceptions import LineCountMismatchError

Permutation = tuple[int, ...]

@dataclass(frozen=True)
class DyadicGaussian:
  re_num: int
  im_num: int = 0
  exp: int = 0

  def __post_init__(self):
    re_num, im_num, exp = self.re_num, self.im_num, self.exp
    if exp < 0:
      re_num, im_num, exp = re_num << -exp, im_num << -exp, 0
    while exp > 0 and not (re_num & 1) and not (im_num & 1):
      re_num, im_num, exp = re_num >> 1, im_num >> 1, exp - 1
    object.__setattr__(self, "re_num", re_num)
    object.__setattr__(self, "im_num", im_num)
    object.__setattr__(self, "exp", exp)

  @classmethod
  def from_int(cls, value: int) -> DyadicGaussian:
    return cls(value, 0, 0)

  def _aligned(self, other: DyadicGaussian) -> tuple[int, int, int, int, int]:
    exp = max(self.exp, other.exp)
    left, right = exp - self.exp, exp - other.exp
    return self.re_num << left, self.im_num << left, other.re_num << right, other.im_num << right, exp

  def __add__(self, other: DyadicGaussian) -> DyadicGaussian:
    ar, ai, br, bi, exp = self._aligned(other)
    return DyadicGaussian(ar + br, ai + bi, exp)

  def __sub__(self, other: DyadicGaussian) -> DyadicGaussian:
    ar, ai, br, bi, exp = self._aligned(other)
    return DyadicGaussian(ar - br, ai - bi, exp)

  def __neg__(self) -> DyadicGaussian:
    return DyadicGaussian(-self.re_num, -self.im_num, self.exp)

  def __mul__(self, other: DyadicGaussian) -> DyadicGaussian:
    return DyadicGaussian(
      self.re_num * other.re_num - self.im_num * other.im_num,
      self.re_num * other.im_num + self.im_num * other.re_num,
      self.exp + other.exp,
    )

  def conjugate(self) -> DyadicGaussian:
    return DyadicGaussian(self.re_num, -self.im_num, self.exp)

  def norm_squared(self) -> DyadicGaussian:
    return DyadicGaussian(self.re_num ** 2 + self.im_num ** 2, 0, 2 * self.exp)

  def is_zero(self) -> bool:
    return self.re_num == 0 and self.im_num == 0

  def __str__(self) -> str:
    return "({}{:+}i)/2^{}".format(self.re_num, self.im_num, self.exp)

def _line_bit(num_lines: int, line: int) -> int:
  return 1 << (num_lines - 1 - line)

def _normalize(re: list, im: list, exp: int) -> tuple[list, list, int]:
  while exp > 0 and not any((value & 1) for row in re for value in row) and not any((value & 1) for row in im for value in row):
    re = [[value >> 1 for value in row] for row in re]
    im = [[value >> 1 for value in row] for row in im]
    exp -= 1
  return re, im, exp

# (1+i)·(a+bi) e (1-i)·(a+bi)
def _plus(a: int, b: int) -> tuple[int, int]:
  return a - b, a + b

def _minus(a: int, b: int) -> tuple[int, int]:
  return a + b, b - a

def _combine(re0: list, im0: list, re1: list, im1: list, first, second) -> tuple[list, list]:
  out_re, out_im = [], []
  for a0, b0, a1, b1 in zip(re0, im0, re1, im1):
    x0, y0 = first(a0, b0)
    x1, y1 = second(a1, b1)
    out_re.append(x0 + x1)
    out_im.append(y0 + y1)
  return out_re, out_im

'''
Aplica a porta às linhas (vetores-linha) de um bloco de numeradores com
expoente comum. Uma matriz unitária e um vetor de estado (linhas de uma
coluna) usam a mesma rotina: a porta age pela esquerda.
'''
def _apply_gate(re: list, im: list, exp: int, gate: Gate, num_lines: int) -> tuple[list, list, int]:
  dim = 1 << num_lines
  if gate.kind == GateKind.SWAP:
    a, b = (_line_bit(num_lines, line) for line in gate.targets)
    new_re, new_im = list(re), list(im)
    for x in range(dim):
      if bool(x & a) != bool(x & b):
        new_re[x ^ a ^ b] = re[x]
        new_im[x ^ a ^ b] = im[x]
    return new_re, new_im, exp

  control_mask = sum(_line_bit(num_lines, control) for control in gate.controls)
  target_bit = _line_bit(num_lines, gate.target)

  if gate.kind in (GateKind.CV, GateKind.CVDG):
    new_re = [[value << 1 for value in row] for row in re]
    new_im = [[value << 1 for value in row] for row in im]
    first, second = (_plus, _minus) if gate.kind == GateKind.CV else (_minus, _plus)
    for x0 in range(dim):
      if x0 & control_mask != control_mask or x0 & target_bit:
        continue
      x1 = x0 | target_bit
      new_re[x0], new_im[x0] = _combine(re[x0], im[x0], re[x1], im[x1], first, second)
      new_re[x1], new_im[x1] = _combine(re[x0], im[x0], re[x1], im[x1], second, first)
    return _normalize(new_re, new_im, exp + 1)

  new_re, new_im = list(re), list(im)
  for x in range(dim):
    if x & control_mask == control_mask:
      new_re[x ^ target_bit] = re[x]
      new_im[x ^ target_bit] = im[x]
  return new_re, new_im, exp

@dataclass(frozen=True)
class UnitaryMatrix:
  num_lines: int
  re: tuple[tuple[int, ...], ...]
  im: tuple[tuple[int, ...], ...]
  exp: int = 0

  @property
  def dim(self) -> int:
    return 1 << self.num_lines

  @classmethod
  def identity(cls, num_lines: int) -> UnitaryMatrix:
    dim = 1 << num_lines
    re = tuple(tuple(int(r == c) for c in range(dim)) for r in range(dim))
    im = tuple(tuple(0 for _ in range(dim)) for _ in range(dim))
    return cls(num_lines, re, im, 0)

  @classmethod
  def _from_rows(cls, num_lines: int, re: list, im: list, exp: int) -> UnitaryMatrix:
    return cls(num_lines, tuple(tuple(row) for row in re), tuple(tuple(row) for row in im), exp)

  def entry(self, row: int, column: int) -> DyadicGaussian:
    return DyadicGaussian(self.re[row][column], self.im[row][column], self.exp)

  def then(self, gate: Gate) -> UnitaryMatrix:
    re, im, exp = _apply_gate(list(self.re), list(self.im), self.exp, gate, self.num_lines)
    return UnitaryMatrix._from_rows(self.num_lines, re, im, exp)

  def __matmul__(self, other: UnitaryMatrix) -> UnitaryMatrix:
    columns_re = list(zip(*other.re))
    columns_im = list(zip(*other.im))
    re, im = [], []
    for ar, ai in zip(self.re, self.im):
      re.append([sum(x * y for x, y in zip(ar, br)) - sum(x * y for x, y in zip(ai, bi)) for br, bi in zip(columns_re, columns_im)])
      im.append([sum(x * y for x, y in zip(ar, bi)) + sum(x * y for x, y in zip(ai, br)) for br, bi in zip(columns_re, columns_im)])
    re, im, exp = _normalize(re, im, self.exp + other.exp)
    return UnitaryMatrix._from_rows(self.num_lines, re, im, exp)

  def dagger(self) -> UnitaryMatrix:
    re = [list(column) for column in zip(*self.re)]
    im = [[-value for value in column] for column in zip(*self.im)]
    return UnitaryMatrix._from_rows(self.num_lines, re, im, self.exp)

  def is_identity(self) -> bool:
    return self == UnitaryMatrix.identity(self.num_lines)

  # Multiplica todas as entradas por i: (re, im) -> (-im, re)
  def times_i(self) -> UnitaryMatrix:
    re = [[-value for value in row] for row in self.im]
    return UnitaryMatrix._from_rows(self.num_lines, re, [list(row) for row in self.re], self.exp)

  '''
  Forma canônica a menos de fase global. As únicas fases unitárias do anel
  são ±1 e ±i; gira-se por i^k até a primeira entrada não nula ter parte
  real positiva e parte imaginária não negativa.
  '''
  def canonical(self, convention: Convention = Convention.EXACT) -> UnitaryMatrix:
    if convention == Convention.EXACT:
      return self
    matrix = self
    for _ in range(4):
      first = next((matrix.entry(r, c) for r in range(self.dim) for c in range(self.dim) if not matrix.entry(r, c).is_zero()), None)
      if first is None or (first.re_num > 0 and first.im_num >= 0):
        return matrix
      matrix = matrix.times_i()
    return matrix

@dataclass(frozen=True)
class StateVector:
  num_lines: int
  re: tuple[int, ...]
  im: tuple[int, ...]
  exp: int = 0

  @classmethod
  def basis(cls, num_lines: int, index: int) -> StateVector:
    dim = 1 << num_lines
    return cls(num_lines, tuple(int(x == index) for x in range(dim)), (0,) * dim, 0)

  def amplitude(self, index: int) -> DyadicGaussian:
    return DyadicGaussian(self.re[index], self.im[index], self.exp)

  def then(self, gate: Gate) -> StateVector:
    re, im, exp = _apply_gate([[value] for value in self.re], [[value] for value in self.im], self.exp, gate, self.num_lines)
    return StateVector(self.num_lines, tuple(row[0] for row in re), tuple(row[0] for row in im), exp)

  def is_basis_state(self) -> bool:
    return sum(1 for a, b in zip(self.re, self.im) if a or b) == 1

  # |α|² somado sobre a base deve ser exatamente 1
  def is_normalized(self) -> bool:
    return sum(a * a + b * b for a, b in zip(self.re, self.im)) == 1 << (2 * self.exp)

def gate_unitary(gate: Gate, num_lines: int) -> UnitaryMatrix:
  return UnitaryMatrix.identity(num_lines).then(gate)

def circuit_unitary(circuit: Circuit) -> UnitaryMatrix:
  matrix = UnitaryMatrix.identity(circuit.num_lines)
  for gate in circuit.gates:
    matrix = matrix.then(gate)
  return matrix

def as_permutation(unitary: UnitaryMatrix, convention: Convention = Convention.EXACT) -> Permutation | None:
  matrix = unitary.canonical(convention)
  if matrix.exp != 0 or any(value for row in matrix.im for value in row):
    return None
  images = []
  for column in zip(*matrix.re):
    ones = [row for row, value in enumerate(column) if value == 1]
    if len(ones) != 1 or any(value not in (0, 1) for value in column):
      return None
    images.append(ones[0])
  return tuple(images)

# Tabela verdade direta para circuitos sem portas V
def classical_permutation(circuit: Circuit) -> Permutation:
  n = circuit.num_lines
  images = list(range(1 << n))
  for gate in circuit.gates:
    if gate.kind in (GateKind.CV, GateKind.CVDG):
      raise ValueError(gate)
    images = [apply_classical(gate, n, value) for value in images]
  return tuple(images)

def apply_classical(gate: Gate, num_lines: int, value: int) -> int:
  if gate.kind == GateKind.SWAP:
    a, b = (_line_bit(num_lines, line) for line in gate.targets)
    return value ^ a ^ b if bool(value & a) != bool(value & b) else value
  mask = sum(_line_bit(num_lines, control) for control in gate.controls)
  if value & mask == mask:
    return value ^ _line_bit(num_lines, gate.target)
  return value

def _gaussian_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
  return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]

def _factors(amplitudes: list[tuple[int, int]]) -> bool:
  size = len(amplitudes)
  if size <= 2:
    return True
  half = size // 2
  top, bottom = amplitudes[:half], amplitudes[half:]
  zero = (0, 0)
  pivot = next((k for k in range(half) if top[k] != zero or bottom[k] != zero), None)
  if pivot is None:
    return True
  # Linhas proporcionais: todos os menores 2x2 se anulam
  for k in range(half):
    if _gaussian_mul(top[pivot], bottom[k]) != _gaussian_mul(bottom[pivot], top[k]):
      return False
  rest = top if any(value != zero for value in top) else bottom
  return _factors(rest)

def is_separable(state: StateVector) -> bool:
  return _factors(list(zip(state.re, state.im)))

def simulate(circuit: Circuit, index: int) -> StateVector:
  state = StateVector.basis(circuit.num_lines, index)
  for gate in circuit.gates:
    state = state.then(gate)
  return state

def _entangles(circuit: Circuit, index: int, intermediate: bool) -> bool:
  state = StateVector.basis(circuit.num_lines, index)
  for gate in circuit.gates:
    state = state.then(gate)
    if intermediate and not state.is_basis_state() and not is_separable(state):
      return True
  return not state.is_basis_state() and not is_separable(state)

'''
Entradas da base computacional que produzem estado emaranhado. Com
intermediate=True o estado é examinado depois de cada porta; caso contrário
apenas a saída final.
'''
def entangled_inputs(circuit: Circuit, intermediate: bool = True) -> list[int]:
  return [index for index in range(1 << circuit.num_lines) if _entangles(circuit, index, intermediate)]

def is_entangled_circuit(circuit: Circuit, intermediate: bool = True) -> bool:
  return any(_entangles(circuit, index, intermediate) for index in range(1 << circuit.num_lines))

def equivalent(a: Circuit, b: Circuit, convention: Convention = Convention.EXACT) -> bool:
  if a.num_lines != b.num_lines:
    raise LineCountMismatchError(a.num_lines, b.num_lines)
  return circuit_unitary(a).canonical(convention) == circuit_unitary(b).canonical(convention)

def unitaries_commute(first: Gate, second: Gate, num_lines: int) -> bool:
  a = gate_unitary(first, num_lines)
  b = gate_unitary(second, num_lines)
  return a @ b == b @ a
