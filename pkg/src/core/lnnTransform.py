'''
Transformações para LNN sem inserir SWAP: decomposição de MCT em Toffolis,
Modelos 1-3 para portas de duas linhas, casos do T3 e substituição pelo
Toffoli LNN de 9 portas, T4 LNN de 26 portas. Também contém a linha de base
com SWAPs.
'''
import logging
from dataclasses import dataclass
from typing import Callable

from src.constants import errorMessages
from src.core.circuitCore import (
  TWO_LINE_KINDS, Circuit, Gate, cnot, cv, cvdg, expand_swaps, is_adjacent, mct, nnc,
  swap, swap_as_cnots, t3_layout, toffoli,
)
from src.utils.enumeration import DirectionTiebreak, GateKind, ModelKind, Orientation
from src.utils.exceptions import CircuitError, InsufficientWorkingLinesError

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class TransformOptions:
  # Ordem de preferência para CNOT; CV/CV† sempre usam o Modelo 2
  model_preference: tuple[ModelKind, ...] = (ModelKind.MODEL1, ModelKind.MODEL2, ModelKind.MODEL3)
  mct_working_lines: int = 1
  # Só vale no Caso 2 do T3 (alvo entre os controles); no Caso 1 a direção é fixa
  direction_tiebreak: DirectionTiebreak = DirectionTiebreak.SMALLER

  def __post_init__(self):
    object.__setattr__(self, "model_preference", tuple(self.model_preference))
    if self.mct_working_lines < 1:
      raise CircuitError(errorMessages.INSUFFICIENT_WORKING_LINES)
    if not self.model_preference:
      raise CircuitError(errorMessages.INVALID_MODEL)

_MODEL_KINDS = {
  ModelKind.MODEL1: frozenset({GateKind.CNOT}),
  ModelKind.MODEL2: frozenset({GateKind.CNOT, GateKind.CV, GateKind.CVDG}),
  ModelKind.MODEL3: frozenset({GateKind.CNOT}),
}

def _walk(start: int, stop: int) -> list[int]:
  step = 1 if stop >= start else -1
  return list(range(start, stop + step, step))

# Depois do par, dst guarda o valor antigo de src
def row_move(src: int, dst: int) -> tuple[Gate, Gate]:
  return cnot(dst, src), cnot(src, dst)

# Depois do par, src guarda o valor antigo de dst e dst guarda src ⊕ dst
def column_move(src: int, dst: int) -> tuple[Gate, Gate]:
  return cnot(src, dst), cnot(dst, src)

def _ladder(path: list[int], move: Callable[[int, int], tuple[Gate, Gate]]) -> list[Gate]:
  gates = []
  for src, dst in zip(path, path[1:]):
    gates.extend(move(src, dst))
  return gates

# Escadas só de CNOT: o inverso é a sequência invertida
def _conjugate(ladder: list[Gate], core: list[Gate]) -> list[Gate]:
  return ladder + core + ladder[::-1]

def _checked_nnc(gate: Gate, model: ModelKind) -> int:
  if gate.kind not in _MODEL_KINDS[model]:
    raise CircuitError(errorMessages.MODEL_NOT_APPLICABLE)
  k = nnc(gate)
  if k == 0:
    raise CircuitError(errorMessages.ALREADY_ADJACENT)
  return k

def model1_expand(gate: Gate, num_lines: int | None = None) -> Circuit:
  _checked_nnc(gate, ModelKind.MODEL1)
  path = _walk(gate.controls[0], gate.target)
  n = len(path) - 1

  def links(indexes):
    return [cnot(path[i], path[i + 1]) for i in indexes]

  gates = links(range(n)) + links(range(n - 2, -1, -1)) + links(range(1, n)) + links(range(n - 2, 0, -1))
  return Circuit(num_lines or gate.high + 1, gates)

def model2_expand(gate: Gate, num_lines: int | None = None) -> Circuit:
  _checked_nnc(gate, ModelKind.MODEL2)
  path = _walk(gate.controls[0], gate.target)
  inner = Gate(gate.kind, (path[-2],), (gate.target,))
  return Circuit(num_lines or gate.high + 1, _conjugate(_ladder(path[:-1], row_move), [inner]))

def model3_expand(gate: Gate, num_lines: int | None = None) -> Circuit:
  _checked_nnc(gate, ModelKind.MODEL3)
  control = gate.controls[0]
  path = _walk(gate.target, control)
  inner = cnot(control, path[-2])
  return Circuit(num_lines or gate.high + 1, _conjugate(_ladder(path[:-1], column_move), [inner]))

_EXPANDERS = {
  ModelKind.MODEL1: model1_expand,
  ModelKind.MODEL2: model2_expand,
  ModelKind.MODEL3: model3_expand,
}

def expand_two_line(gate: Gate, model: ModelKind, num_lines: int | None = None) -> Circuit:
  return _EXPANDERS[model](gate, num_lines)

def model_for(gate: Gate, opts: TransformOptions) -> ModelKind:
  for model in opts.model_preference:
    if gate.kind in _MODEL_KINDS[model]:
      return model
  return ModelKind.MODEL2

# Toffoli LNN com controles {0,1} e alvo 2
_LNN_TOFFOLI = (
  cv(1, 2), cnot(0, 1), cvdg(1, 2), cnot(1, 0), cnot(0, 1), cnot(1, 0), cv(1, 2), cnot(0, 1), cnot(1, 0),
)

def lnn_toffoli3(orientation: Orientation = Orientation.TARGET_BELOW, top: int = 0, num_lines: int | None = None, exchange_v: bool = False) -> Circuit:
  gates = _LNN_TOFFOLI
  if orientation == Orientation.TARGET_ABOVE:
    gates = tuple(gate.relabel(lambda line: 2 - line) for gate in gates)
  if exchange_v:
    gates = tuple(gate.inverse() for gate in gates)
  return Circuit(num_lines or top + 3, tuple(gate.relabel(lambda line: line + top) for gate in gates))

def is_end_adjacent(gate: Gate) -> bool:
  return is_adjacent(gate) and gate.target in (gate.low, gate.high)

def _lnn_toffoli_for(gate: Gate, num_lines: int) -> list[Gate]:
  orientation = Orientation.TARGET_BELOW if gate.target == gate.high else Orientation.TARGET_ABOVE
  return list(lnn_toffoli3(orientation, gate.low, num_lines).gates)

'''
Torna adjacentes controles e alvo de um Toffoli.
Caso 1 (controles do mesmo lado): o controle distante desce/sobe até o
controle próximo com row_move e o alvo se aproxima com column_move.
Caso 2 (alvo entre os controles): os controles se aproximam do alvo e um
column_move extra leva o alvo para uma das pontas.
'''
def t3_make_adjacent(gate: Gate, opts: TransformOptions | None = None, num_lines: int | None = None) -> Circuit:
  opts = opts or TransformOptions()
  layout = t3_layout(gate)
  c1, c2 = gate.controls
  t = gate.target

  if layout.case == 1:
    if t > c2:
      prefix = _ladder(_walk(c1, c2 - 1), row_move) + _ladder(_walk(t, c2 + 1), column_move)
      core = toffoli(c2 - 1, c2, c2 + 1)
    else:
      prefix = _ladder(_walk(c2, c1 + 1), row_move) + _ladder(_walk(t, c1 - 1), column_move)
      core = toffoli(c1, c1 + 1, c1 - 1)
  else:
    prefix = _ladder(_walk(c1, t - 1), row_move) + _ladder(_walk(c2, t + 1), row_move)
    middle = t - 1 if opts.direction_tiebreak == DirectionTiebreak.SMALLER else t + 1
    other = 2 * t - middle
    prefix += list(column_move(t, middle))
    core = toffoli(other, t, middle)

  return Circuit(num_lines or gate.high + 1, _conjugate(prefix, [core]))

def _by_distance(lines, gate_lines) -> list[int]:
  return sorted(lines, key=lambda line: (min(abs(line - other) for other in gate_lines), line))

# Cadeia com k-2 ancilas sujas: 4(k-2) Toffolis, ancilas restauradas
def _dirty_chain(controls: tuple[int, ...], target: int, ancillas: list[int]) -> list[Gate]:
  k = len(controls)

  def step(i):
    return mct((controls[i], ancillas[i - 2]), target if i == k - 1 else ancillas[i - 1])

  descending = [step(i) for i in range(k - 1, 1, -1)]
  middle = mct(controls[:2], ancillas[0])
  inner = descending[1:]
  return descending + [middle] + descending[::-1] + inner + [middle] + inner[::-1]

def _mct_network(controls: tuple[int, ...], target: int, pool: set[int]) -> list[Gate]:
  k = len(controls)
  if k <= 2:
    return [mct(controls, target)]
  gate_lines = controls + (target,)
  free = _by_distance(pool - set(gate_lines), gate_lines)
  if len(free) >= k - 2:
    return _dirty_chain(controls, target, free[:k - 2])

  # Uma linha de trabalho: divide os controles e usa as demais linhas como ancilas sujas
  work = free[0]
  split = (k + 1) // 2
  first = _mct_network(controls[:split], work, pool)
  second = _mct_network(tuple(sorted(controls[split:] + (work,))), target, pool)
  return first + second + first + second

def decompose_mct(gate: Gate, opts: TransformOptions | None = None, num_lines: int | None = None) -> Circuit:
  opts = opts or TransformOptions()
  num_lines = num_lines or gate.high + 1
  if gate.kind in (GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI):
    return Circuit(num_lines, (gate,))
  if gate.kind != GateKind.MCT:
    raise CircuitError(errorMessages.NOT_MCT)

  free = _by_distance(set(range(num_lines)) - set(gate.lines), gate.lines)
  if not free:
    raise InsufficientWorkingLinesError(errorMessages.INSUFFICIENT_WORKING_LINES)
  pool = set(gate.lines) | set(free[:opts.mct_working_lines])
  gates = _mct_network(gate.controls, gate.target, pool)
  logger.debug("MCT %s decomposta em %d portas", gate, len(gates))
  return Circuit(num_lines, gates)

def _decompose_all(circuit: Circuit, opts: TransformOptions) -> list[Gate]:
  gates = []
  for gate in expand_swaps(circuit).gates:
    if gate.kind == GateKind.MCT:
      gates.extend(decompose_mct(gate, opts, circuit.num_lines).gates)
    else:
      gates.append(gate)
  return gates

# Toffoli com controles {0,1} e alvo 2 que deixa as linhas 0 e 1 trocadas
_SWAPPED_TOFFOLI = (cv(1, 2), cnot(0, 1), cvdg(1, 2), cnot(1, 0), cnot(0, 1), cv(1, 2))

'''
T4 LNN de 26 portas: controles em top..top+2, linha de trabalho em top+3 e
alvo em top+4. A linha de trabalho é suja: qualquer valor serve e ela sai
restaurada. O alvo recebe V^(w) V†^(c⊕w) V^(c⊕w⊕ab) V†^(w⊕ab) = X^(c·ab).
'''
def lnn_t4(orientation: Orientation = Orientation.TARGET_BELOW, top: int = 0, num_lines: int | None = None) -> Circuit:
  phase = [cv(3, 4), cnot(2, 3), cvdg(3, 4)]
  move = list(column_move(3, 2))
  swapped = list(_SWAPPED_TOFFOLI)
  undo = [gate.inverse() for gate in reversed(swapped)]
  gates = phase + _conjugate(move, swapped) + phase + _conjugate(move, undo)
  if orientation == Orientation.TARGET_ABOVE:
    gates = [gate.relabel(lambda line: 4 - line) for gate in gates]
  return Circuit(num_lines or top + 5, tuple(gate.relabel(lambda line: line + top) for gate in gates))

# T4 com controles contíguos e uma linha livre entre eles e o alvo
def _shared_line_t4(gate: Gate) -> Orientation | None:
  if gate.kind != GateKind.MCT or len(gate.controls) != 3:
    return None
  first, _, last = gate.controls
  if last - first != 2:
    return None
  if gate.target == last + 2:
    return Orientation.TARGET_BELOW
  if gate.target == first - 2:
    return Orientation.TARGET_ABOVE
  return None

'''
Fluxo de síntese: (1) decompõe MCT (T4 com linha livre vizinha vira o bloco
de 26 portas), (2) normaliza Toffolis não adjacentes, (3) substitui cada
Toffoli pelo LNN de 9 portas e expande as portas de duas linhas restantes
com o modelo preferido.
'''
def synthesize_lnn(circuit: Circuit, opts: TransformOptions | None = None) -> Circuit:
  opts = opts or TransformOptions()
  n = circuit.num_lines

  adjacent = []
  for gate in expand_swaps(circuit).gates:
    orientation = _shared_line_t4(gate)
    if orientation is not None:
      adjacent.extend(lnn_t4(orientation, gate.low, n).gates)
      continue
    parts = decompose_mct(gate, opts, n).gates if gate.kind == GateKind.MCT else (gate,)
    for part in parts:
      if part.kind == GateKind.TOFFOLI and not is_end_adjacent(part):
        adjacent.extend(t3_make_adjacent(part, opts, n).gates)
      else:
        adjacent.append(part)

  gates = []
  for gate in adjacent:
    if gate.kind == GateKind.TOFFOLI:
      gates.extend(_lnn_toffoli_for(gate, n))
    elif gate.kind in TWO_LINE_KINDS and nnc(gate) > 0:
      gates.extend(expand_two_line(gate, model_for(gate, opts), n).gates)
    else:
      gates.append(gate)

  result = Circuit(n, gates)
  logger.debug("synthesize_lnn: %d portas -> %d primitivas", len(circuit), len(result))
  return result

# Toffoli em 5 portas NCV: V^(c1) V^(c2) V†^(c1⊕c2) = X^(c1·c2)
def ncv_toffoli(gate: Gate) -> list[Gate]:
  c1, c2 = gate.controls
  t = gate.target
  return [cv(c1, t), cv(c2, t), cnot(c1, c2), cvdg(c2, t), cnot(c1, c2)]

class _SwapRouter:
  '''
  Mantém o mapeamento linha lógica -> posição física enquanto insere SWAPs
  entre posições vizinhas. Cada SWAP sai como 3 CNOTs.
  '''

  def __init__(self, num_lines: int):
    self.position = list(range(num_lines))
    self.occupant = list(range(num_lines))
    self.gates: list[Gate] = []
    self.swaps = 0

  def exchange(self, low: int):
    a, b = self.occupant[low], self.occupant[low + 1]
    self.occupant[low], self.occupant[low + 1] = b, a
    self.position[a], self.position[b] = low + 1, low
    self.gates.extend(swap_as_cnots(swap(low, low + 1)))
    self.swaps += 1

  def physical(self, gate: Gate) -> Gate:
    return gate.relabel(lambda line: self.position[line])

  # Alterna: a linha de cima desce, depois a de baixo sobe
  def bring_together(self, a: int, b: int):
    upper = True
    while abs(self.position[a] - self.position[b]) > 1:
      low, high = sorted((self.position[a], self.position[b]))
      self.exchange(low if upper else high - 1)
      upper = not upper

  def restore(self):
    changed = True
    while changed:
      changed = False
      for low in range(len(self.occupant) - 2, -1, -1):
        if self.occupant[low] > self.occupant[low + 1]:
          self.exchange(low)
          changed = True

'''
Linha de base com SWAPs: antes de cada porta de duas linhas as linhas se
aproximam por SWAPs vizinhos e o mapeamento fica como está; no fim a ordem
original é restaurada. Toffolis que já ficaram adjacentes com alvo na ponta
usam o LNN de 9 portas; os demais viram 5 portas NCV.
'''
def swap_insert_baseline(circuit: Circuit) -> Circuit:
  n = circuit.num_lines
  router = _SwapRouter(n)
  for gate in _decompose_all(circuit, TransformOptions()):
    if gate.kind == GateKind.TOFFOLI:
      placed = router.physical(gate)
      if is_end_adjacent(placed):
        router.gates.extend(_lnn_toffoli_for(placed, n))
        continue
    for part in ncv_toffoli(gate) if gate.kind == GateKind.TOFFOLI else (gate,):
      if part.kind in TWO_LINE_KINDS:
        router.bring_together(*part.lines)
      router.gates.append(router.physical(part))
  router.restore()
  logger.debug("swap_insert_baseline: %d SWAPs, %d portas", router.swaps, len(router.gates))
  return Circuit(n, router.gates)
