'''
Templates LNN: circuitos identidade usados para reescrita. Se m > d/2 portas
de um template de tamanho d casam com o circuito, elas são trocadas pelo
inverso das d - m portas restantes.
'''
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator

from src.constants import errorMessages
from src.core.circuitCore import Circuit, Gate, cnot, cv, cvdg, inverse, is_lnn, not_gate, reflect, x_power
from src.core.realFormat import parse_template_base
from src.core.semantics import UnitaryMatrix, circuit_unitary, is_entangled_circuit
from src.utils.enumeration import GateKind, GateLevel
from src.utils.exceptions import CircuitError, VerificationError

logger = logging.getLogger(__name__)

BUILTIN_TEMPLATES_PATH = Path(__file__).resolve().parents[2] / "data" / "templates.real"

@dataclass(frozen=True)
class Template:
  circuit: Circuit
  name: str = ""

  @property
  def size(self) -> int:
    return len(self.circuit)

  @property
  def width(self) -> int:
    return self.circuit.num_lines

def make_template(circuit: Circuit, name: str = "") -> Template:
  if not is_lnn(circuit):
    raise CircuitError(errorMessages.TEMPLATE_NOT_LNN)
  if not circuit_unitary(circuit).is_identity():
    raise CircuitError(errorMessages.TEMPLATE_NOT_IDENTITY)
  return Template(circuit, name or "d{}".format(len(circuit)))

@dataclass(frozen=True)
class MatchResult:
  template: str
  indices: tuple[int, ...]
  reversed: bool
  reflected: bool
  offset: int
  rotation: int
  replacement: tuple[Gate, ...]

  @property
  def matched(self) -> int:
    return len(self.indices)

@dataclass(frozen=True)
class TraceStep:
  rule: str
  size_before: int
  size_after: int

@dataclass
class RewriteTrace:
  steps: list[TraceStep] = field(default_factory=list)

  def record(self, rule: str, size_before: int, size_after: int):
    self.steps.append(TraceStep(rule, size_before, size_after))

  def __len__(self) -> int:
    return len(self.steps)

'''
Regra sintática de comutação: duas portas da família X comutam quando o alvo
de uma não é controle da outra. Alvos iguais comutam (potências de X no
mesmo alvo). SWAP só comuta com portas em linhas disjuntas.
'''
def commutes(first: Gate, second: Gate) -> bool:
  if first.kind == GateKind.SWAP or second.kind == GateKind.SWAP:
    return first == second or not set(first.lines) & set(second.lines)
  return first.target not in second.controls and second.target not in first.controls

def _partners(first: Gate, second: Gate) -> bool:
  if first.kind == GateKind.SWAP or second.kind == GateKind.SWAP:
    return first == second
  return first.controls == second.controls and first.target == second.target

def _merged(first: Gate, second: Gate) -> Gate | None:
  if first.kind == GateKind.SWAP:
    return None
  return x_power(first.controls, first.target, first.v_exponent + second.v_exponent)

def _cancel_merge_rewrites(gates: tuple[Gate, ...]) -> Iterator[tuple[str, list[Gate]]]:
  for i, gate in enumerate(gates):
    for j in range(i + 1, len(gates)):
      other = gates[j]
      if _partners(gate, other):
        merged = _merged(gate, other)
        rule = "delete" if merged is None else "merge"
        yield rule, list(gates[:i]) + list(gates[i + 1:j]) + ([merged] if merged else []) + list(gates[j + 1:])
        break
      if not commutes(gate, other):
        break

def gate_cancel_merge(circuit: Circuit, trace: RewriteTrace | None = None) -> Circuit:
  if circuit.level != GateLevel.PRIMITIVE:
    raise CircuitError(errorMessages.NOT_PRIMITIVE_LEVEL)
  current = circuit
  while True:
    rewrite = next(_cancel_merge_rewrites(current.gates), None)
    if rewrite is None:
      return current
    rule, gates = rewrite
    if trace is not None:
      trace.record(rule, len(current), len(gates))
    current = current.with_gates(gates)

def _gate_key(gate: Gate) -> tuple:
  return gate.kind.value, gate.controls, gate.targets

def _rotations(gates: tuple[Gate, ...]) -> Iterator[tuple[int, tuple[Gate, ...]]]:
  for shift in range(len(gates)):
    yield shift, gates[shift:] + gates[:shift]

# Chave canônica a menos de rotação, inversão e reflexão do eixo de linhas
def canonical_key(circuit: Circuit) -> tuple:
  low = min((gate.low for gate in circuit.gates), default=0)
  high = max((gate.high for gate in circuit.gates), default=0)
  packed = circuit.relabel(lambda line: line - low, high - low + 1)
  keys = []
  for oriented in (packed, reflect(packed)):
    for directed in (oriented, inverse(oriented)):
      for _, rotated in _rotations(directed.gates):
        keys.append(tuple(_gate_key(gate) for gate in rotated))
  return min(keys) if keys else ()

@dataclass(frozen=True)
class _Variant:
  gates: tuple[Gate, ...]
  reversed: bool
  reflected: bool
  offset: int
  rotation: int

'''
Todas as formas de um template sobre um circuito de num_lines linhas:
translações e reflexões do eixo de linhas (preservam adjacência), sentido
direto ou inverso e rotações. Indexadas pela primeira porta.
'''
@lru_cache(maxsize=256)
def _variant_index(template: Template, num_lines: int) -> dict[Gate, list[_Variant]]:
  index: dict[Gate, list[_Variant]] = {}
  seen = set()
  width = template.width
  for offset, reflected, reversed_ in product(range(num_lines - width + 1), (False, True), (False, True)):
    placed = reflect(template.circuit) if reflected else template.circuit
    placed = placed.relabel(lambda line: line + offset, num_lines)
    if reversed_:
      placed = inverse(placed)
    for rotation, gates in _rotations(placed.gates):
      if gates in seen:
        continue
      seen.add(gates)
      index.setdefault(gates[0], []).append(_Variant(gates, reversed_, reflected, offset, rotation))
  return index

def _match_at(gates: tuple[Gate, ...], start: int, variant: _Variant) -> tuple[list[int], int]:
  pattern = variant.gates
  matched = [start]
  skipped: list[Gate] = []
  j = 1
  position = start + 1
  while j < len(pattern) and position < len(gates):
    gate = gates[position]
    if gate == pattern[j] and all(commutes(gate, other) for other in skipped):
      matched.append(position)
      j += 1
    else:
      if gate == pattern[j] or not commutes(gate, pattern[j]):
        break
      skipped.append(gate)
    position += 1
  return matched, j

def _apply_match(gates: tuple[Gate, ...], matched: list[int], replacement: tuple[Gate, ...]) -> list[Gate]:
  start, last = matched[0], matched[-1]
  chosen = set(matched)
  moved = [gates[q] for q in range(start, last + 1) if q not in chosen]
  return list(gates[:start]) + list(replacement) + moved + list(gates[last + 1:])

def find_matches(circuit: Circuit, template: Template) -> Iterator[MatchResult]:
  if template.width > circuit.num_lines:
    return
  index = _variant_index(template, circuit.num_lines)
  gates = circuit.gates
  for start, gate in enumerate(gates):
    best = None
    for variant in index.get(gate, ()):
      matched, m = _match_at(gates, start, variant)
      if 2 * m > template.size and (best is None or m > best[1]):
        best = (matched, m, variant)
    if best is None:
      continue
    matched, m, variant = best
    replacement = tuple(gate.inverse() for gate in reversed(variant.gates[m:]))
    yield MatchResult(template.name, tuple(matched), variant.reversed, variant.reflected, variant.offset, variant.rotation, replacement)

def _template_rewrites(circuit: Circuit, base: list[Template]) -> Iterator[tuple[str, list[Gate]]]:
  for template in sorted(base, key=lambda item: -item.size):
    for match in find_matches(circuit, template):
      yield "template {}".format(template.name), _apply_match(circuit.gates, list(match.indices), match.replacement)

def _rewrite_loop(circuit: Circuit, sources, trace: RewriteTrace | None, verify: bool, keep_separable: bool) -> Circuit:
  reference = circuit_unitary(circuit) if verify else None
  guard = keep_separable and not is_entangled_circuit(circuit)
  current = circuit
  while True:
    for rule, gates in sources(current):
      candidate = current.with_gates(gates)
      if reference is not None and circuit_unitary(candidate) != reference:
        logger.error("Reescrita %s alterou o unitário de %s", rule, current)
        raise VerificationError(errorMessages.VERIFICATION_FAILED)
      if guard and is_entangled_circuit(candidate):
        continue
      logger.debug("%s: %d -> %d portas", rule, len(current), len(candidate))
      if trace is not None:
        trace.record(rule, len(current), len(candidate))
      current = candidate
      break
    else:
      return current

def match_and_reduce(circuit: Circuit, base: list[Template] | None = None, verify: bool = True, keep_separable: bool = True) -> tuple[Circuit, RewriteTrace]:
  if not is_lnn(circuit):
    raise CircuitError(errorMessages.NOT_LNN)
  base = builtin_templates() if base is None else base
  trace = RewriteTrace()
  result = _rewrite_loop(circuit, lambda current: _template_rewrites(current, base), trace, verify, keep_separable)
  return result, trace

def optimize(circuit: Circuit, base: list[Template] | None = None, trace: RewriteTrace | None = None, verify: bool = True, keep_separable: bool = True) -> Circuit:
  if not is_lnn(circuit):
    raise CircuitError(errorMessages.NOT_LNN)
  if circuit.level != GateLevel.PRIMITIVE:
    raise CircuitError(errorMessages.NOT_PRIMITIVE_LEVEL)
  base = builtin_templates() if base is None else base

  def sources(current):
    yield from _cancel_merge_rewrites(current.gates)
    yield from _template_rewrites(current, base)

  result = _rewrite_loop(circuit, sources, trace, verify, keep_separable)
  logger.debug("optimize: %d -> %d portas", len(circuit), len(result))
  return result

def load_template_base(text: str, prefix: str = "t") -> list[Template]:
  templates = []
  for position, circuit in enumerate(parse_template_base(text)):
    templates.append(make_template(circuit, "{}{}-d{}".format(prefix, position, len(circuit))))
  return templates

@lru_cache(maxsize=1)
def _builtin() -> tuple[Template, ...]:
  return tuple(load_template_base(BUILTIN_TEMPLATES_PATH.read_text(), prefix="b"))

def builtin_templates() -> list[Template]:
  return list(_builtin())

def merge_bases(*bases: Iterable[Template]) -> list[Template]:
  merged, keys = [], set()
  for base in bases:
    for template in base:
      key = canonical_key(template.circuit)
      if key not in keys:
        keys.add(key)
        merged.append(template)
  return merged

# Base embutida mais, opcionalmente, os templates de um arquivo
def load_templates(path: str | Path | None = None) -> list[Template]:
  base = builtin_templates()
  if path:
    base = merge_bases(base, load_template_base(Path(path).read_text(), prefix="u"))
  return base

def adjacent_library(num_lines: int) -> list[Gate]:
  gates = [not_gate(line) for line in range(num_lines)]
  pairs = [(line, line + 1) for line in range(num_lines - 1)]
  pairs = [pair for a, b in pairs for pair in ((a, b), (b, a))]
  for factory in (cnot, cv, cvdg):
    gates.extend(factory(control, target) for control, target in pairs)
  return gates

def is_irreducible(template: Template, smaller: list[Template]) -> bool:
  if template.size <= 2:
    return True
  window = template.size // 2 + 1
  for _, rotated in _rotations(template.circuit.gates):
    piece = Circuit(template.width, rotated[:window])
    reduced, _ = match_and_reduce(piece, smaller, verify=False, keep_separable=False)
    if len(reduced) == window:
      return True
  return False

'''
Descoberta de templates: enumera sequências de até ceil(max_size/2) portas
adjacentes agrupadas pelo unitário; para s1, s2 com o mesmo unitário,
s1 + inverso(s2) é uma identidade. Sequências com par cancelável adjacente
são podadas.
'''
def find_templates(max_size: int, line_count: int) -> list[Template]:
  library = adjacent_library(line_count)
  half = (max_size + 1) // 2
  groups: dict[UnitaryMatrix, list[tuple[Gate, ...]]] = {}
  frontier = [((), UnitaryMatrix.identity(line_count))]
  for _ in range(half):
    following = []
    for sequence, matrix in frontier:
      for gate in library:
        if sequence and sequence[-1] == gate.inverse():
          continue
        extended = (sequence + (gate,), matrix.then(gate))
        following.append(extended)
        groups.setdefault(extended[1], []).append(extended[0])
    frontier = following

  candidates: dict[tuple, Circuit] = {}
  for sequences in groups.values():
    for first, second in product(sequences, repeat=2):
      size = len(first) + len(second)
      if size > max_size or len(first) - len(second) not in (0, 1):
        continue
      if first == second and len(first) != 1:
        continue
      if size > 2 and (first[-1] == second[-1] or first[0] == second[0]):
        continue
      gates = first + tuple(gate.inverse() for gate in reversed(second))
      circuit = Circuit(line_count, gates)
      key = canonical_key(circuit)
      if key not in candidates:
        low = min(gate.low for gate in gates)
        candidates[key] = circuit.relabel(lambda line: line - low, max(gate.high for gate in gates) - low + 1)

  accepted: list[Template] = []
  for key in sorted(candidates, key=lambda item: (len(item), item)):
    template = make_template(candidates[key], "f{}-d{}".format(len(accepted), len(candidates[key])))
    if is_irreducible(template, [other for other in accepted if other.size < template.size]):
      accepted.append(template)
  logger.info("find_templates(%d, %d): %d templates", max_size, line_count, len(accepted))
  return accepted
