'''
Busca exaustiva em largura dos circuitos mínimos de 3 linhas.

Busca LNN: o estado é o unitário (numeradores inteiros 8x8 com expoente
comum), expandido pela direita com as 15 portas adjacentes. A chave de
visitados é a serialização exata do estado, então não há colisões. Busca MCT:
o estado é a permutação, expandida com NOT, CNOT e Toffoli em qualquer
posição.
'''
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from src.constants import errorMessages
from src.core import checkpoint
from src.core.circuitCore import Circuit, Gate, cnot, mct, not_gate
from src.core.semantics import Permutation, apply_classical
from src.core.templates import adjacent_library
from src.utils.enumeration import Convention, GateKind, SearchKind
from src.utils.exceptions import CheckpointError, CircuitError

logger = logging.getLogger(__name__)

NUM_LINES = 3
DIM = 1 << NUM_LINES
TOTAL_FUNCTIONS = factorial(DIM)

# Histograma de referência para as profundidades 0..8 (igualdade exata)
LNN_HISTOGRAM_PREFIX = (1, 7, 29, 82, 181, 334, 374, 334, 337)

# Custo aproximado por entrada guardada em memória (objeto bytes, slot do set, tupla da fronteira)
_VISITED_OVERHEAD = 90
_FRONTIER_OVERHEAD = 120
_BUDGET_CHECK_EVERY = 20000

def lnn_gate_library(num_lines: int = NUM_LINES) -> list[Gate]:
  if num_lines != NUM_LINES:
    raise CircuitError(errorMessages.INVALID_LINE_COUNT)
  return adjacent_library(num_lines)

def mct_gate_library(num_lines: int = NUM_LINES) -> list[Gate]:
  if num_lines != NUM_LINES:
    raise CircuitError(errorMessages.INVALID_LINE_COUNT)
  lines = range(num_lines)
  gates = [not_gate(line) for line in lines]
  gates += [cnot(control, target) for control in lines for target in lines if control != target]
  gates += [mct([line for line in lines if line != target], target) for target in lines]
  return gates

def function_key(function: Permutation) -> str:
  return ",".join(str(image) for image in function)

def parse_function_key(key: str) -> Permutation:
  try:
    function = tuple(int(part) for part in key.split(","))
  except ValueError as error:
    raise CircuitError(errorMessages.INVALID_FUNCTION) from error
  if sorted(function) != list(range(len(function))) or len(function) & (len(function) - 1):
    raise CircuitError(errorMessages.INVALID_FUNCTION)
  return function

@dataclass
class CostHistogram:
  counts: dict[int, int] = field(default_factory=dict)
  complete: bool = False
  completed_depth: int = 0

  @property
  def total(self) -> int:
    return sum(self.counts.values())

  # Média ponderada pelo número de funções; só faz sentido com a busca fechada
  def average(self) -> float | None:
    if not self.complete or not self.total:
      return None
    return sum(size * count for size, count in self.counts.items()) / self.total

  def prefix(self, depth: int) -> list[int]:
    return [self.counts.get(size, 0) for size in range(depth + 1)]

  def to_dict(self) -> dict:
    return {
      "counts": {str(size): count for size, count in sorted(self.counts.items())},
      "total": self.total,
      "complete": self.complete,
      "completed_depth": self.completed_depth,
    }

@dataclass
class SearchResult:
  kind: SearchKind
  convention: Convention
  max_depth: int | None
  histogram: CostHistogram
  library: list[Gate]
  witnesses: dict[Permutation, tuple[int, ...]] = field(default_factory=dict)
  started_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
  finished_at: datetime | None = None

  def witness(self, function: Permutation) -> Circuit | None:
    sequence = self.witnesses.get(tuple(function))
    if sequence is None:
      return None
    return Circuit(NUM_LINES, [self.library[index] for index in sequence])

  def cost(self, function: Permutation) -> int | None:
    sequence = self.witnesses.get(tuple(function))
    return None if sequence is None else len(sequence)

  def to_dict(self) -> dict:
    return {
      "kind": self.kind.value,
      "convention": self.convention.value,
      "max_depth": self.max_depth,
      "histogram": self.histogram.to_dict(),
      "started_at": self.started_at.isoformat(),
      "finished_at": self.finished_at.isoformat() if self.finished_at else None,
    }

'''
Representação de estado da busca LNN: matrizes int64 re/im (linha = saída,
coluna = entrada) e expoente comum, sempre normalizado.
'''
@dataclass(frozen=True)
class _GateAction:
  source: np.ndarray | None
  rows0: np.ndarray | None = None
  rows1: np.ndarray | None = None
  dagger: bool = False

def _bit(line: int) -> int:
  return 1 << (NUM_LINES - 1 - line)

def _action(gate: Gate) -> _GateAction:
  if gate.kind in (GateKind.CV, GateKind.CVDG):
    control, target = _bit(gate.controls[0]), _bit(gate.target)
    rows0 = np.array([x for x in range(DIM) if x & control and not x & target])
    return _GateAction(None, rows0, rows0 | target, gate.kind == GateKind.CVDG)
  # Portas da família X são involuções: a linha y recebe a antiga linha g(y)
  return _GateAction(np.array([apply_classical(gate, NUM_LINES, y) for y in range(DIM)]))

@lru_cache(maxsize=1)
def _lnn_actions() -> tuple[_GateAction, ...]:
  return tuple(_action(gate) for gate in lnn_gate_library())

def _normalize(re: np.ndarray, im: np.ndarray, exp: int) -> tuple[np.ndarray, np.ndarray, int]:
  while exp > 0 and not ((re | im) & 1).any():
    re, im, exp = re >> 1, im >> 1, exp - 1
  return re, im, exp

def _apply(re: np.ndarray, im: np.ndarray, exp: int, action: _GateAction) -> tuple[np.ndarray, np.ndarray, int]:
  if action.source is not None:
    return re[action.source], im[action.source], exp
  r0, i0 = re[action.rows0], im[action.rows0]
  r1, i1 = re[action.rows1], im[action.rows1]
  new_re, new_im = re << 1, im << 1
  # (1±i)/2: (1+i)(a+bi) = (a-b) + (a+b)i, (1-i)(a+bi) = (a+b) + (b-a)i
  plus_re, plus_im = r0 - i0, r0 + i0
  minus_re, minus_im = r0 + i0, i0 - r0
  plus1_re, plus1_im = r1 - i1, r1 + i1
  minus1_re, minus1_im = r1 + i1, i1 - r1
  if action.dagger:
    plus_re, plus_im, minus_re, minus_im = minus_re, minus_im, plus_re, plus_im
    plus1_re, plus1_im, minus1_re, minus1_im = minus1_re, minus1_im, plus1_re, plus1_im
  new_re[action.rows0] = plus_re + minus1_re
  new_im[action.rows0] = plus_im + minus1_im
  new_re[action.rows1] = minus_re + plus1_re
  new_im[action.rows1] = minus_im + plus1_im
  return _normalize(new_re, new_im, exp + 1)

def _phase_canonical(re: np.ndarray, im: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
  first = np.flatnonzero((re != 0) | (im != 0))[0]
  for _ in range(4):
    a, b = re.flat[first], im.flat[first]
    if a > 0 and b >= 0:
      break
    re, im = -im, re
  return re, im

def _dtype(exp: int):
  # |numerador| <= 2^exp para entradas de módulo <= 1
  if exp < 15:
    return np.int16
  if exp < 31:
    return np.int32
  return np.int64

def encode_state(re: np.ndarray, im: np.ndarray, exp: int) -> bytes:
  return bytes([exp]) + np.stack([re, im]).astype(_dtype(exp)).tobytes()

def decode_state(key: bytes) -> tuple[np.ndarray, np.ndarray, int]:
  exp = key[0]
  data = np.frombuffer(key[1:], dtype=_dtype(exp)).reshape(2, DIM, DIM).astype(np.int64)
  return data[0].copy(), data[1].copy(), exp

def _as_permutation(re: np.ndarray, im: np.ndarray, exp: int) -> Permutation | None:
  if exp or im.any() or not ((re == 0) | (re == 1)).all() or not (re.sum(axis=0) == 1).all():
    return None
  return tuple(int(row) for row in re.argmax(axis=0))

def _identity_state() -> tuple[np.ndarray, np.ndarray, int]:
  return np.eye(DIM, dtype=np.int64), np.zeros((DIM, DIM), dtype=np.int64), 0

def _children(entries: Iterable[tuple[bytes, tuple[int, ...]]], convention: Convention) -> Iterator[tuple[bytes, tuple[int, ...], Permutation | None]]:
  actions = _lnn_actions()
  for key, sequence in entries:
    re, im, exp = decode_state(key)
    for index, action in enumerate(actions):
      child_re, child_im, child_exp = _apply(re, im, exp, action)
      if convention == Convention.PHASE:
        child_re, child_im = _phase_canonical(child_re, child_im)
      yield encode_state(child_re, child_im, child_exp), sequence + (index,), _as_permutation(child_re, child_im, child_exp)

def _expand_chunk(args: tuple[list[tuple[bytes, tuple[int, ...]]], str]) -> list[tuple[bytes, tuple[int, ...], Permutation | None]]:
  entries, convention = args
  return list(_children(entries, Convention(convention)))

def _chunks(items: list, count: int) -> list[list]:
  size = max(1, -(-len(items) // count))
  return [items[start:start + size] for start in range(0, len(items), size)]

def _estimated_bytes(state: checkpoint.SearchState) -> int:
  key_size = len(next(iter(state.visited))) if state.visited else 0
  return len(state.visited) * (key_size + _VISITED_OVERHEAD) + len(state.frontier) * (key_size + _FRONTIER_OVERHEAD + state.depth)

def _initial_state(convention: Convention) -> checkpoint.SearchState:
  re, im, exp = _identity_state()
  key = encode_state(re, im, exp)
  identity = tuple(range(DIM))
  return checkpoint.SearchState(SearchKind.LNN, convention, 0, {0: 1}, {key}, [(key, ())], {identity: ()})

def _resumed_state(path: str | Path, convention: Convention) -> checkpoint.SearchState:
  state = checkpoint.read_checkpoint(path)
  if state.kind != SearchKind.LNN or state.convention != convention:
    raise CheckpointError(errorMessages.CHECKPOINT_MISMATCH)
  logger.info("Retomando busca LNN do checkpoint %s na profundidade %d", path, state.depth)
  return state

'''
Busca em largura LNN. A fronteira é processada em ordem lexicográfica de
sequência, então a testemunha de cada função é a menor sequência mínima.
Se o orçamento de memória estourar no meio de uma profundidade, o resultado
volta parcial com a última profundidade completa.
'''
def enumerate_optimal_lnn(
  max_depth: int,
  convention: Convention = Convention.EXACT,
  mem_budget_mb: int = 4096,
  workers: int = 1,
  checkpoint_path: str | Path | None = None,
  resume_path: str | Path | None = None,
) -> SearchResult:
  if max_depth < 0:
    raise CircuitError(errorMessages.INVALID_DEPTH)
  library = lnn_gate_library()
  state = _resumed_state(resume_path, convention) if resume_path else _initial_state(convention)
  result = SearchResult(SearchKind.LNN, convention, max_depth, CostHistogram(), library)
  budget = mem_budget_mb * 1024 * 1024
  exhausted = False

  executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
  try:
    while state.depth < max_depth and state.frontier and len(state.witnesses) < TOTAL_FUNCTIONS:
      depth = state.depth + 1
      if executor is not None:
        chunks = _chunks(state.frontier, workers * 4)
        children = (child for batch in executor.map(_expand_chunk, [(chunk, convention.value) for chunk in chunks]) for child in batch)
      else:
        children = _children(state.frontier, convention)

      frontier, found = [], {}
      for position, (key, sequence, function) in enumerate(children):
        if key in state.visited:
          continue
        state.visited.add(key)
        frontier.append((key, sequence))
        if function is not None and function not in state.witnesses and function not in found:
          found[function] = sequence
        if position % _BUDGET_CHECK_EVERY == 0 and _estimated_bytes(state) + len(frontier) * _FRONTIER_OVERHEAD > budget:
          exhausted = True
          break
      if exhausted:
        logger.warning("Orçamento de memória de %d MB excedido na profundidade %d", mem_budget_mb, depth)
        break

      state.frontier = frontier
      state.witnesses.update(found)
      state.histogram[depth] = len(found)
      state.depth = depth
      logger.info("Profundidade %d: fronteira %d, %d permutações novas, %d no total", depth, len(frontier), len(found), len(state.witnesses))
      if checkpoint_path:
        checkpoint.write_checkpoint(checkpoint_path, state)
  finally:
    if executor is not None:
      executor.shutdown()

  result.witnesses = dict(state.witnesses)
  result.histogram = CostHistogram(
    {size: count for size, count in state.histogram.items() if count},
    complete=len(state.witnesses) == TOTAL_FUNCTIONS or (not state.frontier and not exhausted),
    completed_depth=state.depth,
  )
  result.finished_at = datetime.now(timezone.utc)
  return result

# Busca sobre permutações com a biblioteca MCT; termina em segundos
def enumerate_optimal_mct(num_lines: int = NUM_LINES) -> SearchResult:
  library = mct_gate_library(num_lines)
  tables = [tuple(apply_classical(gate, num_lines, value) for value in range(DIM)) for gate in library]
  identity = tuple(range(DIM))
  result = SearchResult(SearchKind.MCT, Convention.EXACT, None, CostHistogram({0: 1}), library, {identity: ()})

  frontier = [identity]
  depth = 0
  while frontier:
    depth += 1
    following = []
    for function in frontier:
      sequence = result.witnesses[function]
      for index, table in enumerate(tables):
        image = tuple(table[value] for value in function)
        if image not in result.witnesses:
          result.witnesses[image] = sequence + (index,)
          following.append(image)
    if following:
      result.histogram.counts[depth] = len(following)
      logger.info("MCT profundidade %d: %d funções novas", depth, len(following))
    frontier = following

  result.histogram.complete = len(result.witnesses) == TOTAL_FUNCTIONS
  result.histogram.completed_depth = max(result.histogram.counts)
  result.finished_at = datetime.now(timezone.utc)
  return result

def optimal_lnn_cost(function: Permutation, result: SearchResult) -> int | None:
  return result.cost(function)

