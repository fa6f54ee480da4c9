'''
Checkpoint binário da busca em largura: cabeçalho com magic, versão, tipo de
busca, convenção e profundidade concluída; depois histograma, conjunto de
visitados, fronteira e testemunhas.
'''
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO

from src.constants import errorMessages
from src.utils.enumeration import Convention, SearchKind
from src.utils.exceptions import CheckpointError

MAGIC = b"LNNCKPT\x00"
VERSION = 1

_KIND_CODES = {SearchKind.LNN: 0, SearchKind.MCT: 1}
_CONVENTION_CODES = {Convention.EXACT: 0, Convention.PHASE: 1}

@dataclass
class SearchState:
  kind: SearchKind
  convention: Convention
  depth: int
  histogram: dict[int, int] = field(default_factory=dict)
  visited: set[bytes] = field(default_factory=set)
  frontier: list[tuple[bytes, tuple[int, ...]]] = field(default_factory=list)
  witnesses: dict[tuple[int, ...], tuple[int, ...]] = field(default_factory=dict)

def _write_blob(stream: BinaryIO, blob: bytes):
  stream.write(struct.pack("<H", len(blob)))
  stream.write(blob)

def _read_exact(stream: BinaryIO, size: int) -> bytes:
  data = stream.read(size)
  if len(data) != size:
    raise CheckpointError(errorMessages.CHECKPOINT_INVALID)
  return data

def _read_blob(stream: BinaryIO) -> bytes:
  (size,) = struct.unpack("<H", _read_exact(stream, 2))
  return _read_exact(stream, size)

def write_checkpoint(path: str | Path, state: SearchState):
  path = Path(path)
  partial = path.with_suffix(path.suffix + ".tmp")
  with open(partial, "wb") as stream:
    stream.write(MAGIC)
    stream.write(struct.pack("<HBBI", VERSION, _KIND_CODES[state.kind], _CONVENTION_CODES[state.convention], state.depth))
    stream.write(struct.pack("<I", len(state.histogram)))
    for size, count in sorted(state.histogram.items()):
      stream.write(struct.pack("<IQ", size, count))
    stream.write(struct.pack("<Q", len(state.visited)))
    for key in state.visited:
      _write_blob(stream, key)
    stream.write(struct.pack("<Q", len(state.frontier)))
    for key, sequence in state.frontier:
      _write_blob(stream, key)
      _write_blob(stream, bytes(sequence))
    stream.write(struct.pack("<Q", len(state.witnesses)))
    for function, sequence in state.witnesses.items():
      _write_blob(stream, bytes(function))
      _write_blob(stream, bytes(sequence))
  partial.replace(path)

def read_checkpoint(path: str | Path) -> SearchState:
  with open(path, "rb") as stream:
    if _read_exact(stream, len(MAGIC)) != MAGIC:
      raise CheckpointError(errorMessages.CHECKPOINT_INVALID)
    version, kind, convention, depth = struct.unpack("<HBBI", _read_exact(stream, 8))
    if version != VERSION:
      raise CheckpointError(errorMessages.CHECKPOINT_INVALID)
    kinds = {code: value for value, code in _KIND_CODES.items()}
    conventions = {code: value for value, code in _CONVENTION_CODES.items()}
    if kind not in kinds or convention not in conventions:
      raise CheckpointError(errorMessages.CHECKPOINT_INVALID)
    state = SearchState(kinds[kind], conventions[convention], depth)

    (entries,) = struct.unpack("<I", _read_exact(stream, 4))
    for _ in range(entries):
      size, count = struct.unpack("<IQ", _read_exact(stream, 12))
      state.histogram[size] = count
    (entries,) = struct.unpack("<Q", _read_exact(stream, 8))
    state.visited = {_read_blob(stream) for _ in range(entries)}
    (entries,) = struct.unpack("<Q", _read_exact(stream, 8))
    state.frontier = [(_read_blob(stream), tuple(_read_blob(stream))) for _ in range(entries)]
    (entries,) = struct.unpack("<Q", _read_exact(stream, 8))
    for _ in range(entries):
      function = tuple(_read_blob(stream))
      state.witnesses[function] = tuple(_read_blob(stream))
  return state
