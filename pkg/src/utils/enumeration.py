from enum import Enum

class GateKind(Enum):
  NOT = "NOT"
  CNOT = "CNOT"
  TOFFOLI = "TOFFOLI"
  MCT = "MCT"
  CV = "CV"
  CVDG = "CVDG"
  SWAP = "SWAP"

  @classmethod
  def has_value(cls, value):
    return value in cls._value2member_map_

class GateLevel(Enum):
  MCT = "MCT"
  PRIMITIVE = "PRIMITIVE"

class ModelKind(Enum):
  MODEL1 = "MODEL1"
  MODEL2 = "MODEL2"
  MODEL3 = "MODEL3"

  @classmethod
  def has_value(cls, value):
    return value in cls._value2member_map_

# Convenção de igualdade: exata ou a menos de fase global
class Convention(Enum):
  EXACT = "exact"
  PHASE = "phase"

  @classmethod
  def has_value(cls, value):
    return value in cls._value2member_map_

class DirectionTiebreak(Enum):
  SMALLER = "toward-smaller-line"
  LARGER = "toward-larger-line"

# Posição do alvo do Toffoli LNN em relação aos controles
class Orientation(Enum):
  TARGET_BELOW = "TARGET_BELOW"
  TARGET_ABOVE = "TARGET_ABOVE"

class SearchKind(Enum):
  LNN = "lnn"
  MCT = "mct"

  @classmethod
  def has_value(cls, value):
    return value in cls._value2member_map_

class ReportFormat(Enum):
  TEXT = "text"
  JSON = "json"
