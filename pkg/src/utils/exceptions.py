from src.constants import errorMessages

class CircuitError(ValueError):
  pass

class RealFormatError(CircuitError):
  def __init__(self, message: str, line_number: int | None = None):
    self.message = message
    self.line_number = line_number
    if line_number is not None:
      message = "linha {}: {}".format(line_number, message)
    super().__init__(message)

class InsufficientWorkingLinesError(CircuitError):
  pass

class LineCountMismatchError(CircuitError):
  def __init__(self, left: int, right: int):
    self.left = left
    self.right = right
    super().__init__("{} ({} != {})".format(errorMessages.LINE_COUNT_MISMATCH, left, right))

class VerificationError(RuntimeError):
  pass

# Mensagem indica qual enumeração precisa ser executada
class OracleMissingError(RuntimeError):
  def __init__(self, command: str):
    self.command = command
    super().__init__("{} Execute: {}".format(errorMessages.ORACLE_MISSING, command))

class CheckpointError(RuntimeError):
  pass
