'''
Fluxo completo MCT -> LNN: síntese, otimização por templates e verificação
antes de qualquer resultado sair do processo. Também monta a tabela
comparativa MS / M / Opt(M) / LNN sobre os circuitos MCT mínimos.
'''
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable

from src.constants import errorMessages
from src.core.circuitCore import Circuit
from src.core.lnnTransform import TransformOptions, swap_insert_baseline, synthesize_lnn
from src.core.optimalSearch import CostHistogram
from src.core.semantics import equivalent, is_entangled_circuit
from src.core.templates import RewriteTrace, Template, optimize
from src.domain.reportSchema import Report, ReportAverages, ReportRow
from src.utils.enumeration import Convention, ModelKind
from src.utils.exceptions import VerificationError

logger = logging.getLogger(__name__)

# Preferências de modelo para CNOT tentadas por best_flow, na ordem
MODEL_PREFERENCES = (
  (ModelKind.MODEL1, ModelKind.MODEL2, ModelKind.MODEL3),
  (ModelKind.MODEL3, ModelKind.MODEL1, ModelKind.MODEL2),
  (ModelKind.MODEL2, ModelKind.MODEL1, ModelKind.MODEL3),
)

CITED_AVERAGES = ReportAverages(lnn=15.89, ms=28.44, m=27.10, opt_m=21.85)

@dataclass
class FlowResult:
  source: Circuit
  synthesized: Circuit
  optimized: Circuit | None = None
  preference: tuple[ModelKind, ...] = ()
  trace: RewriteTrace = field(default_factory=RewriteTrace)

  @property
  def final(self) -> Circuit:
    return self.optimized if self.optimized is not None else self.synthesized

def verify_transform(source: Circuit, result: Circuit, convention: Convention = Convention.EXACT):
  if not equivalent(source, result, convention):
    logger.error("Resultado não equivalente à entrada (%d linhas, %d portas)", source.num_lines, len(result))
    raise VerificationError(errorMessages.VERIFICATION_FAILED)
  if is_entangled_circuit(result) and not is_entangled_circuit(source):
    logger.error("Resultado emaranhado para entrada não emaranhada")
    raise VerificationError(errorMessages.ENTANGLEMENT_INTRODUCED)

'''
Roda a síntese uma vez por preferência de modelo, otimiza cada circuito
distinto e fica com o menor; empates ficam com a primeira preferência.
'''
def best_flow(circuit: Circuit, opts: TransformOptions | None = None, base: list[Template] | None = None, verify: bool = True) -> FlowResult:
  opts = opts or TransformOptions()
  best = None
  seen = set()
  for preference in MODEL_PREFERENCES:
    synthesized = synthesize_lnn(circuit, replace(opts, model_preference=preference))
    if synthesized.gates in seen:
      continue
    seen.add(synthesized.gates)
    trace = RewriteTrace()
    optimized = optimize(synthesized, base, trace, verify=verify)
    logger.debug("Preferência %s: %d -> %d portas", [model.value for model in preference], len(synthesized), len(optimized))
    if best is None or len(optimized) < len(best.optimized):
      best = FlowResult(circuit, synthesized, optimized, preference, trace)
  return best

def run_flow(
  circuit: Circuit,
  opts: TransformOptions | None = None,
  optimize_result: bool = False,
  base: list[Template] | None = None,
  convention: Convention = Convention.EXACT,
  verify_rewrites: bool = True,
) -> FlowResult:
  opts = opts or TransformOptions()
  if optimize_result:
    result = best_flow(circuit, opts, base, verify_rewrites)
  else:
    result = FlowResult(circuit, synthesize_lnn(circuit, opts), preference=opts.model_preference)
  verify_transform(circuit, result.final, convention)
  logger.info("Fluxo: %d portas -> %d portas LNN", len(circuit), len(result.final))
  return result

def _score(circuits: list[Circuit], base: list[Template] | None) -> list[tuple[int, int, int]]:
  scores = []
  for circuit in circuits:
    scores.append((
      len(swap_insert_baseline(circuit)),
      len(synthesize_lnn(circuit)),
      len(best_flow(circuit, base=base).final),
    ))
  return scores

def _score_chunk(args: tuple[list[Circuit], list[Template] | None]) -> list[tuple[int, int, int]]:
  return _score(*args)

def _average(counts: dict[int, int]) -> float | None:
  total = sum(counts.values())
  if not total:
    return None
  return sum(size * count for size, count in counts.items()) / total

'''
Tabela por tamanho: para cada coluna, quantas funções terminam com aquele
número de portas. A coluna LNN vem do histograma da busca ótima.
'''
def build_report(
  circuits: Iterable[Circuit],
  lnn_histogram: CostHistogram,
  base: list[Template] | None = None,
  workers: int = 1,
  convention: Convention = Convention.EXACT,
) -> Report:
  circuits = list(circuits)
  if workers > 1 and len(circuits) > workers:
    size = -(-len(circuits) // (workers * 4))
    chunks = [(circuits[start:start + size], base) for start in range(0, len(circuits), size)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
      scores = [score for batch in executor.map(_score_chunk, chunks) for score in batch]
  else:
    scores = _score(circuits, base)

  columns = {"ms": {}, "m": {}, "opt_m": {}}
  for ms, m, opt_m in scores:
    for name, value in (("ms", ms), ("m", m), ("opt_m", opt_m)):
      columns[name][value] = columns[name].get(value, 0) + 1

  sizes = set(lnn_histogram.counts)
  for counts in columns.values():
    sizes |= set(counts)
  rows = [
    ReportRow(
      size=size,
      lnn=lnn_histogram.counts.get(size, 0),
      ms=columns["ms"].get(size, 0),
      m=columns["m"].get(size, 0),
      opt_m=columns["opt_m"].get(size, 0),
    )
    for size in sorted(sizes)
  ]
  averages = ReportAverages(
    lnn=lnn_histogram.average(),
    ms=_average(columns["ms"]),
    m=_average(columns["m"]),
    opt_m=_average(columns["opt_m"]),
  )
  reduction = None
  if averages.m and averages.opt_m is not None:
    reduction = 1 - averages.opt_m / averages.m
  return Report(
    convention=convention.value,
    functions=len(scores),
    lnn_complete=lnn_histogram.complete,
    lnn_completed_depth=lnn_histogram.completed_depth,
    rows=rows,
    averages=averages,
    cited=CITED_AVERAGES,
    reduction=reduction,
  )

def _cell(value: float | None) -> str:
  return "-" if value is None else "{:.2f}".format(value)

def format_report(report: Report) -> str:
  lines = ["{:>5} {:>7} {:>7} {:>7} {:>7}".format("size", "LNN", "MS", "M", "Opt(M)")]
  for row in report.rows:
    lines.append("{:>5} {:>7} {:>7} {:>7} {:>7}".format(row.size, row.lnn, row.ms, row.m, row.opt_m))
  for label, averages in (("AVG", report.averages), ("cited", report.cited)):
    lines.append("{:>5} {:>7} {:>7} {:>7} {:>7}".format(
      label, _cell(averages.lnn), _cell(averages.ms), _cell(averages.m), _cell(averages.opt_m),
    ))
  if report.reduction is not None:
    lines.append("redução Opt(M)/M: {:.1%}".format(report.reduction))
  if not report.lnn_complete:
    lines.append("coluna LNN parcial até a profundidade {}".format(report.lnn_completed_depth))
  return "\n".join(lines) + "\n"
