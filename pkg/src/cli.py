'''
Interface de linha de comando: transform, optimize, verify, enumerate,
report e templates. Todo artefato escrito é relido e verificado antes de o
comando terminar com sucesso.
'''
import json
import logging
from pathlib import Path

import click
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from src.constants import errorMessages
from src.core import flow, realFormat
from src.core.circuitCore import Circuit, expand_swaps, is_lnn, quantum_cost
from src.core.lnnTransform import TransformOptions
from src.core.optimalSearch import TOTAL_FUNCTIONS, enumerate_optimal_lnn, enumerate_optimal_mct
from src.core.semantics import as_permutation, circuit_unitary, classical_permutation, entangled_inputs, equivalent
from src.core.templates import find_templates, load_templates, optimize
from src.utils import dotenv
from src.utils.enumeration import Convention, GateLevel, ModelKind, ReportFormat, SearchKind
from src.utils.exceptions import CheckpointError, CircuitError, OracleMissingError, VerificationError
from src.utils.logger import configure_logging

logger = logging.getLogger(__name__)

CLI_NAME = "python -m src.cli"

class RunConfig(BaseModel):
  command: str
  input_path: Path | None = None
  other_path: Path | None = None
  output_path: Path | None = None
  templates_path: Path | None = None
  optimize: bool = False
  working_lines: int = Field(default=1, ge=1)
  model_preference: tuple[ModelKind, ...] = (ModelKind.MODEL1, ModelKind.MODEL2, ModelKind.MODEL3)
  convention: Convention = Convention.EXACT
  max_depth: int = Field(default=8, ge=0)
  mem_budget_mb: int = Field(default=4096, gt=0)
  workers: int = Field(default=1, ge=1)
  report_format: ReportFormat = ReportFormat.TEXT

  # Caminhos de entrada são conferidos antes de qualquer trabalho
  @field_validator("input_path", "other_path", "templates_path")
  @classmethod
  def path_exists(cls, value):
    if value is not None and not value.is_file():
      raise ValueError("{} ({})".format(errorMessages.INPUT_NOT_FOUND, value))
    return value

  def transform_options(self) -> TransformOptions:
    return TransformOptions(model_preference=self.model_preference, mct_working_lines=self.working_lines)

def _config(ctx: click.Context, command: str, **values) -> RunConfig:
  settings = ctx.obj
  defaults = {
    "templates_path": settings.templates_path,
    "working_lines": settings.working_lines,
    "convention": settings.convention,
    "max_depth": settings.max_depth,
    "mem_budget_mb": settings.mem_budget_mb,
    "workers": settings.workers,
  }
  merged = {**defaults, **{key: value for key, value in values.items() if value is not None}}
  try:
    return RunConfig(command=command, **merged)
  except ValueError as error:
    raise click.UsageError(str(error))

def _read(path: Path) -> Circuit:
  try:
    return realFormat.parse_real(path.read_text())
  except CircuitError as error:
    raise click.ClickException("{}: {}".format(path, error))

def _emit(text: str, path: Path | None):
  if path is None:
    click.echo(text, nl=False)
  else:
    path.write_text(text)

# Relê o REAL escrito e confere de novo contra a entrada
def _write_verified(source: Circuit, result: Circuit, config: RunConfig):
  text = realFormat.write_real(result)
  reparsed = realFormat.parse_real(text)
  flow.verify_transform(source, reparsed, config.convention)
  _emit(text, config.output_path)
  if config.output_path is not None:
    flow.verify_transform(source, realFormat.parse_real(config.output_path.read_text()), config.convention)

@click.group()
@click.option("--log-level", default=None, help="Nível de log (padrão: LNN_LOG_LEVEL).")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None):
  load_dotenv()
  try:
    settings = dotenv.validate_dotenv()
  except EnvironmentError as error:
    raise click.ClickException(str(error))
  configure_logging(log_level or settings.log_level)
  ctx.obj = settings

@cli.command()
@click.option("--in", "input_path", type=click.Path(path_type=Path), required=True)
@click.option("--out", "output_path", type=click.Path(path_type=Path))
@click.option("--optimize/--no-optimize", "optimize_result", default=False)
@click.option("--templates", "templates_path", type=click.Path(path_type=Path))
@click.option("--working-lines", type=int)
@click.option("--model", "models", multiple=True, type=click.Choice([model.value for model in ModelKind]))
@click.option("--convention", type=click.Choice([convention.value for convention in Convention]))
@click.pass_context
def transform(ctx, input_path, output_path, optimize_result, templates_path, working_lines, models, convention):
  '''Sintetiza um circuito MCT em LNN (opcionalmente otimizado).'''
  config = _config(
    ctx, "transform", input_path=input_path, output_path=output_path, optimize=optimize_result,
    templates_path=templates_path, working_lines=working_lines, convention=convention,
    model_preference=tuple(models) or None,
  )
  source = _read(config.input_path)
  try:
    base = load_templates(config.templates_path) if config.optimize else None
    result = flow.run_flow(source, config.transform_options(), config.optimize, base, config.convention, ctx.obj.verify_rewrites)
    _write_verified(source, result.final, config)
  except (CircuitError, VerificationError) as error:
    raise click.ClickException(str(error))
  click.echo("portas: {} -> {}".format(len(source), len(result.final)), err=True)

@cli.command("optimize")
@click.option("--in", "input_path", type=click.Path(path_type=Path), required=True)
@click.option("--out", "output_path", type=click.Path(path_type=Path))
@click.option("--templates", "templates_path", type=click.Path(path_type=Path))
@click.pass_context
def optimize_command(ctx, input_path, output_path, templates_path):
  '''Otimiza por templates um circuito LNN de primitivas.'''
  config = _config(ctx, "optimize", input_path=input_path, output_path=output_path, templates_path=templates_path)
  source = _read(config.input_path)
  try:
    result = optimize(source, load_templates(config.templates_path), verify=ctx.obj.verify_rewrites)
    _write_verified(source, result, config)
  except (CircuitError, VerificationError) as error:
    raise click.ClickException(str(error))
  click.echo("portas: {} -> {}".format(len(source), len(result)), err=True)

@cli.command()
@click.option("--in", "input_path", type=click.Path(path_type=Path), required=True)
@click.option("--other", "other_path", type=click.Path(path_type=Path))
@click.option("--convention", type=click.Choice([convention.value for convention in Convention]))
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify(ctx, input_path, other_path, convention, as_json):
  '''Mostra equivalência, LNN, emaranhamento e custo quântico.'''
  config = _config(ctx, "verify", input_path=input_path, other_path=other_path, convention=convention)
  source = _read(config.input_path)
  inputs = entangled_inputs(source)
  report = {
    "lines": source.num_lines,
    "gates": len(source),
    "quantum_cost": quantum_cost(expand_swaps(source)) if source.level == GateLevel.PRIMITIVE else None,
    "lnn": is_lnn(source),
    "entangled": bool(inputs),
    "entangled_inputs": [format(index, "0{}b".format(source.num_lines)) for index in inputs],
  }
  if config.other_path is not None:
    try:
      report["equivalent"] = equivalent(source, _read(config.other_path), config.convention)
    except CircuitError as error:
      raise click.ClickException(str(error))

  if as_json:
    click.echo(json.dumps(report, indent=2))
    return
  for key, value in report.items():
    if isinstance(value, bool):
      value = str(value).lower()
    elif isinstance(value, list):
      value = " ".join(value) or "-"
    elif value is None:
      value = "-"
    click.echo("{}: {}".format(key, value))

# Testemunhas são resimuladas antes de sair: a função indexada tem de ser a do circuito
def _check_witnesses(result):
  for function in result.witnesses:
    witness = result.witness(function)
    if result.kind == SearchKind.MCT:
      valid = classical_permutation(witness) == tuple(function)
    else:
      valid = is_lnn(witness) and as_permutation(circuit_unitary(witness), result.convention) == tuple(function)
    if not valid:
      logger.error("Testemunha %s não realiza %s", witness, function)
      raise click.ClickException(errorMessages.VERIFICATION_FAILED)

@cli.command("enumerate")
@click.option("--kind", type=click.Choice([kind.value for kind in SearchKind]), required=True)
@click.option("--max-depth", type=int)
@click.option("--mem-budget", "mem_budget_mb", type=int, help="Orçamento de memória em MB.")
@click.option("--workers", type=int)
@click.option("--convention", type=click.Choice([convention.value for convention in Convention]))
@click.option("--out", "output_path", type=click.Path(path_type=Path))
@click.option("--checkpoint", "checkpoint_path", type=click.Path(path_type=Path))
@click.option("--resume", "resume_path", type=click.Path(path_type=Path))
@click.option("--store/--no-store", default=True, help="Grava testemunhas e execução no banco.")
@click.pass_context
def enumerate_command(ctx, kind, max_depth, mem_budget_mb, workers, convention, output_path, checkpoint_path, resume_path, store):
  '''Busca exaustiva de circuitos mínimos de 3 linhas.'''
  config = _config(
    ctx, "enumerate", max_depth=max_depth, mem_budget_mb=mem_budget_mb, workers=workers,
    convention=convention, output_path=output_path,
  )
  if resume_path is not None and not resume_path.is_file():
    raise click.UsageError("{} ({})".format(errorMessages.INPUT_NOT_FOUND, resume_path))

  try:
    if SearchKind(kind) == SearchKind.MCT:
      result = enumerate_optimal_mct()
    else:
      result = enumerate_optimal_lnn(
        config.max_depth, config.convention, config.mem_budget_mb, config.workers, checkpoint_path, resume_path,
      )
  except (CheckpointError, CircuitError) as error:
    raise click.ClickException(str(error))

  _check_witnesses(result)

  _emit(json.dumps(result.to_dict(), indent=2) + "\n", config.output_path)
  if store:
    from src.database import SessionLocal, engine
    from src.model import witnessModel
    from src.repository import witnessRepository

    witnessModel.Base.metadata.create_all(bind=engine)
    with SessionLocal() as db:
      witnessRepository.save_search(db, result)
  logger.info("Enumeração %s: %d funções", kind, len(result.witnesses))

def _load_oracles(db, convention: Convention):
  from src.repository import witnessRepository

  mct_run = witnessRepository.get_latest_run(db, SearchKind.MCT.value)
  mct_total = witnessRepository.count_witnesses(db, SearchKind.MCT.value, Convention.EXACT.value)
  if mct_run is None or mct_total != TOTAL_FUNCTIONS:
    raise OracleMissingError("{} enumerate --kind mct".format(CLI_NAME))
  lnn_run = witnessRepository.get_latest_run(db, SearchKind.LNN.value, convention.value)
  if lnn_run is None:
    raise OracleMissingError("{} enumerate --kind lnn --max-depth 8 --convention {}".format(CLI_NAME, convention.value))
  return witnessRepository.get_witnesses(db, SearchKind.MCT.value, Convention.EXACT.value), witnessRepository.run_histogram(lnn_run)

@cli.command()
@click.option("--convention", type=click.Choice([convention.value for convention in Convention]))
@click.option("--templates", "templates_path", type=click.Path(path_type=Path))
@click.option("--workers", type=int)
@click.option("--limit", type=int, help="Usa só as primeiras N funções (por tamanho).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", "output_path", type=click.Path(path_type=Path))
@click.pass_context
def report(ctx, convention, templates_path, workers, limit, as_json, output_path):
  '''Tabela por tamanho das colunas LNN, MS, M e Opt(M) com médias.'''
  config = _config(
    ctx, "report", convention=convention, templates_path=templates_path, workers=workers,
    output_path=output_path, report_format=ReportFormat.JSON if as_json else ReportFormat.TEXT,
  )
  from src.database import SessionLocal, engine
  from src.model import witnessModel

  witnessModel.Base.metadata.create_all(bind=engine)
  with SessionLocal() as db:
    try:
      witnesses, histogram = _load_oracles(db, config.convention)
    except OracleMissingError as error:
      raise click.ClickException(str(error))
    circuits = [realFormat.parse_real(witness.gates) for witness in witnesses[:limit]]

  result = flow.build_report(circuits, histogram, load_templates(config.templates_path), config.workers, config.convention)
  if config.report_format == ReportFormat.JSON:
    _emit(result.model_dump_json(indent=2) + "\n", config.output_path)
  else:
    _emit(flow.format_report(result), config.output_path)

@cli.command()
@click.option("--max-size", type=int, required=True)
@click.option("--lines", "line_count", type=int, default=3, show_default=True)
@click.option("--out", "output_path", type=click.Path(path_type=Path))
def templates(max_size, line_count, output_path):
  '''Descobre templates LNN e grava uma base no formato de templates.'''
  if max_size < 1 or line_count < 1:
    raise click.UsageError(errorMessages.INVALID_LINE_COUNT)
  found = find_templates(max_size, line_count)
  text = realFormat.write_template_base([template.circuit for template in found])
  # A base gravada precisa ser relida sem erros
  reparsed = realFormat.parse_template_base(text)
  if len(reparsed) != len(found):
    raise click.ClickException(errorMessages.VERIFICATION_FAILED)
  _emit(text, output_path)
  click.echo("{} templates".format(len(found)), err=True)

if __name__ == "__main__": # pragma: no cover
  cli()
