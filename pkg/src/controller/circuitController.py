from fastapi import APIRouter, HTTPException

from src.constants import errorMessages
from src.core import flow, realFormat
from src.core.circuitCore import expand_swaps, is_lnn, quantum_cost
from src.core.lnnTransform import TransformOptions
from src.core.semantics import entangled_inputs, equivalent
from src.core.templates import load_templates
from src.domain import circuitSchema
from src.utils import enumeration
from src.utils.exceptions import CircuitError, VerificationError
from src.utils.settings import get_settings

circuit = APIRouter(
  prefix="/circuits"
)

@circuit.post("/transform", response_model=circuitSchema.TransformResponse)
def transform_circuit(data: circuitSchema.TransformRequest):
  if not enumeration.Convention.has_value(data.convention):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_CONVENTION)
  preference = data.model_preference or [model.value for model in TransformOptions().model_preference]
  if not all(enumeration.ModelKind.has_value(model) for model in preference):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_MODEL)

  try:
    source = realFormat.parse_real(data.real)
    opts = TransformOptions(
      model_preference=tuple(enumeration.ModelKind(model) for model in preference),
      mct_working_lines=data.working_lines,
    )
    settings = get_settings()
    base = load_templates(settings.templates_path) if data.optimize else None
    result = flow.run_flow(source, opts, data.optimize, base, enumeration.Convention(data.convention), settings.verify_rewrites)
  except CircuitError as error:
    raise HTTPException(status_code=400, detail=str(error))
  except VerificationError as error:
    raise HTTPException(status_code=500, detail=str(error))

  # run_flow só retorna depois de verificar equivalência e emaranhamento
  final = result.final
  return circuitSchema.TransformResponse(
    real=realFormat.write_real(final),
    size_before=len(source),
    size_after=len(final),
    lnn=is_lnn(final),
    entangled=bool(entangled_inputs(final)),
    equivalent=True,
  )

@circuit.post("/verify", response_model=circuitSchema.VerifyResponse)
def verify_circuit(data: circuitSchema.VerifyRequest):
  if not enumeration.Convention.has_value(data.convention):
    raise HTTPException(status_code=400, detail=errorMessages.INVALID_CONVENTION)

  try:
    source = realFormat.parse_real(data.real)
    other = realFormat.parse_real(data.other) if data.other is not None else None
    is_equivalent = equivalent(source, other, enumeration.Convention(data.convention)) if other is not None else None
  except CircuitError as error:
    raise HTTPException(status_code=400, detail=str(error))

  inputs = entangled_inputs(source)
  cost = quantum_cost(expand_swaps(source)) if source.level == enumeration.GateLevel.PRIMITIVE else None
  return circuitSchema.VerifyResponse(
    lines=source.num_lines,
    gates=len(source),
    quantum_cost=cost,
    lnn=is_lnn(source),
    entangled=bool(inputs),
    entangled_inputs=inputs,
    equivalent=is_equivalent,
  )
