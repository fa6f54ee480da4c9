from pydantic import ValidationError

from src.constants import errorMessages
from src.utils import settings

# Valida as variáveis LNN_* antes de qualquer trabalho começar
def validate_dotenv():
  try:
    settings.get_settings.cache_clear()
    return settings.get_settings()
  except ValidationError as error:
    invalid_env_var = ["LNN_" + str(err["loc"][0]).upper() for err in error.errors()]
    error_message = "{} (invalid: {})".format(errorMessages.INVALID_ENV_VALUES, ', '.join(invalid_env_var))
    raise EnvironmentError(error_message)
