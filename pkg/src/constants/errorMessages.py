INVALID_GATE_ARITY = "Número de linhas inválido para o tipo de porta."
DUPLICATED_LINE = "Uma porta não pode usar a mesma linha mais de uma vez."
NEGATIVE_LINE = "Índice de linha negativo."
LINE_OUT_OF_RANGE = "A porta usa uma linha fora do circuito."
INVALID_LINE_COUNT = "O circuito deve ter pelo menos uma linha."
NOT_TWO_QUBIT_GATE = "NNC só é definido para portas de duas linhas."
NOT_TOFFOLI = "A operação exige uma porta Toffoli."
NOT_MCT = "A operação exige uma porta Toffoli de múltiplos controles."
NOT_PRIMITIVE_LEVEL = "O circuito ainda contém portas Toffoli ou MCT."
ALREADY_ADJACENT = "A porta já atua em linhas adjacentes."
MODEL_NOT_APPLICABLE = "O modelo escolhido não se aplica a este tipo de porta."
NOT_LNN = "O circuito não é LNN."
INSUFFICIENT_WORKING_LINES = "Não há linhas de trabalho livres para decompor a porta."
LINE_COUNT_MISMATCH = "Os circuitos possuem números de linhas diferentes."
TEMPLATE_NOT_IDENTITY = "O template não simula a identidade."
TEMPLATE_NOT_LNN = "O template não é LNN."
TEMPLATE_TOO_WIDE = "O template usa mais linhas que o circuito."

MISSING_NUMVARS = "Cabeçalho .numvars ausente."
INVALID_NUMVARS = "Valor de .numvars inválido."
VARIABLES_MISMATCH = "A quantidade de variáveis difere de .numvars."
UNKNOWN_GATE_TOKEN = "Token de porta desconhecido."
UNKNOWN_VARIABLE = "Variável não declarada em .variables."
GATE_TOKEN_MISMATCH = "O token não corresponde ao número de linhas da porta."
GATE_OUTSIDE_BODY = "Porta fora do bloco .begin/.end."
MISSING_END = "Bloco .begin sem .end."
INVALID_TEMPLATE_HEADER = "Cabeçalho de template inválido."
TEMPLATE_SIZE_MISMATCH = "O tamanho declarado do template difere do número de portas."

VERIFICATION_FAILED = "A verificação de equivalência falhou."
ENTANGLEMENT_INTRODUCED = "A transformação gerou um circuito emaranhado."
ORACLE_MISSING = "Dados de enumeração ausentes."
CHECKPOINT_INVALID = "Arquivo de checkpoint inválido."
CHECKPOINT_MISMATCH = "O checkpoint foi gerado com outra configuração."
INVALID_SEARCH_KIND = "Tipo de busca inválido."
INVALID_CONVENTION = "Convenção inválida."
INVALID_MODEL = "Modelo inválido."
INVALID_FUNCTION = "Função reversível inválida."
INVALID_DEPTH = "A profundidade máxima deve ser não negativa."
WITNESS_NOT_FOUND = "Circuito testemunha não encontrado."
RUN_NOT_FOUND = "Nenhuma enumeração registrada."
INVALID_ENV_VALUES = "SOME ENVIRONMENT VALUES ARE INVALID"
INPUT_NOT_FOUND = "Arquivo de entrada não encontrado."
