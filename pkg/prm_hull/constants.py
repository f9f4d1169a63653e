"""
Constantes y configuracion del verificador de hulls de codigos PRM
"""
import os

from dotenv import load_dotenv

# Cargar variables de entorno desde .env
load_dotenv()


class HelpTexts:
    """Textos largos de ayuda para la CLI (documentan el esquema de salida)"""

    HULL_EPILOG: str = """
JSON keys (fixed order):
  q            field order
  m            projective dimension
  v            degree
  length       n = (q^(m+1) - 1) / (q - 1)
  case_tag     ZeroDegree | SelfOrthogonalBoundary | LowerOpen | UpperOpenDual |
               UpperBoundarySongLuo | EndpointLCD | FullSpace
  code_dim     dimension of PRM(q, m, v)
  defect       Delta_r(v) for LowerOpen, null otherwise
  hull_dim     dimension of Hull(PRM(q, m, v))
  interval     r with v in I_r for LowerOpen, null otherwise
  dual_degree  mQ - v for UpperOpenDual and UpperBoundarySongLuo, null otherwise
"""

    DIM_EPILOG: str = """
JSON keys: q, m, v, length, code_dim (1 at v = 0, n for v > mQ).
"""

    DELTA_EPILOG: str = """
JSON keys: q, r, v, A, delta, delta_closed_chain, delta_explicit.
v must lie in an open interval I_r = (rQ/2, (r+1)Q/2).
"""

    A_COUNT_EPILOG: str = """
JSON keys: q, r, v, A_formula, A_enumerate.
v must lie in an open interval I_r = (rQ/2, (r+1)Q/2).
"""

    VERIFY_EPILOG: str = """
TSV columns (fixed order, header row first):
  mode  q  m  v  formula_hull_dim  oracle_hull_dim  match  elapsed_ms

modes:
  hull       m in 1..M, v in 0..mQ+1; formula hull_dim vs k - rank(Gram) oracle
  dim        m in 1..M, v in 1..mQ;   Sorensen dimension vs rank(G1)
             (oracle -1 when |G| disagrees with the formula)
  recursion  r in 0..M, v in I_r;      Delta recursion vs rank(S_r^sym)
  schur      r in 2..M, v in I_r;      1 vs 1 iff C P^-1 B = 0 and D = R H R^T
  blocks     r in 0..M, v in I_r;      Delta vs rank of the E-indexed principal block
                                       (-1 when that block is singular)

For recursion, schur and blocks the m column carries r.
Exit codes: 0 all rows match, 1 some mismatch, 2 usage error.
"""

    EXPORT_EPILOG: str = """
G, G1, S, P, W: one matrix row per line, entries as space-separated element indices
                (base-p coefficient packing of the field element).
E:              one local exponent vector per line, comma-separated integers.
"""


class Limits:
    """Limites numericos y barridos por defecto"""

    MAX_FIELD_ORDER: int = 256
    DEFAULT_SWEEP_FIELDS: tuple = (2, 3, 4, 5, 7, 8, 9)
    DEFAULT_M_MAX: int = 3
    STRUCTURAL_INTERVALS: tuple = (2, 3, 4)
    # Filas por bloque al evaluar entradas de Gram vectorizadas
    GRAM_CHUNK_ROWS: int = 256


class Constants:
    """Constantes del servicio obtenidas del entorno (solo afectan al logging)"""

    # Configuracion de entorno
    ENVIRONMENT: str = os.environ.get("ENVIRONMENT", "dev")

    # Configuracion de logging
    LOG_LEVEL: str = os.environ.get("LOG_LEVEL", "INFO")
