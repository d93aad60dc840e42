"""
Leyes de renovación K(n) en {1, 2, ...}: construcción, masas, colas y muestreo.

Familias:
- PowerLaw(alpha): K(n) = n^-(1+alpha) / zeta(1+alpha)
- SimpleRandomWalkReturn: primer retorno a 0 del paseo simple, alpha = 1/2
- Geometric(p): K(n) = p (1-p)^(n-1); viola la variación regular y solo se
  usa como oráculo de forma cerrada.
"""

import logging
from typing import Dict, List, Optional

import numpy as np
from scipy.special import gammaln, zeta

from core.config.constants import ALPHA_SRW, FAMILIA_GEOMETRICA, FAMILIA_POWER_LAW, FAMILIA_SRW, LOG_CERO
from core.config.errors import (
    ERROR_ALPHA_NO_POSITIVO,
    ERROR_FAMILIA_DESCONOCIDA,
    ERROR_HORIZONTE_LEY,
    ERROR_INDICE_COLA,
    ERROR_INDICE_MASA,
    ERROR_N_TABLA,
    ERROR_P_FUERA_RANGO,
    ErrorHorizonte,
    ErrorParametros,
)
from models.ley_renovacion import EspecificacionLey, LeyRenovacion
from services.generador import GeneradorXoshiro

logger = logging.getLogger(__name__)

# tablas de u(2k) por producto acumulado hasta este k; evaluaciones sueltas con gammaln
_K_MAX_PRODUCTO = 1 << 22


def _probabilidades_retorno(k_max: int) -> np.ndarray:
    """
    u(2k) = C(2k, k) 2^-2k para k = 0..k_max, por el producto
    u(2k) = u(2k - 2) (2k - 1) / (2k).
    """
    k = np.arange(1, k_max + 1, dtype=float)
    u = np.empty(k_max + 1)
    u[0] = 1.0
    u[1:] = np.cumprod((2.0 * k - 1.0) / (2.0 * k))
    return u


def cola_analitica(familia: str, parametros: Dict[str, float], m) -> np.ndarray:
    """
    bar_K(m) = sum_{l >= m} K(l) en forma cerrada, vectorizada en m >= 1.
    """
    if familia == FAMILIA_POWER_LAW:
        # en coma flotante: la búsqueda fuera de tabla puede pasar de 2^63
        s = 1.0 + parametros["alpha"]
        return zeta(s, np.atleast_1d(np.asarray(m, dtype=float))) / zeta(s, 1.0)
    m = np.atleast_1d(np.asarray(m, dtype=float))
    if familia == FAMILIA_GEOMETRICA:
        return np.power(1.0 - parametros["p"], m - 1.0)
    if familia == FAMILIA_SRW:
        # P(tau_1 > 2k) = u(2k), y la cola es constante en cada par {2k+1, 2k+2}
        k = np.floor((m - 1.0) / 2.0)
        if m.size > 1 and k.max() <= _K_MAX_PRODUCTO:
            return _probabilidades_retorno(int(k.max()))[k.astype(np.int64)]
        # u(2k) = Gamma(k + 1/2) / (sqrt(pi) Gamma(k + 1))
        return np.exp(gammaln(k + 0.5) - gammaln(k + 1.0)) / np.sqrt(np.pi)
    raise ErrorParametros(ERROR_FAMILIA_DESCONOCIDA.format(familia))


def _validar_parametros(familia: str, parametros: Dict[str, float]) -> Optional[float]:
    """Valida los rangos de cada familia y devuelve alpha (None si no aplica)."""
    if familia == FAMILIA_POWER_LAW:
        alpha = parametros.get("alpha")
        if alpha is None or not alpha > 0:
            raise ErrorParametros(ERROR_ALPHA_NO_POSITIVO.format(alpha))
        return float(alpha)
    if familia == FAMILIA_GEOMETRICA:
        p = parametros.get("p")
        if p is None or not 0.0 < p < 1.0:
            raise ErrorParametros(ERROR_P_FUERA_RANGO.format(p))
        return None
    if familia == FAMILIA_SRW:
        return ALPHA_SRW
    raise ErrorParametros(ERROR_FAMILIA_DESCONOCIDA.format(familia))


def _logaritmos_tabla(familia: str, parametros: Dict[str, float], masas: np.ndarray, colas: np.ndarray):
    """
    (log K, log bar_K) de la tabla. La geométrica decae exponencialmente y
    sus masas se anulan en coma flotante hacia n ~ 745 / log(1/q): se evalúa
    en forma cerrada. Las colas polinómicas no se anulan en la tabla.
    """
    if familia == FAMILIA_GEOMETRICA:
        p = parametros["p"]
        log_q = np.log1p(-p)
        m = np.arange(colas.size, dtype=float)
        log_colas = np.maximum(m - 1.0, 0.0) * log_q
        log_masas = np.log(p) + (m[: masas.size] - 1.0) * log_q
        log_masas[0] = LOG_CERO
        return log_masas, log_colas
    with np.errstate(divide="ignore"):
        return np.log(masas), np.log(colas)


def construir_ley(
    familia: str,
    parametros: Optional[Dict[str, float]] = None,
    n_tabla: int = 4096,
    horizonte: Optional[int] = None,
) -> LeyRenovacion:
    """
    Construye y tabula una ley de renovación.

    La cola se evalúa en forma cerrada para m = 1..n_tabla + 1 (función zeta de
    Hurwitz para PowerLaw) y las masas se obtienen como diferencias
    K(m) = bar_K(m) - bar_K(m + 1), de modo que la consistencia cola/masa es
    exacta y sum_{n <= n_tabla} K(n) + bar_K(n_tabla + 1) telescopa a 1.

    Args:
        familia: PowerLaw, SimpleRandomWalkReturn o Geometric
        parametros: {"alpha": a} para PowerLaw, {"p": p} para Geometric
        n_tabla: último n tabulado (>= 2)
        horizonte: si se indica, n_tabla debe cubrirlo

    Raises:
        ErrorParametros: parámetros fuera de rango o n_tabla < 2
        ErrorHorizonte: n_tabla < horizonte
    """
    parametros = {k: float(v) for k, v in (parametros or {}).items()}
    alpha = _validar_parametros(familia, parametros)
    if n_tabla < 2:
        raise ErrorParametros(ERROR_N_TABLA.format(n_tabla))
    if horizonte is not None and n_tabla < horizonte:
        raise ErrorHorizonte(ERROR_HORIZONTE_LEY.format(horizonte, n_tabla))

    colas = np.empty(n_tabla + 2)
    colas[0] = 1.0
    colas[1:] = cola_analitica(familia, parametros, np.arange(1, n_tabla + 2))
    colas[1] = 1.0

    masas = np.zeros(n_tabla + 1)
    masas[1:] = colas[1:-1] - colas[2:]

    log_masas, log_colas = _logaritmos_tabla(familia, parametros, masas, colas)

    for tabla in (masas, colas, log_masas, log_colas):
        tabla.flags.writeable = False

    ley = LeyRenovacion(
        familia=familia,
        alpha=alpha,
        parametros=parametros,
        n_tabla=n_tabla,
        masas=masas,
        colas=colas,
        log_masas=log_masas,
        log_colas=log_colas,
        viola_regvar=familia == FAMILIA_GEOMETRICA,
    )
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug("Ley construida: %s", ley.to_json())
    return ley


def ley_desde_especificacion(espec: EspecificacionLey, n_tabla: Optional[int] = None) -> LeyRenovacion:
    """Construye la ley de una especificación; n_tabla explícito tiene prioridad."""
    tabla = n_tabla or espec.n_tabla or 4096
    return construir_ley(espec.familia, espec.parametros, tabla)


def masa(ley: LeyRenovacion, n: int) -> float:
    """K(n) tal como está tabulada, 1 <= n <= n_tabla."""
    if not 1 <= n <= ley.n_tabla:
        raise ErrorHorizonte(ERROR_INDICE_MASA.format(n, ley.n_tabla))
    return float(ley.masas[n])


def cola(ley: LeyRenovacion, m: int) -> float:
    """bar_K(m), 1 <= m <= n_tabla + 1; el resto fuera de la tabla ya está incluido."""
    if not 1 <= m <= ley.n_tabla + 1:
        raise ErrorHorizonte(ERROR_INDICE_COLA.format(m, ley.n_tabla + 1))
    return float(ley.colas[m])


def _salto_fuera_de_tabla(ley: LeyRenovacion, v: float) -> int:
    """
    Menor n > n_tabla con bar_K(n + 1) < v: duplicación del intervalo y
    búsqueda binaria sobre la cola analítica.
    """
    if ley.familia == FAMILIA_GEOMETRICA:
        q = 1.0 - ley.parametros["p"]
        # bar_K(n + 1) = q^n < v  <=>  n > log v / log q
        n = int(np.floor(np.log(v) / np.log(q))) + 1
        return max(n, ley.n_tabla + 1)

    bajo = ley.n_tabla
    alto = 2 * ley.n_tabla
    while cola_analitica(ley.familia, ley.parametros, alto + 1)[0] >= v:
        bajo, alto = alto, 2 * alto
    # invariante: cola(bajo + 1) >= v > cola(alto + 1)
    while alto - bajo > 1:
        medio = (bajo + alto) // 2
        if cola_analitica(ley.familia, ley.parametros, medio + 1)[0] < v:
            alto = medio
        else:
            bajo = medio
    return alto


def muestrear_salto(ley: LeyRenovacion, generador: GeneradorXoshiro) -> int:
    """
    Un salto con ley K por CDF inversa sobre la tabla, con recurso a la
    cola analítica más allá de n_tabla. Consume una uniforme del flujo.
    """
    v = 1.0 - generador.uniforme()
    colas_siguientes = ley.colas[2:]
    indice = int(np.searchsorted(-colas_siguientes, -v, side="right"))
    if indice < ley.n_tabla:
        return indice + 1
    return _salto_fuera_de_tabla(ley, v)


def muestrear_saltos(ley: LeyRenovacion, generador: GeneradorXoshiro, cantidad: int) -> np.ndarray:
    """Versión por lotes de muestrear_salto (mismo orden de consumo del flujo)."""
    v = 1.0 - generador.uniformes(cantidad)
    indices = np.searchsorted(-ley.colas[2:], -v, side="right")
    saltos = indices.astype(np.int64) + 1
    for i in np.flatnonzero(indices >= ley.n_tabla):
        saltos[i] = _salto_fuera_de_tabla(ley, float(v[i]))
    return saltos


def diagnostico_regvar(ley: LeyRenovacion, exponentes=(6, 8, 10, 12, 14)) -> List[dict]:
    """
    Exponente estimado -log K(n) / log n en n = 2^k frente a 1 + alpha.
    """
    if ley.alpha is None:
        return []
    filas = []
    for k in exponentes:
        n = 2 ** k
        if n > ley.n_tabla:
            break
        estimado = -np.log(ley.masas[n]) / np.log(n)
        filas.append({"n": n, "exponente": float(estimado), "desviacion": float(abs(estimado - (1.0 + ley.alpha)))})
    return filas
