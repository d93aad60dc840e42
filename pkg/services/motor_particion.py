"""
Motor de referencia de funciones de partición en dominio logarítmico.

Recursiones (Z_0 = 1, G_{0,0} = 1, b_j = Z_j e^{beta omega_j - h}):
    Z_n       = sum_{j<n} b_j K(n - j)
    Z_{n,f}   = sum_{j<n} b_j bar_K(n - j)
    G_{N,n}   = sum_{j<n} G_{N-1,j} e^{beta omega_j - h} K(n - j)

Convención de eventos: E_{n,N} = {|tau ∩ [0,n]| > N} equivale a "al menos N
saltos", porque un camino restringido con N saltos tiene N + 1 contactos.
"""

import logging
from typing import Tuple

import numpy as np

from core.config.constants import LOG_CERO, MOTOR_REFERENCIA, VERSION_MOTOR
from core.config.errors import (
    ERROR_HORIZONTE_ENTORNO,
    ERROR_HORIZONTE_LEY,
    ERROR_HORIZONTE_TABLAS,
    ERROR_N0_FUERA,
    ERROR_NMAX,
    ERROR_NMAX_INSUFICIENTE,
    ERROR_PARTICION_NULA,
    ErrorHorizonte,
    ErrorParametros,
    ErrorParticionNula,
    ErrorTruncamiento,
)
from models.entorno import Entorno, ParametrosModelo
from models.ley_renovacion import LeyRenovacion
from models.tablas import TablasEscalera
from utils.logaritmos import log_acumulada, log_convolucion, log_suma

logger = logging.getLogger(__name__)


def validar_horizonte(entorno: Entorno, ley: LeyRenovacion, horizonte: int) -> None:
    """L <= longitud del entorno y L <= n_tabla de la ley."""
    if horizonte < 0:
        raise ErrorParametros(f"Horizonte negativo: {horizonte}")
    if horizonte > entorno.longitud:
        raise ErrorHorizonte(ERROR_HORIZONTE_ENTORNO.format(horizonte, entorno.longitud))
    if horizonte > ley.n_tabla:
        raise ErrorHorizonte(ERROR_HORIZONTE_LEY.format(horizonte, ley.n_tabla))


def procedencia(entorno: Entorno, ley: LeyRenovacion, parametros: ParametrosModelo, motor: str = MOTOR_REFERENCIA) -> dict:
    """Registro de procedencia común a tablas e informes."""
    return {
        "ley": ley.to_registro(),
        "entorno": entorno.to_registro(),
        "parametros": parametros.model_dump(),
        "motor": motor,
        "version_motor": VERSION_MOTOR,
    }


def _lse(valores: np.ndarray) -> float:
    # log-sum-exp del bucle interno; la suma de numpy es por pares
    maximo = valores.max()
    if maximo == LOG_CERO:
        return LOG_CERO
    return float(maximo + np.log(np.exp(valores - maximo).sum()))


def recursion_restringida(potenciales: np.ndarray, log_masas: np.ndarray, horizonte: int) -> np.ndarray:
    """
    log Z_n para n = 0..L dados los potenciales beta omega_j - h y log K.

    Coste O(L^2); cada Z_n es un log-sum-exp sobre sus n predecesores.
    """
    log_Z = np.full(horizonte + 1, LOG_CERO)
    log_Z[0] = 0.0
    log_b = np.full(max(horizonte, 1), LOG_CERO)
    for n in range(1, horizonte + 1):
        log_b[n - 1] = log_Z[n - 1] + potenciales[n - 1]
        log_Z[n] = _lse(log_b[:n] + log_masas[n:0:-1])
    return log_Z


def calcular_restringida(
    entorno: Entorno, ley: LeyRenovacion, parametros: ParametrosModelo, horizonte: int
) -> np.ndarray:
    """
    log Z_n, n = 0..L, con el motor de referencia O(L^2).

    Un extremo imposible (p. ej. n impar con la ley SRW) da LOG_CERO.

    Raises:
        ErrorHorizonte: L excede el entorno o la tabla de la ley
    """
    validar_horizonte(entorno, ley, horizonte)
    potenciales = parametros.potenciales(entorno.cargas[:horizonte])
    return recursion_restringida(potenciales, ley.log_masas, horizonte)


def calcular_libre(entorno: Entorno, ley: LeyRenovacion, parametros: ParametrosModelo, horizonte: int) -> np.ndarray:
    """
    log Z_{n,f}, n = 0..L, condicionando en el último contacto antes de n:
    Z_{n,f} = sum_{j<n} Z_j e^{beta omega_j - h} bar_K(n - j).
    """
    validar_horizonte(entorno, ley, horizonte)
    potenciales = parametros.potenciales(entorno.cargas[:horizonte])
    log_Z = recursion_restringida(potenciales, ley.log_masas, horizonte)
    return _recursion_libre(potenciales, log_Z, ley, horizonte)


def _recursion_libre(potenciales: np.ndarray, log_Z: np.ndarray, ley: LeyRenovacion, horizonte: int) -> np.ndarray:
    log_colas = ley.log_colas
    log_b = log_Z[:horizonte] + potenciales
    log_Z_libre = np.full(horizonte + 1, LOG_CERO)
    log_Z_libre[0] = 0.0
    for n in range(1, horizonte + 1):
        log_Z_libre[n] = _lse(log_b[:n] + log_colas[n:0:-1])
    return log_Z_libre


def calcular_escalera(
    entorno: Entorno, ley: LeyRenovacion, parametros: ParametrosModelo, n_max: int, horizonte: int
) -> TablasEscalera:
    """
    Tablas completas de la escalera hasta N_max saltos y extremo L.

    Cada nivel G_{N,.} es la convolución del nivel anterior (ponderado por
    e^{beta omega_j - h}) con K; cada entrada es un log-sum-exp directo de sus
    términos (O(L^2) por nivel, O(N_max L^2) en total).

    Raises:
        ErrorParametros: N_max fuera de [1, L]
        ErrorHorizonte: L excede el entorno o la tabla de la ley
    """
    validar_horizonte(entorno, ley, horizonte)
    if not 1 <= n_max <= max(horizonte, 1):
        raise ErrorParametros(ERROR_NMAX.format(n_max, horizonte))

    potenciales = parametros.potenciales(entorno.cargas[:horizonte])
    log_masas = ley.log_masas[: horizonte + 1]

    log_G = np.full((n_max + 1, horizonte + 1), LOG_CERO)
    log_G[0, 0] = 0.0
    for N in range(1, n_max + 1):
        ponderado = log_G[N - 1, :horizonte] + potenciales
        log_G[N] = log_convolucion(ponderado, log_masas, horizonte + 1)
        log_G[N, : N] = LOG_CERO

    log_Z = recursion_restringida(potenciales, ley.log_masas, horizonte)
    log_Z_libre = _recursion_libre(potenciales, log_Z, ley, horizonte)
    log_F_trunc = log_suma(log_G, axis=1)

    for arreglo in (log_Z, log_Z_libre, log_G, log_F_trunc):
        arreglo.flags.writeable = False

    logger.debug("Escalera calculada: L=%d N_max=%d beta=%g h=%g", horizonte, n_max, parametros.beta, parametros.h)
    return TablasEscalera(
        log_Z=log_Z,
        log_Z_libre=log_Z_libre,
        log_G=log_G,
        log_F_trunc=log_F_trunc,
        parametros=parametros,
        procedencia=procedencia(entorno, ley, parametros),
    )


def validar_extremo(tablas: TablasEscalera, n: int) -> None:
    if not 1 <= n <= tablas.horizonte:
        raise ErrorHorizonte(ERROR_HORIZONTE_TABLAS.format(n, tablas.horizonte))


def evento_restringido(tablas: TablasEscalera, n: int, n0: int) -> float:
    """
    log Z_n(E_{n,N0}) = log sum_{N=N0}^{n} G_{N,n}.

    Exacto si N_max >= n; si no, devuelve la suma truncada en N_max (cota
    inferior) y lo registra como posiblemente truncado.

    Raises:
        ErrorHorizonte: n fuera de las tablas
        ErrorTruncamiento: N0 > N_max
    """
    validar_extremo(tablas, n)
    if n0 < 1:
        raise ErrorParametros(ERROR_N0_FUERA.format(n0, tablas.n_max))
    if n0 > tablas.n_max:
        raise ErrorTruncamiento(ERROR_N0_FUERA.format(n0, tablas.n_max))
    if tablas.n_max < n:
        logger.warning("Z_%d(E_{n,%d}) posiblemente truncado: N_max = %d < n", n, n0, tablas.n_max)
    tope = min(n, tablas.n_max)
    if n0 > tope:
        return LOG_CERO
    return log_suma(tablas.log_G[n0: tope + 1, n])


def distribucion_contactos(tablas: TablasEscalera, n: int) -> np.ndarray:
    """
    Ley exacta del número de saltos bajo P_n: P_n(N) = G_{N,n} / Z_n, N = 0..n.

    Raises:
        ErrorTruncamiento: N_max < n
        ErrorParticionNula: Z_n = 0
    """
    validar_extremo(tablas, n)
    if tablas.n_max < n:
        raise ErrorTruncamiento(ERROR_NMAX_INSUFICIENTE.format(tablas.n_max, n))
    columna = tablas.log_G[: n + 1, n]
    log_total = log_suma(columna)
    if log_total == LOG_CERO:
        raise ErrorParticionNula(ERROR_PARTICION_NULA.format(n))
    return np.exp(columna - log_total)


def probabilidad_evento(tablas: TablasEscalera, n: int, n_saltos: int) -> float:
    """P_n(E_{n,N}) = sum_{N' >= N} G_{N',n} / Z_n, con Z_n de la recursión directa."""
    validar_extremo(tablas, n)
    if tablas.log_Z[n] == LOG_CERO:
        raise ErrorParticionNula(ERROR_PARTICION_NULA.format(n))
    if n_saltos <= 1:
        return 1.0
    if n_saltos > min(n, tablas.n_max):
        return 0.0
    return float(np.exp(evento_restringido(tablas, n, n_saltos) - tablas.log_Z[n]))


def log_probabilidades_evento(tablas: TablasEscalera) -> Tuple[np.ndarray, np.ndarray]:
    """
    Matriz log P_n(E_{n,N}) para N = 0..N_max, n = 0..L, y masa truncada por n.

    La masa truncada es 1 - sum_{N <= N_max} G_{N,n} / Z_n (recortada a >= 0):
    lo que la escalera no ve por encima de N_max.
    """
    colas = log_acumulada(tablas.log_G, axis=0, inversa=True)
    with np.errstate(invalid="ignore"):
        log_prob = colas - tablas.log_Z[np.newaxis, :]
    log_prob[:, tablas.log_Z == LOG_CERO] = LOG_CERO
    with np.errstate(invalid="ignore", over="ignore"):
        masa_vista = np.exp(colas[0] - tablas.log_Z)
    truncada = np.clip(1.0 - np.nan_to_num(masa_vista, nan=1.0), 0.0, None)
    return log_prob, truncada
