"""
Motor rápido de Z_n: convolución en línea por bloques diádicos.

Para cada tamaño s = 2^k, cuando se completa el bloque alineado
b[t - s .. t) de b_j = Z_j e^{beta omega_j - h}, su convolución con el
segmento K[s .. 2s) se suma a las salidas n en [t, t + 2s - 1). Cada par
(j, m = n - j) cae en exactamente un bloque (el de s = 2^floor(log2 m)), y
ese bloque está completo antes de que se cierre Z_n, así que la recursión es
exacta. Coste O(L log^2 L).

Dentro de cada bloque los factores se reescalan por su máximo (no se usa
aritmética logarítmica dentro de la transformada) y, en los bloques FFT, se
inclinan por la tasa de decaimiento del segmento de K. Los bloques pequeños se
convolucionan de forma directa; los grandes con FFT, anulando los valores por
debajo del ruido de redondeo y acumulando esa cota de error por salida.
"""

import logging
from typing import Tuple, Union

import numpy as np
from scipy.signal import fftconvolve

from core.config.constants import LOG_CERO
from models.entorno import Entorno, ParametrosModelo
from models.ley_renovacion import LeyRenovacion
from services.motor_particion import validar_horizonte

logger = logging.getLogger(__name__)

# Bloques de tamaño <= este umbral se convolucionan de forma directa (exacta)
BLOQUE_DIRECTO_MAX = 32

# Rango de log K en un segmento [s, 2s) por debajo del cual no se inclina:
# cubre las colas polinómicas con alpha <= 3
RANGO_SIN_INCLINAR = float(np.log(16.0))

_EPS = np.finfo(float).eps


def _convolucion_bloque(lin_b: np.ndarray, lin_K: np.ndarray) -> Tuple[np.ndarray, float]:
    """Convolución de dos factores en [0, 1]; devuelve (valores, cota absoluta de error)."""
    if lin_b.size <= BLOQUE_DIRECTO_MAX:
        return np.convolve(lin_b, lin_K), 0.0
    valores = fftconvolve(lin_b, lin_K)
    tam = valores.size
    piso = 2.0 * _EPS * np.log2(tam) * np.sqrt(np.dot(lin_b, lin_b) * np.dot(lin_K, lin_K))
    valores[valores < piso] = 0.0
    return valores, float(piso)


def _inclinacion(segmento: np.ndarray) -> float:
    """
    Tasa de decaimiento exponencial de log K en el segmento (>= 0).

    Bloque y segmento se multiplican por e^{theta i} antes de la FFT y la
    salida por e^{-theta i} después: con núcleos de cola exponencial
    (Geometric) el segmento queda plano y el ruido de la transformada sigue
    siendo relativo a Z_n. Con colas polinómicas devuelve 0.
    """
    finitos = np.flatnonzero(np.isfinite(segmento))
    if finitos.size < 2:
        return 0.0
    primero, ultimo = finitos[0], finitos[-1]
    rango = float(segmento[primero] - segmento[ultimo])
    if rango <= RANGO_SIN_INCLINAR:
        return 0.0
    return rango / (ultimo - primero)


def periodo_ley(ley: LeyRenovacion, horizonte: int) -> int:
    """
    Máximo común divisor del soporte de K en [1, L]: Z_n = 0 si n no es
    múltiplo suyo (2 para la ley SRW, 1 en las demás familias).
    """
    soporte = np.flatnonzero(ley.log_masas[: horizonte + 1] > LOG_CERO)
    if soporte.size == 0:
        return 1
    return int(np.gcd.reduce(soporte))


def calcular_restringida_rapida(
    entorno: Entorno,
    ley: LeyRenovacion,
    parametros: ParametrosModelo,
    horizonte: int,
    devolver_diagnostico: bool = False,
) -> Union[np.ndarray, Tuple[np.ndarray, float]]:
    """
    Mismo contrato que calcular_restringida con coste O(L log^2 L).

    Args:
        devolver_diagnostico: si True devuelve también la mayor cota relativa
            de error de redondeo acumulada por los bloques FFT

    Returns:
        log_Z (n = 0..L), o (log_Z, cota_relativa_max)

    Raises:
        ErrorHorizonte: L excede el entorno o la tabla de la ley
    """
    validar_horizonte(entorno, ley, horizonte)
    potenciales = parametros.potenciales(entorno.cargas[:horizonte])
    log_masas = ley.log_masas
    periodo = periodo_ley(ley, horizonte)

    log_Z = np.full(horizonte + 1, LOG_CERO)
    log_Z[0] = 0.0
    acumulado = np.full(horizonte + 1, LOG_CERO)
    log_error = np.full(horizonte + 1, LOG_CERO)
    log_b = np.full(max(horizonte, 1), LOG_CERO)

    for n in range(horizonte):
        if n > 0:
            log_Z[n] = acumulado[n] if n % periodo == 0 else LOG_CERO
        log_b[n] = log_Z[n] + potenciales[n]

        # s = 1: un único término hacia n + 1
        fin = n + 1
        acumulado[fin] = np.logaddexp(acumulado[fin], log_b[n] + log_masas[1])

        s = 2
        while fin % s == 0 and s <= horizonte:
            inicio = fin - s
            ultimo = min(fin + 2 * s - 2, horizonte)
            cuantos = ultimo - fin + 1
            segmento = log_masas[s: min(2 * s, horizonte + 1)]
            theta = _inclinacion(segmento) if s > BLOQUE_DIRECTO_MAX else 0.0
            bloque = log_b[inicio:fin] + theta * np.arange(s)
            segmento = segmento + theta * np.arange(segmento.size)
            max_b = bloque.max()
            max_K = segmento.max()
            if max_b > LOG_CERO and max_K > LOG_CERO:
                valores, piso = _convolucion_bloque(np.exp(bloque - max_b), np.exp(segmento - max_K))
                escala = (max_b + max_K) - theta * np.arange(cuantos)
                with np.errstate(divide="ignore"):
                    contribucion = np.log(valores[:cuantos]) + escala
                acumulado[fin: ultimo + 1] = np.logaddexp(acumulado[fin: ultimo + 1], contribucion)
                if piso > 0.0:
                    log_error[fin: ultimo + 1] = np.logaddexp(log_error[fin: ultimo + 1], np.log(piso) + escala)
            s *= 2

    if horizonte > 0 and horizonte % periodo == 0:
        log_Z[horizonte] = acumulado[horizonte]

    if not devolver_diagnostico:
        return log_Z

    positivos = log_Z > LOG_CERO
    cota = float(np.max(np.exp(log_error[positivos] - log_Z[positivos]), initial=0.0))
    logger.debug("Motor rápido L=%d: cota relativa de error %.3e", horizonte, cota)
    return log_Z, cota
