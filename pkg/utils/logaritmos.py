"""
Aritmética en dominio logarítmico.

Todas las masas del modelo se acumulan como logaritmos; log(0) se representa
con LOG_CERO (-inf), que actúa como elemento neutro de la suma.
"""

import warnings

import numpy as np
from scipy.special import logsumexp

from core.config.constants import LOG_CERO


def log_suma(valores, axis=None):
    """
    log(sum(exp(valores))) estable; devuelve LOG_CERO si todos son LOG_CERO.
    """
    valores = np.asarray(valores, dtype=float)
    if valores.size == 0:
        return LOG_CERO
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        resultado = logsumexp(valores, axis=axis)
    if np.ndim(resultado) == 0:
        return LOG_CERO if np.isnan(resultado) else float(resultado)
    return np.where(np.isnan(resultado), LOG_CERO, resultado)


def log_resta(log_a: float, log_b: float) -> float:
    """log(e^a - e^b) para a >= b; LOG_CERO si son iguales."""
    if log_b == LOG_CERO:
        return log_a
    if log_b >= log_a:
        return LOG_CERO
    return log_a + float(np.log1p(-np.exp(log_b - log_a)))


def log_acumulada(valores: np.ndarray, axis: int = 0, inversa: bool = False) -> np.ndarray:
    """
    Sumas acumuladas en dominio log a lo largo de un eje.

    Con inversa=True acumula desde el final (sumas de cola).
    """
    valores = np.asarray(valores, dtype=float)
    if inversa:
        valores = np.flip(valores, axis=axis)
    acumulada = np.logaddexp.accumulate(valores, axis=axis)
    if inversa:
        acumulada = np.flip(acumulada, axis=axis)
    return acumulada


def log_convolucion(log_a: np.ndarray, log_b: np.ndarray, longitud: int, bloque: int = 256) -> np.ndarray:
    """
    Convolución directa c[k] = sum_i a[i] b[k - i], k < longitud, en dominio log.

    Cada salida es un log-sum-exp de sus propios términos (sin FFT ni
    reescalado común), así que toda entrada conserva precisión relativa
    completa aunque los factores abarquen miles de órdenes de magnitud. Las
    salidas se procesan por bloques de filas para acotar la memoria.
    """
    log_a = np.asarray(log_a, dtype=float)
    log_b = np.asarray(log_b, dtype=float)
    salida = np.full(longitud, LOG_CERO)
    finitos = np.flatnonzero(log_a > LOG_CERO)
    if finitos.size == 0 or not np.any(log_b > LOG_CERO):
        return salida
    primero, ultimo = int(finitos[0]), int(finitos[-1]) + 1
    for inicio in range(primero, longitud, bloque):
        fin = min(inicio + bloque, longitud)
        j = np.arange(primero, min(ultimo, fin))
        k = np.arange(inicio, fin)
        desfase = k[:, np.newaxis] - j[np.newaxis, :]
        validos = (desfase >= 0) & (desfase < log_b.size)
        terminos = np.where(validos, log_a[j][np.newaxis, :] + log_b[np.clip(desfase, 0, log_b.size - 1)], LOG_CERO)
        salida[inicio:fin] = log_suma(terminos, axis=1)
    return salida


def error_relativo(log_x, log_y):
    """
    |x/y - 1| a partir de logaritmos; 0 si ambos son cero, inf si solo uno.
    """
    log_x = np.asarray(log_x, dtype=float)
    log_y = np.asarray(log_y, dtype=float)
    ambos_cero = (log_x == LOG_CERO) & (log_y == LOG_CERO)
    with np.errstate(invalid="ignore", over="ignore"):
        err = np.abs(np.expm1(log_x - log_y))
    err = np.where(ambos_cero, 0.0, err)
    err = np.where(np.isnan(err), np.inf, err)
    return float(err) if err.ndim == 0 else err
