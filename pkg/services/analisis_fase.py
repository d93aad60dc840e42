"""
Análisis de fase: energía libre de tamaño finito, dos estimadores de h_c
(bisección sobre el signo de la energía libre y pendiente de la escalera) y
la curva recocida log M(beta).
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import brentq
from scipy.stats import linregress

from core.config.config_manager import config
from core.config.constants import FAMILIA_GEOMETRICA, LOG_CERO, MOTOR_RAPIDO, MOTOR_REFERENCIA
from core.config.errors import (
    ERROR_GAP_TRUNCAMIENTO,
    ERROR_HORIZONTE_TABLAS,
    ERROR_HORQUILLA,
    ERROR_PARTICION_NULA,
    ERROR_SONDA,
    ERROR_TOLERANCIA,
    ERROR_VENTANA,
    ErrorHorizonte,
    ErrorHorquilla,
    ErrorParametros,
    ErrorParticionNula,
    ErrorTruncamiento,
)
from models.entorno import Distribucion, Entorno, ParametrosModelo
from models.fase import EstimacionFase, PasoBiseccion, ResultadoBiseccion, ResultadoPendiente
from models.ley_renovacion import LeyRenovacion
from models.tablas import TablasEscalera
from services.entorno import generar_entorno, log_mgf
from services.motor_particion import calcular_restringida
from services.motor_rapido import calcular_restringida_rapida

logger = logging.getLogger(__name__)


def estimar_energia_libre(log_Z: np.ndarray, n: int) -> float:
    """
    f_hat = (1/n) log Z_n.

    Raises:
        ErrorHorizonte: n fuera de [1, L]
        ErrorParticionNula: Z_n = 0
    """
    horizonte = len(log_Z) - 1
    if not 1 <= n <= horizonte:
        raise ErrorHorizonte(ERROR_HORIZONTE_TABLAS.format(n, horizonte))
    if log_Z[n] == LOG_CERO:
        raise ErrorParticionNula(ERROR_PARTICION_NULA.format(n))
    return float(log_Z[n] / n)


def secuencia_energia_libre(log_Z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Pares (n, f_hat(n)) para los n >= 1 con Z_n > 0, para extrapolar en n."""
    n = np.arange(1, len(log_Z))
    valores = np.asarray(log_Z[1:])
    posibles = valores > LOG_CERO
    return n[posibles], valores[posibles] / n[posibles]


def cota_inferior_energia_libre(ley: LeyRenovacion, entorno: Entorno, parametros: ParametrosModelo, n: int) -> float:
    """(1/n)(log K(n) + beta omega_0 - h): el camino de un único salto."""
    if ley.log_masas[n] == LOG_CERO:
        return LOG_CERO
    return float((ley.log_masas[n] + parametros.beta * entorno.cargas[0] - parametros.h) / n)


def energia_libre_homogenea(ley: LeyRenovacion, h: float) -> float:
    """
    Energía libre del modelo homogéneo (beta = 0): raíz F de
    sum_n K(n) e^{-F n} = e^{h}, y 0 si h >= 0.

    Geometric tiene forma cerrada F = log(p + (1 - p) e^{h}) - h; el resto se
    resuelve con brentq sobre la tabla más la cota de la cola.
    """
    if h >= 0:
        return 0.0
    if ley.familia == FAMILIA_GEOMETRICA:
        p = ley.parametros["p"]
        return float(np.log(p + (1.0 - p) * np.exp(h)) - h)

    n = np.arange(1, ley.n_tabla + 1)
    masas = ley.masas[1:]
    resto = ley.colas[-1]

    def ecuacion(F: float) -> float:
        suma = np.dot(masas, np.exp(-F * n)) + resto * np.exp(-F * (ley.n_tabla + 1))
        return float(np.log(suma) - h)

    return float(brentq(ecuacion, 0.0, 1.0 - h, xtol=1e-14))


def curva_recocida(dist: Union[str, Distribucion], beta: float) -> float:
    """Curva recocida log M(beta) = log E[e^{beta omega}], cota superior de h_c(beta)."""
    return log_mgf(dist, beta)


class EnsambleEntornos:
    """
    Entornos de un conjunto de semillas y evaluación de f_hat(h) sobre ellos.

    Los entornos se generan una sola vez; cada evaluación de h recorre las
    semillas con el motor elegido.
    """

    def __init__(
        self,
        ley: LeyRenovacion,
        dist: Union[str, Distribucion],
        beta: float,
        semillas: Sequence[int],
        horizonte: int,
        motor: str = MOTOR_REFERENCIA,
    ):
        if motor not in (MOTOR_REFERENCIA, MOTOR_RAPIDO):
            raise ErrorParametros(f"Motor desconocido: {motor}")
        self.ley = ley
        self.beta = beta
        self.semillas = list(semillas)
        self.horizonte = horizonte
        self.motor = motor
        self.entornos = {s: generar_entorno(dist, s, horizonte) for s in self.semillas}

    def log_Z(self, semilla: int, h: float) -> np.ndarray:
        parametros = ParametrosModelo(beta=self.beta, h=h)
        entorno = self.entornos[semilla]
        if self.motor == MOTOR_RAPIDO:
            return calcular_restringida_rapida(entorno, self.ley, parametros, self.horizonte)
        return calcular_restringida(entorno, self.ley, parametros, self.horizonte)

    def energias_libres(self, h: float) -> Dict[int, float]:
        """f_hat(h) en el mayor n <= L con Z_n > 0, por semilla."""
        resultado = {}
        for semilla in self.semillas:
            log_Z = self.log_Z(semilla, h)
            n, f = secuencia_energia_libre(log_Z)
            resultado[semilla] = float(f[-1]) if n.size else LOG_CERO
        return resultado


def umbral_biseccion(horizonte: int, factor: Optional[float] = None) -> float:
    """theta(n) = factor log(n) / n, factor 2 por defecto."""
    if factor is None:
        factor = config.valor("biseccion", "factor_umbral", 2.0)
    return factor * np.log(horizonte) / horizonte


def _rango_intercuartilico(valores) -> float:
    q1, q3 = np.percentile(list(valores), [25, 75])
    return float(q3 - q1)


def estimar_hc_biseccion(
    ley: LeyRenovacion,
    dist: Union[str, Distribucion],
    beta: float,
    semillas: Sequence[int],
    horizonte: int,
    tol: float,
    h_min: Optional[float] = None,
    h_max: Optional[float] = None,
    motor: str = MOTOR_REFERENCIA,
) -> ResultadoBiseccion:
    """
    Bisección en h del predicado mediana_semillas f_hat(h) > theta(L).

    El predicado es cierto en la fase localizada (h pequeño) y falso en la
    deslocalizada; f_hat es no creciente en h, así que hay un único cambio.
    Por defecto se busca en [-1, log M(beta) + 1].

    Args:
        tol: semiancho máximo del intervalo devuelto

    Returns:
        ResultadoBiseccion con el punto medio, el semiancho y la traza (h, predicado)

    Raises:
        ErrorParametros: tol <= 0
        ErrorHorquilla: el predicado no cambia entre h_min y h_max
    """
    if not tol > 0:
        raise ErrorParametros(ERROR_TOLERANCIA.format(tol))
    seccion = config.seccion("biseccion")
    bajo = seccion.get("h_min", -1.0) if h_min is None else h_min
    alto = log_mgf(dist, beta) + seccion.get("h_max_extra", 1.0) if h_max is None else h_max
    umbral = umbral_biseccion(horizonte)
    ensamble = EnsambleEntornos(ley, dist, beta, semillas, horizonte, motor)
    traza: List[PasoBiseccion] = []

    def evaluar(h: float) -> bool:
        energias = ensamble.energias_libres(h)
        mediana = float(np.median(list(energias.values())))
        paso = PasoBiseccion(
            h=h,
            mediana_f=mediana,
            umbral=umbral,
            predicado=mediana > umbral,
            dispersion=_rango_intercuartilico(energias.values()),
        )
        traza.append(paso)
        logger.debug("Bisección h=%.6f mediana f=%.3e predicado=%s", h, mediana, paso.predicado)
        return paso.predicado

    en_bajo = evaluar(bajo)
    en_alto = evaluar(alto)
    if not en_bajo or en_alto:
        constante = en_bajo if en_bajo == en_alto else "invertido"
        raise ErrorHorquilla(ERROR_HORQUILLA.format(constante, bajo, alto))

    while (alto - bajo) / 2.0 > tol:
        medio = 0.5 * (bajo + alto)
        if evaluar(medio):
            bajo = medio
        else:
            alto = medio

    hc = 0.5 * (bajo + alto)
    logger.info("h_c estimado por bisección: %.4f ± %.4f (beta=%g, L=%d)", hc, (alto - bajo) / 2, beta, horizonte)
    return ResultadoBiseccion(
        hc=hc,
        semiancho=(alto - bajo) / 2.0,
        horizonte=horizonte,
        semillas=list(semillas),
        traza=traza,
        dispersion=traza[-1].dispersion,
    )


def ventana_por_defecto(n_max: int) -> Tuple[int, int]:
    """[N1, N2] = [20, min(60, N_max / 2)] salvo otra cosa en la configuración."""
    seccion = config.seccion("ajuste_pendiente")
    return int(seccion.get("n1", 20)), min(int(seccion.get("n2", 60)), n_max // 2)


def gaps_truncamiento(tablas: TablasEscalera) -> np.ndarray:
    """1 - F_N^(L/2) / F_N^(L) para N = 0..N_max (0 donde F_N^(L) = 0)."""
    log_F = tablas.log_F_trunc
    log_F_mitad = tablas.log_F_truncado(tablas.horizonte // 2)
    with np.errstate(invalid="ignore"):
        gaps = -np.expm1(log_F_mitad - log_F)
    return np.where(log_F == LOG_CERO, 0.0, gaps)


def estimar_hc_pendiente(
    tablas: TablasEscalera,
    h_sonda: float,
    ventana: Optional[Tuple[int, int]] = None,
    umbral_gap: Optional[float] = None,
) -> ResultadoPendiente:
    """
    h_sonda + pendiente de mínimos cuadrados de log F_N^(L) frente a N.

    La incertidumbre es el error típico de la pendiente (basado en los
    residuos del ajuste).

    Raises:
        ErrorParametros: h_sonda distinto del h de las tablas o ventana fuera de la escalera
        ErrorTruncamiento: gap de truncamiento por encima del umbral en la ventana
    """
    if abs(h_sonda - tablas.parametros.h) > 1e-12:
        raise ErrorParametros(ERROR_SONDA.format(h_sonda, tablas.parametros.h))
    n1, n2 = ventana or ventana_por_defecto(tablas.n_max)
    if not 1 <= n1 < n2 <= tablas.n_max:
        raise ErrorParametros(ERROR_VENTANA.format(n1, n2, tablas.n_max))
    if umbral_gap is None:
        umbral_gap = config.valor("tolerancias", "gap_truncamiento", 1e-3)

    N = np.arange(n1, n2 + 1)
    log_F = tablas.log_F_trunc[n1: n2 + 1]
    gaps = gaps_truncamiento(tablas)[n1: n2 + 1]
    peor = int(np.argmax(gaps))
    if gaps[peor] > umbral_gap or np.any(log_F == LOG_CERO):
        raise ErrorTruncamiento(ERROR_GAP_TRUNCAMIENTO.format(gaps[peor], umbral_gap, n1 + peor))

    ajuste = linregress(N, log_F)
    residuos = log_F - (ajuste.intercept + ajuste.slope * N)
    hc = h_sonda + ajuste.slope
    logger.info("h_c por pendiente: %.4f (sonda %.3f, ventana [%d, %d])", hc, h_sonda, n1, n2)
    return ResultadoPendiente(
        hc=float(hc),
        h_sonda=h_sonda,
        pendiente=float(ajuste.slope),
        ordenada=float(ajuste.intercept),
        incertidumbre=float(ajuste.stderr),
        ventana=(n1, n2),
        residuos=[float(r) for r in residuos],
        gaps={int(k): float(g) for k, g in zip(N, gaps)},
    )


def estimar_fase(
    ley: LeyRenovacion,
    dist: Union[str, Distribucion],
    parametros: ParametrosModelo,
    semillas: Sequence[int],
    horizonte: int,
    motor: str = MOTOR_REFERENCIA,
) -> EstimacionFase:
    """f_hat por semilla en (beta, h) con su cota inferior de un salto."""
    ensamble = EnsambleEntornos(ley, dist, parametros.beta, semillas, horizonte, motor)
    f_hat = {}
    cotas = {}
    for semilla in ensamble.semillas:
        log_Z = ensamble.log_Z(semilla, parametros.h)
        n, f = secuencia_energia_libre(log_Z)
        if n.size == 0:
            raise ErrorParticionNula(ERROR_PARTICION_NULA.format(horizonte))
        f_hat[semilla] = float(f[-1])
        cotas[semilla] = cota_inferior_energia_libre(ley, ensamble.entornos[semilla], parametros, int(n[-1]))

    valores = list(f_hat.values())
    return EstimacionFase(
        beta=parametros.beta,
        h=parametros.h,
        horizonte=horizonte,
        f_hat=f_hat,
        cota_inferior=cotas,
        diagnosticos={
            "mediana_f": float(np.median(valores)),
            "dispersion": _rango_intercuartilico(valores),
            "curva_recocida": curva_recocida(dist, parametros.beta),
        },
    )


def interior_deslocalizado(
    ley: LeyRenovacion,
    dist: Union[str, Distribucion],
    beta: float,
    beta0: float,
    semillas: Sequence[int],
    horizonte: int,
    tol: float,
    motor: str = MOTOR_REFERENCIA,
) -> dict:
    """
    Comprueba que (beta, h = h_c(beta0)) con beta < beta0 está en el interior
    de la fase deslocalizada, por la monotonía estricta de h_c.

    Devuelve la estimación de h_c(beta0), la mediana de f_hat en el punto y
    el veredicto (mediana <= theta(L)).
    """
    if not beta < beta0:
        raise ErrorParametros(f"Se requiere beta < beta0 ({beta} >= {beta0})")
    referencia = estimar_hc_biseccion(ley, dist, beta0, semillas, horizonte, tol, motor=motor)
    ensamble = EnsambleEntornos(ley, dist, beta, semillas, horizonte, motor)
    mediana = float(np.median(list(ensamble.energias_libres(referencia.hc).values())))
    umbral = umbral_biseccion(horizonte)
    return {
        "beta": beta,
        "beta0": beta0,
        "hc_beta0": referencia.hc,
        "semiancho": referencia.semiancho,
        "mediana_f": mediana,
        "umbral": umbral,
        "interior_deslocalizado": mediana <= umbral,
    }
