"""
Muestreo exacto de configuraciones de contactos bajo P_n^{beta,h,omega}.

Descomposición hacia atrás: desde el extremo n, el contacto anterior j se
elige con probabilidad Z_j e^{beta omega_j - h} K(n - j) / Z_n, y se itera
hasta llegar a 0. No hay cadena de Markov: cada camino es una muestra exacta.
"""

import logging
from collections import Counter
from typing import Iterable, List, Optional, Union

import numpy as np

from core.config.constants import LOG_CERO
from core.config.errors import (
    ERROR_HORIZONTE_TABLAS,
    ERROR_N_MEZCLADOS,
    ERROR_PARTICION_NULA,
    ERROR_SIN_CAMINOS,
    ErrorHorizonte,
    ErrorMuestras,
    ErrorParticionNula,
)
from models.camino import CaminoContactos, EstadisticasContactos
from models.entorno import Entorno, ParametrosModelo
from models.ley_renovacion import LeyRenovacion
from models.tablas import TablasEscalera
from services.generador import GeneradorXoshiro, flujos_independientes
from services.motor_particion import recursion_restringida

logger = logging.getLogger(__name__)


class MuestreadorGibbs:
    """
    Muestreador hacia atrás sobre log Z_0..Z_L.

    Solo necesita la función de partición restringida: acepta unas tablas de
    la escalera o directamente el vector de calcular_restringida (O(L^2)),
    sin construir la escalera. Precalcula log b_j = log Z_j + beta omega_j - h
    una sola vez y no modifica sus entradas, así que varios muestreadores
    pueden compartirlas.
    """

    def __init__(
        self,
        particion: Union[TablasEscalera, np.ndarray],
        entorno: Entorno,
        ley: LeyRenovacion,
        parametros: ParametrosModelo,
    ):
        self.log_Z = particion.log_Z if isinstance(particion, TablasEscalera) else np.asarray(particion, dtype=float)
        self.horizonte = self.log_Z.size - 1
        self.ley = ley
        potenciales = parametros.potenciales(entorno.cargas[: self.horizonte])
        self._log_b = self.log_Z[: self.horizonte] + potenciales
        self._log_masas = ley.log_masas

    def _pesos_anteriores(self, n: int) -> np.ndarray:
        """Probabilidades del contacto anterior j = 0..n-1 dado un contacto en n."""
        log_pesos = self._log_b[:n] + self._log_masas[n:0:-1]
        maximo = log_pesos.max()
        pesos = np.exp(log_pesos - maximo)
        return pesos / pesos.sum()

    def _comprobar(self, n: int) -> None:
        if not 1 <= n <= self.horizonte:
            raise ErrorHorizonte(ERROR_HORIZONTE_TABLAS.format(n, self.horizonte))
        if self.log_Z[n] == LOG_CERO:
            raise ErrorParticionNula(ERROR_PARTICION_NULA.format(n))

    def muestrear(self, n: int, generador: GeneradorXoshiro) -> CaminoContactos:
        """Un camino; consume una uniforme por salto."""
        self._comprobar(n)
        puntos = [n]
        actual = n
        while actual > 0:
            acumulada = np.cumsum(self._pesos_anteriores(actual))
            u = generador.uniforme() * acumulada[-1]
            actual = min(int(np.searchsorted(acumulada, u, side="right")), actual - 1)
            puntos.append(actual)
        return CaminoContactos(puntos=puntos[::-1])

    def muestrear_lote(self, n: int, cantidad: int, generador: GeneradorXoshiro) -> List[CaminoContactos]:
        """
        Varios caminos a la vez: las CDF de cada posición se calculan una vez
        y se reutilizan en todos los caminos que pasan por ella.
        """
        self._comprobar(n)
        cdfs = {}
        caminos = []
        for _ in range(cantidad):
            puntos = [n]
            actual = n
            while actual > 0:
                if actual not in cdfs:
                    cdfs[actual] = np.cumsum(self._pesos_anteriores(actual))
                acumulada = cdfs[actual]
                u = generador.uniforme() * acumulada[-1]
                actual = min(int(np.searchsorted(acumulada, u, side="right")), actual - 1)
                puntos.append(actual)
            caminos.append(CaminoContactos(puntos=puntos[::-1]))
        return caminos


def muestrear_camino(
    tablas: Union[TablasEscalera, np.ndarray],
    entorno: Entorno,
    ley: LeyRenovacion,
    parametros: ParametrosModelo,
    n: int,
    generador: GeneradorXoshiro,
) -> CaminoContactos:
    """
    Un camino exacto bajo P_n; determinista dado el estado del generador.

    Raises:
        ErrorParticionNula: Z_n = 0 (p. ej. n impar con la ley SRW)
        ErrorHorizonte: n fuera de las tablas
    """
    return MuestreadorGibbs(tablas, entorno, ley, parametros).muestrear(n, generador)


def muestrear_caminos(
    tablas: Union[TablasEscalera, np.ndarray],
    entorno: Entorno,
    ley: LeyRenovacion,
    parametros: ParametrosModelo,
    n: int,
    cantidad: int,
    semilla: int,
    lotes: int = 1,
) -> List[CaminoContactos]:
    """
    `cantidad` caminos repartidos en `lotes` flujos sembrados de forma
    independiente a partir de `semilla` (un flujo por lote). `tablas` puede
    ser el vector log Z de calcular_restringida.
    """
    muestreador = MuestreadorGibbs(tablas, entorno, ley, parametros)
    flujos = flujos_independientes(semilla, lotes)
    por_lote = [cantidad // lotes + (1 if i < cantidad % lotes else 0) for i in range(lotes)]
    caminos = []
    for flujo, tam in zip(flujos, por_lote):
        caminos.extend(muestreador.muestrear_lote(n, tam, flujo))
    logger.debug("Muestreados %d caminos en n=%d (%d lotes)", cantidad, n, lotes)
    return caminos


def estadisticas_contactos(caminos: Iterable[CaminoContactos], umbrales: Optional[Iterable[int]] = None) -> EstadisticasContactos:
    """
    Resumen de una colección de caminos con extremo común: media, varianza y
    máximo del número de saltos, P(E_{n,N}) empírica para cada N e histograma
    de longitudes de salto.

    Raises:
        ErrorMuestras: colección vacía o extremos distintos
    """
    caminos = list(caminos)
    if not caminos:
        raise ErrorMuestras(ERROR_SIN_CAMINOS)
    extremos = sorted({c.n for c in caminos})
    if len(extremos) > 1:
        raise ErrorMuestras(ERROR_N_MEZCLADOS.format(extremos))
    n = extremos[0]

    saltos = np.array([c.numero_saltos for c in caminos])
    total = saltos.size
    umbrales = None if umbrales is None else [int(N) for N in umbrales]
    tope = n if umbrales is None else max(umbrales, default=0)
    cuenta = np.bincount(saltos, minlength=max(tope, int(saltos.max())) + 2)
    # al menos N saltos: suma de la cola del histograma de N
    al_menos = np.cumsum(cuenta[::-1])[::-1]
    lista_umbrales = range(1, tope + 1) if umbrales is None else umbrales
    prob_evento = {int(N): float(al_menos[N] / total) for N in lista_umbrales}

    histograma = Counter()
    for c in caminos:
        histograma.update(c.saltos)

    return EstadisticasContactos(
        n=n,
        total_caminos=total,
        media_saltos=float(saltos.mean()),
        varianza_saltos=float(saltos.var()),
        max_saltos=int(saltos.max()),
        prob_evento=prob_evento,
        histograma_saltos={int(k): int(v) for k, v in sorted(histograma.items())},
    )


def marginales_contacto(entorno: Entorno, ley: LeyRenovacion, parametros: ParametrosModelo, n: int) -> np.ndarray:
    """
    P_n(k in tau) exacta para k = 0..n.

    Para cada k se recalcula la función de partición restringida del entorno
    desplazado (cargas omega_k, omega_{k+1}, ...), que ya incluye el peso del
    contacto en k: P_n(k in tau) = Z_k Z'_{n-k} / Z_n. Coste O(n^3).
    """
    potenciales = parametros.potenciales(entorno.cargas[:n])
    log_Z = recursion_restringida(potenciales, ley.log_masas, n)
    if log_Z[n] == LOG_CERO:
        raise ErrorParticionNula(ERROR_PARTICION_NULA.format(n))
    marginales = np.zeros(n + 1)
    marginales[0] = marginales[n] = 1.0
    for k in range(1, n):
        desplazado = recursion_restringida(potenciales[k:], ley.log_masas, n - k)
        marginales[k] = np.exp(log_Z[k] + desplazado[n - k] - log_Z[n])
    return marginales
