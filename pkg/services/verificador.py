"""
Suites de verificación de la fase deslocalizada y benchmark de motores.

- teorema1: sumas parciales acotadas de Z_n, incrementos de Cauchy y cruce
  con la escalera; cota de la función de partición libre
- proposicion: decaimiento exponencial de T(N0) = sum_{n<=L} Z_n(E_{n,N0})
- teorema2: cota de P_n(E_{n,N}) y decaimiento de P_n(E_{n, ceil(c log n)})
- benchmark: motor de referencia frente a motor rápido
"""

import logging
import math
import time
from datetime import datetime
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.stats import linregress

from core.config.config_manager import config
from core.config.constants import FAMILIA_SRW, LOG_CERO, MOTOR_RAPIDO, MOTOR_REFERENCIA, VERSION_MOTOR
from core.config.errors import ERROR_GAP_TRUNCAMIENTO, ErrorParametros, ErrorTruncamiento
from models.entorno import Entorno, ParametrosModelo
from models.ley_renovacion import LeyRenovacion
from models.tablas import TablasEscalera
from models.verificacion import ConfigVerificacion, InformeVerificacion
from services.analisis_fase import estimar_hc_biseccion, ventana_por_defecto
from services.entorno import generar_entorno
from services.ley_renovacion import construir_ley
from services.motor_particion import calcular_escalera, calcular_restringida, log_probabilidades_evento
from services.motor_rapido import calcular_restringida_rapida
from utils.logaritmos import error_relativo, log_acumulada, log_suma

logger = logging.getLogger(__name__)


class VerificadorPinning:
    """
    Ejecuta las suites sobre una ConfigVerificacion.

    Construye la ley una vez, resuelve h_c de referencia (0 exacto a beta = 0,
    bisección en otro caso) y genera un entorno de longitud 2 L por semilla:
    los incrementos de Cauchy en L_k = L necesitan Z_n hasta 2 L. Las tablas
    de cada semilla se calculan una vez y se reutilizan entre suites.
    """

    def __init__(self, cfg: ConfigVerificacion):
        """
        Args:
            cfg: configuración validada de la suite
        """
        self.cfg = cfg
        self.parametros_verificacion = config.seccion("verificacion")
        self.tolerancias = config.seccion("tolerancias")
        n_tabla = max(2 * cfg.horizonte, cfg.ley.n_tabla or 0, 2)
        self.ley: LeyRenovacion = construir_ley(cfg.ley.familia, cfg.ley.parametros, n_tabla)
        self.parametros = ParametrosModelo(beta=cfg.beta, h=cfg.h)
        self._hc: Optional[float] = cfg.hc_referencia
        self._entornos: Dict[int, Entorno] = {}
        self._tablas: Dict[int, TablasEscalera] = {}

    # ------------------------------------------------------------------
    # Utilidades comunes
    # ------------------------------------------------------------------

    @property
    def hc_referencia(self) -> float:
        """h_c de referencia: la de la configuración, 0 a beta = 0 o bisección."""
        if self._hc is None:
            if self.cfg.beta == 0:
                self._hc = 0.0
            else:
                tol = config.valor("biseccion", "tolerancia", 1e-3)
                resultado = estimar_hc_biseccion(
                    self.ley, self.cfg.distribucion, self.cfg.beta, self.cfg.semillas, self.cfg.horizonte, tol,
                    motor=self.cfg.motor,
                )
                self._hc = resultado.hc
        return self._hc

    def entorno(self, semilla: int) -> Entorno:
        if semilla not in self._entornos:
            self._entornos[semilla] = generar_entorno(self.cfg.distribucion, semilla, 2 * self.cfg.horizonte)
        return self._entornos[semilla]

    def tablas(self, semilla: int) -> TablasEscalera:
        if semilla not in self._tablas:
            n_max = min(self.cfg.n_max, self.cfg.horizonte)
            self._tablas[semilla] = calcular_escalera(
                self.entorno(semilla), self.ley, self.parametros, n_max, self.cfg.horizonte
            )
        return self._tablas[semilla]

    def procedencia(self) -> dict:
        return {
            "ley": self.ley.to_registro(),
            "distribucion": self.cfg.distribucion,
            "parametros": self.parametros.model_dump(),
            "semillas": list(self.cfg.semillas),
            "checksums_entorno": {str(s): self.entorno(s).checksum for s in self.cfg.semillas},
            "horizonte": self.cfg.horizonte,
            "n_max": self.cfg.n_max,
            "version_motor": VERSION_MOTOR,
            "hc_referencia": self.hc_referencia,
            "fecha": datetime.now().isoformat(timespec="seconds"),
        }

    def _horizontes_cauchy(self) -> List[int]:
        """L_k = 2^k de la configuración con L_k <= L."""
        potencias = self.parametros_verificacion.get("potencias_horizonte", [8, 9, 10, 11, 12])
        return [2**k for k in potencias if 2**k <= self.cfg.horizonte]

    # ------------------------------------------------------------------
    # Teorema de la función de partición acotada
    # ------------------------------------------------------------------

    def teorema1(self) -> InformeVerificacion:
        """
        Por semilla: S_L = sum_{n<=L} Z_n en L = 2^k <= L, incrementos
        S_2L - S_L (con Z_n hasta 2 L por la recursión directa), cruce
        S_L = sum_N F_N^(L) y cota Z_{n,f} <= sum_{n'=n}^{L} Z_n' + R.

        Aserciones: incrementos monótonos decrecientes, intercambio de sumas
        dentro de la misma escalera (1e-12), cruce con la recursión directa
        (1e-10) y cota de la partición libre.
        """
        logger.info("Suite teorema1: beta=%g h=%g ley=%s", self.cfg.beta, self.cfg.h, self.cfg.ley.a_texto())
        tol_intercambio = self.tolerancias.get("intercambio_sumas", 1e-12)
        tol_columnas = self.tolerancias.get("identidad_columnas", 1e-10)
        horizontes = self._horizontes_cauchy()
        if len(horizontes) < 2:
            raise ErrorParametros(f"L = {self.cfg.horizonte} demasiado pequeño para los incrementos de Cauchy")

        registros = []
        aserciones = {"incrementos_decrecientes": True, "intercambio_sumas": True,
                      "identidad_columnas": True, "cota_particion_libre": True}
        sumas_finales = {}
        for semilla in self.cfg.semillas:
            tablas = self.tablas(semilla)
            log_Z = calcular_restringida(self.entorno(semilla), self.ley, self.parametros, 2 * horizontes[-1])
            columnas = tablas.log_sumas_columnas()
            potenciales = self.parametros.potenciales(self.entorno(semilla).cargas[: self.cfg.horizonte])
            incrementos = []
            for L in horizontes:
                log_S = log_suma(log_Z[1: L + 1])
                log_incremento = log_suma(log_Z[L + 1: 2 * L + 1])
                log_escalera = log_suma(tablas.log_F_truncado(L)[1:])
                log_columnas = log_suma(columnas[1: L + 1])
                err_intercambio = error_relativo(log_columnas, log_escalera)
                err_cruce = error_relativo(log_S, log_escalera)
                libre_ok, holgura = self._cota_libre(tablas, potenciales, L)
                incrementos.append(log_incremento)
                aserciones["intercambio_sumas"] &= err_intercambio <= tol_intercambio
                aserciones["identidad_columnas"] &= err_cruce <= tol_columnas
                aserciones["cota_particion_libre"] &= libre_ok
                registros.append({
                    "semilla": semilla,
                    "horizonte": L,
                    "log_suma_parcial": log_S,
                    "log_incremento": log_incremento,
                    "log_suma_escalera": log_escalera,
                    "error_intercambio": err_intercambio,
                    "error_cruce": err_cruce,
                    "log_Z_libre": float(tablas.log_Z_libre[L]),
                    "holgura_libre": holgura,
                })
            decrecientes = all(b <= a + tol_intercambio for a, b in zip(incrementos, incrementos[1:]))
            if not decrecientes:
                logger.warning("Semilla %d: incrementos de Cauchy no decrecientes (¿fase localizada?)", semilla)
            aserciones["incrementos_decrecientes"] &= decrecientes
            sumas_finales[semilla] = float(np.exp(log_suma(tablas.log_Z[1:])))
            logger.debug("Semilla %d: S_L = %.10g", semilla, sumas_finales[semilla])

        aserciones = {k: bool(v) for k, v in aserciones.items()}
        informe = InformeVerificacion.desde_aserciones(
            "teorema1",
            aserciones,
            procedencia=self.procedencia(),
            registros=registros,
            resumen={"suma_total": {str(s): v for s, v in sumas_finales.items()}, "horizontes": horizontes},
        )
        logger.info("Suite teorema1: %s", informe.veredicto)
        return informe

    def _cota_libre(self, tablas: TablasEscalera, potenciales: np.ndarray, n: int) -> Tuple[bool, float]:
        """
        Z_{n,f} <= sum_{n'=n}^{L} Z_n' + R, R = sum_{j<n} Z_j e^{beta omega_j - h} bar_K(L + 1 - j).
        Devuelve (se cumple, holgura relativa).
        """
        L = tablas.horizonte
        log_b = tablas.log_Z[:n] + potenciales[:n]
        log_colas = self.ley.log_colas[L + 1 - np.arange(n)]
        log_resto = log_suma(log_b + log_colas)
        log_cota = np.logaddexp(log_suma(tablas.log_Z[n: L + 1]), log_resto)
        log_libre = tablas.log_Z_libre[n]
        holgura = float(-np.expm1(log_libre - log_cota)) if log_cota > LOG_CERO else 0.0
        return bool(log_libre <= log_cota + 1e-12), holgura

    # ------------------------------------------------------------------
    # Proposición: decaimiento exponencial en N0
    # ------------------------------------------------------------------

    def proposicion(self) -> InformeVerificacion:
        """
        T(N0) = sum_{N >= N0} F_N^(L) para N0 = 1..N_max; ajuste lineal de
        log T sobre la ventana y cota T(N0) <= C_eps e^{-N0 (h - h_c - eps)}.

        Raises:
            ErrorParametros: epsilon >= h - h_c
            ErrorTruncamiento: T no convergido en L sobre la ventana
        """
        hc = self.hc_referencia
        self.cfg.comprobar_epsilon(hc)
        tasa = self.cfg.h - hc - self.cfg.epsilon
        umbral_gap = self.tolerancias.get("gap_truncamiento", 1e-3)
        tol_columnas = self.tolerancias.get("identidad_columnas", 1e-10)
        logger.info("Suite proposicion: tasa objetivo %.4f (h_c = %.4f)", tasa, hc)

        registros = []
        aserciones = {"pendiente": True, "monotonia": True, "n_eps_encontrado": True, "t1_igual_suma": True}
        constantes = {}
        for semilla in self.cfg.semillas:
            tablas = self.tablas(semilla)
            n1, n2 = ventana_por_defecto(tablas.n_max)
            log_T = log_acumulada(tablas.log_F_trunc, axis=0, inversa=True)
            log_T_mitad = log_acumulada(tablas.log_F_truncado(tablas.horizonte // 2), axis=0, inversa=True)

            with np.errstate(invalid="ignore"):
                gaps = -np.expm1(log_T_mitad[n1: n2 + 1] - log_T[n1: n2 + 1])
            peor = int(np.nanargmax(gaps))
            if gaps[peor] > umbral_gap:
                raise ErrorTruncamiento(ERROR_GAP_TRUNCAMIENTO.format(gaps[peor], umbral_gap, n1 + peor))

            ajuste, log_C, n_eps, log_cota = self._constantes_decaimiento(tablas, log_T, tasa)
            encontrado = n_eps <= tablas.n_max

            monotona = bool(np.all(log_T[2:] <= log_T[1:-1]))
            t1_ok = error_relativo(log_T[1], log_suma(tablas.log_Z[1:])) <= tol_columnas

            aserciones["pendiente"] &= ajuste.slope <= -tasa
            aserciones["monotonia"] &= monotona
            aserciones["n_eps_encontrado"] &= encontrado
            aserciones["t1_igual_suma"] &= t1_ok
            constantes[str(semilla)] = {
                "pendiente": float(ajuste.slope),
                "error_pendiente": float(ajuste.stderr),
                "C_eps": float(np.exp(log_C)),
                "N_eps": n_eps if encontrado else None,
                "ventana": [n1, n2],
            }
            for n0 in range(1, tablas.n_max + 1):
                registros.append({
                    "semilla": semilla,
                    "n0": n0,
                    "log_t": float(log_T[n0]),
                    "log_cota": float(log_cota[n0]),
                })
            logger.debug("Semilla %d: pendiente %.4f, N_eps = %s", semilla, ajuste.slope, n_eps)

        aserciones = {k: bool(v) for k, v in aserciones.items()}
        informe = InformeVerificacion.desde_aserciones(
            "proposicion",
            aserciones,
            procedencia=self.procedencia(),
            registros=registros,
            resumen={"tasa_objetivo": tasa, "epsilon": self.cfg.epsilon, "constantes": constantes},
        )
        logger.info("Suite proposicion: %s", informe.veredicto)
        return informe

    @staticmethod
    def _constantes_decaimiento(tablas: TablasEscalera, log_T: np.ndarray, tasa: float):
        """
        Ajuste lineal de log T(N0) en la ventana por defecto. Devuelve
        (ajuste, log C_eps, N_eps, log cota) con C_eps el intercepto y N_eps
        el menor N0 a partir del cual T(N0) <= C_eps e^{-N0 tasa} siempre
        (N_max + 1 si no existe).
        """
        n1, n2 = ventana_por_defecto(tablas.n_max)
        ajuste = linregress(np.arange(n1, n2 + 1), log_T[n1: n2 + 1])
        log_C = float(ajuste.intercept)
        log_cota = log_C - np.arange(tablas.n_max + 1) * tasa
        violaciones = np.flatnonzero(log_T[1:] > log_cota[1:])
        n_eps = int(violaciones[-1] + 2) if violaciones.size else 1
        return ajuste, log_C, n_eps, log_cota

    # ------------------------------------------------------------------
    # Teorema de contactos
    # ------------------------------------------------------------------

    def _serie_contactos(self, log_prob: np.ndarray, c: float, potencias: List[int]) -> List[Tuple[int, int, float]]:
        """(n, ceil(c log n), P_n(E_{n, ceil(c log n)})) en n = 2^k <= L."""
        serie = []
        for k in potencias:
            n = 2**k
            if n > self.cfg.horizonte:
                break
            N = math.ceil(c * math.log(n))
            if N >= log_prob.shape[0]:
                raise ErrorTruncamiento(f"ceil(c log n) = {N} excede N_max = {log_prob.shape[0] - 1}")
            serie.append((n, N, float(np.exp(log_prob[N, n]))))
        return serie

    @staticmethod
    def _cota_contactos(log_prob: np.ndarray, log_K: np.ndarray, validos: np.ndarray,
                        log_C: float, n_eps: int, tasa: float, tolerancia: float = 1e-12) -> bool:
        """P_n(E_{n,N}) <= (C / K(n)) e^{-N tasa} para N_eps <= N <= N_max y todo n válido."""
        N = np.arange(n_eps, log_prob.shape[0])[:, np.newaxis]
        excesos = log_prob[n_eps:][:, validos] - (log_C - log_K[validos] - N * tasa)
        return bool(np.all(excesos <= tolerancia))

    def teorema2(self) -> InformeVerificacion:
        """
        (a) P_n(E_{n,N}) exacta frente a (C_hat/K(n)) e^{-N (h - h_c - eps)}
        para N >= N_eps, con C_eps y N_eps del ajuste de T(N) y
        C_hat = C_eps e^{-(beta omega_0 - h)}; (b) n -> P_n(E_{n, ceil(c log n)})
        decreciente si c supera el umbral (1 + alpha)/(h - h_c); el control
        con c por debajo se tabula sin asertar.

        Raises:
            ErrorTruncamiento: N_max < c log L + margen o masa por encima de N_max
        """
        hc = self.hc_referencia
        self.cfg.comprobar_epsilon(hc)
        tasa = self.cfg.h - hc - self.cfg.epsilon
        margen = self.parametros_verificacion.get("margen_contactos", 8)
        masa_max = self.parametros_verificacion.get("masa_truncada_max", 1e-6)
        cota_final = self.parametros_verificacion.get("cota_prob_final", 1e-3)
        potencias = self.parametros_verificacion.get("potencias_contactos", [6, 7, 8, 9, 10, 11, 12])
        requerido = self.cfg.c * math.log(self.cfg.horizonte) + margen
        if self.cfg.n_max < requerido:
            raise ErrorTruncamiento(f"N_max = {self.cfg.n_max} < c log L + margen = {requerido:.1f}")

        c_estrella = self.cfg.umbral_c(self.ley.alpha, hc)
        supera = self.cfg.c_supera_umbral(self.ley.alpha, hc)
        logger.info("Suite teorema2: c = %g, c* = %s", self.cfg.c, c_estrella)
        if self.ley.familia == FAMILIA_SRW:
            logger.warning("Ley SRW: los n impares tienen Z_n = 0 y se omiten")

        log_K = self.ley.log_masas[: self.cfg.horizonte + 1]

        registros = []
        aserciones = {"cota_uniforme": True, "n_eps_en_rango": True}
        if supera:
            aserciones["decaimiento_contactos"] = True
            aserciones["cota_final_contactos"] = True
        constantes = {}
        series = {}
        for semilla in self.cfg.semillas:
            tablas = self.tablas(semilla)
            log_prob, truncada = log_probabilidades_evento(tablas)
            validos = (tablas.log_Z > LOG_CERO) & (log_K > LOG_CERO)
            validos[0] = False
            if np.max(truncada[validos], initial=0.0) > masa_max:
                raise ErrorTruncamiento(
                    f"Masa por encima de N_max = {tablas.n_max}: {np.max(truncada[validos]):.3e} > {masa_max:.1e}"
                )

            # Z_n >= K(n) e^{beta omega_0 - h} y Z_n(E_{n,N}) <= T(N)
            log_T = log_acumulada(tablas.log_F_trunc, axis=0, inversa=True)
            _, log_C, n_eps, _ = self._constantes_decaimiento(tablas, log_T, tasa)
            log_C_hat = log_C - float(self.parametros.potenciales(self.entorno(semilla).cargas[:1])[0])
            cota_ok = self._cota_contactos(log_prob, log_K, validos, log_C_hat, n_eps, tasa)

            serie = self._serie_contactos(log_prob, self.cfg.c, potencias)
            probs = [p for _, _, p in serie]
            decreciente = all(b < a for a, b in zip(probs, probs[1:]))
            control = []
            if c_estrella is not None:
                c_control = self.parametros_verificacion.get("factor_c_control", 0.5) * c_estrella
                control = self._serie_contactos(log_prob, c_control, potencias)

            aserciones["cota_uniforme"] &= cota_ok
            aserciones["n_eps_en_rango"] &= n_eps <= tablas.n_max // 2
            if supera:
                aserciones["decaimiento_contactos"] &= decreciente
                aserciones["cota_final_contactos"] &= bool(probs) and probs[-1] <= cota_final

            constantes[str(semilla)] = {"C_eps": float(np.exp(log_C)), "C_hat": float(np.exp(log_C_hat)), "N_eps": n_eps}
            series[str(semilla)] = {
                "principal": [{"n": n, "N": M, "prob": p} for n, M, p in serie],
                "control": [{"n": n, "N": M, "prob": p} for n, M, p in control],
            }
            for n, M, p in serie:
                registros.append({
                    "semilla": semilla,
                    "n": n,
                    "n_saltos": M,
                    "prob_evento": p,
                    "cota": float(np.exp(log_C_hat - log_K[n] - M * tasa)) if log_K[n] > LOG_CERO else float("inf"),
                })
            logger.debug("Semilla %d: C_eps = %.4g, C_hat = %.4g, N_eps = %d",
                         semilla, np.exp(log_C), np.exp(log_C_hat), n_eps)

        aserciones = {k: bool(v) for k, v in aserciones.items()}
        informe = InformeVerificacion.desde_aserciones(
            "teorema2",
            aserciones,
            procedencia=self.procedencia(),
            registros=registros,
            resumen={
                "c": self.cfg.c,
                "c_estrella": c_estrella,
                "c_supera_umbral": supera,
                "tasa_objetivo": tasa,
                "constantes": constantes,
                "series": series,
            },
        )
        logger.info("Suite teorema2: %s", informe.veredicto)
        return informe

    # ------------------------------------------------------------------
    # Benchmark
    # ------------------------------------------------------------------

    def benchmark(self) -> InformeVerificacion:
        """
        Tiempos de pared de ambos motores en la rejilla de horizontes,
        desviación máxima del rápido frente a la referencia (aserción 1e-9),
        pendiente log-log del motor de referencia y aceleración frente a la
        extrapolación cuadrática a L = 2^17 (solo informadas).
        """
        seccion = config.seccion("benchmark")
        tol = self.tolerancias.get("motores", 1e-9)
        horizontes = seccion.get("horizontes_referencia", [1024, 2048, 4096, 8192, 16384])
        horizonte_rapido = seccion.get("horizonte_rapido", 131072)
        semillas = seccion.get("semillas", list(range(1, 11)))
        horizonte_desviacion = seccion.get("horizonte_desviacion", 4096)
        semilla_tiempos = self.cfg.semillas[0]
        logger.info("Benchmark: horizontes %s, rápido en L = %d", horizontes, horizonte_rapido)

        ley = construir_ley(self.ley.familia, self.ley.parametros, max(horizonte_rapido, max(horizontes)))
        registros = []
        desviacion_max = 0.0
        tiempos_ref = []
        for L in horizontes:
            entorno = generar_entorno(self.cfg.distribucion, semilla_tiempos, L)
            inicio = time.perf_counter()
            referencia = calcular_restringida(entorno, ley, self.parametros, L)
            t_ref = time.perf_counter() - inicio
            inicio = time.perf_counter()
            rapido = calcular_restringida_rapida(entorno, ley, self.parametros, L)
            t_rap = time.perf_counter() - inicio
            desviacion = float(np.max(error_relativo(rapido, referencia)))
            desviacion_max = max(desviacion_max, desviacion)
            tiempos_ref.append(t_ref)
            registros.append({"horizonte": L, "motor": MOTOR_REFERENCIA, "segundos": t_ref, "desviacion_max": 0.0})
            registros.append({"horizonte": L, "motor": MOTOR_RAPIDO, "segundos": t_rap, "desviacion_max": desviacion})

        for semilla in semillas:
            entorno = generar_entorno(self.cfg.distribucion, semilla, horizonte_desviacion)
            referencia = calcular_restringida(entorno, ley, self.parametros, horizonte_desviacion)
            rapido = calcular_restringida_rapida(entorno, ley, self.parametros, horizonte_desviacion)
            desviacion_max = max(desviacion_max, float(np.max(error_relativo(rapido, referencia))))

        entorno = generar_entorno(self.cfg.distribucion, semilla_tiempos, horizonte_rapido)
        inicio = time.perf_counter()
        _, cota = calcular_restringida_rapida(entorno, ley, self.parametros, horizonte_rapido, devolver_diagnostico=True)
        t_rapido_grande = time.perf_counter() - inicio
        registros.append({"horizonte": horizonte_rapido, "motor": MOTOR_RAPIDO, "segundos": t_rapido_grande,
                          "desviacion_max": float("nan")})

        pendiente = float(linregress(np.log(horizontes), np.log(tiempos_ref)).slope) if len(horizontes) > 1 else float("nan")
        t_extrapolado = tiempos_ref[-1] * (horizonte_rapido / horizontes[-1]) ** 2
        aceleracion = t_extrapolado / t_rapido_grande
        informe = InformeVerificacion.desde_aserciones(
            "benchmark",
            {"desviacion": desviacion_max <= tol},
            procedencia={
                "ley": ley.to_registro(),
                "distribucion": self.cfg.distribucion,
                "parametros": self.parametros.model_dump(),
                "semillas": list(semillas),
                "version_motor": VERSION_MOTOR,
                "fecha": datetime.now().isoformat(timespec="seconds"),
            },
            registros=registros,
            resumen={
                "desviacion_max": desviacion_max,
                "pendiente_referencia": pendiente,
                "segundos_extrapolados": t_extrapolado,
                "segundos_rapido": t_rapido_grande,
                "aceleracion": aceleracion,
                "aceleracion_suficiente": aceleracion >= seccion.get("factor_aceleracion", 10.0),
                "cota_error_rapido": cota,
            },
        )
        logger.info("Benchmark: desviación %.2e, pendiente %.2f, aceleración %.1fx", desviacion_max, pendiente, aceleracion)
        return informe


def verificar_teorema1(cfg: ConfigVerificacion) -> InformeVerificacion:
    """Suite de la función de partición acotada."""
    return VerificadorPinning(cfg).teorema1()


def verificar_proposicion(cfg: ConfigVerificacion) -> InformeVerificacion:
    """Suite del decaimiento exponencial en el número de saltos."""
    return VerificadorPinning(cfg).proposicion()


def verificar_teorema2(cfg: ConfigVerificacion) -> InformeVerificacion:
    """Suite del número logarítmico de contactos."""
    return VerificadorPinning(cfg).teorema2()


def ejecutar_benchmark(cfg: ConfigVerificacion) -> InformeVerificacion:
    """Benchmark de motores."""
    return VerificadorPinning(cfg).benchmark()
