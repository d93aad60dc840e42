"""
Tests para el muestreo exacto hacia atrás y las estadísticas de contactos.
"""

from collections import Counter

import numpy as np
import pytest
from scipy.stats import chisquare

from core.config.errors import ErrorHorizonte, ErrorMuestras, ErrorParticionNula
from models.camino import CaminoContactos
from models.entorno import ParametrosModelo
from services.entorno import generar_entorno
from services.generador import GeneradorXoshiro
from services.ley_renovacion import construir_ley
from services.motor_particion import calcular_escalera, calcular_restringida, distribucion_contactos, probabilidad_evento
from services.muestreador import (
    MuestreadorGibbs,
    estadisticas_contactos,
    marginales_contacto,
    muestrear_camino,
    muestrear_caminos,
)


def _agrupar(observados, esperados, minimo=5.0):
    """Funde las celdas con esperado < minimo en una sola para el chi-cuadrado."""
    observados = np.asarray(observados, dtype=float)
    esperados = np.asarray(esperados, dtype=float)
    pequenas = esperados < minimo
    if not pequenas.any():
        return observados, esperados
    return (
        np.append(observados[~pequenas], observados[pequenas].sum()),
        np.append(esperados[~pequenas], esperados[pequenas].sum()),
    )


@pytest.fixture
def tablas_pequenas(entorno_gaussiano, ley_powerlaw, parametros_desordenados):
    return calcular_escalera(entorno_gaussiano, ley_powerlaw, parametros_desordenados, n_max=64, horizonte=64)


class TestMuestrearCamino:

    def test_n_uno(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        generador = GeneradorXoshiro(1)
        for _ in range(20):
            camino = muestrear_camino(tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 1, generador)
            assert camino.puntos == [0, 1]

    def test_determinismo(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        argumentos = (tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 40)
        a = muestrear_camino(*argumentos, GeneradorXoshiro(17))
        b = muestrear_camino(*argumentos, GeneradorXoshiro(17))
        assert a == b

    def test_camino_valido(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        generador = GeneradorXoshiro(2)
        for _ in range(50):
            camino = muestrear_camino(tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 64, generador)
            assert camino.puntos[0] == 0
            assert camino.n == 64
            assert all(s >= 1 for s in camino.saltos)
            assert camino.numero_saltos == len(camino.puntos) - 1

    def test_lote_igual_a_sucesivos(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        muestreador = MuestreadorGibbs(tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados)
        uno_a_uno = GeneradorXoshiro(5)
        sucesivos = [muestreador.muestrear(30, uno_a_uno) for _ in range(100)]
        assert muestreador.muestrear_lote(30, 100, GeneradorXoshiro(5)) == sucesivos

    def test_solo_particion_restringida(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        """El vector log Z de la recursión directa basta: mismos caminos que con la escalera."""
        log_Z = calcular_restringida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, tablas_pequenas.horizonte)
        argumentos = (entorno_gaussiano, ley_powerlaw, parametros_desordenados, 40, 200)
        desde_tablas = muestrear_caminos(tablas_pequenas, *argumentos, semilla=3, lotes=2)
        desde_vector = muestrear_caminos(log_Z, *argumentos, semilla=3, lotes=2)
        assert desde_vector == desde_tablas
        with pytest.raises(ErrorHorizonte):
            MuestreadorGibbs(log_Z[:10], entorno_gaussiano, ley_powerlaw, parametros_desordenados).muestrear(
                10, GeneradorXoshiro(1)
            )

    def test_srw_impar(self, ley_srw, entorno_gaussiano, parametros_desordenados):
        tablas = calcular_escalera(entorno_gaussiano, ley_srw, parametros_desordenados, n_max=16, horizonte=16)
        with pytest.raises(ErrorParticionNula):
            muestrear_camino(tablas, entorno_gaussiano, ley_srw, parametros_desordenados, 7, GeneradorXoshiro(1))
        camino = muestrear_camino(tablas, entorno_gaussiano, ley_srw, parametros_desordenados, 8, GeneradorXoshiro(1))
        assert all(s % 2 == 0 for s in camino.saltos)

    def test_extremo_fuera_de_tablas(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        with pytest.raises(ErrorHorizonte):
            muestrear_camino(tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 65, GeneradorXoshiro(1))
        with pytest.raises(ErrorHorizonte):
            muestrear_camino(tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 0, GeneradorXoshiro(1))


class TestExactitud:
    """Las frecuencias empíricas reproducen los pesos de Gibbs."""

    def test_histograma_saltos_n8(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        cantidad = 100_000
        caminos = muestrear_caminos(
            tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, 8, cantidad, semilla=2024
        )
        saltos = np.array([c.numero_saltos for c in caminos])
        observados = np.bincount(saltos, minlength=9)[1:]
        esperados = distribucion_contactos(tablas_pequenas, 8)[1:] * cantidad
        assert chisquare(*_agrupar(observados, esperados)).pvalue > 0.001

    @pytest.mark.parametrize("n,cantidad,tolerancia", [
        (6, 50_000, 0.02),
        pytest.param(8, 1_000_000, 0.01, marks=pytest.mark.lento),
    ])
    def test_distribucion_caminos_enumerada(self, entorno_gaussiano, ley_powerlaw, parametros_desordenados, oraculo,
                                            n, cantidad, tolerancia):
        tablas = calcular_escalera(entorno_gaussiano, ley_powerlaw, parametros_desordenados, n_max=n, horizonte=n)
        caminos = muestrear_caminos(tablas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, n, cantidad, semilla=8)
        frecuencias = Counter(tuple(c.puntos) for c in caminos)

        pesos = dict(oraculo(ley_powerlaw, entorno_gaussiano, parametros_desordenados).configuraciones(n))
        total = sum(pesos.values())
        assert set(frecuencias) <= set(pesos)
        claves = sorted(pesos)
        observados = [frecuencias.get(k, 0) for k in claves]
        esperados = [pesos[k] / total * cantidad for k in claves]
        assert chisquare(*_agrupar(observados, esperados)).pvalue > 0.001

        variacion_total = 0.5 * sum(abs(frecuencias.get(k, 0) / cantidad - pesos[k] / total) for k in claves)
        assert variacion_total <= tolerancia

    def test_geometrica_primer_salto(self):
        """beta = h = 0: los sitios son Bernoulli(p) independientes; P(1 in tau | n in tau) = p."""
        p, n, cantidad = 0.3, 20, 20_000
        ley = construir_ley("Geometric", {"p": p}, n_tabla=n)
        entorno = generar_entorno("Rademacher", 4, n)
        modelo = ParametrosModelo(beta=0.0, h=0.0)
        tablas = calcular_escalera(entorno, ley, modelo, n_max=4, horizonte=n)
        caminos = muestrear_caminos(tablas, entorno, ley, modelo, n, cantidad, semilla=77)
        frecuencia = np.mean([c.saltos[0] == 1 for c in caminos])
        assert abs(frecuencia - p) <= 3 * np.sqrt(p * (1 - p) / cantidad)
        # número medio de saltos: 1 + (n - 1) p
        media = np.mean([c.numero_saltos for c in caminos])
        assert media == pytest.approx(1 + (n - 1) * p, abs=0.1)

    def test_marginales_exactas(self, entorno_gaussiano, ley_powerlaw, parametros_desordenados, oraculo):
        n = 8
        marginales = marginales_contacto(entorno_gaussiano, ley_powerlaw, parametros_desordenados, n)
        configuraciones = list(oraculo(ley_powerlaw, entorno_gaussiano, parametros_desordenados).configuraciones(n))
        total = sum(peso for _, peso in configuraciones)
        for k in range(n + 1):
            esperado = sum(peso for puntos, peso in configuraciones if k in puntos) / total
            assert marginales[k] == pytest.approx(esperado, rel=1e-10, abs=1e-14)

    def test_marginales_empiricas(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        n, cantidad = 32, 20_000
        marginales = marginales_contacto(entorno_gaussiano, ley_powerlaw, parametros_desordenados, n)
        caminos = muestrear_caminos(
            tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, n, cantidad, semilla=3, lotes=4
        )
        cuenta = np.zeros(n + 1)
        for camino in caminos:
            cuenta[camino.puntos] += 1
        empiricas = cuenta / cantidad
        sigma = np.sqrt(marginales * (1 - marginales) / cantidad)
        assert np.all(np.abs(empiricas - marginales) <= 4 * sigma + 1e-12)


class TestEstadisticasContactos:

    def test_camino_unico(self):
        estadisticas = estadisticas_contactos([CaminoContactos(puntos=[0, 10])])
        assert estadisticas.media_saltos == 1.0
        assert estadisticas.prob_evento[1] == 1.0
        assert estadisticas.prob_evento[2] == 0.0
        assert estadisticas.histograma_saltos == {10: 1}

    def test_caminos_identicos(self):
        caminos = [CaminoContactos(puntos=[0, 2, 5, 6])] * 10
        estadisticas = estadisticas_contactos(caminos)
        assert estadisticas.varianza_saltos == 0.0
        assert estadisticas.max_saltos == 3
        assert estadisticas.histograma_saltos == {1: 10, 2: 10, 3: 10}

    def test_umbrales_explicitos(self):
        caminos = [CaminoContactos(puntos=[0, 3]), CaminoContactos(puntos=[0, 1, 3])]
        estadisticas = estadisticas_contactos(caminos, umbrales=[1, 2, 3])
        assert estadisticas.prob_evento == {1: 1.0, 2: 0.5, 3: 0.0}

    def test_umbrales_vacios(self):
        estadisticas = estadisticas_contactos([CaminoContactos(puntos=[0, 3])], umbrales=[])
        assert estadisticas.prob_evento == {}
        assert estadisticas.media_saltos == 1.0

    def test_umbrales_generador(self):
        caminos = [CaminoContactos(puntos=[0, 3]), CaminoContactos(puntos=[0, 1, 3])]
        estadisticas = estadisticas_contactos(caminos, umbrales=(N for N in (1, 2)))
        assert estadisticas.prob_evento == {1: 1.0, 2: 0.5}

    def test_coleccion_vacia(self):
        with pytest.raises(ErrorMuestras):
            estadisticas_contactos([])

    def test_extremos_mezclados(self):
        with pytest.raises(ErrorMuestras, match="extremos distintos"):
            estadisticas_contactos([CaminoContactos(puntos=[0, 4]), CaminoContactos(puntos=[0, 5])])

    def test_eventos_n64(self, tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        n, cantidad = 64, 100_000
        caminos = muestrear_caminos(
            tablas_pequenas, entorno_gaussiano, ley_powerlaw, parametros_desordenados, n, cantidad, semilla=64, lotes=8
        )
        estadisticas = estadisticas_contactos(caminos, umbrales=[2, 5, 10, 20, 30])
        for N, empirica in estadisticas.prob_evento.items():
            exacta = probabilidad_evento(tablas_pequenas, n, N)
            sigma = np.sqrt(exacta * (1 - exacta) / cantidad)
            assert abs(empirica - exacta) <= 4 * sigma + 1e-12


class TestCaminoContactos:

    def test_validacion(self):
        with pytest.raises(ValueError):
            CaminoContactos(puntos=[1, 3])
        with pytest.raises(ValueError):
            CaminoContactos(puntos=[0, 3, 3])
        with pytest.raises(ValueError):
            CaminoContactos(puntos=[0])

    def test_linea(self):
        assert CaminoContactos(puntos=[0, 2, 7]).to_linea() == "0 2 7"
