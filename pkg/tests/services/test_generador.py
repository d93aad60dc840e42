"""
Tests para el generador xoshiro256++ / splitmix64.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.generador import GeneradorXoshiro, flujos_independientes, splitmix64


class TestSplitmix64:

    def test_vector_conocido(self):
        # primera salida de splitmix64 con estado 0
        _, salida = splitmix64(0)
        assert salida == 0xE220A8397B1DCDAF

    def test_estado_inicial(self):
        """El estado de xoshiro son las cuatro primeras salidas de splitmix64."""
        estado = 123
        esperado = []
        for _ in range(4):
            estado, salida = splitmix64(estado)
            esperado.append(salida)
        assert GeneradorXoshiro(123).estado == tuple(esperado)


class TestGeneradorXoshiro:

    @given(st.integers(0, 2**64 - 1))
    @settings(max_examples=25, deadline=None)
    def test_palabras_igual_a_siguiente(self, semilla):
        a, b = GeneradorXoshiro(semilla), GeneradorXoshiro(semilla)
        assert [a.siguiente() for _ in range(50)] == b.palabras(50)
        assert a.estado == b.estado

    def test_uniformes_igual_a_uniforme(self):
        a, b = GeneradorXoshiro(77), GeneradorXoshiro(77)
        individuales = np.array([a.uniforme() for _ in range(1000)])
        assert np.array_equal(individuales, b.uniformes(1000))

    def test_uniformes_en_rango(self):
        u = GeneradorXoshiro(5).uniformes(100_000)
        assert u.min() >= 0.0
        assert u.max() < 1.0
        assert abs(u.mean() - 0.5) < 4 * np.sqrt(1 / 12 / u.size)

    def test_palabras_64_bits(self):
        palabras = GeneradorXoshiro(1).palabras(1000)
        assert all(0 <= p < 2**64 for p in palabras)
        assert len(set(palabras)) == 1000

    def test_semilla_invalida(self):
        with pytest.raises(ValueError):
            GeneradorXoshiro(-1)
        with pytest.raises(ValueError):
            GeneradorXoshiro(2**64)

    def test_flujos_independientes(self):
        flujos = flujos_independientes(42, 4)
        primeras = [f.siguiente() for f in flujos]
        assert len(set(primeras)) == 4
        # reproducibles a partir de la misma semilla base
        assert [f.siguiente() for f in flujos_independientes(42, 4)] == primeras
