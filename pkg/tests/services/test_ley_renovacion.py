"""
Tests para las leyes de renovación.
"""

import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import chisquare

from core.config.errors import ErrorHorizonte, ErrorParametros
from models import ley_renovacion as modelo_ley
from models.ley_renovacion import EspecificacionLey
from services.generador import GeneradorXoshiro
from services.ley_renovacion import (
    cola,
    construir_ley,
    diagnostico_regvar,
    ley_desde_especificacion,
    masa,
    muestrear_salto,
    muestrear_saltos,
)


leyes = st.one_of(
    st.builds(lambda a: ("PowerLaw", {"alpha": a}), st.floats(0.2, 3.0)),
    st.builds(lambda p: ("Geometric", {"p": p}), st.floats(0.05, 0.95)),
    st.just(("SimpleRandomWalkReturn", {})),
)


class TestConstruccionLey:
    """Valores cerrados de las tres familias."""

    def test_geometrica(self):
        ley = construir_ley("Geometric", {"p": 0.5}, n_tabla=64)
        assert masa(ley, 3) == pytest.approx(0.125, rel=1e-14)
        assert cola(ley, 2) == pytest.approx(0.5, rel=1e-14)
        assert cola(ley, 3) == pytest.approx(0.25, rel=1e-14)
        assert not ley.tiene_regvar()

    def test_geometrica_primer_atomo(self):
        ley = construir_ley("Geometric", {"p": 0.3}, n_tabla=16)
        assert masa(ley, 1) == pytest.approx(0.3, rel=1e-14)

    def test_paseo_simple(self):
        ley = construir_ley("SimpleRandomWalkReturn", n_tabla=64)
        assert masa(ley, 2) == pytest.approx(0.5, rel=1e-14)
        assert masa(ley, 4) == pytest.approx(0.125, rel=1e-14)
        assert masa(ley, 3) == 0.0
        assert cola(ley, 3) == pytest.approx(0.5, rel=1e-14)
        assert ley.alpha == 0.5

    def test_paseo_simple_formula_cerrada(self):
        """K(2m) = C(2m, m) 2^-2m / (2m - 1)."""
        from scipy.special import comb

        ley = construir_ley("SimpleRandomWalkReturn", n_tabla=200)
        for m in (1, 2, 5, 17, 50, 100):
            esperado = comb(2 * m, m, exact=True) / 4**m / (2 * m - 1)
            assert masa(ley, 2 * m) == pytest.approx(esperado, rel=1e-12)

    def test_powerlaw_alpha_uno(self):
        ley = construir_ley("PowerLaw", {"alpha": 1.0}, n_tabla=64)
        assert masa(ley, 1) == pytest.approx(6.0 / np.pi**2, rel=1e-12)

    def test_powerlaw_alpha_medio(self):
        ley = construir_ley("PowerLaw", {"alpha": 0.5}, n_tabla=64)
        # normalizador por sumas parciales con corrección integral de la cola
        n = np.arange(1, 10**6 + 1, dtype=float)
        z = np.sum(n ** -1.5) + 2.0 / np.sqrt(10**6 + 0.5)
        assert masa(ley, 2) == pytest.approx(2**-1.5 / z, rel=1e-9)

    def test_cola_uno(self, ley_powerlaw, ley_srw, ley_geometrica):
        for ley in (ley_powerlaw, ley_srw, ley_geometrica):
            assert cola(ley, 1) == 1.0

    def test_parametros_invalidos(self):
        with pytest.raises(ErrorParametros, match="alpha > 0"):
            construir_ley("PowerLaw", {"alpha": 0.0})
        with pytest.raises(ErrorParametros, match="p en"):
            construir_ley("Geometric", {"p": 1.0})
        with pytest.raises(ErrorParametros, match="desconocida"):
            construir_ley("Zipf", {"alpha": 1.0})
        with pytest.raises(ErrorParametros, match="n_tabla"):
            construir_ley("Geometric", {"p": 0.5}, n_tabla=1)

    def test_tabla_menor_que_horizonte(self):
        with pytest.raises(ErrorHorizonte):
            construir_ley("PowerLaw", {"alpha": 1.0}, n_tabla=100, horizonte=200)

    def test_indices_fuera_de_tabla(self, ley_geometrica):
        with pytest.raises(ErrorHorizonte):
            masa(ley_geometrica, 0)
        with pytest.raises(ErrorHorizonte):
            masa(ley_geometrica, ley_geometrica.n_tabla + 1)
        with pytest.raises(ErrorHorizonte):
            cola(ley_geometrica, ley_geometrica.n_tabla + 2)
        assert cola(ley_geometrica, ley_geometrica.n_tabla + 1) > 0

    def test_tablas_inmutables(self, ley_powerlaw):
        with pytest.raises(ValueError):
            ley_powerlaw.masas[1] = 0.0

    def test_logaritmos_geometrica_bajo_subdesbordamiento(self):
        """0.5^1200 no es representable; su logaritmo sí."""
        ley = construir_ley("Geometric", {"p": 0.5}, n_tabla=1200)
        assert ley.masas[1200] == 0.0
        assert ley.log_masas[1200] == pytest.approx(1200 * np.log(0.5), rel=1e-14)
        assert ley.log_colas[1201] == pytest.approx(1200 * np.log(0.5), rel=1e-14)
        assert ley.log_masas[0] == -np.inf

    def test_logaritmos_coinciden_con_tablas(self, ley_powerlaw, ley_srw):
        for ley in (ley_powerlaw, ley_srw):
            with np.errstate(divide="ignore"):
                assert np.array_equal(ley.log_masas, np.log(ley.masas))
                assert np.array_equal(ley.log_colas, np.log(ley.colas))


class TestInvariantesLey:
    """Normalización y consistencia cola/masa para cualquier ley."""

    @given(leyes, st.integers(2, 2000))
    @settings(max_examples=40, deadline=None)
    def test_normalizacion(self, familia_parametros, n_tabla):
        familia, parametros = familia_parametros
        ley = construir_ley(familia, parametros, n_tabla)
        total = ley.masas[1:].sum() + ley.colas[n_tabla + 1]
        assert abs(total - 1.0) <= 1e-12

    @given(leyes)
    @settings(max_examples=30, deadline=None)
    def test_consistencia_cola_masa(self, familia_parametros):
        familia, parametros = familia_parametros
        ley = construir_ley(familia, parametros, 512)
        m = np.arange(1, ley.n_tabla + 1)
        assert np.array_equal(ley.colas[m] - ley.colas[m + 1], ley.masas[m])

    def test_diagnostico_regvar(self):
        ley = construir_ley("PowerLaw", {"alpha": 1.5}, n_tabla=2**14)
        filas = diagnostico_regvar(ley)
        desviaciones = [f["desviacion"] for f in filas]
        assert [f["n"] for f in filas] == [2**6, 2**8, 2**10, 2**12, 2**14]
        assert all(b <= a for a, b in zip(desviaciones, desviaciones[1:]))
        assert desviaciones[-1] <= 0.05

    def test_diagnostico_regvar_sin_alpha(self, ley_geometrica):
        assert diagnostico_regvar(ley_geometrica) == []


class TestMuestreoSaltos:
    """Muestreo por CDF inversa con recurso a la cola analítica."""

    def test_determinismo(self, ley_powerlaw):
        primero, segundo = GeneradorXoshiro(42), GeneradorXoshiro(42)
        a = [muestrear_salto(ley_powerlaw, primero) for _ in range(200)]
        b = [muestrear_salto(ley_powerlaw, segundo) for _ in range(200)]
        assert a == b

    def test_lote_igual_a_uno_a_uno(self, ley_powerlaw):
        uno_a_uno = GeneradorXoshiro(9)
        individuales = [muestrear_salto(ley_powerlaw, uno_a_uno) for _ in range(500)]
        lote = muestrear_saltos(ley_powerlaw, GeneradorXoshiro(9), 500)
        assert list(lote) == individuales

    def test_geometrica_degenerada(self):
        ley = construir_ley("Geometric", {"p": 1 - 1e-6}, n_tabla=16)
        saltos = muestrear_saltos(ley, GeneradorXoshiro(3), 10_000)
        assert np.mean(saltos == 1) >= 1 - 1e-3

    def test_cola_fuera_de_tabla(self):
        """Con una tabla corta los saltos largos salen de la cola analítica."""
        ley = construir_ley("PowerLaw", {"alpha": 1.0}, n_tabla=8)
        saltos = muestrear_saltos(ley, GeneradorXoshiro(5), 5000)
        assert saltos.min() >= 1
        assert np.any(saltos > 8)
        # P(tau_1 > 8) = bar_K(9)
        frecuencia = np.mean(saltos > 8)
        p = ley.colas[9]
        assert abs(frecuencia - p) <= 4 * np.sqrt(p * (1 - p) / saltos.size)

    def test_frecuencia_salto_dos_srw(self, ley_srw):
        saltos = muestrear_saltos(ley_srw, GeneradorXoshiro(11), 200_000)
        assert np.all(saltos % 2 == 0)
        assert abs(np.mean(saltos == 2) - 0.5) <= 3 * np.sqrt(0.25 / saltos.size)

    def test_chi_cuadrado(self):
        ley = construir_ley("PowerLaw", {"alpha": 1.0}, n_tabla=256)
        cantidad = 200_000
        saltos = muestrear_saltos(ley, GeneradorXoshiro(2024), cantidad)
        observados = np.bincount(np.minimum(saltos, 51), minlength=52)[1:]
        esperados = np.append(ley.masas[1:51], ley.colas[51]) * cantidad
        assert chisquare(observados, esperados).pvalue > 0.001


class TestEspecificacionLey:

    def test_desde_texto(self):
        espec = EspecificacionLey.desde_texto("PowerLaw:alpha=1.5")
        assert espec.familia == "PowerLaw"
        assert espec.parametros == {"alpha": 1.5}
        assert EspecificacionLey.desde_texto(espec.a_texto()) == espec

    def test_familia_desconocida(self):
        with pytest.raises(ValueError):
            EspecificacionLey.desde_texto("Cauchy:alpha=1")

    def test_registro(self):
        ley = ley_desde_especificacion(EspecificacionLey.desde_texto("Geometric:p=0.25"), n_tabla=32)
        registro = ley.to_registro()
        assert registro["familia"] == "Geometric"
        assert registro["n_tabla"] == 32
        assert registro["viola_regvar"] is True
        assert len(registro["checksum_masas"]) == 16
        # mismo contenido, mismo checksum
        assert construir_ley("Geometric", {"p": 0.25}, 32).checksum == ley.checksum

    def test_checksum_una_vez(self, monkeypatch, caplog):
        llamadas = []
        original = modelo_ley.checksum_array
        monkeypatch.setattr(modelo_ley, "checksum_array", lambda v: llamadas.append(1) or original(v))
        caplog.set_level(logging.INFO, logger="services.ley_renovacion")
        ley = construir_ley("PowerLaw", {"alpha": 1.5}, n_tabla=1024)
        assert llamadas == []
        assert ley.checksum == ley.to_registro()["checksum_masas"] == ley.checksum
        assert len(llamadas) == 1
