"""
Tests para el motor rápido: mismo contrato que el motor de referencia.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.config.errors import ErrorHorizonte
from models.entorno import ParametrosModelo
from services.entorno import generar_entorno
from services.ley_renovacion import construir_ley
from services.motor_particion import calcular_restringida
from services.motor_rapido import calcular_restringida_rapida, periodo_ley
from utils.logaritmos import error_relativo


leyes = st.one_of(
    st.builds(lambda a: ("PowerLaw", {"alpha": a}), st.floats(0.3, 2.5)),
    st.builds(lambda p: ("Geometric", {"p": p}), st.floats(0.1, 0.9)),
    st.just(("SimpleRandomWalkReturn", {})),
)


def _desviacion_maxima(log_rapido, log_referencia):
    return float(np.max(error_relativo(log_rapido, log_referencia)))


class TestMotorRapido:

    def test_horizonte_uno(self, ley_powerlaw, entorno_gaussiano, parametros_desordenados):
        rapido = calcular_restringida_rapida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, 1)
        referencia = calcular_restringida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, 1)
        assert np.array_equal(rapido, referencia)

    def test_bloques_directos_exactos(self, ley_powerlaw, entorno_gaussiano, parametros_desordenados):
        """Hasta L = 32 no interviene la FFT."""
        rapido = calcular_restringida_rapida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, 32)
        referencia = calcular_restringida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, 32)
        assert _desviacion_maxima(rapido, referencia) <= 1e-13

    @given(leyes, st.floats(0.0, 1.5), st.floats(-0.5, 1.5), st.integers(0, 2**32), st.integers(2, 700))
    @settings(max_examples=30, deadline=None)
    def test_concordancia_aleatoria(self, familia_parametros, beta, h, semilla, horizonte):
        familia, parametros = familia_parametros
        ley = construir_ley(familia, parametros, n_tabla=horizonte)
        entorno = generar_entorno("StandardGaussian", semilla, horizonte)
        modelo = ParametrosModelo(beta=beta, h=h)
        rapido, cota = calcular_restringida_rapida(entorno, ley, modelo, horizonte, devolver_diagnostico=True)
        referencia = calcular_restringida(entorno, ley, modelo, horizonte)
        assert np.array_equal(np.isfinite(rapido), np.isfinite(referencia))
        assert _desviacion_maxima(rapido, referencia) <= 1e-9
        assert cota <= 1e-9

    def test_srw_impares_exactos(self, ley_srw, entorno_gaussiano, parametros_desordenados):
        rapido = calcular_restringida_rapida(entorno_gaussiano, ley_srw, parametros_desordenados, 256)
        assert np.all(rapido[1::2] == -np.inf)
        assert np.all(np.isfinite(rapido[0::2]))

    def test_geometrica_deslocalizada(self):
        """Núcleo de cola exponencial con Z_n decreciendo exponencialmente."""
        ley = construir_ley("Geometric", {"p": 0.1}, n_tabla=2048)
        entorno = generar_entorno("Rademacher", 3, 2048)
        modelo = ParametrosModelo(beta=0.0, h=1.5)
        rapido = calcular_restringida_rapida(entorno, ley, modelo, 2048)
        referencia = calcular_restringida(entorno, ley, modelo, 2048)
        assert _desviacion_maxima(rapido, referencia) <= 1e-9

    def test_periodo_ley(self, ley_srw, ley_powerlaw, ley_geometrica):
        assert periodo_ley(ley_srw, 256) == 2
        assert periodo_ley(ley_powerlaw, 256) == 1
        assert periodo_ley(ley_geometrica, 256) == 1

    def test_horizonte_excesivo(self, ley_powerlaw, entorno_gaussiano, parametros_desordenados):
        with pytest.raises(ErrorHorizonte):
            calcular_restringida_rapida(entorno_gaussiano, ley_powerlaw, parametros_desordenados, 300)

    @pytest.mark.lento
    @pytest.mark.parametrize("familia,parametros", [("SimpleRandomWalkReturn", {}), ("PowerLaw", {"alpha": 1.5})])
    def test_escala_escritorio(self, familia, parametros):
        ley = construir_ley(familia, parametros, n_tabla=4096)
        modelo = ParametrosModelo(beta=0.5, h=0.5)
        for semilla in range(1, 11):
            entorno = generar_entorno("StandardGaussian", semilla, 4096)
            rapido = calcular_restringida_rapida(entorno, ley, modelo, 4096)
            referencia = calcular_restringida(entorno, ley, modelo, 4096)
            assert _desviacion_maxima(rapido, referencia) <= 1e-9
