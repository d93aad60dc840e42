"""
Tests para la emisión de informes y exportaciones.
"""

import json

import numpy as np
import pandas as pd
import pytest

from models.camino import CaminoContactos
from models.verificacion import InformeVerificacion
from services.informes import (
    columnas_informe,
    escribir_informe,
    escribir_registros,
    exportar_caminos,
    exportar_tablas,
    leer_tablas_exportadas,
    tabla_registros,
)
from services.motor_particion import calcular_escalera


@pytest.fixture
def informe():
    return InformeVerificacion.desde_aserciones(
        "teorema1",
        {"incrementos_decrecientes": True},
        procedencia={"semillas": [1], "version_motor": "1.0.0"},
        registros=[
            {"semilla": 1, "horizonte": 256, "log_suma_parcial": 0.1, "log_incremento": -3.0,
             "log_suma_escalera": 0.1, "error_intercambio": 0.0, "extra": "no va al csv"},
            {"semilla": 1, "horizonte": 512, "log_suma_parcial": 0.2, "log_incremento": float("-inf"),
             "log_suma_escalera": 0.2, "error_intercambio": 1e-15, "extra": "tampoco"},
        ],
        resumen={"horizontes": [256, 512], "valor_numpy": np.float64(2.5)},
    )


class TestEscribirInforme:

    def test_jsonl(self, tmp_path, informe):
        ruta_jsonl, _ = escribir_informe(informe, tmp_path / "salida" / "t1")
        lineas = [json.loads(l) for l in ruta_jsonl.read_text(encoding="utf-8").splitlines()]
        assert len(lineas) == 4
        assert lineas[0]["tipo"] == "procedencia"
        assert lineas[0]["version_motor"] == "1.0.0"
        assert [l["tipo"] for l in lineas[1:3]] == ["registro", "registro"]
        assert lineas[2]["log_incremento"] == "-inf"
        assert lineas[-1]["tipo"] == "resumen"
        assert lineas[-1]["veredicto"] == "PASS"
        assert lineas[-1]["valor_numpy"] == 2.5

    def test_csv_con_columnas_del_esquema(self, tmp_path, informe):
        _, ruta_csv = escribir_informe(informe, tmp_path / "t1")
        df = pd.read_csv(ruta_csv)
        assert list(df.columns) == columnas_informe("teorema1")
        assert "extra" not in df.columns
        assert len(df) == 2

    def test_suite_sin_esquema(self, tmp_path):
        informe = InformeVerificacion.desde_aserciones("otra", {"a": False}, registros=[{"x": 1}])
        _, ruta_csv = escribir_informe(informe, tmp_path / "otra")
        assert list(pd.read_csv(ruta_csv).columns) == ["x"]

    def test_columnas_esquema(self):
        assert columnas_informe("benchmark") == ["horizonte", "motor", "segundos", "desviacion_max"]
        assert columnas_informe("desconocida") == []

    def test_tabla_registros_ordena_columnas(self):
        df = tabla_registros([{"extra": 1, "f_hat": 0.1, "semilla": 3, "n": 10}], suite="energia_libre")
        assert list(df.columns) == ["semilla", "n", "f_hat", "extra"]


class TestExportaciones:

    def test_tablas(self, tmp_path, entorno_gaussiano, ley_powerlaw, parametros_desordenados):
        tablas = calcular_escalera(entorno_gaussiano, ley_powerlaw, parametros_desordenados, n_max=8, horizonte=16)
        ruta = exportar_tablas(tablas, tmp_path / "tablas")
        assert ruta.suffix == ".csv"
        assert ruta.read_text(encoding="utf-8").startswith("# procedencia: {")

        df = leer_tablas_exportadas(ruta)
        z = df[df["tipo"] == "Z"].sort_values("n")["log_valor"].to_numpy()
        assert np.array_equal(z, tablas.log_Z)
        g = df[(df["tipo"] == "G") & (df["N"] == 3) & (df["n"] == 10)]["log_valor"].item()
        assert g == tablas.log_G[3, 10]
        # solo las entradas finitas de G
        assert (df["tipo"] == "G").sum() == np.isfinite(tablas.log_G).sum()

    def test_caminos(self, tmp_path):
        caminos = [CaminoContactos(puntos=[0, 3, 5]), CaminoContactos(puntos=[0, 5])]
        ruta = exportar_caminos(caminos, tmp_path / "caminos.txt")
        assert ruta.read_text(encoding="utf-8") == "0 3 5\n0 5\n"

    def test_registros(self, tmp_path):
        ruta = escribir_registros([{"n": 4, "f": float("nan")}, {"n": 8, "f": 0.5}], tmp_path / "fase")
        assert ruta.suffix == ".jsonl"
        lineas = [json.loads(l) for l in ruta.read_text(encoding="utf-8").splitlines()]
        assert lineas == [{"f": "nan", "n": 4}, {"f": 0.5, "n": 8}]
