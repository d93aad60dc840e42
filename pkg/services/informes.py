"""
Emisión de informes y exportaciones.

- Informes de verificación: <salida>.jsonl (procedencia, un registro por fila,
  resumen) y <salida>.csv con las columnas de esquema_informes.yaml
- Tablas de la escalera: CSV columnar con cabecera de procedencia
- Caminos: una línea de enteros separados por espacios por camino
"""

import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from core.config.config_manager import config
from core.config.constants import ENCODING_DEFAULT, EXTENSION_CSV, EXTENSION_REGISTROS
from models.camino import CaminoContactos
from models.tablas import TablasEscalera
from models.verificacion import InformeVerificacion

logger = logging.getLogger(__name__)


def _a_json(valor):
    """Convierte escalares numpy y no finitos a tipos JSON estables."""
    if isinstance(valor, dict):
        return {str(k): _a_json(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_a_json(v) for v in valor]
    if isinstance(valor, Path):
        return str(valor)
    if isinstance(valor, np.generic):
        valor = valor.item()
    if isinstance(valor, float) and not np.isfinite(valor):
        return str(valor)
    return valor


def columnas_informe(suite: str) -> List[str]:
    """Columnas del CSV de una suite según el esquema; vacío si no está documentada."""
    return list(config.cargar_esquema_informes().get(suite, {}).keys())


def escribir_informe(informe: InformeVerificacion, salida: Union[str, Path]) -> Tuple[Path, Path]:
    """
    Escribe el informe como JSON lines y CSV.

    Args:
        informe: informe de una suite
        salida: ruta base; se le añaden .jsonl y .csv

    Returns:
        (ruta_jsonl, ruta_csv)
    """
    base = Path(salida)
    base.parent.mkdir(parents=True, exist_ok=True)
    ruta_jsonl = base.with_suffix(EXTENSION_REGISTROS)
    ruta_csv = base.with_suffix(EXTENSION_CSV)

    with open(ruta_jsonl, "w", encoding=ENCODING_DEFAULT) as archivo:
        cabecera = {"tipo": "procedencia", "suite": informe.suite, **informe.procedencia}
        archivo.write(json.dumps(_a_json(cabecera), ensure_ascii=False, sort_keys=True) + "\n")
        for registro in informe.registros:
            fila = {"tipo": "registro", "suite": informe.suite, **registro}
            archivo.write(json.dumps(_a_json(fila), ensure_ascii=False, sort_keys=True) + "\n")
        cierre = {
            "tipo": "resumen",
            "suite": informe.suite,
            "veredicto": informe.veredicto,
            "aserciones": informe.aserciones,
            **informe.resumen,
        }
        archivo.write(json.dumps(_a_json(cierre), ensure_ascii=False, sort_keys=True) + "\n")

    df = pd.DataFrame(informe.registros)
    columnas = [c for c in columnas_informe(informe.suite) if c in df.columns]
    if columnas:
        df = df[columnas]
    df.to_csv(ruta_csv, index=False)

    logger.info("Informe %s escrito en %s y %s", informe.suite, ruta_jsonl, ruta_csv)
    return ruta_jsonl, ruta_csv


def tabla_registros(registros: Iterable[dict], suite: Optional[str] = None) -> pd.DataFrame:
    """DataFrame de registros con las columnas del esquema primero."""
    df = pd.DataFrame(list(registros))
    if suite:
        primero = [c for c in columnas_informe(suite) if c in df.columns]
        df = df[primero + [c for c in df.columns if c not in primero]]
    return df


def exportar_tablas(tablas: TablasEscalera, salida: Union[str, Path]) -> Path:
    """
    Exporta las tablas en formato columnar: una fila por (N, n) con log G,
    filas resumen de log Z, log Z_f y log F_N^(L), y una línea de cabecera
    "# procedencia: {...}" antes del CSV.
    """
    ruta = Path(salida).with_suffix(EXTENSION_CSV)
    ruta.parent.mkdir(parents=True, exist_ok=True)

    N, n = np.nonzero(np.isfinite(tablas.log_G))
    filas_G = pd.DataFrame({"tipo": "G", "N": N, "n": n, "log_valor": tablas.log_G[N, n]})
    indices = np.arange(tablas.horizonte + 1)
    filas_Z = pd.DataFrame({"tipo": "Z", "N": -1, "n": indices, "log_valor": tablas.log_Z})
    filas_libre = pd.DataFrame({"tipo": "Z_libre", "N": -1, "n": indices, "log_valor": tablas.log_Z_libre})
    filas_F = pd.DataFrame({
        "tipo": "F",
        "N": np.arange(tablas.n_max + 1),
        "n": tablas.horizonte,
        "log_valor": tablas.log_F_trunc,
    })
    df = pd.concat([filas_Z, filas_libre, filas_F, filas_G], ignore_index=True)

    with open(ruta, "w", encoding=ENCODING_DEFAULT, newline="") as archivo:
        procedencia = json.dumps(_a_json(tablas.procedencia), ensure_ascii=False, sort_keys=True)
        archivo.write(f"# procedencia: {procedencia}\n")
        df.to_csv(archivo, index=False, float_format="%.17g")
    logger.info("Tablas exportadas en %s (%d filas)", ruta, len(df))
    return ruta


def leer_tablas_exportadas(ruta: Union[str, Path]) -> pd.DataFrame:
    """Lee un CSV de exportar_tablas ignorando la cabecera de procedencia."""
    return pd.read_csv(ruta, comment="#")


def exportar_caminos(caminos: Iterable[CaminoContactos], salida: Union[str, Path]) -> Path:
    """Un camino por línea como enteros separados por espacios."""
    ruta = Path(salida)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    with open(ruta, "w", encoding=ENCODING_DEFAULT) as archivo:
        for camino in caminos:
            archivo.write(camino.to_linea() + "\n")
    return ruta


def escribir_registros(registros: Iterable[dict], salida: Union[str, Path]) -> Path:
    """JSON lines genérico (resúmenes de muestreo, estimaciones de fase)."""
    ruta = Path(salida).with_suffix(EXTENSION_REGISTROS)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    with open(ruta, "w", encoding=ENCODING_DEFAULT) as archivo:
        for registro in registros:
            archivo.write(json.dumps(_a_json(registro), ensure_ascii=False, sort_keys=True) + "\n")
    return ruta
