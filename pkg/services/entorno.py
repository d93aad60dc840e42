"""
Entornos de cargas omega: generación sembrada, función generatriz y persistencia.

Formato binario PINENV1 (little-endian):
    magia "PINENV1" (7 bytes) | etiqueta de distribución (1 byte) |
    semilla (8 bytes) | longitud (8 bytes) | cargas (8 bytes IEEE cada una) |
    checksum FNV-1a 64 de las cargas (8 bytes)
"""

import logging
import struct
from pathlib import Path
from typing import Union

import numpy as np

from core.config.constants import (
    DIST_GAUSSIANA,
    DIST_RADEMACHER,
    DIST_UNIFORME,
    ETIQUETAS_DISTRIBUCION,
    MAGIA_ENTORNO,
    VERSION_FORMATO_ENTORNO,
)
from core.config.errors import (
    ERROR_BETA_NEGATIVO,
    ERROR_CHECKSUM,
    ERROR_DISTRIBUCION_DESCONOCIDA,
    ERROR_LONGITUD_ENTORNO,
    ERROR_MAGIA,
    ERROR_SEMILLA,
    ERROR_TRUNCADO,
    ERROR_VERSION,
    ErrorIntegridad,
    ErrorParametros,
)
from models.entorno import Distribucion, Entorno
from services.generador import GeneradorXoshiro
from utils.checksums import fnv1a_64

logger = logging.getLogger(__name__)

_CABECERA = struct.Struct("<7sBQQ")
_DISTRIBUCION_POR_ETIQUETA = {v: k for k, v in ETIQUETAS_DISTRIBUCION.items()}


def _como_distribucion(dist: Union[str, Distribucion]) -> Distribucion:
    if isinstance(dist, Distribucion):
        return dist
    try:
        return Distribucion(nombre=dist)
    except ValueError:
        raise ErrorParametros(ERROR_DISTRIBUCION_DESCONOCIDA.format(dist))


def generar_entorno(dist: Union[str, Distribucion], semilla: int, longitud: int) -> Entorno:
    """
    Genera las cargas omega_0..omega_{longitud-1} con xoshiro256++.

    - StandardGaussian: Box-Muller sobre pares de uniformes (u1, u2) del flujo,
      r = sqrt(-2 log(1 - u1)); omega_{2i} = r cos(2 pi u2), omega_{2i+1} = r sin(2 pi u2)
    - Rademacher: bit de signo (bit 63) de cada palabra: 0 -> +1, 1 -> -1
    - CenteredUniform(a): a (2u - 1)

    Raises:
        ErrorParametros: longitud nula, semilla fuera de 64 bits o distribución desconocida
    """
    if longitud < 1:
        raise ErrorParametros(ERROR_LONGITUD_ENTORNO.format(longitud))
    if not 0 <= semilla < 2**64:
        raise ErrorParametros(ERROR_SEMILLA.format(semilla))
    distribucion = _como_distribucion(dist)
    generador = GeneradorXoshiro(semilla)

    if distribucion.nombre == DIST_GAUSSIANA:
        pares = (longitud + 1) // 2
        u = generador.uniformes(2 * pares)
        radio = np.sqrt(-2.0 * np.log1p(-u[0::2]))
        angulo = 2.0 * np.pi * u[1::2]
        cargas = np.empty(2 * pares)
        cargas[0::2] = radio * np.cos(angulo)
        cargas[1::2] = radio * np.sin(angulo)
        cargas = cargas[:longitud].copy()
    elif distribucion.nombre == DIST_RADEMACHER:
        palabras = np.array(generador.palabras(longitud), dtype=np.uint64)
        cargas = np.where((palabras >> np.uint64(63)) == 0, 1.0, -1.0)
    else:
        a = distribucion.semiancho
        cargas = a * (2.0 * generador.uniformes(longitud) - 1.0)

    cargas.flags.writeable = False
    logger.debug("Entorno %s semilla=%d longitud=%d generado", distribucion.nombre, semilla, longitud)
    return Entorno(distribucion=distribucion, semilla=semilla, longitud=longitud, cargas=cargas)


def log_mgf(dist: Union[str, Distribucion], beta: float) -> float:
    """
    log E[exp(beta omega)] en forma cerrada.

    Gaussiana beta^2 / 2; Rademacher log cosh beta; CenteredUniform(a)
    log(sinh(a beta) / (a beta)) con límite 0 en beta = 0.
    """
    if beta < 0:
        raise ErrorParametros(ERROR_BETA_NEGATIVO.format(beta))
    distribucion = _como_distribucion(dist)
    if beta == 0:
        return 0.0
    if distribucion.nombre == DIST_GAUSSIANA:
        return 0.5 * beta * beta
    if distribucion.nombre == DIST_RADEMACHER:
        return float(np.logaddexp(beta, -beta) - np.log(2.0))
    x = distribucion.semiancho * beta
    if x < 20.0:
        return float(np.log(np.sinh(x) / x))
    return float(x - np.log(2.0 * x) + np.log1p(-np.exp(-2.0 * x)))


def persistir_entorno(entorno: Entorno, ruta: Union[str, Path]) -> Path:
    """
    Escribe el entorno en formato PINENV1.

    Raises:
        ErrorParametros: CenteredUniform con medio ancho distinto del de varianza
            unidad (el formato no registra la anchura)
    """
    distribucion = entorno.distribucion
    if distribucion.nombre == DIST_UNIFORME and distribucion.medio_ancho is not None \
            and not np.isclose(distribucion.medio_ancho, np.sqrt(3.0), rtol=0, atol=1e-15):
        raise ErrorParametros("El formato PINENV1 solo registra CenteredUniform con medio ancho sqrt(3)")

    ruta = Path(ruta)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    carga_util = np.ascontiguousarray(entorno.cargas, dtype="<f8").tobytes()
    cabecera = _CABECERA.pack(
        MAGIA_ENTORNO, ETIQUETAS_DISTRIBUCION[distribucion.nombre], entorno.semilla, entorno.longitud
    )
    with open(ruta, "wb") as archivo:
        archivo.write(cabecera)
        archivo.write(carga_util)
        archivo.write(struct.pack("<Q", fnv1a_64(carga_util)))
    logger.info("Entorno guardado en %s (checksum %s)", ruta, entorno.checksum)
    return ruta


def cargar_entorno(ruta: Union[str, Path]) -> Entorno:
    """
    Lee un archivo PINENV1 verificando versión, longitud y checksum.

    Raises:
        ErrorIntegridad: cabecera inválida, versión distinta, archivo truncado
            o checksum incorrecto
    """
    datos = Path(ruta).read_bytes()
    if len(datos) < _CABECERA.size:
        raise ErrorIntegridad(ERROR_TRUNCADO.format(_CABECERA.size, len(datos)))

    magia, etiqueta, semilla, longitud = _CABECERA.unpack_from(datos, 0)
    if magia[:6] != MAGIA_ENTORNO[:6]:
        raise ErrorIntegridad(ERROR_MAGIA.format(MAGIA_ENTORNO, magia))
    if magia != MAGIA_ENTORNO:
        raise ErrorIntegridad(ERROR_VERSION.format(magia[6:].decode("ascii", "replace")))
    if etiqueta not in _DISTRIBUCION_POR_ETIQUETA:
        raise ErrorIntegridad(ERROR_DISTRIBUCION_DESCONOCIDA.format(etiqueta))

    esperado = 8 * longitud
    disponible = len(datos) - _CABECERA.size - 8
    if disponible < esperado:
        raise ErrorIntegridad(ERROR_TRUNCADO.format(esperado, max(disponible, 0)))

    carga_util = datos[_CABECERA.size:_CABECERA.size + esperado]
    (checksum_leido,) = struct.unpack_from("<Q", datos, _CABECERA.size + esperado)
    checksum_calculado = fnv1a_64(carga_util)
    if checksum_leido != checksum_calculado:
        raise ErrorIntegridad(ERROR_CHECKSUM.format(checksum_leido, checksum_calculado))

    cargas = np.frombuffer(carga_util, dtype="<f8").astype(np.float64)
    cargas.flags.writeable = False
    distribucion = Distribucion(nombre=_DISTRIBUCION_POR_ETIQUETA[etiqueta])
    logger.debug("Entorno cargado de %s (formato v%d)", ruta, VERSION_FORMATO_ENTORNO)
    return Entorno(distribucion=distribucion, semilla=semilla, longitud=longitud, cargas=cargas)
