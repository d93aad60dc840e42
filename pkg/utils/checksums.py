"""
Checksums de contenido para auditorías de reproducibilidad.
"""

import numpy as np

from core.config.constants import FNV_OFFSET, FNV_PRIMO

_MASCARA_64 = 0xFFFFFFFFFFFFFFFF


def fnv1a_64(datos: bytes) -> int:
    """
    FNV-1a de 64 bits sobre una secuencia de bytes.

    Cada byte se mezcla en el estado antes del producto, así que el recorrido
    es secuencial; los modelos guardan el resultado por instancia.
    """
    h = FNV_OFFSET
    for byte in datos:
        h ^= byte
        h = (h * FNV_PRIMO) & _MASCARA_64
    return h


def checksum_array(valores: np.ndarray) -> str:
    """Checksum hexadecimal de un array como doubles IEEE little-endian."""
    datos = np.ascontiguousarray(valores, dtype="<f8").tobytes()
    return f"{fnv1a_64(datos):016x}"
