"""
Generador pseudoaleatorio fijo del laboratorio: xoshiro256++ sembrado con splitmix64.

El algoritmo está fijado (no depende de la implementación por defecto de
numpy) para que cualquier número publicado sea regenerable bit a bit en
cualquier lenguaje. Todas las cargas y todos los sorteos de muestreo salen
de este flujo.
"""

from typing import List, Tuple

import numpy as np

_M64 = 0xFFFFFFFFFFFFFFFF
_DOS_A_MENOS_53 = 1.0 / (1 << 53)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _M64


def splitmix64(estado: int) -> Tuple[int, int]:
    """Un paso de splitmix64: devuelve (nuevo_estado, salida)."""
    estado = (estado + 0x9E3779B97F4A7C15) & _M64
    z = estado
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return estado, z ^ (z >> 31)


class GeneradorXoshiro:
    """
    xoshiro256++ con estado de 256 bits inicializado por splitmix64(semilla).

    El estado pertenece a un único contexto de ejecución; para muestreo en
    paralelo se usan flujos sembrados de forma independiente.
    """

    def __init__(self, semilla: int):
        if not 0 <= semilla < 2**64:
            raise ValueError(f"La semilla debe ser un entero de 64 bits sin signo: {semilla}")
        self.semilla = semilla
        estado = semilla
        palabras = []
        for _ in range(4):
            estado, salida = splitmix64(estado)
            palabras.append(salida)
        self._s = palabras

    @property
    def estado(self) -> Tuple[int, int, int, int]:
        return tuple(self._s)

    def siguiente(self) -> int:
        """Siguiente palabra de 64 bits."""
        s0, s1, s2, s3 = self._s
        resultado = (_rotl((s0 + s3) & _M64, 23) + s0) & _M64
        t = (s1 << 17) & _M64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return resultado

    def palabras(self, cantidad: int) -> List[int]:
        """Lista de palabras consecutivas del flujo."""
        s0, s1, s2, s3 = self._s
        salida = [0] * cantidad
        for i in range(cantidad):
            salida[i] = (((((s0 + s3) & _M64) << 23) | (((s0 + s3) & _M64) >> 41)) + s0) & _M64
            t = (s1 << 17) & _M64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & _M64
        self._s = [s0, s1, s2, s3]
        return salida

    def uniforme(self) -> float:
        """Uniforme en [0, 1) con 53 bits: (x >> 11) * 2^-53."""
        return (self.siguiente() >> 11) * _DOS_A_MENOS_53

    def uniformes(self, cantidad: int) -> np.ndarray:
        """Vector de uniformes en [0, 1), en el orden del flujo."""
        enteros = np.array(self.palabras(cantidad), dtype=np.uint64)
        return (enteros >> np.uint64(11)).astype(np.float64) * _DOS_A_MENOS_53


def flujos_independientes(semilla: int, cantidad: int) -> List[GeneradorXoshiro]:
    """
    Flujos para lotes en paralelo: cada uno se siembra con una salida
    distinta de splitmix64 a partir de la semilla base.
    """
    flujos = []
    estado = semilla
    for _ in range(cantidad):
        estado, sub_semilla = splitmix64(estado)
        flujos.append(GeneradorXoshiro(sub_semilla))
    return flujos
