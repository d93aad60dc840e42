"""
Modelos del entorno de cargas omega y de los parámetros (beta, h).
"""

from functools import cached_property
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.config.constants import DISTRIBUCIONES, DIST_UNIFORME
from utils.checksums import checksum_array


class Distribucion(BaseModel):
    """Ley de una carga omega_k; medio_ancho solo aplica a CenteredUniform."""

    model_config = ConfigDict(frozen=True)

    nombre: str
    medio_ancho: Optional[float] = None

    @field_validator("nombre")
    @classmethod
    def validar_nombre(cls, v):
        """Valida que la distribución sea una de las soportadas."""
        if v not in DISTRIBUCIONES:
            raise ValueError(f"Distribución debe ser una de {DISTRIBUCIONES}")
        return v

    @property
    def semiancho(self) -> float:
        """Medio ancho efectivo; por defecto sqrt(3) (varianza unidad)."""
        if self.nombre != DIST_UNIFORME:
            raise AttributeError("semiancho solo está definido para CenteredUniform")
        return float(self.medio_ancho) if self.medio_ancho is not None else float(np.sqrt(3.0))

    @property
    def sigma(self) -> float:
        """Desviación típica de una carga."""
        if self.nombre == DIST_UNIFORME:
            return self.semiancho / np.sqrt(3.0)
        return 1.0


class Entorno(BaseModel):
    """
    Realización sembrada de las cargas omega_0..omega_{longitud-1}.
    Inmutable tras su generación.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    distribucion: Distribucion
    semilla: int = Field(..., ge=0, lt=2**64)
    longitud: int = Field(..., ge=1)
    cargas: np.ndarray

    @cached_property
    def checksum(self) -> str:
        """Checksum FNV-1a de las cargas, calculado una vez por instancia."""
        return checksum_array(self.cargas)

    def to_registro(self) -> dict:
        """Registro de procedencia del entorno."""
        return {
            "distribucion": self.distribucion.nombre,
            "medio_ancho": self.distribucion.medio_ancho,
            "semilla": self.semilla,
            "longitud": self.longitud,
            "checksum_cargas": self.checksum,
        }

    def __eq__(self, otro) -> bool:
        if not isinstance(otro, Entorno):
            return NotImplemented
        return (
            self.distribucion == otro.distribucion
            and self.semilla == otro.semilla
            and self.longitud == otro.longitud
            and np.array_equal(self.cargas, otro.cargas)
        )


class ParametrosModelo(BaseModel):
    """
    Temperatura inversa beta >= 0 y sesgo h.
    h < 0 se admite solo para oráculos homogéneos localizados.
    """

    model_config = ConfigDict(frozen=True)

    beta: float = Field(..., ge=0.0)
    h: float

    def potenciales(self, cargas: np.ndarray) -> np.ndarray:
        """beta * omega_k - h para cada carga."""
        return self.beta * np.asarray(cargas, dtype=float) - self.h
