"""
Modelo para representar una ley de renovación K(n) tabulada.
"""

import json
from functools import cached_property
from typing import Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from core.config.constants import FAMILIAS_LEY
from utils.checksums import checksum_array


class EspecificacionLey(BaseModel):
    """
    Especificación serializable de una ley: familia, parámetros y tabla.

    Texto aceptado por desde_texto: "PowerLaw:alpha=1.5", "Geometric:p=0.5",
    "SimpleRandomWalkReturn".
    """

    familia: str
    parametros: Dict[str, float] = Field(default_factory=dict)
    n_tabla: Optional[int] = None

    @field_validator("familia")
    @classmethod
    def validar_familia(cls, v):
        """Valida que la familia sea conocida."""
        if v not in FAMILIAS_LEY:
            raise ValueError(f"Familia debe ser una de {FAMILIAS_LEY}")
        return v

    @classmethod
    def desde_texto(cls, texto: str, n_tabla: Optional[int] = None) -> "EspecificacionLey":
        """Construye la especificación desde la forma compacta de la CLI."""
        familia, _, resto = texto.partition(":")
        parametros = {}
        for par in filter(None, resto.split(",")):
            clave, _, valor = par.partition("=")
            parametros[clave.strip()] = float(valor)
        return cls(familia=familia.strip(), parametros=parametros, n_tabla=n_tabla)

    def a_texto(self) -> str:
        """Forma compacta inversa de desde_texto."""
        if not self.parametros:
            return self.familia
        pares = ",".join(f"{k}={v:g}" for k, v in sorted(self.parametros.items()))
        return f"{self.familia}:{pares}"


class LeyRenovacion(BaseModel):
    """
    Ley de los saltos K(n) = P[tau_1 = n] tabulada en n = 1..n_tabla.

    masas[n] = K(n) con masas[0] = 0; colas[m] = sum_{l >= m} K(l) para
    m = 0..n_tabla + 1 (colas[0] = colas[1] = 1). log_masas y log_colas son
    sus logaritmos evaluados sin pasar por las tablas lineales, finitos aunque
    K(n) quede por debajo del menor double. Inmutable tras construir.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    familia: str
    alpha: Optional[float] = None
    parametros: Dict[str, float] = Field(default_factory=dict)
    n_tabla: int
    masas: np.ndarray
    colas: np.ndarray
    log_masas: np.ndarray
    log_colas: np.ndarray
    viola_regvar: bool = False

    @cached_property
    def checksum(self) -> str:
        """Checksum FNV-1a de la tabla de masas, calculado una vez por instancia."""
        return checksum_array(self.masas)

    @property
    def especificacion(self) -> EspecificacionLey:
        return EspecificacionLey(familia=self.familia, parametros=dict(self.parametros), n_tabla=self.n_tabla)

    def to_registro(self) -> dict:
        """Registro estructurado para auditorías de reproducibilidad."""
        return {
            "familia": self.familia,
            "parametros": dict(self.parametros),
            "alpha": self.alpha,
            "n_tabla": self.n_tabla,
            "viola_regvar": self.viola_regvar,
            "checksum_masas": self.checksum,
        }

    def to_json(self) -> str:
        """Serialización JSON del registro"""
        return json.dumps(self.to_registro(), ensure_ascii=False)

    def tiene_regvar(self) -> bool:
        """True para las familias con exponente de variación regular finito."""
        return not self.viola_regvar
