"""
Modelos de configuración y de informe de las suites de verificación.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from core.config.constants import (
    DISTRIBUCIONES,
    DIST_GAUSSIANA,
    MOTOR_REFERENCIA,
    VEREDICTO_FALLO,
    VEREDICTO_OK,
)
from core.config.errors import ERROR_ARCHIVO_CONFIG, ERROR_CONFIG_VERIFICACION, ErrorParametros
from models.ley_renovacion import EspecificacionLey


class ConfigVerificacion(BaseModel):
    """
    Configuración de una suite: ley, distribución de cargas, (beta, h),
    semillas, horizonte L, N_max, epsilon y la constante c del teorema de
    contactos. hc_referencia None significa "estimar por bisección" (0 exacto
    si beta = 0).
    """

    ley: EspecificacionLey = Field(default_factory=lambda: EspecificacionLey(familia="SimpleRandomWalkReturn"))
    distribucion: str = DIST_GAUSSIANA
    beta: float = Field(0.0, ge=0.0)
    h: float = 0.5
    semillas: List[int] = Field(default_factory=lambda: list(range(1, 17)))
    horizonte: int = Field(4096, ge=1)
    n_max: int = Field(128, ge=1)
    epsilon: float = Field(0.1, gt=0.0)
    c: float = Field(4.0, gt=0.0)
    salida: Optional[Path] = None
    hc_referencia: Optional[float] = None
    motor: str = MOTOR_REFERENCIA

    @field_validator("distribucion")
    @classmethod
    def validar_distribucion(cls, v):
        """Valida que la distribución sea una de las soportadas."""
        if v not in DISTRIBUCIONES:
            raise ValueError(f"Distribución debe ser una de {DISTRIBUCIONES}")
        return v

    @field_validator("semillas")
    @classmethod
    def validar_semillas(cls, v):
        """Al menos una semilla, todas enteros de 64 bits sin signo."""
        if not v:
            raise ValueError("Se requiere al menos una semilla")
        if any(not 0 <= s < 2**64 for s in v):
            raise ValueError("Las semillas deben ser enteros de 64 bits sin signo")
        return v

    @classmethod
    def desde_yaml(cls, ruta: Optional[Path] = None, **sobrescrituras: Any) -> "ConfigVerificacion":
        """
        Carga la configuración de un YAML y aplica después las opciones de la
        línea de comandos (las que no sean None).

        Raises:
            ErrorParametros: archivo ilegible o valores inválidos
        """
        datos: Dict[str, Any] = {}
        if ruta is not None:
            try:
                with open(ruta, "r", encoding="utf-8") as archivo:
                    datos = yaml.safe_load(archivo) or {}
            except (OSError, yaml.YAMLError) as e:
                raise ErrorParametros(ERROR_ARCHIVO_CONFIG.format(e))
        datos.update({k: v for k, v in sobrescrituras.items() if v is not None})
        try:
            if isinstance(datos.get("ley"), str):
                datos["ley"] = EspecificacionLey.desde_texto(datos["ley"])
            return cls(**datos)
        except (ValidationError, ValueError) as e:
            raise ErrorParametros(ERROR_CONFIG_VERIFICACION.format(e))

    def margen_critico(self, hc: float) -> float:
        """h - h_c."""
        return self.h - hc

    def comprobar_epsilon(self, hc: float) -> None:
        """Precondición epsilon < h - h_c de la cota de la proposición."""
        if not self.epsilon < self.margen_critico(hc):
            raise ErrorParametros(
                ERROR_CONFIG_VERIFICACION.format(
                    f"epsilon = {self.epsilon} debe ser < h - h_c = {self.margen_critico(hc):.4f}"
                )
            )

    def umbral_c(self, alpha: Optional[float], hc: float) -> Optional[float]:
        """c* = (1 + alpha) / (h - h_c); None si la ley no tiene alpha o h <= h_c."""
        margen = self.margen_critico(hc)
        if alpha is None or margen <= 0:
            return None
        return (1.0 + alpha) / margen

    def c_supera_umbral(self, alpha: Optional[float], hc: float) -> Optional[bool]:
        """Marca c > (1 + alpha) / (h - h_c) para el informe."""
        umbral = self.umbral_c(alpha, hc)
        return None if umbral is None else self.c > umbral


class InformeVerificacion(BaseModel):
    """
    Resultado de una suite: veredicto, procedencia completa, registros por
    fila (los que van al CSV) y resumen con las constantes ajustadas.
    """

    suite: str
    veredicto: str
    procedencia: Dict[str, Any] = Field(default_factory=dict)
    registros: List[Dict[str, Any]] = Field(default_factory=list)
    resumen: Dict[str, Any] = Field(default_factory=dict)
    aserciones: Dict[str, bool] = Field(default_factory=dict)

    @classmethod
    def desde_aserciones(cls, suite: str, aserciones: Dict[str, bool], **kwargs) -> "InformeVerificacion":
        veredicto = VEREDICTO_OK if all(aserciones.values()) else VEREDICTO_FALLO
        return cls(suite=suite, veredicto=veredicto, aserciones=aserciones, **kwargs)

    @property
    def aprobado(self) -> bool:
        return self.veredicto == VEREDICTO_OK
