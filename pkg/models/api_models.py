"""
Modelos Pydantic para requests y responses de la API.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from core.config.constants import DISTRIBUCIONES, DIST_GAUSSIANA, MOTOR_RAPIDO, MOTOR_REFERENCIA
from models.ley_renovacion import EspecificacionLey


class ModeloRequest(BaseModel):
    """Campos comunes: ley, entorno (distribución + semilla), (beta, h) y horizonte."""
    ley: str = Field("SimpleRandomWalkReturn", description="Ley en forma compacta, p. ej. PowerLaw:alpha=1.5")
    distribucion: str = Field(DIST_GAUSSIANA, description="Distribución de las cargas")
    semilla: int = Field(1, ge=0, lt=2**64)
    beta: float = Field(0.0, ge=0.0)
    h: float = 0.0
    horizonte: int = Field(..., ge=1, le=131072, description="Extremo L")

    @field_validator("ley")
    @classmethod
    def validar_ley(cls, v):
        """Valida la forma compacta de la ley."""
        EspecificacionLey.desde_texto(v)
        return v

    @field_validator("distribucion")
    @classmethod
    def validar_distribucion(cls, v):
        """Valida la distribución de las cargas."""
        if v not in DISTRIBUCIONES:
            raise ValueError(f"Distribución debe ser una de {DISTRIBUCIONES}")
        return v

    def especificacion(self) -> EspecificacionLey:
        return EspecificacionLey.desde_texto(self.ley)


class ParticionRequest(ModeloRequest):
    """Request para calcular log Z_n y log Z_{n,f}."""
    motor: str = Field(MOTOR_REFERENCIA, description="referencia o rapido")
    incluir_libre: bool = Field(True, description="Calcular también Z_{n,f} (solo motor de referencia)")

    @field_validator("motor")
    @classmethod
    def validar_motor(cls, v):
        """Valida el motor."""
        if v not in (MOTOR_REFERENCIA, MOTOR_RAPIDO):
            raise ValueError(f"Motor debe ser {MOTOR_REFERENCIA} o {MOTOR_RAPIDO}")
        return v


class ParticionResponse(BaseModel):
    """log Z_n (y log Z_{n,f}) para n = 0..L; -inf se serializa como null."""
    success: bool
    message: str
    horizonte: int
    log_Z: List[Optional[float]]
    log_Z_libre: Optional[List[Optional[float]]] = None
    cota_error: Optional[float] = None
    procedencia: Dict


class EnergiaLibreRequest(BaseModel):
    """Request para estimar f_hat sobre un conjunto de semillas."""
    ley: str = "SimpleRandomWalkReturn"
    distribucion: str = DIST_GAUSSIANA
    semillas: List[int] = Field(default_factory=lambda: [1])
    beta: float = Field(0.0, ge=0.0)
    h: float = 0.0
    horizonte: int = Field(..., ge=2, le=131072)
    motor: str = MOTOR_REFERENCIA

    @field_validator("ley")
    @classmethod
    def validar_ley(cls, v):
        """Valida la forma compacta de la ley."""
        EspecificacionLey.desde_texto(v)
        return v

    @field_validator("semillas")
    @classmethod
    def validar_semillas(cls, v):
        """Al menos una semilla."""
        if not v:
            raise ValueError("Se requiere al menos una semilla")
        return v


class EnergiaLibreResponse(BaseModel):
    """f_hat por semilla con su cota inferior y la energía libre homogénea."""
    success: bool
    message: str
    f_hat: Dict[int, float]
    cota_inferior: Dict[int, float]
    mediana_f: float
    energia_libre_homogenea: float
    curva_recocida: float


class ContactosRequest(ModeloRequest):
    """Request para la distribución del número de saltos bajo P_n."""
    n_max: int = Field(..., ge=1, le=4096)
    n: Optional[int] = Field(None, ge=1, description="Extremo; por defecto L")


class ContactosResponse(BaseModel):
    """P_n(#saltos = N) para N = 0..N_max y P_n(E_{n,N})."""
    success: bool
    message: str
    n: int
    distribucion: List[float]
    prob_evento: Dict[int, float]
    media_saltos: float


class ErrorResponse(BaseModel):
    """Response para errores."""
    success: bool = False
    error: str
    detail: Optional[str] = None
