"""
Modelos de resultados del análisis de fase.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class PasoBiseccion(BaseModel):
    """Una evaluación del predicado mediana(f_hat(h)) > theta."""

    h: float
    mediana_f: float
    umbral: float
    predicado: bool
    dispersion: float = Field(..., description="Rango intercuartílico de f_hat entre semillas")


class ResultadoBiseccion(BaseModel):
    """Estimación de h_c por bisección sobre el signo de la energía libre."""

    hc: float
    semiancho: float
    horizonte: int
    semillas: List[int]
    traza: List[PasoBiseccion] = Field(default_factory=list)
    dispersion: float = 0.0

    @property
    def intervalo(self) -> Tuple[float, float]:
        return self.hc - self.semiancho, self.hc + self.semiancho


class ResultadoPendiente(BaseModel):
    """
    Estimación h_sonda + pendiente de log F_N^(L) frente a N en una ventana.

    gaps: gap de truncamiento relativo 1 - F_N^(L/2) / F_N^(L) por N de la ventana.
    """

    hc: float
    h_sonda: float
    pendiente: float
    ordenada: float
    incertidumbre: float
    ventana: Tuple[int, int]
    residuos: List[float] = Field(default_factory=list)
    gaps: Dict[int, float] = Field(default_factory=dict)

    @property
    def gap_max(self) -> float:
        return max(self.gaps.values(), default=0.0)


class EstimacionFase(BaseModel):
    """
    Energía libre de tamaño finito por semilla y estimadores de h_c.

    cota_inferior[s] = (log K(n) + beta omega_0 - h) / n para la semilla s;
    f_hat[s] nunca queda por debajo.
    """

    beta: float
    h: float
    horizonte: int
    f_hat: Dict[int, float]
    cota_inferior: Dict[int, float] = Field(default_factory=dict)
    hc_biseccion: Optional[ResultadoBiseccion] = None
    hc_pendiente: Optional[ResultadoPendiente] = None
    diagnosticos: Dict[str, float] = Field(default_factory=dict)

    def respeta_cota_inferior(self, tolerancia: float = 1e-12) -> bool:
        """True si f_hat >= cota inferior para todas las semillas."""
        return all(self.f_hat[s] >= self.cota_inferior[s] - tolerancia for s in self.cota_inferior)
