"""
Modelos de configuraciones de contactos y de sus estadísticas.
"""

from typing import Dict, List

from pydantic import BaseModel, field_validator


class CaminoContactos(BaseModel):
    """Conjunto tau ∩ [0, n] como secuencia estrictamente creciente 0 = l_0 < ... < l_N = n."""

    puntos: List[int]

    @field_validator("puntos")
    @classmethod
    def validar_puntos(cls, v):
        """Valida que empiece en 0 y que todos los saltos sean >= 1."""
        if len(v) < 2 or v[0] != 0:
            raise ValueError("Un camino empieza en 0 y tiene al menos un salto")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("Los puntos de contacto deben ser estrictamente crecientes")
        return v

    @property
    def n(self) -> int:
        return self.puntos[-1]

    @property
    def numero_saltos(self) -> int:
        """N; el número de contactos en [0, n] es N + 1."""
        return len(self.puntos) - 1

    @property
    def saltos(self) -> List[int]:
        return [b - a for a, b in zip(self.puntos, self.puntos[1:])]

    def to_linea(self) -> str:
        """Exportación como enteros separados por espacios."""
        return " ".join(str(p) for p in self.puntos)


class EstadisticasContactos(BaseModel):
    """Resumen de una colección de caminos con el mismo extremo n."""

    n: int
    total_caminos: int
    media_saltos: float
    varianza_saltos: float
    max_saltos: int
    prob_evento: Dict[int, float]
    histograma_saltos: Dict[int, int]
