"""
Modelo de las tablas de la escalera de saltos (dominio logarítmico).
"""

from typing import Any, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from models.entorno import ParametrosModelo
from utils.logaritmos import log_suma


class TablasEscalera(BaseModel):
    """
    Tablas de la escalera para n = 0..L y N = 0..N_max.

    - log_Z[n]: log Z_n (log Z_0 = 0)
    - log_Z_libre[n]: log Z_{n,f} (log Z_{0,f} = 0)
    - log_G[N, n]: log G_{N,n}, caminos con exactamente N saltos que acaban en n
    - log_F_trunc[N]: log F_N^(L) = log sum_{n<=L} G_{N,n} (índice 0: F_0 = 1)
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    log_Z: np.ndarray
    log_Z_libre: np.ndarray
    log_G: np.ndarray
    log_F_trunc: np.ndarray
    parametros: ParametrosModelo
    procedencia: Dict[str, Any] = Field(default_factory=dict)

    @property
    def horizonte(self) -> int:
        """L, último extremo tabulado."""
        return self.log_Z.size - 1

    @property
    def n_max(self) -> int:
        """Mayor número de saltos tabulado."""
        return self.log_G.shape[0] - 1

    def log_F_truncado(self, horizonte: int) -> np.ndarray:
        """log F_N^(L') para L' <= L y N = 0..N_max."""
        return log_suma(self.log_G[:, : horizonte + 1], axis=1)

    def log_sumas_columnas(self) -> np.ndarray:
        """log sum_{N=1}^{N_max} G_{N,n} para n = 0..L (columna n = 0 vacía)."""
        return log_suma(self.log_G[1:, :], axis=0)
