"""
Fixtures compartidas y oráculos por enumeración exhaustiva.

Para n pequeño (n <= 14) se recorren todos los subconjuntos de {1, ..., n-1}
como posibles contactos intermedios; cada configuración pesa
prod_i e^{beta omega_{l_i} - h} K(l_{i+1} - l_i) sobre sus contactos l_i < n.
"""

from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from models.entorno import ParametrosModelo
from services.entorno import generar_entorno
from services.ley_renovacion import construir_ley


class OraculoEnumeracion:
    """Z_n, Z_{n,f}, G_{N,n} y P_n(E_{n,N}) sumando configuraciones una a una."""

    def __init__(self, ley, entorno, parametros):
        self.masas = np.asarray(ley.masas)
        self.colas = np.asarray(ley.colas)
        self.pesos = np.exp(parametros.potenciales(entorno.cargas))

    def configuraciones(self, n):
        """(puntos, peso) para cada tau con 0 y n como contactos."""
        for k in range(n):
            for intermedios in combinations(range(1, n), k):
                puntos = (0, *intermedios, n)
                peso = 1.0
                for a, b in zip(puntos, puntos[1:]):
                    peso *= self.pesos[a] * self.masas[b - a]
                yield puntos, peso

    def Z(self, n):
        if n == 0:
            return 1.0
        return sum(peso for _, peso in self.configuraciones(n))

    def G(self, N, n):
        if n == 0:
            return 1.0 if N == 0 else 0.0
        return sum(peso for puntos, peso in self.configuraciones(n) if len(puntos) - 1 == N)

    def Z_libre(self, n):
        """Último contacto j < n; el salto siguiente sale de [0, n)."""
        if n == 0:
            return 1.0
        return sum(self.Z(j) * self.pesos[j] * self.colas[n - j] for j in range(n))

    def prob_evento(self, n, N):
        """P_n(al menos N saltos)."""
        total = self.Z(n)
        favorable = sum(peso for puntos, peso in self.configuraciones(n) if len(puntos) - 1 >= N)
        return favorable / total


@pytest.fixture
def ley_powerlaw():
    return construir_ley("PowerLaw", {"alpha": 1.5}, n_tabla=256)


@pytest.fixture
def ley_srw():
    return construir_ley("SimpleRandomWalkReturn", n_tabla=256)


@pytest.fixture
def ley_geometrica():
    return construir_ley("Geometric", {"p": 0.5}, n_tabla=256)


@pytest.fixture
def entorno_gaussiano():
    return generar_entorno("StandardGaussian", 7, 256)


@pytest.fixture
def parametros_desordenados():
    return ParametrosModelo(beta=0.6, h=0.3)


@pytest.fixture
def oraculo():
    """Fábrica de oráculos: oraculo(ley, entorno, parametros)."""
    return OraculoEnumeracion


@pytest.fixture
def config_plantilla():
    return Path(__file__).parent / "templates" / "verificacion_pequena.yaml"
