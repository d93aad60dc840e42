"""
Endpoints de cálculo: funciones de partición, energía libre y ley del
número de contactos. Envoltorios finos sobre services/.
"""

import logging
from typing import List, Optional

import numpy as np
from fastapi import APIRouter, HTTPException

from core.config.constants import MOTOR_RAPIDO
from core.config.errors import ErrorLaboratorio
from models.api_models import (
    ContactosRequest,
    ContactosResponse,
    EnergiaLibreRequest,
    EnergiaLibreResponse,
    ErrorResponse,
    ParticionRequest,
    ParticionResponse,
)
from models.entorno import ParametrosModelo
from models.ley_renovacion import EspecificacionLey
from services.analisis_fase import energia_libre_homogenea, estimar_fase
from services.entorno import generar_entorno
from services.ley_renovacion import ley_desde_especificacion
from services.motor_particion import (
    calcular_escalera,
    calcular_libre,
    calcular_restringida,
    distribucion_contactos,
    probabilidad_evento,
    procedencia,
)
from services.motor_rapido import calcular_restringida_rapida

logger = logging.getLogger(__name__)

router = APIRouter()

RESPUESTAS_ERROR = {
    400: {"model": ErrorResponse, "description": "Parámetros inválidos o cálculo no definido"},
    500: {"description": "Error interno del servidor"},
}


def _lista_log(valores: np.ndarray) -> List[Optional[float]]:
    """-inf (peso nulo) no es JSON válido: se envía como null."""
    return [float(v) if np.isfinite(v) else None for v in valores]


@router.post(
    "/particion",
    response_model=ParticionResponse,
    summary="Funciones de partición",
    description="""
    Calcula log Z_n (extremo anclado) y opcionalmente log Z_{n,f} (extremo libre)
    para n = 0..L en un entorno generado a partir de la semilla.

    * **motor=referencia**: recursión directa O(L^2), incluye Z_{n,f}
    * **motor=rapido**: convolución online O(L log^2 L), devuelve cota de error
    """,
    responses=RESPUESTAS_ERROR,
)
async def calcular_particion(request: ParticionRequest):
    try:
        ley = ley_desde_especificacion(request.especificacion(), max(request.horizonte, 2))
        entorno = generar_entorno(request.distribucion, request.semilla, request.horizonte)
        parametros = ParametrosModelo(beta=request.beta, h=request.h)

        cota = None
        log_Z_libre = None
        if request.motor == MOTOR_RAPIDO:
            log_Z, cota = calcular_restringida_rapida(
                entorno, ley, parametros, request.horizonte, devolver_diagnostico=True
            )
        else:
            log_Z = calcular_restringida(entorno, ley, parametros, request.horizonte)
            if request.incluir_libre:
                log_Z_libre = _lista_log(calcular_libre(entorno, ley, parametros, request.horizonte))

        return ParticionResponse(
            success=True,
            message=f"Funciones de partición calculadas hasta L = {request.horizonte}",
            horizonte=request.horizonte,
            log_Z=_lista_log(log_Z),
            log_Z_libre=log_Z_libre,
            cota_error=cota,
            procedencia=procedencia(entorno, ley, parametros, request.motor),
        )
    except ErrorLaboratorio:
        # el manejador global responde 400 con ErrorResponse
        raise
    except Exception as e:
        logger.exception("Fallo en /particion")
        raise HTTPException(status_code=500, detail=f"Error interno: {str(e)}")


@router.post(
    "/energia-libre",
    response_model=EnergiaLibreResponse,
    summary="Energía libre de tamaño finito",
    description="f_hat(L) por semilla, su cota inferior de un salto y la energía libre del modelo homogéneo en h.",
    responses=RESPUESTAS_ERROR,
)
async def calcular_energia_libre(request: EnergiaLibreRequest):
    try:
        ley = ley_desde_especificacion(EspecificacionLey.desde_texto(request.ley), request.horizonte)
        parametros = ParametrosModelo(beta=request.beta, h=request.h)
        estimacion = estimar_fase(ley, request.distribucion, parametros, request.semillas, request.horizonte, request.motor)
        return EnergiaLibreResponse(
            success=True,
            message=f"Energía libre estimada sobre {len(request.semillas)} semillas",
            f_hat=estimacion.f_hat,
            cota_inferior=estimacion.cota_inferior,
            mediana_f=estimacion.diagnosticos["mediana_f"],
            energia_libre_homogenea=energia_libre_homogenea(ley, request.h),
            curva_recocida=estimacion.diagnosticos["curva_recocida"],
        )
    except ErrorLaboratorio:
        raise
    except Exception as e:
        logger.exception("Fallo en /energia-libre")
        raise HTTPException(status_code=500, detail=f"Error interno: {str(e)}")


@router.post(
    "/contactos",
    response_model=ContactosResponse,
    summary="Ley del número de contactos",
    description="""
    Distribución exacta del número de saltos bajo la medida de Gibbs P_n a partir
    de la escalera G_{N,n}. Requiere N_max >= n.
    """,
    responses=RESPUESTAS_ERROR,
)
async def calcular_contactos(request: ContactosRequest):
    try:
        n = request.n or request.horizonte
        ley = ley_desde_especificacion(request.especificacion(), max(request.horizonte, 2))
        entorno = generar_entorno(request.distribucion, request.semilla, request.horizonte)
        parametros = ParametrosModelo(beta=request.beta, h=request.h)
        tablas = calcular_escalera(entorno, ley, parametros, min(request.n_max, request.horizonte), request.horizonte)

        distribucion = distribucion_contactos(tablas, n)
        prob_evento = {N: probabilidad_evento(tablas, n, N) for N in range(1, n + 1)}
        return ContactosResponse(
            success=True,
            message=f"Distribución de contactos en n = {n}",
            n=n,
            distribucion=distribucion.tolist(),
            prob_evento=prob_evento,
            media_saltos=float(np.dot(np.arange(distribucion.size), distribucion)),
        )
    except ErrorLaboratorio:
        raise
    except Exception as e:
        logger.exception("Fallo en /contactos")
        raise HTTPException(status_code=500, detail=f"Error interno: {str(e)}")
