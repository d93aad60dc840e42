"""
API FastAPI del laboratorio de pinning con desorden congelado.
Punto de entrada del servicio HTTP.
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api.endpoints import calculo, config_info
from core.config.constants import VERSION_MOTOR
from core.config.errors import ErrorLaboratorio
from models.api_models import ErrorResponse
from utils.registro import configurar_registro

logger = logging.getLogger(__name__)


# Configuración de la aplicación durante el startup y shutdown
@asynccontextmanager
async def lifespan(app: FastAPI):
    configurar_registro()
    logger.info("Iniciando API del laboratorio de pinning (motor %s)", VERSION_MOTOR)
    yield
    logger.info("Cerrando API del laboratorio de pinning")


app = FastAPI(
    title="API Laboratorio de Pinning",
    description="""
    ## Funciones de partición del modelo de pinning con desorden congelado

    * **Funciones de partición** Z_n y Z_{n,f} para una ley de renovación y un entorno
    * **Energía libre** de tamaño finito por semilla y su cota inferior
    * **Ley del número de contactos** bajo la medida de Gibbs

    ### Endpoints
    * `POST /api/particion`
    * `POST /api/energia-libre`
    * `POST /api/contactos`
    * `GET /api/config/parametros`
    """,
    version=VERSION_MOTOR,
    license_info={
        "name": "MIT License",
        "url": "https://opensource.org/licenses/MIT",
    },
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url=None,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(calculo.router, prefix="/api", tags=["Cálculo"])
app.include_router(config_info.router, prefix="/api/config", tags=["Configuración"])


@app.get("/health", tags=["Salud"])
async def health_check():
    """
    Endpoint de verificación de salud de la API.

    Returns:
        dict: Estado de salud con los endpoints disponibles
    """
    try:
        from core.config.config_manager import config

        # Verificar que se pueden cargar las configuraciones
        if not config.cargar_parametros_simulacion():
            raise RuntimeError("parametros_simulacion.yaml vacío o ausente")

        return {
            "status": "healthy",
            "message": "API funcionando correctamente",
            "version": VERSION_MOTOR,
            "endpoints": {
                "documentation": "/docs",
                "health": "/health",
                "particion": "/api/particion",
                "energia_libre": "/api/energia-libre",
                "contactos": "/api/contactos",
                "config": "/api/config/parametros",
            },
        }
    except Exception as e:
        raise HTTPException(status_code=503, detail=f"Servicio no disponible: {str(e)}")


# Manejador global de errores
@app.exception_handler(ErrorLaboratorio)
async def error_laboratorio_handler(request: Request, exc: ErrorLaboratorio):
    cuerpo = ErrorResponse(error=type(exc).__name__, detail=str(exc))
    return JSONResponse(status_code=400, content=cuerpo.model_dump())


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "app:app",
        host="0.0.0.0",
        port=8000,
        reload=True,
        log_level="info",
    )
