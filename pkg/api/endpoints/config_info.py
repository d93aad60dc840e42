"""
Endpoints para obtener información de configuración del laboratorio.
Proporciona acceso a los archivos de configuración YAML en formato JSON.
"""

from fastapi import APIRouter, HTTPException

from core.config.config_manager import config

router = APIRouter()


@router.get("/parametros",
            summary="Obtener parámetros de simulación",
            description="Obtiene los parámetros por defecto (escala, tolerancias, bisección, verificación) en formato JSON")
async def get_parametros_simulacion():
    """
    Obtiene los parámetros de simulación.

    Returns:
        Dict: Parámetros agrupados por sección
    """
    try:
        parametros = config.cargar_parametros_simulacion()
        return {
            "success": True,
            "data": parametros,
            "secciones": sorted(parametros.keys()) if parametros else [],
            "descripcion": "Parámetros por defecto del laboratorio de pinning",
        }
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error obteniendo parámetros: {str(e)}")


@router.get("/esquema",
            summary="Obtener esquema de informes",
            description="Columnas de los CSV de cada tipo de informe")
async def get_esquema_informes():
    try:
        esquema = config.cargar_esquema_informes()
        return {
            "success": True,
            "data": esquema,
            "informes": sorted(esquema.keys()) if esquema else [],
        }
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error obteniendo esquema: {str(e)}")
