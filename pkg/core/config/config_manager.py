"""
Gestor de configuraciones del laboratorio.
Carga los valores por defecto desde archivos YAML.
"""

import logging
from typing import Any, Dict

import yaml

from core.config.paths import CONFIG_FILES_DIR

logger = logging.getLogger(__name__)


class ConfigManager:
    """
    Gestor de configuraciones que carga datos desde archivos YAML.
    """

    def __init__(self):
        """Inicializa el gestor de configuraciones."""
        self._cache = {}
        self._cargar_todas_configuraciones()

    def _cargar_todas_configuraciones(self):
        """Carga todas las configuraciones desde archivos YAML."""
        try:
            self._cache['parametros_simulacion'] = self._cargar_yaml('parametros_simulacion.yaml')
            self._cache['esquema_informes'] = self._cargar_yaml('esquema_informes.yaml')
        except Exception as e:
            logger.error("Error cargando configuraciones: %s", e)
            # Inicializar vacío; los servicios aplican sus valores internos
            self._cache = {
                'parametros_simulacion': {},
                'esquema_informes': {}
            }

    def _cargar_yaml(self, nombre_archivo: str) -> Dict[str, Any]:
        """
        Carga un archivo YAML desde el directorio de configuración.

        Args:
            nombre_archivo: Nombre del archivo YAML a cargar

        Returns:
            Diccionario con los datos del archivo YAML (sin la clave raíz)
        """
        archivo_path = CONFIG_FILES_DIR / nombre_archivo

        if not archivo_path.exists():
            logger.error("Archivo no encontrado: %s", archivo_path)
            return {}

        try:
            with open(archivo_path, 'r', encoding='utf-8') as file:
                datos = yaml.safe_load(file) or {}
        except Exception as e:
            logger.error("Error leyendo %s: %s", nombre_archivo, e)
            return {}

        raiz = nombre_archivo.removesuffix('.yaml')
        return datos.get(raiz, datos)

    def cargar_parametros_simulacion(self) -> Dict[str, Any]:
        """
        Carga los parámetros por defecto de simulación.

        Returns:
            Dict con secciones escala, tolerancias, biseccion, ajuste_pendiente,
            verificacion, benchmark y muestreo
        """
        return self._cache.get('parametros_simulacion', {})

    def seccion(self, nombre: str) -> Dict[str, Any]:
        """Devuelve una sección de parametros_simulacion (vacía si no existe)."""
        return self.cargar_parametros_simulacion().get(nombre, {}) or {}

    def valor(self, seccion: str, clave: str, por_defecto: Any = None) -> Any:
        """Devuelve un valor concreto con valor por defecto."""
        return self.seccion(seccion).get(clave, por_defecto)

    def cargar_esquema_informes(self) -> Dict[str, Dict[str, str]]:
        """
        Carga el esquema de columnas de los CSV de informes.

        Returns:
            Dict indexado por tipo de informe con la descripción de cada columna
        """
        return self._cache.get('esquema_informes', {})

    def reload(self):
        """Recarga todas las configuraciones desde los archivos."""
        self._cache.clear()
        self._cargar_todas_configuraciones()


# Instancia global del gestor de configuraciones
config = ConfigManager()
