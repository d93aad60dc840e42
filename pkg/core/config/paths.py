"""
Rutas y directorios del proyecto.
Gestiona todas las rutas principales del laboratorio.
"""

from pathlib import Path

# Directorio base del proyecto
BASE_DIR = Path(__file__).parent.parent.parent

# Directorios principales
CONFIG_DIR = BASE_DIR / "core" / "config"
TESTS_DIR = BASE_DIR / "tests"
RESULTADOS_DIR = BASE_DIR / "resultados"

# Archivos de configuración YAML
CONFIG_FILES_DIR = CONFIG_DIR / "config_files"
PARAMETROS_SIMULACION_FILE = CONFIG_FILES_DIR / "parametros_simulacion.yaml"
ESQUEMA_INFORMES_FILE = CONFIG_FILES_DIR / "esquema_informes.yaml"

# Plantillas de configuración de verificación usadas en pruebas
TEMPLATES_DIR = TESTS_DIR / "templates"
