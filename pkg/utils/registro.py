"""
Configuración del registro (logging) para la CLI y la API.
"""

import logging
import os

from dotenv import load_dotenv
from rich.logging import RichHandler

NIVELES_POR_ENTORNO = {
    "development": "DEBUG",
    "production": "INFO",
}


def configurar_registro(nivel: str | None = None) -> None:
    """
    Instala un RichHandler en el logger raíz.

    El nivel se toma, por orden, del argumento, de PINNING_LOG_LEVEL o del
    entorno PINNING_ENV (development / production) leídos del .env.
    """
    load_dotenv()
    if nivel is None:
        entorno = os.getenv("PINNING_ENV", "production")
        nivel = os.getenv("PINNING_LOG_LEVEL", NIVELES_POR_ENTORNO.get(entorno, "INFO"))

    logging.basicConfig(
        level=nivel.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
        force=True,
    )
