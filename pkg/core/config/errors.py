"""
Mensajes de error del laboratorio de pinning.
Centraliza las excepciones y los mensajes de error del sistema.
"""


class ErrorLaboratorio(Exception):
    """Excepción base para todos los errores del laboratorio."""
    pass


class ErrorParametros(ErrorLaboratorio):
    """Parámetros fuera de rango (familia, β, ventanas de ajuste...)."""
    pass


class ErrorHorizonte(ErrorLaboratorio):
    """El horizonte pedido excede el entorno o la tabla de la ley."""
    pass


class ErrorIntegridad(ErrorLaboratorio):
    """Archivo de entorno corrupto, truncado o de versión desconocida."""
    pass


class ErrorParticionNula(ErrorLaboratorio):
    """Se necesita Z_n > 0 pero el extremo es imposible."""
    pass


class ErrorTruncamiento(ErrorLaboratorio):
    """La escalera o la ventana de ajuste no han convergido en L."""
    pass


class ErrorHorquilla(ErrorLaboratorio):
    """El predicado de bisección es constante en el intervalo de búsqueda."""
    pass


class ErrorMuestras(ErrorLaboratorio):
    """Colección de caminos vacía o con extremos distintos."""
    pass


# === ERRORES DE LEY DE RENOVACIÓN ===
ERROR_FAMILIA_DESCONOCIDA = "Familia de ley desconocida: {0}"
ERROR_ALPHA_NO_POSITIVO = "La ley PowerLaw requiere alpha > 0, recibido: {0}"
ERROR_P_FUERA_RANGO = "La ley Geometric requiere p en (0, 1), recibido: {0}"
ERROR_N_TABLA = "n_tabla debe ser >= 2 (recibido {0})"
ERROR_INDICE_MASA = "n = {0} fuera de la tabla [1, {1}]"
ERROR_INDICE_COLA = "m = {0} fuera del rango [1, {1}]"

# === ERRORES DE ENTORNO ===
ERROR_LONGITUD_ENTORNO = "La longitud del entorno debe ser >= 1 (recibido {0})"
ERROR_SEMILLA = "La semilla debe ser un entero en [0, 2^64) (recibido {0})"
ERROR_SEMILLAS_TEXTO = "Lista de semillas inválida: {0!r} (se espera p. ej. '1-16' o '1,2,3')"
ERROR_DISTRIBUCION_DESCONOCIDA = "Distribución de cargas desconocida: {0}"
ERROR_BETA_NEGATIVO = "beta debe ser >= 0 (recibido {0})"
ERROR_MAGIA = "Cabecera inválida: se esperaba {0!r}, se leyó {1!r}"
ERROR_VERSION = "Versión de formato no soportada: {0}"
ERROR_TRUNCADO = "Archivo truncado: se esperaban {0} bytes de cargas, hay {1}"
ERROR_CHECKSUM = "Checksum incorrecto: esperado {0:016x}, calculado {1:016x}"

# === ERRORES DEL MOTOR DE PARTICIÓN ===
ERROR_HORIZONTE_ENTORNO = "Horizonte L = {0} excede la longitud del entorno ({1})"
ERROR_HORIZONTE_LEY = "Horizonte L = {0} excede la tabla de la ley ({1})"
ERROR_HORIZONTE_TABLAS = "n = {0} excede el horizonte de las tablas ({1})"
ERROR_NMAX = "N_max = {0} debe estar en [1, L = {1}]"
ERROR_N0_FUERA = "N0 = {0} fuera de [1, N_max = {1}]"
ERROR_NMAX_INSUFICIENTE = "N_max = {0} < n = {1}: la distribución de contactos quedaría truncada"
ERROR_PARTICION_NULA = "Z_{0} = 0: el extremo n = {0} es imposible para esta ley"

# === ERRORES DE MUESTREO ===
ERROR_SIN_CAMINOS = "La colección de caminos está vacía"
ERROR_N_MEZCLADOS = "Los caminos tienen extremos distintos: {0}"

# === ERRORES DE ANÁLISIS DE FASE ===
ERROR_TOLERANCIA = "La tolerancia debe ser > 0 (recibido {0})"
ERROR_HORQUILLA = "Predicado constante ({0}) en [{1}, {2}]: no hay cambio de fase"
ERROR_VENTANA = "Ventana de ajuste [{0}, {1}] inválida para N_max = {2}"
ERROR_GAP_TRUNCAMIENTO = "Gap de truncamiento {0:.3e} > {1:.1e} en N = {2}: ventana no convergida en L"
ERROR_SONDA = "h_sonda = {0} no coincide con el h de las tablas ({1})"

# === ERRORES DE VERIFICACIÓN ===
ERROR_CONFIG_VERIFICACION = "Configuración de verificación inválida: {0}"
ERROR_ARCHIVO_CONFIG = "No se pudo leer el archivo de configuración: {0}"
