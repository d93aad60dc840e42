"""
Constantes del laboratorio de pinning.
Centraliza nombres de familias, distribuciones, formatos y convenciones.
"""

## CONSTANTES DEL MODELO ##

# === FAMILIAS DE LEYES DE RENOVACIÓN ===
FAMILIA_POWER_LAW = "PowerLaw"
FAMILIA_SRW = "SimpleRandomWalkReturn"
FAMILIA_GEOMETRICA = "Geometric"
FAMILIAS_LEY = (FAMILIA_POWER_LAW, FAMILIA_SRW, FAMILIA_GEOMETRICA)

# Exponente de variación regular del retorno del paseo aleatorio simple
ALPHA_SRW = 0.5

# === DISTRIBUCIONES DE CARGAS ===
DIST_GAUSSIANA = "StandardGaussian"
DIST_RADEMACHER = "Rademacher"
DIST_UNIFORME = "CenteredUniform"
DISTRIBUCIONES = (DIST_GAUSSIANA, DIST_RADEMACHER, DIST_UNIFORME)

# Etiqueta de 1 byte en el archivo de entorno
ETIQUETAS_DISTRIBUCION = {DIST_GAUSSIANA: 0, DIST_RADEMACHER: 1, DIST_UNIFORME: 2}

# === FORMATO BINARIO DE ENTORNO ===
MAGIA_ENTORNO = b"PINENV1"
VERSION_FORMATO_ENTORNO = 1

# === FNV-1a 64 bits ===
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIMO = 0x100000001B3

# === CONVENCIONES NUMÉRICAS ===
# Centinela de log(0); log-sum-exp lo trata como elemento neutro
LOG_CERO = float("-inf")

# Versión de los motores, incluida en toda procedencia
VERSION_MOTOR = "1.0.0"
MOTOR_REFERENCIA = "referencia"
MOTOR_RAPIDO = "rapido"

# === VEREDICTOS ===
VEREDICTO_OK = "PASS"
VEREDICTO_FALLO = "FAIL"

# === CÓDIGOS DE SALIDA DE LA CLI ===
SALIDA_OK = 0
SALIDA_FALLO = 1
SALIDA_ERROR_CONFIG = 2

# === FORMATOS ===
ENCODING_DEFAULT = "utf-8"
EXTENSION_REGISTROS = ".jsonl"
EXTENSION_CSV = ".csv"
