"""
Línea de comandos del laboratorio de pinning.

Subcomandos: gen-env, build-law, compute, sample, free-energy, hc,
verify-thm1, verify-prop, verify-thm2, bench.

Códigos de salida: 0 todas las aserciones se cumplen, 1 alguna falla,
2 error de configuración, integridad o truncamiento.
"""

import functools
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional

import click
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from core.config.config_manager import config
from core.config.constants import (
    DISTRIBUCIONES,
    DIST_GAUSSIANA,
    MOTOR_RAPIDO,
    MOTOR_REFERENCIA,
    SALIDA_ERROR_CONFIG,
    SALIDA_FALLO,
    SALIDA_OK,
)
from core.config.errors import ERROR_SEMILLA, ERROR_SEMILLAS_TEXTO, ErrorLaboratorio, ErrorParametros
from core.config.paths import RESULTADOS_DIR
from models.entorno import ParametrosModelo
from models.ley_renovacion import EspecificacionLey
from models.verificacion import ConfigVerificacion, InformeVerificacion
from services.analisis_fase import (
    estimar_fase,
    estimar_hc_biseccion,
    estimar_hc_pendiente,
    interior_deslocalizado,
)
from services.entorno import cargar_entorno, generar_entorno, persistir_entorno
from services.informes import escribir_informe, escribir_registros, exportar_caminos, exportar_tablas, tabla_registros
from services.ley_renovacion import construir_ley, diagnostico_regvar, ley_desde_especificacion
from services.motor_particion import calcular_escalera, calcular_restringida, distribucion_contactos
from services.muestreador import estadisticas_contactos, muestrear_caminos
from services.verificador import (
    ejecutar_benchmark,
    verificar_proposicion,
    verificar_teorema1,
    verificar_teorema2,
)
from utils.registro import configurar_registro

logger = logging.getLogger(__name__)
consola = Console()

SEMILLA_MAXIMA = 2**64
# --seed y --stream-seed: click sale con código 2 fuera de rango
TIPO_SEMILLA = click.IntRange(0, SEMILLA_MAXIMA - 1)


def parsear_semillas(texto: Optional[str]) -> Optional[List[int]]:
    """
    '1,2,5' o '1-16' (o combinaciones como '1-4,9') a lista de enteros.

    Raises:
        ErrorParametros: texto no numérico, lista vacía o semilla fuera de [0, 2^64)
    """
    if texto is None:
        return None
    semillas = []
    try:
        for parte in filter(None, (p.strip() for p in texto.split(","))):
            if "-" in parte:
                inicio, _, fin = parte.partition("-")
                semillas.extend(range(int(inicio), int(fin) + 1))
            else:
                semillas.append(int(parte))
    except ValueError as e:
        raise ErrorParametros(ERROR_SEMILLAS_TEXTO.format(texto)) from e
    if not semillas:
        raise ErrorParametros(ERROR_SEMILLAS_TEXTO.format(texto))
    for semilla in semillas:
        if not 0 <= semilla < SEMILLA_MAXIMA:
            raise ErrorParametros(ERROR_SEMILLA.format(semilla))
    return semillas


def _manejar_errores(funcion: Callable) -> Callable:
    """ErrorLaboratorio o datos inválidos -> mensaje en consola y salida 2."""

    @functools.wraps(funcion)
    def envoltura(*args, **kwargs):
        try:
            return funcion(*args, **kwargs)
        except (ErrorLaboratorio, ValidationError) as e:
            consola.print(f"[bold red]Error ({type(e).__name__}):[/bold red] {e}")
            sys.exit(SALIDA_ERROR_CONFIG)

    return envoltura


def _ley(texto: str, n_tabla: int):
    return ley_desde_especificacion(EspecificacionLey.desde_texto(texto), n_tabla)


def _mostrar_informe(informe: InformeVerificacion) -> None:
    tabla = Table(title=f"Suite {informe.suite}: {informe.veredicto}")
    tabla.add_column("Aserción")
    tabla.add_column("Resultado")
    for nombre, ok in informe.aserciones.items():
        tabla.add_row(nombre, "[green]PASS[/green]" if ok else "[red]FAIL[/red]")
    consola.print(tabla)


def _cerrar_informe(informe: InformeVerificacion, salida: Optional[Path]) -> None:
    destino = salida or RESULTADOS_DIR / informe.suite
    rutas = escribir_informe(informe, destino)
    _mostrar_informe(informe)
    for ruta in rutas:
        consola.print(f"Escrito: {ruta}")
    sys.exit(SALIDA_OK if informe.aprobado else SALIDA_FALLO)


@click.group()
@click.option("--log-level", default=None, help="Nivel de registro (DEBUG, INFO, WARNING...)")
def cli(log_level):
    """Laboratorio numérico del modelo de pinning con desorden congelado."""
    configurar_registro(log_level)


# ----------------------------------------------------------------------
# Entornos y leyes
# ----------------------------------------------------------------------


@cli.command("gen-env")
@click.option("--dist", type=click.Choice(DISTRIBUCIONES), default=DIST_GAUSSIANA, show_default=True)
@click.option("--seed", "semilla", type=TIPO_SEMILLA, required=True)
@click.option("--length", "longitud", type=int, required=True)
@click.option("--out", "salida", type=click.Path(path_type=Path), required=True)
@_manejar_errores
def gen_env(dist, semilla, longitud, salida):
    """Genera un entorno sembrado y lo guarda en formato PINENV1."""
    entorno = generar_entorno(dist, semilla, longitud)
    ruta = persistir_entorno(entorno, salida)
    consola.print(f"Entorno {dist} semilla={semilla} L={longitud} checksum={entorno.checksum} -> {ruta}")


@cli.command("build-law")
@click.option("--law", "ley", required=True, help="p. ej. PowerLaw:alpha=1.5, Geometric:p=0.5, SimpleRandomWalkReturn")
@click.option("--n-table", "n_tabla", type=int, default=4096, show_default=True)
@click.option("--out", "salida", type=click.Path(path_type=Path), default=None)
@_manejar_errores
def build_law(ley, n_tabla, salida):
    """Construye y resume una ley de renovación (normalización y variación regular)."""
    especificacion = EspecificacionLey.desde_texto(ley)
    construida = construir_ley(especificacion.familia, especificacion.parametros, n_tabla)
    tabla = Table(title=f"{especificacion.a_texto()} (n_tabla = {n_tabla})")
    tabla.add_column("n", justify="right")
    tabla.add_column("-log K(n)/log n", justify="right")
    tabla.add_column("|desviación|", justify="right")
    for fila in diagnostico_regvar(construida):
        tabla.add_row(str(fila["n"]), f"{fila['exponente']:.4f}", f"{fila['desviacion']:.4f}")
    consola.print(construida.to_registro())
    consola.print(tabla)
    if salida:
        ruta = escribir_registros([construida.to_registro()], salida)
        consola.print(f"Escrito: {ruta}")


# ----------------------------------------------------------------------
# Tablas, muestreo y fase
# ----------------------------------------------------------------------


def _entorno_de(env, dist, semilla, horizonte):
    if env is not None:
        return cargar_entorno(env)
    return generar_entorno(dist, semilla, horizonte)


@cli.command("compute")
@click.option("--law", "ley", required=True)
@click.option("--dist", type=click.Choice(DISTRIBUCIONES), default=DIST_GAUSSIANA, show_default=True)
@click.option("--seed", "semilla", type=TIPO_SEMILLA, default=1, show_default=True)
@click.option("--env", type=click.Path(exists=True, path_type=Path), default=None, help="Archivo PINENV1")
@click.option("--beta", type=float, required=True)
@click.option("--h", type=float, required=True)
@click.option("--L", "horizonte", type=int, required=True)
@click.option("--Nmax", "n_max", type=int, required=True)
@click.option("--out", "salida", type=click.Path(path_type=Path), required=True)
@_manejar_errores
def compute(ley, dist, semilla, env, beta, h, horizonte, n_max, salida):
    """Calcula las tablas de la escalera y las exporta en CSV columnar."""
    entorno = _entorno_de(env, dist, semilla, horizonte)
    tablas = calcular_escalera(entorno, _ley(ley, horizonte), ParametrosModelo(beta=beta, h=h), n_max, horizonte)
    ruta = exportar_tablas(tablas, salida)
    consola.print(f"log Z_L = {tablas.log_Z[-1]:.10g}, log Z_L,f = {tablas.log_Z_libre[-1]:.10g} -> {ruta}")


@cli.command("sample")
@click.option("--law", "ley", required=True)
@click.option("--dist", type=click.Choice(DISTRIBUCIONES), default=DIST_GAUSSIANA, show_default=True)
@click.option("--seed", "semilla", type=TIPO_SEMILLA, default=1, show_default=True)
@click.option("--env", type=click.Path(exists=True, path_type=Path), default=None)
@click.option("--beta", type=float, required=True)
@click.option("--h", type=float, required=True)
@click.option("--n", "n", type=int, required=True, help="Extremo del polímero")
@click.option("--samples", "muestras", type=int, default=None)
@click.option("--stream-seed", "semilla_flujo", type=TIPO_SEMILLA, default=0, show_default=True)
@click.option("--batches", "lotes", type=int, default=1, show_default=True)
@click.option("--exact", "exacta", is_flag=True, default=False, help="Añade la media exacta de saltos (escalera completa, O(n^3))")
@click.option("--out", "salida", type=click.Path(path_type=Path), required=True)
@_manejar_errores
def sample(ley, dist, semilla, env, beta, h, n, muestras, semilla_flujo, lotes, exacta, salida):
    """Muestrea caminos exactos bajo P_n y escribe caminos y estadísticas."""
    muestras = muestras or config.valor("muestreo", "muestras", 100000)
    entorno = _entorno_de(env, dist, semilla, n)
    ley_construida = _ley(ley, n)
    parametros = ParametrosModelo(beta=beta, h=h)
    log_Z = calcular_restringida(entorno, ley_construida, parametros, n)
    caminos = muestrear_caminos(log_Z, entorno, ley_construida, parametros, n, muestras, semilla_flujo, lotes)
    resumen = estadisticas_contactos(caminos)

    ruta_caminos = exportar_caminos(caminos, Path(salida).with_suffix(".txt"))
    registro = {"n": n, "beta": beta, "h": h, "semilla": entorno.semilla, "semilla_flujo": semilla_flujo,
                **resumen.model_dump()}
    mensaje = f"Media de saltos {resumen.media_saltos:.4f}"
    if exacta:
        tablas = calcular_escalera(entorno, ley_construida, parametros, n, n)
        distribucion = distribucion_contactos(tablas, n)
        registro["media_exacta"] = float(sum(N * p for N, p in enumerate(distribucion)))
        mensaje += f" (exacta {registro['media_exacta']:.4f})"
    ruta_resumen = escribir_registros([registro], salida)
    consola.print(mensaje)
    consola.print(f"Escrito: {ruta_caminos}, {ruta_resumen}")


@cli.command("free-energy")
@click.option("--law", "ley", required=True)
@click.option("--dist", type=click.Choice(DISTRIBUCIONES), default=DIST_GAUSSIANA, show_default=True)
@click.option("--beta", type=float, required=True)
@click.option("--h", type=float, required=True)
@click.option("--seeds", "semillas", default=None, help="'1-16' o '1,2,3'")
@click.option("--L", "horizonte", type=int, default=None)
@click.option("--engine", "motor", type=click.Choice([MOTOR_REFERENCIA, MOTOR_RAPIDO]), default=MOTOR_REFERENCIA)
@click.option("--out", "salida", type=click.Path(path_type=Path), default=None)
@_manejar_errores
def free_energy(ley, dist, beta, h, semillas, horizonte, motor, salida):
    """Energía libre de tamaño finito por semilla."""
    horizonte = horizonte or config.valor("escala", "horizonte", 4096)
    semillas = parsear_semillas(semillas) or config.valor("escala", "semillas", list(range(1, 17)))
    estimacion = estimar_fase(_ley(ley, horizonte), dist, ParametrosModelo(beta=beta, h=h), semillas, horizonte, motor)
    registros = [{"semilla": s, "n": horizonte, "f_hat": f} for s, f in estimacion.f_hat.items()]
    tabla = Table(title=f"f_hat (beta={beta}, h={h}, L={horizonte})")
    tabla.add_column("semilla", justify="right")
    tabla.add_column("f_hat", justify="right")
    for fila in registros:
        tabla.add_row(str(fila["semilla"]), f"{fila['f_hat']:.6e}")
    consola.print(tabla)
    consola.print(estimacion.diagnosticos)
    if not estimacion.respeta_cota_inferior():
        consola.print("[red]f_hat por debajo de la cota de un salto[/red]")
    if salida:
        tabla_registros(registros, "energia_libre").to_csv(Path(salida).with_suffix(".csv"), index=False)
        escribir_registros([estimacion.model_dump()], salida)
    sys.exit(SALIDA_OK if estimacion.respeta_cota_inferior() else SALIDA_FALLO)


@cli.command("hc")
@click.option("--law", "ley", required=True)
@click.option("--dist", type=click.Choice(DISTRIBUCIONES), default=DIST_GAUSSIANA, show_default=True)
@click.option("--beta", type=float, required=True)
@click.option("--seeds", "semillas", default=None)
@click.option("--L", "horizonte", type=int, default=None)
@click.option("--tol", type=float, default=None)
@click.option("--engine", "motor", type=click.Choice([MOTOR_REFERENCIA, MOTOR_RAPIDO]), default=MOTOR_REFERENCIA)
@click.option("--slope-h", "h_sonda", type=float, default=None, help="Añade el estimador de pendiente en este h")
@click.option("--Nmax", "n_max", type=int, default=None)
@click.option("--beta0", type=float, default=None, help="Comprueba el interior deslocalizado en h = h_c(beta0)")
@click.option("--out", "salida", type=click.Path(path_type=Path), default=None)
@_manejar_errores
def hc(ley, dist, beta, semillas, horizonte, tol, motor, h_sonda, n_max, beta0, salida):
    """Estima h_c(beta) por bisección (y opcionalmente por pendiente de la escalera)."""
    horizonte = horizonte or config.valor("escala", "horizonte", 4096)
    semillas = parsear_semillas(semillas) or config.valor("escala", "semillas", list(range(1, 17)))
    tol = tol or config.valor("biseccion", "tolerancia", 1e-3)
    ley_construida = _ley(ley, horizonte)

    resultado = estimar_hc_biseccion(ley_construida, dist, beta, semillas, horizonte, tol, motor=motor)
    consola.print(f"h_c(beta={beta}) ≈ {resultado.hc:.4f} ± {resultado.semiancho:.4f} (dispersión {resultado.dispersion:.2e})")
    registros = [{"tipo": "biseccion", **resultado.model_dump()}]

    if h_sonda is not None:
        n_max = n_max or config.valor("escala", "n_max", 128)
        entorno = generar_entorno(dist, semillas[0], horizonte)
        tablas = calcular_escalera(entorno, ley_construida, ParametrosModelo(beta=beta, h=h_sonda), n_max, horizonte)
        pendiente = estimar_hc_pendiente(tablas, h_sonda)
        consola.print(f"h_c por pendiente (sonda {h_sonda}): {pendiente.hc:.4f} ± {pendiente.incertidumbre:.2e}")
        registros.append({"tipo": "pendiente", **pendiente.model_dump()})

    if beta0 is not None:
        interior = interior_deslocalizado(ley_construida, dist, beta, beta0, semillas, horizonte, tol, motor)
        etiqueta = "interior deslocalizado" if interior["interior_deslocalizado"] else "no concluyente"
        consola.print(f"(beta={beta}, h=h_c({beta0})={interior['hc_beta0']:.4f}): {etiqueta}")
        registros.append({"tipo": "interior", **interior})

    if salida:
        filas = [{"h": p.h, "mediana_f": p.mediana_f, "umbral": p.umbral, "predicado": p.predicado}
                 for p in resultado.traza]
        tabla_registros(filas, "hc").to_csv(Path(salida).with_suffix(".csv"), index=False)
        escribir_registros(registros, salida)


# ----------------------------------------------------------------------
# Suites de verificación
# ----------------------------------------------------------------------


def opciones_verificacion(funcion: Callable) -> Callable:
    """Archivo de configuración más opciones que lo sobrescriben."""
    opciones = [
        click.option("--config", "ruta_config", type=click.Path(exists=True, path_type=Path), default=None),
        click.option("--law", "ley", default=None),
        click.option("--dist", "distribucion", type=click.Choice(DISTRIBUCIONES), default=None),
        click.option("--beta", type=float, default=None),
        click.option("--h", type=float, default=None),
        click.option("--seeds", "semillas", default=None),
        click.option("--L", "horizonte", type=int, default=None),
        click.option("--Nmax", "n_max", type=int, default=None),
        click.option("--epsilon", type=float, default=None),
        click.option("--c", type=float, default=None),
        click.option("--hc-ref", "hc_referencia", type=float, default=None),
        click.option("--engine", "motor", type=click.Choice([MOTOR_REFERENCIA, MOTOR_RAPIDO]), default=None),
        click.option("--out", "salida", type=click.Path(path_type=Path), default=None),
    ]
    for opcion in reversed(opciones):
        funcion = opcion(funcion)
    return funcion


def _config_verificacion(ruta_config, semillas, **sobrescrituras) -> ConfigVerificacion:
    return ConfigVerificacion.desde_yaml(ruta_config, semillas=parsear_semillas(semillas), **sobrescrituras)


@cli.command("verify-thm1")
@opciones_verificacion
@_manejar_errores
def verify_thm1(ruta_config, semillas, **opciones):
    """Función de partición acotada: sumas parciales e incrementos de Cauchy."""
    cfg = _config_verificacion(ruta_config, semillas, **opciones)
    _cerrar_informe(verificar_teorema1(cfg), cfg.salida)


@cli.command("verify-prop")
@opciones_verificacion
@_manejar_errores
def verify_prop(ruta_config, semillas, **opciones):
    """Decaimiento exponencial de T(N0) en el número de saltos."""
    cfg = _config_verificacion(ruta_config, semillas, **opciones)
    _cerrar_informe(verificar_proposicion(cfg), cfg.salida)


@cli.command("verify-thm2")
@opciones_verificacion
@_manejar_errores
def verify_thm2(ruta_config, semillas, **opciones):
    """Número logarítmico de contactos: cota de P_n(E_{n,N})."""
    cfg = _config_verificacion(ruta_config, semillas, **opciones)
    _cerrar_informe(verificar_teorema2(cfg), cfg.salida)


@cli.command("bench")
@opciones_verificacion
@_manejar_errores
def bench(ruta_config, semillas, **opciones):
    """Motor de referencia frente a motor rápido."""
    cfg = _config_verificacion(ruta_config, semillas, **opciones)
    informe = ejecutar_benchmark(cfg)
    consola.print(json.dumps({k: v for k, v in informe.resumen.items()}, indent=2, default=str))
    _cerrar_informe(informe, cfg.salida)


if __name__ == "__main__":
    cli()
