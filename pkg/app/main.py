"""
IG-ODD - Main Application
Vecindades de curvas en Grassmannianos simplécticos impares IG(k, 2n+1)
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app.config import Settings, get_settings
from app.exceptions import IGOddError
from app.schemas import FormatEnum
from app.routers import comp, convert, graph, nbhd, verify

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]

DESCRIPTION = """
Cálculo de vecindades de curvas de variedades de Schubert en IG(k, 2n+1).

Subcomandos:
  convert  una clase en las indexaciones weyl, BC y BKT
  nbhd     componentes de Gamma_d(X(w)), con --check contra el oráculo
  comp     clases de la órbita Z que están en Comp(d)
  graph    grafo de momentos en DOT o JSON
  verify   barrido fórmula contra oráculo en todo el espacio

Las ventanas usan -i para bar(i). Si el valor empieza por '-', sepárelo con '--'.
"""


def configure_logging(level: str) -> None:
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ig-odd",
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")

    # Flags comunes a todos los subcomandos
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, required=True, help="dimensión de los subespacios")
    common.add_argument("--n", type=int, required=True, help="IG(k, 2n+1)")
    common.add_argument(
        "--format",
        choices=[f.value for f in FormatEnum],
        default=settings.default_format.value,
    )
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=settings.log_level.upper(),
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    # Incluir routers
    for router in (convert, nbhd, comp, graph, verify):
        router.register(subparsers, common, settings)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(args.log_level)
    logger.debug("comando %s con k=%d n=%d", args.command, args.k, args.n)
    try:
        return args.handler(args, settings)
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return 2
    except IGOddError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
