"""
IG-ODD - Neighborhood Router
"""
import logging

from app.config import Settings
from app.schemas import FormatEnum, IndexationEnum
from app.exceptions import InvalidInputError, VerificationError
from app.curve_nbhd import nbhd_formula, nbhd_oracle
from app import services

logger = logging.getLogger(__name__)


def register(subparsers, common, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "nbhd", parents=[common], help="componentes irreducibles de Gamma_d(X(w))"
    )
    parser.add_argument("--d", type=int, required=True, help="grado de las curvas")
    parser.add_argument("--index", choices=[i.value for i in IndexationEnum], default=IndexationEnum.weyl.value)
    parser.add_argument("--check", action="store_true", help="compara con el oráculo del grafo de momentos")
    parser.add_argument("--max-vertices", type=int, default=settings.max_vertices)
    parser.add_argument("value", help="ventana con signo o partición separada por comas")
    parser.set_defaults(handler=cmd_nbhd)


def cmd_nbhd(args, settings: Settings) -> int:
    config = services.build_config(args)
    if config.format == FormatEnum.dot:
        raise InvalidInputError("nbhd no admite --format dot")

    result = nbhd_formula(config.space, config.value, config.d)

    if args.check:
        oracle = nbhd_oracle(config.space, config.value, config.d, args.max_vertices)
        expected = {comp.weyl for comp in result.components}
        found = {comp.weyl for comp in oracle.components}
        if expected != found:
            raise VerificationError(
                f"la fórmula da {sorted(services.to_signed(c) for c in expected)}"
                f" y el oráculo {sorted(services.to_signed(c) for c in found)}"
            )
        logger.info("comprobado contra el oráculo: %d componentes", len(found))

    response = services.nbhd_response(result, config.indexation, checked=args.check)
    if config.format == FormatEnum.json:
        print(services.dump_json(response), end="")
    else:
        print(services.render_result_text(response), end="")
    return 0
