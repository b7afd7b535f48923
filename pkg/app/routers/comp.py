"""
IG-ODD - Comp Router
"""
from app.config import Settings
from app.schemas import FormatEnum, IndexationEnum
from app.exceptions import InvalidInputError
from app.curve_nbhd import comp_set
from app import services


def register(subparsers, common, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "comp", parents=[common], help="clases de la órbita Z que están en Comp(d)"
    )
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--index", choices=[i.value for i in IndexationEnum], default=IndexationEnum.bc.value)
    parser.set_defaults(handler=cmd_comp)


def cmd_comp(args, settings: Settings) -> int:
    """Una clase por línea en la indexación elegida"""
    config = services.build_config(args)
    if config.format == FormatEnum.dot:
        raise InvalidInputError("comp no admite --format dot")

    response = services.comp_response(config.space, config.d, config.indexation, comp_set(config.space, config.d))

    if config.format == FormatEnum.json:
        print(services.dump_json(response), end="")
    else:
        for row in response.classes:
            print(services.join(row))
    return 0
