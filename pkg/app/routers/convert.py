"""
IG-ODD - Convert Router
"""
from app.config import Settings
from app.schemas import FormatEnum, IndexationEnum
from app.exceptions import InvalidInputError
from app import services


def register(subparsers, common, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "convert", parents=[common], help="muestra una clase en las tres indexaciones"
    )
    parser.add_argument("--index", choices=[i.value for i in IndexationEnum], default=IndexationEnum.weyl.value)
    parser.add_argument("value", help="ventana con signo o partición separada por comas")
    parser.set_defaults(handler=cmd_convert)


def cmd_convert(args, settings: Settings) -> int:
    """Ventana, partición BC, partición BKT, codimensión y órbita"""
    config = services.build_config(args)
    if config.format == FormatEnum.dot:
        raise InvalidInputError("convert no admite --format dot")

    if config.format == FormatEnum.json:
        print(services.dump_json(services.convert_response(config.value)), end="")
    else:
        print(services.render_convert_text(config.value), end="")
    return 0
