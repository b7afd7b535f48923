"""
IG-ODD - Verification Sweep Router
"""
from app.config import Settings
from app.curve_nbhd import verify_sweep
from app import services


def register(subparsers, common, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "verify", parents=[common], help="barrido fórmula contra oráculo sobre todas las clases"
    )
    parser.add_argument("--dmax", type=int, required=True)
    parser.add_argument("--jobs", type=int, default=settings.jobs)
    parser.add_argument("--max-vertices", type=int, default=settings.max_vertices)
    parser.set_defaults(handler=cmd_verify)


def cmd_verify(args, settings: Settings) -> int:
    """Informe JSON; código 0 si no hay discrepancias, 3 si las hay"""
    config = services.build_config(args)
    report = verify_sweep(config.space, args.dmax, args.jobs, args.max_vertices)
    print(services.dump_json(services.sweep_response(report)), end="")
    return 0 if report.clean else 3
