"""
IG-ODD - Moment Graph Router
"""
from app.config import Settings
from app.schemas import FlavorEnum, FormatEnum
from app.moment_graph import build_graph, graph_response, to_dot
from app import services


def register(subparsers, common, settings: Settings) -> None:
    parser = subparsers.add_parser("graph", parents=[common], help="grafo de momentos en DOT o JSON")
    parser.add_argument("--flavor", choices=[f.value for f in FlavorEnum], default=FlavorEnum.odd.value)
    parser.add_argument("--max-vertices", type=int, default=settings.max_vertices)
    parser.set_defaults(handler=cmd_graph)


def cmd_graph(args, settings: Settings) -> int:
    config = services.build_config(args)
    g = build_graph(config.space, FlavorEnum(args.flavor), args.max_vertices)

    if config.format == FormatEnum.dot:
        print(to_dot(g), end="")
    elif config.format == FormatEnum.json:
        print(services.dump_json(graph_response(g)), end="")
    else:
        response = graph_response(g)
        print(f"graph: {config.space.label(g.flavor)}")
        print(f"vertices: {len(response.vertices)}")
        print(f"edges: {len(response.edges)}")
        for edge in response.edges:
            source = response.vertices[edge.source].window
            target = response.vertices[edge.target].window
            print(f"  {services.join(source)} -- {services.join(target)} (grado {edge.degree})")
    return 0
