"""
IG-ODD - Moment Graph

Grafo de momentos de IG(k,2n+2) y su subgrafo inducido impar IG(k,2n+1),
con grados de curva 1 o 2, y el oráculo de fuerza bruta para vecindades
de curvas: cadenas de grado acumulado <= d desde el ideal de Bruhat.
"""
import logging
from functools import lru_cache
from math import comb

import networkx as nx

from app.schemas import (
    ChainQuery,
    CosetRep,
    EdgeResponse,
    FlavorEnum,
    GraphResponse,
    OrbitEnum,
    PhiDirectionEnum,
    PositiveRoot,
    SpaceParams,
    SpaceResponse,
    VertexResponse,
)
from app.exceptions import InvalidInputError, OrbitMismatchError, ResourceLimitError
from app.weyl_core import (
    bruhat_leq,
    classify_root,
    coset_rep,
    enumerate_cosets,
    lift,
    noncompact_roots,
    phi_map,
    reflect,
)

logger = logging.getLogger(__name__)


# Colores por órbita para la salida DOT
ORBIT_COLORS = {
    OrbitEnum.Y: "black",
    OrbitEnum.Z: "red",
    OrbitEnum.even_only: "blue",
}
Z_TO_Y_COLOR = "green"


class MomentGraph:
    """Grafo no dirigido de networkx cuyos nodos son CosetRep"""

    def __init__(self, space: SpaceParams, flavor: FlavorEnum, graph: nx.Graph):
        self.space = space
        self.flavor = flavor
        self.graph = graph

    @property
    def vertices(self) -> list[CosetRep]:
        return sorted(self.graph.nodes, key=lambda c: c.window)

    def edges(self) -> list[tuple[CosetRep, CosetRep, int]]:
        """Aristas (u, v, grado) con u antes que v en orden lexicográfico"""
        result = []
        for u, v, degree in self.graph.edges(data="degree"):
            if v.window < u.window:
                u, v = v, u
            result.append((u, v, degree))
        return sorted(result, key=lambda e: (e[0].window, e[1].window))

    def degree(self, u: CosetRep, v: CosetRep) -> int:
        return self.graph.edges[u, v]["degree"]

    def roots(self, u: CosetRep, v: CosetRep) -> list[str]:
        return sorted(self.graph.edges[u, v]["roots"])

    def __contains__(self, c: CosetRep) -> bool:
        return c in self.graph

    def __len__(self) -> int:
        return self.graph.number_of_nodes()


# =====================================================
# CONSTRUCCIÓN
# =====================================================
def vertex_count(space: SpaceParams, flavor: FlavorEnum) -> int:
    """binom(n+1,k) 2^k en el caso par; en el impar se descuentan las ventanas con bar(1)"""
    even = comb(space.rank, space.k) * 2 ** space.k
    if flavor == FlavorEnum.even:
        return even
    return even - comb(space.n, space.k - 1) * 2 ** (space.k - 1)


def edge_degree(space: SpaceParams, root: PositiveRoot) -> int:
    """1 para R1+, 2 para R2+"""
    degree = classify_root(space, root)
    if degree is None:
        raise InvalidInputError(f"la raíz {root.label} está en R_P+ y no da aristas")
    return degree


@lru_cache(maxsize=32)
def _build(space: SpaceParams, flavor: FlavorEnum) -> MomentGraph:
    roots = [(root, edge_degree(space, root)) for root in noncompact_roots(space)]
    graph = nx.Graph()
    vertices = enumerate_cosets(space, FlavorEnum.even)
    graph.add_nodes_from(vertices)

    for u in vertices:
        element = lift(u)
        for root, degree in roots:
            v = coset_rep(space, reflect(element, root))
            if v == u:
                continue
            # las etiquetas se leen desde el extremo menor
            labels = {root.label} if u.window < v.window else set()
            if graph.has_edge(u, v):
                data = graph.edges[u, v]
                data["degree"] = min(data["degree"], degree)
                data["roots"] |= labels
            else:
                graph.add_edge(u, v, degree=degree, roots=labels)

    if flavor == FlavorEnum.odd:
        graph = graph.subgraph([c for c in vertices if c.is_odd]).copy()

    logger.debug(
        "grafo de %s: %d vértices, %d aristas",
        space.label(flavor), graph.number_of_nodes(), graph.number_of_edges(),
    )
    return MomentGraph(space, flavor, nx.freeze(graph))


def build_graph(space: SpaceParams, flavor: FlavorEnum = FlavorEnum.odd, max_vertices: int | None = None) -> MomentGraph:
    if max_vertices is not None:
        expected = vertex_count(space, flavor)
        if expected > max_vertices:
            raise ResourceLimitError(
                f"{space.label(flavor)} tiene {expected} vértices (límite {max_vertices})"
            )
    return _build(space, flavor)


def vertex_orbit(c: CosetRep) -> OrbitEnum:
    if not c.is_odd:
        return OrbitEnum.even_only
    return OrbitEnum.Y if c.is_open else OrbitEnum.Z


def classify_vertex(c: CosetRep) -> OrbitEnum:
    """Órbita Y (evita el 1) o Z (contiene el 1) de una clase impar"""
    orbit = vertex_orbit(c)
    if orbit == OrbitEnum.even_only:
        raise OrbitMismatchError(f"{list(c.window)} contiene bar(1) y no es un vértice impar")
    return orbit


def barred_count(u: CosetRep) -> int:
    """phi(u): número de entradas barradas de la ventana"""
    return sum(1 for v in u.window if v > u.space.rank)


# =====================================================
# ORÁCULO
# =====================================================
def min_degree_map(g: MomentGraph, query: ChainQuery) -> dict[CosetRep, int]:
    """Grado mínimo de cadena desde las fuentes, para los vértices alcanzados con presupuesto d"""
    missing = [list(c.window) for c in query.sources if c not in g]
    if missing:
        raise InvalidInputError(f"los vértices {missing} no están en {g.space.label(g.flavor)}")
    if not query.sources:
        raise InvalidInputError("la consulta necesita al menos un vértice fuente")
    return nx.multi_source_dijkstra_path_length(
        g.graph, set(query.sources), cutoff=query.budget, weight="degree"
    )


def bruhat_down_set(g: MomentGraph, w: CosetRep) -> list[CosetRep]:
    return [u for u in g.vertices if bruhat_leq(u, w)]


def maximal_elements(vertices: list[CosetRep]) -> list[CosetRep]:
    return sorted(
        (v for v in vertices if not any(u != v and bruhat_leq(v, u) for u in vertices)),
        key=lambda c: c.window,
    )


def oracle_nbhd(g: MomentGraph, w: CosetRep, d: int) -> list[CosetRep]:
    """Elementos Bruhat-maximales alcanzables desde {u <= w} con cadenas de grado <= d"""
    if w not in g:
        raise InvalidInputError(f"{list(w.window)} no es un vértice de {g.space.label(g.flavor)}")
    down = bruhat_down_set(g, w)
    reached = min_degree_map(g, ChainQuery(sources=frozenset(down), budget=d))
    result = maximal_elements(list(reached))
    logger.debug(
        "oráculo %s d=%d: ideal %d, alcanzados %d, maximales %d",
        list(w.window), d, len(down), len(reached), len(result),
    )
    return result


def even_oracle_nbhd(g: MomentGraph, w: CosetRep, d: int) -> list[CosetRep]:
    """Oráculo sobre el Grassmanniano par IG(k,2n+2)"""
    if g.flavor != FlavorEnum.even:
        raise InvalidInputError("even_oracle_nbhd requiere el grafo par")
    return oracle_nbhd(g, w, d)


# =====================================================
# PHI SOBRE EL GRAFO
# =====================================================
def phi_graph_image(g: MomentGraph, direction: PhiDirectionEnum) -> nx.Graph:
    """Subgrafo inducido de una órbita, reetiquetado por Phi o Phi_Z"""
    if g.flavor != FlavorEnum.odd:
        raise InvalidInputError("phi_graph_image requiere el grafo impar")
    orbit = OrbitEnum.Y if direction == PhiDirectionEnum.Y else OrbitEnum.Z
    chosen = [c for c in g.vertices if vertex_orbit(c) == orbit]
    sub = g.graph.subgraph(chosen)
    return nx.relabel_nodes(sub, {c: phi_map(c, direction) for c in chosen}, copy=True)


# =====================================================
# EXPORTACIÓN
# =====================================================
def _signed(c: CosetRep) -> list[int]:
    rank = c.space.rank
    return [v if v <= rank else -c.space.bar(v) for v in c.window]


def _edge_color(u: CosetRep, v: CosetRep) -> str:
    orbits = {vertex_orbit(u), vertex_orbit(v)}
    return Z_TO_Y_COLOR if orbits == {OrbitEnum.Y, OrbitEnum.Z} else "black"


def to_dot(g: MomentGraph) -> str:
    vertices = g.vertices
    index = {c: i for i, c in enumerate(vertices)}
    lines = [f'graph "{g.space.label(g.flavor)}" {{']
    for c in vertices:
        label = ",".join(str(v) for v in _signed(c))
        color = ORBIT_COLORS[vertex_orbit(c)]
        lines.append(f'  N{index[c]}[label="{label}",color={color}];')
    for u, v, degree in g.edges():
        lines.append(f"  N{index[u]} -- N{index[v]}[label={degree},color={_edge_color(u, v)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_response(g: MomentGraph) -> GraphResponse:
    vertices = g.vertices
    index = {c: i for i, c in enumerate(vertices)}
    return GraphResponse(
        space=SpaceResponse(k=g.space.k, n=g.space.n),
        flavor=g.flavor,
        vertices=[
            VertexResponse(id=index[c], window=_signed(c), orbit=vertex_orbit(c))
            for c in vertices
        ],
        edges=[
            EdgeResponse(source=index[u], target=index[v], degree=degree, roots=g.roots(u, v))
            for u, v, degree in g.edges()
        ],
    )


def to_json(g: MomentGraph) -> dict:
    return graph_response(g).model_dump(mode="json")
