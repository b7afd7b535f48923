"""
IG-ODD - Parsing and Rendering Services

Las ventanas se escriben como enteros con signo separados por comas:
-i representa bar(i). Las particiones se escriben "a,b,c"; la vacía
puede escribirse como "", "()" o "empty".
"""
import json
from typing import Union

from pydantic import BaseModel, ValidationError

from app.schemas import (
    BCPartition,
    BKTPartition,
    CliConfig,
    CompResponse,
    Component,
    ComponentResponse,
    ConvertResponse,
    CosetRep,
    FormatEnum,
    IndexationEnum,
    InputResponse,
    NbhdResponse,
    NeighborhoodResult,
    SpaceParams,
    SpaceResponse,
    SweepReport,
    SweepResponse,
)
from app.exceptions import (
    InvalidInputError,
    InvalidPartitionError,
    InvalidSpaceError,
    InvalidWindowError,
)
from app.indexing import (
    bc_to_weyl,
    bkt_to_weyl,
    codimension,
    dimension,
    weyl_to_bc,
    weyl_to_bkt,
)
from app.moment_graph import classify_vertex

EMPTY_TOKENS = {"", "empty", "()"}


def _first_error(exc: ValidationError) -> str:
    return exc.errors()[0]["msg"].removeprefix("Value error, ")


# =====================================================
# PARSING
# =====================================================
def parse_int_list(text: str) -> tuple[int, ...]:
    if text.strip() in EMPTY_TOKENS:
        return ()
    cleaned = text.strip().strip("()")
    if not cleaned.strip():
        return ()
    try:
        return tuple(int(token) for token in cleaned.split(","))
    except ValueError:
        raise InvalidInputError(f"'{text}' no es una lista de enteros separados por comas")


def parse_space(k: int, n: int) -> SpaceParams:
    try:
        return SpaceParams(k=k, n=n)
    except ValidationError as exc:
        raise InvalidSpaceError(f"espacio inválido IG({k},{2 * n + 1}): {_first_error(exc)}")


def window_from_signed(space: SpaceParams, signed: tuple[int, ...]) -> CosetRep:
    values = []
    for v in signed:
        if v == 0 or abs(v) > space.rank:
            raise InvalidWindowError(f"la entrada {v} sale de ±1..±{space.rank}")
        values.append(v if v > 0 else space.bar(-v))
    if len(set(values)) != len(values):
        raise InvalidWindowError(f"la ventana {list(signed)} repite entradas")
    try:
        return CosetRep(space=space, window=tuple(sorted(values)))
    except ValidationError as exc:
        raise InvalidWindowError(_first_error(exc))


def to_signed(c: CosetRep) -> list[int]:
    rank = c.space.rank
    return [v if v <= rank else -c.space.bar(v) for v in c.window]


def parse_partition(space: SpaceParams, indexation: IndexationEnum, text: str) -> Union[BCPartition, BKTPartition]:
    parts = parse_int_list(text)
    try:
        if indexation == IndexationEnum.bc:
            return BCPartition(space=space, parts=parts)
        return BKTPartition(space=space, parts=parts)
    except ValidationError as exc:
        raise InvalidPartitionError(f"partición {indexation.value} inválida: {_first_error(exc)}")


def parse_value(space: SpaceParams, indexation: IndexationEnum, text: str) -> CosetRep:
    """Cualquier indexación se traduce a la ventana de Weyl"""
    if indexation == IndexationEnum.weyl:
        return window_from_signed(space, parse_int_list(text))
    value = parse_partition(space, indexation, text)
    if isinstance(value, BCPartition):
        return bc_to_weyl(value)
    return bkt_to_weyl(value)


def build_config(args) -> CliConfig:
    """Valida los flags comunes antes de cualquier cálculo"""
    space = parse_space(args.k, args.n)
    indexation = IndexationEnum(getattr(args, "index", IndexationEnum.weyl.value))
    d = getattr(args, "d", 0)
    if d < 0:
        raise InvalidInputError(f"el grado d={d} debe ser no negativo")
    text = getattr(args, "value", None)
    value = parse_value(space, indexation, text) if text is not None else None
    if value is not None and not value.is_odd:
        raise InvalidWindowError(f"{to_signed(value)} contiene bar(1): no es una clase de {space.label()}")
    return CliConfig(
        space=space,
        indexation=indexation,
        format=FormatEnum(args.format),
        d=d,
        value=value,
    )


# =====================================================
# RENDERING
# =====================================================
def render_indexation(c: CosetRep, indexation: IndexationEnum) -> list[int]:
    if indexation == IndexationEnum.weyl:
        return to_signed(c)
    if indexation == IndexationEnum.bc:
        return list(weyl_to_bc(c).padded())
    return list(weyl_to_bkt(c).parts)


def join(values: list[int]) -> str:
    return ",".join(str(v) for v in values)


def space_response(space: SpaceParams) -> SpaceResponse:
    return SpaceResponse(k=space.k, n=space.n)


def convert_response(c: CosetRep) -> ConvertResponse:
    return ConvertResponse(
        space=space_response(c.space),
        weyl=to_signed(c),
        bc=list(weyl_to_bc(c).padded()),
        bkt=list(weyl_to_bkt(c).parts),
        codim=codimension(c),
        dim=dimension(c.space),
        orbit=classify_vertex(c),
    )


def component_response(component: Component) -> ComponentResponse:
    return ComponentResponse(
        weyl=to_signed(component.weyl),
        bc=list(component.bc.padded()),
        bkt=list(component.bkt.parts),
        orbit=component.orbit,
    )


def nbhd_response(result: NeighborhoodResult, indexation: IndexationEnum, checked: bool = False) -> NbhdResponse:
    return NbhdResponse(
        space=space_response(result.space),
        input=InputResponse(
            indexation=indexation,
            value=render_indexation(result.source.weyl, indexation),
        ),
        d=result.d,
        components=[component_response(comp) for comp in result.components],
        method=result.method,
        check="ok" if checked else None,
    )


def comp_response(space: SpaceParams, d: int, indexation: IndexationEnum, classes: list[CosetRep]) -> CompResponse:
    return CompResponse(
        space=space_response(space),
        d=d,
        indexation=indexation,
        classes=[render_indexation(c, indexation) for c in classes],
    )


def sweep_response(report: SweepReport) -> SweepResponse:
    return SweepResponse(
        space=space_response(report.space),
        dmax=report.d_max,
        classes=report.classes,
        checks=report.checks,
        mismatches=list(report.mismatches),
        clean=report.clean,
    )


def render_convert_text(c: CosetRep) -> str:
    response = convert_response(c)
    lines = [
        f"space: {c.space.label()}",
        f"weyl: {join(response.weyl)}",
        f"bc: {join(response.bc)}",
        f"bkt: {join(response.bkt)}",
        f"codim: {response.codim}",
        f"dim: {response.dim}",
        f"orbit: {response.orbit.value}",
    ]
    return "\n".join(lines) + "\n"


def render_result_text(response: NbhdResponse) -> str:
    lines = [
        f"space: {SpaceParams(k=response.space.k, n=response.space.n).label()}",
        f"input: {join(response.input.value)} ({response.input.indexation.value})",
        f"d: {response.d}",
        f"method: {response.method.value}",
        f"components: {len(response.components)}",
    ]
    for comp in response.components:
        lines.append(
            f"  weyl: {join(comp.weyl)} | bc: {join(comp.bc)}"
            f" | bkt: {join(comp.bkt)} | orbit: {comp.orbit.value}"
        )
    if response.check:
        lines.append(f"check: {response.check}")
    return "\n".join(lines) + "\n"


def dump_json(response: BaseModel) -> str:
    """Un único documento JSON terminado en salto de línea"""
    payload = response.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, sort_keys=True) + "\n"
