"""
IG-ODD - Curve Neighborhoods

Vecindades de curvas Gamma_d(X(w)) en IG(k,2n+1) por fórmula cerrada:
- w en la órbita abierta: una componente, w ·_k O°(d).
- w(1) = 1: w·O_Y(d) y w·O_Z(d); son dos componentes exactamente cuando
  la partición de w está en Comp(d), y si no O_Z(d) queda contenida en O_Y(d).
Incluye el oráculo de fuerza bruta y el barrido que compara ambos.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from app.schemas import (
    BCPartition,
    Component,
    CosetRep,
    FlavorEnum,
    IndexationEnum,
    MethodEnum,
    NeighborhoodResult,
    SpaceParams,
    StepEnum,
    SweepReport,
)
from app.exceptions import (
    InvalidInputError,
    OrbitMismatchError,
    ResourceLimitError,
    VerificationError,
)
from app.weyl_core import (
    bruhat_leq,
    coset_rep,
    enumerate_cosets,
    hecke_mul,
    identity,
    identity_coset,
    lift,
    modified_hecke_mul,
    o_word,
)
from app.indexing import (
    bc_to_weyl,
    bkt_to_weyl,
    comp_member,
    iterate_step,
    weyl_to_bc,
    weyl_to_bkt,
)
from app.moment_graph import build_graph, classify_vertex, oracle_nbhd, vertex_count

logger = logging.getLogger(__name__)


# =====================================================
# PRODUCTOS ITERADOS
# =====================================================
def _require_space(space: SpaceParams, c: CosetRep) -> None:
    if c.space != space:
        raise InvalidInputError(f"{list(c.window)} no es una clase de {space.label()}")
    if not c.is_odd:
        raise OrbitMismatchError(f"{list(c.window)} contiene bar(1) y no es una clase de {space.label()}")


def _check_degree(d: int) -> None:
    if d < 0:
        raise InvalidInputError(f"el grado d={d} debe ser no negativo")


def hecke_step(c: CosetRep, which: StepEnum) -> CosetRep:
    """Un paso O(1) por producto de Hecke sobre el representante minimal"""
    space = c.space
    word = o_word(space, which)
    if which == StepEnum.ocirc:
        if not c.is_open:
            raise OrbitMismatchError(f"O° exige una clase de W°; {list(c.window)} contiene el 1")
        return coset_rep(space, modified_hecke_mul(lift(c), word, space.k))
    if c.is_open:
        raise OrbitMismatchError(f"{which.value} exige w(1) = 1; {list(c.window)} no lo cumple")
    if which == StepEnum.oy and space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
    return coset_rep(space, hecke_mul(lift(c), word))


def ocirc_power(c: CosetRep, d: int) -> CosetRep:
    """w ·_k O°(d)"""
    _check_degree(d)
    for _ in range(d):
        c = hecke_step(c, StepEnum.ocirc)
    return c


def oz_power(c: CosetRep, d: int) -> CosetRep:
    """w · O_Z(d)"""
    _check_degree(d)
    for _ in range(d):
        c = hecke_step(c, StepEnum.oz)
    return c


def oy_power(c: CosetRep, d: int, d1: int = 0) -> CosetRep:
    """w · O_Y(d) = ((w · O_Z(d1)) · O_Y(1)) ·_k O°(d2), con d1 + d2 = d - 1"""
    _check_degree(d)
    if d == 0:
        return c
    if not 0 <= d1 <= d - 1:
        raise InvalidInputError(f"la partición d1={d1} debe cumplir 0 <= d1 <= d-1={d - 1}")
    c = oz_power(c, d1)
    c = hecke_step(c, StepEnum.oy)
    return ocirc_power(c, d - 1 - d1)


def apply_o(space: SpaceParams, c: CosetRep, which: StepEnum, d: int, d1: int = 0) -> CosetRep:
    _require_space(space, c)
    if which == StepEnum.ocirc:
        return ocirc_power(c, d)
    if which == StepEnum.oz:
        return oz_power(c, d)
    return oy_power(c, d, d1)


def even_zd(space: SpaceParams, d: int) -> CosetRep:
    """
    z_d del Grassmanniano par: producto de Hecke de la identidad con d copias
    de la palabra de s_{2t_1}, reducido a W/W_P.
    """
    _check_degree(d)
    word = o_word(space, StepEnum.ocirc) * d
    return coset_rep(space, hecke_mul(identity(space), word))


# =====================================================
# FORMAS CERRADAS
# =====================================================
def closed_form_ocirc_id_y(space: SpaceParams, d: int) -> CosetRep:
    """id_Y ·_k O°(d) = (d+2<...<k+1<bar(d+1)<...<bar2), estable desde d = k"""
    _check_degree(d)
    if space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
    k = space.k
    d = min(d, k)
    window = list(range(d + 2, k + 2)) + [space.bar(j) for j in range(d + 1, 1, -1)]
    return CosetRep(space=space, window=tuple(window))


def closed_form_oy(space: SpaceParams, d: int) -> CosetRep:
    """O_Y(d): la componente de la órbita Y en la vecindad del punto de Schubert"""
    _check_degree(d)
    if d == 0:
        return identity_coset(space)
    if space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
    k = space.k
    if d >= k:
        window = [space.bar(j) for j in range(k + 1, 1, -1)]
    else:
        window = list(range(d + 1, k + 1)) + [space.bar(k + 1)] + [space.bar(j) for j in range(d, 1, -1)]
    return CosetRep(space=space, window=tuple(window))


def closed_form_oz(space: SpaceParams, d: int) -> CosetRep:
    """O_Z(d) = (1<d+2<...<k<bar(d+1)<...<bar2), estable desde d = k-1"""
    _check_degree(d)
    k = space.k
    d = min(d, k - 1)
    window = [1] + list(range(d + 2, k + 1)) + [space.bar(j) for j in range(d + 1, 1, -1)]
    return CosetRep(space=space, window=tuple(window))


# =====================================================
# VECINDADES
# =====================================================
def make_component(c: CosetRep, candidate: Optional[StepEnum] = None) -> Component:
    return Component(
        weyl=c,
        bc=weyl_to_bc(c),
        bkt=weyl_to_bkt(c),
        orbit=classify_vertex(c),
        candidate=candidate,
    )


def nbhd_formula(space: SpaceParams, c: CosetRep, d: int) -> NeighborhoodResult:
    """Componentes irreducibles de Gamma_d(X(w)) según el teorema principal"""
    _require_space(space, c)
    _check_degree(d)
    source = make_component(c)

    if d == 0:
        components = [source]
    elif c.is_open:
        components = [make_component(ocirc_power(c, d), StepEnum.ocirc)]
    elif space.k > space.n:
        components = [make_component(oz_power(c, d), StepEnum.oz)]
    else:
        y = oy_power(c, d)
        z = oz_power(c, d)
        if comp_member(weyl_to_bc(c), d):
            if bruhat_leq(y, z) or bruhat_leq(z, y):
                raise VerificationError(
                    f"{list(y.window)} y {list(z.window)} deberían ser incomparables (d={d})"
                )
            components = [make_component(y, StepEnum.oy), make_component(z, StepEnum.oz)]
            logger.debug("Gamma_%d(%s): dos componentes", d, list(c.window))
        else:
            if not bruhat_leq(z, y):
                raise VerificationError(
                    f"{list(z.window)} debería estar contenido en {list(y.window)} (d={d})"
                )
            components = [make_component(y, StepEnum.oy)]
            logger.debug("Gamma_%d(%s): O_Y domina a O_Z", d, list(c.window))

    return NeighborhoodResult(
        space=space,
        source=source,
        d=d,
        components=tuple(sorted(components, key=lambda comp: comp.weyl.window)),
        method=MethodEnum.formula,
    )


def nbhd_oracle(space: SpaceParams, c: CosetRep, d: int, max_vertices: Optional[int] = None) -> NeighborhoodResult:
    """Misma vecindad calculada en el grafo de momentos impar"""
    _require_space(space, c)
    _check_degree(d)
    g = build_graph(space, FlavorEnum.odd, max_vertices)
    maximal = oracle_nbhd(g, c, d)
    return NeighborhoodResult(
        space=space,
        source=make_component(c),
        d=d,
        components=tuple(make_component(v) for v in maximal),
        method=MethodEnum.oracle,
    )


def nbhd_partition(space: SpaceParams, indexation: IndexationEnum, value, d: int) -> list:
    """
    Teorema en lenguaje de particiones: lambda^{O°(d)} en la órbita abierta;
    si no, lambda^{O_Y(d)} y, si lambda está en Comp(d), también lambda^{O_Z(d)}.
    """
    _check_degree(d)
    if indexation == IndexationEnum.weyl:
        raise InvalidInputError("nbhd_partition trabaja con particiones BC o BKT")
    if value.space != space:
        raise InvalidInputError(f"la partición no pertenece a {space.label()}")
    if d == 0:
        return [value]
    first = value.parts[0] if value.parts else 0
    if first != space.max_part:
        return [iterate_step(value, StepEnum.ocirc, d)]
    if space.k > space.n:
        return [iterate_step(value, StepEnum.oz, d)]
    result = [iterate_step(value, StepEnum.oy, d)]
    if comp_member(value, d):
        result.append(iterate_step(value, StepEnum.oz, d))
    return result


def partition_to_weyl(value) -> CosetRep:
    if isinstance(value, BCPartition):
        return bc_to_weyl(value)
    return bkt_to_weyl(value)


# =====================================================
# BARRIDO DE VERIFICACIÓN
# =====================================================
def _windows(result: NeighborhoodResult) -> set:
    return {comp.weyl for comp in result.components}


def _check_class(space: SpaceParams, c: CosetRep, d_max: int) -> tuple[int, list[str]]:
    """Todas las comprobaciones de una clase para 0 <= d <= d_max"""
    checks = 0
    problems = []
    name = f"{space.label()} {list(c.window)}"
    bc = weyl_to_bc(c)
    bkt = weyl_to_bkt(c)
    closed = not c.is_open

    for d in range(d_max + 1):
        formula = nbhd_formula(space, c, d)
        oracle = nbhd_oracle(space, c, d)
        checks += 1
        if _windows(formula) != _windows(oracle):
            problems.append(
                f"{name} d={d}: fórmula {sorted(list(v.window) for v in _windows(formula))}"
                f" != oráculo {sorted(list(v.window) for v in _windows(oracle))}"
            )

        for indexation, value in ((IndexationEnum.bc, bc), (IndexationEnum.bkt, bkt)):
            checks += 1
            from_parts = {partition_to_weyl(p) for p in nbhd_partition(space, indexation, value, d)}
            if from_parts != _windows(formula):
                problems.append(f"{name} d={d}: la regla {indexation.value} no coincide con la fórmula")

        if d == 0 or not closed:
            continue

        # Comp(d) en ambos lenguajes y número de componentes
        checks += 1
        in_bc = comp_member(bc, d)
        in_bkt = comp_member(bkt, d)
        if in_bc != in_bkt:
            problems.append(f"{name} d={d}: Comp_BC={in_bc} pero Comp_BKT={in_bkt}")
        if (len(oracle.components) == 2) != in_bc:
            problems.append(f"{name} d={d}: {len(oracle.components)} componentes con Comp={in_bc}")

        # Cualquier reparto d1 + d2 = d - 1 da el mismo O_Y(d)
        if space.k <= space.n:
            checks += 1
            canonical = oy_power(c, d)
            for d1 in range(1, d):
                if oy_power(c, d, d1) != canonical:
                    problems.append(f"{name} d={d}: O_Y(d) depende del reparto d1={d1}")

    return checks, problems


def verify_sweep(space: SpaceParams, d_max: int, jobs: int = 1, max_vertices: Optional[int] = None) -> SweepReport:
    """Compara fórmula, reglas de particiones y oráculo en todas las clases de IG(k,2n+1)"""
    if d_max < 0:
        raise InvalidInputError(f"dmax={d_max} debe ser no negativo")
    if jobs < 1:
        raise InvalidInputError(f"jobs={jobs} debe ser al menos 1")
    if max_vertices is not None and vertex_count(space, FlavorEnum.even) > max_vertices:
        raise ResourceLimitError(
            f"{space.label()} supera el límite de {max_vertices} vértices"
        )
    # El grafo se construye una vez, antes de repartir el trabajo
    build_graph(space, FlavorEnum.odd)
    classes = enumerate_cosets(space, FlavorEnum.odd)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(lambda c: _check_class(space, c, d_max), classes))

    checks = sum(count for count, _ in results)
    mismatches = [problem for _, problems in results for problem in problems]
    for problem in mismatches:
        logger.warning("discrepancia: %s", problem)
    logger.debug("barrido %s dmax=%d: %d clases, %d comprobaciones", space.label(), d_max, len(classes), checks)

    return SweepReport(
        space=space,
        d_max=d_max,
        classes=len(classes),
        checks=checks,
        mismatches=tuple(mismatches),
    )


def comp_set(space: SpaceParams, d: int) -> list[CosetRep]:
    """Clases de la órbita Z cuya partición está en Comp(d)"""
    if d < 1:
        raise InvalidInputError(f"Comp(d) requiere d >= 1 (d={d})")
    return [
        c for c in enumerate_cosets(space, FlavorEnum.odd)
        if not c.is_open and comp_member(weyl_to_bc(c), d)
    ]

