"""
IG-ODD - Indexing

Biyecciones entre ventanas de Weyl, particiones BC (palabras 01) y
particiones BKT, junto con las reglas de un paso O_Y(1), O_Z(1), O°(1)
y el conjunto Comp(d) en ambos lenguajes de particiones.
"""
import logging
from typing import Union

from pydantic import ValidationError

from app.schemas import (
    BCPartition,
    BKTPartition,
    CosetRep,
    PhiDirectionEnum,
    SpaceParams,
    StepEnum,
    VariantEnum,
    Word01,
)
from app.exceptions import InvalidInputError, InvalidPartitionError, OrbitMismatchError
from app.weyl_core import phi_target

logger = logging.getLogger(__name__)

Partition = Union[BCPartition, BKTPartition]


# =====================================================
# PALABRAS 01
# =====================================================
def encode_01(mu: BCPartition) -> Word01:
    """D(mu)(p) = 1 sii p está en la ventana"""
    window = bc_to_weyl(mu).window
    bits = "".join("1" if p in window else "0" for p in range(1, mu.space.top + 1))
    return Word01(space=mu.space, bits=bits)


def decode_01(word: Word01, variant: VariantEnum = VariantEnum.even) -> BCPartition:
    space = word.space
    window = [p for p, bit in enumerate(word.bits, start=1) if bit == "1"]
    shift = 1 if variant == VariantEnum.odd else 0
    parts = [space.top - space.k - w + i - shift for i, w in enumerate(window, start=1)]
    try:
        return BCPartition(space=space, parts=tuple(parts), variant=variant)
    except ValidationError as exc:
        raise InvalidPartitionError(f"la palabra '{word.bits}' no codifica una partición BC: {exc.errors()[0]['msg']}")


def wingtip(lam: BCPartition) -> int:
    """Mayor m con D(i) != D(bar i) para todo i <= m"""
    space = lam.space
    window = set(bc_to_weyl(lam).window)
    m = 0
    for i in range(1, space.rank + 1):
        if (i in window) == (space.bar(i) in window):
            break
        m = i
    return m


# =====================================================
# CONVERSIONES BC
# =====================================================
def weyl_to_bc(c: CosetRep, variant: VariantEnum = VariantEnum.odd) -> BCPartition:
    """mu_i = (2n+2-k) - w_i + i; lambda = mu - 1^k"""
    space = c.space
    if variant == VariantEnum.odd and not c.is_odd:
        raise OrbitMismatchError(f"{list(c.window)} contiene bar(1) y no tiene partición impar")
    shift = 1 if variant == VariantEnum.odd else 0
    parts = [space.top - space.k - w + i - shift for i, w in enumerate(c.window, start=1)]
    return BCPartition(space=space, parts=tuple(parts), variant=variant)


def bc_to_weyl(lam: BCPartition) -> CosetRep:
    space = lam.space
    shift = 1 if lam.variant == VariantEnum.odd else 0
    window = [space.top - space.k - (p + shift) + i for i, p in enumerate(lam.padded(), start=1)]
    return CosetRep(space=space, window=tuple(window))


def odd_to_even(lam: BCPartition) -> BCPartition:
    """lambda + 1^k"""
    if lam.variant != VariantEnum.odd:
        raise InvalidPartitionError("odd_to_even espera una partición impar")
    return BCPartition(space=lam.space, parts=tuple(p + 1 for p in lam.padded()), variant=VariantEnum.even)


def even_to_odd(mu: BCPartition) -> BCPartition:
    """mu - 1^k, solo si mu tiene k partes positivas"""
    if mu.variant != VariantEnum.even:
        raise InvalidPartitionError("even_to_odd espera una partición par")
    if len(mu.parts) != mu.space.k:
        raise InvalidPartitionError(f"{list(mu.parts)} tiene una parte nula: su clase contiene bar(1)")
    return BCPartition(space=mu.space, parts=tuple(p - 1 for p in mu.parts), variant=VariantEnum.odd)


def bc_contains(lam: BCPartition, mu: BCPartition) -> bool:
    """lambda contiene a mu como diagrama de Young"""
    return all(lam.part(i) >= mu.part(i) for i in range(1, lam.space.k + 1))


# =====================================================
# CONVERSIONES BKT
# =====================================================
def weyl_to_bkt(c: CosetRep, variant: VariantEnum = VariantEnum.odd) -> BKTPartition:
    """
    beta_j = 2n+3-k - w_j + #{i<j : w_i + w_j > 2n+3}; alpha = beta - 1^k.
    La variante par devuelve beta en IG(k,2n+2).
    """
    space = c.space
    if variant == VariantEnum.odd and not c.is_odd:
        raise OrbitMismatchError(f"{list(c.window)} contiene bar(1) y no tiene partición impar")
    w = c.window
    limit = space.top + 1
    shift = 1 if variant == VariantEnum.odd else 0
    parts = []
    for j in range(space.k):
        crossings = sum(1 for i in range(j) if w[i] + w[j] > limit)
        parts.append(space.top + 1 - space.k - w[j] + crossings - shift)
    return BKTPartition(space=space, parts=tuple(parts), variant=variant)


def bkt_to_weyl(alpha: BKTPartition) -> CosetRep:
    """
    w_j = 2n+3-k - beta_j + #{i<j : beta_i + beta_j <= 2(n+1-k) + j - i}.
    Rechaza las particiones que no son (n+1-k)-estrictas o admisibles.
    """
    space = alpha.space
    shift = 1 if alpha.variant == VariantEnum.odd else 0
    beta = [p + shift for p in alpha.parts]
    bound = 2 * (space.rank - space.k)
    window = []
    for j in range(space.k):
        below = sum(1 for i in range(j) if beta[i] + beta[j] <= bound + j - i)
        window.append(space.top + 1 - space.k - beta[j] + below)

    detail = f"{list(alpha.parts)} no es una partición BKT válida de {space.label()}"
    try:
        c = CosetRep(space=space, window=tuple(sorted(window)))
    except ValidationError:
        raise InvalidPartitionError(detail)
    if alpha.variant == VariantEnum.odd and not c.is_odd:
        raise InvalidPartitionError(f"{detail}: la ventana {list(c.window)} contiene bar(1)")
    if tuple(window) != c.window or weyl_to_bkt(c, alpha.variant) != alpha:
        raise InvalidPartitionError(detail)
    return c


def bkt_strict_ok(alpha: BKTPartition) -> bool:
    """beta_j > beta_{j+1} siempre que beta_j > n+1-k, con beta = alpha + 1^k en la variante impar"""
    space = alpha.space
    shift = 1 if alpha.variant == VariantEnum.odd else 0
    beta = [p + shift for p in alpha.parts]
    threshold = space.rank - space.k
    if any(a > threshold and a <= b for a, b in zip(beta, beta[1:])):
        return False
    if alpha.variant == VariantEnum.odd and alpha.parts[-1] == -1:
        return alpha.parts[0] == space.max_part
    return True


def bc_to_bkt(lam: BCPartition) -> BKTPartition:
    return weyl_to_bkt(bc_to_weyl(lam), lam.variant)


def bkt_to_bc(alpha: BKTPartition) -> BCPartition:
    return weyl_to_bc(bkt_to_weyl(alpha), alpha.variant)


# =====================================================
# DIMENSIONES
# =====================================================
def dimension(space: SpaceParams) -> int:
    """dim IG(k,2n+1) = k(2n+1-k) - k(k-1)/2"""
    k = space.k
    return k * space.max_part - k * (k - 1) // 2


def codimension(c: CosetRep) -> int:
    """codim X(w) = |alpha|"""
    return weyl_to_bkt(c).size


# =====================================================
# REGLAS DE LÍNEA
# =====================================================
def tail_count(parts: tuple[int, ...], d: int, i: int) -> int:
    """l^d_i(lambda) = #{j > d : lambda_j > i}"""
    return sum(1 for p in parts[d:] if p > i)


def _bc_line(parts: list[int]) -> list[int]:
    """(mu_2 - 1, ..., mu_l - 1) sobre las partes positivas"""
    positive = [p for p in parts if p > 0]
    return [p - 1 for p in positive[1:]]


def _bkt_line(parts: list[int], bound: int) -> list[int]:
    """
    Regla de dos casos para la recta en el Grassmanniano par: si
    b_1 + b_j > bound + j - 1 para todo j >= 2 se obtiene (b_2, ..., b_k, 0);
    si no, con j mínimo se resta uno desde b_j.
    """
    k = len(parts)
    first = parts[0]
    cut = next((j for j in range(2, k + 1) if first + parts[j - 1] <= bound + j - 1), None)
    if cut is None:
        result = parts[1:] + [0]
    else:
        result = parts[1:cut - 1] + [p - 1 for p in parts[cut - 1:]] + [0]
    return [max(p, 0) for p in result]


def even_line_bc(mu: BCPartition) -> BCPartition:
    """Recta por la clase mu en el Grassmanniano par IG(k,2n+2)"""
    if mu.variant != VariantEnum.even:
        raise InvalidPartitionError("even_line_bc espera una partición par")
    return BCPartition(space=mu.space, parts=tuple(_bc_line(list(mu.padded()))), variant=VariantEnum.even)


def even_line_bkt(beta: BKTPartition) -> BKTPartition:
    if beta.variant != VariantEnum.even:
        raise InvalidPartitionError("even_line_bkt espera una partición par")
    space = beta.space
    parts = _bkt_line(list(beta.parts), 2 * (space.rank - space.k))
    return BKTPartition(space=space, parts=tuple(parts), variant=VariantEnum.even)


def phi_partition(value: Partition, direction: PhiDirectionEnum) -> Partition:
    """
    Phi sobre particiones: la identidad en la órbita Y; Phi_Z quita lambda_1 (BC)
    o envía alpha a (alpha_2 + 1, ..., alpha_k + 1) (BKT).
    """
    if value.variant != VariantEnum.odd:
        raise InvalidPartitionError("phi_partition espera una partición impar")
    target = phi_target(value.space, direction)
    first = value.parts[0] if value.parts else 0
    closed = first == value.space.max_part
    if direction == PhiDirectionEnum.Y and closed:
        raise OrbitMismatchError(f"{list(value.parts)} está en la órbita Z")
    if direction == PhiDirectionEnum.Z and not closed:
        raise OrbitMismatchError(f"{list(value.parts)} está en la órbita abierta")

    if isinstance(value, BCPartition):
        parts = value.parts if direction == PhiDirectionEnum.Y else value.parts[1:]
        return BCPartition(space=target, parts=parts, variant=VariantEnum.even)
    parts = value.parts if direction == PhiDirectionEnum.Y else tuple(p + 1 for p in value.parts[1:])
    return BKTPartition(space=target, parts=parts, variant=VariantEnum.even)


# =====================================================
# PASOS SOBRE PARTICIONES
# =====================================================
def _require_odd(value: Partition) -> None:
    if value.variant != VariantEnum.odd:
        raise InvalidPartitionError("los pasos O_Y, O_Z y O° usan particiones impares")


def _require_orbit(value: Partition, which: StepEnum) -> None:
    space = value.space
    first = value.parts[0] if value.parts else 0
    closed = first == space.max_part
    if which == StepEnum.ocirc and closed:
        raise OrbitMismatchError(f"O° exige la órbita abierta: {list(value.parts)} tiene primera parte {first}")
    if which != StepEnum.ocirc and not closed:
        raise OrbitMismatchError(
            f"{which.value} exige primera parte {space.max_part}: {list(value.parts)} no la tiene"
        )
    if which == StepEnum.oy and space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")


def bc_step(lam: BCPartition, which: StepEnum) -> BCPartition:
    _require_odd(lam)
    _require_orbit(lam, which)
    space = lam.space
    parts = list(lam.padded())

    if which == StepEnum.ocirc:
        return BCPartition(space=space, parts=tuple(_bc_line(parts)))
    if which == StepEnum.oz:
        return BCPartition(space=space, parts=tuple([parts[0]] + _bc_line(parts[1:])))

    # O_Y: según bar(m) esté o no en la palabra de mu = lambda + 1^k
    m = wingtip(lam)
    window = bc_to_weyl(lam).window
    position = space.bar(m)
    k = space.k
    if position in window:
        i = window.index(position) + 1
        new = [p - 1 for p in parts[1:i - 1]] + [parts[i - 1], parts[i - 1]] + parts[i:]
    else:
        i = sum(1 for v in window if v < position)
        j = m - k + i - 1
        new = [p - 1 for p in parts[1:i]] + [j] + parts[i:]
    return BCPartition(space=space, parts=tuple(new))


def bkt_step(alpha: BKTPartition, which: StepEnum) -> BKTPartition:
    _require_odd(alpha)
    _require_orbit(alpha, which)
    space = alpha.space
    parts = list(alpha.parts)
    k = space.k

    if which == StepEnum.ocirc:
        new = _bkt_line(parts, 2 * (space.n - space.k))
    elif which == StepEnum.oz:
        if k == 1:
            return alpha
        shifted = _bkt_line([p + 1 for p in parts[1:]], 2 * (space.n - space.k + 1))
        new = [parts[0]] + [p - 1 for p in shifted]
    else:
        last = max(j for j in range(1, k + 1) if parts[j - 1] > -1)
        new = parts[1:last] + [0] * (k + 1 - last)
    return BKTPartition(space=space, parts=tuple(new))


def step(value: Partition, which: StepEnum) -> Partition:
    if isinstance(value, BCPartition):
        return bc_step(value, which)
    return bkt_step(value, which)


def iterate_step(value: Partition, which: StepEnum, d: int) -> Partition:
    """
    lambda^{O°(d)}, lambda^{O_Z(d)} y lambda^{O_Y(d)} = (lambda^{O_Y(1)})^{O°(d-1)}
    """
    if d < 0:
        raise InvalidInputError(f"el grado d={d} debe ser no negativo")
    if d == 0:
        return value
    if which == StepEnum.oy:
        value = step(value, StepEnum.oy)
        which, d = StepEnum.ocirc, d - 1
    for _ in range(d):
        value = step(value, which)
    return value


# =====================================================
# COMP(d)
# =====================================================
def comp_member(value: Partition, d: int) -> bool:
    """
    Comp_BC(d): lambda_1 = 2n+1-k y lambda_{d+1} - l^{d+1}_{d-1}(lambda) - d = 2(n+1-k).
    Comp_BKT(d): alpha_1 = 2n+1-k y, con alpha' = alpha^{O_Z(d-1)},
    alpha'_2 - l^2_{-1}(alpha') >= 2(n+1-k).
    """
    _require_odd(value)
    if d < 1:
        raise InvalidInputError(f"Comp(d) requiere d >= 1 (d={d})")
    space = value.space
    parts = value.padded() if isinstance(value, BCPartition) else value.parts
    if parts[0] != space.max_part:
        raise OrbitMismatchError(f"{list(value.parts)} está en la órbita abierta; Comp(d) es para la órbita Z")
    if space.k > space.n:
        return False
    target = 2 * (space.rank - space.k)

    if isinstance(value, BCPartition):
        if d >= space.k:
            return False
        return parts[d] - tail_count(parts, d + 1, d - 1) - d == target

    if space.k < 2:
        return False
    shifted = iterate_step(value, StepEnum.oz, d - 1).parts
    return shifted[1] - tail_count(shifted, 2, -1) >= target
