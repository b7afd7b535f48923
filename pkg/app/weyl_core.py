"""
IG-ODD - Weyl Core

Permutaciones con signo del grupo de tipo C_{n+1}, productos de Hecke
(usual y modificado), representantes minimales de W/W_P, orden de Bruhat
sobre W^P y las biyecciones Phi.
"""
import logging
from itertools import combinations
from typing import Iterable, Sequence

from app.schemas import (
    CosetRep,
    FlavorEnum,
    PhiDirectionEnum,
    PositiveRoot,
    RootKindEnum,
    SignedPermutation,
    SpaceParams,
    StepEnum,
)
from app.exceptions import InvalidInputError, InvalidSpaceError, OrbitMismatchError

logger = logging.getLogger(__name__)


# =====================================================
# ELEMENTOS DEL GRUPO
# =====================================================
def _bar(rank: int, v: int) -> int:
    return 2 * rank + 1 - v


def _check_space(space: SpaceParams, w: SignedPermutation) -> None:
    if w.rank != space.rank:
        raise InvalidInputError(
            f"la ventana {list(w.window)} no pertenece a W de {space.label()}"
        )


def identity(space: SpaceParams) -> SignedPermutation:
    return SignedPermutation(window=tuple(range(1, space.rank + 1)))


def longest_element(space: SpaceParams) -> SignedPermutation:
    """Elemento más largo de W: ventana (bar1, ..., bar(n+1))"""
    return SignedPermutation(window=tuple(space.bar(i) for i in range(1, space.rank + 1)))


def simple_reflection(space: SpaceParams, i: int) -> SignedPermutation:
    return right_multiply(identity(space), i)


def length(w: SignedPermutation) -> int:
    """
    Longitud de Coxeter:
    #{i<j : w(i) > w(j)} + #{i<=j : w(i) + w(j) > 2n+3}
    """
    window = w.window
    limit = 2 * w.rank + 1
    total = 0
    for a in range(w.rank):
        for b in range(a, w.rank):
            if a < b and window[a] > window[b]:
                total += 1
            if window[a] + window[b] > limit:
                total += 1
    return total


def right_multiply(w: SignedPermutation, i: int) -> SignedPermutation:
    """w * s_i: intercambia las posiciones i, i+1 (i <= n) o barra la última (i = n+1)"""
    rank = w.rank
    if not 1 <= i <= rank:
        raise InvalidInputError(f"s_{i} no es una reflexión simple de C_{rank}")
    window = list(w.window)
    if i < rank:
        window[i - 1], window[i] = window[i], window[i - 1]
    else:
        window[-1] = _bar(rank, window[-1])
    return SignedPermutation(window=tuple(window))


def apply_word(w: SignedPermutation, word: Iterable[int]) -> SignedPermutation:
    for i in word:
        w = right_multiply(w, i)
    return w


def is_ascent(w: SignedPermutation, i: int) -> bool:
    """l(w s_i) > l(w)"""
    if i < w.rank:
        return w.window[i - 1] < w.window[i]
    return w.window[-1] <= w.rank


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Palabra reducida por descensos sucesivos a la derecha"""
    letters = []
    current = w
    while True:
        descent = next(
            (i for i in range(1, current.rank + 1) if not is_ascent(current, i)), None
        )
        if descent is None:
            break
        letters.append(descent)
        current = right_multiply(current, descent)
    return tuple(reversed(letters))


# =====================================================
# PRODUCTOS DE HECKE
# =====================================================
def hecke_mul(w: SignedPermutation, word: Sequence[int]) -> SignedPermutation:
    """w · s_i multiplica solo cuando s_i es un ascenso"""
    for i in word:
        if is_ascent(w, i):
            w = right_multiply(w, i)
    return w


def modified_hecke_mul(w: SignedPermutation, word: Sequence[int], k: int) -> SignedPermutation:
    """
    Producto ·_k: como hecke_mul pero s_k se aplica siempre.
    Solo está definido para elementos de W°, cuya ventana w(1..k) evita el 1.
    """
    if 1 in w.window[:k]:
        raise OrbitMismatchError(
            f"·_{k} exige una clase de W°; la ventana {list(w.window[:k])} contiene el 1"
        )
    for i in word:
        if i == k or is_ascent(w, i):
            w = right_multiply(w, i)
    return w


# =====================================================
# COCLASES W/W_P
# =====================================================
def coset_rep(space: SpaceParams, w: SignedPermutation) -> CosetRep:
    _check_space(space, w)
    return CosetRep(space=space, window=tuple(sorted(w.window[: space.k])))


def lift(c: CosetRep) -> SignedPermutation:
    """Elemento de longitud mínima de la coclase"""
    space = c.space
    used = {space.absolute(v) for v in c.window}
    rest = [v for v in range(1, space.rank + 1) if v not in used]
    return SignedPermutation(window=c.window + tuple(rest))


def coset_length(c: CosetRep) -> int:
    return length(lift(c))


def identity_coset(space: SpaceParams) -> CosetRep:
    """El punto de Schubert (1<2<...<k)"""
    return CosetRep(space=space, window=tuple(range(1, space.k + 1)))


def id_y(space: SpaceParams) -> CosetRep:
    """id_Y = (2<3<...<k+1), mínimo de la órbita abierta"""
    if space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
    return CosetRep(space=space, window=tuple(range(2, space.k + 2)))


def enumerate_cosets(space: SpaceParams, flavor: FlavorEnum = FlavorEnum.odd) -> list[CosetRep]:
    """Todas las ventanas isotrópicas, en orden lexicográfico"""
    alphabet = range(1, space.top + (0 if flavor == FlavorEnum.odd else 1))
    cosets = []
    for window in combinations(alphabet, space.k):
        if any(space.bar(v) in window for v in window):
            continue
        cosets.append(CosetRep(space=space, window=window))
    return cosets


def bruhat_leq(u: CosetRep, v: CosetRep) -> bool:
    """
    u <= v en W^P. Equivale a que la partición BC de u contenga a la de v,
    es decir a u_i <= v_i entrada a entrada.
    """
    if u.space != v.space:
        raise InvalidInputError("bruhat_leq compara clases de espacios distintos")
    return all(a <= b for a, b in zip(u.window, v.window))


def one_step_neighbor(c: CosetRep, which: StepEnum) -> CosetRep:
    """
    Regla cerrada para un solo paso O_Y(1), O_Z(1) u O°(1):
    se quita una entrada y se inserta bar(j) con j el menor valor
    de {2..n+1} ausente del resto de la ventana.
    """
    space = c.space
    w = c.window
    if not c.is_odd:
        raise OrbitMismatchError(f"{list(w)} contiene bar(1) y no es una clase impar")

    def smallest_missing(rest: Sequence[int]) -> int:
        used = {space.absolute(v) for v in rest}
        return min(j for j in range(2, space.rank + 1) if j not in used)

    if which == StepEnum.ocirc:
        if not c.is_open:
            raise OrbitMismatchError(f"O° exige una clase de W°; {list(w)} contiene el 1")
        rest = w[1:]
        return CosetRep(space=space, window=tuple(sorted(rest + (space.bar(smallest_missing(rest)),))))

    if c.is_open:
        raise OrbitMismatchError(f"{which.value} exige w(1) = 1; {list(w)} no lo cumple")

    if which == StepEnum.oz:
        if space.k == 1:
            return c
        rest = w[2:]
        return CosetRep(
            space=space,
            window=tuple(sorted((1,) + rest + (space.bar(smallest_missing(rest)),))),
        )

    if space.k > space.n:
        raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
    rest = w[1:]
    return CosetRep(space=space, window=tuple(sorted(rest + (space.bar(smallest_missing(rest)),))))


# =====================================================
# RAÍCES Y REFLEXIONES
# =====================================================
def positive_roots(space: SpaceParams) -> list[PositiveRoot]:
    rank = space.rank
    roots = []
    for i in range(1, rank + 1):
        for j in range(i + 1, rank + 1):
            roots.append(PositiveRoot(kind=RootKindEnum.t_minus, i=i, j=j))
            roots.append(PositiveRoot(kind=RootKindEnum.t_plus, i=i, j=j))
        roots.append(PositiveRoot(kind=RootKindEnum.two_t, i=i))
    return roots


def classify_root(space: SpaceParams, root: PositiveRoot) -> int | None:
    """Grado de la curva T-estable: 1 (R1+), 2 (R2+) o None si la raíz está en R_P+"""
    k = space.k
    if root.kind == RootKindEnum.two_t:
        return 1 if root.i <= k else None
    if root.i <= k < root.j:
        return 1
    if root.kind == RootKindEnum.t_plus and root.j <= k:
        return 2
    return None


def noncompact_roots(space: SpaceParams) -> list[PositiveRoot]:
    return [root for root in positive_roots(space) if classify_root(space, root) is not None]


def reflect(w: SignedPermutation, root: PositiveRoot) -> SignedPermutation:
    """w * s_alpha, actuando sobre posiciones"""
    rank = w.rank
    window = list(w.window)
    i = root.i - 1
    if root.kind == RootKindEnum.two_t:
        window[i] = _bar(rank, window[i])
        return SignedPermutation(window=tuple(window))
    j = root.j - 1
    if root.kind == RootKindEnum.t_minus:
        window[i], window[j] = window[j], window[i]
    else:
        window[i], window[j] = _bar(rank, window[j]), _bar(rank, window[i])
    return SignedPermutation(window=tuple(window))


# =====================================================
# PALABRAS O(1) Y SUSTITUCIONES
# =====================================================
def o_word(space: SpaceParams, which: StepEnum) -> tuple[int, ...]:
    """Palabras reducidas fijas de O°(1), O_Y(1) y O_Z(1)"""
    k, rank = space.k, space.rank
    descent = list(range(rank - 1, 0, -1))
    if which == StepEnum.ocirc:
        return tuple(list(range(1, rank + 1)) + descent)
    if which == StepEnum.oy:
        return tuple(list(range(1, k)) + list(range(k + 1, rank + 1)) + descent)
    return tuple(list(range(2, rank + 1)) + list(range(rank - 1, 1, -1)))


def psi_word(space: SpaceParams, word: Sequence[int]) -> tuple[int, ...]:
    """psi: s_i -> s_i (i<k), s_k -> s_k s_{k+1} s_k, s_i -> s_{i+1} (i>k)"""
    k = space.k
    letters = []
    for i in word:
        if i < k:
            letters.append(i)
        elif i == k:
            letters.extend((k, k + 1, k))
        else:
            letters.append(i + 1)
    return tuple(letters)


def shift_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in word)


# =====================================================
# BIYECCIONES PHI
# =====================================================
def phi_target(space: SpaceParams, direction: PhiDirectionEnum) -> SpaceParams:
    """IG(k,2n) para la órbita Y, IG(k-1,2n) para la órbita Z"""
    if space.n < 2:
        raise InvalidSpaceError(f"Phi no está definido sobre {space.label()} (requiere n >= 2)")
    if direction == PhiDirectionEnum.Y:
        if space.k > space.n:
            raise OrbitMismatchError(f"{space.label()} no tiene órbita abierta (k = n+1)")
        return SpaceParams(k=space.k, n=space.n - 1)
    if space.k < 2:
        raise InvalidSpaceError(f"Phi_Z no está definido sobre {space.label()} (requiere k >= 2)")
    return SpaceParams(k=space.k - 1, n=space.n - 1)


def phi_map(c: CosetRep, direction: PhiDirectionEnum) -> CosetRep:
    """Phi (órbita Y) o Phi_Z (órbita Z): todos los valores bajan en uno"""
    target = phi_target(c.space, direction)
    if not c.is_odd:
        raise OrbitMismatchError(f"{list(c.window)} contiene bar(1) y no es una clase impar")
    if direction == PhiDirectionEnum.Y:
        if not c.is_open:
            raise OrbitMismatchError(f"Phi exige una clase de W°; {list(c.window)} contiene el 1")
        return CosetRep(space=target, window=tuple(v - 1 for v in c.window))
    if c.is_open:
        raise OrbitMismatchError(f"Phi_Z exige w(1) = 1; {list(c.window)} no lo cumple")
    return CosetRep(space=target, window=tuple(v - 1 for v in c.window[1:]))
