"""
IG-ODD - Pydantic Schemas

Convención de barras: bar(i) = 2n+3-i sobre el alfabeto {1,...,2n+2}.
Con esta codificación el orden entero coincide con
1 < 2 < ... < n+1 < bar(n+1) < ... < bar(1).
"""
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Optional
from enum import Enum


# =====================================================
# ENUMS
# =====================================================
class FlavorEnum(str, Enum):
    even = "even"
    odd = "odd"


class VariantEnum(str, Enum):
    even = "even"
    odd = "odd"


class OrbitEnum(str, Enum):
    Y = "Y"
    Z = "Z"
    even_only = "evenOnly"


class StepEnum(str, Enum):
    oy = "O_Y"
    oz = "O_Z"
    ocirc = "O_circ"


class IndexationEnum(str, Enum):
    bc = "bc"
    bkt = "bkt"
    weyl = "weyl"


class FormatEnum(str, Enum):
    text = "text"
    json = "json"
    dot = "dot"


class MethodEnum(str, Enum):
    formula = "formula"
    oracle = "oracle"


class RootKindEnum(str, Enum):
    t_minus = "TiMinusTj"
    t_plus = "TiPlusTj"
    two_t = "TwoTi"


class PhiDirectionEnum(str, Enum):
    Y = "Y"
    Z = "Z"


# =====================================================
# ESPACIO
# =====================================================
class SpaceParams(BaseModel):
    """IG(k, 2n+1) y su ambiente par IG(k, 2n+2)"""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    n: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_k(self):
        if self.k > self.n + 1:
            raise ValueError(f"k={self.k} debe cumplir 1 <= k <= n+1 = {self.n + 1}")
        return self

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def top(self) -> int:
        """Mayor valor del alfabeto, bar(1) = 2n+2"""
        return 2 * self.n + 2

    @property
    def max_part(self) -> int:
        """Lado largo del rectángulo impar: 2n+1-k"""
        return 2 * self.n + 1 - self.k

    def bar(self, i: int) -> int:
        return 2 * self.n + 3 - i

    def absolute(self, v: int) -> int:
        return v if v <= self.rank else self.bar(v)

    def label(self, flavor: "FlavorEnum" = FlavorEnum.odd) -> str:
        ambient = 2 * self.n + (1 if flavor == FlavorEnum.odd else 2)
        return f"IG({self.k},{ambient})"


# =====================================================
# GRUPO DE WEYL
# =====================================================
class SignedPermutation(BaseModel):
    """Ventana w(1),...,w(n+1) de un elemento del grupo hiperoctaédrico"""
    model_config = ConfigDict(frozen=True)

    window: tuple[int, ...]

    @model_validator(mode="after")
    def _check_window(self):
        rank = len(self.window)
        if rank < 2:
            raise ValueError("la ventana necesita al menos 2 entradas (n >= 1)")
        absolutes = sorted(v if v <= rank else 2 * rank + 1 - v for v in self.window)
        if any(v < 1 or v > 2 * rank for v in self.window) or absolutes != list(range(1, rank + 1)):
            raise ValueError(f"{list(self.window)} no es una permutación con signo")
        return self

    @property
    def rank(self) -> int:
        return len(self.window)

    @property
    def n(self) -> int:
        return len(self.window) - 1


class PositiveRoot(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: RootKindEnum
    i: int = Field(..., ge=1)
    j: Optional[int] = None

    @model_validator(mode="after")
    def _check_indices(self):
        if self.kind == RootKindEnum.two_t:
            if self.j is not None:
                raise ValueError("2t_i no lleva segundo índice")
        elif self.j is None or self.j <= self.i:
            raise ValueError("las raíces t_i -/+ t_j requieren i < j")
        return self

    @property
    def label(self) -> str:
        if self.kind == RootKindEnum.t_minus:
            return f"t{self.i}-t{self.j}"
        if self.kind == RootKindEnum.t_plus:
            return f"t{self.i}+t{self.j}"
        return f"2t{self.i}"


class CosetRep(BaseModel):
    """Representante minimal de wW_P: las primeras k entradas, ordenadas"""
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    window: tuple[int, ...]

    @model_validator(mode="after")
    def _check_window(self):
        space = self.space
        w = self.window
        if len(w) != space.k:
            raise ValueError(f"la ventana {list(w)} debe tener k={space.k} entradas")
        if any(a >= b for a, b in zip(w, w[1:])):
            raise ValueError(f"la ventana {list(w)} debe ser estrictamente creciente")
        if w[0] < 1 or w[-1] > space.top:
            raise ValueError(f"la ventana {list(w)} sale del alfabeto 1..{space.top}")
        if any(space.bar(v) in w for v in w):
            raise ValueError(f"la ventana {list(w)} no es isotrópica")
        return self

    @property
    def is_odd(self) -> bool:
        """Pertenece a W^odd: no contiene bar(1)"""
        return self.space.top not in self.window

    @property
    def is_open(self) -> bool:
        """Pertenece a W°: no contiene 1"""
        return self.window[0] != 1


# =====================================================
# PARTICIONES
# =====================================================
class BCPartition(BaseModel):
    """Partición BC (variante par mu o impar lambda), sin ceros finales"""
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    parts: tuple[int, ...]
    variant: VariantEnum = VariantEnum.odd

    @model_validator(mode="before")
    @classmethod
    def _trim(cls, data):
        if isinstance(data, dict) and "parts" in data:
            parts = list(data["parts"])
            while parts and parts[-1] == 0:
                parts.pop()
            data = {**data, "parts": tuple(parts)}
        return data

    @model_validator(mode="after")
    def _check_parts(self):
        space = self.space
        parts = self.parts
        bound = space.max_part + (1 if self.variant == VariantEnum.even else 0)
        if len(parts) > space.k:
            raise ValueError(f"{list(parts)} tiene más de k={space.k} partes")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{list(parts)} no es débilmente decreciente")
        if any(p < 0 or p > bound for p in parts):
            raise ValueError(f"{list(parts)} sale del rango [0, {bound}]")

        # Condición de la palabra 01 sobre mu (lambda + 1^k en la variante impar)
        shift = 1 if self.variant == VariantEnum.odd else 0
        padded = list(parts) + [0] * (space.k - len(parts))
        ones = {space.top - space.k - (p + shift) + i for i, p in enumerate(padded, start=1)}
        if any(space.bar(v) in ones for v in ones):
            raise ValueError(f"{list(parts)} viola la condición de la palabra 01")
        return self

    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.space.k - len(self.parts))

    def part(self, i: int) -> int:
        """lambda_i con índice desde 1 y relleno de ceros"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)


class BKTPartition(BaseModel):
    """Partición BKT de longitud exacta k (alpha impar, beta = alpha + 1^k par)"""
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    parts: tuple[int, ...]
    variant: VariantEnum = VariantEnum.odd

    @model_validator(mode="after")
    def _check_parts(self):
        space = self.space
        parts = self.parts
        low, high = (-1, space.max_part) if self.variant == VariantEnum.odd else (0, space.max_part + 1)
        if len(parts) != space.k:
            raise ValueError(f"{list(parts)} debe tener exactamente k={space.k} partes")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{list(parts)} no es débilmente decreciente")
        if any(p < low or p > high for p in parts):
            raise ValueError(f"{list(parts)} sale del rango [{low}, {high}]")
        return self

    @property
    def size(self) -> int:
        return sum(self.parts)


class Word01(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    bits: str

    @model_validator(mode="after")
    def _check_bits(self):
        if len(self.bits) != self.space.top or set(self.bits) - {"0", "1"}:
            raise ValueError(f"'{self.bits}' no es una palabra 01 de longitud {self.space.top}")
        if self.bits.count("1") != self.space.k:
            raise ValueError(f"'{self.bits}' debe tener exactamente k={self.space.k} unos")
        return self


# =====================================================
# GRAFO DE MOMENTOS
# =====================================================
class ChainQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    sources: frozenset[CosetRep]
    budget: int = Field(..., ge=0)


# =====================================================
# VECINDADES
# =====================================================
class Component(BaseModel):
    """Una clase de Schubert en las tres indexaciones"""
    model_config = ConfigDict(frozen=True)

    weyl: CosetRep
    bc: BCPartition
    bkt: BKTPartition
    orbit: OrbitEnum
    candidate: Optional[StepEnum] = None


class NeighborhoodResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    source: Component
    d: int = Field(..., ge=0)
    components: tuple[Component, ...]
    method: MethodEnum


class SweepReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    d_max: int
    classes: int
    checks: int
    mismatches: tuple[str, ...] = ()

    @property
    def clean(self) -> bool:
        return not self.mismatches


# =====================================================
# CLI
# =====================================================
class CliConfig(BaseModel):
    """Flags ya validados de un subcomando"""
    model_config = ConfigDict(frozen=True)

    space: SpaceParams
    indexation: IndexationEnum = IndexationEnum.weyl
    format: FormatEnum = FormatEnum.text
    d: int = Field(0, ge=0)
    value: Optional[CosetRep] = None


# =====================================================
# RESPUESTAS
# =====================================================
class SpaceResponse(BaseModel):
    k: int
    n: int


class ConvertResponse(BaseModel):
    space: SpaceResponse
    weyl: list[int]
    bc: list[int]
    bkt: list[int]
    codim: int
    dim: int
    orbit: OrbitEnum


class ComponentResponse(BaseModel):
    weyl: list[int]
    bc: list[int]
    bkt: list[int]
    orbit: OrbitEnum


class InputResponse(BaseModel):
    indexation: IndexationEnum
    value: list[int]


class NbhdResponse(BaseModel):
    space: SpaceResponse
    input: InputResponse
    d: int
    components: list[ComponentResponse]
    method: MethodEnum
    check: Optional[str] = None


class CompResponse(BaseModel):
    space: SpaceResponse
    d: int
    indexation: IndexationEnum
    classes: list[list[int]]


class SweepResponse(BaseModel):
    space: SpaceResponse
    dmax: int
    classes: int
    checks: int
    mismatches: list[str]
    clean: bool


class VertexResponse(BaseModel):
    id: int
    window: list[int]
    orbit: OrbitEnum


class EdgeResponse(BaseModel):
    source: int
    target: int
    degree: int
    roots: list[str]


class GraphResponse(BaseModel):
    space: SpaceResponse
    flavor: FlavorEnum
    vertices: list[VertexResponse]
    edges: list[EdgeResponse]
