"""
IG-ODD - Fixtures compartidas
"""
import pytest

from app.schemas import SpaceParams
from app.services import window_from_signed


# Espacios del barrido de verificación (k, n)
SWEEP = [(1, 2), (2, 2), (2, 3), (3, 3), (3, 4)]
SWEEP_SPACES = [SpaceParams(k=k, n=n) for k, n in SWEEP]


def space_id(space: SpaceParams) -> str:
    return space.label()


@pytest.fixture(params=SWEEP_SPACES, ids=space_id)
def sweep_space(request) -> SpaceParams:
    return request.param


@pytest.fixture
def ig25() -> SpaceParams:
    """IG(2,5), ambiente IG(2,6)"""
    return SpaceParams(k=2, n=2)


@pytest.fixture
def window():
    """Construye un CosetRep desde una ventana con signo (-i = bar i)"""
    def build(space: SpaceParams, *signed: int):
        return window_from_signed(space, tuple(signed))
    return build

