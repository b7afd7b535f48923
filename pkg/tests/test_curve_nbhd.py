"""
IG-ODD - Pruebas de vecindades de curvas
"""
import pytest

from app.curve_nbhd import (
    apply_o,
    closed_form_ocirc_id_y,
    closed_form_oy,
    closed_form_oz,
    comp_set,
    even_zd,
    hecke_step,
    nbhd_formula,
    nbhd_oracle,
    nbhd_partition,
    ocirc_power,
    oy_power,
    oz_power,
    partition_to_weyl,
    verify_sweep,
)
from app.exceptions import InvalidInputError, OrbitMismatchError, ResourceLimitError
from app.indexing import codimension, comp_member, weyl_to_bc, weyl_to_bkt
from app.moment_graph import build_graph, even_oracle_nbhd
from app.schemas import (
    BCPartition,
    BKTPartition,
    FlavorEnum,
    IndexationEnum,
    MethodEnum,
    OrbitEnum,
    SpaceParams,
    StepEnum,
)
from app.weyl_core import bruhat_leq, enumerate_cosets, id_y, identity_coset, one_step_neighbor


IG3_9 = SpaceParams(k=3, n=4)
IG5_15 = SpaceParams(k=5, n=7)


def windows(result):
    return [c.weyl for c in result.components]


# =====================================================
# PASOS DE HECKE
# =====================================================
@pytest.mark.parametrize("which", [StepEnum.oy, StepEnum.oz, StepEnum.ocirc])
def test_hecke_step_matches_one_step_rule(sweep_space, which):
    for c in enumerate_cosets(sweep_space):
        if (which == StepEnum.ocirc) != c.is_open:
            continue
        assert hecke_step(c, which) == one_step_neighbor(c, which)


def test_square_example(window):
    space = SpaceParams(k=4, n=6)
    w = window(space, 1, 2, -6, -3)
    expected = window(space, -6, -4, -3, -2)
    assert ocirc_power(hecke_step(w, StepEnum.oy), 1) == expected
    assert hecke_step(hecke_step(w, StepEnum.oz), StepEnum.oy) == expected
    assert oy_power(w, 2, 0) == oy_power(w, 2, 1) == expected


def test_oy_power_ignores_split(sweep_space):
    for c in enumerate_cosets(sweep_space):
        if c.is_open:
            continue
        for d in range(1, sweep_space.k + 3):
            canonical = oy_power(c, d)
            assert all(oy_power(c, d, d1) == canonical for d1 in range(d))


def test_oy_power_split_bounds(ig25):
    with pytest.raises(InvalidInputError):
        oy_power(identity_coset(ig25), 2, 2)
    with pytest.raises(InvalidInputError):
        ocirc_power(id_y(ig25), -1)


def test_apply_o(ig25, window):
    point = identity_coset(ig25)
    assert apply_o(ig25, point, StepEnum.oz, 1) == window(ig25, 1, -2)
    assert apply_o(ig25, point, StepEnum.oy, 1) == window(ig25, 2, -3)
    assert apply_o(ig25, id_y(ig25), StepEnum.ocirc, 1) == window(ig25, 3, -2)
    with pytest.raises(OrbitMismatchError):
        apply_o(ig25, window(ig25, 2, -1), StepEnum.oz, 1)


# =====================================================
# FORMAS CERRADAS
# =====================================================
def test_closed_forms_match_hecke_products(sweep_space):
    point = identity_coset(sweep_space)
    for d in range(sweep_space.k + 3):
        assert closed_form_oy(sweep_space, d) == oy_power(point, d)
        assert closed_form_oz(sweep_space, d) == oz_power(point, d)
        assert closed_form_ocirc_id_y(sweep_space, d) == ocirc_power(id_y(sweep_space), d)


def test_closed_forms_saturate():
    k = IG5_15.k
    assert closed_form_oy(IG5_15, k) == closed_form_oy(IG5_15, k + 4)
    assert closed_form_oz(IG5_15, k - 1) == closed_form_oz(IG5_15, k + 4)
    assert closed_form_ocirc_id_y(IG5_15, k) == closed_form_ocirc_id_y(IG5_15, k + 4)


def test_schubert_point_comp(sweep_space):
    point = weyl_to_bc(identity_coset(sweep_space))
    for d in range(1, sweep_space.k + 3):
        assert comp_member(point, d) == (d < sweep_space.k)


@pytest.mark.parametrize("space", [SpaceParams(k=2, n=2), SpaceParams(k=2, n=3), IG3_9])
def test_even_zd_is_even_oracle(space):
    g = build_graph(space, FlavorEnum.even)
    point = identity_coset(space)
    for d in range(1, space.k + 2):
        assert even_oracle_nbhd(g, point, d) == [even_zd(space, d)]


def test_even_zd_examples(window):
    space = SpaceParams(k=2, n=2)
    assert even_zd(space, 0) == identity_coset(space)
    assert even_zd(space, 1).window == (2, space.top)
    assert even_zd(space, 2) == window(space, -2, -1)
    assert even_zd(IG3_9, 1).window == (2, 3, IG3_9.top)


# =====================================================
# VECINDADES
# =====================================================
def test_two_components_example(window):
    c = window(IG3_9, 1, 2, -3)
    result = nbhd_formula(IG3_9, c, 1)
    assert result.method == MethodEnum.formula
    assert windows(result) == [window(IG3_9, 1, -3, -2), window(IG3_9, 2, -4, -3)]

    z, y = result.components
    assert (z.orbit, z.candidate) == (OrbitEnum.Z, StepEnum.oz)
    assert (y.orbit, y.candidate) == (OrbitEnum.Y, StepEnum.oy)
    assert z.bc.parts == (6,) and z.bkt.parts == (6, -1, -1)
    assert y.bc.parts == (5, 1, 1) and y.bkt.parts == (5, 0, 0)

    oracle = nbhd_oracle(IG3_9, c, 1)
    assert oracle.method == MethodEnum.oracle
    assert windows(oracle) == windows(result)


@pytest.mark.parametrize(
    "d, parts",
    [(1, [(10, 8, 4), (8, 8, 4, 2)]), (2, [(10, 3), (7, 3, 1)]), (3, [(2,)])],
)
def test_large_space_components(window, d, parts):
    c = window(IG5_15, 1, 3, 4, -8, -2)
    result = nbhd_formula(IG5_15, c, d)
    assert [comp.bc.parts for comp in result.components] == parts


def test_single_component_dominates(window):
    c = window(IG5_15, 1, 3, 4, -8, -2)
    y = oy_power(c, 3)
    z = oz_power(c, 3)
    assert bruhat_leq(z, y)


def test_open_orbit_single_component(ig25, window):
    result = nbhd_formula(ig25, window(ig25, 2, 3), 1)
    assert windows(result) == [window(ig25, 3, -2)]
    assert result.components[0].candidate == StepEnum.ocirc


def test_k_equal_one(window):
    space = SpaceParams(k=1, n=2)
    point = identity_coset(space)
    for d in (1, 2, 3):
        assert windows(nbhd_formula(space, point, d)) == [window(space, -2)]
        assert windows(nbhd_oracle(space, point, d)) == [window(space, -2)]


def test_k_equal_n_plus_one(window):
    space = SpaceParams(k=2, n=1)
    point = identity_coset(space)
    result = nbhd_formula(space, point, 1)
    assert windows(result) == [window(space, 1, -2)]
    assert result.components[0].candidate == StepEnum.oz
    assert windows(nbhd_oracle(space, point, 1)) == windows(result)
    assert comp_set(space, 1) == []


def test_degree_zero_echoes_source(ig25, window):
    c = window(ig25, 1, -3)
    result = nbhd_formula(ig25, c, 0)
    assert windows(result) == [c]
    assert result.source.weyl == c
    assert windows(nbhd_oracle(ig25, c, 0)) == [c]


def test_formula_matches_oracle(sweep_space):
    for c in enumerate_cosets(sweep_space):
        for d in range(sweep_space.k + 2):
            assert windows(nbhd_formula(sweep_space, c, d)) == windows(nbhd_oracle(sweep_space, c, d))


def test_neighborhoods_grow_with_degree(sweep_space):
    for c in enumerate_cosets(sweep_space):
        previous = [c]
        for d in range(1, sweep_space.k + 2):
            current = windows(nbhd_formula(sweep_space, c, d))
            for low in previous:
                assert any(bruhat_leq(low, high) for high in current)
            for high in current:
                assert any(bruhat_leq(low, high) for low in previous)
            previous = current


def test_line_codimension_identity(window):
    """codim X(1) + codim X(w) = codim de la componente Z + (2n+2-k)"""
    c = window(IG3_9, 1, 2, -3)
    divisor = window(IG3_9, -5, -3, -2)
    z = nbhd_formula(IG3_9, c, 1).components[0]
    assert z.bkt.parts == (6, -1, -1)
    c1 = 2 * IG3_9.n + 2 - IG3_9.k
    assert codimension(divisor) + codimension(c) == codimension(z.weyl) + c1


def test_nbhd_errors(ig25, window):
    with pytest.raises(InvalidInputError):
        nbhd_formula(ig25, identity_coset(ig25), -1)
    with pytest.raises(InvalidInputError):
        nbhd_formula(ig25, identity_coset(SpaceParams(k=2, n=3)), 1)
    with pytest.raises(OrbitMismatchError):
        nbhd_formula(ig25, window(ig25, 2, -1), 1)
    with pytest.raises(ResourceLimitError):
        nbhd_oracle(ig25, identity_coset(ig25), 1, max_vertices=4)


# =====================================================
# LENGUAJE DE PARTICIONES
# =====================================================
def test_partition_neighborhoods():
    lam = BCPartition(space=IG3_9, parts=(6, 6, 1))
    alpha = BKTPartition(space=IG3_9, parts=(6, 5, -1))
    assert [p.parts for p in nbhd_partition(IG3_9, IndexationEnum.bc, lam, 1)] == [(5, 1, 1), (6,)]
    assert [p.parts for p in nbhd_partition(IG3_9, IndexationEnum.bkt, alpha, 1)] == [(5, 0, 0), (6, -1, -1)]
    assert nbhd_partition(IG3_9, IndexationEnum.bc, lam, 0) == [lam]


def test_partition_rules_match_formula(sweep_space):
    for c in enumerate_cosets(sweep_space):
        for d in range(1, sweep_space.k + 2):
            expected = set(windows(nbhd_formula(sweep_space, c, d)))
            for indexation, value in ((IndexationEnum.bc, weyl_to_bc(c)), (IndexationEnum.bkt, weyl_to_bkt(c))):
                found = {partition_to_weyl(p) for p in nbhd_partition(sweep_space, indexation, value, d)}
                assert found == expected


def test_partition_errors():
    lam = BCPartition(space=IG3_9, parts=(6, 6, 1))
    with pytest.raises(InvalidInputError):
        nbhd_partition(IG3_9, IndexationEnum.weyl, lam, 1)
    with pytest.raises(InvalidInputError):
        nbhd_partition(SpaceParams(k=3, n=3), IndexationEnum.bc, lam, 1)


def test_comp_set(ig25, window):
    assert comp_set(ig25, 1) == [window(ig25, 1, 2)]
    assert comp_set(ig25, 2) == []
    with pytest.raises(InvalidInputError):
        comp_set(ig25, 0)


# =====================================================
# BARRIDO
# =====================================================
def test_verify_sweep_is_clean(sweep_space):
    report = verify_sweep(sweep_space, sweep_space.k + 2)
    assert report.clean, report.mismatches
    assert report.classes == len(enumerate_cosets(sweep_space))
    assert report.checks > report.classes


def test_verify_sweep_parallel(ig25):
    assert verify_sweep(ig25, 3, jobs=2) == verify_sweep(ig25, 3, jobs=1)


def test_verify_sweep_errors(ig25):
    with pytest.raises(InvalidInputError):
        verify_sweep(ig25, -1)
    with pytest.raises(InvalidInputError):
        verify_sweep(ig25, 1, jobs=0)
    with pytest.raises(ResourceLimitError):
        verify_sweep(ig25, 1, max_vertices=5)
