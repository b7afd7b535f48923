"""
IG-ODD - Pruebas del núcleo de Weyl
"""
from collections import deque
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from app.exceptions import OrbitMismatchError
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
from app.weyl_core import (
    apply_word,
    bruhat_leq,
    classify_root,
    coset_length,
    coset_rep,
    enumerate_cosets,
    hecke_mul,
    id_y,
    identity,
    identity_coset,
    is_ascent,
    length,
    lift,
    longest_element,
    modified_hecke_mul,
    noncompact_roots,
    o_word,
    one_step_neighbor,
    phi_map,
    phi_target,
    positive_roots,
    psi_word,
    reduced_word,
    reflect,
    right_multiply,
    shift_word,
    simple_reflection,
)
from app.indexing import dimension


SMALL_SPACES = [SpaceParams(k=1, n=1), SpaceParams(k=2, n=2), SpaceParams(k=2, n=3)]
Y_SPACES = [SpaceParams(k=k, n=n) for k, n in [(1, 2), (2, 2), (2, 3), (3, 3), (3, 4)]]
Z_SPACES = [SpaceParams(k=k, n=n) for k, n in [(2, 2), (2, 3), (3, 3), (3, 4)]]


def whole_group(space: SpaceParams) -> dict:
    """Distancia BFS desde la identidad con generadores simples"""
    start = identity(space)
    distance = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, space.rank + 1):
            u = right_multiply(w, i)
            if u not in distance:
                distance[u] = distance[w] + 1
                queue.append(u)
    return distance


def lower_interval(w: SignedPermutation) -> set:
    """Propiedad de la subpalabra: productos de subpalabras de una palabra reducida"""
    elements = {identity(SpaceParams(k=1, n=w.n))}
    for i in reduced_word(w):
        elements |= {right_multiply(x, i) for x in elements}
    return elements


# =====================================================
# LONGITUD Y PALABRAS REDUCIDAS
# =====================================================
@pytest.mark.parametrize("n", [1, 2])
def test_length_matches_bfs_distance(n):
    space = SpaceParams(k=1, n=n)
    distance = whole_group(space)
    assert len(distance) == 2 ** space.rank * factorial(space.rank)
    for w, steps in distance.items():
        assert length(w) == steps


@pytest.mark.parametrize("n", [1, 2])
def test_ascents_and_reduced_words(n):
    space = SpaceParams(k=1, n=n)
    for w in whole_group(space):
        for i in range(1, space.rank + 1):
            assert is_ascent(w, i) == (length(right_multiply(w, i)) > length(w))
        word = reduced_word(w)
        assert len(word) == length(w)
        assert apply_word(identity(space), word) == w


def test_longest_element():
    space = SpaceParams(k=2, n=3)
    longest = longest_element(space)
    assert longest.window == (8, 7, 6, 5)
    assert length(longest) == space.rank ** 2
    assert coset_rep(space, longest).window == (7, 8)


def test_simple_reflections_act_on_positions():
    space = SpaceParams(k=4, n=6)
    assert simple_reflection(space, 1).window == (2, 1, 3, 4, 5, 6, 7)
    # s_{n+1} barra la última posición: bar(7) = 8
    assert simple_reflection(space, 7).window == (1, 2, 3, 4, 5, 6, 8)


def test_reflection_t1_plus_t2():
    space = SpaceParams(k=4, n=6)
    w = reflect(identity(space), PositiveRoot(kind=RootKindEnum.t_plus, i=1, j=2))
    assert w.window == (13, 14, 3, 4, 5, 6, 7)
    assert coset_rep(space, w).window == (3, 4, 13, 14)


def test_invalid_signed_permutation():
    with pytest.raises(ValidationError):
        SignedPermutation(window=(1, 1, 2))
    with pytest.raises(ValidationError):
        SignedPermutation(window=(1, 4))


# =====================================================
# PRODUCTOS DE HECKE
# =====================================================
def test_hecke_worked_example(window):
    space = SpaceParams(k=4, n=6)
    w = window(space, 1, 2, -6, -3)
    v = window(space, 2, 4, 6, -5)

    y = coset_rep(space, hecke_mul(lift(w), o_word(space, StepEnum.oy)))
    z = coset_rep(space, hecke_mul(lift(w), o_word(space, StepEnum.oz)))
    c = coset_rep(space, modified_hecke_mul(lift(v), o_word(space, StepEnum.ocirc), space.k))

    assert y == window(space, 2, -6, -4, -3)
    assert z == window(space, 1, -6, -3, -2)
    assert c == window(space, 4, 6, -5, -2)


def test_o_words():
    space = SpaceParams(k=2, n=3)
    assert o_word(space, StepEnum.ocirc) == (1, 2, 3, 4, 3, 2, 1)
    assert o_word(space, StepEnum.oy) == (1, 3, 4, 3, 2, 1)
    assert o_word(space, StepEnum.oz) == (2, 3, 4, 3, 2)


def test_modified_product_rejects_closed_orbit(window):
    space = SpaceParams(k=2, n=2)
    with pytest.raises(OrbitMismatchError):
        modified_hecke_mul(lift(window(space, 1, 3)), (1, 2), space.k)


@st.composite
def element_and_word(draw):
    space = draw(st.sampled_from(SMALL_SPACES))
    letters = st.integers(min_value=1, max_value=space.rank)
    start = draw(st.lists(letters, max_size=12))
    word = draw(st.lists(letters, max_size=12))
    return apply_word(identity(space), start), word


@given(element_and_word())
@settings(max_examples=200, deadline=None)
def test_hecke_product_depends_only_on_demazure_element(case):
    w, word = case
    demazure = hecke_mul(identity(SpaceParams(k=1, n=w.n)), word)
    assert hecke_mul(w, word) == hecke_mul(w, reduced_word(demazure))
    assert length(hecke_mul(w, word)) >= length(w)


@given(element_and_word())
@settings(max_examples=100, deadline=None)
def test_hecke_letters_are_idempotent(case):
    w, word = case
    doubled = [i for i in word for _ in range(2)]
    assert hecke_mul(w, doubled) == hecke_mul(w, word)


# =====================================================
# COCLASES Y ORDEN DE BRUHAT
# =====================================================
def test_coset_counts(sweep_space):
    even = enumerate_cosets(sweep_space, FlavorEnum.even)
    odd = enumerate_cosets(sweep_space, FlavorEnum.odd)
    assert len(even) == comb(sweep_space.rank, sweep_space.k) * 2 ** sweep_space.k
    assert set(odd) == {c for c in even if c.is_odd}
    assert [c.window for c in odd] == sorted(c.window for c in odd)


def test_lift_is_minimal(sweep_space):
    for c in enumerate_cosets(sweep_space, FlavorEnum.even):
        w = lift(c)
        assert coset_rep(sweep_space, w) == c
        # ningún s_i con i != k baja la longitud dentro de la coclase
        for i in range(1, sweep_space.rank + 1):
            if i != sweep_space.k:
                assert is_ascent(w, i)


def test_extreme_lengths(sweep_space):
    assert coset_length(identity_coset(sweep_space)) == 0
    top = CosetRep(
        space=sweep_space,
        window=tuple(sweep_space.bar(j) for j in range(sweep_space.k + 1, 1, -1)),
    )
    assert coset_length(top) == dimension(sweep_space)


@pytest.mark.parametrize("n", [2, 3])
def test_bruhat_order_matches_subword_property(n):
    space = SpaceParams(k=2, n=n)
    classes = enumerate_cosets(space, FlavorEnum.odd)
    for v in classes:
        below = lower_interval(lift(v))
        for u in classes:
            assert bruhat_leq(u, v) == (lift(u) in below)


def test_identity_is_bruhat_minimum(sweep_space):
    point = identity_coset(sweep_space)
    assert all(bruhat_leq(point, c) for c in enumerate_cosets(sweep_space))


def test_invalid_coset_windows():
    space = SpaceParams(k=2, n=2)
    with pytest.raises(ValidationError):
        CosetRep(space=space, window=(2, 5))
    with pytest.raises(ValidationError):
        CosetRep(space=space, window=(3, 1))
    with pytest.raises(ValidationError):
        SpaceParams(k=4, n=2)


# =====================================================
# UN PASO
# =====================================================
def test_one_step_examples(window):
    space = SpaceParams(k=4, n=6)
    w = window(space, 1, 2, -6, -3)
    assert one_step_neighbor(w, StepEnum.oy) == window(space, 2, -6, -4, -3)
    assert one_step_neighbor(w, StepEnum.oz) == window(space, 1, -6, -3, -2)
    assert one_step_neighbor(window(space, 2, 4, 6, -5), StepEnum.ocirc) == window(space, 4, 6, -5, -2)


def test_one_step_for_k_equal_one(window):
    space = SpaceParams(k=1, n=2)
    point = window(space, 1)
    assert one_step_neighbor(point, StepEnum.oz) == point
    assert one_step_neighbor(point, StepEnum.oy) == window(space, -2)


def test_one_step_orbit_preconditions(window):
    space = SpaceParams(k=2, n=2)
    with pytest.raises(OrbitMismatchError):
        one_step_neighbor(window(space, 1, 2), StepEnum.ocirc)
    with pytest.raises(OrbitMismatchError):
        one_step_neighbor(window(space, 2, 3), StepEnum.oy)
    with pytest.raises(OrbitMismatchError):
        one_step_neighbor(window(SpaceParams(k=3, n=2), 1, 2, 3), StepEnum.oy)


def test_id_y():
    assert id_y(SpaceParams(k=3, n=4)).window == (2, 3, 4)
    with pytest.raises(OrbitMismatchError):
        id_y(SpaceParams(k=3, n=2))


# =====================================================
# RAÍCES
# =====================================================
def test_root_classification(sweep_space):
    k, rank = sweep_space.k, sweep_space.rank
    roots = positive_roots(sweep_space)
    assert len(roots) == rank ** 2
    outside = noncompact_roots(sweep_space)
    assert len(outside) == rank ** 2 - k * (k - 1) // 2 - (rank - k) ** 2
    degree_two = [r for r in outside if classify_root(sweep_space, r) == 2]
    assert len(degree_two) == k * (k - 1) // 2
    assert all(r.kind == RootKindEnum.t_plus and r.j <= k for r in degree_two)


def test_root_labels():
    assert PositiveRoot(kind=RootKindEnum.t_minus, i=1, j=5).label == "t1-t5"
    assert PositiveRoot(kind=RootKindEnum.two_t, i=2).label == "2t2"
    with pytest.raises(ValidationError):
        PositiveRoot(kind=RootKindEnum.t_plus, i=3, j=2)


# =====================================================
# BIYECCIONES PHI
# =====================================================
def test_phi_example(window):
    space = SpaceParams(k=4, n=6)
    image = phi_map(window(space, 2, 4, 6, -5), PhiDirectionEnum.Y)
    assert image.space == SpaceParams(k=4, n=5)
    assert image == window(SpaceParams(k=4, n=5), 1, 3, 5, -4)


def test_psi_word():
    space = SpaceParams(k=2, n=3)
    assert psi_word(space, (1, 2, 3)) == (1, 2, 3, 2, 4)
    assert shift_word((1, 2, 3)) == (2, 3, 4)


@st.composite
def open_class_and_word(draw):
    space = draw(st.sampled_from(Y_SPACES))
    v = draw(st.sampled_from([c for c in enumerate_cosets(space) if c.is_open]))
    word = draw(st.lists(st.integers(min_value=1, max_value=space.n), max_size=10))
    return v, word


@given(open_class_and_word())
@settings(max_examples=200, deadline=None)
def test_phi_intertwines_modified_product(case):
    v, word = case
    space = v.space
    target = phi_target(space, PhiDirectionEnum.Y)
    moved = coset_rep(space, modified_hecke_mul(lift(v), psi_word(space, word), space.k))
    expected = coset_rep(target, hecke_mul(lift(phi_map(v, PhiDirectionEnum.Y)), word))
    assert phi_map(moved, PhiDirectionEnum.Y) == expected


@st.composite
def closed_class_and_word(draw):
    space = draw(st.sampled_from(Z_SPACES))
    v = draw(st.sampled_from([c for c in enumerate_cosets(space) if not c.is_open]))
    word = draw(st.lists(st.integers(min_value=1, max_value=space.n), max_size=10))
    return v, word


@given(closed_class_and_word())
@settings(max_examples=200, deadline=None)
def test_phi_z_intertwines_shifted_product(case):
    v, word = case
    space = v.space
    target = phi_target(space, PhiDirectionEnum.Z)
    moved = coset_rep(space, hecke_mul(lift(v), shift_word(word)))
    expected = coset_rep(target, hecke_mul(lift(phi_map(v, PhiDirectionEnum.Z)), word))
    assert phi_map(moved, PhiDirectionEnum.Z) == expected


def words_up_to(letters: int, max_length: int = 4):
    for size in range(max_length + 1):
        yield from product(range(1, letters + 1), repeat=size)


@pytest.mark.parametrize("space", Y_SPACES, ids=lambda s: s.label())
def test_phi_intertwines_every_short_word(space):
    target = phi_target(space, PhiDirectionEnum.Y)
    words = list(words_up_to(space.n))
    for v in (c for c in enumerate_cosets(space) if c.is_open):
        image = lift(phi_map(v, PhiDirectionEnum.Y))
        for word in words:
            moved = coset_rep(space, modified_hecke_mul(lift(v), psi_word(space, word), space.k))
            assert phi_map(moved, PhiDirectionEnum.Y) == coset_rep(target, hecke_mul(image, word))


@pytest.mark.parametrize("space", Z_SPACES, ids=lambda s: s.label())
def test_phi_z_intertwines_every_short_word(space):
    target = phi_target(space, PhiDirectionEnum.Z)
    words = list(words_up_to(space.n))
    for v in (c for c in enumerate_cosets(space) if not c.is_open):
        image = lift(phi_map(v, PhiDirectionEnum.Z))
        for word in words:
            moved = coset_rep(space, hecke_mul(lift(v), shift_word(word)))
            assert phi_map(moved, PhiDirectionEnum.Z) == coset_rep(target, hecke_mul(image, word))


def test_phi_targets():
    assert phi_target(SpaceParams(k=3, n=4), PhiDirectionEnum.Y) == SpaceParams(k=3, n=3)
    assert phi_target(SpaceParams(k=3, n=4), PhiDirectionEnum.Z) == SpaceParams(k=2, n=3)
