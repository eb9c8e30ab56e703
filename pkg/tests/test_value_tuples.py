import itertools
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klein_spin.arf_types import (
    NonSepEvenType,
    OddType,
    SepEvenType,
    enumerate_arf_types,
    global_arf_invariant,
    normalize_swap,
    validate_arf_type,
)
from klein_spin.errors import InvalidSurfaceError, InvalidTypeError, MalformedTupleError
from klein_spin.klein_surface import (
    DecompositionParams,
    SurfaceType,
    decomposition_choices,
    enumerate_surface_types,
    has_positive_geometric_genus,
)
from klein_spin.value_tuples import (
    ValueTuple,
    arf_invariant_sum,
    boundary_values,
    canonical_tuple,
    extract_type,
    half_surface_invariant,
    similarity_partition,
    validate_tuple,
)


def vt(m, s, n, alpha, beta, gamma, delta):
    s = SurfaceType(*s)
    return ValueTuple.build(m, s, DecompositionParams(n, (s.g + 1 - n) // 2), alpha, beta, gamma, delta)


# -- examples ------------------------------------------------------------------


def test_validate_examples():
    assert validate_tuple(canonical_tuple(NonSepEvenType(3, 1, 0, 1), 4))
    assert not validate_tuple(vt(4, (3, 1, 0), 2, [0], [0], [0], [0]))
    for a, b, d in itertools.product(range(3), range(3), itertools.product(range(3), repeat=2)):
        assert validate_tuple(vt(3, (4, 1, 0), 3, [a], [b], [0, 0], d))


def test_validate_rejects_twist_values_and_bad_closing_value():
    # second slot is a twist on (5,1,0) with n=4
    assert not validate_tuple(vt(4, (5, 1, 0), 4, [0], [0], [0, 2, 0], [0, 0, 0]))
    # m=6, (4,3,1): gamma (0,3) leaves c_3 = -3-3 = 0, fine; gamma (0,0) leaves 3, fine
    assert validate_tuple(vt(6, (4, 3, 1), 3, [0], [0], [0, 3], [0, 0]))
    assert not validate_tuple(vt(6, (4, 3, 1), 3, [0], [0], [0, 2], [0, 0]))


def test_length_mismatch_is_an_error():
    s = SurfaceType(3, 1, 0)
    with pytest.raises(MalformedTupleError):
        ValueTuple(4, s, DecompositionParams(2, 1), (0,), (0,), (0, 0), (0,))
    with pytest.raises(MalformedTupleError):
        ValueTuple(4, s, DecompositionParams(2, 1), (0,), (4,), (0,), (0,))


def test_arf_invariant_sum_examples():
    assert arf_invariant_sum(vt(4, (3, 1, 0), 2, [0], [0], [2], [0])) == 1
    assert arf_invariant_sum(vt(4, (5, 0, 0), 4, [0], [0], [0, 0, 0], [1, 1, 1])) == 0
    assert arf_invariant_sum(vt(2, (4, 0, 0), 3, [0], [0], [0, 0], [0, 0])) == 0
    with pytest.raises(MalformedTupleError):
        arf_invariant_sum(vt(3, (4, 1, 0), 3, [0], [0], [0, 0], [0, 0]))


def test_half_surface_invariant_examples():
    # g_tilde = 2, boundary contains an even value
    v = vt(4, (5, 2, 1), 2, [0, 0], [0, 0], [0], [0])
    assert boundary_values(v) == (0, 0)
    assert half_surface_invariant(v) == 0
    # g_tilde = 1, every boundary value 3 = m/2
    v = vt(6, (4, 3, 1), 3, [2], [0], [3, 3], [0, 0])
    assert boundary_values(v) == (3, 3, 3)
    assert half_surface_invariant(v) == 2
    # g_tilde = 2, all boundary values odd
    v = vt(2, (5, 2, 1), 2, [0, 1], [0, 1], [1], [0])
    assert half_surface_invariant(v) == 1


def test_half_surface_invariant_odd_m():
    assert half_surface_invariant(vt(3, (4, 1, 1), 1, [0, 0], [0, 0], [], [])) == 0
    assert half_surface_invariant(vt(3, (4, 1, 0), 3, [2], [2], [0, 0], [1, 2])) == 1


def test_similarity_partition_examples():
    v = canonical_tuple(SepEvenType(3, 1, 1, 1, 0, 0), 4)
    assert similarity_partition(v) == (1, 1, 0, 0)
    v = vt(2, (5, 4, 1), 4, [0], [0], [1, 1, 1], [1, 1, 1])
    assert similarity_partition(v) == (0, 4, 0, 0)
    with pytest.raises(MalformedTupleError):
        similarity_partition(canonical_tuple(NonSepEvenType(3, 1, 0, 1), 4))


def test_extract_examples():
    for t in (NonSepEvenType(3, 0, 0, 1), SepEvenType(3, 1, 1, 1, 0, 0)):
        assert extract_type(canonical_tuple(t, 4)) == normalize_swap(t) if isinstance(t, SepEvenType) else t
    v = vt(3, (4, 1, 0), 3, [2], [1], [0, 0], [2, 2])
    assert extract_type(v) == OddType(4, 1)


def test_canonical_examples():
    v = canonical_tuple(NonSepEvenType(3, 1, 0, 1), 4)
    assert (v.alpha, v.beta, v.gamma, v.delta_vals) == ((1,), (0,), (2,), (0,))
    v = canonical_tuple(OddType(4, 1), 3, epsilon=0)
    assert v.decomp.n == 3 and set(v.gamma + v.delta_vals) == {0}


def test_canonical_rejects_bad_input():
    with pytest.raises(InvalidSurfaceError):
        canonical_tuple(OddType(4, 1), 3, DecompositionParams(2, 1), epsilon=0)
    with pytest.raises(InvalidTypeError):
        canonical_tuple(NonSepEvenType(3, 0, 1, 0), 4)


def test_canonical_handle_values():
    t = SepEvenType(5, 1, 0, 1, 0, 1)
    v = canonical_tuple(t, 2)
    assert v.decomp.g_tilde == 2
    assert (v.alpha, v.beta) == ((0, 1), (0, 1))
    v = canonical_tuple(NonSepEvenType(7, 0, 1, 1), 4, DecompositionParams(4, 2))
    assert (v.alpha, v.beta) == ((0, 1), (1, 1))


# -- exhaustive checks over canonical tuples ----------------------------------


def all_valid(g_max=9, ms=range(2, 9)):
    for g in range(2, g_max + 1):
        for s in enumerate_surface_types(g):
            if not has_positive_geometric_genus(s):
                continue
            for m in ms:
                for t in enumerate_arf_types(s, m):
                    for d in decomposition_choices(s):
                        yield s, m, t, d


def test_canonical_invariants_up_to_genus_seven():
    for s, m, t, d in all_valid(7):
        v = canonical_tuple(t, m, d, epsilon=s.epsilon)
        assert validate_tuple(v)
        assert extract_type(v) == t
        if m % 2 == 0 and s.epsilon == 0:
            assert arf_invariant_sum(v) == t.delta
        if m % 2 == 0 and s.epsilon == 1:
            assert half_surface_invariant(v) == t.delta_tilde
            assert arf_invariant_sum(v) == global_arf_invariant(t, m)


# -- random admissible tuples -------------------------------------------------

SURFACES = [
    s
    for g in range(2, 8)
    for s in enumerate_surface_types(g)
    if has_positive_geometric_genus(s)
]


@st.composite
def admissible_tuples(draw, ms=(2, 3, 4, 6, 8), eps=None):
    pool = [s for s in SURFACES if eps is None or s.epsilon == eps]
    s = draw(st.sampled_from(pool))
    m = draw(st.sampled_from(ms))
    d = draw(st.sampled_from(decomposition_choices(s)))
    slots = d.n - 1
    nov = min(s.k, slots)
    zeros = (0,) * d.g_tilde
    choices = (0,) if m % 2 else (0, m // 2)
    gammas = [
        ov + (0,) * (slots - nov)
        for ov in itertools.product(choices, repeat=nov)
        if validate_tuple(ValueTuple(m, s, d, zeros, zeros, ov + (0,) * (slots - nov), (0,) * slots))
    ]
    if not gammas:
        # no real m-Arf function on this surface: the oracle never sees it
        return None
    res = st.integers(0, m - 1)
    return ValueTuple(
        m, s, d,
        tuple(draw(st.lists(res, min_size=d.g_tilde, max_size=d.g_tilde))),
        tuple(draw(st.lists(res, min_size=d.g_tilde, max_size=d.g_tilde))),
        draw(st.sampled_from(gammas)),
        tuple(draw(st.lists(res, min_size=slots, max_size=slots))),
    )


@settings(max_examples=300)
@given(admissible_tuples())
def test_extracted_type_is_valid(v):
    if v is None:
        return
    t = extract_type(v)
    assert validate_arf_type(t, v.m, v.surface)


@settings(max_examples=300)
@given(admissible_tuples(ms=(2, 4, 6, 8), eps=1))
def test_bridge_parity_gives_global_arf_invariant(v):
    if v is None:
        return
    assert arf_invariant_sum(v) == global_arf_invariant(extract_type(v), v.m)


@settings(max_examples=300)
@given(admissible_tuples(ms=(2, 4, 6, 8), eps=1))
def test_partition_sums_to_k_and_flipped_reading_swaps(v):
    if v is None:
        return
    a = similarity_partition(v)
    assert sum(a) == v.surface.k
    # reading even bridges (and an even anchor) as "similar to c_k" swaps the classes
    flipped = replace(v, delta_vals=tuple((d + 1) % v.m for d in v.delta_vals))
    assert similarity_partition(flipped, anchor_parity=0) == a[2:] + a[:2]
    t = extract_type(v)
    b = similarity_partition(flipped, anchor_parity=0)
    assert normalize_swap(SepEvenType(t.g, t.delta_tilde, *b)) == t


def test_anchor_flip_moves_only_the_last_oval():
    v = vt(4, (5, 4, 1), 4, [0], [0], [0, 2, 2], [1, 0, 1])
    a, b = similarity_partition(v), similarity_partition(v, anchor_parity=0)
    # c_4 has value 1 - 5 - 4 = 0 (mod 4); only it changes class
    assert a == (2, 1, 0, 1) and b == (1, 1, 1, 1)


def test_odd_m_extract_ignores_free_values():
    import random

    rng = random.Random(7)
    for s in SURFACES:
        for m in (3, 5):
            if (s.g - 1) % m:
                continue
            for d in decomposition_choices(s):
                seen = set()
                for _ in range(100):
                    r = lambda n: [rng.randrange(m) for _ in range(n)]  # noqa: E731
                    v = ValueTuple.build(m, s, d, r(d.g_tilde), r(d.g_tilde), [0] * (d.n - 1), r(d.n - 1))
                    assert validate_tuple(v)
                    seen.add(extract_type(v))
                assert seen == {OddType(s.g, s.k)}
