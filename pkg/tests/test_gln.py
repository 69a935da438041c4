import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeiso.ff import FieldCtx
from heckeiso.gln import (
    UnsupportedInstance,
    _twist_factors,
    build_simple,
    enumerate_simples,
    ho_iso_witness,
    ho_isomorphic,
    mod_iso_witness,
    mod_isomorphic,
    restriction_decomposition,
)
from heckeiso.haff import aff_char, conj_char
from heckeiso.weyl import build_spec

GF3 = FieldCtx(3)
GF5 = FieldCtx(5)
GL3 = build_spec([3], 0, 3)
GL2 = build_spec([2], 0, 3)
GL32 = build_spec([3, 2], 0, 3)


def gl3_simple(J, lam, field=GF3, a=0):
    chi = aff_char(GL3, [(a, a, a)], J)
    return build_simple(GL3, chi, [lam], [], field)


def test_build_simple_validation():
    chi = aff_char(GL3, [(0, 0, 0)], set())
    with pytest.raises(ValueError):
        build_simple(GL3, chi, [1], [], GF3)  # not supersingular
    good = aff_char(GL3, [(0, 0, 0)], {(1, 0)})
    with pytest.raises(ValueError):
        build_simple(GL3, good, [0], [], GF3)  # zero scalar
    with pytest.raises(ValueError):
        build_simple(GL3, good, [1, 1], [], GF3)  # wrong arity
    with pytest.raises(ValueError):
        build_simple(GL3, good, [1], [], GF5)  # wrong characteristic


def test_dimension_is_product_of_stabilizer_orders():
    m = gl3_simple({(1, 0)}, 1)
    assert m.stab.d == (3,)
    assert m.dim == 3
    chi = aff_char(GL32, [(0, 0, 0), (0, 1)], {(1, 0), (1, 1)})
    m2 = build_simple(GL32, chi, [1, 1], [], GF3)
    assert m2.stab.d == (3, 2)
    assert m2.dim == 6


def test_restriction_decomposition_lists_all_rotations():
    m = gl3_simple({(1, 0)}, 1)
    parts = restriction_decomposition(m)
    assert len(parts) == m.dim
    assert {frozenset(c.J) for c in parts} == {
        frozenset({(1, 0)}),
        frozenset({(1, 1)}),
        frozenset({(1, 2)}),
    }


def test_mod_isomorphic_under_rotation():
    a = gl3_simple({(1, 0)}, 2)
    b = gl3_simple({(1, 1)}, 2)
    assert mod_isomorphic(a, b)
    assert mod_iso_witness(a, b) == (1,)


def test_mod_isomorphic_respects_scalars():
    a = gl3_simple({(1, 0)}, 1)
    b = gl3_simple({(1, 1)}, 2)
    assert not mod_isomorphic(a, b)


def test_mod_isomorphic_distinct_j_sizes():
    a = gl3_simple({(1, 0)}, 1)
    b = gl3_simple({(1, 0), (1, 1)}, 1)
    assert not mod_isomorphic(a, b)


def test_twist_factors_collapse_to_identity():
    chi = aff_char(GL2, [(0, 1)], set())
    m = build_simple(GL2, chi, [1], [], GF3)
    assert _twist_factors(m, chi) == {(1,)}


def test_twist_enumeration_rejects_non_prime_q():
    spec = build_spec([2], 0, 9)
    chi = aff_char(spec, [(0, 1)], set())
    m = build_simple(spec, chi, [1], [], FieldCtx(3, 2))
    m2 = build_simple(spec, chi, [2], [], FieldCtx(3, 2))
    with pytest.raises(UnsupportedInstance):
        mod_isomorphic(m, m2)


def test_ho_isomorphic_exceptional_pair():
    a = gl3_simple({(1, 0), (1, 1)}, 1)
    b = gl3_simple({(1, 1)}, 1)
    assert not mod_isomorphic(a, b)
    assert ho_isomorphic(a, b)
    assert ho_isomorphic(b, a)
    ok, witness = ho_iso_witness(a, b)
    assert ok and "exceptional" in witness


def test_ho_isomorphic_exceptional_needs_containment():
    a = gl3_simple({(1, 0), (1, 1)}, 1)
    b = gl3_simple({(1, 2)}, 1)
    # The singleton {s2} is a rotation of {s1}, which sits inside a rotation
    # of the pair, so these are still stably isomorphic.
    assert ho_isomorphic(a, b)
    # Distinct scalars break it.
    c = gl3_simple({(1, 1)}, 2)
    assert not ho_isomorphic(a, c)


def test_ho_isomorphic_rejects_finite_pd():
    chi = aff_char(GL2, [(0, 0)], {(1, 0)})
    m = build_simple(GL2, chi, [1], [], GF3)
    with pytest.raises(ValueError):
        ho_isomorphic(m, m)


def test_ho_equals_mod_for_gl2():
    from heckeiso.haff import has_finite_pd

    simples = enumerate_simples(GL2, GF3)
    live = [m for m in simples if not has_finite_pd(GL2, m.chi)]
    assert live
    for a, b in itertools.combinations_with_replacement(live, 2):
        assert ho_isomorphic(a, b) == mod_isomorphic(a, b)


def test_enumerate_simples_distinct_classes():
    simples = enumerate_simples(GL3, GF3)
    assert len(simples) == 16
    for a, b in itertools.combinations(simples, 2):
        assert not mod_isomorphic(a, b)
    # Deterministic order.
    again = enumerate_simples(GL3, GF3)
    assert [m.sort_key() for m in again] == [m.sort_key() for m in simples]


def test_json_roundtrip():
    m = gl3_simple({(1, 0), (1, 1)}, 2)
    from heckeiso.gln import SimpleSS

    back = SimpleSS.from_json(GL3, m.to_json())
    assert back == m


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_mod_iso_is_an_equivalence_on_samples(data):
    simples = enumerate_simples(GL3, GF3)
    a = data.draw(st.sampled_from(simples))
    b = data.draw(st.sampled_from(simples))
    assert mod_isomorphic(a, a)
    assert mod_isomorphic(a, b) == mod_isomorphic(b, a)
    rot = data.draw(st.integers(0, 2))
    twisted = build_simple(GL3, conj_char(GL3, a.chi, (rot,)), a.lam, a.nu, GF3)
    assert mod_isomorphic(a, twisted)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_ho_iso_symmetric_and_implied_by_mod_iso(data):
    simples = [m for m in enumerate_simples(GL32, GF3)]
    a = data.draw(st.sampled_from(simples))
    b = data.draw(st.sampled_from(simples))
    assert ho_isomorphic(a, b) == ho_isomorphic(b, a)
    if mod_isomorphic(a, b):
        assert ho_isomorphic(a, b)
