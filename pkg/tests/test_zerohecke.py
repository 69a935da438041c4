import itertools

import pytest

from heckeiso.ff import FieldCtx
from heckeiso.zerohecke import (
    HModule,
    build_zero_hecke,
    character_module,
    hom_space,
    is_projective,
    stable_hom_dim,
    tensor_module,
)

GF3 = FieldCtx(3)


def all_characters(alg):
    n = len(alg.gen_names)
    out = []
    for mask in range(2 ** n):
        L = {i for i in range(n) if mask >> i & 1}
        out.append((frozenset(L), character_module(alg, L)))
    return out


def test_a1_regular_action_matrix():
    alg = build_zero_hecke("A1", GF3)
    # Basis (H_e, H_s); H_e H_s = H_s, H_s H_s = -H_s.
    assert alg.gen_action[0].data.tolist() == [[0, 1], [0, 2]]


def test_regular_module_dimension():
    alg = build_zero_hecke("A2", GF3)
    assert alg.regular_module().dim == 6
    assert is_projective(alg.regular_module())


def test_character_count_is_two_to_rank():
    for ctype in ("A1", "A2", "B2"):
        alg = build_zero_hecke(ctype, GF3)
        chars = all_characters(alg)
        assert len(chars) == 2 ** len(alg.gen_names)


@pytest.mark.parametrize("ctype", ["A2", "B2", "G2"])
def test_irreducible_projective_characters_are_trivial_and_sign(ctype):
    alg = build_zero_hecke(ctype, GF3)
    n = len(alg.gen_names)
    for L, module in all_characters(alg):
        expected = L == frozenset() or L == frozenset(range(n))
        assert is_projective(module) is expected


def test_product_type_projectivity_is_componentwise():
    alg = build_zero_hecke("A2xA1", GF3)
    # Generators 0,1 form the A2 component; generator 2 the A1 component.
    for L, module in all_characters(alg):
        a2 = L & {0, 1}
        expected = a2 in (frozenset(), frozenset({0, 1}))
        assert is_projective(module) is expected


def test_stable_hom_is_diagonal_with_projectives_killed():
    alg = build_zero_hecke("A2", GF3)
    chars = all_characters(alg)
    for (L, M), (L2, N) in itertools.product(chars, chars):
        expected = int(L == L2 and not is_projective(M))
        assert stable_hom_dim(M, N) == expected


def test_hom_space_of_equal_characters():
    alg = build_zero_hecke("B2", GF3)
    M = character_module(alg, {0})
    N = character_module(alg, {1})
    assert len(hom_space(M, M)) == 1
    assert len(hom_space(M, N)) == 0


def test_direct_sum_adds_dimensions_and_preserves_projectivity():
    alg = build_zero_hecke("A2", GF3)
    P = alg.regular_module()
    S = character_module(alg, {0})
    both = P.direct_sum(P)
    assert both.dim == 12
    assert is_projective(both)
    mixed = S.direct_sum(P)
    assert not is_projective(mixed)
    assert stable_hom_dim(S, mixed) == stable_hom_dim(S, S)


def test_tensor_module_matches_product_character():
    a2 = build_zero_hecke("A2", GF3)
    a1 = build_zero_hecke("A1", GF3)
    T = tensor_module(character_module(a2, {0, 1}), character_module(a1, set()))
    direct = character_module(build_zero_hecke("A2xA1", GF3), {0, 1})
    assert T.dim == 1
    assert [A.data.tolist() for A in T.action] == [A.data.tolist() for A in direct.action]


def test_tensor_module_rejects_shared_algebra():
    alg = build_zero_hecke("A1", GF3)
    M = character_module(alg, set())
    with pytest.raises(ValueError):
        tensor_module(M, M)


def test_bad_action_matrices_rejected():
    alg = build_zero_hecke("A1", GF3)
    from heckeiso.ff import FFMatrix

    # H_s acting by 1 violates H_s^2 = -H_s.
    with pytest.raises(AssertionError):
        HModule(alg, 1, [FFMatrix(GF3, [[1]])])
    with pytest.raises(ValueError):
        HModule(alg, 2, [FFMatrix(GF3, [[0]])])


def test_extension_field_coefficients():
    alg = build_zero_hecke("A2", FieldCtx(3, 2))
    S = character_module(alg, {0})
    assert not is_projective(S)
    assert stable_hom_dim(S, S) == 1
