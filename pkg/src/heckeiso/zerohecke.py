"""
0-Hecke algebras of finite Coxeter groups over a finite field, together with
generic module machinery shared with the brute-force oracle:

  * hom_space        -- a basis of intertwiners between two modules,
  * is_projective    -- splitting test against a free cover,
  * stable_hom_dim   -- Hom modulo maps factoring through projectives.

The machinery only needs an algebra object exposing ``field``, ``dim``,
``gen_action`` (right multiplication matrices of the generators on the
algebra basis) and ``basis_words`` (each basis element as a product of
generators), so it works uniformly for 0-Hecke algebras and the oracle's
parahoric algebra models.

Modules are given by one right-action matrix per generator; rows are module
elements, so the action of a product ab is A_a @ A_b.
"""

from __future__ import annotations

import numpy as np

from .ff import FFMatrix, FieldCtx, kernel, rank, rref, solve
from .weyl import CoxeterGroup, parse_cox_type

ZERO_HECKE_CAP = 1024


class ZeroHeckeAlg:
    """The 0-Hecke algebra of a finite Coxeter group.

    Basis {H_w}, multiplication H_w H_s = H_{ws} if length goes up and
    -H_w otherwise; so the braid relations hold and H_s^2 = -H_s.
    """

    def __init__(self, group: CoxeterGroup, field: FieldCtx):
        self.group = group
        self.field = field
        self.dim = len(group)
        if self.dim > ZERO_HECKE_CAP:
            raise ValueError(f"|W| = {self.dim} exceeds cap {ZERO_HECKE_CAP}")
        index = {w: i for i, w in enumerate(group.elements)}
        self.gen_names = list(range(group.rank))
        self.basis_words = [group.word[w] for w in group.elements]

        mats = []
        minus_one = field.minus_one
        for gi in range(group.rank):
            A = np.zeros((self.dim, self.dim), dtype=np.int64)
            for wi, w in enumerate(group.elements):
                ws = group.multiply_gen(w, gi)
                if group.length[ws] > group.length[w]:
                    A[wi, index[ws]] = 1
                else:
                    A[wi, wi] = minus_one
            mats.append(FFMatrix(field, A))
        self.gen_action = mats
        _check_zero_hecke_relations(self)

    def regular_module(self) -> "HModule":
        return HModule(self, self.dim, list(self.gen_action), check=False)


def _check_zero_hecke_relations(alg: ZeroHeckeAlg):
    _check_relations(alg.field, alg.gen_action, _bond_table(alg.group), quadratic="zero_hecke")


def _bond_table(group: CoxeterGroup) -> dict[tuple[int, int], float]:
    """Coxeter bond orders m(s, t) read off the root permutation action."""
    bonds = {}
    n = group.rank
    for i in range(n):
        for j in range(i + 1, n):
            # Order of s_i s_j as a permutation.
            si, sj = group.generators[i], group.generators[j]
            prod = tuple(si[sj[k]] for k in range(len(si)))
            m, cur = 1, prod
            ident = tuple(range(len(si)))
            while cur != ident:
                cur = tuple(prod[cur[k]] for k in range(len(cur)))
                m += 1
                if m > 64:
                    raise ValueError("unbounded bond order")
            bonds[(i, j)] = m
    return bonds


def _check_relations(field, mats, bonds, quadratic):
    """Assert braid relations and the quadratic relation on action matrices."""
    for (i, j), m in bonds.items():
        if m == 2:
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                raise AssertionError(f"generators {i},{j} fail to commute")
        elif m != float("inf"):
            left = _alternating(mats[i], mats[j], m)
            right = _alternating(mats[j], mats[i], m)
            if left != right:
                raise AssertionError(f"braid relation fails for generators {i},{j}")
    if quadratic == "zero_hecke":
        for i, A in enumerate(mats):
            if A @ A != -A:
                raise AssertionError(f"H_s^2 = -H_s fails for generator {i}")


def _alternating(A: FFMatrix, B: FFMatrix, m: int) -> FFMatrix:
    out = A
    for k in range(1, m):
        out = out @ (B if k % 2 else A)
    return out


class HModule:
    """A finite-dimensional right module given by generator action matrices."""

    def __init__(self, algebra, dim: int, action: list[FFMatrix], check: bool = True):
        self.algebra = algebra
        self.dim = dim
        self.action = action
        if len(action) != len(algebra.gen_action):
            raise ValueError("one action matrix per algebra generator is required")
        for A in action:
            if A.rows != dim or A.cols != dim:
                raise ValueError("action matrix has wrong shape")
        if check and isinstance(algebra, ZeroHeckeAlg):
            _check_relations(
                algebra.field, action, _bond_table(algebra.group), quadratic="zero_hecke"
            )

    def direct_sum(self, other: "HModule") -> "HModule":
        if other.algebra is not self.algebra:
            raise ValueError("modules over different algebras")
        f = self.algebra.field
        mats = []
        for A, B in zip(self.action, other.action):
            C = np.zeros((self.dim + other.dim, self.dim + other.dim), dtype=np.int64)
            C[: self.dim, : self.dim] = A.data
            C[self.dim :, self.dim :] = B.data
            mats.append(FFMatrix(f, C))
        return HModule(self.algebra, self.dim + other.dim, mats, check=False)


def build_zero_hecke(cox_type, field: FieldCtx) -> ZeroHeckeAlg:
    """Build the 0-Hecke algebra of a finite Coxeter type."""
    group = CoxeterGroup(parse_cox_type(cox_type))
    return ZeroHeckeAlg(group, field)


def character_module(alg: ZeroHeckeAlg, L) -> HModule:
    """The 1-dimensional character with H_s acting by -1 for s in L, else 0."""
    f = alg.field
    L = set(L)
    mats = []
    for gi in alg.gen_names:
        val = f.minus_one if gi in L else 0
        mats.append(FFMatrix(f, [[val]]))
    return HModule(alg, 1, mats, check=False)


def _act_word(module: HModule, word) -> FFMatrix:
    out = FFMatrix.identity(module.algebra.field, module.dim)
    for gi in word:
        out = out @ module.action[gi]
    return out


def _basis_actions(module: HModule) -> list[FFMatrix]:
    """Action matrix of every algebra basis element on the module."""
    return [_act_word(module, word) for word in module.algebra.basis_words]


def hom_space(M: HModule, N: HModule) -> list[FFMatrix]:
    """A basis of Hom(M, N): matrices F with A^M_g F = F A^N_g for all g.

    With rows as module elements, a hom is x -> x F for F of shape
    (dim M, dim N).
    """
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    f = M.algebra.field
    dM, dN = M.dim, N.dim
    blocks = []
    idM = FFMatrix.identity(f, dM)
    idN = FFMatrix.identity(f, dN)
    for A, B in zip(M.action, N.action):
        # vec_col(A F - F B) = (I (x) A - B^T (x) I) vec_col(F)
        blocks.append((idN.kron(A) - B.transpose().kron(idM)).data)
    if not blocks:
        blocks = [np.zeros((0, dM * dN), dtype=np.int64)]
    system = FFMatrix(f, np.concatenate(blocks, axis=0))
    K = kernel(system)
    basis = []
    for j in range(K.cols):
        # Undo the column-major vectorization.
        F = K.data[:, j].reshape((dN, dM)).T.copy()
        basis.append(FFMatrix(f, F))
    return basis


def hom_space_matrix(M: HModule, N: HModule) -> FFMatrix:
    """Basis of Hom(M, N) with each intertwiner flattened into a row."""
    basis = hom_space(M, N)
    f = M.algebra.field
    if not basis:
        return FFMatrix.zeros(f, 0, M.dim * N.dim)
    return FFMatrix(f, np.stack([F.flatten_row() for F in basis]))


def _free_module(alg, d: int) -> HModule:
    """The free right module A^d, basis ordered (copy, algebra basis)."""
    f = alg.field
    idd = FFMatrix.identity(f, d)
    mats = [idd.kron(R) for R in alg.gen_action]
    return HModule(alg, d * alg.dim, mats, check=False)


def _free_cover(module: HModule) -> tuple[HModule, FFMatrix]:
    """A surjection pi: A^d -> M with d = dim M.

    The (copy i, basis b) row of the cover matrix is row i of the action of
    basis element b on M, so the i-th free generator maps onto the i-th
    basis vector of M.
    """
    alg = module.algebra
    d = module.dim
    acts = _basis_actions(module)
    P = np.zeros((d * alg.dim, d), dtype=np.int64)
    for i in range(d):
        for b, act in enumerate(acts):
            P[i * alg.dim + b, :] = act.data[i, :]
    return _free_module(alg, d), FFMatrix(alg.field, P)


def is_projective(M: HModule) -> bool:
    """Splitting test: does the identity of M factor through a free cover?

    Builds pi: A^d -> M, computes the image of Hom(M, A^d) under
    sigma -> pi . sigma inside Hom(M, M), and checks membership of id.
    """
    f = M.algebra.field
    free, P = _free_cover(M)
    sigmas = hom_space(M, free)
    if not sigmas:
        return M.dim == 0
    rows = [(S @ P).flatten_row() for S in sigmas]
    A = FFMatrix(f, np.stack(rows)).transpose()
    target = FFMatrix(f, FFMatrix.identity(f, M.dim).flatten_row()[:, None])
    return solve(A, target) is not None


def stable_hom_dim(M: HModule, N: HModule) -> int:
    """dim Hom(M, N) minus the dimension of maps factoring through a free cover.

    Any map factoring through some projective also factors through the fixed
    surjection theta: A^d -> N, so the quotient dimension is independent of
    the chosen cover.
    """
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    f = M.algebra.field
    homs = hom_space(M, N)
    if not homs:
        return 0
    free, theta = _free_cover(N)
    sigmas = hom_space(M, free)
    if not sigmas:
        return len(homs)
    rows = [(S @ theta).flatten_row() for S in sigmas]
    projected_rank = rank(FFMatrix(f, np.stack(rows)))
    return len(homs) - projected_rank


def tensor_module(M: HModule, N: HModule) -> HModule:
    """Outer tensor of modules over 0-Hecke algebras of disjoint types.

    The result lives over the 0-Hecke algebra of the concatenated type, with
    generators of the first factor listed first.
    """
    algM, algN = M.algebra, N.algebra
    if not isinstance(algM, ZeroHeckeAlg) or not isinstance(algN, ZeroHeckeAlg):
        raise ValueError("tensor_module expects 0-Hecke modules")
    if algM is algN:
        raise ValueError("generator sets overlap: tensor factors share an algebra")
    if algM.field != algN.field:
        raise ValueError("field mismatch")
    product = build_zero_hecke(algM.group.cox_type + algN.group.cox_type, algM.field)
    f = algM.field
    idM = FFMatrix.identity(f, M.dim)
    idN = FFMatrix.identity(f, N.dim)
    mats = [A.kron(idN) for A in M.action] + [idM.kron(B) for B in N.action]
    return HModule(product, M.dim * N.dim, mats, check=False)
