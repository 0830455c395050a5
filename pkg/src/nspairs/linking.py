"""Linking matrices of Hopf-dual spheres and the NS-pair criterion.

Setup: spheres S_0, S_1, ..., S_k in S^(2n-1), each S_i (i >= 1) linking S_0
once, with a_ij = lk(S_j, S_i) for i != j.  Removing tubular neighborhoods
gives a bundle with fiber S^n_(k+1); it comes from an NS-pair exactly when
det A = +-1.  For n = 3 the Mayer-Vietoris presentation matrix R of H_2(X^5)
is built explicitly and its Smith form is reported.

Layout of R (2k+2 square): rows mu_0..mu_k, delta_0..delta_k; columns
[K_0 x *]..[K_k x *], [y_0 x dB^3]..[y_k x dB^3].  Columns are images of the
domain generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from nspairs.errors import HypothesisError, StructureError, UnsupportedCaseError
from nspairs.linalg import (IntMatrix, SmithNormalForm, determinant, pfaffian,
                            smith_normal_form)
from nspairs.records import FiberDescriptor, NSInvariantRecord, sup


@dataclass(frozen=True)
class LinkingMatrix:
    k: int
    symmetry_sign: int
    a: IntMatrix

    def __post_init__(self):
        if self.symmetry_sign not in (1, -1):
            raise StructureError(f"symmetry_sign must be +1 or -1, got {self.symmetry_sign}")
        if self.a.rows != self.k or self.a.cols != self.k:
            raise StructureError(f"linking matrix must be {self.k}x{self.k}")
        for i in range(self.k):
            if self.a[i, i] != 0:
                raise StructureError(f"diagonal entry ({i}, {i}) is {self.a[i, i]}, must be 0")
            for j in range(i + 1, self.k):
                if self.a[i, j] != self.symmetry_sign * self.a[j, i]:
                    kind = "skew-symmetric" if self.symmetry_sign < 0 else "symmetric"
                    raise StructureError(f"matrix is not {kind} at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows, symmetry_sign: int = -1) -> LinkingMatrix:
        a = IntMatrix.from_rows(rows)
        if not a.is_square:
            raise StructureError(f"linking matrix must be square, got {a.rows}x{a.cols}")
        return cls(a.rows, symmetry_sign, a)

    def permuted(self, perm) -> LinkingMatrix:
        """Relabel the dual spheres: new sphere i is old sphere perm[i]."""
        rows = [[self.a[perm[i], perm[j]] for j in range(self.k)] for i in range(self.k)]
        return LinkingMatrix.from_rows(rows, self.symmetry_sign)

    def reoriented(self, i: int) -> LinkingMatrix:
        """Reverse the orientation of dual sphere i (negates row and column i)."""
        rows = self.a.to_rows()
        for j in range(self.k):
            rows[i][j] = -rows[i][j]
            rows[j][i] = -rows[j][i]
        return LinkingMatrix.from_rows(rows, self.symmetry_sign)


def build_R(L: LinkingMatrix) -> IntMatrix:
    if L.symmetry_sign != -1:
        raise UnsupportedCaseError(
            "the Mayer-Vietoris matrix R is only defined for skew-symmetric linking (n = 3)")
    k = L.k
    off = k + 1  # offset of the delta rows and of the y columns
    size = 2 * k + 2
    r = [[0] * size for _ in range(size)]
    for j in range(k + 1):
        r[0][off + j] = 1          # mu_0 links every S_j once
        r[off + j][j] = -1         # -delta_j from [K_j x *]
    for i in range(1, k + 1):
        r[i][0] = 1                # [K_0 x *] -> mu_1 + ... + mu_k - delta_0
        r[i][i] = 1
        r[i][off + 1:] = L.a.row(i - 1)
    return IntMatrix.from_rows(r, size)


@dataclass(frozen=True)
class ClassificationReport:
    k: int
    symmetry_sign: int
    n: int
    det_A: int
    pfaffian_A: Optional[int]
    det_R: Optional[int]
    homology: SmithNormalForm  # SNF of R (skew case) or of A (symmetric case)
    is_ns_pair: bool
    link_components: int
    fiber: FiberDescriptor

    @property
    def h2_invariant_factors(self) -> tuple:
        return self.homology.invariant_factors

    @property
    def reason(self) -> str:
        if self.is_ns_pair:
            return "det A = ±1"
        if self.symmetry_sign < 0 and self.k % 2:
            return "odd k"
        return f"det A = {self.det_A}"

    def homology_label(self) -> str:
        sub = str(self.n - 1).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))
        return f"H{sub}(X{sup(2 * self.n - 1)})"

    def pair_record(self) -> NSInvariantRecord:
        """The NS-pair (S^(2n-1), L_(k+1)) over S^(n-1) realizing this matrix."""
        if not self.is_ns_pair:
            raise HypothesisError(f"linking matrix does not give an NS-pair ({self.reason})")
        n = self.n
        return NSInvariantRecord(
            kind="pair", source_dim=2 * n - 1, target_dim=n - 1,
            link_components=self.k + 1, fiber=self.fiber, trivial=self.k == 0,
            provenance=(f"linking matrix k={self.k} sign={self.symmetry_sign:+d}: "
                        f"NS-pair (S{sup(2 * n - 1)}, L{self.k + 1})",))


def classify(L: LinkingMatrix, n: Optional[int] = None) -> ClassificationReport:
    """Decide whether the bundle with linking matrix L arises from an NS-pair.

    ``n`` is the fiber dimension (spheres S^(n-1) in S^(2n-1)); it defaults
    to 3 for skew matrices and 4 for symmetric ones and must satisfy
    (-1)^n = symmetry_sign.
    """
    if n is None:
        n = 3 if L.symmetry_sign < 0 else 4
    if n < 3:
        raise UnsupportedCaseError(f"n must be at least 3, got {n}")
    if (-1) ** n != L.symmetry_sign:
        raise StructureError(f"a (-1)^n-symmetric matrix with n = {n} needs symmetry_sign {(-1) ** n:+d}")
    det_a = determinant(L.a)
    pf = None
    if L.symmetry_sign < 0 and L.k % 2 == 0:
        pf = pfaffian(L.a)
    if L.symmetry_sign < 0 and n == 3:
        R = build_R(L)
        det_r = determinant(R)
        snf = smith_normal_form(R)
    else:
        det_r = None
        snf = smith_normal_form(L.a)
    ok = abs(det_a) == 1
    if ok != snf.is_unimodular:
        raise AssertionError("determinant and Smith form disagree on unimodularity")
    return ClassificationReport(
        k=L.k, symmetry_sign=L.symmetry_sign, n=n, det_A=det_a, pfaffian_A=pf,
        det_R=det_r, homology=snf, is_ns_pair=ok, link_components=L.k + 1,
        fiber=FiberDescriptor.punctured_sphere(n, L.k + 1))


def generate_unimodular_blocks(half: int) -> LinkingMatrix:
    """Direct sum of `half` copies of [[0, 1], [-1, 0]]."""
    if half < 0:
        raise StructureError("half must be non-negative")
    k = 2 * half
    rows = [[0] * k for _ in range(k)]
    for b in range(half):
        rows[2 * b][2 * b + 1] = 1
        rows[2 * b + 1][2 * b] = -1
    return LinkingMatrix.from_rows(rows, -1)
