"""Immutable invariant records for NS-pairs and map germs.

A record is either a ``pair`` (an abstract NS-pair (S^n, K) whose complement
fibers over S^p; dims are sphere and base dimension) or a ``germ`` (the
NS-pair of a polynomial germ R^n -> R^p; dims are source and target).  In
both readings the link has dimension n - p - 1 and the fiber n - p, and the
Looijenga realization takes a pair (n, p) to a germ (n + 1, p + 1).

Unknown data is ``None`` throughout: tri-state flags are True/False/None and
Betti numbers may be individually unknown.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from nspairs.errors import ContradictionError, StructureError

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def sup(n) -> str:
    return str(n).translate(_SUPERSCRIPT)


@dataclass(frozen=True)
class FiberDescriptor:
    dim: int
    betti: tuple  # beta_0 .. beta_dim, entries int or None
    boundary_components: Optional[int] = None
    bouquet: Optional[tuple] = None  # ((sphere_dim, multiplicity or None), ...); () is a point
    torsion_free_middle: Optional[bool] = None
    simply_connected: Optional[bool] = None
    pi1_free: Optional[bool] = None
    model: Optional[tuple] = None  # (n, holes) when the fiber is known to be S^n_(holes)

    def __post_init__(self):
        if self.dim < 0:
            raise StructureError("negative fiber dimension")
        if len(self.betti) != self.dim + 1:
            raise StructureError(
                f"fiber of dimension {self.dim} needs {self.dim + 1} Betti numbers, "
                f"got {len(self.betti)}")
        if any(b is not None and b < 0 for b in self.betti):
            raise StructureError("negative Betti number")
        if self.betti[0] not in (None, 1):
            raise StructureError("fiber must be connected (beta_0 = 1)")
        if self.bouquet is not None:
            for d, mult in self.bouquet:
                if not 0 < d <= self.dim:
                    raise StructureError(f"S^{d} cannot sit in a {self.dim}-dimensional fiber")
                if mult is not None and mult <= 0:
                    raise StructureError("bouquet multiplicities must be positive")
            if self.pi1_free is False:
                raise ContradictionError("a bouquet of spheres has free fundamental group")
            for d in range(1, self.dim + 1):
                mults = [m for e, m in self.bouquet if e == d]
                if any(m is None for m in mults) or self.betti[d] is None:
                    continue
                if self.betti[d] != sum(mults):
                    raise ContradictionError(
                        f"beta_{d} = {self.betti[d]} disagrees with the bouquet "
                        f"({sum(mults)} copies of S^{d})")

    @classmethod
    def punctured_sphere(cls, n: int, holes: int) -> FiberDescriptor:
        """S^n with `holes` >= 1 open n-disks removed: a wedge of holes - 1 copies of S^(n-1)."""
        if holes < 1:
            raise StructureError("a punctured sphere needs at least one hole")
        betti = [0] * (n + 1)
        betti[0] = 1
        betti[n - 1] += holes - 1
        bouquet = ((n - 1, holes - 1),) if holes > 1 else ()
        return cls(n, tuple(betti), holes, bouquet, torsion_free_middle=True,
                   simply_connected=n >= 3 or holes == 1, pi1_free=True, model=(n, holes))

    def euler_characteristic(self) -> Optional[int]:
        if any(b is None for b in self.betti):
            return None
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def homology_profile(self) -> tuple:
        """Betti numbers with trailing zeros dropped (invariant under thickening)."""
        b = list(self.betti)
        while b and b[-1] == 0:
            b.pop()
        return tuple(b)

    @property
    def is_contractible(self) -> Optional[bool]:
        if self.bouquet is None:
            return None
        return len(self.bouquet) == 0

    def has_reduced_homology(self) -> Optional[bool]:
        """True if some beta_i > 0 for i >= 1; None if that is undecided."""
        rest = self.betti[1:]
        if any(b for b in rest if b is not None):
            return True
        if any(b is None for b in rest):
            return None
        return False

    def bouquet_str(self) -> str:
        if self.bouquet is None:
            return "unknown"
        if not self.bouquet:
            return "point"
        dims = sorted({d for d, _ in self.bouquet})
        mults = {m for _, m in self.bouquet}
        if len(dims) > 1 and len(mults) == 1:
            (m,) = mults
            inner = "∨".join(f"S{sup(d)}" for d in dims)
            pre = "∨" if m is None else f"∨{sup(m)}"
            return f"{pre}({inner})"
        parts = []
        for d, m in self.bouquet:
            parts.append(f"∨S{sup(d)}" if m is None else f"∨{sup(m)}S{sup(d)}")
        return " ∨ ".join(parts)

    def model_str(self) -> str:
        if self.model is None:
            return f"{self.dim}-manifold"
        n, holes = self.model
        return f"S{sup(n)}_({holes})"

    def summary(self) -> str:
        return f"{self.model_str()} ≃ {self.bouquet_str()}"

    def with_(self, **changes) -> FiberDescriptor:
        return replace(self, **changes)


@dataclass(frozen=True)
class NSInvariantRecord:
    kind: str  # "pair" or "germ"
    source_dim: int
    target_dim: int
    link_components: Optional[int]
    fiber: FiberDescriptor
    degree: Optional[int] = None
    trivial: Optional[bool] = None
    provenance: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in ("pair", "germ"):
            raise StructureError(f"unknown record kind {self.kind!r}")
        if self.target_dim < 1 or self.source_dim <= self.target_dim:
            raise StructureError(
                f"need source_dim > target_dim >= 1, got ({self.source_dim}, {self.target_dim})")
        if self.fiber.dim != self.source_dim - self.target_dim:
            raise StructureError(
                f"fiber dimension {self.fiber.dim} != {self.source_dim} - {self.target_dim}")
        if self.link_components is not None and self.link_components < 0:
            raise StructureError("negative link component count")
        if self.kind == "pair" and self.degree is not None:
            raise StructureError("a gradient degree belongs to a germ record, not a pair")
        if self.kind == "germ":
            check_euler(self.source_dim, self.degree, self.fiber)

    @property
    def link_dim(self) -> int:
        return self.source_dim - self.target_dim - 1

    @property
    def dims(self) -> tuple:
        return (self.source_dim, self.target_dim)

    def link_str(self) -> str:
        c = self.link_components
        if c is None:
            return "unknown"
        if c == 0:
            return "empty"
        # boundary of a punctured sphere is a union of spheres
        if self.fiber.model is not None:
            return f"{c} × S{sup(self.link_dim)}"
        return f"{c} component" + ("" if c == 1 else "s")

    def derive(self, step: str, **changes) -> NSInvariantRecord:
        return replace(self, provenance=self.provenance + (step,), **changes)

    def describe(self) -> str:
        n, p = self.dims
        if self.kind == "germ":
            head = f"germ (ℝ{sup(n)},0)→(ℝ{sup(p)},0)"
        else:
            head = f"pair (S{sup(n)}, K{sup(self.link_dim)}) over S{sup(p)}"
        parts = [head, "link: " + self.link_str()]
        parts.append(f"fiber: {self.fiber.summary()}")
        if self.degree is not None:
            parts.append(f"deg₀∇f₁ = {self.degree}")
        return "; ".join(parts)


def check_euler(source_dim: int, degree: Optional[int], fiber: FiberDescriptor) -> None:
    """Reject germ data contradicting chi(F) = 1 - deg (n even) or chi(F) = 1, deg = 0 (n odd)."""
    chi = fiber.euler_characteristic()
    if source_dim % 2:
        if degree not in (None, 0):
            raise ContradictionError(
                f"source dimension {source_dim} is odd, so every deg0(grad f_i) is 0, not {degree}")
        if chi is not None and chi != 1:
            raise ContradictionError(
                f"source dimension {source_dim} is odd, so chi(F) = 1, but the Betti data give {chi}")
    elif degree is not None and chi is not None and chi != 1 - degree:
        raise ContradictionError(f"chi(F) = {chi} but 1 - deg0(grad f_1) = {1 - degree}")
