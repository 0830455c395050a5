"""Invariant-level versions of the constructions on NS-pairs and germs.

None of these build maps; they push the recorded invariants (dimensions,
link components, fiber homology, bouquet type, triviality) through each
construction and refuse inputs outside its hypotheses.
"""
from __future__ import annotations

from typing import Optional

from nspairs.errors import (ContradictionError, HypothesisError, ImpossibleDegreeError,
                            InsufficientDataError, SpunUndefinedError, StructureError,
                            UnsupportedCaseError)
from nspairs.linking import LinkingMatrix, classify
from nspairs.records import FiberDescriptor, NSInvariantRecord, sup


def euler_from_degree(n: int, degree: int) -> int:
    """Euler characteristic of the Milnor fiber of a germ with source dimension n."""
    if n < 3:
        raise UnsupportedCaseError(f"source dimension must be at least 3, got {n}")
    if n % 2:
        if degree != 0:
            raise ContradictionError(
                f"odd source dimension {n} forces deg0(grad f_1) = 0, got {degree}")
        return 1
    return 1 - degree


def bouquet_even(n: int, degree: int) -> FiberDescriptor:
    """Fiber of a germ R^2n -> R^n: a wedge of (-1)^n deg copies of S^(n-1)."""
    if n < 2:
        raise UnsupportedCaseError(f"need n >= 2, got {n}")
    beta = (-1) ** n * degree
    if beta < 0:
        raise ImpossibleDegreeError(
            f"deg0(grad f_1) = {degree} would give beta_{n - 1} = {beta} < 0")
    betti = [0] * (n + 1)
    betti[0] = 1
    betti[n - 1] = beta
    return FiberDescriptor(
        dim=n, betti=tuple(betti), bouquet=((n - 1, beta),) if beta else (),
        torsion_free_middle=True, simply_connected=n >= 3 or beta == 0, pi1_free=True)


def bouquet_odd(n: int, beta: int, torsion_free: bool) -> FiberDescriptor:
    """Fiber of a germ R^(2n+1) -> R^n with beta_(n-1) = beta_n = beta."""
    if n < 3:
        raise UnsupportedCaseError(f"need n >= 3, got {n}")
    if beta < 0:
        raise StructureError(f"beta_{n - 1} must be non-negative, got {beta}")
    betti = [0] * (n + 2)
    betti[0] = 1
    betti[n - 1] = beta
    betti[n] = beta
    bouquet = None
    if torsion_free:
        bouquet = ((n - 1, beta), (n, beta)) if beta else ()
    return FiberDescriptor(
        dim=n + 1, betti=tuple(betti), bouquet=bouquet, torsion_free_middle=torsion_free,
        simply_connected=True, pi1_free=True)


def _degree_from_fiber(source_dim: int, fiber: FiberDescriptor) -> Optional[int]:
    if source_dim % 2:
        return 0
    chi = fiber.euler_characteristic()
    return None if chi is None else 1 - chi


def _boundary_self_sum(fiber: FiberDescriptor, holes_joined: int) -> FiberDescriptor:
    """Fiber of F with (+-)F glued along one boundary disk each."""
    betti = (fiber.betti[0],) + tuple(None if b is None else 2 * b for b in fiber.betti[1:])
    bouquet = None
    if fiber.bouquet is not None:
        bouquet = tuple((d, None if m is None else 2 * m) for d, m in fiber.bouquet)
    model = None
    if fiber.model is not None:
        n, h = fiber.model
        model = (n, 2 * h - 1)
    sc = fiber.simply_connected
    free = fiber.pi1_free
    return FiberDescriptor(
        dim=fiber.dim, betti=betti, boundary_components=holes_joined, bouquet=bouquet,
        torsion_free_middle=fiber.torsion_free_middle, simply_connected=sc,
        pi1_free=free, model=model)


def _doubled_pair(rec: NSInvariantRecord, step: str) -> NSInvariantRecord:
    c = rec.link_components
    if c is None:
        raise InsufficientDataError("connected sum needs the number of link components")
    if c < 1:
        raise HypothesisError("connected sum of NS-pairs needs a non-empty link")
    fiber = _boundary_self_sum(rec.fiber, 2 * c - 1)
    return rec.derive(step, link_components=2 * c - 1, fiber=fiber,
                      trivial=_trivial_from_fiber(fiber, rec.trivial if c == 1 else None))


def _trivial_from_fiber(fiber: FiberDescriptor, fallback: Optional[bool]) -> Optional[bool]:
    # a disk has no reduced homology; S^n_(1) is a disk
    if fiber.model is not None:
        return fiber.model[1] == 1
    if fiber.has_reduced_homology() or fiber.simply_connected is False:
        return False
    return fallback


def looijenga_sum(rec: NSInvariantRecord) -> NSInvariantRecord:
    """Germ realizing (S^n, K) # ((-1)^(n-1) S^n, (-1)^(n-p) K).

    Input is an NS-pair over S^p; output is the germ R^(n+1) -> R^(p+1) with
    2c - 1 link components and fiber the boundary connected sum F # F.
    """
    if rec.kind != "pair":
        raise HypothesisError("the Looijenga construction takes an NS-pair record, not a germ")
    n, p = rec.dims
    c = rec.link_components
    doubled = _doubled_pair(
        rec, f"looijenga_sum: (S{sup(n)}, K{sup(rec.link_dim)}) # mirror "
             f"→ germ (ℝ{sup(n + 1)},0)→(ℝ{sup(p + 1)},0), link {c} → "
             + ("?" if c is None else str(2 * c - 1)))
    return NSInvariantRecord(
        kind="germ", source_dim=n + 1, target_dim=p + 1,
        link_components=doubled.link_components, fiber=doubled.fiber,
        degree=_degree_from_fiber(n + 1, doubled.fiber), trivial=doubled.trivial,
        provenance=doubled.provenance)


def spun(rec: NSInvariantRecord) -> NSInvariantRecord:
    """Artin spinning: (S^m, K^k) -> (S^(m+1), K~^(k+1)) over the same base."""
    c = rec.link_components
    if c is None:
        raise InsufficientDataError("spinning needs to know the link is non-empty")
    if c == 0:
        raise SpunUndefinedError("spinning needs a non-empty link (a point of K to spin about)")
    n, p = rec.dims
    f = rec.fiber
    fiber = FiberDescriptor(
        dim=f.dim + 1, betti=(1,) + (None,) * (f.dim + 1), boundary_components=c,
        simply_connected=f.simply_connected, pi1_free=f.pi1_free)
    trivial = None
    if f.simply_connected is False or f.pi1_free is False:
        trivial = False
    degree = None
    if rec.kind == "germ" and (n + 1) % 2:
        degree = 0
    return rec.derive(
        f"spun: ({n},{p}) → ({n + 1},{p}), π₁ of fiber preserved",
        source_dim=n + 1, link_components=c, fiber=fiber, degree=degree, trivial=trivial)


def compose_projection(rec: NSInvariantRecord) -> NSInvariantRecord:
    """Drop the last component: the fiber of G = pi o f is F x [0, 1]."""
    if rec.kind != "germ":
        raise HypothesisError("composition with a projection applies to germ records")
    n, p = rec.dims
    if p < 2:
        raise StructureError(f"target dimension must be at least 2, got {p}")
    f = rec.fiber
    fiber = FiberDescriptor(
        dim=f.dim + 1, betti=f.betti + (0,), bouquet=f.bouquet,
        torsion_free_middle=f.torsion_free_middle, simply_connected=f.simply_connected,
        pi1_free=f.pi1_free)
    # the link of G bounds F x [0, 1], i.e. it is the double of F
    c = rec.link_components
    lc = None if c is None else (1 if c >= 1 else 2)
    fiber = fiber.with_(boundary_components=lc)
    step = f"compose_projection: ({n},{p}) → ({n},{p - 1})"
    if p == 2:
        step += " [target ℝ¹: fiber taken as ball ∩ preimage of a regular value]"
    trivial = True if rec.trivial is True else _trivial_from_fiber(fiber, None)
    return rec.derive(step, target_dim=p - 1, link_components=lc, fiber=fiber, trivial=trivial)


def higher_dim_pair(n: int, L: LinkingMatrix) -> NSInvariantRecord:
    """NS-pair (S^(2n-1), L_k), k = 2l + 1, from an even unimodular l x l matrix.

    The matrix yields a homotopy sphere X with l + 1 linked spheres; X # (-X)
    is the standard sphere and carries 2(l + 1) - 1 of them.
    """
    if n < 3:
        raise HypothesisError(f"the construction needs n >= 3, got {n}")
    if L.symmetry_sign != (-1) ** n:
        raise HypothesisError(f"linking matrix must be {(-1) ** n:+d}-symmetric for n = {n}")
    ell = L.k
    if ell % 2:
        raise HypothesisError(f"matrix size l = {ell} must be even (odd l admits no det ±1)")
    report = classify(L, n)
    if not report.is_ns_pair:
        raise HypothesisError(f"det A = {report.det_A}, but the construction needs det A = ±1")
    x = NSInvariantRecord(
        kind="pair", source_dim=2 * n - 1, target_dim=n - 1, link_components=ell + 1,
        fiber=report.fiber, trivial=ell == 0,
        provenance=(f"higher_dim_construct: l={ell}, n={n}: homotopy sphere X{sup(2 * n - 1)} "
                    f"with {ell + 1} spheres S{sup(n - 1)}",))
    k = 2 * ell + 1
    pair = _doubled_pair(x, f"X # (-X) ≅ S{sup(2 * n - 1)}: NS-pair (S{sup(2 * n - 1)}, L{k})")
    if pair.link_components % 4 != 1:
        raise AssertionError("k = 2l + 1 with l even is 1 mod 4")
    return pair


def higher_dim_construct(n: int, L: LinkingMatrix) -> NSInvariantRecord:
    """Germ R^2n -> R^n with 2k - 1 link components and fiber S^n_(2k-1)."""
    return looijenga_sum(higher_dim_pair(n, L))


_TRIVIALITY_CASES = {(6, 3), (8, 5), (5, 2)}


def triviality_check(rec: NSInvariantRecord) -> tuple:
    """(verdict, reason) with verdict True/False/None for the three n - p = 3 cases."""
    if rec.kind != "germ" or rec.dims not in _TRIVIALITY_CASES:
        raise UnsupportedCaseError(
            f"triviality criteria cover germs (6,3), (8,5), (5,2); got {rec.kind} {rec.dims}")
    votes = []
    c = rec.link_components
    d = rec.degree
    f = rec.fiber
    if rec.dims == (6, 3):
        if d is not None:
            votes.append((d == 0, f"deg0(grad f_1) = {d}"))
        if c is not None:
            votes.append((c == 1, f"link has {c} component{'s' if c != 1 else ''}"))
        reduced = f.has_reduced_homology()
        if reduced is not None:
            # the fiber is S^3_(k+1), a disk exactly when beta_2 = 0
            votes.append((not reduced, "fiber Betti numbers"))
    elif rec.dims == (8, 5):
        if d is not None:
            votes.append((d == 0, f"deg0(grad f_1) = {d}"))
        if c is not None:
            votes.append((c >= 1, "link is empty" if c == 0 else "link is non-empty"))
        if f.has_reduced_homology():
            votes.append((False, "fiber has reduced homology"))
    else:
        if f.simply_connected is not None:
            votes.append((f.simply_connected,
                          "fiber simply connected" if f.simply_connected
                          else "fiber not simply connected"))
        if f.has_reduced_homology():
            votes.append((False, "fiber has reduced homology"))
    if rec.trivial is not None:
        votes.append((rec.trivial, "recorded triviality"))
    verdicts = {v for v, _ in votes}
    if len(verdicts) > 1:
        detail = ", ".join(f"{why} ⇒ {'trivial' if v else 'non-trivial'}" for v, why in votes)
        raise ContradictionError(f"inconsistent data for {rec.dims}: {detail}")
    if not votes:
        return None, f"insufficient data for {rec.dims}"
    verdict = votes[0][0]
    return verdict, "; ".join(why for _, why in votes)


def stairs_conclude(n: int, p: int, stairs_available: bool, torsion_free: Optional[bool],
                    degree: Optional[int] = None, beta: Optional[int] = None
                    ) -> Optional[FiberDescriptor]:
    """Homotopy type of the fiber of f: R^n -> R^p given an (n/2 - p)-stairs map.

    The stairs hypothesis is consumed, never inferred.  Returns None when
    the hypotheses do not pin the bouquet down.
    """
    if not (2 * p <= n and p >= 2):
        raise UnsupportedCaseError(f"need n/2 >= p >= 2, got n={n}, p={p}")
    if not stairs_available:
        return None
    dim = n - p
    betti = [0] * (dim + 1)
    betti[0] = 1
    if n % 2 == 0:
        s = n // 2 - 1
        mult = None
        if degree is not None:
            mult = (-1) ** (n // 2) * degree
            if mult < 0:
                raise ImpossibleDegreeError(f"degree {degree} gives a negative Betti number")
        betti[s] = mult
        bouquet = () if mult == 0 else ((s, mult),)
        sc = True if s >= 2 else (None if mult is None else mult == 0)
        return FiberDescriptor(dim, tuple(betti), bouquet=bouquet, torsion_free_middle=True,
                               simply_connected=sc, pi1_free=True)
    if torsion_free is not True:
        return None
    k = (n - 1) // 2 - 1
    if beta is not None and beta < 0:
        raise StructureError("beta must be non-negative")
    betti[k] = beta
    betti[k + 1] = beta
    bouquet = () if beta == 0 else ((k, beta), (k + 1, beta))
    sc = True if k >= 2 else (None if beta is None else beta == 0)
    return FiberDescriptor(dim, tuple(betti), bouquet=bouquet, torsion_free_middle=True,
                           simply_connected=sc, pi1_free=True)
