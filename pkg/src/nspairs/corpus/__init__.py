"""Bundled example files and the code that regenerates them.

``build_corpus()`` returns the exact text of every shipped file; the test
suite checks the files on disk still match, so the corpus cannot drift from
the library that reads it.  Regenerate with
``python3 -c "from nspairs.corpus import write_corpus; write_corpus()"``.
"""
from __future__ import annotations

from pathlib import Path

from nspairs import serialize
from nspairs.germs.polynomial import parse_germ
from nspairs.invariants import higher_dim_construct, looijenga_sum
from nspairs.linking import LinkingMatrix, classify, generate_unimodular_blocks
from nspairs.records import FiberDescriptor, NSInvariantRecord

CORPUS_DIR = Path(__file__).resolve().parent

# (name, expression, note); all have an algebraically isolated critical point at 0
PLANAR_GERMS = [
    ("morse_min", "x^2 + y^2", "nondegenerate minimum"),
    ("morse_saddle", "x^2 - y^2", "nondegenerate saddle"),
    ("morse_max", "-x^2 - y^2", "nondegenerate maximum"),
    ("morse_tilted", "3*x^2 + 2*x*y + y^2", "positive definite, off-diagonal term"),
    ("monkey_saddle", "x^3 - 3*x*y^2", "Re z^3"),
    ("cusp", "x^3 + y^2", "A2 singularity"),
    ("quartic_saddle", "x^4 - y^4", "x^4 - y^4 pattern"),
    ("quartic_min", "x^4 + y^4", "x^4 - y^4 pattern, both signs positive"),
    ("quartic_mixed", "x^4 - y^4 + x^2*y^2", "x^4 - y^4 pattern with cross term"),
    ("local_vs_global", "x^2 + y^2 - x^3", "second critical point at (2/3, 0)"),
    ("d5", "x^2*y + y^4", "D5 singularity"),
    ("d4_hyperbolic", "x^3*y + x*y^3", "four lines through 0"),
    ("e_mixed", "x^2*y - y^3 + x^4", "D4 with a quartic perturbation"),
    ("im_z3", "3*x^2*y - y^3", "Im z^3"),
    ("re_z2", "x^2 - y^2", "Re z^2 (m = 1)"),
    ("re_z3", "x^3 - 3*x*y^2", "Re z^3 (m = 2)"),
    ("re_z4", "x^4 - 6*x^2*y^2 + y^4", "Re z^4 (m = 3)"),
    ("re_z5", "x^5 - 10*x^3*y^2 + 5*x*y^4", "Re z^5 (m = 4)"),
    ("re_z6", "x^6 - 15*x^4*y^2 + 15*x^2*y^4 - y^6", "Re z^6 (m = 5)"),
]

# second component of the germ (R^3, 0) -> (R^2, 0) given by (x, x^2 + y*x^2 + y^3 + y*z^2)
REMARK_GERM = ("remark_f2", "x^2 + y*x^2 + y^3 + y*z^2", ("x", "y", "z"),
               "second component of (x, x^2 + y*x^2 + y^3 + y*z^2)")

MATRICES = {
    "trivial_k0.lkm": LinkingMatrix.from_rows([], -1),
    "elementary_block.lkm": generate_unimodular_blocks(1),
    "two_blocks.lkm": generate_unimodular_blocks(2),
    "even_two.lkm": LinkingMatrix.from_rows([[0, 2], [-2, 0]], -1),
    "odd_three.lkm": LinkingMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]], -1),
    "mixed_four.lkm": LinkingMatrix.from_rows(
        [[0, 1, 2, -1], [-1, 0, 2, 0], [-2, -2, 0, 1], [1, 0, -1, 0]], -1),
    "symmetric_block.lkm": LinkingMatrix.from_rows([[0, 1], [1, 0]], 1),
}


def _zeeman_pair() -> NSInvariantRecord:
    # (S^4, K^2) with non-free pi_1 of the fiber; only the qualitative data are known
    fiber = FiberDescriptor(dim=3, betti=(1, None, None, 0), boundary_components=1,
                            simply_connected=False, pi1_free=False)
    return NSInvariantRecord(
        kind="pair", source_dim=4, target_dim=1, link_components=1, fiber=fiber, trivial=False,
        provenance=("twist-spun 2-knot (S⁴, K²) whose fiber has non-free π₁",))


def _trefoil_pair() -> NSInvariantRecord:
    fiber = FiberDescriptor(dim=2, betti=(1, 2, 0), boundary_components=1, bouquet=((1, 2),),
                            torsion_free_middle=True, simply_connected=False, pi1_free=True)
    return NSInvariantRecord(
        kind="pair", source_dim=3, target_dim=1, link_components=1, fiber=fiber, trivial=False,
        provenance=("fibered trefoil (S³, K¹): fiber a punctured torus",))


def records() -> dict:
    pair = classify(generate_unimodular_blocks(1)).pair_record()
    zeeman = _zeeman_pair()
    return {
        "pair_S5_L3.nsr": pair,
        "germ_6_3.nsr": looijenga_sum(pair),
        "higher_n3_l2.nsr": higher_dim_construct(3, generate_unimodular_blocks(1)),
        "zeeman_pair_4_1.nsr": zeeman,
        "germ_5_2.nsr": looijenga_sum(zeeman),
        "trefoil_pair_3_1.nsr": _trefoil_pair(),
    }


def build_corpus() -> dict:
    out = {name: serialize.dump_matrix(L) for name, L in MATRICES.items()}
    out.update({name: serialize.dump_record(r) for name, r in records().items()})
    planar = [serialize.GermEntry(n, parse_germ(e, ("x", "y")), note) for n, e, note in PLANAR_GERMS]
    out["planar.germ"] = serialize.dumps(serialize.germs_to_json(planar))
    name, expr, variables, note = REMARK_GERM
    out["remark.germ"] = serialize.dumps(
        serialize.germs_to_json([serialize.GermEntry(name, parse_germ(expr, variables), note)]))
    return dict(sorted(out.items()))


def corpus_path(name: str) -> Path:
    return CORPUS_DIR / name


def corpus_files() -> list:
    return sorted(p for p in CORPUS_DIR.iterdir() if p.suffix in (".lkm", ".nsr", ".germ"))


def write_corpus(directory: Path = CORPUS_DIR) -> None:
    for name, text in build_corpus().items():
        (directory / name).write_text(text, encoding="utf-8")
