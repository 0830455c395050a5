"""JSON file formats: linking matrices (.lkm), invariant records (.nsr), germ lists (.germ).

Integers beyond 2^53 in magnitude are written as decimal strings so that
consumers parsing JSON numbers as doubles lose nothing; loaders accept
either form.  Output is deterministic (fixed key order, two-space indent).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from nspairs.errors import StructureError
from nspairs.germs.degree import DegreeResult
from nspairs.germs.polynomial import PolynomialGerm, parse_germ, to_text
from nspairs.linalg import IntMatrix, SmithNormalForm
from nspairs.linking import ClassificationReport, LinkingMatrix
from nspairs.records import FiberDescriptor, NSInvariantRecord

SAFE_INT = 2 ** 53
MATRIX_FORMAT = "nspairs-linking-matrix"
RECORD_FORMAT = "nspairs-record"
GERM_FORMAT = "nspairs-germs"
REPORT_FORMAT = "nspairs-classification"
DEGREE_FORMAT = "nspairs-degree"


def enc_int(v):
    if v is None or isinstance(v, bool):
        return v
    return str(v) if abs(v) > SAFE_INT else v


def dec_int(v, where: str, allow_none: bool = False):
    if v is None and allow_none:
        return None
    if isinstance(v, bool):
        raise StructureError(f"{where}: expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            pass
    raise StructureError(f"{where}: expected an integer, got {v!r}")


def _opt_bool(v, where: str):
    if v is None or isinstance(v, bool):
        return v
    raise StructureError(f"{where}: expected true, false or null, got {v!r}")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, source: str = "<input>") -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise StructureError(f"{source}: top level must be a JSON object")
    return data


def _check_format(data: dict, expected: str, source: str):
    fmt = data.get("format", expected)
    if fmt != expected:
        raise StructureError(f"{source}: format is {fmt!r}, expected {expected!r}")


def _field(data: dict, key: str, source: str):
    if key not in data:
        raise StructureError(f"{source}: missing field {key!r}")
    return data[key]


# linking matrices

@dataclass(frozen=True)
class MatrixFile:
    matrix: LinkingMatrix
    s0_linking: int = 1

    def to_json(self) -> dict:
        L = self.matrix
        out = {"format": MATRIX_FORMAT, "symmetry_sign": L.symmetry_sign, "size": L.k,
               "entries": [[enc_int(v) for v in row] for row in L.a.to_rows()]}
        if self.s0_linking != 1:
            out["s0_linking"] = self.s0_linking
        return out

    @classmethod
    def from_json(cls, data: dict, source: str = "<matrix>") -> MatrixFile:
        _check_format(data, MATRIX_FORMAT, source)
        sign = dec_int(_field(data, "symmetry_sign", source), f"{source}: symmetry_sign")
        size = dec_int(_field(data, "size", source), f"{source}: size")
        entries = _field(data, "entries", source)
        if size < 0:
            raise StructureError(f"{source}: size must be non-negative")
        if not isinstance(entries, list) or len(entries) != size:
            raise StructureError(f"{source}: entries must be a list of {size} rows")
        rows = []
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != size:
                raise StructureError(f"{source}: entries[{i}] must have {size} values")
            rows.append([dec_int(v, f"{source}: entries[{i}][{j}]") for j, v in enumerate(row)])
        s0 = dec_int(data.get("s0_linking", 1), f"{source}: s0_linking")
        if s0 != 1:
            # every S_i must link S_0 exactly once for the fiber to be S^n_(k+1)
            raise StructureError(
                f"{source}: s0_linking = {s0} is unsupported; each dual sphere must link S_0 once")
        try:
            L = LinkingMatrix(size, sign, IntMatrix.from_rows(rows, size))
        except StructureError as exc:
            raise StructureError(f"{source}: {exc}") from None
        return cls(L, s0)


def load_matrix(path) -> LinkingMatrix:
    path = Path(path)
    return MatrixFile.from_json(loads(path.read_text(encoding="utf-8"), str(path)), str(path)).matrix


def dump_matrix(L: LinkingMatrix) -> str:
    return dumps(MatrixFile(L).to_json())


# records

def fiber_to_json(f: FiberDescriptor) -> dict:
    return {
        "dim": f.dim,
        "betti": [enc_int(b) for b in f.betti],
        "boundary_components": enc_int(f.boundary_components),
        "bouquet": None if f.bouquet is None else [[d, enc_int(m)] for d, m in f.bouquet],
        "torsion_free_middle": f.torsion_free_middle,
        "simply_connected": f.simply_connected,
        "pi1_free": f.pi1_free,
        "model": None if f.model is None else list(f.model),
    }


def fiber_from_json(data: Any, where: str) -> FiberDescriptor:
    if not isinstance(data, dict):
        raise StructureError(f"{where}: fiber must be an object")
    betti = _field(data, "betti", where)
    if not isinstance(betti, list):
        raise StructureError(f"{where}: betti must be a list")
    bouquet = data.get("bouquet")
    if bouquet is not None:
        if not isinstance(bouquet, list) or any(not isinstance(x, list) or len(x) != 2 for x in bouquet):
            raise StructureError(f"{where}: bouquet must be a list of [dim, multiplicity] pairs")
        bouquet = tuple((dec_int(d, f"{where}: bouquet dim"),
                         dec_int(m, f"{where}: bouquet multiplicity", True)) for d, m in bouquet)
    model = data.get("model")
    if model is not None:
        if not isinstance(model, list) or len(model) != 2:
            raise StructureError(f"{where}: model must be [n, holes]")
        model = tuple(dec_int(v, f"{where}: model") for v in model)
    return FiberDescriptor(
        dim=dec_int(_field(data, "dim", where), f"{where}: dim"),
        betti=tuple(dec_int(b, f"{where}: betti[{i}]", True) for i, b in enumerate(betti)),
        boundary_components=dec_int(data.get("boundary_components"), f"{where}: boundary_components", True),
        bouquet=bouquet,
        torsion_free_middle=_opt_bool(data.get("torsion_free_middle"), f"{where}: torsion_free_middle"),
        simply_connected=_opt_bool(data.get("simply_connected"), f"{where}: simply_connected"),
        pi1_free=_opt_bool(data.get("pi1_free"), f"{where}: pi1_free"),
        model=model,
    )


def record_to_json(rec: NSInvariantRecord) -> dict:
    return {
        "format": RECORD_FORMAT,
        "kind": rec.kind,
        "source_dim": rec.source_dim,
        "target_dim": rec.target_dim,
        "link_components": enc_int(rec.link_components),
        "fiber": fiber_to_json(rec.fiber),
        "degree": enc_int(rec.degree),
        "trivial": rec.trivial,
        "provenance": list(rec.provenance),
    }


def record_from_json(data: dict, source: str = "<record>") -> NSInvariantRecord:
    _check_format(data, RECORD_FORMAT, source)
    prov = data.get("provenance", [])
    if not isinstance(prov, list) or any(not isinstance(s, str) for s in prov):
        raise StructureError(f"{source}: provenance must be a list of strings")
    return NSInvariantRecord(
        kind=_field(data, "kind", source),
        source_dim=dec_int(_field(data, "source_dim", source), f"{source}: source_dim"),
        target_dim=dec_int(_field(data, "target_dim", source), f"{source}: target_dim"),
        link_components=dec_int(data.get("link_components"), f"{source}: link_components", True),
        fiber=fiber_from_json(_field(data, "fiber", source), f"{source}: fiber"),
        degree=dec_int(data.get("degree"), f"{source}: degree", True),
        trivial=_opt_bool(data.get("trivial"), f"{source}: trivial"),
        provenance=tuple(prov),
    )


def load_record(path) -> NSInvariantRecord:
    path = Path(path)
    return record_from_json(loads(path.read_text(encoding="utf-8"), str(path)), str(path))


def dump_record(rec: NSInvariantRecord) -> str:
    return dumps(record_to_json(rec))


# germ lists

@dataclass(frozen=True)
class GermEntry:
    name: str
    germ: PolynomialGerm
    note: str = ""


def germs_to_json(entries) -> dict:
    entries = list(entries)
    return {
        "format": GERM_FORMAT,
        "germs": [{"name": e.name, "variables": list(e.germ.variables),
                   "expression": to_text(e.germ), "note": e.note} for e in entries],
    }


def germs_from_json(data: dict, source: str = "<germs>") -> list:
    _check_format(data, GERM_FORMAT, source)
    out = []
    for i, item in enumerate(_field(data, "germs", source)):
        where = f"{source}: germs[{i}]"
        if not isinstance(item, dict):
            raise StructureError(f"{where}: must be an object")
        variables = _field(item, "variables", where)
        expr = _field(item, "expression", where)
        out.append(GermEntry(str(_field(item, "name", where)), parse_germ(expr, variables),
                             str(item.get("note", ""))))
    return out


def load_germs(path) -> list:
    path = Path(path)
    return germs_from_json(loads(path.read_text(encoding="utf-8"), str(path)), str(path))


# command reports

def snf_to_json(s: SmithNormalForm) -> dict:
    return {"invariant_factors": [enc_int(d) for d in s.invariant_factors], "rank": s.rank,
            "rows": s.rows, "cols": s.cols}


def snf_from_json(data: dict, where: str) -> SmithNormalForm:
    return SmithNormalForm(
        tuple(dec_int(d, f"{where}: invariant_factors") for d in _field(data, "invariant_factors", where)),
        dec_int(_field(data, "rank", where), where), dec_int(_field(data, "rows", where), where),
        dec_int(_field(data, "cols", where), where))


def report_to_json(r: ClassificationReport) -> dict:
    return {
        "format": REPORT_FORMAT,
        "k": r.k, "symmetry_sign": r.symmetry_sign, "n": r.n,
        "det_A": enc_int(r.det_A), "pfaffian_A": enc_int(r.pfaffian_A), "det_R": enc_int(r.det_R),
        "homology": snf_to_json(r.homology),
        "homology_label": r.homology_label() if r.det_R is not None else "coker A",
        "cokernel": r.homology.cokernel_str(),
        "is_ns_pair": r.is_ns_pair, "reason": r.reason,
        "link_components": r.link_components,
        "fiber": fiber_to_json(r.fiber),
    }


def report_from_json(data: dict, source: str = "<report>") -> ClassificationReport:
    _check_format(data, REPORT_FORMAT, source)
    return ClassificationReport(
        k=dec_int(_field(data, "k", source), "k"), symmetry_sign=dec_int(_field(data, "symmetry_sign", source), "symmetry_sign"),
        n=dec_int(_field(data, "n", source), "n"), det_A=dec_int(_field(data, "det_A", source), "det_A"),
        pfaffian_A=dec_int(data.get("pfaffian_A"), "pfaffian_A", True),
        det_R=dec_int(data.get("det_R"), "det_R", True),
        homology=snf_from_json(_field(data, "homology", source), f"{source}: homology"),
        is_ns_pair=bool(_field(data, "is_ns_pair", source)),
        link_components=dec_int(_field(data, "link_components", source), "link_components"),
        fiber=fiber_from_json(_field(data, "fiber", source), f"{source}: fiber"))


def degree_to_json(r: DegreeResult, germ: PolynomialGerm, oracle: dict | None = None) -> dict:
    out = {"format": DEGREE_FORMAT, "germ": to_text(germ), "variables": list(germ.variables),
           "degree": enc_int(r.degree), "local_algebra_dim": r.local_algebra_dim,
           "method": r.method, "certificate": r.certificate}
    if oracle is not None:
        out["oracle"] = oracle
    return out


def degree_from_json(data: dict, source: str = "<degree>") -> DegreeResult:
    _check_format(data, DEGREE_FORMAT, source)
    return DegreeResult(dec_int(_field(data, "degree", source), "degree"),
                        dec_int(_field(data, "local_algebra_dim", source), "local_algebra_dim"),
                        str(_field(data, "method", source)), str(_field(data, "certificate", source)))
