"""Acceptance gate: ten criteria, each reported as one pass/fail line.

The per-criterion lines are printed at the end of the session by the
``pytest_terminal_summary`` hook in conftest.py.
"""
import functools
import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from nspairs import serialize
from nspairs.corpus import corpus_files, corpus_path
from nspairs.errors import ContradictionError
from nspairs.germs import Polynomial, elk_degree, gradient, winding_degree
from nspairs.invariants import (bouquet_even, bouquet_odd, compose_projection, euler_from_degree,
                                higher_dim_construct, higher_dim_pair, looijenga_sum)
from nspairs.linalg import determinant, pfaffian
from nspairs.linking import LinkingMatrix, build_R, classify, generate_unimodular_blocks
from nspairs.records import NSInvariantRecord, check_euler
from oracles import cofactor_det, matching_pfaffian, random_skew

RESULTS = {}


def criterion(num, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            ok, detail = False, "raised"
            try:
                detail = fn(*args, **kwargs) or ""
                ok = True
            except BaseException as exc:
                detail = f"{type(exc).__name__}: {exc}".splitlines()[0][:160]
                raise
            finally:
                elapsed = time.perf_counter() - start
                if num in RESULTS:  # parametrized criteria: any failure sticks
                    prev_ok, _, prev_detail, prev_elapsed = RESULTS[num]
                    ok = ok and prev_ok
                    detail = f"{prev_detail}; {detail}"
                    elapsed += prev_elapsed
                RESULTS[num] = (ok, title, detail, elapsed)
        return run
    return wrap


def summary_lines():
    lines = []
    for num in range(1, 11):
        if num not in RESULTS:
            lines.append(f"criterion {num:2d}: NOT RUN")
            continue
        ok, title, detail, elapsed = RESULTS[num]
        status = "PASS" if ok else "FAIL"
        extra = f"; {detail}" if detail else ""
        lines.append(f"criterion {num:2d}: {status}  {title} ({elapsed:.2f} s{extra})")
    return lines


def skew_corpus(seed=1):
    rng = random.Random(seed)
    return [random_skew(rng, rng.randint(0, 8), -9, 9) for _ in range(500)]


def pf_squared(rows):
    """|det A| for skew A through the matching expansion; odd sizes give 0."""
    return matching_pfaffian(rows) ** 2 if len(rows) % 2 == 0 else 0


def unimodular_congruences(seed=2, count=60):
    """P^T J P for random unimodular P; every one is an NS-pair matrix."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        half = rng.randint(1, 3)
        k = 2 * half
        a = generate_unimodular_blocks(half).a.to_rows()
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(k), 2)
            c = rng.choice([-2, -1, 1, 2])
            # simultaneous row and column operation keeps skew symmetry and det
            for col in range(k):
                a[i][col] += c * a[j][col]
            for row in range(k):
                a[row][i] += c * a[row][j]
        out.append(a)
    return out


@criterion(1, "determinant bridge |det R| = |det A|")
def test_c01_determinant_bridge():
    corpus = skew_corpus()
    start = time.perf_counter()
    for rows in corpus:
        L = LinkingMatrix.from_rows(rows, -1)
        d_r = determinant(build_R(L))
        assert abs(d_r) == abs(determinant(L.a))
    elapsed = time.perf_counter() - start
    # independent check of the same identity through the matching expansion
    for rows in corpus:
        assert abs(determinant(build_R(LinkingMatrix.from_rows(rows, -1)))) == pf_squared(rows)
    assert elapsed < 10, f"{elapsed:.2f} s"
    return f"500 matrices in {elapsed:.2f} s"


@criterion(2, "NS-pair iff |det A| = 1 iff SNF(R) all ones")
def test_c02_ns_pair_criterion():
    disagreements = 0
    positives = 0
    cases = skew_corpus() + unimodular_congruences()
    for rows in cases:
        L = LinkingMatrix.from_rows(rows, -1)
        r = classify(L)
        unit_det = pf_squared(rows) == 1
        snf = r.h2_invariant_factors
        unit_snf = len(snf) == 2 * L.k + 2 and all(d == 1 for d in snf)
        if not (r.is_ns_pair == unit_det == unit_snf):
            disagreements += 1
        positives += r.is_ns_pair
    assert disagreements == 0
    assert positives >= 60
    return f"{len(cases)} matrices, {positives} NS-pairs, 0 disagreements"


def all_skew(k, values=(-1, 0, 1)):
    idx = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for vals in itertools.product(values, repeat=len(idx)):
        a = [[0] * k for _ in range(k)]
        for (i, j), v in zip(idx, vals):
            a[i][j] = v
            a[j][i] = -v
        yield a


@criterion(3, "odd k never gives an NS-pair (exhaustive)")
def test_c03_parity():
    start = time.perf_counter()
    count = 0
    for k in (1, 3, 5):
        for rows in all_skew(k):
            count += 1
            assert not classify(LinkingMatrix.from_rows(rows, -1)).is_ns_pair
    elapsed = time.perf_counter() - start
    assert count == 1 + 3 ** 3 + 3 ** 10
    assert elapsed < 30, f"{elapsed:.2f} s"
    return f"{count} matrices in {elapsed:.2f} s"


@criterion(4, "worked pipeline counts")
def test_c04_pipeline_counts():
    pair = classify(generate_unimodular_blocks(1)).pair_record()
    rec = looijenga_sum(pair)
    assert rec.dims == (6, 3)
    assert rec.link_components == 5
    assert rec.fiber.model == (3, 5)
    assert rec.fiber.model_str() == "S³_(5)"
    assert rec.fiber.bouquet_str() == "∨⁴S²"
    assert rec.degree == -4
    assert euler_from_degree(6, -4) == 5
    assert rec.fiber.euler_characteristic() == 5

    L = generate_unimodular_blocks(1)
    assert L.k == 2
    hd_pair = higher_dim_pair(3, L)
    assert hd_pair.link_components == 5
    hd = higher_dim_construct(3, L)
    assert hd.link_components == 9
    assert hd.fiber.bouquet_str() == "∨⁸S²"
    return "5 components, S³_(5) ≃ ∨⁴S², deg -4; k=5, 9 components, ∨⁸S²"


@criterion(5, "Pf(A)^2 = det(A); Pf of block sums is 1")
def test_c05_pfaffian(backend):
    rng = random.Random(5)
    for _ in range(500):
        k = 2 * rng.randint(0, 5)
        rows = random_skew(rng, k, -9, 9)
        pf = pfaffian(rows)
        assert pf * pf == determinant(rows)
        assert pf == matching_pfaffian(rows)
    for half in range(8):
        assert pfaffian(generate_unimodular_blocks(half).a) == 1
    return f"backend {backend}"


REQUIRED_GERMS = {"morse_min", "morse_saddle", "monkey_saddle", "cusp", "quartic_saddle",
                  "re_z2", "re_z3", "re_z4", "re_z5", "re_z6"}


@criterion(6, "ELK degree equals winding number at two radii")
def test_c06_elk_vs_winding():
    entries = serialize.load_germs(corpus_path("planar.germ"))
    assert len(entries) >= 12
    assert REQUIRED_GERMS <= {e.name for e in entries}
    start = time.perf_counter()
    for e in entries:
        d = elk_degree(e.germ).degree
        for radius in (Fraction(1, 10), Fraction(1, 7)):
            assert winding_degree(gradient(e.germ), radius) == d, e.name
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"{elapsed:.2f} s"
    return f"{len(entries)} germs in {elapsed:.2f} s"


@criterion(7, "Morse law on random quadratic forms")
def test_c07_morse():
    rng = random.Random(7)
    done = 0
    while done < 50:
        n = rng.randint(1, 4)
        H = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                H[i][j] = H[j][i] = rng.randint(-5, 5)
        d = cofactor_det(H)
        if d == 0:
            continue
        terms = {}
        for i in range(n):
            for j in range(i, n):
                e = [0] * n
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = Fraction(H[i][j], 2) if i == j else Fraction(H[i][j])
        r = elk_degree(Polynomial(tuple("abcd"[:n]), terms))
        assert r.local_algebra_dim == 1
        assert r.degree == (1 if d > 0 else -1)
        done += 1
    return "50 forms"


@criterion(8, "Euler validators")
def test_c08_euler():
    rejected = 0
    for m in (3, 4, 5, 6):
        for beta in (0, 2):
            fiber = bouquet_odd(m, beta, True)
            for d in (-3, -1, 1, 2):
                with pytest.raises(ContradictionError):
                    NSInvariantRecord("germ", 2 * m + 1, m, 1, fiber, degree=d)
                with pytest.raises(ContradictionError):
                    euler_from_degree(2 * m + 1, d)
                rejected += 1
    checked = 0
    for n in range(2, 8):
        for d in range(-8, 9):
            if (-1) ** n * d < 0:
                continue
            f = bouquet_even(n, d)
            assert f.euler_characteristic() == 1 - d
            check_euler(2 * n, d, f)
            checked += 1
        for beta in range(6 if n >= 3 else 0):
            f = bouquet_odd(n, beta, True)
            assert f.euler_characteristic() == 1
            check_euler(2 * n + 1, 0, f)
            checked += 1
    return f"{rejected} rejections, {checked} bouquets checked"


@criterion(9, "projection to the plane keeps the bouquet")
def test_c09_projection():
    inputs = {
        3: generate_unimodular_blocks(1),
        4: LinkingMatrix.from_rows([[0, 1], [1, 0]], 1),
        5: generate_unimodular_blocks(1),
    }
    for n, L in inputs.items():
        rec = higher_dim_construct(n, L)
        assert rec.dims == (2 * n, n)
        bouquet = rec.fiber.bouquet
        text = rec.fiber.bouquet_str()
        blob = json.dumps(serialize.fiber_to_json(rec.fiber)["bouquet"])
        while rec.target_dim > 2:
            rec = compose_projection(rec)
            assert rec.fiber.bouquet == bouquet
            assert rec.fiber.bouquet_str() == text
            assert json.dumps(serialize.fiber_to_json(rec.fiber)["bouquet"]) == blob
        assert rec.dims == (2 * n, 2)
    return "n = 3, 4, 5"


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "nspairs.cli", *argv], capture_output=True)
    return proc.returncode, proc.stdout


@criterion(10, "CLI determinism and JSON round trip")
def test_c10_cli_and_round_trip():
    commands = []
    for p in corpus_files():
        if p.suffix == ".lkm":
            commands.append(["classify", str(p)])
    for expr in ("x^2 + y^2", "x^3 - 3*x*y^2", "x^4 + x^2*y - y^3"):
        commands.append(["degree", expr, "--vars", "x,y", "--oracle", "winding"])
    runs = 0
    for cmd in commands:
        for emit in ("text", "json"):
            first = _cli("--emit", emit, *cmd)
            second = _cli("--emit", emit, *cmd)
            assert first == second, cmd
            assert first[0] == 0, (cmd, first)
            if emit == "json":
                data = json.loads(first[1])
                if cmd[0] == "classify":
                    back = serialize.report_from_json(data)
                    assert serialize.report_to_json(back) == data
                else:
                    r = serialize.degree_from_json(data)
                    assert r.degree == data["degree"]
            runs += 2

    for p in corpus_files():
        text = p.read_text(encoding="utf-8")
        if p.suffix == ".lkm":
            obj = serialize.MatrixFile.from_json(serialize.loads(text))
            again = serialize.dumps(obj.to_json())
            assert serialize.MatrixFile.from_json(serialize.loads(again)) == obj
        elif p.suffix == ".nsr":
            obj = serialize.load_record(p)
            assert serialize.record_from_json(serialize.loads(serialize.dump_record(obj))) == obj
        else:
            obj = serialize.load_germs(p)
            again = serialize.dumps(serialize.germs_to_json(obj))
            assert serialize.germs_from_json(serialize.loads(again)) == obj
    return f"{runs} CLI runs, {len(corpus_files())} files"
