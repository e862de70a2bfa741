"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also collected into the terminal summary.
"""

import io
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES

from pconway.automata import behavior, coefficient_by_paths
from pconway.cli import main
from pconway.groups import standard_groups
from pconway.ratexpr import compile_expr, depth, kleene_round_trip, random_expr, to_text
from pconway.semiring import NAT, NATMAT2
from pconway.series import SeriesSemiring
from pconway.verify import (
    FUNCTORIAL_FAMILIES,
    SUITES,
    CheckReport,
    SeriesGen,
    check_basic_star_laws,
    check_block_invariance,
    check_conway_scalar,
    check_functorial_star,
    check_group_identity,
    check_matrix_conway,
    check_permutation,
    check_transpose_duality,
    check_uniqueness,
)

KLEENE_SEED = 20240601
KLEENE_CASES = 200


def record(n, ok, detail):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def failures_text(reports):
    return "; ".join(str(f) for r in reports for f in r.failures[:2])


def kleene_corpus():
    rng = random.Random(KLEENE_SEED)
    return [random_expr(rng, 5, "xy", NAT, 3) for _ in range(KLEENE_CASES)]


def test_criterion_1_kleene_round_trip():
    start = time.perf_counter()
    corpus = kleene_corpus()
    assert all(depth(e) <= 5 for e in corpus)
    bad = [v for v in (kleene_round_trip(e, NAT, "xy", 6) for e in corpus) if not v.passed]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(1, ok, f"{len(corpus)} expressions, L=6, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad, str(bad[0])
    assert elapsed < 60


def test_criterion_2_group_identities():
    start = time.perf_counter()
    ring = SeriesSemiring(NAT, "xy", 4)
    reports = [check_group_identity(g, SeriesGen(ring, seed=k, max_coeff=3), 30)
               for k, g in enumerate(standard_groups())]
    elapsed = time.perf_counter() - start
    names = ",".join(g.name for g in standard_groups())
    ok = all(r.passed for r in reports) and elapsed < 60
    record(2, ok, f"groups {names}, 30 tuples each, L=4, {elapsed:.1f}s")
    assert all(r.passed for r in reports), failures_text(reports)
    assert elapsed < 60


def test_criterion_3_conway_laws():
    gen = SeriesGen(SeriesSemiring(NAT, "xy", 4), seed=3)
    reports = [check_basic_star_laws(gen, 100), check_conway_scalar(gen, 100),
               check_matrix_conway(gen, dims=(0, 1, 2, 3, 4), cases=100)]
    ok = all(r.passed for r in reports)
    record(3, ok, "100 scalar basic, 100 scalar Conway, 100 matrix cases (n<=4), L=4")
    assert ok, failures_text(reports)


def test_criterion_4_block_and_permutation():
    gen = SeriesGen(SeriesSemiring(NAT, "xy", 4), seed=4)
    reports = [check_block_invariance(gen, 4, 50), check_permutation(gen, 4, 50)]
    ok = all(r.passed for r in reports)
    record(4, ok, "50 block cases x 3 splits, 50 permutation cases, 4x4")
    assert ok, failures_text(reports)


def test_criterion_5_transpose_duality():
    reports = [check_transpose_duality(SeriesGen(SeriesSemiring(NAT, "xy", 4), seed=5), 3, 50),
               check_transpose_duality(SeriesGen(SeriesSemiring(NATMAT2, "xy", 3), seed=5), 3, 50)]
    ok = all(r.passed for r in reports)
    record(5, ok, "50 cases over nat and 50 over natmat2, n<=3")
    assert ok, failures_text(reports)


@pytest.mark.parametrize("family", FUNCTORIAL_FAMILIES)
def test_criterion_6_functorial_star(family):
    gen = SeriesGen(SeriesSemiring(NAT, "xy", 4), seed=6)
    report = check_functorial_star(gen, families=(family,), cases=50)
    record(6, report.passed, f"family {family}: 50 triples")
    assert report.passed, failures_text([report])


def test_criterion_7_uniqueness():
    reports = [check_uniqueness(SeriesGen(SeriesSemiring(NAT, "xy", 4), seed=7), 50),
               check_uniqueness(SeriesGen(SeriesSemiring(NATMAT2, "xy", 4), seed=7), 50)]
    ok = all(r.passed for r in reports)
    record(7, ok, "50 cases over nat, 50 over natmat2 (nilpotent constants), L=4")
    assert ok, failures_text(reports)


def test_criterion_8_path_oracle():
    ring_words = list(SeriesSemiring(NAT, "xy", 6).words())
    mismatches = []
    for e in kleene_corpus():
        aut = compile_expr(e, NAT, "xy")
        beh = behavior(aut, 6)
        for w in ring_words:
            if beh[w] != coefficient_by_paths(aut, w):
                mismatches.append((to_text(e), w))
                break
    ok = not mismatches
    record(8, ok, f"{KLEENE_CASES} automata, {len(ring_words)} words each")
    assert ok, mismatches[:3]


CLI_CORPUS = [
    "0", "1", "3", "x", "y", "x + y", "x.y", "2.x + 3.y", "x^*", "y^+",
    "(x + y)^*", "(x.y)^* . x", "3 + x^+", "(2.x)^* + y", "x^+^*",
    "((x + 2.y)^+ . x)^* + 5", "(x.y + y.x)^+", "2.(x + y)^* . 3", "(x^* . y)^+", "1 + 2 + x.x.y",
]


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_criterion_9_cli_determinism(tmp_path):
    assert len(CLI_CORPUS) == 20
    problems = []
    for k, expr in enumerate(CLI_CORPUS):
        path = tmp_path / f"a{k}.json"
        c1, direct = cli("eval", "-e", expr)
        c2, _ = cli("compile", "-e", expr, "-o", str(path))
        c3, via = cli("behavior", str(path))
        if (c1, c2, c3) != (0, 0, 0) or direct != via:
            problems.append(expr)
        if cli("compile", "-e", expr) != cli("compile", "-e", expr):
            problems.append(f"{expr} (compile not deterministic)")
    codes = {suite: cli("check", "-t", suite, "--seed", "0")[0] for suite in SUITES}
    ok = not problems and all(c == 0 for c in codes.values())
    record(9, ok, f"20 expressions byte-identical, suites {codes}")
    assert not problems, problems
    assert all(c == 0 for c in codes.values()), codes
