"""End-to-end acceptance checks; each prints one PASS/FAIL line."""

import random
import subprocess
import sys
import time

from circol import bounds
from circol.colouring import PrecolouredClique, fragment_colour
from circol.cycles import check_cycle, circumference, circumference_subset_dp, longest_cycle
from circol.extremal import build_extremal, check_forced_degree, verify_structural
from circol.graph import write_edge_list
from circol.oracle import min_fragmentation_colours, optimal_colouring
from circol.verify import verify_fragmentation

from corpus import atlas_connected, named_corpus, random_graphs, small_corpus


def _line(report, n, ok, detail):
    report(f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {detail}")


def test_criterion_1_colour_then_verify(cli, report, tmp_path):
    start = time.time()
    corpus = named_corpus()
    failures = []
    for name, G in corpus:
        graph = tmp_path / f"{name}.el"
        col = tmp_path / f"{name}.col"
        write_edge_list(G, graph)
        code, out, _ = cli("colour", "--input", graph, "--output", col)
        k = int(out.split()[0].split("=")[1])
        colours = int(out.split()[1].split("=")[1])
        vcode, vout, _ = cli("verify", "--input", graph, "--colouring", col, "--k", k)
        budget = 2 if k == 2 else bounds.theorem1_bound(k)
        if code or vcode or colours > budget:
            failures.append((name, code, vcode, vout))
    elapsed = time.time() - start
    ok = len(corpus) >= 300 and not failures and elapsed < 300
    _line(report, 1, ok, f"graphs={len(corpus)} failures={len(failures)} seconds={elapsed:.1f}")
    assert ok, failures[:3]


def test_criterion_2_precoloured_clique(report):
    rng = random.Random(2024)
    pool = [(n, G) for n, G in named_corpus() + random_graphs(80, 3, 14, 2) if G.n >= 1]
    cases = kinds = 0
    equal_on_edge = 0
    bad = []
    for name, G in pool:
        k = max(2, circumference(G))
        kind = rng.choice([0, 1, 2]) if G.m else rng.choice([0, 1])
        if kind == 0:
            C = PrecolouredClique()
        elif kind == 1:
            C = PrecolouredClique((rng.randrange(G.n),), (rng.randrange(12),))
        else:
            u, v = rng.choice(G.edges())
            a = rng.randrange(12)
            b = a if rng.random() < 0.5 else rng.randrange(12)
            equal_on_edge += a == b
            C = PrecolouredClique((u, v), (a, b))
        kinds |= 1 << kind
        col, _ = fragment_colour(G, k, C)
        result = verify_fragmentation(G, col, k, C.as_dict())
        cases += 1
        if result.failed("R2") or result.failed("R4"):
            bad.append((name, C, result.to_text()))
    ok = cases >= 100 and kinds == 0b111 and equal_on_edge > 0 and not bad
    _line(report, 2, ok, f"cases={cases} equal_colour_edges={equal_on_edge} violations={len(bad)}")
    assert ok, bad[:3]


def test_criterion_3_oracle_sanity(report):
    start = time.time()
    graphs = atlas_connected() + random_graphs(100, 8, 12, 3)
    bad = []
    for name, G in graphs:
        k = max(2, circumference(G))
        col, _ = fragment_colour(G, k)
        engine = len(set(col))
        best, witness = optimal_colouring(G, k)
        checks = (verify_fragmentation(G, col, k).ok, verify_fragmentation(G, witness, k).ok)
        if best > engine or not all(checks):
            bad.append((name, best, engine, checks))
    elapsed = time.time() - start
    ok = not bad and elapsed < 600
    _line(report, 3, ok, f"graphs={len(graphs)} mismatches={len(bad)} seconds={elapsed:.1f}")
    assert ok, bad[:3]


PAIRS = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]


def test_criterion_4_lower_bound_family(report):
    start = time.time()
    bad = []
    for k, d in PAIRS:
        structure = verify_structural(k, d)
        forced = check_forced_degree(k, d)
        if not (structure.circumference <= 2**k and structure.longest_path_order < 2 ** (k + 1)
                and forced.holds):
            bad.append((k, d, structure, forced))
    g22 = min_fragmentation_colours(build_extremal(2, 2), 2)
    elapsed = time.time() - start
    ok = not bad and g22 >= 3 and elapsed < 120
    _line(report, 4, ok, f"pairs={len(PAIRS)} failures={len(bad)} min_frag_G22={g22} "
                         f"seconds={elapsed:.1f}")
    assert ok, bad


def test_criterion_5_bound_identities(report):
    start = time.time()
    top = 2**20
    table = bounds.h_table(top)
    bad = []
    for k in range(2, top + 1):
        lg = k.bit_length() - 1
        t1 = bounds.theorem1_bound(k)
        if 1 + bounds.ceil_log2(k + 1) != 2 + lg:
            bad.append(("identity", k))
        if lg + 1 > t1:
            bad.append(("sandwich", k))
        if k != 3 and table[k] > t1:
            bad.append(("h", k))
    pinned = {
        "h(3)": (bounds.h(3), 5),
        "theorem1_bound(3)": (bounds.theorem1_bound(3), 4),
        "theorem1_bound(9)": (bounds.theorem1_bound(9), 9),
        "h(25)": (bounds.h(25), 8),
        "td_path(7)": (bounds.td_path(7), 3),
    }
    wrong = {key: got for key, (got, want) in pinned.items() if got != want}
    elapsed = time.time() - start
    ok = not bad and not wrong and elapsed < 10
    _line(report, 5, ok, f"kmax={top} failures={len(bad)} pinned_mismatch={len(wrong)} "
                         f"seconds={elapsed:.1f}")
    assert ok, (bad[:5], wrong)


def test_criterion_6_circumference_cross_check(report):
    start = time.time()
    graphs = small_corpus(12) + atlas_connected() + random_graphs(500, 1, 15, 6)
    bad = []
    for name, G in graphs:
        cyc = longest_cycle(G)
        fast = 2 if cyc is None else len(cyc)
        if cyc is not None:
            try:
                check_cycle(G, cyc)
            except AssertionError as exc:
                bad.append((name, str(exc)))
        if fast != circumference_subset_dp(G):
            bad.append((name, fast))
    elapsed = time.time() - start
    ok = not bad and elapsed < 300
    _line(report, 6, ok, f"graphs={len(graphs)} mismatches={len(bad)} seconds={elapsed:.1f}")
    assert ok, bad[:3]


def _run(*argv):
    done = subprocess.run([sys.executable, "-m", "circol", *map(str, argv)],
                          capture_output=True, check=True)
    return done.stdout + b"\0" + done.stderr


DETERMINISM_RUNS = [
    ("gen", "--family", "cactus", "--params", "40,9", "--seed", 3),
    ("gen", "--family", "treeclosure", "--params", "3,3"),
    ("gen", "--family", "extremal", "--params", "3,2"),
    ("bounds", "--kmax", 300),
]


def test_criterion_7_determinism(report, tmp_path):
    graph = tmp_path / "g.el"
    graph.write_bytes(_run("gen", "--family", "cactus", "--params", "60,17", "--seed", 5)
                      .split(b"\0")[0])
    runs = DETERMINISM_RUNS + [
        ("colour", "--input", graph, "--trace"),
        ("colour", "--input", graph, "--precolour", "0:4"),
        ("extremal", "--k", 2, "--d", 3, "--check", "all"),
    ]
    differing = []
    for argv in runs:
        outputs = {_run(*argv, "--jobs", 1), _run(*argv, "--jobs", 1), _run(*argv, "--jobs", 4)}
        if len(outputs) != 1:
            differing.append(argv)
    ok = not differing
    _line(report, 7, ok, f"commands={len(runs)} differing={len(differing)}")
    assert ok, differing
