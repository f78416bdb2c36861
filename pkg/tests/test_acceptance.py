"""Exit criteria. Each test records one PASS/FAIL line shown in the summary."""

import json
import random
import time
from pathlib import Path


from conftest import ACCEPTANCE_LINES
from dualgraph import (
    DefinitelyNot,
    Embedding,
    SandwichWitness,
    Subgraph,
    WeightedGraph,
    apply_sequence,
    determinant,
    extract_sandwich,
    find_embeddings,
    find_isomorphism,
    induced_modification,
    intersection_matrix,
    io,
    is_negative_definite,
    is_regular,
    is_sandwiched,
    named,
    plant_witness,
    total_transform,
    verify_witness,
)
from dualgraph.cli import main
from dualgraph.corpus import (
    random_connected_subset,
    random_graph,
    random_negative_definite,
    random_regular,
    random_sequence,
    sandwiched_corpus,
)
from dualgraph.modification import apply_step
from oracles import brute_embeddings, eigen_negative_definite

GOLDEN = Path(__file__).parent / "golden"


def record(number, title, passed, total, extra=""):
    status = "PASS" if passed == total else "FAIL"
    line = f"[{status}] {number}. {title}: {passed}/{total}"
    if extra:
        line += f" ({extra})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed == total


def test_1_sandwiched_self_similar_round_trip():
    start = time.perf_counter()
    passed = total = 0
    for g, _ in sandwiched_corpus(seed=1, count=200, max_depth=8, max_size=10):
        total += 1
        sand = is_sandwiched(g, 16)
        if not isinstance(sand, SandwichWitness):
            continue
        w = plant_witness(g, sand)
        if verify_witness(w) is not None:
            continue
        x = extract_sandwich(w)
        if is_regular(x.regular) is None or x.embedding.check() is not None:
            continue
        if not find_embeddings(g, x.regular, 1):
            continue
        passed += 1
    seconds = time.perf_counter() - start
    ok = record(1, "sandwiched <-> self-similar round trip", passed, total, f"{seconds:.1f}s")
    assert ok and total == 200
    assert seconds <= 60


def test_2_pruned_modifications_are_unions_of_regular_graphs():
    rng = random.Random(2)
    passed = total = 0
    for _ in range(500):
        base = random_graph(rng, max_vertices=8, max_weight=5, max_genus=2)
        seq = random_sequence(base, rng.randint(1, 10), rng)
        result, maps = apply_sequence(seq)
        pruned = result.remove(maps.strict.values())
        total += 1
        if all(is_regular(pruned.subgraph(c)) is not None for c in pruned.components()):
            passed += 1
    assert record(2, "pruned strict transforms leave regular components", passed, total)


def _compatible_case(rng):
    gamma = random_graph(rng, max_vertices=8, connected=True, edge_prob=0.2)
    keep = random_connected_subset(gamma, rng, 6)
    shift = rng.randint(0, 30)
    delta = WeightedGraph(
        {v + shift: gamma.label(v) for v in keep},
        [(u + shift, w + shift) for u, w in gamma.subgraph(keep).edges],
    )
    emb = Embedding(delta, gamma, {v + shift: v for v in keep})
    return random_sequence(delta, rng.randint(0, 10), rng), emb


def test_3_compatible_pair_identities():
    rng = random.Random(3)
    passed = total = 0
    for _ in range(200):
        dseq, emb = _compatible_case(rng)
        gseq, emb2 = induced_modification(dseq, emb)
        _, dmaps = apply_sequence(dseq)
        _, gmaps = apply_sequence(gseq)
        delta = dseq.base
        subs = [Subgraph.whole(delta)] + [
            Subgraph.induced(delta, random_connected_subset(delta, rng)) for _ in range(3)
        ]
        first = all(
            total_transform(dseq, s).image(emb2.mapping)
            == total_transform(gseq, s.image(emb.mapping))
            for s in subs
        )
        second = all(emb2(dmaps.strict[v]) == gmaps.strict[emb(v)] for v in delta)
        total += 1
        passed += first and second and emb2.check() is None
    assert record(3, "total transform commutation and strict transform identity", passed, total)


def test_4_matrix_invariants():
    rng = random.Random(4)
    passed = total = 0
    for _ in range(300):
        g, _ = random_regular(rng)
        m = intersection_matrix(g)
        total += 1
        passed += is_negative_definite(m) and abs(determinant(m)) == 1
    applied = 0
    while applied < 1000:
        g = random_negative_definite(rng, 7)
        d = abs(determinant(intersection_matrix(g)))
        for step in random_sequence(g, 5, rng).steps:
            h = apply_step(g, step)
            m = intersection_matrix(h)
            total += 1
            applied += 1
            passed += is_negative_definite(m) and abs(determinant(m)) == d
            g = h
    assert record(4, "regular matrices unimodular and definite; invariant under blowups", passed, total)


def test_5_oracle_equivalence():
    rng = random.Random(5)
    pool = []
    for g, regular in sandwiched_corpus(seed=55, count=400):
        for h in (g, regular):
            if len(h) <= 7:
                pool.append(h)
    passed = total = 0
    for _ in range(600):
        small = pool[rng.randrange(len(pool))]
        big = pool[rng.randrange(len(pool))]
        expected = brute_embeddings(small, big)
        got = [e.mapping for e in find_embeddings(small, big, 10**6)]
        iso = find_isomorphism(small, big)
        iso_expected = [m for m in expected if len(small) == len(big) and len(small.edges) == len(big.edges)]
        total += 1
        passed += got == expected and (iso.mapping if iso else None) == (
            iso_expected[0] if iso_expected else None
        )
    emb_ok = record(5, "embedding/isomorphism search vs brute force", passed, total)

    passed = total = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-8, 8)
        total += 1
        passed += is_negative_definite(m) == eigen_negative_definite(m, 1e-9)
    nd_ok = record(5, "negative definiteness vs eigenvalue oracle", passed, total)
    assert emb_ok and nd_ok


def test_6_obstruction_soundness():
    rng = random.Random(6)
    passed = total = 0
    genus_cases = nd_cases = 0
    while genus_cases < 150 or nd_cases < 150:
        g = random_graph(rng, max_vertices=6, max_weight=4, max_genus=1, connected=True)
        has_genus = any(g.genus(v) for v in g)
        not_nd = not is_negative_definite(intersection_matrix(g))
        if not (has_genus or not_nd):
            continue
        genus_cases += has_genus
        nd_cases += not_nd
        total += 1
        passed += isinstance(is_sandwiched(g, 4), DefinitelyNot)
    for g, _ in sandwiched_corpus(seed=66, count=200):
        total += 1
        passed += not isinstance(is_sandwiched(g, 16), DefinitelyNot)
    assert record(6, "definitely-not exactly on proven obstructions", passed, total)


def test_7_cli_and_format(capsys, monkeypatch, tmp_path):
    import io as _io

    passed = total = 0
    for name in named.golden_names():
        text = (GOLDEN / f"{name}.json").read_text()
        total += 1
        g, doc_name = io.parse_named(text)
        passed += io.serialize(g, doc_name) == text and io.parse(io.serialize(g)) == g

    def cli(argv, stdin):
        monkeypatch.setattr("sys.stdin", _io.StringIO(stdin))
        code = main(argv)
        return code, capsys.readouterr().out

    corpus = [io.serialize(named.named(n)) for n in named.golden_names()]
    corpus += [io.serialize(g) for g, _ in sandwiched_corpus(seed=77, count=40)]
    emitted = 0
    for doc in corpus:
        for cmd in (["is-sandwiched", "--budget", "16", "-"], ["is-self-similar", "--budget", "16", "-"]):
            code, out = cli(cmd, doc)
            if code != 0:
                continue
            emitted += 1
            total += 1
            verified, _ = cli(["verify-witness", "-"], out)
            passed += verified == 0
            if cmd[0] == "is-self-similar":
                total += 1
                extracted, out2 = cli(["extract", "-"], out)
                passed += extracted == 0 and json.loads(out2)["kind"] == "extraction"
    ok = record(7, "canonical round trip and witness re-verification", passed, total, f"{emitted} witnesses")
    assert ok and emitted > 0
