import random

import pytest

from conftest import P, all_perms
from flockgraph.configurations import (
    FlockMismatchError,
    NodeClass,
    ResourceGuardError,
    atlas,
    build_configuration,
    check_theorem2,
    classify,
    forward_orbit,
    oracle_components,
    preimages_in_flock,
    step,
    telomere_set,
)
from flockgraph.conjugacy import NotConjugateError
from flockgraph.flocks import all_flocks, enumerate_flock, flock_of
from flockgraph.perm import (
    Partition,
    Permutation,
    conjugate,
    cyclic_type,
    identity,
    inverse,
    rank,
)

# Orbit of (125634.) under the 6-cycle stem. PHI2 is easily misquoted as
# (143625.), which is a different node (test_phi2_misprint).
PHI0, PHI1, PHI2 = "(125634.)", "(163254.)", "(143652.)"
PHI4 = "(145236.)"
K1_TELOMERES = ["(125436.)", "(165234.)", "(145632.)", "(143256.)", "(123654.)", "(163452.)"]
K1 = [PHI0, PHI1, PHI2, PHI4] + K1_TELOMERES
K2 = ["(162435.)", "(126453.)", "(156423.)", "(153426.)", "(135462.)", "(132465.)"]


def S(texts):
    return {P(t) for t in texts}


@pytest.fixture(scope="module")
def f1():
    return flock_of(Partition((6,)))


@pytest.fixture(scope="module")
def f1_atlas(f1):
    return atlas(f1)


class TestStep:
    def test_cyclic_stem_steps(self, sigma6):
        assert step(P(PHI0), sigma6) == P(PHI1)
        assert step(P(PHI1), sigma6) == P(PHI2)
        assert step(P(PHI2), sigma6) == P(PHI1)

    def test_phi2_misprint(self, sigma6):
        printed = P("(143625.)")
        assert step(P(PHI1), sigma6) != printed
        assert step(printed, sigma6) == P("(124563.)")
        assert preimages_in_flock(printed, sigma6) == [P("(132645.)")]

    def test_stem_is_fixed(self, sigma6):
        assert step(sigma6, sigma6) == sigma6

    def test_preserves_type_s6(self):
        for f in all_flocks(6):
            for phi in enumerate_flock(f):
                assert cyclic_type(step(phi, f.stem)) == f.partition


class TestOrbit:
    def test_cyclic_stem_orbit(self, sigma6):
        trace = forward_orbit(P(PHI0), sigma6)
        assert trace.tail == (P(PHI0),)
        assert trace.cycle == (P(PHI1), P(PHI2))
        assert (trace.tail_length, trace.cycle_length) == (1, 2)

    def test_stem(self, sigma6):
        trace = forward_orbit(sigma6, sigma6)
        assert trace.tail == () and trace.cycle == (sigma6,)

    def test_stem_inverse(self, sigma6):
        trace = forward_orbit(inverse(sigma6), sigma6)
        assert trace.tail == (inverse(sigma6),) and trace.cycle == (sigma6,)

    def test_not_in_flock(self, sigma6):
        with pytest.raises(FlockMismatchError):
            forward_orbit(P("(15.26.3.4.)"), sigma6)

    def test_invariants_random(self):
        rng = random.Random(7)
        for f in all_flocks(7):
            members = list(enumerate_flock(f))
            for phi in rng.sample(members, min(10, len(members))):
                t = forward_orbit(phi, f.stem)
                seq = t.tail + t.cycle
                assert len(set(seq)) == len(seq)
                assert all(step(a, f.stem) == b for a, b in zip(seq, seq[1:]))
                assert step(t.cycle[-1], f.stem) == t.cycle[0]


class TestPreimages:
    def test_phi0(self, sigma6):
        assert set(preimages_in_flock(P(PHI0), sigma6)) == S(["(125436.)", "(165234.)", "(145632.)"])

    def test_phi2(self, sigma6):
        assert preimages_in_flock(P(PHI2), sigma6) == sorted([P(PHI1), P(PHI4)])

    def test_telomere(self, sigma6):
        assert preimages_in_flock(P("(143256.)"), sigma6) == []

    def test_sorted_by_rank(self, sigma6):
        got = preimages_in_flock(P(PHI0), sigma6)
        assert [rank(p) for p in got] == sorted(rank(p) for p in got)

    def test_not_conjugate(self, sigma6):
        with pytest.raises(NotConjugateError):
            preimages_in_flock(P("(12.3456.)"), sigma6)

    def test_brute_force_s5(self):
        for f in all_flocks(5):
            members = list(enumerate_flock(f))
            for psi in members:
                expected = sorted(r for r in members if step(r, f.stem) == psi)
                assert preimages_in_flock(psi, f.stem) == expected


class TestClassify:
    def test_examples(self, sigma6):
        assert classify(P("(143256.)"), sigma6) == NodeClass("telomere", 0)
        assert classify(P(PHI2), sigma6) == NodeClass("branching", 2)
        assert classify(sigma6, sigma6) == NodeClass("branching", 2)
        assert classify(P(PHI0), sigma6) == NodeClass("branching", 3)

    def test_all_three_kinds_and_atlas_agreement(self):
        f = flock_of(Partition((1, 1, 3)))
        kinds = {classify(phi, f.stem).kind for phi in enumerate_flock(f)}
        assert kinds == {"telomere", "simple", "branching"}
        g = atlas(f)
        for r, phi in g.members.items():
            assert classify(phi, f.stem) == g.node_class(r)


class TestBuildConfiguration:
    def test_cyclic_stem_orbit(self, sigma6):
        g = build_configuration(P(PHI0), sigma6)
        assert set(g.nodes) == S(K1)
        assert set(telomere_set(g)) == S(K1_TELOMERES)
        assert len(g.components) == 1
        assert g.components[0].cycle_length == 2

    def test_stem_configuration(self, sigma6):
        g = build_configuration(sigma6, sigma6)
        assert set(g.nodes) == {sigma6, inverse(sigma6)}
        assert telomere_set(g) == [inverse(sigma6)]

    def test_second_cyclic_configuration(self, sigma6):
        g = build_configuration(P("(162435.)"), sigma6)
        assert set(g.nodes) == S(K2)
        assert telomere_set(g) == sorted(S(["(162435.)", "(135462.)", "(132465.)"]))
        succ = {g.members[a]: g.members[b] for a, b in g.successor.items()}
        assert succ[P("(162435.)")] == P("(126453.)")
        assert succ[P("(135462.)")] == P("(156423.)")
        assert succ[P("(132465.)")] == P("(153426.)")

    def test_node_ids_by_rank(self, sigma6):
        g = build_configuration(P(PHI0), sigma6)
        assert list(g.members) == sorted(g.members)
        assert all(rank(phi) == r for r, phi in g.members.items())

    def test_not_in_flock(self, sigma6):
        with pytest.raises(FlockMismatchError):
            build_configuration(identity(6), sigma6)

    def test_equals_oracle_sampled_s6_s7(self):
        rng = random.Random(500)
        for n in (6, 7):
            flocks = all_flocks(n)
            oracle = {f.partition: oracle_components(f) for f in flocks}
            members = {f.partition: list(enumerate_flock(f)) for f in flocks}
            for _ in range(250):
                f = rng.choice(flocks)
                phi = rng.choice(members[f.partition])
                comp = next(c for c in oracle[f.partition] if phi in c)
                assert set(build_configuration(phi, f.stem).nodes) == comp


class TestAtlas:
    def test_f1_sizes(self, f1_atlas):
        assert [c.size for c in f1_atlas.components] == [2, 6, 10, 18, 42, 42]
        assert [c.id for c in f1_atlas.components] == list(range(6))

    def test_named_components(self, f1_atlas, sigma6):
        assert set(f1_atlas.component_of(sigma6).nodes) == {rank(sigma6), rank(inverse(sigma6))}
        assert f1_atlas.component_of(P("(125643.)")).size == 18
        assert f1_atlas.component_of(P("(135624.)")).size == 42
        assert f1_atlas.component_of(P("(136245.)")).size == 42
        assert f1_atlas.component_of(P("(135624.)")) != f1_atlas.component_of(P("(136245.)"))
        assert {f1_atlas.members[r] for r in f1_atlas.component_of(P(PHI0)).nodes} == S(K1)
        assert {f1_atlas.members[r] for r in f1_atlas.component_of(P("(162435.)")).nodes} == S(K2)

    def test_singleton_flock(self):
        for n in (1, 3, 6):
            g = atlas(flock_of(Partition((1,) * n)))
            assert len(g.components) == 1 and len(g) == 1
            assert g.telomeres == []
            assert telomere_set(g) == []

    def test_graph_invariants_s6(self):
        for f in all_flocks(6):
            g = atlas(f)
            assert len(g) == f.size
            assert sum(c.size for c in g.components) == f.size
            indeg = {r: 0 for r in g.members}
            for r, s in g.successor.items():
                assert g.members[s] == step(g.members[r], f.stem)
                indeg[s] += 1
            for r, preds in g.predecessors.items():
                assert len(preds) == indeg[r]
            for c in g.components:
                # exactly one cycle: walking from any node lands in c.cycle
                cyc = set(c.cycle)
                assert len(cyc) == c.cycle_length
                assert all(g.successor[x] in cyc for x in cyc)
                for r in c.nodes:
                    x = r
                    for _ in range(c.size):
                        x = g.successor[x]
                    assert x in cyc
            assert g.successor[rank(f.stem)] == rank(f.stem)

    def test_against_oracle_s5_s6(self):
        for n in (5, 6):
            for f in all_flocks(n):
                g = atlas(f)
                got = [frozenset(g.members[r] for r in c.nodes) for c in g.components]
                assert got == oracle_components(f)

    def test_threads_do_not_change_result(self):
        f = flock_of(Partition((7,)))
        a, b = atlas(f, threads=1), atlas(f, threads=4, chunk_size=97)
        assert a.successor == b.successor and a.components == b.components

    def test_stem_mismatch(self, f1):
        with pytest.raises(FlockMismatchError):
            atlas(f1, P("(12.3456.)"))

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            atlas(flock_of(Partition((13,))))

    def test_subgraph(self, f1_atlas):
        comp = f1_atlas.component_of(P(PHI0))
        sub = f1_atlas.subgraph(comp)
        assert len(sub.components) == 1 and len(sub) == 10
        assert sub.telomeres == list(comp.telomeres)

    def test_stem_invariance(self, f1):
        base = sorted(c.size for c in atlas(f1).components)
        rng = random.Random(10)
        s6 = all_perms(6)
        for _ in range(10):
            alpha = rng.choice(s6)
            g = atlas(f1, conjugate(alpha, f1.stem))
            assert sorted(c.size for c in g.components) == base


class TestOracle:
    def test_singleton(self):
        assert oracle_components(flock_of(Partition((1, 1)))) == [frozenset({identity(2)})]

    def test_guard(self):
        with pytest.raises(ValueError):
            oracle_components(flock_of(Partition((8,))))

    def test_example_2_component(self, f1, sigma6):
        comp = next(c for c in oracle_components(f1) if P(PHI0) in c)
        assert comp == set(build_configuration(P(PHI0), sigma6).nodes)


class TestTelomereClosure:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_all_flocks(self, n):
        for f in all_flocks(n):
            assert check_theorem2(f) == (True, None)

    def test_f1_example(self, f1, f1_atlas, sigma6):
        tel = set(telomere_set(f1_atlas))
        moved = conjugate(sigma6, P("(143256.)"))
        assert moved in tel
        assert check_theorem2(f1, graph=f1_atlas).holds

    def test_counterexample_reported(self, f1, f1_atlas):
        # a graph whose "telomeres" are not closed: drop one from a tampered copy
        from dataclasses import replace

        preds = dict(f1_atlas.predecessors)
        tel = f1_atlas.telomeres
        preds[tel[0]] = (tel[1],)
        tampered = replace(f1_atlas, predecessors=preds)
        holds, bad = check_theorem2(f1, graph=tampered)
        assert not holds and bad is not None

    def test_singleton(self):
        assert check_theorem2(flock_of(Partition((1, 1, 1)))).holds
