import itertools
import math
import random

import pytest

from autkit import BSGS, CapacityError, Permutation, closure, orbit, schreier_sims
from autkit.verify import induced_action, s5_generators

P = Permutation


def compose_oracle(p, q):
    # left-to-right pointwise definition, independent of __mul__
    return P(q(p(x)) for x in range(p.degree))


def random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return P(images)


# ---------------------------------------------------------------- basics


def test_identity_images():
    assert P.identity(3).images == (0, 1, 2)
    assert P.identity(1).images == (0,)


def test_identity_degree_zero_rejected():
    with pytest.raises(ValueError):
        P.identity(0)
    with pytest.raises(ValueError):
        P(())


def test_non_bijection_rejected():
    with pytest.raises(ValueError):
        P((0, 0, 1))
    with pytest.raises(ValueError):
        P((1, 2, 3))


def test_compose_with_identity():
    rng = random.Random(1)
    for _ in range(20):
        p = random_perm(rng, 5)
        assert P.identity(5) * p == p
        assert p * P.identity(5) == p


def test_compose_left_to_right():
    # (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
    p = P.from_cycles(3, [[1, 2]])
    q = P.from_cycles(3, [[2, 3]])
    r = p * q
    assert r == compose_oracle(p, q)
    assert r.images == (2, 0, 1)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        P.identity(3) * P.identity(4)


def test_inverse_examples():
    assert P.identity(5).inverse() == P.identity(5)
    # solve r[p[x]] = x pointwise for p = [1, 2, 0]
    assert P((1, 2, 0)).inverse() == P((2, 0, 1))


def test_inverse_law_random():
    rng = random.Random(2)
    for _ in range(100):
        p = random_perm(rng, rng.randint(1, 12))
        ident = P.identity(p.degree)
        assert p * p.inverse() == ident
        assert p.inverse() * p == ident


def test_group_axioms_random_triples():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 12)
        a, b, c = (random_perm(rng, n) for _ in range(3))
        assert (a * b) * c == a * (b * c)


# ---------------------------------------------------------------- cycles


def test_from_cycles_examples():
    assert P.from_cycles(5, [[1, 2]]).images == (1, 0, 2, 3, 4)
    assert P.from_cycles(5, [[1, 2, 3, 4, 5]]).images == (1, 2, 3, 4, 0)
    assert P.from_cycles(5, []) == P.identity(5)


def test_from_cycles_rejects_bad_points():
    with pytest.raises(ValueError):
        P.from_cycles(5, [[1, 6]])
    with pytest.raises(ValueError):
        P.from_cycles(5, [[0, 1]])
    with pytest.raises(ValueError):
        P.from_cycles(5, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        P.from_cycles(5, [[1, 2, 1]])


def test_cycle_string_format():
    assert P.identity(4).cycle_string() == "()"
    assert P.from_cycles(5, [[1, 2, 3], [4, 5]]).cycle_string() == "(1 2 3)(4 5)"
    # cycles start at their smallest point and are ordered by it
    assert P.from_cycles(5, [[5, 4], [3, 2, 1]]).cycle_string() == "(1 3 2)(4 5)"


def test_cycle_string_round_trip():
    rng = random.Random(4)
    for _ in range(200):
        p = random_perm(rng, rng.randint(1, 12))
        assert P.from_cycle_string(p.degree, p.cycle_string()) == p


def test_parse_cycle_string_errors():
    with pytest.raises(ValueError):
        P.from_cycle_string(5, "")
    with pytest.raises(ValueError):
        P.from_cycle_string(5, "(1 2")
    with pytest.raises(ValueError):
        P.from_cycle_string(5, "(1 2) junk")
    with pytest.raises(ValueError):
        P.from_cycle_string(3, "(1 4)")


# ---------------------------------------------------------------- orbits


def test_orbit_trivial_group():
    pts, trans = orbit([P.identity(5)], 2)
    assert pts == {2}
    assert trans[2] == P.identity(5)


def test_orbit_transitive_cycle():
    pts, _ = orbit([P.from_cycles(5, [[1, 2, 3, 4, 5]])], 0)
    assert pts == {0, 1, 2, 3, 4}


def test_orbit_of_induced_action_is_all_vertices():
    gens = [induced_action(g) for g in s5_generators()]
    pts, trans = orbit(gens, 0)
    assert pts == set(range(10))
    for x, word in trans.items():
        assert word(0) == x


def test_orbit_transversal_correctness_random():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 10)
        gens = [random_perm(rng, n) for _ in range(rng.randint(1, 3))]
        point = rng.randrange(n)
        pts, trans = orbit(gens, point)
        assert set(trans) == pts
        for x in pts:
            assert trans[x](point) == x


def test_orbit_point_out_of_range():
    with pytest.raises(ValueError):
        orbit([P.identity(4)], 4)


# ------------------------------------------------------- schreier-sims

BATTERY = {
    "S3": (3, [[[1, 2]], [[1, 2, 3]]], 6),
    "A4": (4, [[[1, 2, 3]], [[2, 3, 4]]], 12),
    "S4": (4, [[[1, 2]], [[1, 2, 3, 4]]], 24),
    "D5": (5, [[[1, 2, 3, 4, 5]], [[2, 5], [3, 4]]], 10),
    "C5": (5, [[[1, 2, 3, 4, 5]]], 5),
    "S5": (5, [[[1, 2]], [[1, 2, 3, 4, 5]]], 120),
}


def battery_generators(name):
    n, cycle_sets, _ = BATTERY[name]
    return n, [P.from_cycles(n, cycles) for cycles in cycle_sets]


@pytest.mark.parametrize("name", sorted(BATTERY))
def test_bsgs_order_matches_closure(name):
    n, gens = battery_generators(name)
    expected = BATTERY[name][2]
    elements = closure(gens, 200)
    assert len(elements) == expected
    assert schreier_sims(gens).order() == expected


@pytest.mark.parametrize("name", sorted(BATTERY))
def test_membership_agrees_with_closure(name):
    n, gens = battery_generators(name)
    group = schreier_sims(gens)
    members = set(closure(gens, 200))
    for p in members:
        assert group.contains(p)
    non_members = [P(im) for im in itertools.permutations(range(n)) if P(im) not in members]
    for p in non_members[:100]:
        assert not group.contains(p)


def test_schreier_sims_single_cycle():
    assert schreier_sims([P.from_cycles(5, [[1, 2, 3, 4, 5]])]).order() == 5


def test_schreier_sims_trivial_group():
    group = schreier_sims([P.identity(4)])
    assert group.order() == 1
    assert group.contains(P.identity(4))
    assert not group.contains(P.from_cycles(4, [[1, 2]]))


def test_schreier_sims_empty_generators_rejected():
    with pytest.raises(ValueError):
        schreier_sims([])


def test_bsgs_structure_invariants():
    _, gens = battery_generators("S5")
    group = schreier_sims(gens)
    # every strong generator moves some base point
    for s in group.strong_generators:
        assert any(s(b) != b for b in group.base)
    # transversal at level i maps base[i] to each orbit point
    for b, trans in zip(group.base, group.transversals):
        for x, rep in trans.items():
            assert rep(b) == x
    assert group.order() == math.prod(len(t) for t in group.transversals)


def test_contains_identity_always():
    for name in BATTERY:
        n, gens = battery_generators(name)
        assert schreier_sims(gens).contains(P.identity(n))


def test_contains_rejects_known_non_member():
    group = schreier_sims([P.from_cycles(5, [[1, 2, 3, 4, 5]])])
    assert not group.contains(P.from_cycles(5, [[1, 2]]))


def test_contains_degree_mismatch():
    group = schreier_sims([P.from_cycles(5, [[1, 2]])])
    with pytest.raises(ValueError):
        group.contains(P.identity(4))


# ------------------------------------------------------------- closure


def test_closure_transposition():
    elements = closure([P.from_cycles(5, [[1, 2]])], 10)
    assert len(elements) == 2


def test_closure_is_deterministic_bfs_then_lex():
    elements = closure([P.from_cycles(3, [[1, 2, 3]])], 10)
    assert [p.images for p in elements] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    again = closure([P.from_cycles(3, [[1, 2, 3]])], 10)
    assert elements == again


def test_closure_cap_exceeded():
    _, gens = battery_generators("S5")
    with pytest.raises(CapacityError):
        closure(gens, 100)


def test_closure_cap_exact_is_fine():
    _, gens = battery_generators("S5")
    assert len(closure(gens, 120)) == 120


def test_closure_empty_generators_rejected():
    with pytest.raises(ValueError):
        closure([], 10)


def test_closure_of_induced_action_generators():
    gens = [induced_action(g) for g in s5_generators()]
    assert len(closure(gens, 1000)) == 120
