"""Bethe-Ansatz systems, folding certification, QQ-system, Bethe vectors."""

import random

import pytest
import sympy

from qfold import bae, liealg

z = sympy.Symbol("z")
w, v = sympy.symbols("w v")


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        bae.build_bae("additive", "A2", {1: 1})
    with pytest.raises(ValueError):
        bae.build_bae("gaudin", "A2", {1: 1})
    with pytest.raises(ValueError):
        bae.build_bae("standard", "A2", {5: 1})


def test_standard_a1_known_solution():
    # with Drinfeld polynomial 1 - z the single equation pins w = 1
    sys_ = bae.build_bae("standard", "A1", {1: 1}, drinfeld={1: [1 - z]})
    res = sys_.residuals({(1, 0): 1.0}, {sys_.param: 0.7})
    assert max(abs(r) for r in res) < 1e-12


def test_cross_factor_orthogonal_nodes_trivial():
    sys_ = bae.build_bae("standard", "A3", {1: 1, 2: 1, 3: 1})
    assert sys_._cross_factor(1, 3, w, v) == 1


def test_folded_factor_is_square_of_coincident_pair():
    # folding two cover factors with equal roots squares the base factor
    sys_ = bae.build_bae("folded", "C2", {1: 1, 2: 1})
    q = sys_.param
    f = (w - v * q) / (w - v / q)
    assert sympy.simplify(sys_._cross_factor(2, 1, w, v) - f ** 2) == 0


def test_twisted_factor_splits_over_sign_flip():
    sys_ = bae.build_bae("twisted", "C2", {1: 1, 2: 1})
    q = sys_.param

    def f(x):
        return (x - v * q) / (x - v / q)

    assert sympy.simplify(sys_._cross_factor(2, 1, w, v) - f(w) * f(-w)) == 0


def test_twisted_factor_splits_over_cube_roots():
    # the cubed-parameter factor is the product of the base factor over
    # the three cube roots of unity: check numerator and denominator as
    # expanded polynomial identities
    sys_ = bae.build_bae("twisted", "G2", {1: 1, 2: 1})
    q = sys_.param
    eps = sympy.Rational(-1, 2) + sympy.sqrt(3) * sympy.I / 2

    def lin_prod(a):
        return sympy.expand((w - a) * (w * eps - a)
                            * (w * eps.conjugate() - a))

    assert lin_prod(v * q) == sympy.expand(w ** 3 - (v * q) ** 3)
    ratio = lin_prod(v * q) / lin_prod(v / q)
    assert sympy.cancel(sys_._cross_factor(1, 2, w, v) - ratio) == 0


FOLD_COUNTS = {
    "B2": {1: 1, 2: 1, 3: 1},
    "B3": {1: 1, 2: 1, 3: 2, 4: 2},
    "C2": {1: 2, 2: 1, 3: 2},
    "C3": {1: 1, 2: 2, 3: 1, 4: 2, 5: 1},
    "G2": {1: 1, 2: 1, 3: 1, 4: 1},
}


@pytest.mark.parametrize("gname", sorted(FOLD_COUNTS))
def test_fold_certifies_standard_system(gname):
    fold = liealg.folding_data(liealg.build_algebra(gname))
    sys_ = bae.build_bae("standard", fold.gprime, FOLD_COUNTS[gname])
    target, certified = bae.fold_bae(sys_, fold)
    assert certified
    assert target.kind == "folded" and target.g.name == gname


def test_fold_keeps_drinfeld_data():
    fold = liealg.folding_data(liealg.build_algebra("C2"))
    drin = {1: [1 - z], 3: [1 - z], 2: [1 - 2 * z]}
    sys_ = bae.build_bae("standard", fold.gprime, {1: 1, 2: 1, 3: 1},
                         drinfeld=drin)
    target, certified = bae.fold_bae(sys_, fold)
    assert certified
    assert target.drinfeld[1] == [1 - z]


def test_fold_rejects_asymmetric_counts():
    fold = liealg.folding_data(liealg.build_algebra("C2"))
    sys_ = bae.build_bae("standard", fold.gprime, {1: 2, 2: 1, 3: 1})
    with pytest.raises(ValueError):
        bae.fold_bae(sys_, fold)


def test_fold_certifies_gaudin_system():
    fold = liealg.folding_data(liealg.build_algebra("B2"))
    data = {"points": [0, 1],
            "pairings": {1: [1, 2], 2: [1, 1], 3: [1, 1]},
            "twist": {1: "1/3", 2: "1/2", 3: "1/2"}}
    sys_ = bae.build_bae("gaudin", fold.gprime, {1: 1, 2: 1, 3: 1},
                         gaudin=data)
    target, certified = bae.fold_bae(sys_, fold)
    assert certified
    assert target.g.name == "B2" and target.kind == "gaudin"


def test_solve_gaudin_random_instances():
    rng = random.Random(17)
    instances = checked = 0
    while instances < 20:
        gname = rng.choice(["A1", "A1", "A2"])
        g = liealg.build_algebra(gname)
        points = rng.sample(range(-6, 7), rng.randint(1, 2))
        counts = {i: rng.randint(1, 2) for i in g.nodes}
        data = {"points": points,
                "pairings": {i: [rng.randint(1, 3) for _ in points]
                             for i in g.nodes},
                "twist": {i: rng.choice([1, 2, sympy.Rational(1, 2),
                                         sympy.Rational(3, 2)])
                          for i in g.nodes}}
        sys_ = bae.build_bae("gaudin", g, counts, gaudin=data)
        sols = bae.solve_gaudin(sys_, seeds=15,
                                rng=random.Random(instances))
        instances += 1
        for sol in sols:
            res = sys_.residuals(sol)
            assert max(abs(r) for r in res) < 1e-8
            checked += 1
    assert checked >= 20


def test_qq_pipeline_a1():
    q = sympy.Integer(3)
    Q = {1: z - 1}
    u = bae.qq_twist("A1", Q, q)
    assert u[1] == sympy.Rational(1, 3)
    Qt = bae.qq_solve_tilde("A1", Q, u, q, {1: 1})
    ok, witness = bae.qq_check("A1", Q, Qt, u, q, samples=(2, 7))
    assert ok and witness is None


def test_qq_pipeline_c2():
    q = sympy.Integer(3)
    Q = {1: z - 1, 2: z - 5}
    u = bae.qq_twist("C2", Q, q)
    Qt = bae.qq_solve_tilde("C2", Q, u, q, {1: 0, 2: 1})
    ok, witness = bae.qq_check("C2", Q, Qt, u, q)
    assert ok and witness is None


def test_qq_check_flags_wrong_tilde():
    q = sympy.Integer(3)
    Q = {1: z - 1}
    u = bae.qq_twist("A1", Q, q)
    Qt = bae.qq_solve_tilde("A1", Q, u, q, {1: 1})
    ok, witness = bae.qq_check("A1", Q, {1: Qt[1] + 1}, u, q)
    assert not ok and witness[0] == 1


def test_qq_twist_inconsistent_roots():
    # two generic roots cannot share a twist unless they solve the
    # Bethe equation
    with pytest.raises(bae.Infeasible):
        bae.qq_twist("A1", {1: (z - 1) * (z - 2)}, sympy.Integer(3))


def test_bethe_vector_small():
    w1 = sympy.Symbol("w1")
    assert bae.bethe_vector((1,), [w1]) == {(1,): 1 / w1}
    w2 = sympy.Symbol("w2")
    vec = bae.bethe_vector((1, 1), [w1, w2])
    assert set(vec) == {(1, 1)}
    # the symmetric sum has no pole at w1 = w2
    assert sympy.cancel(vec[(1, 1)]).subs(w2, w1) == 1 / w1 ** 2


def test_fold_limit_paired_roots_are_regular():
    fold = liealg.folding_data(liealg.build_algebra("C2"))
    out = bae.bethe_fold_limit(fold, (1, 3), [sympy.Integer(2), 0], [(0, 1)])
    assert out == {(1, 3): sympy.Rational(1, 4)}


def test_fold_limit_same_label_is_regular():
    fold = liealg.folding_data(liealg.build_algebra("C2"))
    out = bae.bethe_fold_limit(fold, (1, 1), [sympy.Integer(2), 0], [(0, 1)])
    assert out == {(1, 1): sympy.Rational(1, 4)}


def test_fold_limit_non_commuting_pair_has_pole():
    fold = liealg.folding_data(liealg.build_algebra("C2"))
    with pytest.raises(bae.PoleDetected):
        bae.bethe_fold_limit(fold, (1, 2), [sympy.Integer(2), 0], [(0, 1)])


def _paired_config(fold, rng, npairs):
    """Random labels/base/pairs where each coincidence is a sigma pair."""
    orbits = [o for o in fold.orbits if len(o) == 2]
    labels, base, pairs = [], [], []
    values = rng.sample(range(1, 60), npairs)
    for k in range(npairs):
        a, b = rng.choice(orbits)
        if rng.random() < 0.5:
            a, b = b, a
        labels += [a, b]
        base += [sympy.Integer(values[k]), sympy.Integer(0)]
        pairs.append((2 * k, 2 * k + 1))
    return tuple(labels), base, pairs


def test_fold_limit_randomized_paired_configs():
    rng = random.Random(26)
    for fold_name in ("B2", "C2"):
        fold = liealg.folding_data(liealg.build_algebra(fold_name))
        for trial in range(20):
            npairs = 1 if trial < 12 else 2
            labels, base, pairs = _paired_config(fold, rng, npairs)
            out = bae.bethe_fold_limit(fold, labels, base, pairs)
            assert out, (fold_name, labels)
