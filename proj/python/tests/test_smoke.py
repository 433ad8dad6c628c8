import math

import pytest

import capk


def square(k=2, alpha=0.5):
    return capk.Instance([[0, 0], [1, 0], [1, 1], [0, 1]], [0, 1, 0, 1], k, alpha)


def test_instance_basics():
    inst = square()
    assert len(inst) == 4
    assert inst.k == 2
    assert inst.num_colors == 2
    assert inst.dist(0, 2) == pytest.approx(math.sqrt(2))
    assert inst.color_counts() == [2, 2]


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        capk.Instance([[0, 0], [1]], [0, 1], 1, 0.5)
    with pytest.raises(ValueError):
        capk.Instance([[0, 0]], [0, 1], 1, 0.5)


def test_greedy_and_fair():
    inst = square()
    g = capk.greedy_k_center(inst)
    assert len(g.centers) <= 2
    assert capk.solution_cost(inst, g) <= 2 * 1.0 + 1e-9

    opt = capk.brute_force_capped_opt(inst)
    assert opt == 1.0
    sol = capk.fair_k_center(inst, opt)
    assert sol is not None
    assert capk.solution_cost(inst, sol) <= 3 * opt + 1e-9
    assert capk.max_additive_violation(inst, sol, 0.5) <= 1


def test_fair_infeasible_radius():
    inst = capk.Instance([[0], [10]], [0, 1], 1, 0.5)
    assert capk.fair_k_center(inst, 1.0) is None


def test_half_cap():
    inst = square()
    sol, lam = capk.non_dominant_k_center(inst)
    assert capk.check_capped(inst, sol)
    assert lam >= 0


def test_run_report_is_deterministic():
    inst = capk.synthetic_balanced(colors=5, per_color=12, dims=2, blobs=4, seed=3, k=4, alpha=0.4)
    a = capk.run(inst, "lp", k=4, alpha=0.4, timing=False)
    b = capk.run(inst, "lp", k=4, alpha=0.4, timing=False)
    assert a == b
    assert a["status"] == "ok"
    assert a["delta"] <= 2
    assert a["num_points"] == 60


def test_faster_algorithm():
    inst = capk.synthetic_balanced(colors=4, per_color=10, dims=2, blobs=3, seed=2, k=3, alpha=0.5)
    sol, lam = capk.faster_algorithm(inst, epsilon=0.1, m=2)
    assert capk.solution_cost(inst, sol) <= 3 * lam + 1e-9


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        capk.run(square(), "nope", k=2)
