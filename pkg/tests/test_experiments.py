import pytest

from netvalue import ConfigError, ExperimentPlan, Metric, run_p_sweep, run_sandwich_check, run_size_sweep
from netvalue.experiments import fit_fp_from_sweep, mean_std, SweepResult, SweepRow
from netvalue.fitting import FP_COEFFS

HOP2 = Metric("hop", 2)


def ws_plan(**kw):
    base = dict(family="ws", sizes=(100,), metric=HOP2, p_grid=(0.18,), k=4,
                repetitions=10, master_seed=3)
    base.update(kw)
    return ExperimentPlan(**base)


def test_mean_std():
    assert mean_std([5.0]) == (5.0, 0.0)
    m, s = mean_std([1.0, 2.0, 3.0, 4.0])
    assert m == 2.5
    assert s == pytest.approx(1.2909944487358056, abs=1e-15)


def test_ws_size_sweep():
    res = run_size_sweep(ws_plan(sizes=tuple(range(40, 101, 10))))
    means = res.column("mean_value")
    assert list(res.column("key")) == list(range(40, 101, 10))
    assert all(b > a for a, b in zip(means, means[1:]))
    ratios = res.column("ratio")
    assert ratios.max() / ratios.min() < 1.6
    for r in res.rows:
        assert r.ratio == pytest.approx(r.mean_value / r.zipf, rel=1e-12)
        assert r.zipf < r.mean_value < r.metcalfe


def test_ba_size_sweep_exact():
    plan = ExperimentPlan("ba", tuple(range(30, 101, 10)), Metric("degree-sum"), m=1,
                          seed_size=3, repetitions=5, master_seed=99)
    res = run_size_sweep(plan)
    assert [(r.key, r.mean_value, r.std_dev) for r in res.rows] == \
        [(n, 2.0 * n, 0.0) for n in range(30, 101, 10)]


def test_reproducible():
    plan = ws_plan(repetitions=1)
    assert run_size_sweep(plan).to_csv() == run_size_sweep(plan).to_csv()
    assert run_size_sweep(plan).rows[0].std_dev == 0.0


def test_p_sweep_lattice_row():
    res = run_p_sweep(ws_plan(p_grid=(0.0, 0.1, 0.2), repetitions=8))
    first = res.rows[0]
    assert first.key == 0.0 and first.ratio == 4.0 and first.std_dev == 0.0
    assert res.rows[1].ratio > 4.0


def test_fit_fp_from_sweep():
    law = lambda p: FP_COEFFS[0] * p * p + FP_COEFFS[1] * p + FP_COEFFS[2]
    ps = [0.0, 0.08, 0.18, 0.32, 0.4, 0.5]
    res = SweepResult("p", [SweepRow(p, law(p) * 200, 0.0, 200.0, 1e4, law(p)) for p in ps])
    fit = fit_fp_from_sweep(res)
    assert (fit.a, fit.b, fit.c) == pytest.approx(FP_COEFFS, abs=1e-9)
    flat = SweepResult("p", [SweepRow(p, 700.0, 0.0, 200.0, 1e4, 3.5) for p in ps])
    fit = fit_fp_from_sweep(flat)
    assert (fit.a, fit.b, fit.c) == pytest.approx((0, 0, 3.5), abs=1e-9)


def test_sandwich_edge_cases():
    base = dict(family="random", sizes=(20, 40), metric=HOP2, repetitions=3, master_seed=1)
    assert all(r.between for r in run_sandwich_check(ExperimentPlan(edge_prob=0.3, **base)).rows)
    empty = run_sandwich_check(ExperimentPlan(edge_prob=0.0, **base))
    assert all(r.mean_value == 0 and r.between is False for r in empty.rows)
    full = run_sandwich_check(ExperimentPlan(edge_prob=1.0, **base))
    assert all(r.mean_value == r.key * (r.key - 1) and r.between for r in full.rows)
    assert full.to_csv().splitlines()[0] == "key,mean_value,std_dev,zipf,metcalfe,ratio,between"


@pytest.mark.parametrize("plan,runner", [
    (ws_plan(sizes=()), run_size_sweep),
    (ws_plan(sizes=(1,)), run_size_sweep),
    (ws_plan(repetitions=0), run_size_sweep),
    (ws_plan(p_grid=(1.5,)), run_size_sweep),
    (ws_plan(p_grid=(0.1, 0.2)), run_size_sweep),
    (ws_plan(k=3), run_size_sweep),
    (ws_plan(sizes=(50, 60), p_grid=(0.1, 0.2, 0.3)), run_p_sweep),
    (ExperimentPlan("ba", (50,), HOP2), run_p_sweep),
    (ws_plan(), run_sandwich_check),
    (ExperimentPlan("tree", (50,), HOP2), run_size_sweep),
])
def test_invalid_plans(plan, runner):
    with pytest.raises(ConfigError):
        runner(plan)


def test_plan_dict_round_trip():
    plan = ws_plan(p_grid=(0.0, 0.5))
    assert ExperimentPlan.from_dict(plan.to_dict()) == plan
    with pytest.raises(ConfigError):
        ExperimentPlan.from_dict({**plan.to_dict(), "colour": "red"})


def test_csv_layout():
    res = run_size_sweep(ws_plan(sizes=(60, 40), repetitions=2))
    lines = res.to_csv().splitlines()
    assert lines[0] == "key,mean_value,std_dev,zipf,metcalfe,ratio"
    assert [l.split(",")[0] for l in lines[1:]] == ["40", "60"]
