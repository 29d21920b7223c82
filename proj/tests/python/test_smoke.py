"""End-to-end smoke tests of the python module against known optima."""

import pytest

import ptcsched as ptc


def reference_instance():
    """The bundled 10-job, 2-machine, 3-family demo; optimal flow time 114."""
    return ptc.Instance(
        machines=2,
        families=[
            ptc.Family(id=1, jobs=3, proc=9, setup=1, gamma=25, qualified=[2]),
            ptc.Family(id=2, jobs=3, proc=6, setup=1, gamma=26, qualified=[1, 2]),
            ptc.Family(id=3, jobs=4, proc=1, setup=1, gamma=21, qualified=[1, 2]),
        ],
    )


def test_instance_round_trip():
    inst = reference_instance()
    assert ptc.validate_instance(inst) == []
    again = ptc.load_instance(ptc.save_instance(inst))
    assert again == inst
    with pytest.raises(Exception):
        ptc.load_instance("not json")


def test_generate_is_deterministic():
    cfg = ptc.GenConfig()
    cfg.jobs, cfg.machines, cfg.families, cfg.seed = 8, 2, 3, 7
    a = ptc.generate_instance(cfg)
    b = ptc.generate_instance(cfg)
    assert a == b
    assert a.total_jobs() == 8
    assert ptc.validate_instance(a) == []


def test_schedule_evaluation():
    inst = reference_instance()
    packed = ptc.left_pack(inst, [[3, 3, 2, 2, 2], [3, 3, 1, 1, 1]])
    assert ptc.check_validity(inst, packed) == []
    assert ptc.flowtime(packed) == 114
    report = ptc.count_disqualifications(inst, packed)
    assert report.count == 3
    assert sorted(d.time for d in report.losses) == [22, 22, 26]


def test_relaxation():
    jobs = [
        ptc.JobGroup(family=1, count=1, proc=2, setup=5),
        ptc.JobGroup(family=2, count=1, proc=3, setup=3),
        ptc.JobGroup(family=3, count=1, proc=4, setup=1),
    ]
    best = ptc.sequence_optimal(jobs)
    assert best.flowtime == 22
    assert best.flowtime == ptc.brute_force_min_flowtime(jobs)


def test_solver_reaches_the_optimum():
    inst = reference_instance()
    result = ptc.solve_lex(inst)
    assert result.status == ptc.SolveStatus.OPTIMAL
    assert result.objective.flowtime == 114
    assert result.schedule is not None
    assert ptc.check_validity(inst, result.schedule) == []
    assert ptc.flowtime(result.schedule) == 114

    weighted = ptc.solve_weighted(inst)
    assert weighted.objective == result.objective

    cfg = ptc.SolverConfig()
    cfg.rules = ptc.NO_RULES
    bare = ptc.solve_lex(inst, cfg)
    assert bare.objective == result.objective
    assert result.stats.nodes <= bare.stats.nodes


def test_solver_agrees_with_brute_force():
    cfg = ptc.GenConfig()
    cfg.jobs, cfg.machines, cfg.families, cfg.seed = 6, 2, 2, 11
    inst = ptc.generate_instance(cfg)
    expected = ptc.brute_force_solve(inst)
    got = ptc.solve_lex(inst)
    assert got.status == ptc.SolveStatus.OPTIMAL
    assert got.objective == expected


def test_infeasible_instance():
    inst = ptc.Instance(
        machines=1,
        families=[ptc.Family(id=1, jobs=2, proc=5, setup=0, gamma=4, qualified=[1])],
    )
    result = ptc.solve_lex(inst)
    assert result.status == ptc.SolveStatus.INFEASIBLE
    assert result.objective is None


def test_heuristics_produce_valid_schedules():
    inst = reference_instance()
    for schedule in (ptc.scheduling_centric(inst), ptc.qualification_centric(inst)):
        assert schedule is not None
        assert ptc.check_validity(inst, schedule) == []


def test_bench_pipeline():
    instances = []
    for seed in (21, 22):
        cfg = ptc.GenConfig()
        cfg.jobs, cfg.machines, cfg.families, cfg.seed = 7, 2, 3, seed
        instances.append((f"gen{seed}", ptc.generate_instance(cfg)))

    algorithms = [ptc.algorithm_from_label("N_ALF"), ptc.algorithm_from_label("NHASF")]
    assert ptc.label_for(algorithms[1].config) == "NHASF"

    records = ptc.run_suite(instances, algorithms, 30.0)
    assert len(records) == 4

    scores = ptc.borda_ranking(records)
    assert sum(s.twice_score for s in scores) == 2 * 2 * 3  # n * k * (k + 1)
    assert scores[0].score <= scores[-1].score

    table = ptc.contingency(records, "N_ALF", "NHASF")
    assert table.total() == 2

    csv = ptc.records_to_csv(records)
    assert ptc.records_to_csv(ptc.records_from_csv(csv)) == csv
