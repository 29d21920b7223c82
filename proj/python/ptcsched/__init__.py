"""Exact scheduling of job families on parallel machines with setup times
and qualification time thresholds, minimizing (flow time, lost
qualifications) lexicographically.

Everything public lives in the compiled core; this package re-exports it.
"""

from ptcsched._core import (
    Aggregation,
    AlgorithmSpec,
    Block,
    BlockSequence,
    BordaScore,
    ContingencyTable,
    Disqualification,
    DisqualificationReport,
    Family,
    GenConfig,
    Instance,
    JobGroup,
    NO_RULES,
    ObjectivePair,
    RULE_FLOWTIME_ASSIGNED,
    RULE_FLOWTIME_EXTENDED,
    RULE_MAX_FAMILY_JOBS,
    RULE_MAX_MACHINE_JOBS,
    RULES_ALL,
    RunRecord,
    RunStatus,
    Schedule,
    ScheduledJob,
    SolverConfig,
    SolveResult,
    SolveStats,
    SolveStatus,
    algorithm_from_label,
    borda_ranking,
    brute_force_min_flowtime,
    brute_force_solve,
    check_validity,
    contingency,
    count_disqualifications,
    flowtime,
    flowtime_lower_bound,
    generate_instance,
    label_for,
    left_pack,
    load_instance,
    qualification_centric,
    records_from_csv,
    records_to_csv,
    run_suite,
    save_instance,
    scheduling_centric,
    sequence_optimal,
    solve,
    solve_lex,
    solve_weighted,
    validate_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Aggregation",
    "AlgorithmSpec",
    "Block",
    "BlockSequence",
    "BordaScore",
    "ContingencyTable",
    "Disqualification",
    "DisqualificationReport",
    "Family",
    "GenConfig",
    "Instance",
    "JobGroup",
    "NO_RULES",
    "ObjectivePair",
    "RULE_FLOWTIME_ASSIGNED",
    "RULE_FLOWTIME_EXTENDED",
    "RULE_MAX_FAMILY_JOBS",
    "RULE_MAX_MACHINE_JOBS",
    "RULES_ALL",
    "RunRecord",
    "RunStatus",
    "Schedule",
    "ScheduledJob",
    "SolverConfig",
    "SolveResult",
    "SolveStats",
    "SolveStatus",
    "algorithm_from_label",
    "borda_ranking",
    "brute_force_min_flowtime",
    "brute_force_solve",
    "check_validity",
    "contingency",
    "count_disqualifications",
    "flowtime",
    "flowtime_lower_bound",
    "generate_instance",
    "label_for",
    "left_pack",
    "load_instance",
    "qualification_centric",
    "records_from_csv",
    "records_to_csv",
    "run_suite",
    "save_instance",
    "scheduling_centric",
    "sequence_optimal",
    "solve",
    "solve_lex",
    "solve_weighted",
    "validate_instance",
]
