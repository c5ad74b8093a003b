"""Multiprocessor task scheduling with a master-slave genetic algorithm."""

from ._gasched import (
    ComplexityModel,
    ConfigError,
    GAConfig,
    GAResult,
    GraphError,
    TaskGraph,
    bench_csv,
    cost_optimality,
    decode,
    exhaustive_optimal,
    fitness,
    gantt_csv,
    lower_bounds,
    parallel_cost,
    predicted_speedup,
    random_dag,
    run,
    sequential_cost,
)

__all__ = [
    "ComplexityModel",
    "ConfigError",
    "GAConfig",
    "GAResult",
    "GraphError",
    "TaskGraph",
    "bench_csv",
    "cost_optimality",
    "decode",
    "exhaustive_optimal",
    "fitness",
    "gantt_csv",
    "lower_bounds",
    "parallel_cost",
    "predicted_speedup",
    "random_dag",
    "run",
    "sequential_cost",
]
