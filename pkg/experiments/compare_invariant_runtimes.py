"""
Compare the running time of the invariant construction across algebras, degrees and scopes.

Records the term counts and the table size of every run; timings are kept out of the tests.

Programmer: liepyx team
Since: 2026-10
"""

import logging
import time

import experiments_csv

from liepyx import build_frame, build_lie_algebra, compute_valuedata, assemble, verify_invariant

TIME_LIMIT = 600

_frames = {}


def frame_of(algebra: str):
    if algebra not in _frames:
        _frames[algebra] = build_frame(build_lie_algebra(algebra[0], int(algebra[1:])))
    return _frames[algebra]


def construct_invariant(algebra: str, index: int, scope: str):
    frame = frame_of(algebra)
    if index > len(frame.degrees):
        return {"degree": None}
    degree = frame.degrees[index - 1]
    start = time.perf_counter()
    table = compute_valuedata(frame, index, degree, scope=scope)
    invariant = assemble(table)
    construction_time = time.perf_counter() - start
    report = verify_invariant(invariant, frame)
    counts = table.term_lists.counts()
    return {
        "degree": degree,
        "ttms": counts["ttms"],
        "ptms": counts["ptms"],
        "ntms": counts["ntms"],
        "table_size": len(table),
        "num_of_monomials": len(invariant.polynomial.terms),
        "construction_time": construction_time,
        "verified": report.passed,
    }


def run_small_algebras_experiment():
    experiment = experiments_csv.Experiment("results/", "invariant_runtimes.csv", backup_folder="results/backup/")
    input_ranges = {
        "algebra": ["A2", "A3", "B2", "B3", "C3", "G2"],
        "index": [1, 2, 3],
        "scope": ["borel", "full"],
    }
    experiment.run_with_time_limit(construct_invariant, input_ranges, time_limit=TIME_LIMIT)


def run_exceptional_borel_experiment():
    experiment = experiments_csv.Experiment("results/", "invariant_runtimes.csv", backup_folder="results/backup/")
    input_ranges = {
        "algebra": ["F4", "E6"],
        "index": [2, 3, 4, 5, 6],
        "scope": ["borel"],
    }
    experiment.run_with_time_limit(construct_invariant, input_ranges, time_limit=TIME_LIMIT)


def plot_results():
    experiments_csv.single_plot_results("results/invariant_runtimes.csv", filter={"scope": "full"},
                                        x_field="degree", y_field="construction_time", z_field="algebra",
                                        save_to_file="results/invariant_runtimes_full.png")
    experiments_csv.single_plot_results("results/invariant_runtimes.csv", filter={"scope": "borel"},
                                        x_field="degree", y_field="table_size", z_field="algebra",
                                        save_to_file="results/table_sizes_borel.png")


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    experiments_csv.logger.setLevel(logging.DEBUG)
    run_small_algebras_experiment()
    run_exceptional_borel_experiment()
    plot_results()
