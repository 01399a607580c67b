"""Command line front end, experiment harness and phase-function files"""
from .commands import cmd_solve, cmd_experiment
from .experiments import run_experiment, get_available_experiments
from .phase_io import write_phase, read_phase

__all__ = [
    "cmd_experiment",
    "cmd_solve",
    "get_available_experiments",
    "read_phase",
    "run_experiment",
    "write_phase",
]
