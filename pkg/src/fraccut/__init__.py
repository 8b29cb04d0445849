"""Fractional distance of binary linear codes and redundant-row cutting planes."""

from importlib import resources
from pathlib import Path

from .gf2 import BitMatrix, BitVector, rank
from .fracdist import CONE, FULL, FracDistReport, fractional_distance, gamma_set
from .cutplane import GreedyConfig, GreedyResult, cutting_condition, greedy_improve, search_redundant_row
from .lpdecode import LpDecoder, lp_decode
from .bscsim import SimPoint, simulate_bler, sweep
from .codecio import load_matrix, save_matrix


def data_path(name: str) -> Path:
    """Path of a bundled matrix file (hamming.txt, hamming_star.txt, golay.alist)."""
    return Path(str(resources.files(__package__) / "data" / name))


def load_bundled(name: str) -> BitMatrix:
    return load_matrix(data_path(name))


__all__ = [
    "BitMatrix", "BitVector", "rank", "CONE", "FULL", "FracDistReport", "fractional_distance",
    "gamma_set", "GreedyConfig", "GreedyResult", "cutting_condition", "greedy_improve",
    "search_redundant_row", "LpDecoder", "lp_decode", "SimPoint", "simulate_bler", "sweep",
    "load_matrix", "save_matrix", "data_path", "load_bundled",
]
