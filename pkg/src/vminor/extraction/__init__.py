"""Constructive extractions: each returns a replayable certificate."""
from .basic import connected_reduce, cycle_shorten, ladder_to_fan, shorten_to
from .common import ExtractionError, HighDegree, Outcome, certify
from .cycles import (
    FanView, consecutive_fan_to_cycles, even_spaced_fan_to_cycles, fan_potential,
    incomplete_fan_to_cycle, infer_fan, kl_fan_reduce, odd_gap_extract,
)
from .fans import attach_ek, ek_gadget_to_fan
from .patched import (
    Matching, PatchedPath, find_patched_path, induced_matching_from_path,
    patched_to_matching, random_patched_host, simplify_patched_path,
)
from .pipelines import Budget, pipeline_cycle, pipeline_fan, shortest_odd_cycle
