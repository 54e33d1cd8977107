from typing import Any, Dict, Tuple

import numpy as np

from superfg.seeds.io import exchange_to_json, parse_x_seed, read_json
from superfg.sfrat.io import format_sfrat
from superfg.superseed.dataclasses import MODES, SuperSeed


def parse_super_seed(data: Dict[str, Any]) -> Tuple[SuperSeed, str]:
    even = parse_x_seed(data)
    W = np.array(data.get("W", np.zeros((0, even.exchange.n))), dtype=int)
    mode = data.get("mode", "consistent")
    if mode not in MODES:
        raise ValueError(f"Unknown mutation mode: {mode=}, expected one of {MODES}")
    return SuperSeed(even.exchange, even.x, W), mode


def read_super_seed(filename: str) -> Tuple[SuperSeed, str]:
    return parse_super_seed(read_json(filename))


def super_seed_to_json(s: SuperSeed, mode: str = "consistent") -> Dict[str, Any]:
    out = exchange_to_json(s.exchange)
    out["x"] = [format_sfrat(x) for x in s.x]
    out["W"] = s.W.tolist()
    out["theta_prefactor"] = [format_sfrat(p) for p in s.theta_prefactor]
    out["mode"] = mode
    return out
