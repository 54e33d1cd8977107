import json
from typing import Any, Dict, Union

import numpy as np

from superfg.seeds.dataclasses import ASeed, ExchangeData, XSeed
from superfg.sfrat.io import format_sfrat, parse_sfrat_list


def read_json(filename: str) -> Dict[str, Any]:
    with open(filename, "r") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed JSON in {filename=}: {e}") from e


def parse_exchange(data: Dict[str, Any]) -> ExchangeData:
    try:
        n_mut = int(data["n_mut"])
        n_frozen = int(data.get("n_frozen", 0))
        epsilon = np.array(data["epsilon"], dtype=int)
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"Invalid exchange data: {e}") from e
    return ExchangeData(n_mut, n_frozen, epsilon, data.get("d"))


def parse_x_seed(data: Dict[str, Any]) -> XSeed:
    exchange = parse_exchange(data)
    if "x" not in data:
        return XSeed.initial(exchange)
    return XSeed(exchange, parse_sfrat_list(data["x"]))


def parse_a_seed(data: Dict[str, Any]) -> ASeed:
    exchange = parse_exchange(data)
    if "a" not in data:
        return ASeed.initial(exchange)
    return ASeed(exchange, parse_sfrat_list(data["a"]))


def exchange_to_json(e: ExchangeData) -> Dict[str, Any]:
    return {
        "n_mut": e.n_mut,
        "n_frozen": e.n_frozen,
        "epsilon": e.epsilon.tolist(),
        "d": e.d.tolist(),
    }


def seed_to_json(seed: Union[XSeed, ASeed]) -> Dict[str, Any]:
    out = exchange_to_json(seed.exchange)
    if isinstance(seed, XSeed):
        out["x"] = [format_sfrat(x) for x in seed.x]
    else:
        out["a"] = [format_sfrat(a) for a in seed.a]
    return out
