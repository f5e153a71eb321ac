"""Shared test data: the certification battery, published table cells, and
tolerance helpers."""

import math
from functools import lru_cache

from rotlat import build

# Constructions certified by the acceptance suite.
BATTERY = (
    ("p31", {"r": 3}),
    ("p31", {"r": 4}),
    ("p31", {"r": 5}),
    ("p32", {"p": 7}),
    ("p32", {"p": 11}),
    ("p32", {"p": 13}),
    ("p34", {"r": 3, "p": 5}),
    ("p34", {"r": 4, "p": 5}),
    ("p34", {"r": 3, "p": 7}),
    ("p37", {"p1": 5, "p2": 7}),
    ("p37", {"p1": 5, "p2": 11}),
)


@lru_cache(maxsize=None)
def get_module(code, **params):
    return build(code, **params)


def battery_modules():
    return [get_module(code, **params) for code, params in BATTERY]


# Published per-dimension relative minimum product distances, as printed
# (some cells carry fewer than six digits, one is visibly truncated).
PUBLISHED_CELLS = {
    (3, "K1"): "0.369646",
    (4, "K2"): "0.324210",
    (4, "K3"): "0.281171",
    (5, "K1"): "0.27097",
    (6, "K1"): "0.24285",
    (6, "K3"): "0.219793",
    (8, "K1"): "0.20472",
    (8, "K2"): "0.201311",
    (8, "K3"): "0.182317",
    (10, "K3"): "0.161122",
    (11, "K1"): "0.17003",
    (12, "K3"): "0.144401",
    (14, "K1"): "0.148086",
    (15, "K1"): "0.142402",
    (16, "K2"): "0.133393",
    (16, "K3"): "0.123452",
    (18, "K1"): "0.128512",
    (18, "K3"): "0.1136",
    (20, "K1"): "0.121175",
    (20, "K3"): "0.104475",
    (128, "K1"): "0.0450746",
    (128, "K2"): "0.044554",
    (32768, "K1"): "0.00276258",
    (32768, "K2"): "0.00276222",
}


def agrees_significant(ours: float, printed: str, sig_cap: int = 5) -> bool:
    """Agreement with a printed decimal within one unit of its last compared
    significant digit (capped at sig_cap); tolerates truncated printings."""
    digits = len(printed.replace("0.", "").lstrip("0"))
    sig = min(sig_cap, digits)
    mag = math.floor(math.log10(abs(float(printed))))
    return abs(ours - float(printed)) < 10.0 ** (mag - sig + 1)
