import pytest

from parryattr import ParryParameters, PrefixEngine

# Reference prefixes u_0, u_1, ... in the word text format.
GOLDEN = {
    (2, 1, 1): [
        "0",
        "001",
        "00100102",
        "00100102001001020010",
        "001001020010010200100010010200100102001000100102001",
        "00100102001001020010001001020010010200100010010200100100102001001020010001"
        "00102001001020010001001020010010010200100102001000100102",
    ],
    (2, 1, 2, 1): [
        "0",
        "001",
        "00100102",
        "0010010200100102001003",
        "00100102001001020010030010010200100102001003001001020010010",
    ],
    ("nsp", 3, 1): [
        "0",
        "0001",
        "00010001000101",
        "000100010001010001000100010100010001000101000101",
        "00010001000101000100010001010001000100010100010100010001000101000100010001"
        "01000100010001010001010001000100010100010001000101000100010001010001010001"
        "0001000101000101",
    ],
}

# Parameter sets used across the suite; simple ones cover m = 2..5, t_1 = t_m and t_1 > t_m.
SIMPLE_SETS = [(1, 1), (2, 1), (2, 2), (3, 3), (1, 0, 1), (2, 1, 1), (3, 0, 2), (3, 2, 1),
               (1, 1, 1), (2, 1, 2, 1), (1, 1, 0, 1, 1)]
NONSIMPLE_SETS = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


def golden_params(key) -> ParryParameters:
    if key[0] == "nsp":
        return ParryParameters.nonsimple(key[1], key[2])
    return ParryParameters.simple(key)


_engines: dict = {}


def engine_for(t) -> PrefixEngine:
    """Shared engine per parameter tuple; ``("nsp", p, q)`` selects the non-simple family."""
    if t not in _engines:
        params = ParryParameters.nonsimple(t[1], t[2]) if t[0] == "nsp" else ParryParameters.simple(t)
        _engines[t] = PrefixEngine(params)
    return _engines[t]


@pytest.fixture(params=SIMPLE_SETS, ids=lambda t: ",".join(map(str, t)))
def simple_engine(request):
    return engine_for(request.param)


@pytest.fixture(params=NONSIMPLE_SETS, ids=lambda pq: "nsp%d,%d" % pq)
def nonsimple_engine(request):
    return engine_for(("nsp",) + request.param)
