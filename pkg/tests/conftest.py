import json
import pathlib

import pytest

from kisp.interp import Interpreter
from kisp.reduction import ReductionDictionary
from kisp.temporal import Timeline, parse_date
from kisp.tree import load_tree

DATA = pathlib.Path(__file__).parent / "data"
SMITH_PATH = DATA / "smith.tree"
TRAP_PATH = DATA / "greedy_trap.dict"


@pytest.fixture(scope="session")
def smith_tree():
    return load_tree(str(SMITH_PATH))


@pytest.fixture(scope="session")
def smith_raw():
    return json.loads(SMITH_PATH.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def standard_dict():
    return ReductionDictionary.standard()


@pytest.fixture(scope="session")
def trap_dict():
    return ReductionDictionary.load(str(TRAP_PATH))


@pytest.fixture
def interp(smith_tree):
    return Interpreter(smith_tree, Timeline(parse_date("01.01.2000")), ego="eli")
