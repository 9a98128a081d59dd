"""
    A collection of constants pertaining to the qsympairs project.
"""
from enum import Enum, IntEnum
from pathlib import Path


# ----------- PATH CONSTANTS ----------
QSYMPAIRS_PYTHON = Path(__file__).parent.parent.absolute()
QSYMPAIRS_ROOT = QSYMPAIRS_PYTHON.parent.parent.absolute()
QSYMPAIRS_RESOURCES = QSYMPAIRS_ROOT.joinpath("resources")
QSYMPAIRS_PAIRS = QSYMPAIRS_RESOURCES.joinpath("pairs")

# ----------- APPLICATION ----------
APPLICATION_NAME = "qsympairs"
LOG_LEVEL_VARIABLE = "QSYMPAIRS_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

# ----------- BUDGETS ----------
DEFAULT_DEGREE_BOUND = 12
DEFAULT_RULE_BUDGET = 2000
DEFAULT_STEP_BUDGET = 2_000_000
DEFAULT_MODULE_BUDGET = 4000
DEFAULT_NILPOTENCE_BOUND = 16
SCALING_SEARCH_BOUND = 8


class Sign(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __mul__(self, other):
        return Sign(self.value * other.value)


class Side(Enum):
    X = "x"
    Y = "y"


class Basis(Enum):
    ROOT = "r"
    WEIGHT = "w"


class DiagramMap(Enum):
    IDENTITY = "id"
    FLIP = "flip"


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION = 1
    RESOURCE = 2
    INVARIANT = 3
