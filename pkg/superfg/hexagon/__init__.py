from . import polylog, kinematics, gfunctions, period, twistors
from .gfunctions import g_function
from .kinematics import HexKinematics, kinematics
from .period import FlagChart, PeriodRecord, chen_period, hexagon_period
from .polylog import ell1_diff, ell_n
from .twistors import cross_ratios
