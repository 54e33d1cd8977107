from . import laurent, sfrat, io
from .laurent import LaurentPoly
from .sfrat import SFRat, arith
from .io import format_sfrat, parse_sfrat
