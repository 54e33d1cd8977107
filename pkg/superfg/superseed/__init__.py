from . import dataclasses, mutation, bracket, horizontal, duality, io
from .dataclasses import SuperSeed
from .mutation import mutate_super
from .bracket import bracket as graded_bracket
from .horizontal import check_isotropy, horizontal_data
from .duality import langlands_dual
