from . import dataclasses, mutation, jacobian, io
from .dataclasses import ASeed, ExchangeData, XSeed
from .mutation import mutate_a, mutate_epsilon, mutate_x, p_map
from .jacobian import mutation_log_jacobian
