from . import qword, series, mutation, pentagon
from .mutation import QuantumSeed, phi_adjoint, q_mutate, relation_check
from .pentagon import pentagon_check
from .qword import QuantumTorus, QWord, normal_form
from .series import QSeries
