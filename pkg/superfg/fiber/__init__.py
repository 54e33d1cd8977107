from . import dataclasses, transfer, snf, newton, elimination, residues, io
from .dataclasses import FiberCurve, TransferWeight, VerticalSystem
from .elimination import eliminate, reparametrize
from .newton import newton_genus
from .residues import iterated_residue, residue_dlog
from .snf import smith_normal_form
from .transfer import eval_letter, flip_update
