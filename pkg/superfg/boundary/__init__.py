from . import dataclasses, matrix, bcfw, io
from .bcfw import bcfw_check, odd_support
from .dataclasses import BoundaryMatrix, OddSupport
from .matrix import minor, projector, transport
