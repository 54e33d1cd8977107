from . import misc_utils, linalg_utils
