from .context import VT, VTX, VTX3, VarContext
from .laurent import Laurent, NotLaurentError
from .ratfunc import PoleError, RatFunc, factor_laurent, rsum, rzero
from .scalar import I, Scalar, parse_scalar, scalar_str

__all__ = [
    "I",
    "Laurent",
    "NotLaurentError",
    "PoleError",
    "RatFunc",
    "Scalar",
    "VT",
    "VTX",
    "VTX3",
    "VarContext",
    "factor_laurent",
    "parse_scalar",
    "rsum",
    "rzero",
    "scalar_str",
]
