# Public entry points of the library
from .shared_types import ErrorCode, FunctionId, Unsupported, UnsupportedReason, ZetaKitError
from .exactnum import RationalPolynomial, bernoulli_minus, bernoulli_plus, euler_number
from .values import PiValue, evaluate, evaluate_or_raise
from .regsum import MethodValue, RegularFunction, finite_sum
from .order import Segment, make_segment, precedes
