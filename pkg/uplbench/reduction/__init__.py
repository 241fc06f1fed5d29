from .reduction_module import NormalForm, FuelExhausted, SN, NotSN, Unknown
from .reduction_module import match_pattern, matching_rules, head_iota_step, reducts, step, is_normal
from .reduction_module import normalize, check_sn, is_simple
from .reduction_module import DEFAULT_FUEL, LEFTMOST_OUTERMOST, RIGHTMOST_INNERMOST, STRATEGIES
