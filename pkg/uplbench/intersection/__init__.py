from .derivation_module import Rule, Context, Derivation, check_derivation, invert_lambda, invert_app
from .derivation_module import var_node, subsume, meet_intro, meet_intro_all, app_elim, lam_intro, weaken
from .derivation_module import derivation_size, derivation_height, pattern_assignment, parse_context, parse_typing
from .search_module import CheckOutcome, Valid, Refuted, Unknown, check_type, generators, infer, constant_type
from .search_module import query_constructors, DEFAULT_DEPTH, DEFAULT_MAX_STEPS
from .api_exception_module import DerivationException
