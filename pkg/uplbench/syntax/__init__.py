from .terms_module import Term, Var, Lam, App, Const, Inst, FUN, INFIX_CONSTANTS
from .terms_module import free_vars, all_names, alpha_eq, fresh_name, substitute, substitute_all
from .terms_module import erase, spine, apply, constants, term_size, print_term
from .parser_module import parse_term, parse_tree, canonical_name, NAME_PATTERN
from .signature_module import PVar, PCon, RewriteRule, Signature, Violation, ValidationReport
from .signature_module import load_signature, parse_rule, validate_signature
from .unification_module import unify, unify_all
from .api_exception_module import ParseException, SignatureException
