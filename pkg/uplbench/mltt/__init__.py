from .checker_module import UNKNOWN, ConstDecl, TTContext, TypeTheory
from .script_module import Assume, Check, ScriptEntry, ScriptReport, parse_script, load_declarations, run_script
from .script_module import standard_theory, PASS, FAIL, UNKNOWN_OUTCOME, UNSUPPORTED, ERROR
from .api_exception_module import DuplicateNameException, UnknownConstantException
from .api_exception_module import UnsupportedJudgementException, ScriptException
