from .filter_module import FilterElem, Bot, Principal, SemApprox, Certified, Unknown, TOP, BOTTOM
from .filter_module import top, bottom, principal, filter_eq, filter_member, apply_approx, sem_approx
from .filter_module import certify_sn, certify_all
from .report_module import AppEntry, BetaEntry, IotaEntry, CheckResult, EntryReport, ModelReport
from .report_module import model_equation_report, parse_corpus, HOLDS, DEPTH_INSUFFICIENT, VIOLATED, DEFAULT_DELTA
