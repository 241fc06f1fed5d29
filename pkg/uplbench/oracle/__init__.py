from .candidate_module import TermUniverse, CandidateSet, VARIABLE_POOL
from .candidate_module import build_universe, application_seeds, candidate_set, pool_variables
from .candidate_module import r0_set, con_candidate, arrow_candidate, intersect, red_set
from .candidate_module import cr_check, cr_violations, soundness_probe
from .probe_module import Seed, Member, Probe, ProbeResult, ProbeReport, parse_probes, run_probes
from .probe_module import PASS, FAIL, UNKNOWN
from .api_exception_module import NotTerminatingException, FuelExceededException
from .api_exception_module import UniverseNotApplicationClosedException, UniverseCoverageException
