from .nbhd_module import Nabla, Con, Arrow, Meet, NbhdNF, NfNabla, NfCon, NfArrows, NABLA, NbhdClass
from .nbhd_module import normalize_nbhd, meet, meet_all, leq, eq, classify, complexity, continuity_witness
from .nbhd_module import match_nbhd, arrow, arrows_to, split_arrows, embed, print_nbhd, parse_nbhd, build_nbhd
from .universe_module import get_lazy_enumerator, iter_nbhd_universe, nbhd_universe
from .random_module import random_nbhd, random_arrows
from .laws_module import LawReport, check_laws, brute_force_covers
from .api_exception_module import PreconditionException
