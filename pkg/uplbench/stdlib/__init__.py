from .standard_module import standard_signature, numeral, vec_value, dns_term, get_term
from .standard_module import regression_get, get_stability, rule_instances
from .standard_module import signature_text, declarations_text, dns_script_text
from .standard_module import SIGNATURE_FILE, DECLARATIONS_FILE, DNS_SCRIPT_FILE
