from uplbench.neighbourhoods import parse_nbhd
from uplbench.stdlib import standard_signature
from uplbench.syntax import erase, load_signature, parse_term


def std():
    return standard_signature()


def term(text, sig=None):
    return erase(parse_term(text, sig or std()))


def nbhd(text, sig=None):
    return parse_nbhd(text, sig or std())


OMEGA = '(\\x. x x) (\\x. x x)'

NON_LINEAR_SIG = '''
constructor 0 0
constructor S 1
defined eq 2
rule eq x x = S 0
'''

OVERLAPPING_SIG = '''
constructor 0 0
constructor S 1
defined pred 1
rule pred x = 0
rule pred (S x) = x
'''

ESCAPING_SIG = '''
constructor 0 0
constructor S 1
defined f 1
rule f x = S y
'''

# addition by both arguments; the first two rules overlap on "plus 0 0"
PLUS_SIG = '''
constructor 0 0
constructor S 1
defined plus 2
rule plus n 0 = n
rule plus 0 n = n
rule plus (S n) (S m) = S (S (plus n m))
'''


def custom(text):
    return load_signature(text)
