import six

from uplbench.intersection import DEFAULT_DEPTH, DEFAULT_MAX_STEPS, Context, check_type, infer, parse_context
from uplbench.mltt import TypeTheory, load_declarations, run_script, standard_theory
from uplbench.neighbourhoods import NbhdNF, classify, leq, meet, parse_nbhd
from uplbench.oracle import build_universe, run_probes
from uplbench.reduction import DEFAULT_FUEL, LEFTMOST_OUTERMOST, check_sn, normalize, reducts
from uplbench.semantics import DEFAULT_DELTA, TOP, certify_sn, model_equation_report, parse_corpus, sem_approx
from uplbench.stdlib import standard_signature
from uplbench.syntax import erase, parse_term, validate_signature


class Client(object):

    """
    Workbench bound to one signature
    """

    def __init__(self, sig, **other_options):
        """
        Initialize the workbench.

        :type sig: uplbench.syntax.Signature
        :param sig: signature every term is read against
        :type fuel: int
        :param fuel: reduction fuel (optional, default value is 100000)
        :type depth: int
        :param depth: neighbourhood complexity bound (optional, default value is 3)
        :type delta: int
        :param delta: extra depth of model equation checks (optional, default value is 2)
        :type max_steps: int
        :param max_steps: type search step budget (optional, default value is 200000)
        :type theory: uplbench.mltt.TypeTheory
        :param theory: declared constant types (optional, the standard ones for the standard signature)

        :rtype: uplbench.Client
        :returns: workbench client
        """
        self.sig = sig
        self.fuel = other_options.get('fuel', DEFAULT_FUEL)
        self.depth = other_options.get('depth', DEFAULT_DEPTH)
        self.delta = other_options.get('delta', DEFAULT_DELTA)
        self.max_steps = other_options.get('max_steps', DEFAULT_MAX_STEPS)
        if self.fuel < 1 or self.depth < 1:
            raise ValueError('fuel and depth must be at least 1, got fuel=%s, depth=%s' % (self.fuel, self.depth))
        self.theory = other_options.get('theory')
        if self.theory is None:
            self.theory = standard_theory(self.fuel) if sig is standard_signature() else TypeTheory(sig, fuel=self.fuel)

    def term(self, m):
        """
        Parses m when it is text.

        :rtype: Term
        """
        if isinstance(m, six.string_types):
            return erase(parse_term(m, self.sig))
        return m

    def nbhd(self, u):
        if isinstance(u, NbhdNF):
            return u
        return parse_nbhd(u, self.sig)

    def context(self, g):
        if g is None:
            return Context()
        if isinstance(g, six.string_types):
            return parse_context(g, self.sig)
        if isinstance(g, dict):
            return Context((x, self.nbhd(u)) for x, u in sorted(g.items()))
        return g

    def normalize(self, m, strategy=LEFTMOST_OUTERMOST):
        """
        Normalizes a term.

        :param m: term or its text
        :rtype: NormalForm or FuelExhausted

        :Example:

        >>> api = uplbench.client()
        >>> api.normalize('less 0 (S 0)').term
        App(Const('Inl'), Const('0'))
        """
        return normalize(self.term(m), self.sig, self.fuel, strategy)

    def reducts(self, m):
        return reducts(self.term(m), self.sig)

    def check_sn(self, m):
        return check_sn(self.term(m), self.sig, self.fuel)

    def leq(self, u, v):
        return leq(self.nbhd(u), self.nbhd(v))

    def meet(self, u, v):
        return meet(self.nbhd(u), self.nbhd(v))

    def classify(self, u):
        return classify(self.nbhd(u))

    def check_type(self, m, u, context=None):
        """
        Searches a derivation of ``context ⊢ m : u``.

        :rtype: Valid, Refuted or Unknown

        :Example:

        >>> api.check_type('\\\\x. x', '! -> !', {})
        Valid(derivation=...)
        """
        return check_type(self.context(context), self.term(m), self.nbhd(u), self.depth, self.sig, self.max_steps)

    def infer(self, m, context=None):
        return infer(self.context(context), self.term(m), self.depth, self.sig, self.max_steps)

    def sem_approx(self, m, rho=None):
        m = self.term(m)
        if rho is None:
            rho = dict((x, TOP) for x in m.free)
        return sem_approx(m, rho, self.depth, self.sig, self.max_steps)

    def certify_sn(self, m, cross_check=True):
        return certify_sn(self.term(m), self.depth, self.sig, cross_check, self.fuel, self.max_steps)

    def model_equation_report(self, corpus):
        """
        :param corpus: entries, or the text of a corpus file
        :rtype: ModelReport
        """
        if isinstance(corpus, six.string_types):
            corpus = parse_corpus(corpus, self.sig)
        return model_equation_report(corpus, self.depth, self.sig, self.delta, self.max_steps)

    def build_universe(self, seeds):
        return build_universe([self.term(m) for m in seeds], self.sig, self.fuel)

    def run_probes(self, text):
        return run_probes(text, self.sig, self.depth, self.fuel)

    def check_term(self, g, m, a):
        """
        Whether ``g ⊢ m : a`` holds in the type theory; g is a list of
        (name, type) pairs.

        :rtype: bool or UNKNOWN
        """
        g = [(x, self._tt_term(t)) for x, t in (g or ())]
        return self.theory.check_term(g, self._tt_term(m), self._tt_term(a))

    def declare(self, script):
        """
        Adds the constant declarations of a script.
        """
        self.theory, _ = load_declarations(script, self.sig, self.theory, self.fuel)

    def run_script(self, text):
        return run_script(text, self.sig, self.theory, self.fuel)

    def validate(self):
        return validate_signature(self.sig)

    def _tt_term(self, m):
        if isinstance(m, six.string_types):
            return parse_term(m, self.sig, allow_annotations=True)
        return m

