from uplbench.api_exception_module import UplBenchException
from uplbench.syntax import print_term


class NotTerminatingException(UplBenchException):

    """
    A universe seed has an infinite reduction
    """

    def __init__(self, term, **kwargs):
        self.term = term
        super(NotTerminatingException, self).__init__(
            'not-terminating', '%s is not strongly normalising' % print_term(term), **kwargs)


class FuelExceededException(UplBenchException):

    """
    A universe or a reduction graph grew past the fuel
    """

    def __init__(self, fuel, **kwargs):
        self.fuel = fuel
        super(FuelExceededException, self).__init__(
            'fuel-exceeded', 'more than %d terms needed' % fuel, **kwargs)


class UniverseNotApplicationClosedException(UplBenchException):

    """
    A set only known on its universe was asked about applications the
    universe lacks
    """

    def __init__(self, missing, **kwargs):
        self.missing = tuple(missing)
        shown = ', '.join(print_term(m) for m in self.missing[:5])
        if len(self.missing) > 5:
            shown += ', ... (%d in total)' % len(self.missing)
        super(UniverseNotApplicationClosedException, self).__init__(
            'universe-not-application-closed', 'the universe lacks %s' % shown,
            details={'missing': [print_term(m) for m in self.missing]})


class UniverseCoverageException(UplBenchException):

    """
    The universe has no instance for a context entry of a probe
    """

    def __init__(self, message, **kwargs):
        super(UniverseCoverageException, self).__init__('universe-coverage', message, **kwargs)
