from uplbench.api_exception_module import UplBenchException


class DerivationException(UplBenchException):

    """
    A derivation does not have the shape an operation requires
    """

    def __init__(self, message, **kwargs):
        super(DerivationException, self).__init__('derivation-error', message, **kwargs)
