from uplbench.api_exception_module import UplBenchException


class PreconditionException(UplBenchException):

    """
    An operation was called outside its precondition
    """

    def __init__(self, message, **kwargs):
        super(PreconditionException, self).__init__('precondition-violated', message, **kwargs)
