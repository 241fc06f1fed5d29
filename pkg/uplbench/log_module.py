import logging
import sys

logger = logging.getLogger('uplbench')


def setup_logger(level=logging.INFO):
    """
    Set up the package logger called `uplbench`: INFO records go to stdout,
    WARNING and above go to stderr.

    :param int level: logging level of the package logger
    :rtype: logging.Logger
    :returns: the configured logger
    """
    global logger
    logger = logging.getLogger('uplbench')
    logger.handlers = list()  # repeated calls must not stack handlers
    logger.setLevel(level)
    logger.propagate = False

    infoch = logging.StreamHandler(sys.stdout)
    infoch.setFormatter(logging.Formatter('%(levelname)s (%(module)s): %(message)s'))

    def info_filter(record):
        return 1 if record.levelno < logging.WARNING else 0

    infoch.addFilter(info_filter)
    infoch.setLevel(level)

    errch = logging.StreamHandler(sys.stderr)
    errch.setLevel(logging.WARNING)
    errch.setFormatter(logging.Formatter('%(levelname)s (%(module)s): %(message)s'))

    logger.addHandler(infoch)
    logger.addHandler(errch)
    return logger
