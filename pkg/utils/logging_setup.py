"""
Logging Setup
Root logger configuration for the command line, plus a progress callback that reports through it
"""

import logging

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(verbose=False):
    """INFO by default, DEBUG with verbose; safe to call more than once"""
    level = logging.DEBUG if verbose else logging.INFO
    root = logging.getLogger()
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    root.setLevel(level)
    # matplotlib is chatty at DEBUG
    logging.getLogger('matplotlib').setLevel(logging.WARNING)


def logging_progress(logger_name='template_knots'):
    """progress_callback(message, percent) that writes to the named logger"""
    logger = logging.getLogger(logger_name)

    def progress_callback(message, percent):
        logger.info("[%3.0f%%] %s", percent, message)

    return progress_callback
