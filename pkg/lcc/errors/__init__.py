from lcc.errors.handler import ErrorHandler
from lcc.errors.models import EXIT_INPUT, EXIT_OK, EXIT_REJECTED, ErrorSeverity, FriendlyError

__all__ = [
    "EXIT_INPUT",
    "EXIT_OK",
    "EXIT_REJECTED",
    "ErrorHandler",
    "ErrorSeverity",
    "FriendlyError",
]
