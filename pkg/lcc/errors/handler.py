"""
ErrorHandler: turns exceptions into friendly, exit-coded errors.

Usage:
    from lcc.errors import ErrorHandler

    try:
        term = parse_term_file(path)
    except Exception as e:
        friendly = ErrorHandler().handle(e, context="reduce")
        print(friendly.render(), file=sys.stderr)
        return friendly.exit_code
"""

import logging
from dataclasses import replace

from lcc.errors.catalog import ERROR_PATTERNS, ERROR_TYPES, GENERIC_ERROR
from lcc.errors.models import ErrorSeverity, FriendlyError

logger = logging.getLogger(__name__)


class ErrorHandler:
    """Matches exceptions against the error catalog."""

    def handle(self, error: BaseException, context: str = "") -> FriendlyError:
        """Match an exception to a friendly error.

        Args:
            error: The caught exception.
            context: Optional context string, usually the subcommand name.
        """
        error_str = str(error)
        for kind, template in ERROR_TYPES:
            if isinstance(error, kind):
                friendly = replace(template, original_error=error_str)
                self._log_error(friendly, context)
                return friendly
        return self.handle_string(error_str, context)

    def handle_string(self, error_message: str, context: str = "") -> FriendlyError:
        """Match a raw error message against the regex patterns."""
        for pattern, template in ERROR_PATTERNS:
            if pattern.search(error_message):
                friendly = replace(template, original_error=error_message)
                self._log_error(friendly, context)
                return friendly

        friendly = replace(GENERIC_ERROR, original_error=error_message)
        self._log_error(friendly, context, matched=False)
        return friendly

    def _log_error(self, friendly: FriendlyError, context: str, matched: bool = True) -> None:
        prefix = f"[{context}] " if context else ""
        match_tag = friendly.error_code if matched else "UNMATCHED"

        if friendly.severity == ErrorSeverity.CRITICAL:
            logger.error(f"{prefix}{match_tag}: {friendly.original_error}")
        elif friendly.severity == ErrorSeverity.REJECTED:
            logger.warning(f"{prefix}{match_tag}: {friendly.original_error}")
        else:
            logger.info(f"{prefix}{match_tag}: {friendly.original_error}")
