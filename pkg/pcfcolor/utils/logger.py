"""loguru sinks: stderr always, plus rotating files when PCF_LOG_FILE is set."""
import sys
from pathlib import Path
from typing import Any, Optional

from loguru import logger as _loguru

from ..config import settings

_CONSOLE_FORMAT = "<level>{level: <7}</level> <cyan>{name}</cyan>:{line} | {message}"
_FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message}"


class Logger:
    """Facade over loguru that reports the caller's location, not its own."""

    def __init__(self, level: Optional[str] = None) -> None:
        self.level = ""
        self.configure(level or settings.LOG_LEVEL)

    def configure(self, level: str) -> None:
        """Reinstall every sink at ``level``; the file sinks keep their own levels."""
        self.level = level.upper()
        _loguru.remove()
        # stdout carries CLI verdicts
        _loguru.add(sys.stderr, format=_CONSOLE_FORMAT, level=self.level, colorize=None)
        if settings.LOG_FILE:
            self._add_files(Path(settings.LOG_FILE))

    def _add_files(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        for target, level in ((path, "DEBUG"), (path.with_name("error.log"), "ERROR")):
            _loguru.add(
                str(target),
                format=_FILE_FORMAT,
                level=level,
                rotation=settings.LOG_ROTATION,
                retention=settings.LOG_RETENTION,
                encoding="utf-8",
            )

    def _log(self, level: str, message: str, **kwargs: Any) -> None:
        _loguru.opt(depth=2).log(level, message, **kwargs)

    def debug(self, message: str, **kwargs: Any) -> None:
        self._log("DEBUG", message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self._log("INFO", message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._log("WARNING", message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._log("ERROR", message, **kwargs)


logger = Logger()
