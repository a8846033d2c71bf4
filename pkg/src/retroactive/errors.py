class RetroError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(RetroError, ValueError):
    """A call names an unknown operation or carries an argument outside its domain."""


class PositionError(RetroError, IndexError):
    """A timeline position is out of range. Positions are never clamped."""


class UndefinedBehaviorError(RetroError):
    """An ADT was driven into a state whose behavior it leaves undefined."""


class StateError(RetroError):
    """An object is not in the state an operation requires (e.g. a non-fresh wrapper)."""


class CapExceededError(RetroError, ValueError):
    """A problem size exceeds the configured desk-scale cap."""


class InstanceFormatError(RetroError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
