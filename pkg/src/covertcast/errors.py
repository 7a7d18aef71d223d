"""Shared exception types."""


class InfeasibleError(RuntimeError):
    """No setting satisfies the covertness and decode-floor constraints."""


class AllInfeasibleError(InfeasibleError):
    """Every candidate in a search (swarm positions, relay choices) was infeasible."""


class InvalidHoverError(ValueError):
    """Requested hover point lies outside the service area."""


class RegimeError(ValueError):
    """SNR falls outside the linear band of the decode-error model."""


class ConfigError(ValueError):
    """Configuration document violates the schema."""
