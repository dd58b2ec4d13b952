"""Input validation utilities and the satlab exception family."""

from typing import Any, Dict, Optional


class SatlabError(Exception):
    """Base class for every error raised by satlab."""


class ValidationError(SatlabError):
    """Custom exception for validation errors."""

    def __init__(self, message: str, field: Optional[str] = None):
        self.message = message
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class GroupSpecError(ValidationError):
    """Raised when a group spec string cannot be parsed."""


class SubgroupRelationError(ValidationError):
    """Raised when a pair of subgroups does not satisfy the required inclusion."""


class TransferSystemError(ValidationError):
    """Raised for malformed edges or an invalid transfer system argument."""


class InteriorOperatorError(ValidationError):
    """Raised when a map on subgroups is not an interior operator."""


class InductorError(ValidationError):
    """Raised when a sub-inductor cannot be built from its inputs."""


class ConstructionError(ValidationError):
    """Raised when a tight-pair constructor is called outside its hypotheses."""


class ClusteringError(SatlabError):
    """Raised when sampling from a diagram that is not 2-clustered."""


class RealizationError(SatlabError):
    """Raised when the realization loop produces a universe with the wrong transfer system."""

    def __init__(self, message: str, edge: Optional[tuple] = None):
        self.edge = edge
        super().__init__(f"{message} (edge {edge})" if edge is not None else message)


class TightPairError(SatlabError):
    """Raised when a constructed tight pair fails its own certificate."""


class BudgetExceededError(SatlabError):
    """Raised when a computation would exceed a configured budget."""

    def __init__(self, resource: str, limit: int, actual: int):
        self.resource = resource
        self.limit = limit
        self.actual = actual
        super().__init__(f"{resource} budget exceeded: {actual} > {limit}")


def validate_positive_int(value: Any, field: str, minimum: int = 1) -> int:
    """Validate that a value is an integer no smaller than ``minimum``.

    Raises:
        ValidationError: If the value is not an int or is too small
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"must be an integer, got {type(value).__name__}", field)
    if value < minimum:
        raise ValidationError(f"must be >= {minimum}, got {value}", field)
    return value


def validate_seed(seed: Any) -> int:
    """Validate a PRNG seed (non-negative integer, possibly given as a string)."""
    if isinstance(seed, str):
        seed = seed.strip()
        if not seed.isdigit():
            raise ValidationError(f"Invalid seed '{seed}'", "seed")
        seed = int(seed)
    return validate_positive_int(seed, "seed", minimum=0)


def validate_config(config: Dict[str, Any]) -> None:
    """Validate the value ranges of a merged configuration.

    Raises:
        ValidationError: On the first invalid value found
    """
    groups = config.get("groups", {})
    validate_positive_int(groups.get("max_elements"), "groups.max_elements")
    validate_positive_int(groups.get("max_subgroups"), "groups.max_subgroups")

    transfer = config.get("transfer", {})
    validate_positive_int(transfer.get("max_enumeration_subgroups"), "transfer.max_enumeration_subgroups")

    oracle = config.get("oracle", {})
    validate_positive_int(oracle.get("max_orbits"), "oracle.max_orbits", minimum=0)
    validate_positive_int(oracle.get("jobs"), "oracle.jobs")
    validate_positive_int(oracle.get("chunk_size"), "oracle.chunk_size")

    constructors = config.get("constructors", {})
    validate_seed(constructors.get("seed"))
    theta = constructors.get("theta")
    if not isinstance(theta, (int, float)) or isinstance(theta, bool) or not (0.0 <= theta <= 1.0):
        raise ValidationError("must be a number in [0, 1]", "constructors.theta")
    validate_positive_int(constructors.get("stage_retries"), "constructors.stage_retries")
    validate_positive_int(constructors.get("max_rounds"), "constructors.max_rounds")

    level = str(config.get("logging", {}).get("level", "INFO")).upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ValidationError(f"Unknown log level '{level}'", "logging.level")
