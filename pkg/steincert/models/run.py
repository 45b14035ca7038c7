"""
CLI Run Configuration Model
"""
from enum import Enum
from dataclasses import dataclass, field

from ..errors import DomainError


class Command(Enum):
    BOUND = 'bound'
    DISTANCES = 'distances'
    CERTIFICATE = 'certificate'
    LP_SOLVE = 'lp-solve'
    COUNTEREXAMPLE = 'counterexample'
    JACOBI_EVAL = 'jacobi-eval'
    VERIFY = 'verify'


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'
    HUMAN = 'human'


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings of one CLI invocation"""
    command: Command
    space: object = None
    N: int = 1
    degree_cap: int = 5000
    k_verify: int = 10000
    grid_size: int = 400
    tol: float = 1e-9
    seed: int = 0
    output_path: str = None
    format: OutputFormat = OutputFormat.JSON
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ('N', 'degree_cap', 'k_verify', 'grid_size'):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol}")

    @classmethod
    def from_app(cls, app, command, **overrides):
        """
        Build a run configuration from app settings and CLI overrides

        Args:
            app: Flask app created by create_app
            command: Command or its CLI name
            overrides: CLI values; None means "use the configured default"

        Returns:
            RunConfig
        """
        values = {
            'degree_cap': app.config['DEGREE_CAP'],
            'k_verify': app.config['K_VERIFY'],
            'grid_size': app.config['GRID_SIZE'],
            'tol': app.config['TOLERANCE'],
            'seed': app.config['SEED'],
            'format': app.config['OUTPUT_FORMAT'],
        }
        extra = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key in cls.__dataclass_fields__:
                values[key] = value
            else:
                extra[key] = value
        values['format'] = OutputFormat(values['format'])
        return cls(command=Command(command), extra=extra, **values)
