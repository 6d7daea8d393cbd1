import os

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

load_dotenv()


class Configs(BaseSettings):

    PROJECT_ROOT: str = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    PROJECT_NAME: str = os.getenv("PROJECT_NAME", "hodge-atlas")

    # numerics
    HODGE_PREC: int = int(os.getenv("HODGE_PREC", "30"))
    HODGE_GUARD_DIGITS: int = int(os.getenv("HODGE_GUARD_DIGITS", "10"))
    HODGE_ODE_CLEARANCE: float = float(os.getenv("HODGE_ODE_CLEARANCE", "0.05"))

    # algebraicity search
    HODGE_CM_DEGREE: int = int(os.getenv("HODGE_CM_DEGREE", "2"))
    HODGE_CM_HEIGHT: int = int(os.getenv("HODGE_CM_HEIGHT", "1000000"))

    # logging
    HODGE_LOG_LEVEL: str = os.getenv("HODGE_LOG_LEVEL", "INFO")
    HODGE_LOG_FILE: str = os.getenv("HODGE_LOG_FILE", "")

    # grid evaluation
    HODGE_JOBS: int = int(os.getenv("HODGE_JOBS", "1"))

    MIN_PRECISION: int = 15

    def validate_precision(self, prec: int) -> None:
        """Validate a working precision in decimal digits."""
        if prec < self.MIN_PRECISION:
            raise ValueError(
                f"precision must be at least {self.MIN_PRECISION} digits, got {prec}. "
                "Set HODGE_PREC in your .env file or pass --prec."
            )

    def validate_jobs(self, jobs: int) -> None:
        if jobs < 1:
            raise ValueError(f"job count must be positive, got {jobs}")

    class Config:
        case_sensitive = True


configs = Configs()
