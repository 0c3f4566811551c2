from .fast import FastOracle
from .oracle import Backend, BfsOracle, FailureOracle, SccCacheOracle, build_oracle

__all__ = [
    "Backend",
    "FailureOracle",
    "BfsOracle",
    "SccCacheOracle",
    "FastOracle",
    "build_oracle",
]
