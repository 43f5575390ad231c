from ._selfshuffle import (
    DomainError,
    ParseError,
    abelian_borders,
    cli,
    search,
    shuffling_delay,
    sturmian_steering,
    verify,
    witness_steering,
    word,
)

__all__ = [
    "DomainError",
    "ParseError",
    "abelian_borders",
    "cli",
    "search",
    "shuffling_delay",
    "sturmian_steering",
    "verify",
    "witness_steering",
    "word",
]
