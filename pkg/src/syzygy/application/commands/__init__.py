"""Commands - one per CLI pipeline."""

from syzygy.application.commands.commands import (
    AmplenessCommand,
    BettiCommand,
    ClassifyCommand,
    Command,
    GenerateCommand,
    GroebnerCommand,
    PsiRankCommand,
    ReproduceCommand,
    ResolveCommand,
    ScrollCommand,
)

__all__ = [
    "Command",
    "GroebnerCommand",
    "BettiCommand",
    "ResolveCommand",
    "ScrollCommand",
    "PsiRankCommand",
    "AmplenessCommand",
    "GenerateCommand",
    "ClassifyCommand",
    "ReproduceCommand",
]
