"""Exceções do motor de caracteres"""

from typing import Sequence, Tuple


class ModRepError(Exception):
    """Base de todos os erros do projeto"""


class UnsupportedRootSystem(ModRepError):
    """Tipo/posto de sistema de raízes não suportado"""


class InvalidWeight(ModRepError):
    """Peso com posto errado, não dominante ou não p-restrito quando exigido"""


class RankMismatch(ModRepError):
    """Operação entre caracteres de postos diferentes"""


class UndeterminedError(ModRepError):
    """A fórmula de soma de Jantzen não determina os fatores de composição"""

    def __init__(self, reason: str, weights: Sequence[Tuple[int, ...]] = ()):
        super().__init__(reason)
        self.reason = reason
        self.weights = [tuple(w) for w in weights]


class RecursionLimitExceeded(ModRepError):
    """Recursão de caracteres simples profunda demais ou reentrante"""


class InvariantViolation(ModRepError):
    """Invariante interna quebrada: indica bug, não entrada inválida"""


class UsageError(ModRepError):
    """Argumentos de linha de comando inválidos"""
