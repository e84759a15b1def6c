"""Veredito de três valores para multiplicity-freeness"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from rootsys import Weight


class MFValue(str, Enum):
    MULTIPLICITY_FREE = "MultiplicityFree"
    HAS_MULTIPLICITY = "HasMultiplicity"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """Resposta com proveniência: cláusula do teorema ou 'engine', e testemunha quando há multiplicidade"""

    value: MFValue
    clause: str
    witness: Optional[Weight] = None

    @classmethod
    def free(cls, clause: str) -> "Verdict":
        return cls(MFValue.MULTIPLICITY_FREE, clause)

    @classmethod
    def has_multiplicity(cls, clause: str, witness: Optional[Weight] = None) -> "Verdict":
        return cls(MFValue.HAS_MULTIPLICITY, clause, witness)

    @classmethod
    def unknown(cls, clause: str) -> "Verdict":
        return cls(MFValue.UNKNOWN, clause)

    @property
    def definite(self) -> bool:
        return self.value is not MFValue.UNKNOWN
