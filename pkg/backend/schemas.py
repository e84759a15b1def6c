"""Modelos de saída (JSON) da linha de comando"""

from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from rootsys import RootSystem, describe
from verdicts import Verdict
from weylmod import Undetermined


class FactorEntry(BaseModel):
    weight: List[int]
    mult: int


class DecompositionOut(BaseModel):
    factors: List[FactorEntry]


class UndeterminedOut(BaseModel):
    reason: str
    weights: List[List[int]] = Field(default_factory=list)


class VerdictOut(BaseModel):
    value: str
    clause: str
    witness: Optional[List[int]] = None


class WeightMultiplicity(BaseModel):
    weight: List[int]
    mult: int


class CharacterOut(BaseModel):
    dimension: int
    terms: List[WeightMultiplicity]


class RootSystemOut(BaseModel):
    type: str
    rank: int
    cartan: List[List[int]]
    cartan_inverse: List[List[str]]
    positive_roots: List[List[int]]
    rho: List[int]
    coxeter_number: int
    highest_short_root: List[int]


class MismatchEntry(BaseModel):
    lhs: List[int]
    rhs: List[int]
    expected: str
    actual: str
    clause: str


class VerdictCount(BaseModel):
    expected: str
    actual: str
    count: int


class ClauseCount(BaseModel):
    clause: str
    count: int


class VerifyReport(BaseModel):
    type: str
    p: int
    mode: str
    total: int
    agreements: int
    mismatches: List[MismatchEntry]
    oracle_unknown: int
    engine_unknown: int
    verdict_counts: List[VerdictCount]
    clause_counts: List[ClauseCount]


class ErrorOut(BaseModel):
    error: str
    type: str


def outcome_out(outcome) -> BaseModel:
    """Decomposition | Undetermined -> modelo"""
    if isinstance(outcome, Undetermined):
        return UndeterminedOut(reason=outcome.reason, weights=[list(w) for w in outcome.weights])
    return DecompositionOut(
        factors=[FactorEntry(weight=list(w), mult=m) for w, m in outcome.factors],
    )


def verdict_out(verdict: Verdict) -> VerdictOut:
    witness = list(verdict.witness) if verdict.witness is not None else None
    return VerdictOut(value=verdict.value.value, clause=verdict.clause, witness=witness)


def terms_out(items: Sequence) -> List[WeightMultiplicity]:
    return [WeightMultiplicity(weight=list(w), mult=m) for w, m in items]


def root_system_out(rs: RootSystem) -> RootSystemOut:
    return RootSystemOut(**describe(rs))

