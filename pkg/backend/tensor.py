"""
Produtos tensoriais L(lam) ⊗ L(mu)
Caráter, fatores de composição pelo argumento guloso de multiplicidades,
veredito multiplicity-free e redução p-ádica
"""

from typing import Dict, Sequence
import logging

from chars import Character, char_mul, freudenthal_weyl_char, product_with_weyl
from errors import InvalidWeight, InvariantViolation, UndeterminedError
from rootsys import RootSystem, Weight, check_weight, is_dominant
from verdicts import MFValue, Verdict
from weights import p_adic_expand
from weylmod import (
    Chooser, ResolutionOutcome, Undetermined, greedy_simple_coefficients, make_decomposition,
    simple_char, simple_weyl_expansion,
)

logger = logging.getLogger(__name__)


def _pair(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]):
    lam, mu = check_weight(rs, lam), check_weight(rs, mu)
    for w in (lam, mu):
        if not is_dominant(w):
            raise InvalidWeight(f"{w} não é dominante")
    return lam, mu


def tensor_char(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> Character:
    """ch L(lam) . ch L(mu)"""
    lam, mu = _pair(rs, lam, mu)
    return char_mul(simple_char(rs, lam, p), simple_char(rs, mu, p))


def tensor_weyl_coefficients(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> Dict[Weight, int]:
    """ch L(lam) . ch L(mu) na base de caracteres de Weyl"""
    lam, mu = _pair(rs, lam, mu)
    left, right = simple_char(rs, lam, p), simple_char(rs, mu, p)
    if len(left) <= len(right):
        full, expansion = left, simple_weyl_expansion(rs, mu, p)
    else:
        full, expansion = right, simple_weyl_expansion(rs, lam, p)
    total: Dict[Weight, int] = {}
    for nu, c in expansion.items():
        for weight, k in product_with_weyl(rs, full, nu):
            total[weight] = total.get(weight, 0) + c * k
    return {w: k for w, k in total.items() if k}


def tensor_factors(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int,
                   chooser: Chooser = None) -> ResolutionOutcome:
    """
    Fatores de composição de L(lam) ⊗ L(mu)

    Escolhe repetidamente um peso maximal eta (o primeiro é lam + mu),
    registra o coeficiente k e subtrai k ch L(eta) até esgotar o caráter.
    """
    lam, mu = _pair(rs, lam, mu)
    try:
        coefficients = greedy_simple_coefficients(rs, tensor_weyl_coefficients(rs, lam, mu, p), p, chooser)
    except UndeterminedError as e:
        logger.info(f"[Tensor] {rs.label} p={p} {lam}⊗{mu}: indeterminado ({e.reason})")
        return Undetermined(e.reason, tuple(e.weights))
    negative = [(w, k) for w, k in coefficients if k < 0]
    if negative:
        raise InvariantViolation(f"[Tensor] coeficiente negativo em {lam}⊗{mu}: {negative}")
    return make_decomposition(rs, coefficients)


def is_mf_engine(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> Verdict:
    """Veredito por força bruta de caracteres"""
    outcome = tensor_factors(rs, lam, mu, p)
    if isinstance(outcome, Undetermined):
        return Verdict.unknown("engine")
    witness = outcome.first_repeated()
    if witness is None:
        return Verdict.free("engine")
    return Verdict.has_multiplicity("engine", witness)


def is_mf(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> Verdict:
    """Redução p-ádica: multiplicity-free sse cada par de camadas é"""
    lam, mu = _pair(rs, lam, mu)
    left, right = p_adic_expand(lam, p).layers, p_adic_expand(mu, p).layers
    depth = max(len(left), len(right))
    zero = tuple([0] * rs.rank)
    left = left + (zero,) * (depth - len(left))
    right = right + (zero,) * (depth - len(right))
    unknown = False
    for i, (a, b) in enumerate(zip(left, right)):
        verdict = is_mf_engine(rs, a, b, p)
        if verdict.value is MFValue.HAS_MULTIPLICITY:
            return Verdict.has_multiplicity(f"engine:layer{i}", verdict.witness)
        if verdict.value is MFValue.UNKNOWN:
            unknown = True
    if unknown:
        return Verdict.unknown("engine")
    return Verdict.free("engine")


def char0_decomposition(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]):
    """chi(lam) . chi(mu) na base de Weyl (característica 0)"""
    lam, mu = _pair(rs, lam, mu)
    left, right = freudenthal_weyl_char(rs, lam), freudenthal_weyl_char(rs, mu)
    if len(left) <= len(right):
        return product_with_weyl(rs, left, mu)
    return product_with_weyl(rs, right, lam)


def mf_char0(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """L_C(lam) ⊗ L_C(mu) é multiplicity-free"""
    return all(k == 1 for _, k in char0_decomposition(rs, lam, mu))
