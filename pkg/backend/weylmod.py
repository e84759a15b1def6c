"""
Módulos de Weyl em característica p
Fórmula de soma de Jantzen, fatores de composição de Delta(lam) e caracteres
de módulos simples (recursão p-restrita + produto tensorial de Steinberg)
"""

from contextlib import contextmanager
from dataclasses import dataclass, field
import threading
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union
import logging

from cache import memo
from chars import (
    Character, WeightCoefficients, char_mul, descending, extended_weyl_char, product_with_weyl,
    twist, weyl_combination,
)
from config import settings
from errors import (
    InvalidWeight, InvariantViolation, RecursionLimitExceeded, UndeterminedError, UnsupportedRootSystem,
)
from rootsys import RootSystem, Weight, check_weight, is_dominant
from weights import (
    dot_reflect, maximal_elements, maximal_weight, p_adic_expand, rank2_alcove_name, rho_pairing,
)

logger = logging.getLogger(__name__)

Chooser = Optional[Callable[[List[Weight]], Weight]]

_state = threading.local()

# alcova do fator ligado em B2, por alcova/parede do peso máximo
B2_LINKED_TARGET = {"C2": "C1", "C3": "C2", "C4": "C3", "F47": "F35"}


@dataclass(frozen=True)
class Decomposition:
    """Fatores de composição: pares (peso dominante, multiplicidade >= 1) distintos"""

    factors: Tuple[Tuple[Weight, int], ...]

    def multiplicities(self) -> Dict[Weight, int]:
        return dict(self.factors)

    def weights(self) -> List[Weight]:
        return [w for w, _ in self.factors]

    @property
    def multiplicity_free(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def first_repeated(self) -> Optional[Weight]:
        for w, m in self.factors:
            if m > 1:
                return w
        return None


@dataclass(frozen=True)
class Undetermined:
    """A soma de Jantzen tem coeficiente >= 2: a resolução não é decidida"""

    reason: str
    weights: Tuple[Weight, ...] = field(default=())


ResolutionOutcome = Union[Decomposition, Undetermined]


def make_decomposition(rs: RootSystem, pairs) -> Decomposition:
    merged: Dict[Weight, int] = {}
    for w, m in pairs:
        merged[w] = merged.get(w, 0) + m
    return Decomposition(tuple(descending(rs, ((w, m) for w, m in merged.items() if m))))


@contextmanager
def _recursion_guard(key):
    stack = getattr(_state, "stack", None)
    if stack is None:
        stack = _state.stack = []
    if key in stack:
        raise RecursionLimitExceeded(f"Recursão reentrante em {key}")
    if len(stack) >= settings.max_recursion:
        raise RecursionLimitExceeded(f"Profundidade {len(stack)} excedida em {key}")
    stack.append(key)
    try:
        yield
    finally:
        stack.pop()


def p_valuation(n: int, p: int) -> int:
    """nu_p(n): expoente de p em n (n != 0)"""
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise InvalidWeight(f"{lam} não é dominante")
    return lam


def jantzen_weyl_terms(rs: RootSystem, lam: Sequence[int], p: int) -> Dict[Weight, int]:
    """JSF(lam) na base de caracteres de Weyl: soma de nu_p(mp) chi(s_{alpha,mp} . lam)"""
    lam = _require_dominant(rs, lam)
    cache_key = ("jantzen", rs.key, p, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached
    terms: Dict[Weight, int] = {}
    for k in range(len(rs.positive_roots)):
        value = rs.coroot_pairing(k, lam) + rho_pairing(rs, k)
        m = 1
        while m * p < value:
            term = extended_weyl_char(rs, dot_reflect(rs, k, m, p, lam))
            if term is not None:
                sign, weight = term
                terms[weight] = terms.get(weight, 0) + sign * (1 + p_valuation(m, p))
            m += 1
    terms = {w: c for w, c in terms.items() if c}
    return memo.set(cache_key, terms)


def jantzen_sum(rs: RootSystem, lam: Sequence[int], p: int) -> Character:
    """Caráter virtual W-invariante JSF(lam)"""
    return weyl_combination(rs, jantzen_weyl_terms(rs, lam, p))


def weyl_is_simple(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """Delta(lam) é simples sse JSF(lam) = 0"""
    return not jantzen_weyl_terms(rs, lam, p)


def tilting_is_simple(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """T(lam) é irredutível sse Delta(lam) = L(lam)"""
    return weyl_is_simple(rs, lam, p)


def greedy_simple_coefficients(rs: RootSystem, coefficients: Dict[Weight, int], p: int,
                               chooser: Chooser = None) -> WeightCoefficients:
    """
    Reescreve uma combinação de caracteres de Weyl na base de ch L

    Escolhe um peso maximal eta com coeficiente k, registra (eta, k) e
    subtrai k ch L(eta). Propaga UndeterminedError.
    """
    remaining = {w: k for w, k in coefficients.items() if k}
    result: WeightCoefficients = []
    while remaining:
        if chooser is None:
            top = maximal_weight(rs, remaining)
        else:
            top = chooser(maximal_elements(rs, remaining))
        k = remaining[top]
        result.append((top, k))
        for nu, c in simple_weyl_expansion(rs, top, p).items():
            value = remaining.get(nu, 0) - k * c
            if value:
                remaining[nu] = value
            else:
                remaining.pop(nu, None)
    return result


def weyl_composition_factors(rs: RootSystem, lam: Sequence[int], p: int) -> ResolutionOutcome:
    """
    Fatores de composição de Delta(lam), lam p-restrito

    Coeficientes de JSF na base de ch L em {0, 1} determinam os fatores;
    qualquer coeficiente >= 2 devolve Undetermined.
    """
    lam = _require_dominant(rs, lam)
    if not all(x < p for x in lam):
        raise InvalidWeight(f"{lam} não é {p}-restrito; use simple_char para pesos gerais")
    cache_key = ("factors", rs.key, p, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached

    with _recursion_guard(cache_key):
        terms = jantzen_weyl_terms(rs, lam, p)
        try:
            coefficients = greedy_simple_coefficients(rs, terms, p)
        except UndeterminedError as e:
            outcome: ResolutionOutcome = Undetermined(e.reason, tuple(e.weights))
        else:
            negative = [w for w, k in coefficients if k < 0]
            if negative:
                raise InvariantViolation(f"[WeylMod] coeficiente negativo em JSF{lam}: {negative}")
            offenders = tuple(w for w, k in coefficients if k >= 2)
            if offenders:
                logger.info(f"[WeylMod] ❌ {rs.label} p={p} {lam}: JSF com coeficientes >= 2 em {offenders}")
                outcome = Undetermined(f"JSF{lam} tem coeficiente >= 2", offenders)
            else:
                outcome = make_decomposition(rs, [(lam, 1)] + [(w, 1) for w, k in coefficients if k == 1])
    return memo.set(cache_key, outcome)


def _steinberg_layers(lam: Weight, p: int) -> Tuple[Weight, Weight]:
    low = tuple(x % p for x in lam)
    high = tuple(x // p for x in lam)
    return low, high


def simple_weyl_expansion(rs: RootSystem, lam: Sequence[int], p: int) -> Dict[Weight, int]:
    """ch L(lam) como combinação de caracteres de Weyl"""
    lam = _require_dominant(rs, lam)
    cache_key = ("simple_weyl", rs.key, p, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached

    with _recursion_guard(cache_key):
        if all(x < p for x in lam):
            outcome = weyl_composition_factors(rs, lam, p)
            if isinstance(outcome, Undetermined):
                raise UndeterminedError(outcome.reason, outcome.weights)
            expansion = {lam: 1}
            for mu, mult in outcome.factors:
                if mu == lam:
                    continue
                for nu, c in simple_weyl_expansion(rs, mu, p).items():
                    expansion[nu] = expansion.get(nu, 0) - mult * c
        else:
            low, high = _steinberg_layers(lam, p)
            twisted = twist(simple_char(rs, high, p), p)
            expansion = {}
            for nu, c in simple_weyl_expansion(rs, low, p).items():
                for weight, k in product_with_weyl(rs, twisted, nu):
                    expansion[weight] = expansion.get(weight, 0) + c * k
    expansion = {w: c for w, c in expansion.items() if c}
    return memo.set(cache_key, expansion)


def simple_char(rs: RootSystem, lam: Sequence[int], p: int) -> Character:
    """
    ch L(lam)

    p-restrito: chi(lam) menos os caracteres simples dos demais fatores.
    Caso geral: produto das camadas p-ádicas torcidas (Steinberg).
    """
    lam = _require_dominant(rs, lam)
    cache_key = ("simple_char", rs.key, p, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached
    if all(x < p for x in lam):
        character = weyl_combination(rs, simple_weyl_expansion(rs, lam, p))
    else:
        character = Character.monomial([0] * rs.rank)
        for i, layer in enumerate(p_adic_expand(lam, p).layers):
            if any(layer):
                character = char_mul(character, twist(simple_char(rs, layer, p), p ** i))
    return memo.set(cache_key, character)


def simple_decompose(rs: RootSystem, c: Character, p: int, chooser: Chooser = None) -> ResolutionOutcome:
    """Decomposição gulosa de um caráter W-invariante na base de ch L (suporte completo)"""
    remaining = dict(c.support)
    found: WeightCoefficients = []
    try:
        while remaining:
            if chooser is None:
                top = maximal_weight(rs, remaining)
            else:
                top = chooser(maximal_elements(rs, remaining))
            if not is_dominant(top):
                raise InvalidWeight(f"Peso maximal {top} não dominante: caráter não é W-invariante")
            k = remaining[top]
            if k < 0:
                raise InvariantViolation(f"[WeylMod] coeficiente negativo {k} em {top}")
            found.append((top, k))
            for w, m in simple_char(rs, top, p).items():
                value = remaining.get(w, 0) - k * m
                if value:
                    remaining[w] = value
                else:
                    remaining.pop(w, None)
    except UndeterminedError as e:
        return Undetermined(e.reason, tuple(e.weights))
    return make_decomposition(rs, found)


def linked_target_weight(rs: RootSystem, lam: Weight, p: int, target: str) -> Weight:
    """Único s_{beta,mp} . lam dominante abaixo de lam na alcova/parede nomeada"""
    candidates = set()
    for k in range(len(rs.positive_roots)):
        value = rs.coroot_pairing(k, lam) + rho_pairing(rs, k)
        m = 1
        while m * p < value:
            image = dot_reflect(rs, k, m, p, lam)
            if is_dominant(image) and rank2_alcove_name(rs, image, p) == target:
                candidates.add(image)
            m += 1
    if len(candidates) != 1:
        raise InvariantViolation(f"[WeylMod] {len(candidates)} pesos ligados a {lam} em {target}")
    return candidates.pop()


def rank2_factor_oracle(rs: RootSystem, lam: Sequence[int], p: int) -> Decomposition:
    """Fatores de Delta(lam) pelas tabelas fechadas de A2 e B2"""
    if rs.rank != 2:
        raise UnsupportedRootSystem(f"Oráculo de posto 2 não se aplica a {rs.label}")
    lam = _require_dominant(rs, lam)
    if not all(x < p for x in lam):
        raise InvalidWeight(f"{lam} não é {p}-restrito")
    name = rank2_alcove_name(rs, lam, p)
    if rs.type_label == "A":
        if name != "C2":
            return make_decomposition(rs, [(lam, 1)])
        theta = lam[0] + lam[1] + 2 - p
        return make_decomposition(rs, [(lam, 1), ((lam[0] - theta, lam[1] - theta), 1)])
    target = B2_LINKED_TARGET.get(name)
    if target is None:
        return make_decomposition(rs, [(lam, 1)])
    return make_decomposition(rs, [(lam, 1), (linked_target_weight(rs, lam, p, target), 1)])
