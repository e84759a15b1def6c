"""
Anel de caracteres Z[X]^W
Caracteres esparsos exatos, fórmula de Freudenthal, dimensões de Weyl
e mudança de base para caracteres de Weyl
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

from cache import memo
from errors import InvalidWeight, InvariantViolation, RankMismatch
from rootsys import (
    RootSystem, Weight, check_weight, dominant_conjugate, dominant_dot_representative,
    is_dominant, signed_orbit, weyl_orbit,
)
from weights import dominant_weights_below, height_key, maximal_elements, maximal_weight

logger = logging.getLogger(__name__)

WeightCoefficients = List[Tuple[Weight, int]]


class Character:
    """Mapa finito peso -> inteiro não nulo, com flag de W-invariância"""

    __slots__ = ("rank", "support", "invariant")

    def __init__(self, rank: int, support: Optional[Dict[Weight, int]] = None, invariant: bool = False):
        self.rank = rank
        self.support: Dict[Weight, int] = {}
        for w, m in (support or {}).items():
            if len(w) != rank:
                raise RankMismatch(f"Peso {w} em caráter de posto {rank}")
            if m:
                self.support[tuple(w)] = m
        self.invariant = invariant

    @classmethod
    def zero(cls, rank: int) -> "Character":
        return cls(rank, {}, invariant=True)

    @classmethod
    def monomial(cls, weight: Sequence[int], coefficient: int = 1) -> "Character":
        weight = tuple(weight)
        return cls(len(weight), {weight: coefficient}, invariant=not any(weight))

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self.support.get(tuple(weight), 0)

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def items(self):
        return self.support.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.rank == other.rank and self.support == other.support

    def __add__(self, other: "Character") -> "Character":
        return char_add(self, other)

    def __sub__(self, other: "Character") -> "Character":
        return char_add(self, char_scale(-1, other))

    def __neg__(self) -> "Character":
        return char_scale(-1, self)

    def __rmul__(self, k: int) -> "Character":
        return char_scale(k, self)

    def __mul__(self, other):
        if isinstance(other, int):
            return char_scale(other, self)
        return char_mul(self, other)

    def __repr__(self) -> str:
        return f"Character(rank={self.rank}, terms={len(self.support)})"

    def dimension(self) -> int:
        return sum(self.support.values())

    def is_w_invariant(self, rs: RootSystem) -> bool:
        """m(s_i nu) = m(nu) para todo peso armazenado e toda reflexão simples"""
        for w, m in self.support.items():
            for i in range(rs.rank):
                c = w[i]
                image = tuple(x - c * a for x, a in zip(w, rs.simple_fw[i]))
                if self.support.get(image, 0) != m:
                    return False
        return True


def _check_rank(a: Character, b: Character):
    if a.rank != b.rank:
        raise RankMismatch(f"Postos diferentes: {a.rank} e {b.rank}")


def char_add(a: Character, b: Character) -> Character:
    """Soma ponto a ponto, zeros removidos"""
    _check_rank(a, b)
    total = dict(a.support)
    for w, m in b.support.items():
        value = total.get(w, 0) + m
        if value:
            total[w] = value
        else:
            total.pop(w, None)
    return Character(a.rank, total, invariant=a.invariant and b.invariant)


def char_scale(k: int, a: Character) -> Character:
    if not k:
        return Character.zero(a.rank)
    return Character(a.rank, {w: k * m for w, m in a.support.items()}, invariant=a.invariant)


def char_mul(a: Character, b: Character) -> Character:
    """Convolução: m(nu) = soma de m_a(nu1) m_b(nu2) sobre nu1 + nu2 = nu"""
    _check_rank(a, b)
    if len(a) > len(b):
        a, b = b, a
    total: Dict[Weight, int] = {}
    for w1, m1 in a.support.items():
        for w2, m2 in b.support.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            total[w] = total.get(w, 0) + m1 * m2
    return Character(a.rank, total, invariant=a.invariant and b.invariant)


def twist(c: Character, q: int) -> Character:
    """Torção de Frobenius: escala cada peso do suporte por q"""
    return Character(c.rank, {tuple(q * x for x in w): m for w, m in c.support.items()}, invariant=c.invariant)


def dominant_part(c: Character) -> Dict[Weight, int]:
    return {w: m for w, m in c.support.items() if is_dominant(w)}


def descending(rs: RootSystem, items: Iterable[Tuple[Weight, int]]) -> WeightCoefficients:
    """Ordena pares (peso, coeficiente) por altura decrescente, desempate lexicográfico"""
    return sorted(items, key=lambda item: (-height_key(rs, item[0]), tuple(-x for x in item[0])))


def dominant_multiplicities(rs: RootSystem, lam: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicidades de Delta(lam) nos pesos dominantes, pela fórmula de Freudenthal"""
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise InvalidWeight(f"{lam} não é dominante")
    cache_key = ("freudenthal", rs.key, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached

    rho = rs.rho
    lam_rho = tuple(x + r for x, r in zip(lam, rho))
    top = rs.form(lam_rho, lam_rho)
    mult: Dict[Weight, int] = {lam: 1}
    for mu in dominant_weights_below(rs, lam)[1:]:
        mu_rho = tuple(x + r for x, r in zip(mu, rho))
        denominator = top - rs.form(mu_rho, mu_rho)
        if denominator <= 0:
            raise InvariantViolation(f"[Chars] denominador de Freudenthal {denominator} em {mu} < {lam}")
        total = Fraction(0)
        for k, beta in enumerate(rs.root_fw):
            form_row = rs.root_form[k]
            nu = tuple(x + b for x, b in zip(mu, beta))
            while True:
                m = mult.get(dominant_conjugate(rs, nu), 0)
                if not m:
                    break
                total += m * sum((x * f for x, f in zip(nu, form_row)), Fraction(0))
                nu = tuple(x + b for x, b in zip(nu, beta))
        value = 2 * total / denominator
        if value.denominator != 1 or value <= 0:
            raise InvariantViolation(f"[Chars] multiplicidade inválida {value} em {mu} para {lam}")
        mult[mu] = int(value)
    logger.debug(f"[Chars] Freudenthal {rs.label} {lam}: {len(mult)} pesos dominantes")
    return memo.set(cache_key, mult)


def freudenthal_weyl_char(rs: RootSystem, lam: Sequence[int]) -> Character:
    """Caráter completo chi(lam) = ch Delta(lam), estendido por W-invariância"""
    lam = check_weight(rs, lam)
    cache_key = ("weyl_char", rs.key, lam)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached
    support: Dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(rs, lam).items():
        for w in weyl_orbit(rs, mu):
            support[w] = m
    return memo.set(cache_key, Character(rs.rank, support, invariant=True))


def weight_multiplicity(rs: RootSystem, lam: Sequence[int], nu: Sequence[int]) -> int:
    """m_{Delta(lam)}(nu)"""
    nu = check_weight(rs, nu)
    return dominant_multiplicities(rs, lam).get(dominant_conjugate(rs, nu), 0)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Fórmula de grau de Weyl: produto de <lam+rho, beta^vee>/<rho, beta^vee>"""
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise InvalidWeight(f"{lam} não é dominante")
    value = Fraction(1)
    for k in range(len(rs.positive_roots)):
        rho_value = sum(rs.coroot_fw[k])
        value *= Fraction(rs.coroot_pairing(k, lam) + rho_value, rho_value)
    if value.denominator != 1:
        raise InvariantViolation(f"[Chars] dimensão de Weyl não inteira: {value}")
    return int(value)


def extended_weyl_char(rs: RootSystem, lam: Sequence[int]) -> Optional[Tuple[int, Weight]]:
    """chi(lam) para lam arbitrário: None se singular, senão (det w, w . lam dominante)"""
    weight, sign = dominant_dot_representative(rs, lam)
    if sign == 0:
        return None
    return sign, weight


def weyl_combination(rs: RootSystem, coefficients: Dict[Weight, int]) -> Character:
    """Soma de k * chi(nu) como caráter completo"""
    total = Character.zero(rs.rank)
    for nu, k in coefficients.items():
        total = total + char_scale(k, freudenthal_weyl_char(rs, nu))
    return total


def decompose_into_weyl(rs: RootSystem, c: Character,
                        chooser: Optional[Callable[[List[Weight]], Weight]] = None) -> WeightCoefficients:
    """
    Escreve c = soma k_i chi(nu_i) (única, base de Z[X]^W)

    Subtrai gulosamente k chi(nu) para um peso maximal nu do suporte restante;
    chooser (opcional) escolhe entre todos os maximais.
    """
    remaining = dict(c.support)
    result: WeightCoefficients = []
    while remaining:
        if chooser is None:
            top = maximal_weight(rs, remaining)
        else:
            top = chooser(maximal_elements(rs, remaining))
        if not is_dominant(top):
            raise InvalidWeight(f"Peso maximal {top} não dominante: caráter não é W-invariante")
        k = remaining[top]
        result.append((top, k))
        for w, m in freudenthal_weyl_char(rs, top).items():
            value = remaining.get(w, 0) - k * m
            if value:
                remaining[w] = value
            else:
                remaining.pop(w, None)
    return result


def product_with_weyl(rs: RootSystem, a: Character, mu: Sequence[int]) -> WeightCoefficients:
    """a . chi(mu) = soma de a(nu) chi(mu + nu), com chi estendido (Brauer-Klimyk)"""
    mu = check_weight(rs, mu)
    if not is_dominant(mu):
        raise InvalidWeight(f"{mu} não é dominante")
    total: Dict[Weight, int] = {}
    for nu, m in a.items():
        term = extended_weyl_char(rs, tuple(x + y for x, y in zip(mu, nu)))
        if term is None:
            continue
        sign, weight = term
        total[weight] = total.get(weight, 0) + sign * m
    return descending(rs, ((w, k) for w, k in total.items() if k))


def alternating_sum(rs: RootSystem, x: Sequence[int]) -> Character:
    """A_x = soma de det(w) e^{w x} para x regular"""
    return Character(rs.rank, signed_orbit(rs, x), invariant=False)


def weyl_character_formula_holds(rs: RootSystem, lam: Sequence[int]) -> bool:
    """Verifica chi(lam) . A_rho = A_{lam+rho} (fórmula de caracteres de Weyl)"""
    lam = check_weight(rs, lam)
    lam_rho = tuple(x + r for x, r in zip(lam, rs.rho))
    return char_mul(freudenthal_weyl_char(rs, lam), alternating_sum(rs, rs.rho)) == alternating_sum(rs, lam_rho)
