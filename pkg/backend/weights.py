"""
Reticulado de pesos: ordem de dominância, ação pontuada afim,
localização em alcovas, ligação (linkage) e expansão p-ádica
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union
import logging

from errors import InvalidWeight
from rootsys import RootSystem, Weight, check_weight, is_dominant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlcoveLocation:
    """Índices n_alpha = ceil(<lam+rho, alpha^vee>/p), paredes e nome em posto 2"""

    indices: Tuple[int, ...]
    walls: FrozenSet[Tuple[int, int]]
    rank2_name: Optional[str] = None

    @property
    def is_open(self) -> bool:
        return not self.walls

    @property
    def in_fundamental_closure(self) -> bool:
        """Fecho superior da alcova fundamental"""
        return all(n == 1 for n in self.indices)


@dataclass(frozen=True)
class PAdicExpansion:
    layers: Tuple[Weight, ...]

    def recompose(self, p: int) -> Weight:
        total = [0] * len(self.layers[0])
        for i, layer in enumerate(self.layers):
            for t, x in enumerate(layer):
                total[t] += x * p ** i
        return tuple(total)


def root_coordinates(rs: RootSystem, lam: Sequence[int]) -> Tuple[Fraction, ...]:
    """cartan_inverse . lam (coordenadas na base de raízes simples)"""
    lam = check_weight(rs, lam)
    return tuple(
        Fraction(sum(a * x for a, x in zip(row, lam)), rs.cartan_det) for row in rs.cartan_adjugate
    )


def height_key(rs: RootSystem, lam: Sequence[int]) -> int:
    """Altura multiplicada pelo determinante de Cartan (inteiro, mesma ordem)"""
    return sum(h * x for h, x in zip(rs.height_vector, lam))


def height(rs: RootSystem, lam: Sequence[int]) -> Fraction:
    return Fraction(height_key(rs, lam), rs.cartan_det)


def leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu <= lam sse lam - mu é combinação N-linear de raízes simples"""
    if len(mu) != len(lam) or len(lam) != rs.rank:
        raise InvalidWeight(f"Pesos {mu} e {lam} incompatíveis com {rs.label}")
    diff = [x - y for x, y in zip(lam, mu)]
    for row in rs.cartan_adjugate:
        num = sum(a * d for a, d in zip(row, diff))
        if num < 0 or num % rs.cartan_det:
            return False
    return True


def is_p_restricted(lam: Sequence[int], p: int) -> bool:
    """Todas as coordenadas em [0, p-1]; rejeita pesos não dominantes"""
    if not is_dominant(lam):
        raise InvalidWeight(f"{tuple(lam)} não é dominante")
    return all(x < p for x in lam)


def _root_index(rs: RootSystem, alpha: Union[int, Sequence[Fraction]]) -> Tuple[int, int]:
    if isinstance(alpha, int):
        if not 0 <= alpha < len(rs.positive_roots):
            raise InvalidWeight(f"Índice de raiz inválido: {alpha}")
        return alpha, 1
    return rs.root_index(alpha)


def rho_pairing(rs: RootSystem, k: int) -> int:
    return sum(rs.coroot_fw[k])


def dot_reflect(rs: RootSystem, alpha: Union[int, Sequence[Fraction]], m: int, p: int,
                lam: Sequence[int]) -> Weight:
    """s_{alpha, mp} . lam = lam - (<lam+rho, alpha^vee> - mp) alpha"""
    lam = check_weight(rs, lam)
    k, sign = _root_index(rs, alpha)
    # s_{-alpha, mp} = s_{alpha, -mp}
    m = m * sign
    shift = rs.coroot_pairing(k, lam) + rho_pairing(rs, k) - m * p
    return tuple(x - shift * b for x, b in zip(lam, rs.root_fw[k]))


def _a2_name(lam: Weight, p: int) -> str:
    a, b = lam
    if a == p - 1 and b == p - 1:
        return "vertex"
    if a == p - 1:
        return "F23"
    if b == p - 1:
        return "F23'"
    if a + b < p - 2:
        return "C1"
    if a + b == p - 2:
        return "F12"
    return "C2"


def _b2_name(lam: Weight, p: int) -> str:
    a, b = lam
    if a == p - 1 and b == p - 1:
        return "vertex"
    if 2 * a + b < p - 3:
        return "C1"
    if 2 * a + b == p - 3:
        return "F12"
    if a + b < p - 2:
        return "C2"
    if a + b == p - 2:
        return "F23"
    if 2 * a + b < 2 * p - 3:
        return "F35" if b == p - 1 else "C3"
    if 2 * a + b == 2 * p - 3:
        return "F34"
    if a == p - 1:
        return "F46"
    if b == p - 1:
        return "F47"
    return "C4"


def rank2_alcove_name(rs: RootSystem, lam: Sequence[int], p: int) -> Optional[str]:
    """Nome das alcovas/paredes p-restritas em A2 e B2; None fora desse caso"""
    if rs.rank != 2 or not is_dominant(lam):
        return None
    lam = tuple(lam)
    if not all(x < p for x in lam):
        return "non_restricted"
    if rs.type_label == "A":
        return _a2_name(lam, p)
    return _b2_name(lam, p)


def alcove_locate(rs: RootSystem, lam: Sequence[int], p: int) -> AlcoveLocation:
    """Localiza lam + rho em relação aos hiperplanos H_{alpha, mp}"""
    lam = check_weight(rs, lam)
    indices = []
    walls = set()
    for k in range(len(rs.positive_roots)):
        value = rs.coroot_pairing(k, lam) + rho_pairing(rs, k)
        indices.append(-(-value // p))
        if value % p == 0:
            walls.add((k, value // p))
    return AlcoveLocation(tuple(indices), frozenset(walls), rank2_alcove_name(rs, lam, p))


def in_fundamental_closure(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """lam pertence ao fecho superior da alcova fundamental"""
    lam = check_weight(rs, lam)
    return all(
        0 < rs.coroot_pairing(k, lam) + rho_pairing(rs, k) <= p for k in range(len(rs.positive_roots))
    )


def linked_up(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    """
    lam ↑ mu: busca em largura por reflexões afins pontuadas que sobem
    na ordem e permanecem abaixo de mu (intervalo finito)
    """
    lam = check_weight(rs, lam)
    mu = check_weight(rs, mu)
    if not leq(rs, lam, mu):
        return False
    seen = {lam}
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        if nu == mu:
            return True
        for k, beta in enumerate(rs.root_fw):
            value = rs.coroot_pairing(k, nu) + rho_pairing(rs, k)
            m = value // p + 1
            while True:
                shift = m * p - value
                image = tuple(x + shift * b for x, b in zip(nu, beta))
                if not leq(rs, image, mu):
                    break
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
                m += 1
    return False


def p_adic_expand(lam: Sequence[int], p: int) -> PAdicExpansion:
    """Dígitos na base p coordenada a coordenada (decomposição de Steinberg)"""
    if not is_dominant(lam):
        raise InvalidWeight(f"{tuple(lam)} não é dominante")
    if p < 2:
        raise InvalidWeight(f"Característica inválida: {p}")
    rest = list(lam)
    layers = []
    while True:
        layers.append(tuple(x % p for x in rest))
        rest = [x // p for x in rest]
        if not any(rest):
            break
    return PAdicExpansion(tuple(layers))


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    """Todos os pesos dominantes mu <= lam, em ordem decrescente de altura"""
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise InvalidWeight(f"{lam} não é dominante")
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for nu in frontier:
            for beta in rs.root_fw:
                image = tuple(x - b for x, b in zip(nu, beta))
                if image not in seen and is_dominant(image):
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen, key=lambda nu: (-height_key(rs, nu), tuple(-x for x in nu)))


def restricted_weights(rs: RootSystem, p: int) -> List[Weight]:
    """Pesos p-restritos em ordem lexicográfica"""
    return [tuple(w) for w in product(range(p), repeat=rs.rank)]


def linked_weights_below(rs: RootSystem, lam: Sequence[int], p: int) -> List[Weight]:
    """Candidatos da Ligação Forte: mu dominante, mu <= lam e mu ↑ lam"""
    return [mu for mu in dominant_weights_below(rs, lam) if linked_up(rs, mu, lam, p)]


def maximal_weight(rs: RootSystem, weights) -> Weight:
    """Peso de altura máxima (desempate lexicográfico); é maximal na ordem <="""
    return max(weights, key=lambda nu: (height_key(rs, nu), nu))


def maximal_elements(rs: RootSystem, weights) -> List[Weight]:
    """Todos os elementos maximais para <= (usado nos testes de independência de ordem)"""
    pool = list(weights)
    return sorted(
        nu for nu in pool if not any(eta != nu and leq(rs, nu, eta) for eta in pool)
    )
