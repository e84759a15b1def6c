"""
Sistemas de raízes A_n e B2 = C2
Dados combinatórios estáticos, pareamentos com corraízes e órbitas de Weyl
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union
import logging

import sympy

from cache import memo
from errors import UnsupportedRootSystem, InvalidWeight, InvariantViolation

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
Vector = Tuple[Fraction, ...]

TYPE_SYNONYMS = {"A": "A", "B": "B2", "C": "B2", "B2": "B2", "C2": "B2"}


@dataclass(frozen=True)
class RootSystem:
    """Sistema de raízes realizado em coordenadas euclidianas exatas.

    Pesos são sempre tuplas de inteiros na base de pesos fundamentais;
    os vetores euclidianos só aparecem em pareamentos e produtos internos.
    """

    type_label: str
    rank: int
    scale: Fraction
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    rho: Weight
    coxeter_number: int
    highest_short_root: Vector
    fundamental_weights: Tuple[Vector, ...] = field(repr=False)
    # coordenadas de cada raiz positiva na base de raízes simples
    root_coords: Tuple[Weight, ...] = field(repr=False)
    # raiz positiva em coordenadas de pesos fundamentais
    root_fw: Tuple[Weight, ...] = field(repr=False)
    # <omega_i, beta^vee> para cada raiz positiva beta
    coroot_fw: Tuple[Weight, ...] = field(repr=False)
    # (omega_i, omega_j) na forma escolhida
    gram: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    # (omega_i, beta) e (beta, beta)
    root_form: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)
    root_norms: Tuple[Fraction, ...] = field(repr=False)
    # inversa de Cartan como matriz inteira sobre o determinante
    cartan_adjugate: Tuple[Tuple[int, ...], ...] = field(repr=False)
    cartan_det: int = field(repr=False, default=1)
    # altura(lam) * det = soma ponderada das coordenadas fundamentais
    height_vector: Tuple[int, ...] = field(repr=False, default=())

    @property
    def label(self) -> str:
        return "B2" if self.type_label == "B2" else f"A{self.rank}"

    @property
    def key(self) -> Tuple[str, int, Fraction]:
        """Chave de memo: caracteres não dependem da escala, mas o memo separa"""
        return (self.type_label, self.rank, self.scale)

    @property
    def simple_fw(self) -> Tuple[Weight, ...]:
        return self.root_fw[:self.rank]

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        """Produto interno euclidiano (escalado)"""
        return self.scale * sum((Fraction(x) * Fraction(y) for x, y in zip(u, v)), Fraction(0))

    def form(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """Produto interno de dois pesos dados na base fundamental"""
        total = Fraction(0)
        for i, x in enumerate(lam):
            if x:
                row = self.gram[i]
                total += x * sum((row[j] * y for j, y in enumerate(mu) if y), Fraction(0))
        return total

    def coroot_pairing(self, k: int, lam: Sequence[int]) -> int:
        """<lam, beta_k^vee> para a k-ésima raiz positiva"""
        return sum(x * c for x, c in zip(lam, self.coroot_fw[k]))

    def root_index(self, alpha: Sequence[Fraction]) -> Tuple[int, int]:
        """Índice da raiz positiva e sinal (+1/-1); InvalidWeight se não for raiz"""
        vec = tuple(Fraction(x) for x in alpha)
        for k, beta in enumerate(self.positive_roots):
            if vec == beta:
                return k, 1
            if vec == tuple(-x for x in beta):
                return k, -1
        raise InvalidWeight(f"{alpha} não é raiz de {self.label}")


def parse_type(label: str, rank: Optional[int] = None) -> Tuple[str, int]:
    """Aceita 'A', 'A3', 'B2', 'C2' (B2 e C2 são sinônimos)"""
    text = label.strip().upper()
    head, digits = text[:1], text[1:]
    if head not in TYPE_SYNONYMS:
        raise UnsupportedRootSystem(f"Tipo desconhecido: {label}")
    if digits:
        if not digits.isdigit():
            raise UnsupportedRootSystem(f"Tipo desconhecido: {label}")
        parsed = int(digits)
        if rank is not None and rank != parsed:
            raise UnsupportedRootSystem(f"Posto inconsistente: {label} com --rank {rank}")
        rank = parsed
    if head == "A":
        if rank is None:
            raise UnsupportedRootSystem("Tipo A exige um posto")
        return "A", rank
    if rank not in (None, 2):
        raise UnsupportedRootSystem(f"B_n/C_n só com n = 2 (recebido {rank})")
    return "B2", 2


def _euclid(coeffs: Sequence[int], basis: Sequence[Vector]) -> Vector:
    dim = len(basis[0])
    return tuple(sum((c * b[t] for c, b in zip(coeffs, basis)), Fraction(0)) for t in range(dim))


def _type_a_data(n: int):
    dim = n + 1
    simple = []
    for i in range(n):
        v = [Fraction(0)] * dim
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simple.append(tuple(v))
    fundamental = []
    for i in range(1, n + 1):
        shift = Fraction(i, dim)
        fundamental.append(tuple((Fraction(1) if t < i else Fraction(0)) - shift for t in range(dim)))
    coords = []
    for i in range(n):
        for j in range(i, n):
            coords.append(tuple(1 if i <= t <= j else 0 for t in range(n)))
    return simple, fundamental, coords


def _type_b2_data():
    simple = [(Fraction(1), Fraction(-1)), (Fraction(0), Fraction(1))]
    fundamental = [(Fraction(1), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))]
    coords = [(1, 0), (0, 1), (1, 1), (1, 2)]
    return simple, fundamental, coords


def build_root_system(type_label: str, rank: int, scale: Union[int, Fraction] = 1) -> RootSystem:
    """
    Constrói o sistema de raízes completo

    Args:
        type_label: 'A' ou 'B2' (aceita sinônimos via parse_type)
        rank: posto n
        scale: fator positivo aplicado à forma euclidiana

    Returns:
        RootSystem imutável (memoizado por tipo, posto e escala)
    """
    type_label, rank = parse_type(type_label, rank)
    if rank < 1:
        raise UnsupportedRootSystem(f"Posto inválido: {rank}")
    scale = Fraction(scale)
    if scale <= 0:
        raise UnsupportedRootSystem(f"Escala deve ser positiva: {scale}")

    cache_key = ("rootsys", type_label, rank, scale)
    cached = memo.get(cache_key)
    if cached is not None:
        return cached

    if type_label == "A":
        simple, fundamental, coords = _type_a_data(rank)
    else:
        simple, fundamental, coords = _type_b2_data()

    coords.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    positive = [_euclid(c, simple) for c in coords]

    def inner(u, v):
        return scale * sum((x * y for x, y in zip(u, v)), Fraction(0))

    def pair(v, beta) -> Fraction:
        return 2 * inner(v, beta) / inner(beta, beta)

    cartan = tuple(
        tuple(int(pair(simple[j], simple[i])) for j in range(rank)) for i in range(rank)
    )
    for i in range(rank):
        for j in range(rank):
            if pair(fundamental[i], simple[j]) != (1 if i == j else 0):
                raise InvariantViolation(f"[RootSys] pesos fundamentais inconsistentes em {type_label}{rank}")

    matrix = sympy.Matrix(cartan)
    det = int(matrix.det())
    inverse = matrix.inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rank))
        for i in range(rank)
    )
    adjugate = tuple(tuple(int(x * det) for x in row) for row in cartan_inverse)

    root_fw = tuple(
        tuple(sum(cartan[r][i] * c[i] for i in range(rank)) for r in range(rank)) for c in coords
    )
    coroot_fw = []
    for beta in positive:
        row = []
        for omega in fundamental:
            value = pair(omega, beta)
            if value.denominator != 1:
                raise InvariantViolation(f"[RootSys] pareamento não inteiro: {value}")
            row.append(int(value))
        coroot_fw.append(tuple(row))

    gram = tuple(tuple(inner(u, v) for v in fundamental) for u in fundamental)
    root_form = tuple(tuple(inner(omega, beta) for omega in fundamental) for beta in positive)
    root_norms = tuple(inner(beta, beta) for beta in positive)

    shortest = min(root_norms)
    short_indices = [k for k, norm in enumerate(root_norms) if norm == shortest]
    highest_short = max(short_indices, key=lambda k: sum(coords[k]))
    rho = tuple([1] * rank)
    coxeter = sum(coroot_fw[highest_short]) + 1

    rs = RootSystem(
        type_label=type_label,
        rank=rank,
        scale=scale,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        cartan=cartan,
        cartan_inverse=cartan_inverse,
        rho=rho,
        coxeter_number=coxeter,
        highest_short_root=positive[highest_short],
        fundamental_weights=tuple(fundamental),
        root_coords=tuple(tuple(c) for c in coords),
        root_fw=root_fw,
        coroot_fw=tuple(coroot_fw),
        gram=gram,
        root_form=root_form,
        root_norms=root_norms,
        cartan_adjugate=adjugate,
        cartan_det=det,
        height_vector=tuple(sum(adjugate[i][j] for i in range(rank)) for j in range(rank)),
    )
    logger.info(f"[RootSys] ✅ {rs.label} construído: {len(positive)} raízes positivas, h={coxeter}")
    return memo.set(cache_key, rs)


def check_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Normaliza para tupla de inteiros e valida o comprimento"""
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise InvalidWeight(f"Peso {lam} tem comprimento {len(lam)}, posto de {rs.label} é {rs.rank}")
    return lam


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def to_euclidean(rs: RootSystem, lam: Sequence[int]) -> Vector:
    """Coordenadas fundamentais -> vetor euclidiano"""
    return _euclid(check_weight(rs, lam), rs.fundamental_weights)


def to_fundamental(rs: RootSystem, vec: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Vetor euclidiano -> coordenadas <v, alpha_i^vee>"""
    return tuple(2 * rs.inner(vec, alpha) / rs.inner(alpha, alpha) for alpha in rs.simple_roots)


def pairing(rs: RootSystem, lam: Sequence, alpha: Sequence[Fraction], euclidean: bool = False) -> Fraction:
    """2(lam, alpha)/(alpha, alpha); lam na base fundamental ou euclidiana"""
    k, sign = rs.root_index(alpha)
    if euclidean:
        vec = tuple(Fraction(x) for x in lam)
        if len(vec) != len(rs.simple_roots[0]):
            raise InvalidWeight(f"Vetor {lam} fora do espaço ambiente de {rs.label}")
        return 2 * rs.inner(vec, rs.positive_roots[k]) / rs.root_norms[k] * sign
    coords = tuple(Fraction(x) for x in lam)
    if len(coords) != rs.rank:
        raise InvalidWeight(f"Peso {lam} tem comprimento {len(coords)}, posto de {rs.label} é {rs.rank}")
    return sign * sum((x * c for x, c in zip(coords, rs.coroot_fw[k])), Fraction(0))


def reflect(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """Reflexão simples s_i (ação linear)"""
    c = lam[i]
    if c == 0:
        return lam
    return tuple(x - c * a for x, a in zip(lam, rs.simple_fw[i]))


def weyl_orbit(rs: RootSystem, lam: Sequence[int]) -> FrozenSet[Weight]:
    """Órbita de W por fechamento sob reflexões simples"""
    lam = check_weight(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(rs.rank):
                image = reflect(rs, i, nu)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return frozenset(seen)


def signed_orbit(rs: RootSystem, x: Sequence[int]) -> Dict[Weight, int]:
    """Órbita de um peso regular com det(w); a paridade da distância BFS é o comprimento de w"""
    x = check_weight(rs, x)
    signs = {x: 1}
    frontier = [x]
    while frontier:
        nxt = []
        for nu in frontier:
            for i in range(rs.rank):
                if nu[i] == 0:
                    raise InvalidWeight(f"{x} não é regular")
                image = reflect(rs, i, nu)
                if image not in signs:
                    signs[image] = -signs[nu]
                    nxt.append(image)
        frontier = nxt
    return signs


def dominant_conjugate(rs: RootSystem, lam: Weight) -> Weight:
    """Único peso dominante na órbita de lam"""
    while True:
        for i, c in enumerate(lam):
            if c < 0:
                lam = reflect(rs, i, lam)
                break
        else:
            return lam


def dominant_dot_representative(rs: RootSystem, lam: Sequence[int]) -> Tuple[Weight, int]:
    """
    Leva lam para D pela ação pontuada de reflexões simples

    Returns:
        (peso, det w); sinal 0 quando algum <lam + rho, alpha_i^vee> = 0
    """
    lam = check_weight(rs, lam)
    sign = 1
    while True:
        if any(x == -1 for x in lam):
            return lam, 0
        for i, c in enumerate(lam):
            if c < -1:
                shift = c + 1
                lam = tuple(x - shift * a for x, a in zip(lam, rs.simple_fw[i]))
                sign = -sign
                break
        else:
            return lam, sign


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """-w0(lam): inverte as coordenadas em A_n; identidade em B2"""
    lam = check_weight(rs, lam)
    if rs.type_label == "A":
        return tuple(reversed(lam))
    return lam


def describe(rs: RootSystem) -> Dict[str, object]:
    """Resumo serializável do sistema de raízes"""
    return {
        "type": rs.label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "cartan_inverse": [[str(x) for x in row] for row in rs.cartan_inverse],
        "positive_roots": [list(c) for c in rs.root_coords],
        "rho": list(rs.rho),
        "coxeter_number": rs.coxeter_number,
        "highest_short_root": list(rs.root_coords[rs.positive_roots.index(rs.highest_short_root)]),
    }


def simple_reflection_word(rs: RootSystem, lam: Weight) -> List[int]:
    """Palavra de reflexões simples usada por dominant_dot_representative (para testes de sinal)"""
    word = []
    lam = check_weight(rs, lam)
    while not any(x == -1 for x in lam):
        for i, c in enumerate(lam):
            if c < -1:
                shift = c + 1
                lam = tuple(x - shift * a for x, a in zip(lam, rs.simple_fw[i]))
                word.append(i)
                break
        else:
            break
    return word
