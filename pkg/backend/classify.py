"""
Oráculos de classificação multiplicity-free em forma fechada
e verificação exaustiva oráculo x motor
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union
import logging

import pandas as pd

from config import settings
from errors import InvalidWeight, UnsupportedRootSystem
from rootsys import RootSystem, Weight, build_root_system, is_dominant, parse_type
from schemas import ClauseCount, MismatchEntry, VerdictCount, VerifyReport
from tensor import is_mf_engine, mf_char0, tensor_factors
from verdicts import MFValue, Verdict
from weights import in_fundamental_closure, p_adic_expand, rank2_alcove_name, restricted_weights
from weylmod import Decomposition, Undetermined, make_decomposition, rank2_factor_oracle, weyl_composition_factors

logger = logging.getLogger(__name__)

Oracle = Callable[[Weight, Weight], Verdict]

A2_ALPHA1 = (2, -1)
A2_ALPHA2 = (-1, 2)
A2_RHO = (1, 1)

MODES = ("oracle_vs_engine", "char0_vs_engine_in_C1", "rank2_tables", "sl3_decompositions", "char0_vs_oracle")


def _as_weight(lam: Union[int, Sequence[int]]) -> Weight:
    if isinstance(lam, int):
        return (lam,)
    return tuple(int(x) for x in lam)


def _restricted(lam: Weight, p: int) -> bool:
    return is_dominant(lam) and all(x < p for x in lam)


def _require_restricted(lam: Weight, p: int):
    if not _restricted(lam, p):
        raise InvalidWeight(f"{lam} não é dominante {p}-restrito")


# ---------------------------------------------------------------- SL2

def sl2_oracle(lam: Union[int, Sequence[int]], mu: Union[int, Sequence[int]], p: int) -> Verdict:
    """MF sse lam_i + mu_i < p em toda camada p-ádica"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    if not any(lam) or not any(mu):
        return Verdict.free("zero")
    left, right = p_adic_expand(lam, p).layers, p_adic_expand(mu, p).layers
    for i in range(max(len(left), len(right))):
        a = left[i][0] if i < len(left) else 0
        b = right[i][0] if i < len(right) else 0
        if a + b >= p:
            return Verdict.has_multiplicity(f"sl2:layer{i}")
    return Verdict.free("sl2")


# ---------------------------------------------------------------- SL3

def _sl3_ordered_clauses(lam: Weight, mu: Weight, p: int) -> List[int]:
    (a, b), (c, d) = lam, mu
    checks = {
        1: b == 0 and d == 0 and a + c < p,
        2: a == 0 and c == 0 and b + d < p,
        3: b == 0 and c == 0 and (a + d < p - 1 or (a, d) in ((p - 1, 1), (1, p - 1))),
        4: b == 0 and a + c + d < p - 1,
        5: a == 0 and b + c + d < p - 1,
        6: b == 0 and c + d == p - 1 and a + c < p and a < c + 2,
        7: a == 0 and c + d == p - 1 and b + d < p and b < d + 2,
        8: b == 0 and c + d > p - 1 and a + c < p and a + d < p,
        9: a == 0 and c + d > p - 1 and b + c < p and b + d < p,
        10: a + b < p - 1 and c + d == p - 1 and a + b + c < p and a + b + d < p,
    }
    return [n for n, holds in checks.items() if holds]


def _a2_variants(lam: Weight, mu: Weight) -> List[Tuple[Weight, Weight, bool]]:
    """Reordenações e duais: (lam', mu', dualizado)"""
    dual_lam, dual_mu = (lam[1], lam[0]), (mu[1], mu[0])
    return [(lam, mu, False), (mu, lam, False), (dual_lam, dual_mu, True), (dual_mu, dual_lam, True)]


def sl3_matching_clauses(lam: Sequence[int], mu: Sequence[int], p: int) -> List[int]:
    """Todas as cláusulas (1)-(10) satisfeitas por alguma reordenação/dualização"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    found = set()
    for left, right, _ in _a2_variants(lam, mu):
        found.update(_sl3_ordered_clauses(left, right, p))
    return sorted(found)


def sl3_oracle(lam: Sequence[int], mu: Sequence[int], p: int) -> Verdict:
    """Classificação de SL3: MF sse alguma cláusula (1)-(10) vale"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    if len(lam) != 2 or len(mu) != 2 or not is_dominant(lam) or not is_dominant(mu):
        raise InvalidWeight(f"Pesos dominantes de A2 esperados: {lam}, {mu}")
    if not any(lam) or not any(mu):
        return Verdict.free("zero")
    if not (_restricted(lam, p) and _restricted(mu, p)):
        left, right = p_adic_expand(lam, p).layers, p_adic_expand(mu, p).layers
        zero = (0, 0)
        for i in range(max(len(left), len(right))):
            layer = sl3_oracle(left[i] if i < len(left) else zero, right[i] if i < len(right) else zero, p)
            if layer.value is MFValue.HAS_MULTIPLICITY:
                return Verdict.has_multiplicity(f"padic:layer{i}:{layer.clause}")
        return Verdict.free("padic")
    clauses = sl3_matching_clauses(lam, mu, p)
    if clauses:
        return Verdict.free(f"sl3:({clauses[0]})")
    return Verdict.has_multiplicity("sl3:none")


def _shift(base: Weight, i: int, j: int) -> Weight:
    return tuple(x - i * s - j * t for x, s, t in zip(base, A2_ALPHA1, A2_ALPHA2))


def _sl3_ordered_decomposition(lam: Weight, mu: Weight, p: int) -> Optional[Tuple[int, List[Weight]]]:
    (a, b), (c, d) = lam, mu
    top = (a + c, b + d)
    if b == 0 and d == 0 and a + c < p and a <= c:
        return 1, [_shift(top, i, 0) for i in range(a + 1)]
    if b == 0 and c == 0 and a <= d and (a + d < p - 1 or (a, d) == (1, p - 1)):
        return 2, [tuple(x - i * r for x, r in zip(top, A2_RHO)) for i in range(a + 1)]
    if b == 0 and a + c + d < p - 1:
        return 3, [_shift(top, i, j) for i in range(a + 1) for j in range(max(0, i - c), min(i, d) + 1)]
    if b == 0 and c + d == p - 1 and a + c < p and a <= c:
        return 4, [_shift(top, i, 0) for i in range(a + 1)]
    if b == 0 and c + d == p - 1 and a + c < p and a == c + 1:
        return 5, [_shift(top, a, 1)] + [_shift(top, i, 0) for i in range(c + 1)]
    if b == 0 and c + d > p - 1 and a + c < p and a + d < p:
        theta = c + d + 2 - p
        return 6, [_shift(top, i, j) for i in range(a + 1) for j in range(min(i, theta - 1) + 1)]
    if a * b * c * d != 0 and a + b < p - 1 and c + d == p - 1 and a + b + c < p and a + b + d < p:
        return 7, [_shift(top, i, k) for k in range(b + 1) for i in range(a + 1)]
    return None


def sl3_decomposition_oracle(lam: Sequence[int], mu: Sequence[int], p: int) -> Optional[Tuple[str, Decomposition]]:
    """Decomposições explícitas das famílias multiplicity-free de SL3 (None fora delas)"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    if not any(lam) or not any(mu) or not (_restricted(lam, p) and _restricted(mu, p)):
        return None
    rs = build_root_system("A", 2)
    for left, right, dualized in _a2_variants(lam, mu):
        found = _sl3_ordered_decomposition(left, right, p)
        if found is None:
            continue
        case, weights = found
        if dualized:
            weights = [(w[1], w[0]) for w in weights]
        return f"sl3-decomposition:({case})", make_decomposition(rs, [(w, 1) for w in weights])
    return None


# ---------------------------------------------------------------- Sp4

def _sp4_0b_0d(b: int, d: int, p: int) -> Verdict:
    if b + d <= p - 3:
        return Verdict.free("sp4:0b⊗0d:(1)")
    if (b, d) in ((1, p - 2), (p - 2, 1)):
        return Verdict.free("sp4:0b⊗0d:(2)")
    return Verdict.has_multiplicity("sp4:0b⊗0d")


def _sp4_a0_c0(a: int, c: int, p: int) -> Verdict:
    a, c = min(a, c), max(a, c)
    if 2 * (a + c) <= p - 3:
        return Verdict.free("sp4:a0⊗c0:(1)")
    if 2 * c >= p - 1 and a + c < p - 1:
        return Verdict.free("sp4:a0⊗c0:(2)")
    if 2 * a == p - 1 and a == c:
        return Verdict.free("sp4:a0⊗c0:(3)")
    return Verdict.has_multiplicity("sp4:a0⊗c0")


def _sp4_a0_0d(a: int, d: int, p: int) -> Verdict:
    if a == p - 1:
        return Verdict.free("sp4:a0⊗0d:a=p-1") if d == 1 else Verdict.has_multiplicity("sp4:a0⊗0d:a=p-1")
    if a == p - 2:
        return Verdict.free("sp4:a0⊗0d:a=p-2") if d == 1 else Verdict.has_multiplicity("sp4:a0⊗0d:a=p-2")
    if 2 * a >= p - 1:
        if a + d <= p - 2:
            return Verdict.free("sp4:a0⊗0d:C2+")
        return Verdict.has_multiplicity("sp4:a0⊗0d:C2+")
    # a <= (p-3)/2
    if 2 * a + d <= p - 3:
        return Verdict.free("sp4:a0⊗0d:C1")
    if d <= p - 3:
        if (a, d) == (1, p - 3):
            return Verdict.free("sp4:a0⊗0d:C1-wall")
        return Verdict.has_multiplicity("sp4:a0⊗0d:C1-wall")
    if d == p - 2:
        return Verdict.has_multiplicity("sp4:a0⊗0d:d=p-2")
    if a == 1:
        return Verdict.free("sp4:a0⊗0d:d=p-1")
    return Verdict.has_multiplicity("sp4:a0⊗0d:d=p-1")


def sp4_oracle(lam: Sequence[int], mu: Sequence[int], p: int) -> Verdict:
    """
    Classificação parcial de Sp4 (p >= 5), três valores

    Famílias resolvidas: a.b = 0 e c.d = 0; (a,b)⊗(0,1); o critério de
    multiplicidade para (a,b)⊗(0,d). As famílias em aberto devolvem Unknown.
    """
    if p < 5:
        raise UnsupportedRootSystem("Oráculo de Sp4 exige p >= 5")
    lam, mu = _as_weight(lam), _as_weight(mu)
    for w in (lam, mu):
        if len(w) != 2:
            raise InvalidWeight(f"Peso de B2 esperado: {w}")
        _require_restricted(w, p)
    if not any(lam) or not any(mu):
        return Verdict.free("zero")
    (a, b), (c, d) = lam, mu
    if b == 0 and d == 0:
        return _sp4_a0_c0(a, c, p)
    if a == 0 and c == 0:
        return _sp4_0b_0d(b, d, p)
    if b == 0 and c == 0:
        return _sp4_a0_0d(a, d, p)
    if a == 0 and d == 0:
        return _sp4_a0_0d(c, b, p)
    if a and b and c and d:
        return Verdict.unknown("sp4:unresolved:ab⊗cd")
    if not (a and b):
        (a, b), (c, d) = mu, lam
    # agora lam = (a,b) com a,b != 0 e mu tem uma coordenada nula
    if (c, d) == (0, 1):
        name = rank2_alcove_name(build_root_system("B2", 2), (a, b), p)
        if name in ("C1", "C2", "C3", "C4"):
            return Verdict.free("sp4:ab⊗01")
        return Verdict.has_multiplicity("sp4:ab⊗01")
    if c == 0:
        if b >= 2 and (2 * a + b + 2) % p != 0 and a + b != p - 1:
            return Verdict.has_multiplicity("sp4:ab⊗0d")
        return Verdict.unknown("sp4:unresolved:ab⊗0d")
    return Verdict.unknown("sp4:unresolved:ab⊗c0")


def sp4_alcove_proposition(lam: Sequence[int], mu: Sequence[int], p: int) -> Optional[Verdict]:
    """
    lam em C2, mu no fecho de C1 e lam + mu em C3 (em qualquer ordem): tem multiplicidade

    Critério avulso: sp4_oracle não o consulta.
    """
    rs = build_root_system("B2", 2)
    lam, mu = _as_weight(lam), _as_weight(mu)
    for left, right in ((lam, mu), (mu, lam)):
        total = tuple(x + y for x, y in zip(left, right))
        if (rank2_alcove_name(rs, left, p) == "C2" and in_fundamental_closure(rs, right, p)
                and rank2_alcove_name(rs, total, p) == "C3"):
            return Verdict.has_multiplicity("sp4:C2⊗C1->C3")
    return None


# ---------------------------------------------------------------- SL_n, p = 2

def _support(lam: Weight) -> List[int]:
    return [i + 1 for i, x in enumerate(lam) if x]


def _sln_p2_ordered(n: int, lam: Weight, mu: Weight) -> Optional[int]:
    left, right = _support(lam), _support(mu)
    if left == [1] and right and all(i % 2 == 0 for i in right):
        return 1
    if left == [n] and right and all(i < n and (n + 1 - i) % 2 == 0 for i in right):
        return 2
    if n >= 3 and left == [2] and len(right) == 1 and 2 < right[0] <= n and (right[0] - 2) % 4 == 3:
        return 3
    if n >= 2 and left == [n - 1] and len(right) == 1 and 1 <= right[0] < n - 1 and (n - 1 - right[0]) % 4 == 3:
        return 4
    return None


def sln_p2_oracle(n: int, lam: Sequence[int], mu: Sequence[int]) -> Verdict:
    """Classificação de SL_{n+1} em característica 2 (reordenação e dualidade)"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    for w in (lam, mu):
        if len(w) != n or any(x not in (0, 1) for x in w):
            raise InvalidWeight(f"Peso 2-restrito de A{n} esperado: {w}")
    if not any(lam) or not any(mu):
        return Verdict.free("zero")
    dual_lam, dual_mu = tuple(reversed(lam)), tuple(reversed(mu))
    for left, right in ((lam, mu), (mu, lam), (dual_lam, dual_mu), (dual_mu, dual_lam)):
        clause = _sln_p2_ordered(n, left, right)
        if clause is not None:
            return Verdict.free(f"sln-p2:({clause})")
    return Verdict.has_multiplicity("sln-p2:none")


# ---------------------------------------------------------------- característica 0

def _b2_char0_ordered(lam: Weight, mu: Weight) -> Optional[int]:
    (a, b), (c, d) = lam, mu
    checks = [
        (1, a == 0 and b == 1),
        (2, a == 1 and b == 0),
        (3, a == 0 and d == 0),
        (4, a == 0 and c == 0),
        (5, b == 0 and d == 1),
        (6, b == 0 and d == 0),
    ]
    for number, holds in checks:
        if holds:
            return number
    return None


def stembridge_char0_clause(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Optional[str]:
    """Cláusula de multiplicity-freeness em característica 0 satisfeita pelo par, se houver"""
    lam, mu = _as_weight(lam), _as_weight(mu)
    if not any(lam) or not any(mu):
        return "zero"
    for left, right in ((lam, mu), (mu, lam)):
        if rs.type_label == "B2":
            number = _b2_char0_ordered(left, right)
            if number is not None:
                return f"char0-B2:({number})"
        elif rs.rank == 1:
            return "char0-A1"
        elif rs.rank == 2:
            if left[0] * left[1] * right[0] * right[1] == 0:
                return "char0-A2"
        elif sum(left) <= 1:
            return "char0-An:fundamental"
    return None


def stembridge_char0_oracle(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Optional[bool]:
    """
    Multiplicity-freeness de L_C(lam) ⊗ L_C(mu) pelos teoremas de característica 0

    Exato para A1, A2 e B2; para A_n (n >= 3) só decide o caso de um peso
    fundamental (ou nulo) e devolve None nos demais.
    """
    clause = stembridge_char0_clause(rs, lam, mu)
    if clause is not None:
        return True
    if rs.type_label == "A" and rs.rank >= 3:
        return None
    return False


# ---------------------------------------------------------------- verificação

def select_oracle(rs: RootSystem, p: int) -> Oracle:
    """Oráculo fechado aplicável ao tipo e à característica"""
    if rs.type_label == "B2":
        return lambda lam, mu: sp4_oracle(lam, mu, p)
    if rs.rank == 1:
        return lambda lam, mu: sl2_oracle(lam, mu, p)
    if rs.rank == 2:
        return lambda lam, mu: sl3_oracle(lam, mu, p)
    if p == 2:
        return lambda lam, mu: sln_p2_oracle(rs.rank, lam, mu)
    raise UnsupportedRootSystem(f"Sem oráculo para {rs.label} com p={p}")


def classify_pair(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], p: int) -> Verdict:
    """Oráculo aplicado camada a camada na expansão p-ádica (pesos quaisquer)"""
    oracle = select_oracle(rs, p)
    lam, mu = _as_weight(lam), _as_weight(mu)
    if len(lam) != rs.rank or len(mu) != rs.rank or not is_dominant(lam) or not is_dominant(mu):
        raise InvalidWeight(f"Pesos dominantes de {rs.label} esperados: {lam}, {mu}")
    if _restricted(lam, p) and _restricted(mu, p):
        return oracle(lam, mu)
    left, right = p_adic_expand(lam, p).layers, p_adic_expand(mu, p).layers
    zero = tuple([0] * rs.rank)
    unknown = None
    for i in range(max(len(left), len(right))):
        layer = oracle(left[i] if i < len(left) else zero, right[i] if i < len(right) else zero)
        if layer.value is MFValue.HAS_MULTIPLICITY:
            return Verdict.has_multiplicity(f"padic:layer{i}:{layer.clause}")
        if layer.value is MFValue.UNKNOWN and unknown is None:
            unknown = Verdict.unknown(f"padic:layer{i}:{layer.clause}")
    logger.debug(f"[Classify] {rs.label} p={p} {lam}⊗{mu}: {len(left)}/{len(right)} camadas")
    return unknown or Verdict.free("padic")


def _pair_rows(task) -> List[Dict[str, object]]:
    """Linhas de verificação para um bloco de pares (executado em worker)"""
    type_label, rank, p, mode, lhs_block, rhs_all = task
    rs = build_root_system(type_label, rank)
    rows = []
    if mode == "oracle_vs_engine":
        oracle = select_oracle(rs, p)
        for lam in lhs_block:
            for mu in rhs_all:
                expected = oracle(lam, mu)
                actual = is_mf_engine(rs, lam, mu, p)
                rows.append(_row(lam, mu, expected.value.value, actual.value.value, expected.clause))
    elif mode == "char0_vs_engine_in_C1":
        for lam in lhs_block:
            for mu in rhs_all:
                total = tuple(x + y for x, y in zip(lam, mu))
                if not in_fundamental_closure(rs, total, p):
                    continue
                expected = MFValue.MULTIPLICITY_FREE if mf_char0(rs, lam, mu) else MFValue.HAS_MULTIPLICITY
                actual = is_mf_engine(rs, lam, mu, p)
                rows.append(_row(lam, mu, expected.value, actual.value.value, "char0"))
    elif mode == "char0_vs_oracle":
        for lam in lhs_block:
            for mu in rhs_all:
                expected = stembridge_char0_oracle(rs, lam, mu)
                expected_value = "Unknown" if expected is None else _bool_value(expected)
                actual = _bool_value(mf_char0(rs, lam, mu))
                rows.append(_row(lam, mu, expected_value, actual, stembridge_char0_clause(rs, lam, mu) or "none"))
    elif mode == "sl3_decompositions":
        for lam in lhs_block:
            for mu in rhs_all:
                found = sl3_decomposition_oracle(lam, mu, p)
                if found is None:
                    continue
                clause, expected = found
                actual = tensor_factors(rs, lam, mu, p)
                same = isinstance(actual, Decomposition) and actual == expected
                rows.append(_row(lam, mu, "MultiplicityFree", "MultiplicityFree" if same else "Different", clause))
    elif mode == "rank2_tables":
        for lam in lhs_block:
            expected = rank2_factor_oracle(rs, lam, p)
            actual = weyl_composition_factors(rs, lam, p)
            if isinstance(actual, Undetermined):
                actual_value = "Unknown"
            else:
                actual_value = "Same" if actual == expected else "Different"
            rows.append(_row(lam, (), "Same", actual_value, rank2_alcove_name(rs, lam, p) or "-"))
    else:
        raise InvalidWeight(f"Modo de verificação desconhecido: {mode}")
    return rows


def _bool_value(flag: bool) -> str:
    return MFValue.MULTIPLICITY_FREE.value if flag else MFValue.HAS_MULTIPLICITY.value


def _row(lam, mu, expected: str, actual: str, clause: str) -> Dict[str, object]:
    return {"lhs": tuple(lam), "rhs": tuple(mu), "expected": expected, "actual": actual, "clause": clause}


def verify_range(type_label: str, rank: Optional[int], p: int, mode: str, workers: Optional[int] = None) -> VerifyReport:
    """
    Compara oráculo e motor em todos os pares p-restritos

    O relatório é ordenado por (lhs, rhs), independente do número de workers.
    """
    if mode not in MODES:
        raise InvalidWeight(f"Modo de verificação desconhecido: {mode}")
    rs = build_root_system(*parse_type(type_label, rank))
    workers = workers or settings.workers
    weights = restricted_weights(rs, p)
    rhs_all = [] if mode == "rank2_tables" else weights
    if mode == "rank2_tables" and rs.rank != 2:
        raise UnsupportedRootSystem(f"Tabelas de posto 2 não se aplicam a {rs.label}")
    tasks = [(rs.type_label, rs.rank, p, mode, [lam], rhs_all) for lam in weights]
    logger.info(f"[Verify] {rs.label} p={p} modo={mode}: {len(tasks)} blocos, {workers} worker(s)")

    rows: List[Dict[str, object]] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block in pool.map(_pair_rows, tasks):
                rows.extend(block)
    else:
        for task in tasks:
            rows.extend(_pair_rows(task))

    report = build_report(rs.label, p, mode, rows)
    marker = "✅" if not report.mismatches else "❌"
    logger.info(f"[Verify] {marker} {report.total} casos, {len(report.mismatches)} divergências")
    return report


def _is_mismatch(expected: str, actual: str) -> bool:
    if expected == "Unknown" or actual == "Unknown":
        return False
    return expected != actual


def build_report(label: str, p: int, mode: str, rows: List[Dict[str, object]]) -> VerifyReport:
    """Agrega as linhas com pandas e monta o relatório ordenado"""
    columns = ["lhs", "rhs", "expected", "actual", "clause"]
    # ordem determinística por (lhs, rhs)
    rows = sorted(rows, key=lambda r: (r["lhs"], r["rhs"]))
    df = pd.DataFrame(rows, columns=columns)
    if df.empty:
        return VerifyReport(type=label, p=p, mode=mode, total=0, agreements=0, mismatches=[],
                            oracle_unknown=0, engine_unknown=0, verdict_counts=[], clause_counts=[])
    df["mismatch"] = [_is_mismatch(e, a) for e, a in zip(df["expected"], df["actual"])]

    verdicts = df.groupby(["expected", "actual"]).size().reset_index(name="n")
    clauses = df.groupby("clause").size().reset_index(name="n")
    mismatches = df[df["mismatch"]]
    return VerifyReport(
        type=label,
        p=p,
        mode=mode,
        total=int(len(df)),
        agreements=int(((df["expected"] == df["actual"]) & ~df["mismatch"]).sum()),
        mismatches=[
            MismatchEntry(lhs=list(r.lhs), rhs=list(r.rhs), expected=r.expected, actual=r.actual, clause=r.clause)
            for r in mismatches.itertuples(index=False)
        ],
        oracle_unknown=int((df["expected"] == "Unknown").sum()),
        engine_unknown=int((df["actual"] == "Unknown").sum()),
        verdict_counts=[
            VerdictCount(expected=r.expected, actual=r.actual, count=int(r.n))
            for r in verdicts.sort_values(["expected", "actual"]).itertuples(index=False)
        ],
        clause_counts=[
            ClauseCount(clause=r.clause, count=int(r.n))
            for r in clauses.sort_values("clause").itertuples(index=False)
        ],
    )
