from __future__ import annotations

from itertools import product

import pytest

from classify import (
    build_report, classify_pair, sl2_oracle, sl3_decomposition_oracle, sl3_matching_clauses, sl3_oracle,
    sln_p2_oracle, sp4_alcove_proposition, sp4_oracle, stembridge_char0_clause, stembridge_char0_oracle,
    verify_range,
)
from errors import InvalidWeight, UnsupportedRootSystem
from rootsys import build_root_system
from tensor import is_mf, is_mf_engine, mf_char0, tensor_factors
from verdicts import MFValue
from weights import restricted_weights

FREE = MFValue.MULTIPLICITY_FREE
HAS = MFValue.HAS_MULTIPLICITY
UNKNOWN = MFValue.UNKNOWN


def _pairs(rs, p):
    weights = restricted_weights(rs, p)
    return product(weights, weights)


def _open_sp4_family(lam, mu, p):
    """Pares das famílias de Sp4 que seguem em aberto"""
    if not any(lam) or not any(mu):
        return False
    if all(lam) and all(mu):
        return True
    if not all(lam):
        lam, mu = mu, lam
    if not all(lam):
        return False
    (a, b), (c, d) = lam, mu
    if c == 0:
        if d == 1:
            return False
        return not (b >= 2 and (2 * a + b + 2) % p != 0 and a + b != p - 1)
    return True


# ---------------------------------------------------------------- exemplos

def test_sl2_oracle_examples():
    assert sl2_oracle(3, 2, 7).value is FREE
    assert sl2_oracle(3, 4, 7).value is HAS
    assert sl2_oracle(4, 4, 3).value is FREE
    assert sl2_oracle(0, 9, 2).clause == "zero"
    assert sl2_oracle((10,), (5,), 3).clause == "sl2:layer0"


def test_sl3_oracle_examples():
    verdict = sl3_oracle((2, 0), (1, 0), 5)
    assert verdict.value is FREE and verdict.clause == "sl3:(1)"
    verdict = sl3_oracle((1, 0), (0, 4), 5)
    assert verdict.value is FREE and verdict.clause == "sl3:(3)"
    assert sl3_oracle((1, 1), (1, 1), 5).clause == "sl3:none"
    assert sl3_oracle((0, 0), (3, 3), 5).clause == "zero"


def test_sl3_oracle_padic_layers():
    # (6,0) = (1,0) + 5(1,0); (0,5) = (0,0) + 5(0,1)
    assert sl3_oracle((6, 0), (0, 5), 5).clause == "padic"
    assert sl3_oracle((6, 1), (1, 1), 5).clause == "padic:layer0:sl3:none"


def test_sl3_oracle_rejects_bad_weights():
    with pytest.raises(InvalidWeight):
        sl3_oracle((1, 0, 0), (1, 0), 5)
    with pytest.raises(InvalidWeight):
        sl3_oracle((-1, 2), (1, 0), 5)


def test_sp4_oracle_examples():
    assert sp4_oracle((0, 1), (0, 3), 5).clause == "sp4:0b⊗0d:(2)"
    assert sp4_oracle((2, 0), (2, 0), 5).clause == "sp4:a0⊗c0:(3)"
    verdict = sp4_oracle((1, 1), (2, 0), 5)
    assert verdict.value is UNKNOWN
    assert verdict.clause == "sp4:unresolved:ab⊗c0"
    assert sp4_oracle((1, 2), (2, 1), 5).clause == "sp4:unresolved:ab⊗cd"
    assert sp4_oracle((0, 1), (1, 1), 5).clause == "sp4:ab⊗01"


@pytest.mark.parametrize("p", [5, 7])
def test_sp4_a0_0d_edges(p):
    assert sp4_oracle((p - 1, 0), (0, 1), p).value is FREE
    assert sp4_oracle((p - 1, 0), (0, 2), p).value is HAS
    assert sp4_oracle((p - 2, 0), (0, 1), p).value is FREE
    assert sp4_oracle((1, 0), (0, p - 3), p).value is FREE
    assert sp4_oracle((1, 0), (0, p - 2), p).value is HAS
    assert sp4_oracle((1, 0), (0, p - 1), p).value is FREE
    assert sp4_oracle((0, p - 1), (1, 0), p).value is FREE


def test_sp4_oracle_requires_p_at_least_5():
    with pytest.raises(UnsupportedRootSystem):
        sp4_oracle((1, 0), (0, 1), 3)
    with pytest.raises(InvalidWeight):
        sp4_oracle((5, 0), (0, 1), 5)


def test_sln_p2_examples():
    assert sln_p2_oracle(4, (1, 0, 0, 0), (0, 1, 0, 1)).clause == "sln-p2:(1)"
    assert sln_p2_oracle(5, (0, 1, 0, 0, 0), (0, 0, 0, 0, 1)).clause == "sln-p2:(3)"
    assert sln_p2_oracle(4, (0, 1, 0, 0), (0, 0, 1, 0)).value is HAS
    # dual de omega_1 é omega_n
    assert sln_p2_oracle(4, (0, 0, 0, 1), (1, 0, 1, 0)).value is FREE
    with pytest.raises(InvalidWeight):
        sln_p2_oracle(3, (2, 0, 0), (1, 0, 0))


def test_stembridge_examples(a2, a3, b2):
    assert stembridge_char0_oracle(a2, (3, 0), (5, 7))
    assert stembridge_char0_clause(b2, (1, 0), (4, 4)) == "char0-B2:(2)"
    assert stembridge_char0_oracle(b2, (1, 1), (1, 1)) is False
    assert stembridge_char0_oracle(a3, (0, 1, 0), (2, 1, 3))
    assert stembridge_char0_oracle(a3, (1, 1, 0), (0, 1, 1)) is None


@pytest.mark.parametrize("label,rank", [("A", 1), ("A", 2), ("A", 3), ("B2", 2)])
def test_stembridge_zero_weight_is_free(label, rank):
    rs = build_root_system(label, rank)
    zero = (0,) * rank
    for lam in product(range(4), repeat=rank):
        assert stembridge_char0_clause(rs, zero, lam) == "zero"
        assert stembridge_char0_oracle(rs, lam, zero) is True
        assert mf_char0(rs, zero, lam)


def test_classify_pair_layers(a1, a2):
    assert classify_pair(a1, (4,), (4,), 3).clause == "padic"
    assert classify_pair(a1, (10,), (5,), 3).clause == "padic:layer0:sl2:layer0"
    assert classify_pair(a2, (1, 0), (0, 4), 5).clause == "sl3:(3)"
    with pytest.raises(InvalidWeight):
        classify_pair(a2, (1,), (0, 4), 5)


def test_classify_pair_propagates_unknown_layer(b2):
    verdict = classify_pair(b2, (6, 6), (2, 5), 5)
    assert verdict.value is UNKNOWN
    assert verdict.clause == "padic:layer0:sp4:unresolved:ab⊗c0"


def test_classify_pair_without_oracle(a3):
    with pytest.raises(UnsupportedRootSystem):
        classify_pair(a3, (1, 0, 0), (0, 1, 0), 5)


# ---------------------------------------------------------------- oráculo x motor

@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_sl2_classification_two_digits(a1, p):
    for lam in range(p * p):
        for mu in range(p * p):
            assert is_mf(a1, (lam,), (mu,), p).value is sl2_oracle(lam, mu, p).value, (lam, mu)


@pytest.mark.parametrize("p", [2, 3, 5, pytest.param(7, marks=pytest.mark.slow)])
def test_sl3_classification(a2, p):
    for lam, mu in _pairs(a2, p):
        engine = is_mf_engine(a2, lam, mu, p)
        assert engine.value is not UNKNOWN, (lam, mu)
        oracle = sl3_oracle(lam, mu, p)
        assert oracle.value is engine.value, (lam, mu, oracle.clause)
        # cláusulas sobrepostas nunca discordam
        if sl3_matching_clauses(lam, mu, p):
            assert engine.value is FREE


@pytest.mark.parametrize("p", [3, 5])
def test_sl3_decompositions_match_engine(a2, p):
    seen = set()
    for lam, mu in _pairs(a2, p):
        found = sl3_decomposition_oracle(lam, mu, p)
        if found is None:
            continue
        clause, expected = found
        seen.add(clause)
        assert tensor_factors(a2, lam, mu, p) == expected, (lam, mu, clause)
        assert expected.multiplicity_free
    assert "sl3-decomposition:(1)" in seen


def test_sl3_decomposition_named_case():
    clause, decomposition = sl3_decomposition_oracle((1, 0), (0, 4), 5)
    assert clause == "sl3-decomposition:(2)"
    assert decomposition.weights() == [(1, 4), (0, 3)]


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7])
def test_sp4_oracle_soundness(b2, p):
    unknown = 0
    for lam, mu in _pairs(b2, p):
        oracle = sp4_oracle(lam, mu, p)
        assert (oracle.value is UNKNOWN) == _open_sp4_family(lam, mu, p), (lam, mu)
        if oracle.value is UNKNOWN:
            unknown += 1
            continue
        engine = is_mf_engine(b2, lam, mu, p)
        assert engine.value is oracle.value, (lam, mu, oracle.clause)
    assert unknown > 0


@pytest.mark.parametrize("p", [5, 7])
def test_sp4_unknown_families_are_exact(p):
    b2 = build_root_system("B2", 2)
    for lam, mu in _pairs(b2, p):
        assert (sp4_oracle(lam, mu, p).value is UNKNOWN) == _open_sp4_family(lam, mu, p), (lam, mu)


def test_sp4_alcove_proposition(b2):
    applied = 0
    for lam, mu in _pairs(b2, 5):
        verdict = sp4_alcove_proposition(lam, mu, 5)
        if verdict is None:
            continue
        applied += 1
        assert is_mf_engine(b2, lam, mu, 5).value is HAS, (lam, mu)
    assert applied > 0


def test_sln_p2_rank2_against_engine(a2):
    for lam, mu in _pairs(a2, 2):
        engine = is_mf_engine(a2, lam, mu, 2)
        if engine.value is UNKNOWN:
            continue
        assert sln_p2_oracle(2, lam, mu).value is engine.value, (lam, mu)


def test_sln_p2_rank3_against_engine():
    report = verify_range("A", 3, 2, "oracle_vs_engine")
    assert report.total == 64
    assert report.mismatches == []
    assert report.oracle_unknown == 0


# ---------------------------------------------------------------- característica 0

@pytest.mark.parametrize("label,bound", [
    ("A", 4), ("B2", 3),
    pytest.param("A", 7, marks=pytest.mark.slow), pytest.param("B2", 6, marks=pytest.mark.slow),
])
def test_stembridge_against_char0(label, bound):
    rs = build_root_system(label, 2)
    weights = [(a, b) for a in range(bound) for b in range(bound)]
    for lam in weights:
        for mu in weights:
            assert stembridge_char0_oracle(rs, lam, mu) == mf_char0(rs, lam, mu), (lam, mu)


@pytest.mark.parametrize("n", [3, 4])
def test_stembridge_an_fundamental(n):
    rs = build_root_system("A", n)
    fundamental = tuple(1 if i == 1 else 0 for i in range(n))
    for lam in product(range(2), repeat=n):
        assert stembridge_char0_oracle(rs, fundamental, lam)
        assert mf_char0(rs, fundamental, lam)


# ---------------------------------------------------------------- relatórios

def test_verify_a2_p5():
    report = verify_range("A2", None, 5, "oracle_vs_engine")
    assert report.total == 625
    assert report.mismatches == []
    assert report.engine_unknown == 0
    assert sum(c.count for c in report.clause_counts) == 625


def test_verify_a1_p7_is_worker_independent():
    serial = verify_range("A1", None, 7, "oracle_vs_engine", workers=1)
    parallel = verify_range("A1", None, 7, "oracle_vs_engine", workers=2)
    assert serial.total == 49
    assert serial.mismatches == []
    assert serial.model_dump_json() == parallel.model_dump_json()


def test_verify_other_modes():
    tables = verify_range("A", 2, 5, "rank2_tables")
    assert tables.total == 25
    assert tables.agreements == 25
    char0 = verify_range("A2", None, 5, "char0_vs_oracle")
    assert char0.total == 625 and char0.mismatches == []
    b2_char0 = verify_range("B2", None, 3, "char0_vs_oracle")
    assert b2_char0.total == 81 and b2_char0.mismatches == []
    closure = verify_range("B2", None, 5, "char0_vs_engine_in_C1")
    assert closure.total > 0 and closure.mismatches == []
    decompositions = verify_range("A2", None, 5, "sl3_decompositions")
    assert decompositions.mismatches == []


@pytest.mark.slow
def test_verify_b2_p5_unknown_count(b2):
    report = verify_range("B2", None, 5, "oracle_vs_engine")
    assert report.total == 625
    assert report.mismatches == []
    expected = sum(1 for lam, mu in _pairs(b2, 5) if _open_sp4_family(lam, mu, 5))
    assert report.oracle_unknown == expected


def test_verify_rejects_bad_modes():
    with pytest.raises(InvalidWeight):
        verify_range("A2", None, 5, "everything")
    with pytest.raises(UnsupportedRootSystem):
        verify_range("A1", None, 5, "rank2_tables")


def test_build_report_ignores_unknown():
    rows = [
        {"lhs": (1, 1), "rhs": (2, 0), "expected": "Unknown", "actual": "HasMultiplicity", "clause": "x"},
        {"lhs": (0, 1), "rhs": (0, 1), "expected": "MultiplicityFree", "actual": "MultiplicityFree", "clause": "y"},
        {"lhs": (0, 1), "rhs": (0, 2), "expected": "MultiplicityFree", "actual": "HasMultiplicity", "clause": "y"},
    ]
    report = build_report("B2", 5, "oracle_vs_engine", rows)
    assert report.total == 3
    assert report.agreements == 1
    assert report.oracle_unknown == 1
    assert [(m.lhs, m.rhs) for m in report.mismatches] == [([0, 1], [0, 2])]
    assert [(c.clause, c.count) for c in report.clause_counts] == [("x", 1), ("y", 2)]
    empty = build_report("A1", 3, "oracle_vs_engine", [])
    assert empty.total == 0
