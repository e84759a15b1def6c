"""Sub-comandos de produtos tensoriais e classificação multiplicity-free"""

import logging

from pydantic import BaseModel

from classify import classify_pair
from errors import UndeterminedError
from rootsys import check_weight
from schemas import VerdictOut, outcome_out, verdict_out
from tensor import is_mf, mf_char0, tensor_factors
from verdicts import Verdict
from weylmod import Undetermined
from .common import CommandResult, add_type_args, common_parent, fmt_pairs, fmt_weight, parse_weight, root_system_from

logger = logging.getLogger(__name__)


class ComparisonOut(BaseModel):
    engine: VerdictOut
    oracle: VerdictOut
    agree: bool


def _pair(args, rs):
    return check_weight(rs, parse_weight(args.lhs)), check_weight(rs, parse_weight(args.rhs))


def _verdict_text(verdict: Verdict) -> str:
    text = verdict.value.value
    if verdict.witness is not None:
        text += f" (testemunha L{fmt_weight(verdict.witness)})"
    return text


def _engine_verdict(rs, lam, mu, p) -> Verdict:
    try:
        return is_mf(rs, lam, mu, p)
    except UndeterminedError as e:
        return Verdict.unknown(f"engine:{e.reason}")


def tensor_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam, mu = _pair(args, rs)
    try:
        outcome = tensor_factors(rs, lam, mu, args.p)
    except UndeterminedError as e:
        outcome = Undetermined(e.reason, tuple(e.weights))
    if isinstance(outcome, Undetermined):
        return CommandResult(outcome_out(outcome), f"Indeterminado: {outcome.reason}", undetermined=True)
    return CommandResult(outcome_out(outcome), "\n".join(fmt_pairs(outcome.factors)))


def mf_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam, mu = _pair(args, rs)
    if args.method == "oracle":
        verdict = classify_pair(rs, lam, mu, args.p)
    elif args.method == "engine":
        verdict = _engine_verdict(rs, lam, mu, args.p)
    else:
        engine = _engine_verdict(rs, lam, mu, args.p)
        oracle = classify_pair(rs, lam, mu, args.p)
        agree = engine.value == oracle.value
        out = ComparisonOut(engine=verdict_out(engine), oracle=verdict_out(oracle), agree=agree)
        text = f"engine: {_verdict_text(engine)}\noracle: {oracle.value.value} [{oracle.clause}]"
        return CommandResult(out, text, undetermined=not (engine.definite and oracle.definite))
    return CommandResult(verdict_out(verdict), _verdict_text(verdict), undetermined=not verdict.definite)


def mf_char0_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam, mu = _pair(args, rs)
    if mf_char0(rs, lam, mu):
        verdict = Verdict.free("char0")
    else:
        verdict = Verdict.has_multiplicity("char0")
    return CommandResult(verdict_out(verdict), verdict.value.value)


def classify_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam, mu = _pair(args, rs)
    verdict = classify_pair(rs, lam, mu, args.p)
    return CommandResult(verdict_out(verdict), f"{verdict.value.value} [{verdict.clause}]",
                         undetermined=not verdict.definite)


def register(subparsers):
    parent = common_parent()

    def pair_parser(name: str, help_text: str, with_p: bool = True):
        parser = subparsers.add_parser(name, parents=[parent], help=help_text)
        add_type_args(parser)
        if with_p:
            parser.add_argument("--p", type=int, required=True, help="Característica")
        parser.add_argument("--lhs", required=True, help="Peso a,b,...")
        parser.add_argument("--rhs", required=True, help="Peso c,d,...")
        return parser

    pair_parser("tensor", "Fatores de composição de L(λ) ⊗ L(μ)").set_defaults(handler=tensor_command)

    parser = pair_parser("mf", "L(λ) ⊗ L(μ) é multiplicity-free?")
    parser.add_argument("--method", choices=["engine", "oracle", "both"], default="engine")
    parser.set_defaults(handler=mf_command)

    pair_parser("mf-char0", "Multiplicity-freeness em característica 0", with_p=False).set_defaults(
        handler=mf_char0_command)
    pair_parser("classify", "Veredito do oráculo fechado e cláusula").set_defaults(handler=classify_command)
