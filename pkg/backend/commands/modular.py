"""Sub-comandos em característica p: soma de Jantzen, fatores de Δ(λ) e caracteres simples"""

import logging
from typing import List

from pydantic import BaseModel

from chars import descending, dominant_part
from errors import UndeterminedError
from rootsys import check_weight
from schemas import CharacterOut, UndeterminedOut, outcome_out, terms_out
from weylmod import Undetermined, jantzen_weyl_terms, simple_char, weyl_composition_factors
from .common import CommandResult, add_type_args, common_parent, fmt_pairs, fmt_weight, parse_weight, root_system_from

logger = logging.getLogger(__name__)


class WeylTerm(BaseModel):
    weight: List[int]
    coefficient: int


class JantzenOut(BaseModel):
    terms: List[WeylTerm]


def _undetermined(reason: str, weights) -> CommandResult:
    out = UndeterminedOut(reason=reason, weights=[list(w) for w in weights])
    return CommandResult(out, f"Indeterminado: {reason}", undetermined=True)


def jantzen_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam = check_weight(rs, parse_weight(args.highest))
    terms = descending(rs, jantzen_weyl_terms(rs, lam, args.p).items())
    out = JantzenOut(terms=[WeylTerm(weight=list(w), coefficient=c) for w, c in terms])
    if not terms:
        return CommandResult(out, f"JSF{fmt_weight(lam)} = 0 (Δ simples)")
    return CommandResult(out, "\n".join(f"{c:+d} χ{fmt_weight(w)}" for w, c in terms))


def weyl_factors_command(args) -> CommandResult:
    rs = root_system_from(args)
    outcome = weyl_composition_factors(rs, parse_weight(args.highest), args.p)
    if isinstance(outcome, Undetermined):
        return _undetermined(outcome.reason, outcome.weights)
    return CommandResult(outcome_out(outcome), "\n".join(fmt_pairs(outcome.factors)))


def simple_char_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam = check_weight(rs, parse_weight(args.highest))
    try:
        character = simple_char(rs, lam, args.p)
    except UndeterminedError as e:
        logger.info(f"[CLI] ❌ L{fmt_weight(lam)} indeterminado em p={args.p}")
        return _undetermined(e.reason, e.weights)
    items = descending(rs, dominant_part(character).items())
    out = CharacterOut(dimension=character.dimension(), terms=terms_out(items))
    lines = [f"dim L{fmt_weight(lam)} = {out.dimension}"]
    lines += [f"{fmt_weight(w)}: {m}" for w, m in items]
    return CommandResult(out, "\n".join(lines))


def register(subparsers):
    parent = common_parent()
    commands = [
        ("jantzen", "Soma de Jantzen na base de caracteres de Weyl", jantzen_command),
        ("weyl-factors", "Fatores de composição de Δ(λ), λ p-restrito", weyl_factors_command),
        ("simple-char", "Caráter de L(λ) (pesos dominantes)", simple_char_command),
    ]
    for name, help_text, handler in commands:
        parser = subparsers.add_parser(name, parents=[parent], help=help_text)
        add_type_args(parser)
        parser.add_argument("--p", type=int, required=True, help="Característica")
        parser.add_argument("--highest", required=True, help="Peso máximo a,b,...")
        parser.set_defaults(handler=handler)
