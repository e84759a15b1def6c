"""Sub-comandos de característica 0: sistema de raízes, caracteres de Weyl e multiplicidades"""

import logging

from pydantic import BaseModel

from chars import descending, dominant_multiplicities, weight_multiplicity, weyl_dim
from errors import UndeterminedError, UsageError
from rootsys import check_weight
from schemas import CharacterOut, UndeterminedOut, WeightMultiplicity, root_system_out, terms_out
from weylmod import simple_char
from .common import CommandResult, add_type_args, common_parent, fmt_weight, parse_weight, root_system_from

logger = logging.getLogger(__name__)


class DimensionOut(BaseModel):
    dimension: int


def rootsys_command(args) -> CommandResult:
    rs = root_system_from(args)
    out = root_system_out(rs)
    lines = [
        f"Tipo: {out.type} (posto {out.rank})",
        "Cartan: " + "; ".join(" ".join(str(x) for x in row) for row in out.cartan),
        "Raízes positivas: " + " ".join(fmt_weight(r) for r in out.positive_roots),
        f"rho: {fmt_weight(out.rho)}",
        f"Número de Coxeter: {out.coxeter_number}",
        f"Maior raiz curta: {fmt_weight(out.highest_short_root)}",
    ]
    return CommandResult(out, "\n".join(lines))


def weyl_char_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam = check_weight(rs, parse_weight(args.highest))
    items = descending(rs, dominant_multiplicities(rs, lam).items())
    out = CharacterOut(dimension=weyl_dim(rs, lam), terms=terms_out(items))
    lines = [f"dim Δ{fmt_weight(lam)} = {out.dimension}"]
    lines += [f"{fmt_weight(w)}: {m}" for w, m in items]
    return CommandResult(out, "\n".join(lines))


def weyl_dim_command(args) -> CommandResult:
    rs = root_system_from(args)
    dimension = weyl_dim(rs, parse_weight(args.highest))
    return CommandResult(DimensionOut(dimension=dimension), str(dimension))


def weight_mult_command(args) -> CommandResult:
    rs = root_system_from(args)
    lam = parse_weight(args.highest)
    nu = check_weight(rs, parse_weight(args.weight))
    if args.simple:
        if args.p is None:
            raise UsageError("--simple exige --p")
        try:
            mult = simple_char(rs, lam, args.p)[nu]
        except UndeterminedError as e:
            out = UndeterminedOut(reason=e.reason, weights=[list(w) for w in e.weights])
            return CommandResult(out, f"Indeterminado: {e.reason}", undetermined=True)
    else:
        mult = weight_multiplicity(rs, lam, nu)
    return CommandResult(WeightMultiplicity(weight=list(nu), mult=mult), str(mult))


def register(subparsers):
    parent = common_parent()

    parser = subparsers.add_parser("rootsys", parents=[parent], help="Resumo do sistema de raízes")
    add_type_args(parser)
    parser.set_defaults(handler=rootsys_command)

    parser = subparsers.add_parser("weyl-char", parents=[parent], help="Pesos dominantes de Δ(λ) e multiplicidades")
    add_type_args(parser)
    parser.add_argument("--highest", required=True, help="Peso máximo a,b,...")
    parser.set_defaults(handler=weyl_char_command)

    parser = subparsers.add_parser("weyl-dim", parents=[parent], help="Dimensão de Δ(λ)")
    add_type_args(parser)
    parser.add_argument("--highest", required=True)
    parser.set_defaults(handler=weyl_dim_command)

    parser = subparsers.add_parser("weight-mult", parents=[parent], help="Multiplicidade de peso em Δ(λ) ou L(λ)")
    add_type_args(parser)
    parser.add_argument("--highest", required=True)
    parser.add_argument("--weight", required=True)
    parser.add_argument("--p", type=int, default=None, help="Característica (com --simple)")
    parser.add_argument("--simple", action="store_true", help="Multiplicidade em L(λ) em vez de Δ(λ)")
    parser.set_defaults(handler=weight_mult_command)
