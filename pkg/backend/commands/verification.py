"""Sub-comando verify: varredura exaustiva oráculo x motor"""

import logging

from classify import MODES, verify_range
from schemas import VerifyReport
from .common import CommandResult, add_type_args, common_parent, fmt_weight

logger = logging.getLogger(__name__)


def render_report(report: VerifyReport) -> str:
    lines = [
        f"{report.type} p={report.p} modo={report.mode}",
        f"casos: {report.total}",
        f"concordâncias: {report.agreements}",
        f"divergências: {len(report.mismatches)}",
        f"Unknown (oráculo): {report.oracle_unknown}",
        f"Unknown (motor): {report.engine_unknown}",
    ]
    for row in report.verdict_counts:
        lines.append(f"  {row.expected} / {row.actual}: {row.count}")
    for row in report.mismatches:
        lines.append(f"  ❌ {fmt_weight(row.lhs)} ⊗ {fmt_weight(row.rhs)}: "
                     f"esperado {row.expected}, obtido {row.actual} [{row.clause}]")
    return "\n".join(lines)


def verify_command(args) -> CommandResult:
    report = verify_range(args.type_label, args.rank, args.p, args.mode, workers=args.workers)
    return CommandResult(report, render_report(report), undetermined=report.engine_unknown > 0)


def register(subparsers):
    parser = subparsers.add_parser("verify", parents=[common_parent()], help="Relatório de verificação")
    add_type_args(parser)
    parser.add_argument("--p", type=int, required=True, help="Característica")
    parser.add_argument("--mode", choices=list(MODES), default="oracle_vs_engine")
    parser.add_argument("--workers", type=int, default=None, help="Processos (padrão: MODREP_WORKERS)")
    parser.set_defaults(handler=verify_command)
