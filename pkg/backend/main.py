import argparse
import logging
import sys
from typing import List, Optional

from commands import characters_register, modular_register, products_register, verification_register
from commands.common import LOG_LEVELS
from config import settings
from errors import (
    InvalidWeight, InvariantViolation, RankMismatch, RecursionLimitExceeded, UndeterminedError,
    UnsupportedRootSystem, UsageError,
)
from schemas import ErrorOut, UndeterminedOut

logger = logging.getLogger(__name__)

# Códigos de saída
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDETERMINED = 2
EXIT_INTERNAL = 3


class CLIParser(argparse.ArgumentParser):
    """argparse sai com 2 em erro de uso; aqui erro de uso é o código 1"""

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = CLIParser(prog="modrep", description="Caracteres modulares e produtos tensoriais multiplicity-free")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CLIParser)

    # Sub-comandos
    characters_register(subparsers)  # rootsys, weyl-char, weyl-dim, weight-mult
    modular_register(subparsers)  # jantzen, weyl-factors, simple-char
    products_register(subparsers)  # tensor, mf, mf-char0, classify
    verification_register(subparsers)  # verify
    return parser


def _requested_format(argv: Optional[List[str]]) -> str:
    """--format lido antes da análise completa, para formatar erros de uso"""
    pre = CLIParser(add_help=False)
    pre.add_argument("--format", default=None)
    try:
        known, _ = pre.parse_known_args(argv if argv is not None else sys.argv[1:])
    except UsageError:
        return settings.default_format
    return known.format if known.format in ("json", "text") else settings.default_format


def _emit_error(error: Exception, fmt: str):
    if fmt == "json":
        print(ErrorOut(error=str(error), type=type(error).__name__).model_dump_json(), file=sys.stderr)
    else:
        print(f"erro: {error}", file=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    """Executa a linha de comando e devolve o código de saída"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _emit_error(e, _requested_format(argv))
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    fmt = args.format or settings.default_format
    level = (args.log_level or settings.log_level).upper()
    if level not in LOG_LEVELS:
        _emit_error(UsageError(f"Nível de log inválido: {level}"), fmt)
        return EXIT_USAGE
    logging.basicConfig(
        level=level,
        format='[%(levelname)s] %(message)s',
        stream=sys.stderr,
        force=True,
    )

    try:
        result = args.handler(args)
    except (UsageError, InvalidWeight, UnsupportedRootSystem, RankMismatch) as e:
        logger.warning(f"[CLI] ❌ {args.command}: {e}")
        _emit_error(e, fmt)
        return EXIT_USAGE
    except UndeterminedError as e:
        logger.info(f"[CLI] {args.command} indeterminado: {e.reason}")
        out = UndeterminedOut(reason=e.reason, weights=[list(w) for w in e.weights])
        print(out.model_dump_json() if fmt == "json" else f"Indeterminado: {e.reason}")
        return EXIT_UNDETERMINED if args.strict else EXIT_OK
    except (InvariantViolation, RecursionLimitExceeded) as e:
        logger.error(f"[CLI] ❌ Invariante violada em {args.command}: {e}", exc_info=True)
        _emit_error(e, fmt)
        return EXIT_INTERNAL

    if fmt == "json":
        print(result.model.model_dump_json())
    else:
        print(result.text)
    if args.strict and result.undetermined:
        return EXIT_UNDETERMINED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
