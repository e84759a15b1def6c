"""Argumentos e formatação compartilhados pelos sub-comandos"""

import argparse
from dataclasses import dataclass
from typing import List, Sequence

from pydantic import BaseModel

from errors import InvalidWeight
from rootsys import RootSystem, Weight, build_root_system, parse_type


@dataclass
class CommandResult:
    """Modelo para JSON, texto para o terminal e se o resultado ficou indeterminado"""

    model: BaseModel
    text: str
    undetermined: bool = False


def parse_weight(text: str) -> Weight:
    """'a,b,...' -> tupla de inteiros"""
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InvalidWeight(f"Peso inválido: {text!r} (use inteiros separados por vírgula)")


LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def common_parent() -> argparse.ArgumentParser:
    """Opções aceitas por todos os sub-comandos"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=["json", "text"], default=None, help="Formato de saída")
    parent.add_argument("--strict", action="store_true", help="Resultado indeterminado sai com código 2")
    parent.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None, help="Nível de log (stderr)")
    return parent


def add_type_args(parser: argparse.ArgumentParser):
    parser.add_argument("--type", dest="type_label", required=True, help="A<n>, A, B2 ou C2")
    parser.add_argument("--rank", type=int, default=None, help="Posto (opcional se embutido no tipo)")


def root_system_from(args) -> RootSystem:
    type_label, rank = parse_type(args.type_label, args.rank)
    return build_root_system(type_label, rank)


def fmt_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def fmt_pairs(pairs, prefix: str = "L") -> List[str]:
    return [f"{prefix}{fmt_weight(w)} x{m}" for w, m in pairs]
