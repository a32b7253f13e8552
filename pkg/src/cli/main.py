#!/usr/bin/env python3
"""
CLI do cfnet: séries geradoras de redes de séries de Chen-Fliess.

    python -m src.cli.main coeffs   --input rede.json --degree 4 [--outputs 1,2] [--trace "x0 x1"]
    python -m src.cli.main compose  --input cascata.json --degree 4
    python -m src.cli.main simulate --input rede.json --T 0.5 --v 0.1 --steps 1000
    python -m src.cli.main verify   --input rede.json --T 0.5 --v 0.1 --Ns 1,2,3,4
    python -m src.cli.main selftest [--list] [--checks composition lie_chain]

Códigos de saída: 0 sucesso, 1 erro de validação/entrada, 2 invariante interno
violado (inclui falhas do selftest).
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from src.core.core import OUTPUT_FORMATS, Config, __version__, configure_logging
from src.core.exceptions import CFNetError, ConfigurationError, exit_code_for, log_error_with_context
from src.jobs import JOBS
from src.jobs.selftest import list_checks
from src.utils.naming_conventions import NamingConventions

logger = logging.getLogger("cfnet.cli")


def _int_list(text: str) -> List[int]:
    try:
        return NamingConventions.parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _float_list(text: str) -> List[float]:
    try:
        return NamingConventions.parse_float_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfnet",
        description="Séries geradoras de redes de séries de Chen-Fliess.",
    )
    parser.add_argument("--version", action="version", version=f"cfnet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--input", required=True, help="Documento JSON da rede")
            p.add_argument("--degree", type=int, default=None, help="Grau de truncamento N")
        p.add_argument("--output", choices=OUTPUT_FORMATS, default=None, help="Formato da tabela")

    def numeric(p: argparse.ArgumentParser) -> None:
        p.add_argument("--T", type=float, default=1.0, help="Horizonte de simulação")
        p.add_argument("--v", type=_float_list, default=None, help="Entradas constantes v1,v2,...")
        p.add_argument("--steps", type=int, default=None, help="Passos do integrador")

    p = sub.add_parser("coeffs", help="Tabela de coeficientes da série gerada")
    common(p)
    p.add_argument("--outputs", type=_int_list, default=None, help="Saídas k1,k2,... (padrão: todas)")
    p.add_argument("--trace", default=None, help="Palavra cuja cadeia de derivadas de Lie é exibida")

    p = sub.add_parser("compose", help="Produto de composição de uma cascata")
    common(p)

    p = sub.add_parser("simulate", help="Trajetórias da rede (CSV t, y_1..y_m)")
    common(p)
    numeric(p)

    p = sub.add_parser("verify", help="Erro de truncamento por N")
    common(p)
    numeric(p)
    p.add_argument("--Ns", type=_int_list, default=None, help="Graus N1,N2,...")

    p = sub.add_parser("selftest", help="Bateria de aceitação embutida")
    common(p, needs_input=False)
    p.add_argument("--list", action="store_true", help="Apenas lista as verificações disponíveis")
    p.add_argument("--checks", nargs="+", default=None, help="Subconjunto de verificações")
    return parser


def _job_arguments(args: argparse.Namespace) -> dict:
    names = ("input", "degree", "outputs", "trace", "T", "v", "steps", "Ns", "checks")
    return {name: getattr(args, name) for name in names if hasattr(args, name)}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = Config()
        configure_logging(config)
        if args.command == "selftest" and args.list:
            print("Verificações disponíveis:")
            for line in list_checks():
                print(f"  - {line}")
            return 0
        if getattr(args, "degree", None) is not None and args.degree < 0:
            raise ConfigurationError("--degree must be >= 0", context={"degree": args.degree})

        job = JOBS[args.command](config=config)
        table = job.run(output_format=args.output, stream=sys.stdout, **_job_arguments(args))
        if args.command == "selftest" and (table["status"] == "FAIL").any():
            logger.error("Selftest com falhas")
            return 2
        return 0
    except (CFNetError, OSError) as error:
        log_error_with_context(error, logger, {"command": args.command})
        print(f"cfnet: error: {error}", file=sys.stderr)
        return exit_code_for(error)


if __name__ == "__main__":
    sys.exit(main())
