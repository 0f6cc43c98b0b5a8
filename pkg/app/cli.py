#!/usr/bin/env python3
"""CLI del perímetro no local de poliominós.
Uso:
  python -m app.cli perimeter --lambda 2 --input forma.txt        # Per_λ de un poliominó
  python -m app.cli reduce --lambda 2 --input forma.txt           # Traza del algoritmo de reducción
  python -m app.cli minimizers --lambda 2 --n-max 30              # Minimizadores de 𝓜ₙ
  python -m app.cli crossover --n-max 30                          # Cruces de forma en (1.8, 20]
  python -m app.cli verify --lambda 2.5 --n 6 [--seed 0]          # Verificación exhaustiva
  python -m app.cli landscape --lambda 2.4 --h 0.41 --n-max 250   # Paisaje ΔH(n)
  python -m app.cli critlen --h 0.41 --lambda-min 2.1 --lambda-max 4 --steps 20
  python -m app.cli d2 --h 0.4                                    # Derivada segunda de f
  python -m app.cli diagnostics --lambda 2 --a 2 --b 8 --l 4      # Diagnósticos de positividad
  python -m app.cli lambda-c                                      # Cruce 𝓠₂ / 𝓡_{1,4}

Códigos de salida: 0 éxito, 1 error de dominio o de E/S, 2 violación verificada.
Los datos van a stdout (o a --out); los mensajes de estado y logs a stderr.
"""
import argparse
import io
import json
import logging
import sys
import uuid
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from .catalog.diagnostics import positivity_diagnostics
from .catalog.minimizers import argmin_shape, crossover_points, lambda_c, minimal_specs
from .core.config import config
from .core.errors import NoTwoShapes, PolyominoError, VerificationError
from .core.logging import compute_context, configure_logging, request_id_var
from .core.settings import settings
from .geometry.io import read_polyomino
from .geometry.lattice import classify
from .ising.landscape import ModelParams, critical_surface, d2_table, landscape
from .oracle.enumeration import verify_reduction_consistency, verify_theorem
from .perimeter.nonlocal_perimeter import classical_perimeter, perimeter, perimeter_direct
from .reduction.algorithms import main_algorithm
from .special.zeta import get_engine

logger = logging.getLogger(__name__)


def _lambda(value: str) -> float:
    lam = float(value)
    if not lam > 1.0:
        raise argparse.ArgumentTypeError(f"λ debe ser > 1 (λ={value})")
    return lam


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"se esperaba un entero ≥ 1 ({value})")
    return n


def _status(ok: bool, message: str):
    print(f"{'✓' if ok else '✗'} {message}", file=sys.stderr)


def _emit(
    args,
    rows: Optional[List[Dict[str, Any]]] = None,
    document: Optional[Dict[str, Any]] = None,
    default_format: Optional[str] = None,
):
    """CSV versionado (12 cifras significativas) o JSON, a stdout o a --out."""
    fmt = args.format or default_format
    if fmt == "csv" and rows is not None:
        buffer = io.StringIO()
        buffer.write(f"# schema_version={settings.CSV_SCHEMA_VERSION}\n")
        pd.DataFrame(rows).to_csv(
            buffer, index=False, float_format=f"%.{settings.FLOAT_DIGITS}g", lineterminator="\n"
        )
        text = buffer.getvalue()
    else:
        payload = document if document is not None else {"rows": rows}
        text = json.dumps(payload, ensure_ascii=False, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_perimeter(args) -> int:
    p = read_polyomino(args.input)
    engine = get_engine(args.lam, args.tolerance)
    breakdown = perimeter_direct(p, engine, args.window) if args.direct else perimeter(p, engine)
    row = {
        **breakdown.to_dict(),
        "classical": classical_perimeter(p),
        "area": p.area,
        "shape_class": classify(p).value,
    }
    _emit(args, [row], row)
    _status(True, f"Per_λ={breakdown.total:.12g} (λ={args.lam:g}, n={p.area})")
    return 0


def cmd_reduce(args) -> int:
    p = read_polyomino(args.input)
    trace = main_algorithm(p, get_engine(args.lam, args.tolerance))
    rows = [{"step": "initial", "perimeter": trace.initial_perimeter, "bound": None}]
    rows += [{"step": s.label, "perimeter": s.perimeter, "bound": s.bound} for s in trace.steps]
    _emit(args, rows, trace.to_dict())
    _status(True, f"{trace.terminal_class.value}: ΔPer={trace.decrease:.12g} en {len(trace.steps)} paso(s)")
    return 0


def cmd_minimizers(args) -> int:
    engine = get_engine(args.lam, args.tolerance)
    rows = []
    for n in range(1, args.n_max + 1):
        entries = argmin_shape(n, engine)
        rows.append({
            "n": n,
            "shapes": "|".join(e.spec.label for e in entries),
            "per_lambda": entries[0].nonlocal_perimeter,
            "classical": entries[0].classical_perimeter,
        })
    _emit(args, rows)
    _status(True, f"{len(rows)} área(s) a λ={args.lam:g}")
    return 0


def cmd_crossover(args) -> int:
    if args.n:
        # NoTwoShapes se propaga: código 1
        points = crossover_points(args.n, tolerance=args.tolerance)
        record = {
            "n": args.n,
            "shapes": [s.label for s in minimal_specs(args.n)],
            "lambda_star": points[0].lambda_star if points else None,
        }
        _emit(args, [{**record, "shapes": "|".join(record["shapes"])}], record, default_format="json")
        _status(bool(points), f"n={args.n}: λ*={record['lambda_star']}")
        return 0 if points else 1
    rows = []
    for n in range(1, args.n_max + 1):
        try:
            points = crossover_points(n, tolerance=args.tolerance)
        except NoTwoShapes:
            continue
        rows.extend(c.to_dict() for c in points)
    _emit(args, rows, default_format="csv")
    _status(True, f"{len(rows)} cruce(s)")
    return 0


def cmd_verify(args) -> int:
    engine = get_engine(args.lam, args.tolerance)
    report = verify_theorem(args.n, engine, samples=args.samples, seed=args.seed)
    document = report.to_dict()
    ok = True
    if args.reduction:
        consistency = verify_reduction_consistency(args.n, engine)
        document["reduction"] = consistency.to_dict()
        ok = consistency.ok
    _emit(args, None, document)
    _status(ok, f"n={args.n}, λ={args.lam:g}: {report.count_connected} poliominós conexos verificados")
    return 0 if ok else 2


def cmd_landscape(args) -> int:
    result = landscape(ModelParams(lam=args.lam, h=args.h), args.n_max)
    _emit(args, [p.to_dict() for p in result.points], result.to_dict())
    _status(True, f"n_c={result.n_c}, l_c={result.critical_length}")
    return 0


def cmd_critlen(args) -> int:
    lambdas = np.linspace(args.lambda_min, args.lambda_max, args.steps).tolist()
    rows = critical_surface(args.h, lambdas, args.l_max)
    _emit(args, rows)
    _status(True, f"{len(rows)} valor(es) de λ")
    return 0


def cmd_d2(args) -> int:
    rows = d2_table(args.h, args.lambdas, args.l_max)
    _emit(args, rows)
    _status(True, f"{len(rows)} fila(s)")
    return 0


def cmd_diagnostics(args) -> int:
    engine = get_engine(args.lam, args.tolerance)
    report = positivity_diagnostics(args.a, args.b, args.l, args.k1, args.k2, engine=engine)
    rows = [{"name": k, "value": v, "violated": k in report.violations} for k, v in report.values.items()]
    _emit(args, rows, report.to_dict())
    _status(report.ok, f"modo {report.mode}: {len(report.violations)} violación(es)")
    return 0 if report.ok else 2


def cmd_lambda_c(args) -> int:
    root = lambda_c()
    _emit(args, None, {"lambda_c": root, "shapes": ["Q2", "R1,4"]})
    _status(root is not None, f"λ_c={root}")
    return 0 if root is not None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m app.cli", description="Perímetro no local de poliominós")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="fichero de salida (por defecto stdout)")
    common.add_argument("--tolerance", type=float, default=None, help="tolerancia de ζ (anula ZETA_TOLERANCE)")
    with_lambda = argparse.ArgumentParser(add_help=False, parents=[common])
    with_lambda.add_argument("--lambda", dest="lam", type=_lambda, default=config.default_lambda)

    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, default: Optional[str]):
        # Cada subcomando tiene su propia acción: los valores por defecto no se comparten
        p.add_argument("--format", choices=["csv", "json"], default=default)

    p = sub.add_parser("perimeter", parents=[with_lambda], help="Per_λ de un poliominó")
    p.add_argument("--input", required=True)
    p.add_argument("--direct", action="store_true", help="suma directa truncada")
    p.add_argument("--window", type=_positive_int, default=settings.DIRECT_WINDOW)
    add_format(p, "json")
    p.set_defaults(handler=cmd_perimeter)

    p = sub.add_parser("reduce", parents=[with_lambda], help="algoritmo de reducción")
    p.add_argument("--input", required=True)
    add_format(p, "json")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("minimizers", parents=[with_lambda], help="minimizadores de 𝓜ₙ")
    p.add_argument("--n-max", type=_positive_int, default=config.minimizers_n_max)
    add_format(p, "csv")
    p.set_defaults(handler=cmd_minimizers)

    p = sub.add_parser("crossover", parents=[common], help="cruces de forma")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--n-max", type=_positive_int, default=config.minimizers_n_max)
    add_format(p, None)
    p.set_defaults(handler=cmd_crossover)

    p = sub.add_parser("verify", parents=[with_lambda], help="verificación exhaustiva del teorema")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=settings.DISCONNECTED_SAMPLES)
    p.add_argument("--reduction", action="store_true", help="verifica también la reducción estricta")
    add_format(p, "json")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("landscape", parents=[with_lambda], help="paisaje ΔH(n)")
    p.add_argument("--h", type=float, default=config.default_h)
    p.add_argument("--n-max", type=_positive_int, default=config.landscape_n_max)
    add_format(p, "csv")
    p.set_defaults(handler=cmd_landscape)

    lam_min, lam_max = config.critlen_lambdas
    p = sub.add_parser("critlen", parents=[common], help="superficie de longitud crítica")
    p.add_argument("--h", type=float, default=config.default_h)
    p.add_argument("--lambda-min", type=_lambda, default=lam_min)
    p.add_argument("--lambda-max", type=_lambda, default=lam_max)
    p.add_argument("--steps", type=_positive_int, default=config.critlen_steps)
    p.add_argument("--l-max", type=_positive_int, default=config.critlen_l_max)
    add_format(p, "csv")
    p.set_defaults(handler=cmd_critlen)

    p = sub.add_parser("d2", parents=[common], help="derivada segunda de f")
    p.add_argument("--h", type=float, default=0.4)
    p.add_argument("--lambdas", type=_lambda, nargs="+", default=config.d2_lambdas)
    p.add_argument("--l-max", type=_positive_int, default=config.d2_l_max)
    add_format(p, "csv")
    p.set_defaults(handler=cmd_d2)

    p = sub.add_parser("diagnostics", parents=[with_lambda], help="diagnósticos de positividad")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--b", type=_positive_int, required=True)
    p.add_argument("--l", type=_positive_int, required=True)
    p.add_argument("--k1", type=int, default=0)
    p.add_argument("--k2", type=int, default=None)
    add_format(p, "json")
    p.set_defaults(handler=cmd_diagnostics)

    p = sub.add_parser("lambda-c", parents=[common], help="cruce 𝓠₂ / 𝓡_{1,4}")
    add_format(p, "json")
    p.set_defaults(handler=cmd_lambda_c)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(json_mode=settings.LOG_JSON, level=settings.LOG_LEVEL)
    request_id_var.set(uuid.uuid4().hex)
    try:
        with compute_context(operation=args.command, n=getattr(args, "n", None), **{"lambda": getattr(args, "lam", None)}):
            return args.handler(args)
    except VerificationError as e:
        logger.error(f"[CLI] {args.command}: {e}")
        _status(False, f"Violación: {e}")
        return 2
    except (PolyominoError, OSError, ValueError) as e:
        logger.error(f"[CLI] {args.command}: {e}")
        _status(False, f"Error: {e}")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
