"""Command-line front end.

One binary, subcommand style.  Every command writes deterministic output for
fixed inputs: JSON with sorted keys, or csv/md tables with a fixed column
order.  Numeric leaves are emitted as decimal strings so arbitrarily large
integers and exact rationals survive any downstream parser.

Exit codes: 0 on success, 1 when a verification-style command finds a
failure, 2 on usage or file errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from genera import acceptance, cells, divis, genus, hodge, jacobi
from genera._data import resolve_data
from genera.values import value_str


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _emit_json(obj, stream) -> None:
    json.dump(obj, stream, indent=2, sort_keys=True)
    stream.write("\n")


def _str_leaves(x):
    """Copy a report structure with every numeric leaf as a decimal string."""
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)) or x is None:
        return value_str(x) if x is not None else None
    if isinstance(x, (list, tuple)):
        return [_str_leaves(v) for v in x]
    if isinstance(x, dict):
        return {k: _str_leaves(v) for k, v in x.items()}
    return x


def _print_rows(rows, fmt: str, stream) -> None:
    """Render a list of uniform string-valued dicts as json, csv, or md."""
    if fmt == "json":
        _emit_json(rows, stream)
        return
    header = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
        return
    # markdown
    stream.write("| " + " | ".join(header) + " |\n")
    stream.write("|" + "|".join(" --- " for _ in header) + "|\n")
    for row in rows:
        stream.write("| " + " | ".join(row[h] for h in header) + " |\n")


def _load_json_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_jf_gen(args, out) -> int:
    f = jacobi.generator(args.name, args.qmax)
    _emit_json(f.to_obj(), out)
    return 0


def _cmd_jf_check(args, out) -> int:
    f = jacobi.JacobiForm.from_obj(_load_json_file(args.file))
    rep = jacobi.check_elliptic_law(f, args.lam)
    _emit_json(
        {
            "lambda": value_str(rep.lam),
            "pairs_checked": value_str(rep.pairs_checked),
            "vacuous": rep.vacuous,
            "ok": rep.ok,
            "violations": _str_leaves(list(rep.violations)),
        },
        out,
    )
    return 0 if rep.ok else 1


def _cmd_genus_compute(args, out) -> int:
    m = genus.ChernData.load(resolve_data(args.chern))
    f = genus.elliptic_genus(m, nvars=args.nvars, qmax=args.qmax)
    _emit_json(f.to_obj(), out)
    return 0


def _cmd_genus_euler(args, out) -> int:
    m = genus.ChernData.load(resolve_data(args.chern))
    out.write(f"{genus.euler_number(m)}\n")
    return 0


def _cmd_divis_table(args, out) -> int:
    _print_rows(divis.table_rows(args.kmax), args.format, out)
    return 0


def _cmd_divis_verify_clas(args, out) -> int:
    rows = divis.verify_clas_rows(args.kmax)
    _print_rows(rows, args.format, out)
    return 0 if all(row["agree"] == "yes" for row in rows) else 1


def _cmd_divis_verdict(args, out) -> int:
    v = divis.euler_verdict(args.structure, args.k, args.euler)
    _emit_json(v.to_obj(), out)
    return 0 if v.ok else 1


def _cmd_cells_homotopy(args, out) -> int:
    cplx = cells.complex_load(resolve_data(args.complex))
    table = cells.table_load(resolve_data(args.table))
    group = cells.cofiber_homotopy(cplx, table, args.deg)
    _emit_json(group.to_obj(), out)
    return 0


def _cmd_cells_order(args, out) -> int:
    table = cells.table_load(resolve_data(args.table))
    spec = cells.parse_element_spec(args.element)
    order = cells.element_order(table, spec)
    _emit_json(
        {"table": args.table, "element": args.element, "order": value_str(order)},
        out,
    )
    return 0


def _cmd_cells_dsu_easy(args, out) -> int:
    rows = []
    for k in range(1, args.kmax + 1):
        engine = cells.dsu_easy(k)
        closed = divis.d_su_easy_closed(k)
        rows.append(
            {
                "k": str(k),
                "engine": value_str(engine),
                "closed_form": value_str(closed),
                "agree": "yes" if engine == closed else "no",
            }
        )
    _print_rows(rows, args.format, out)
    return 0 if all(row["agree"] == "yes" for row in rows) else 1


def _cmd_hk_solve(args, out) -> int:
    system = hodge.hk_match(args.k)
    relations = [f"{eq.normalized()} = 0" for eq in system.equations]
    if args.k == 2:
        derived = system.eliminate("Euler")
    else:
        derived = system.eliminate("A", indices=(1, 2))
    for eq in derived:
        line = f"{eq.normalized()} = 0"
        if line not in relations:
            relations.append(line)
    _emit_json(
        {
            "k": str(args.k),
            "relations": relations,
            "divisor": str(hodge.hk_divisibility(args.k)),
        },
        out,
    )
    return 0


def _cmd_selftest(args, out) -> int:
    return 0 if acceptance.run_all(out) else 1


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=("json", "csv", "md"),
        default="json",
        help="table output format (default json)",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="genera",
        description="Exact Jacobi-form series, elliptic genera, divisibility "
        "constants, cell-complex homotopy windows, and Hodge-number systems.",
    )
    p.add_argument(
        "--data-dir",
        help="directory searched for named tables and fixtures "
        "(same effect as GENERA_DATA_DIR)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    jf = sub.add_parser("jf", help="Jacobi form generators and checks")
    jfsub = jf.add_subparsers(dest="subcommand", required=True)
    gen = jfsub.add_parser("gen", help="print a ring generator as JSON")
    gen.add_argument("name", choices=jacobi.GENERATOR_NAMES)
    gen.add_argument("--qmax", type=_nonneg, default=10)
    gen.set_defaults(func=_cmd_jf_gen)
    chk = jfsub.add_parser("check", help="verify the elliptic transformation law")
    chk.add_argument("file", help="JSON file as written by 'jf gen' or 'genus compute'")
    chk.add_argument("--lambda", dest="lam", type=int, default=1)
    chk.set_defaults(func=_cmd_jf_check)

    gn = sub.add_parser("genus", help="elliptic genus from Chern numbers")
    gnsub = gn.add_subparsers(dest="subcommand", required=True)
    comp = gnsub.add_parser("compute", help="print the genus as JSON")
    comp.add_argument("--chern", required=True, help="Chern-number file or fixture name")
    comp.add_argument("--nvars", type=_positive, default=1)
    comp.add_argument("--qmax", type=_nonneg, default=10)
    comp.set_defaults(func=_cmd_genus_compute)
    eul = gnsub.add_parser("euler", help="print the Euler number")
    eul.add_argument("--chern", required=True, help="Chern-number file or fixture name")
    eul.set_defaults(func=_cmd_genus_euler)

    dv = sub.add_parser("divis", help="divisibility constants")
    dvsub = dv.add_subparsers(dest="subcommand", required=True)
    tab = dvsub.add_parser("table", help="print all four families for k = 1..kmax")
    tab.add_argument("--kmax", type=_positive, required=True)
    _add_format(tab)
    tab.set_defaults(func=_cmd_divis_table)
    ver = dvsub.add_parser(
        "verify-clas", help="closed form vs gcd-of-basis oracle for d_clas"
    )
    ver.add_argument("--kmax", type=_positive, required=True)
    _add_format(ver)
    ver.set_defaults(func=_cmd_divis_verify_clas)
    vd = dvsub.add_parser("verdict", help="does a divisibility constant allow an Euler number")
    vd.add_argument("--structure", choices=("SU", "Sp", "SO"), required=True)
    vd.add_argument("--k", type=_positive, required=True)
    vd.add_argument("--euler", type=int, required=True)
    vd.set_defaults(func=_cmd_divis_verdict)

    cl = sub.add_parser("cells", help="cell complexes over coefficient tables")
    clsub = cl.add_subparsers(dest="subcommand", required=True)
    hom = clsub.add_parser("homotopy", help="homotopy of a cofiber in one degree")
    hom.add_argument("--complex", required=True, help="cell-complex file or name")
    hom.add_argument("--table", required=True, help="coefficient-table file or name")
    hom.add_argument("--deg", type=int, required=True)
    hom.set_defaults(func=_cmd_cells_homotopy)
    orde = clsub.add_parser("order", help="order of an element of a table")
    orde.add_argument("--table", required=True)
    orde.add_argument(
        "--element", required=True, help="comma-separated terms, e.g. 'eta' or '8*nu'"
    )
    orde.set_defaults(func=_cmd_cells_order)
    dse = clsub.add_parser(
        "dsu-easy", help="cofiber-engine SU estimates vs the closed form"
    )
    dse.add_argument("--kmax", type=_positive, required=True)
    _add_format(dse)
    dse.set_defaults(func=_cmd_cells_dsu_easy)

    hk = sub.add_parser("hk", help="hyperkahler Hodge-number systems")
    hksub = hk.add_subparsers(dest="subcommand", required=True)
    slv = hksub.add_parser("solve", help="match equations, derived relation, Euler divisor")
    slv.add_argument("--k", type=int, choices=(2, 3), required=True)
    slv.set_defaults(func=_cmd_hk_solve)

    st = sub.add_parser("selftest", help="run the full acceptance suite")
    st.set_defaults(func=_cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    if args.data_dir:
        os.environ["GENERA_DATA_DIR"] = args.data_dir
    try:
        return args.func(args, sys.stdout)
    except (
        FileNotFoundError,
        json.JSONDecodeError,
        cells.TableError,
        cells.WindowError,
        cells.ProductError,
        genus.ChernDataError,
        hodge.HodgeError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
