"""Command-line interface: compute, enumerate, verify and export forms.

Exit codes: 0 success; 2 partition not valid for the type; 3 characteristic
obstruction; 4 parse or usage error; 5 verification failure on external
input.  NILCANON_SEED overrides the default sampling seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as _verify
from .canon import (
    canonical_classical,
    canonical_gl,
    canonical_unitary_nilpotent,
    generic_representative,
    symmetrize_with_script,
)
from .errors import (
    BadPartition,
    CharacteristicTwo,
    FieldTooSmall,
    NilcanonError,
    NotGeneric,
    SymmetricFormImpossible,
    TypeSizeMismatch,
)
from .exactfield import format_scalar, galois_field, quadratic_ext, rationals
from .matrixcore import Mat
from .orbitstruct import (
    LieType,
    Partition,
    block_layout,
    classify_orbits,
    enumerate_partitions,
    is_very_even,
)
from .springer import GroupTarget, unipotent_representative

EXIT_OK = 0
EXIT_BAD_PARTITION = 2
EXIT_CHARACTERISTIC = 3
EXIT_PARSE = 4
EXIT_VERIFY = 5


def _parse_field(text):
    """"Q", "F<q>" or "GU<q>"; GU<q> means work over F_{q^2} with the
    twisted Frobenius."""
    text = text.strip()
    if text in ("Q", "q"):
        return "plain", rationals()
    if text.upper().startswith("GU"):
        q = int(text[2:])
        return "unitary", quadratic_ext(q)
    if text.upper().startswith("F"):
        return "plain", galois_field(int(text[1:]))
    raise ValueError(f"cannot parse field {text!r}")


def _field_code(kind, field, q=None):
    if kind == "unitary":
        return f"GU{q}"
    if field == rationals():
        return "Q"
    return f"F{field.order}"


def _matrix_json(m, code, mu, letter, variant, cert):
    return {
        "n": m.rows,
        "field": code,
        "partition": list(mu.parts),
        "type": letter,
        "variant": variant,
        "entries": [[format_scalar(v) for v in row] for row in m.entries],
        "certificate": cert.to_json(),
    }


def _print_plain(out, m, cert=None):
    width = max(len(format_scalar(v)) for row in m.entries for v in row)
    for row in m.entries:
        out.write("  ".join(format_scalar(v).rjust(width) for v in row) + "\n")
    if cert is not None:
        out.write(json.dumps(cert.to_json()) + "\n")


def _print_latex(out, m):
    n = m.cols
    out.write("\\left(\\begin{array}{" + "c" * n + "}\n")
    body = []
    for row in m.entries:
        body.append(" & ".join(format_scalar(v) for v in row))
    out.write(" \\\\\n".join(body))
    out.write("\n\\end{array}\\right)\n")


def _emit(out, fmt, m, payload, cert):
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "latex":
        _print_latex(out, m)
    else:
        _print_plain(out, m, cert)


def _default_seed():
    env = os.environ.get("NILCANON_SEED")
    return int(env) if env else 0


def cmd_form(args, out):
    mu = Partition.parse(args.partition)
    kind, field = _parse_field(args.field)
    if args.type == "A":
        if kind == "unitary":
            q = field.q_subfield_order
            cf = canonical_unitary_nilpotent(mu, q)
            code = _field_code(kind, field, q)
        else:
            cf = canonical_gl(mu, field)
            code = _field_code(kind, field)
    else:
        if kind == "unitary":
            raise ValueError("GU fields apply to type A only; use --field Q or F<q>")
        lt = LieType.for_n(args.type, mu.n)
        cf = canonical_classical(mu, lt, field)
        code = _field_code(kind, field)
    payload = _matrix_json(cf.matrix, code, mu, args.type, cf.variant, cf.certificate)
    _emit(out, args.output, cf.matrix, payload, cf.certificate)
    if args.show_script:
        if kind == "unitary" or field.characteristic == 2:
            out.write("# script unavailable: the elimination schedule needs 2 invertible\n")
        elif args.type != "A":
            out.write("# script shows the type-A symmetrisation stage\n")
        if kind != "unitary" and field.characteristic != 2:
            x = generic_representative(mu, field, _seed(args))
            _, script = symmetrize_with_script(x, block_layout(mu))
            out.write("# elementary conjugations from a generic representative:\n")
            for op in script:
                out.write(f"{op}\n")
    return EXIT_OK


def _seed(args):
    return args.seed if args.seed is not None else _default_seed()


def cmd_unipotent(args, out):
    mu = Partition.parse(args.partition)
    if args.gu is not None:
        target = GroupTarget.gu(args.gu)
        code = f"GU{args.gu}"
        letter = "A"
    elif args.gl is not None:
        target = GroupTarget.gl(args.gl)
        code = f"F{args.gl}"
        letter = "A"
    else:
        if args.type in (None, "A") or args.field is None:
            raise ValueError("unipotent needs --gu q, --gl q, or --type B/C/D with --field F<q>")
        kind, field = _parse_field(args.field)
        if kind == "unitary" or field == rationals():
            raise ValueError("classical unipotent targets need a finite field F<q>")
        target = GroupTarget.classical(LieType.for_n(args.type, mu.n), field.order)
        code = f"F{field.order}"
        letter = args.type
    u = unipotent_representative(mu, target)
    i = Mat.identity(u.field, u.rows)
    cert = _verify.certify(u - i, mu)
    payload = _matrix_json(u, code, mu, letter, "unipotent", cert)
    _emit(out, args.output, u, payload, cert)
    return EXIT_OK


def cmd_enumerate(args, out):
    lt = LieType.for_n(args.type, args.n) if args.type != "A" else LieType("A")
    if args.type == "A":
        pairs = [(mu, 1) for mu in enumerate_partitions(args.n)]
    else:
        pairs = classify_orbits(args.n, lt)
    kind, field = _parse_field(args.field) if args.field else ("plain", rationals())
    rows = []
    for mu, count in pairs:
        entry = {"partition": list(mu.parts), "orbits": count}
        if args.type == "D" and count == 2:
            entry["note"] = "very even: representative covers one of the two orbits"
        try:
            if args.unipotent:
                if field == rationals():
                    raise ValueError("--unipotent needs a finite field (--field F<q>)")
                if args.type == "A":
                    target = GroupTarget.gl(field.order)
                else:
                    target = GroupTarget.classical(lt, field.order)
                m = unipotent_representative(mu, target)
                cert = _verify.certify(m - Mat.identity(m.field, m.rows), mu)
            else:
                if args.type == "A":
                    cf = canonical_gl(mu, field)
                else:
                    cf = canonical_classical(mu, lt, field)
                m, cert = cf.matrix, cf.certificate
            entry["entries"] = [[format_scalar(v) for v in row] for row in m.entries]
            entry["certificate"] = cert.to_json()
        except (SymmetricFormImpossible, CharacteristicTwo) as exc:
            entry["error"] = str(exc)
        rows.append((entry, mu))
    if args.output == "json":
        out.write(json.dumps([e for e, _ in rows], indent=2) + "\n")
    else:
        for entry, mu in rows:
            out.write(f"-- {','.join(str(p) for p in mu.parts)}  (orbits: {entry['orbits']})\n")
            if "error" in entry:
                out.write(f"   {entry['error']}\n")
            else:
                for row in entry["entries"]:
                    out.write("   " + "  ".join(row) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    with (sys.stdin if args.matrix == "-" else open(args.matrix)) as fh:
        data = json.load(fh)
    mu = Partition.parse(args.partition)
    kind, field = _parse_field(data["field"])
    n = data["n"]
    entries = data["entries"]
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError("entries shape disagrees with n")
    m = Mat(field, [[field.parse(t) for t in row] for row in entries])
    claimed = data.get("certificate", {})
    lt_letter = data.get("type", "A")
    lie_m = None
    if lt_letter in ("B", "C", "D"):
        from .canon import structure_matrix

        lie_m = structure_matrix(LieType.for_n(lt_letter, n), field).m
    q = field.q_subfield_order if kind == "unitary" else None
    cert = _verify.certify(m, mu, lie_m=lie_m, lie_type=lt_letter if lie_m is not None else None, q=q)
    report = cert.to_json()
    ok = cert.jordan_type == mu
    for key, want in claimed.items():
        if key in report and report[key] != want:
            ok = False
    out.write(json.dumps(report) + "\n")
    if not ok:
        out.write(f"verification failed: jordan type {cert.jordan_type}, expected {mu}\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_layout(args, out):
    mu = Partition.parse(args.partition)
    lay = block_layout(mu)
    payload = {
        "n": lay.n,
        "weights": list(lay.diagram.weights),
        "nu": list(lay.diagram.nu),
        "l_seq": list(lay.l_seq),
        "k_seq": list(lay.k_seq),
        "very_even": is_very_even(mu),
        "blocks": [
            {
                "chain": b.chain,
                "side": b.side,
                "position": b.position,
                "rows": list(b.row_range),
                "cols": list(b.col_range),
                "shape": list(b.shape),
            }
            for b in lay.blocks
        ],
    }
    if args.output == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"n={lay.n}  weights={payload['weights']}  l={payload['l_seq']}  k={payload['k_seq']}\n")
        for b in payload["blocks"]:
            out.write(
                f"  {b['chain']}-{b['side']}{b['position']}: rows {b['rows'][0]}..{b['rows'][1]}"
                f" x cols {b['cols'][0]}..{b['cols'][1]}  ({b['shape'][0]}x{b['shape'][1]})\n"
            )
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="nilcanon", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("form", help="canonical nilpotent representative")
    f.add_argument("--type", choices=("A", "B", "C", "D"), default="A")
    f.add_argument("--partition", required=True)
    f.add_argument("--field", default="Q")
    f.add_argument("--output", choices=("plain", "json", "latex"), default="plain")
    f.add_argument("--seed", type=int, default=None)
    f.add_argument("--show-script", action="store_true")

    u = sub.add_parser("unipotent", help="canonical unipotent representative")
    u.add_argument("--partition", required=True)
    u.add_argument("--gu", type=int, default=None, metavar="Q")
    u.add_argument("--gl", type=int, default=None, metavar="Q")
    u.add_argument("--type", choices=("A", "B", "C", "D"), default=None)
    u.add_argument("--field", default=None)
    u.add_argument("--output", choices=("plain", "json", "latex"), default="plain")

    e = sub.add_parser("enumerate", help="all orbits in one dimension")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--type", choices=("A", "B", "C", "D"), default="A")
    e.add_argument("--field", default="Q")
    e.add_argument("--unipotent", action="store_true")
    e.add_argument("--output", choices=("plain", "json"), default="plain")

    v = sub.add_parser("verify", help="run the oracle on an external matrix")
    v.add_argument("--matrix", required=True, help="JSON file path, or - for stdin")
    v.add_argument("--partition", required=True)

    l = sub.add_parser("layout", help="block structure and weighted diagram")
    l.add_argument("--partition", required=True)
    l.add_argument("--output", choices=("plain", "json"), default="plain")
    return p


_COMMANDS = {
    "form": cmd_form,
    "unipotent": cmd_unipotent,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "layout": cmd_layout,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except (BadPartition, TypeSizeMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_PARTITION
    except (SymmetricFormImpossible, CharacteristicTwo) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CHARACTERISTIC
    except (FieldTooSmall, NotGeneric, NilcanonError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
