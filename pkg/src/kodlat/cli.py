"""Command-line front end: ``kodlat {roots,embed,family,table,info}``.

Exit codes: 0 success, 1 mismatch in ``table --check``, 2 usage or input
error (malformed JSON, invalid lattice, rejected query). Every JSON document
carries ``"schema_version": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .embed import MODES, PAPER_EMBEDDINGS, RankTwoForm, find_embeddings, verify_paper_embedding
from .families import FAMILY_NAMES, PolarizationData, builtin_family, polarization_block, polarized_lattice
from .lattice import (LatticeError, discriminant_group, lattice_from_expression,
                      lattice_from_json, signature)
from .shortvec import WORKERS_ENV, NormQuery, enumerate_norm_vectors
from .transition import check_table, render_table, theorem_table

SCHEMA_VERSION = 1


class InputError(Exception):
    """Malformed user input; reported with exit code 2."""


def _dump(doc) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, sort_keys=False)


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed {what} JSON at line {e.lineno} column {e.colno}: {e.msg}")


def _load_lattice(args):
    sources = [s for s in (args.lattice, args.named, args.gram) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of LATTICE_JSON, --named or --gram")
    if args.named is not None:
        return lattice_from_expression(args.named)
    if args.gram is not None:
        return lattice_from_json({"gram": _parse_json(args.gram, "--gram")})
    if args.lattice == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.lattice) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.lattice}: {e.strerror}")
    return lattice_from_json(_parse_json(text, "lattice"))


def cmd_roots(args, out):
    lat = _load_lattice(args)
    vecs = enumerate_norm_vectors(NormQuery(lat, args.norm), workers=args.workers)
    if args.format == "json":
        doc = {"command": "roots", "lattice": lat.to_json(), "norm": args.norm,
               "count": len(vecs)}
        if args.list:
            doc["vectors"] = [list(v) for v in vecs]
        out.write(_dump(doc) + "\n")
        return 0
    out.write(f"{len(vecs)}\n")
    if args.list:
        for v in vecs:
            out.write(json.dumps(list(v)) + "\n")
    return 0


def _embed_line(res):
    flag = "" if res.primitive else f"  [NOT PRIMITIVE, index {res.image_index}]"
    return (f"root_count={res.root_count} weight={res.weight} cusp={res.is_cusp} "
            f"v1={res.v1} v2={res.v2} pairs={res.pair_count}{flag}")


def cmd_embed(args, out):
    if (args.paper is None) == (args.gram is None):
        raise InputError("give exactly one of --gram or --paper")
    if args.paper is not None:
        results = [verify_paper_embedding(args.paper)]
        doc = {"command": "embed", "paper": args.paper}
    else:
        form = RankTwoForm.from_gram(_parse_json(args.gram, "--gram"))
        results = find_embeddings(form, args.mode)
        doc = {"command": "embed", "form": form.gram, "mode": args.mode}
    doc["results"] = [r.to_json() for r in results]
    text = _dump(doc) + "\n"
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    if args.format == "json":
        out.write(text)
    elif args.format == "csv":
        out.write("root_count,weight,is_cusp,image_index,pair_count,v1,v2\n")
        for r in results:
            out.write(f"{r.root_count},{r.weight},{r.is_cusp},{r.image_index},{r.pair_count},"
                      f"\"{r.v1}\",\"{r.v2}\"\n")
    else:
        if not results:
            out.write("no embeddings found\n")
        for r in results:
            out.write(_embed_line(r) + "\n")
    return 0


def cmd_family(args, out):
    if (args.name is None) == (args.custom is None):
        raise InputError("give exactly one of NAME or --custom")
    if args.name is not None:
        doc = {"command": "family", **builtin_family(args.name).to_json()}
    else:
        data = _parse_json(args.custom, "--custom")
        try:
            p = PolarizationData(int(data["t"]), int(data["D"]), bool(data["split"]))
        except (KeyError, TypeError, ValueError):
            raise InputError('--custom needs an object {"t": int, "D": int, "split": bool}')
        lat = polarized_lattice(p)
        block = polarization_block(p)
        disc = discriminant_group(lat)
        doc = {"command": "family",
               "custom": {"t": p.t, "D": p.D, "split": p.split},
               "lattice": lat.to_json(),
               "block": block.matrix(),
               "block_det": block.det,
               "det": lat.det,
               "signature": list(signature(lat)),
               "discriminant_group": {"elementary_divisors": list(disc.elementary_divisors),
                                      "order": disc.order}}
    out.write(_dump(doc) + "\n")
    return 0


def cmd_table(args, out):
    reports = theorem_table()
    mismatches = check_table(reports)
    if args.format == "json":
        doc = {"command": "table", "families": list(FAMILY_NAMES),
               "reports": [r.to_json() for r in reports],
               "check": {"ok": not mismatches, "mismatches": mismatches}}
        out.write(_dump(doc) + "\n")
    else:
        out.write(render_table(reports, args.format))
    if args.check:
        if mismatches:
            for m in mismatches:
                sys.stderr.write(f"MISMATCH {m}\n")
            return 1
        sys.stderr.write("table check: all entries agree with the published table\n")
    return 0


def cmd_info(args, out):
    doc = {"command": "info", "version": __version__,
           "commands": ["roots", "embed", "family", "table", "info"],
           "families": list(FAMILY_NAMES),
           "paper_embeddings": sorted(PAPER_EMBEDDINGS),
           "embed_modes": list(MODES),
           "e8_basis": "simple roots a1=(1/2)(1,-1,-1,-1,-1,-1,-1,1), a2=e1+e2, "
                       "a(i)=e(i-1)-e(i-2) for i=3..8",
           "workers_env": WORKERS_ENV}
    if args.format == "json":
        out.write(_dump(doc) + "\n")
    else:
        for k, v in doc.items():
            out.write(f"{k}: {v}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kodlat", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("md", "csv", "json")):
        sp.add_argument("--format", choices=choices, default="md")

    r = sub.add_parser("roots", help="count (and list) vectors of a given norm")
    r.add_argument("lattice", nargs="?", help='lattice JSON file ({"gram": ...}) or - for stdin')
    r.add_argument("--named", help="named lattice expression, e.g. E8 or 2A1+D4")
    r.add_argument("--gram", help="inline Gram matrix as JSON")
    r.add_argument("--norm", type=int, default=-2)
    r.add_argument("--list", action="store_true", help="also print the sorted vectors")
    r.add_argument("--workers", type=int, default=None)
    fmt(r)
    r.set_defaults(func=cmd_roots)

    e = sub.add_parser("embed", help="embed a rank-2 form into E8")
    e.add_argument("--gram", help="2x2 Gram matrix as JSON, e.g. '[[-2,1],[1,-6]]'")
    e.add_argument("--paper", choices=sorted(PAPER_EMBEDDINGS))
    e.add_argument("--mode", choices=MODES, default="first_root_fixed")
    e.add_argument("--json", metavar="OUT", help="also write the JSON document to OUT")
    fmt(e)
    e.set_defaults(func=cmd_embed)

    f = sub.add_parser("family", help="show a built-in family or a custom polarized lattice")
    f.add_argument("name", nargs="?", choices=FAMILY_NAMES)
    f.add_argument("--custom", help='JSON {"t": 1, "D": 7, "split": false}')
    f.set_defaults(func=cmd_family)

    t = sub.add_parser("table", help="regenerate the transition table")
    t.add_argument("--check", action="store_true",
                   help="exit 1 if any entry differs from the published table")
    fmt(t)
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("info", help="package and convention summary")
    fmt(i, ("md", "json"))
    i.set_defaults(func=cmd_info)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, LatticeError) as e:
        kind = "input" if isinstance(e, InputError) else "rejected"
        out.write(_dump({"error": {"kind": kind, "message": str(e)}}) + "\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
